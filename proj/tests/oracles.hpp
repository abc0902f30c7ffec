// Independent brute-force oracles used only by the tests.  These deliberately
// avoid the lattice shortcuts of the library: diagrams are enumerated over
// raw start assignments, edges over the unrestricted difference sets, and
// fibers by literally refilling the removed columns.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "orbitgraph/orbit_graph.hpp"
#include "orbitgraph/partition.hpp"
#include "orbitgraph/signed_diagram.hpp"

namespace oracles {

using namespace orbitgraph;

// Can the rows of the diagram be tiled by family primitives?  Decided per
// row length from the start counts: singles where the family allows single
// rows, otherwise opposite-start or same-start pairs.
inline bool tileable(PairType type, const SignedDiagram& t) {
  auto mults = t.shape().multiplicities();
  const PiVector pi = pi_vector(t);
  for (size_t r = 0; r < mults.size(); ++r) {
    const auto [len, m] = mults[r];
    const int plus = pi[r], minus = m - pi[r];
    const bool odd = len % 2 != 0;
    switch (type) {
      case PairType::AIII:
        break;
      case PairType::BDI:
        if (!odd && plus != minus) return false;
        break;
      case PairType::CI:
        if (odd && plus != minus) return false;
        break;
      case PairType::CII:
        if (odd && (plus % 2 != 0 || minus % 2 != 0)) return false;
        if (!odd && plus != minus) return false;
        break;
      case PairType::DIII:
        if (!odd && (plus % 2 != 0 || minus % 2 != 0)) return false;
        if (odd && plus != minus) return false;
        break;
    }
  }
  return true;
}

// All diagrams of the shape and signature by trying every start assignment.
inline std::vector<SignedDiagram> enumerate_syd_bruteforce(
    PairType type, const Partition& lambda, int p, int q) {
  std::set<SignedDiagram> found;
  const int l = lambda.length();
  for (int mask = 0; mask < (1 << l); ++mask) {
    std::vector<Sign> starts(l);
    for (int j = 0; j < l; ++j) starts[j] = (mask & (1 << j)) ? +1 : -1;
    SignedDiagram t(lambda, starts);
    if (t.plus_boxes() != p || t.minus_boxes() != q) continue;
    if (!tileable(type, t)) continue;
    found.insert(t);
  }
  return {found.begin(), found.end()};
}

// The unrestricted difference sets (superset of the true edge vectors): all
// +-(e_r - e_{r+1}) plus +-e_k, doubled for the families with doubled edges.
// Restricting them by row-length parity must not change the graph.
inline std::vector<std::vector<int>> superset_edge_vectors(
    PairType type, const Partition& lambda) {
  const int k = static_cast<int>(lambda.multiplicities().size());
  const int step = (type == PairType::CII || type == PairType::DIII) ? 2 : 1;
  std::vector<std::vector<int>> out;
  for (int r = 0; r + 1 < k; ++r) {
    std::vector<int> v(k, 0);
    v[r] = step;
    v[r + 1] = -step;
    out.push_back(std::move(v));
  }
  if (k > 0) {
    std::vector<int> v(k, 0);
    v[k - 1] = step;
    out.push_back(std::move(v));
  }
  return out;
}

// Edge list over the superset vectors, as sorted index pairs.
inline std::vector<std::pair<int, int>> superset_edges(const OrbitGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& d : superset_edge_vectors(g.type, g.shape))
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
      for (int sgn : {+1, -1}) {
        PiVector target = g.vertices[i];
        for (size_t r = 0; r < d.size(); ++r) target[r] += sgn * d[r];
        int j = g.vertex_index(target);
        if (j > i) out.emplace_back(i, j);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Literal refill oracle for the induction fiber: all diagrams of shape
// lambda (same family, signature extended by the removed pair) whose
// restriction along the removed columns gives back t_small.  Removing the
// two leftmost boxes of a row keeps its start sign (the third box repeats
// the first); the removal boundary h never splits an equal-length row group
// (lambda_h - lambda_{h+1} >= 2), so restricting the first h sorted rows is
// canonical.
inline std::vector<SignedDiagram> ind_set_bruteforce(
    PairType type, const SignedDiagram& t_small, const Partition& lambda,
    int h) {
  const int p = t_small.plus_boxes() + h;
  const int q = t_small.minus_boxes() + h;
  const int l = lambda.length();
  std::set<SignedDiagram> found;
  for (int mask = 0; mask < (1 << l); ++mask) {
    std::vector<Sign> starts(l);
    for (int j = 0; j < l; ++j) starts[j] = (mask & (1 << j)) ? +1 : -1;
    SignedDiagram big(lambda, starts);
    if (found.count(big)) continue;
    if (big.plus_boxes() != p || big.minus_boxes() != q) continue;
    if (!tileable(type, big)) continue;
    std::vector<std::pair<int, Sign>> restricted;
    bool ok = true;
    const auto& rows = big.rows();
    for (int j = 0; j < static_cast<int>(rows.size()); ++j) {
      auto [len, start] = rows[j];
      if (j < h) {
        if (len < 2) {
          ok = false;
          break;
        }
        if (len > 2) restricted.emplace_back(len - 2, start);
      } else {
        restricted.emplace_back(len, start);
      }
    }
    if (ok && SignedDiagram(restricted) == t_small) found.insert(big);
  }
  return {found.begin(), found.end()};
}

}  // namespace oracles
