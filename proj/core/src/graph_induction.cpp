#include "orbitgraph/graph_induction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "orbitgraph/orbit_graph.hpp"

namespace orbitgraph {

namespace {

// How pi-vectors of lambda project onto pi-vectors of
// lambda' = remove_column_pair(lambda, h).  The removed pair ends the
// distinct-length block j (1-based); the block either stays distinct
// (identity), merges with the next block (coordinates j, j+1 add), or
// vanishes (last block of length 2).
struct Projection {
  enum class Kind { identity, merge, drop_last } kind;
  int j = 0;  // 1-based block index for merge
};

Projection projection_for(const Partition& lambda, int h) {
  const auto mults = lambda.multiplicities();
  const int k = static_cast<int>(mults.size());
  int cum = 0, j = 0;
  for (int r = 0; r < k; ++r) {
    cum += mults[r].second;
    if (cum == h) {
      j = r + 1;
      break;
    }
    if (cum > h)
      throw std::logic_error("column pair does not end a length block");
  }
  if (j == 0) throw std::logic_error("removal height beyond the diagram");
  const int next_len = j < k ? mults[j].first : 0;
  if (mults[j - 1].first - 2 > next_len)
    return {Projection::Kind::identity, j};
  if (j == k) return {Projection::Kind::drop_last, j};
  return {Projection::Kind::merge, j};
}

PiVector project(const Projection& pr, const PiVector& v) {
  switch (pr.kind) {
    case Projection::Kind::identity:
      return v;
    case Projection::Kind::drop_last:
      return PiVector(v.begin(), v.end() - 1);
    case Projection::Kind::merge: {
      PiVector out;
      for (size_t r = 0; r < v.size(); ++r) {
        if (static_cast<int>(r) == pr.j) {
          out.back() += v[r];
        } else {
          out.push_back(v[r]);
        }
      }
      return out;
    }
  }
  return {};
}

int find_height(const Partition& lambda, const Partition& small_shape) {
  const int diff = lambda.n() - small_shape.n();
  if (diff <= 0 || diff % 2 != 0)
    throw std::invalid_argument(
        "shape is not a column-pair extension of the smaller diagram");
  return diff / 2;
}

}  // namespace

std::vector<SignedDiagram> ind_set(PairType type, const SignedDiagram& t_small,
                                   const Partition& lambda) {
  const int h = find_height(lambda, t_small.shape());
  if ((type == PairType::CII || type == PairType::DIII) && h % 2 != 0)
    throw std::invalid_argument(
        "column heights are even for this family; odd h rejected");
  if (remove_column_pair(lambda, h) != t_small.shape())
    throw std::invalid_argument(
        "smaller shape does not arise from the larger by a column-pair "
        "removal");
  const int p = t_small.plus_boxes() + h;
  const int q = t_small.minus_boxes() + h;
  const Projection pr = projection_for(lambda, h);
  const PiVector target = pi_vector(t_small);
  std::vector<SignedDiagram> out;
  for (const auto& v : enumerate_pi_vectors(type, lambda, p, q))
    if (project(pr, v) == target)
      out.push_back(from_pi(type, lambda, p, q, v));
  return out;
}

BijectionReport verify_component_bijection(PairType type,
                                           const Partition& lambda, int h,
                                           int p, int q) {
  BijectionReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.failures.push_back(msg);
  };

  const Partition small = remove_column_pair(lambda, h);
  const int sp = p - h, sq = q - h;

  const OrbitGraph big = build_graph(type, lambda, p, q);
  const ComponentLabel big_cl = components_bfs(big);
  rep.components_big = big_cl.count;

  std::vector<SignedDiagram> small_diagrams;
  if (sp >= 0 && sq >= 0 && signature_ok(type, sp, sq))
    small_diagrams = enumerate_syd(type, small, sp, sq);
  if (small_diagrams.empty()) {
    rep.components_small = 0;
    if (!big.vertices.empty())
      fail("no smaller diagrams but the larger vertex set is nonempty");
    return rep;
  }

  const OrbitGraph small_g = build_graph(type, small, sp, sq);
  const ComponentLabel small_cl = components_bfs(small_g);
  rep.components_small = small_cl.count;

  // (a) fibers partition the big vertex set
  std::vector<int> fiber_of(big.vertices.size(), -1);
  std::vector<std::vector<int>> fibers(small_diagrams.size());
  for (size_t s = 0; s < small_diagrams.size(); ++s) {
    for (const auto& t : ind_set(type, small_diagrams[s], lambda)) {
      const int idx = big.vertex_index(pi_vector(t));
      if (idx < 0) {
        fail("fiber element missing from the vertex set: " + t.to_string());
        continue;
      }
      if (fiber_of[idx] != -1)
        fail("fibers overlap at " + t.to_string());
      fiber_of[idx] = static_cast<int>(s);
      fibers[s].push_back(idx);
    }
  }
  for (size_t i = 0; i < fiber_of.size(); ++i)
    if (fiber_of[i] == -1) fail("vertex not covered by any fiber");

  // (b) each fiber spans a connected subgraph
  for (size_t s = 0; s < fibers.size(); ++s) {
    if (fibers[s].empty()) {
      fail("empty fiber over " + small_diagrams[s].to_string());
      continue;
    }
    std::set<int> in_fiber(fibers[s].begin(), fibers[s].end());
    std::set<int> reached{fibers[s][0]};
    std::vector<int> stack{fibers[s][0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (size_t e = 0; e < big.edges.size(); ++e) {
        auto [x, y] = big.edges[e];
        int other = x == v ? y : (y == v ? x : -1);
        if (other >= 0 && in_fiber.count(other) && !reached.count(other)) {
          reached.insert(other);
          stack.push_back(other);
        }
      }
    }
    if (reached.size() != in_fiber.size())
      fail("fiber over " + small_diagrams[s].to_string() + " is disconnected");
  }

  // (c) fiber unions over small components are exactly the big components
  std::map<int, std::set<int>> small_comp_to_big_labels;
  for (size_t s = 0; s < small_diagrams.size(); ++s) {
    const int sc =
        small_cl.label[small_g.vertex_index(pi_vector(small_diagrams[s]))];
    for (int idx : fibers[s])
      small_comp_to_big_labels[sc].insert(big_cl.label[idx]);
  }
  std::set<int> used;
  for (const auto& [sc, labels] : small_comp_to_big_labels) {
    if (labels.size() != 1)
      fail("a small component maps into several big components");
    else if (!used.insert(*labels.begin()).second)
      fail("two small components map into one big component");
  }
  if (rep.components_small != rep.components_big)
    fail("component counts differ");
  return rep;
}

}  // namespace orbitgraph
