#include "doctest.h"
#include "orbitgraph/graph_induction.hpp"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "orbitgraph/orbit_graph.hpp"

using namespace orbitgraph;

namespace {
SignedDiagram diag(std::vector<std::pair<int, Sign>> rows) {
  return SignedDiagram(std::move(rows));
}
}  // namespace

TEST_CASE("ind_set examples") {
  const SignedDiagram a = diag({{2, +1}, {2, -1}, {1, +1}});  // sig (3,2)
  CHECK(ind_set(PairType::AIII, a, Partition({4, 4, 3, 2, 2})).size() == 3);

  const SignedDiagram b =
      diag({{2, +1}, {1, +1}, {1, +1}, {1, +1}, {1, -1}});  // sig (4,2)
  CHECK(ind_set(PairType::AIII, b, Partition({4, 3, 3, 1, 1})).size() == 2);

  auto full = ind_set(PairType::AIII, SignedDiagram(), Partition({2, 2}));
  CHECK(full.size() == 3);  // everything of syd((2,2);2,2)

  // shape mismatch: (3,1) is not a column-pair extension of (2)
  CHECK_THROWS(ind_set(PairType::AIII, diag({{2, +1}}), Partition({3, 1})));
  // odd column height rejected for the even-height families
  CHECK_THROWS(ind_set(PairType::CII, SignedDiagram(), Partition({2})));
}

TEST_CASE("ind_set matches the literal refill oracle") {
  for (PairType t : kAllTypes)
    for (int n = 2; n <= 9; ++n)
      for (const auto& lam : partitions_of(n))
        for (int h : removable_column_heights(lam)) {
          const Partition small = remove_column_pair(lam, h);
          if (t == PairType::CII || t == PairType::DIII) {
            if (h % 2 != 0) continue;
          }
          for (int ps = 0; ps <= small.n(); ++ps) {
            if (!signature_ok(t, ps + h, small.n() - ps + h)) continue;
            for (const auto& ts :
                 enumerate_syd(t, small, ps, small.n() - ps)) {
              auto fast = ind_set(t, ts, lam);
              std::sort(fast.begin(), fast.end());
              CHECK(fast == oracles::ind_set_bruteforce(t, ts, lam, h));
            }
          }
        }
}

TEST_CASE("fibers partition the big family") {
  for (PairType t : kAllTypes)
    for (int n = 2; n <= 9; ++n)
      for (const auto& lam : partitions_of(n))
        for (int h : removable_column_heights(lam)) {
          if ((t == PairType::CII || t == PairType::DIII) && h % 2 != 0)
            continue;
          const Partition small = remove_column_pair(lam, h);
          for (int p = h; p <= n - h; ++p) {
            const int q = n - p;
            if (!signature_ok(t, p, q)) continue;
            std::multiset<SignedDiagram> collected;
            for (const auto& ts :
                 enumerate_syd(t, small, p - h, q - h))
              for (const auto& big : ind_set(t, ts, lam))
                collected.insert(big);
            const auto all = enumerate_syd(t, lam, p, q);
            CHECK(collected ==
                  std::multiset<SignedDiagram>(all.begin(), all.end()));
          }
        }
}

TEST_CASE("each fiber spans a connected subgraph") {
  for (PairType t : kAllTypes)
    for (int n = 2; n <= 8; ++n)
      for (const auto& lam : partitions_of(n)) {
        if (!yd_membership(lam, t)) continue;
        for (int h : removable_column_heights(lam)) {
          if ((t == PairType::CII || t == PairType::DIII) && h % 2 != 0)
            continue;
          const Partition small = remove_column_pair(lam, h);
          for (int p = h; p <= n - h; ++p) {
            const int q = n - p;
            if (!signature_ok(t, p, q)) continue;
            const OrbitGraph g = build_graph(t, lam, p, q);
            for (const auto& ts :
                 enumerate_syd(t, small, p - h, q - h)) {
              const auto fiber = ind_set(t, ts, lam);
              std::set<int> members;
              for (const auto& d : fiber)
                members.insert(g.vertex_index(pi_vector(d)));
              REQUIRE(!members.count(-1));
              // BFS within the fiber only
              std::set<int> seen{*members.begin()};
              std::vector<int> stack{*members.begin()};
              while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (auto [i, j] : g.edges) {
                  const int w = (i == v) ? j : (j == v) ? i : -1;
                  if (w >= 0 && members.count(w) && seen.insert(w).second)
                    stack.push_back(w);
                }
              }
              CHECK(seen == members);
            }
          }
        }
      }
}

TEST_CASE("verify_component_bijection examples") {
  BijectionReport r =
      verify_component_bijection(PairType::AIII, Partition({6, 4, 4, 2, 2}),
                                 5, 9, 9);
  CHECK(r.ok);
  CHECK(r.components_small == 1);
  CHECK(r.components_big == 1);

  r = verify_component_bijection(PairType::AIII, Partition({4, 3, 3, 1, 1}),
                                 3, 6, 6);
  CHECK(r.ok);
  CHECK(r.components_small == 2);
  CHECK(r.components_big == 2);

  r = verify_component_bijection(PairType::AIII, Partition({2, 2}), 2, 2, 2);
  CHECK(r.ok);
  CHECK(r.components_small == 1);  // the one-point graph of the empty diagram
  CHECK(r.components_big == 1);
  CHECK(r.failures.empty());
}

TEST_CASE("component bijection sweep") {
  for (PairType t : kAllTypes)
    for (int n = 2; n <= 9; ++n)
      for (const auto& lam : partitions_of(n)) {
        if (!yd_membership(lam, t)) continue;
        for (int h : removable_column_heights(lam)) {
          if ((t == PairType::CII || t == PairType::DIII) && h % 2 != 0)
            continue;
          for (int p = 0; p <= n; ++p) {
            if (!signature_ok(t, p, n - p)) continue;
            const BijectionReport r =
                verify_component_bijection(t, lam, h, p, n - p);
            CHECK(r.ok);
            CHECK(r.components_small == r.components_big);
          }
        }
      }
}

TEST_CASE("double removals commute") {
  for (int n = 4; n <= 10; ++n)
    for (const auto& lam : partitions_of(n)) {
      const auto hs = removable_column_heights(lam);
      for (int h1 : hs)
        for (int h2 : removable_column_heights(remove_column_pair(lam, h1))) {
          // remove h1 then h2; the reverse order exists when h2 is also
          // removable first and h1 removable after
          const Partition via1 =
              remove_column_pair(remove_column_pair(lam, h1), h2);
          const auto first = removable_column_heights(lam);
          if (std::find(first.begin(), first.end(), h2) == first.end())
            continue;
          const Partition mid = remove_column_pair(lam, h2);
          const auto second = removable_column_heights(mid);
          if (std::find(second.begin(), second.end(), h1) == second.end())
            continue;
          CHECK(via1 == remove_column_pair(mid, h1));
        }
    }
}
