#include "doctest.h"
#include "orbitgraph/signed_diagram.hpp"

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace orbitgraph;

namespace {
SignedDiagram diag(std::vector<std::pair<int, Sign>> rows) {
  return SignedDiagram(std::move(rows));
}
}  // namespace

TEST_CASE("primitive_set") {
  auto aiii2 = primitive_set(PairType::AIII, 2);
  REQUIRE(aiii2.size() == 4);  // single rows of lengths 2 and 1, both starts
  for (const auto& pr : aiii2) CHECK(pr.rows.size() == 1);

  auto aiii1 = primitive_set(PairType::AIII, 1);
  REQUIRE(aiii1.size() == 2);
  CHECK(aiii1[0].plus_count + aiii1[0].minus_count == 1);

  auto cii3 = primitive_set(PairType::CII, 3);
  // odd lengths 3 and 1: same-start pairs (two sign choices each);
  // even length 2: one opposite pair
  REQUIRE(cii3.size() == 5);
  int two_row = 0;
  for (const auto& pr : cii3) {
    CHECK(pr.rows.size() == 2);
    ++two_row;
    if (pr.rows[0].first % 2 != 0)
      CHECK(pr.rows[0].second == pr.rows[1].second);
    else
      CHECK(pr.rows[0].second == -pr.rows[1].second);
  }
  CHECK(two_row == 5);

  // sign totals of each primitive add up to its box count
  for (PairType t : kAllTypes)
    for (const auto& pr : primitive_set(t, 5)) {
      int boxes = 0;
      for (auto [len, s] : pr.rows) boxes += len;
      CHECK(pr.plus_count + pr.minus_count == boxes);
    }
}

TEST_CASE("enumerate_syd small examples") {
  auto two = enumerate_syd(PairType::AIII, Partition({2}), 1, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].to_string() == "-+");
  CHECK(two[1].to_string() == "+-");

  auto mixed = enumerate_syd(PairType::AIII, Partition({2, 1}), 2, 1);
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == diag({{2, -1}, {1, +1}}));
  CHECK(mixed[1] == diag({{2, +1}, {1, +1}}));

  auto bdi = enumerate_syd(PairType::BDI, Partition({3, 2, 2}), 4, 3);
  REQUIRE(bdi.size() == 1);
  CHECK(bdi[0] == diag({{3, +1}, {2, +1}, {2, -1}}));

  CHECK_THROWS(enumerate_syd(PairType::CI, Partition({2}), 2, 0));
  CHECK_THROWS(enumerate_syd(PairType::CII, Partition({3, 3}), 3, 3));
}

TEST_CASE("pi_vector") {
  CHECK(pi_vector(SignedDiagram(Partition({4, 3, 3, 1, 1}),
                                {+1, +1, -1, +1, -1})) == PiVector{1, 1, 1});
  CHECK(pi_vector(SignedDiagram(Partition({2, 2}), {-1, -1})) == PiVector{0});
  CHECK(pi_vector(SignedDiagram(Partition({2, 1}), {+1, +1})) ==
        PiVector{1, 1});
}

TEST_CASE("from_pi") {
  CHECK(from_pi(PairType::AIII, Partition({2, 1}), 2, 1, {1, 1}) ==
        diag({{2, +1}, {1, +1}}));
  CHECK_THROWS_WITH_AS(
      from_pi(PairType::AIII, Partition({2}), 1, 1, {2}),
      doctest::Contains("box bound"), std::invalid_argument);
  CHECK(from_pi(PairType::AIII, Partition({1, 1}), 1, 1, {1}) ==
        diag({{1, +1}, {1, -1}}));
  CHECK_THROWS(from_pi(PairType::BDI, Partition({2, 2}), 3, 1, {2}));
}

TEST_CASE("diagram text round trip") {
  for (const auto& t : enumerate_syd(PairType::AIII, Partition({3, 2, 2, 1}),
                                     4, 4))
    CHECK(SignedDiagram::parse(t.to_string()) == t);
  CHECK(SignedDiagram::parse("+-+/-+-/+") ==
        diag({{3, +1}, {3, -1}, {1, +1}}));
  CHECK_THROWS(SignedDiagram::parse("++"));
}

TEST_CASE("lattice enumeration matches raw start enumeration") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lam : partitions_of(n))
      for (PairType t : kAllTypes)
        for (int p = 0; p <= n; ++p) {
          if (!signature_ok(t, p, n - p)) continue;
          const auto fast = enumerate_syd(t, lam, p, n - p);
          const auto slow =
              oracles::enumerate_syd_bruteforce(t, lam, p, n - p);
          REQUIRE(fast.size() == slow.size());
          auto sorted = fast;
          std::sort(sorted.begin(), sorted.end());
          CHECK(sorted == slow);
        }
}

TEST_CASE("pi bijection and signature audit") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lam : partitions_of(n))
      for (PairType t : kAllTypes)
        for (int p = 0; p <= n; ++p) {
          if (!signature_ok(t, p, n - p)) continue;
          const auto vecs = enumerate_pi_vectors(t, lam, p, n - p);
          std::set<PiVector> distinct(vecs.begin(), vecs.end());
          CHECK(distinct.size() == vecs.size());
          for (const auto& v : vecs) {
            const SignedDiagram d = from_pi(t, lam, p, n - p, v);
            CHECK(pi_vector(d) == v);
            CHECK(d.plus_boxes() == p);
            CHECK(d.minus_boxes() == n - p);
            CHECK(oracles::tileable(t, d));
          }
        }
}

TEST_CASE("sign swap symmetry") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lam : partitions_of(n))
      for (int p = 0; p <= n; ++p)
        CHECK(enumerate_syd(PairType::AIII, lam, p, n - p).size() ==
              enumerate_syd(PairType::AIII, lam, n - p, p).size());
}
