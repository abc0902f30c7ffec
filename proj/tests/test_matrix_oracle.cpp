#include "doctest.h"
#include "orbitgraph/matrix_oracle.hpp"

#include <algorithm>
#include <vector>

using namespace orbitgraph;

namespace {

ExactMatrix jordan_block_sum(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  ExactMatrix m(n);
  int off = 0;
  for (int s : sizes) {
    for (int r = 1; r < s; ++r) m.at(off + r - 1, off + r) = 1;
    off += s;
  }
  return m;
}

ExactMatrix power(ExactMatrix m, int k) {
  ExactMatrix out = ExactMatrix::identity(m.n());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

bool anti_hermitian(const ExactMatrix& m) {
  return m.conjugate_transpose() == ExactMatrix(m.n()) - m;
}

}  // namespace

TEST_CASE("rank and jordan_type") {
  CHECK(jordan_type(jordan_block_sum({3, 1})) == Partition({3, 1}));
  CHECK(jordan_type(ExactMatrix(4)) == Partition({1, 1, 1, 1}));
  CHECK(jordan_type(jordan_block_sum({2, 2})) == Partition({2, 2}));
  CHECK(rank(jordan_block_sum({3, 1})) == 2);
  CHECK(rank(ExactMatrix::identity(5)) == 5);
  CHECK_THROWS_AS(jordan_type(ExactMatrix::identity(2)),
                  std::invalid_argument);

  // rank must survive ugly denominators and complex entries
  ExactMatrix m(2);
  m.at(0, 0) = GaussianRational(boost::multiprecision::cpp_rational(1, 3),
                                boost::multiprecision::cpp_rational(1, 7));
  m.at(0, 1) = GaussianRational(2, -5);
  m.at(1, 0) = m.at(0, 0) * GaussianRational(4);
  m.at(1, 1) = m.at(0, 1) * GaussianRational(4);
  CHECK(rank(m) == 1);
}

TEST_CASE("build_induced_pair golden jordan types") {
  auto [x1, xi1] = build_induced_pair(Partition({1}), {1}, 1);
  CHECK(x1.n() == 3);
  CHECK(jordan_type(x1 + xi1) == Partition({3}));

  auto [x2, xi2] = build_induced_pair(Partition({2, 1}), {1}, 1);
  CHECK(x2.n() == 5);
  CHECK(jordan_type(x2 + xi2) == Partition({4, 1}));

  auto [x3, xi3] = build_induced_pair(Partition({2, 2}), {1, 2}, 2);
  CHECK(x3.n() == 8);
  CHECK(jordan_type(x3 + xi3) == Partition({4, 4}));

  CHECK_THROWS(build_induced_pair(Partition({2, 1}), {1, 1}, 2));
  CHECK_THROWS(build_induced_pair(Partition({2, 1}), {1, 2}, 1));
  CHECK_THROWS(build_induced_pair(Partition({2, 1}), {3}, 1));
}

TEST_CASE("verify_induction examples") {
  const InductionReport r = verify_induction(Partition({2, 1}), 1);
  CHECK(r.ok);
  CHECK(r.max_ok);
  CHECK(r.expected_max == Partition({4, 1}));
  std::vector<Partition> outcomes;
  for (const auto& o : r.outcomes) {
    CHECK(o.match);
    outcomes.push_back(o.jordan);
  }
  std::sort(outcomes.begin(), outcomes.end());
  CHECK(outcomes == std::vector<Partition>{Partition({2, 2, 1}),
                                           Partition({3, 2}),
                                           Partition({4, 1})});

  const InductionReport empty = verify_induction(Partition(), 1);
  CHECK(empty.ok);
  REQUIRE(empty.outcomes.size() == 1);
  CHECK(empty.outcomes[0].jordan == Partition({2}));
  CHECK(empty.expected_max == Partition({2}));

  const InductionReport two = verify_induction(Partition({1, 1}), 2);
  CHECK(two.ok);
  CHECK(two.max_ok);
  CHECK(two.expected_max == Partition({3, 3}));

  CHECK_THROWS(verify_induction(Partition({8, 8}), 4, 16));
}

TEST_CASE("constructed pair lies in the unitary lie algebra") {
  const std::vector<std::pair<Partition, int>> cases = {
      {Partition({1}), 1},    {Partition({2, 1}), 1}, {Partition({2, 2}), 2},
      {Partition({3, 1}), 2}, {Partition({4, 2, 1}), 2}, {Partition(), 2}};
  for (const auto& [lam, h] : cases) {
    const ExactMatrix phi = ambient_form(lam, h);
    CHECK(phi.conjugate_transpose() == phi);
    CHECK(rank(phi) == phi.n());
    // every admissible selection, including virtual rows
    std::vector<std::vector<int>> sels;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
      if (static_cast<int>(cur.size()) == h) {
        sels.push_back(cur);
        return;
      }
      cur.push_back(0);  // virtual
      self(self, next);
      cur.pop_back();
      for (int r = next; r <= lam.length(); ++r) {
        cur.push_back(r);
        self(self, r + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
    for (const auto& rows : sels) {
      auto [x, xi] = build_induced_pair(lam, rows, h);
      CHECK(anti_hermitian(phi * x));
      CHECK(anti_hermitian(phi * xi));
      CHECK(anti_hermitian(phi * (x + xi)));
    }
  }
}

TEST_CASE("coupling term structure") {
  // Xi climbs the three-block flag by one step and X preserves it, so any
  // word with three Xi factors vanishes and (X+Xi)^k expands into the words
  // with at most two Xi's.
  for (const auto& [lam, rows, h] :
       {std::tuple{Partition({2, 1}), std::vector<int>{1}, 1},
        std::tuple{Partition({3, 2}), std::vector<int>{2, 0}, 2},
        std::tuple{Partition({2, 2}), std::vector<int>{1, 2}, 2}}) {
    auto [x, xi] = build_induced_pair(lam, rows, h);
    CHECK((xi * xi * xi).is_zero());
    for (int b = 0; b <= 3; ++b)
      CHECK((xi * power(x, b) * xi * x * xi).is_zero());
    for (int k = 2; k <= 5; ++k) {
      ExactMatrix words = power(x, k);
      for (int j = 0; j < k; ++j)
        words = words + power(x, j) * xi * power(x, k - 1 - j);
      for (int a = 0; a <= k - 2; ++a)
        for (int b = 0; a + b <= k - 2; ++b) {
          const int c = k - 2 - a - b;
          words = words + power(x, a) * xi * power(x, b) * xi * power(x, c);
        }
      CHECK(power(x + xi, k) == words);
    }
  }
}

TEST_CASE("nilpotency degree grows by two") {
  for (const auto& [lam, h] :
       {std::pair{Partition({3, 1}), 1}, {Partition({2, 2}), 2},
        {Partition({4, 2}), 1}}) {
    const int k = lam.part(1);
    std::vector<int> rows{1};  // select the longest row
    for (int extra = 1; extra < h; ++extra) rows.push_back(0);
    auto [x, xi] = build_induced_pair(lam, rows, h);
    CHECK(power(x, k).is_zero());
    CHECK(!power(x + xi, k + 1).is_zero());
    CHECK(power(x + xi, k + 2).is_zero());
  }
}
