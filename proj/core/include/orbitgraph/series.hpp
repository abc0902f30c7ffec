#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "orbitgraph/partition.hpp"

namespace orbitgraph {

// Monomial a^pa * b^pb * t1^{t[0]} t2^{t[1]} ... (trailing zero t-exponents
// trimmed).  t-weight = sum (i+1)*t[i].
struct Monomial {
  int a = 0;
  int b = 0;
  std::vector<int> t;

  int weight() const {
    int w = 0;
    for (size_t i = 0; i < t.size(); ++i) w += static_cast<int>(i + 1) * t[i];
    return w;
  }
  void trim() {
    while (!t.empty() && t.back() == 0) t.pop_back();
  }
  Monomial operator*(const Monomial& o) const;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

// Integer polynomial in a, b, t1..tN truncated by t-weight <= bound.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int bound) : bound_(bound) {}
  static TruncatedSeries one(int bound);

  int bound() const { return bound_; }
  const std::map<Monomial, long long>& terms() const { return terms_; }

  void add(const Monomial& m, long long c);

  // Multiply by the truncated geometric series 1/(1 - m); m must have
  // positive t-weight.
  void multiply_geometric(const Monomial& m);

  // Coefficient of a^p b^q t_lambda where t_lambda = prod t_i^{m_i} over the
  // part multiplicities of lambda.  Throws when n exceeds the bound.
  long long coefficient(const Partition& lambda, int p, int q) const;

 private:
  int bound_;
  std::map<Monomial, long long> terms_;
};

// The generating function of diagram counts for the family: product over the
// primitives of 1/(1 - monomial), truncated at t-weight <= bound.  The
// coefficient of a^p b^q t_lambda counts the signed diagrams of shape lambda
// and signature (p, q).
TruncatedSeries genfunc(PairType type, int bound);

}  // namespace orbitgraph
