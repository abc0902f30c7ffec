#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "orbitgraph/partition.hpp"

namespace orbitgraph {

// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  boost::multiprecision::cpp_rational re;
  boost::multiprecision::cpp_rational im;

  GaussianRational() = default;
  GaussianRational(boost::multiprecision::cpp_rational r,
                   boost::multiprecision::cpp_rational i = 0)
      : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r) {}  // NOLINT: implicit by design

  static GaussianRational imaginary_unit() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussianRational&) const = default;
};

// Dense square matrix over Gaussian rationals.
class ExactMatrix {
 public:
  explicit ExactMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static ExactMatrix identity(int n);

  int n() const { return n_; }
  GaussianRational& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const GaussianRational& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }

  bool is_zero() const;
  ExactMatrix conjugate_transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix&) const = default;

 private:
  int n_;
  std::vector<GaussianRational> a_;
};

// Rank by fraction-free elimination over Gaussian integers (denominators
// cleared first).  No floating point.
int rank(const ExactMatrix& m);

// Jordan type of a nilpotent matrix from the rank sequence of its powers;
// throws on non-nilpotent input.
Partition jordan_type(const ExactMatrix& m);

// The nilpotent X of Jordan type lambda_small together with the nilradical
// element Xi coupling the selected rows, inside the space of size
// n(lambda_small) + 2h.  Row selection: entries 1..l(lambda_small) pick real
// rows (distinct); entries 0 are virtual zero rows (each yields a standalone
// 2-chain).  |rows| <= h.
std::pair<ExactMatrix, ExactMatrix> build_induced_pair(
    const Partition& lambda_small, const std::vector<int>& rows, int h);

// The Hermitian form on the ambient space for which the constructed X and Xi
// lie in the unitary Lie algebra (used by the membership tests).
ExactMatrix ambient_form(const Partition& lambda_small, int h);

struct InductionOutcome {
  std::vector<int> rows;
  Partition jordan;
  Partition expected;
  bool match = false;
};

struct InductionReport {
  bool ok = true;
  std::vector<InductionOutcome> outcomes;
  Partition expected_max;  // lambda_small + [2^h]
  bool max_ok = false;     // expected_max attained and dominates all outcomes
};

// Sweeps every admissible row selection of size h and checks that the Jordan
// type of X + Xi is the sorted add-2 outcome, with dominance maximum
// lambda_small + [2^h].
InductionReport verify_induction(const Partition& lambda_small, int h,
                                 int size_limit = 16);

}  // namespace orbitgraph
