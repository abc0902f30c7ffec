#include "orbitgraph/matrix_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orbitgraph {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
  ExactMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("size mismatch");
  ExactMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < n_; ++j)
        m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
    }
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("size mismatch");
  ExactMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j) + o.at(i, j);
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("size mismatch");
  ExactMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j) - o.at(i, j);
  return m;
}

namespace {

struct GInt {
  cpp_int re, im;
  bool is_zero() const { return re == 0 && im == 0; }
  GInt conj() const { return {re, -im}; }
  GInt operator*(const GInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GInt operator-(const GInt& o) const { return {re - o.re, im - o.im}; }
};

// Exact Gaussian-integer division (throws when not divisible; in the
// fraction-free elimination below all divisions are exact by Sylvester's
// identity).
GInt exact_div(const GInt& a, const GInt& d) {
  const GInt num = a * d.conj();
  const cpp_int den = d.re * d.re + d.im * d.im;
  if (den == 0 || num.re % den != 0 || num.im % den != 0)
    throw std::logic_error("inexact division in fraction-free elimination");
  return {num.re / den, num.im / den};
}

cpp_int lcm_int(const cpp_int& a, const cpp_int& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

int rank(const ExactMatrix& m) {
  const int n = m.n();
  // Clear denominators: scale every row of the matrix by one common factor
  // (rank is scale-invariant).
  cpp_int scale = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      scale = lcm_int(scale, denominator(m.at(i, j).re));
      scale = lcm_int(scale, denominator(m.at(i, j).im));
    }
  std::vector<std::vector<GInt>> a(n, std::vector<GInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cpp_rational re = m.at(i, j).re * scale;
      const cpp_rational im = m.at(i, j).im * scale;
      a[i][j] = {numerator(re), numerator(im)};
    }

  int r = 0;
  GInt prev{1, 0};
  for (int col = 0; col < n && r < n; ++col) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (!a[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j)
        a[i][j] =
            exact_div(a[r][col] * a[i][j] - a[i][col] * a[r][j], prev);
      a[i][col] = {0, 0};
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

Partition jordan_type(const ExactMatrix& m) {
  const int n = m.n();
  if (n == 0) return Partition();
  std::vector<int> ranks{n};
  ExactMatrix power = m;
  for (int k = 1; k <= n && ranks.back() > 0; ++k) {
    ranks.push_back(rank(power));
    if (ranks.back() >= ranks[ranks.size() - 2] && ranks.back() > 0)
      throw std::invalid_argument("matrix is not nilpotent");
    power = power * m;
  }
  if (ranks.back() != 0)
    throw std::invalid_argument("matrix is not nilpotent");
  // #blocks of size >= k is rank(m^{k-1}) - rank(m^k): these counts are the
  // transpose of the Jordan partition.
  std::vector<int> col;
  for (size_t k = 1; k < ranks.size(); ++k)
    if (ranks[k - 1] - ranks[k] > 0) col.push_back(ranks[k - 1] - ranks[k]);
  return Partition(col).transpose();
}

namespace {

// The Hermitian form on one Jordan chain of length m: anti-diagonal,
// entry (r, m+1-r) = (-1)^{m-r} * c with c = 1 for odd m and c = i for even
// m (1-based r).  With the shift X w_r = w_{r-1} this makes X skew with
// respect to the form.
GaussianRational chain_form_entry(int m, int r) {
  GaussianRational c =
      m % 2 != 0 ? GaussianRational(1) : GaussianRational::imaginary_unit();
  return (m - r) % 2 != 0 ? -c : c;
}

}  // namespace

ExactMatrix ambient_form(const Partition& lambda_small, int h) {
  const int np = lambda_small.n();
  const int total = np + 2 * h;
  ExactMatrix phi(total);
  for (int j = 0; j < h; ++j) {
    phi.at(j, np + h + j) = 2;
    phi.at(np + h + j, j) = 2;
  }
  int off = h;
  for (int mi : lambda_small.parts()) {
    for (int r = 1; r <= mi; ++r)
      phi.at(off + r - 1, off + mi - r) = chain_form_entry(mi, r);
    off += mi;
  }
  return phi;
}

std::pair<ExactMatrix, ExactMatrix> build_induced_pair(
    const Partition& lambda_small, const std::vector<int>& rows, int h) {
  if (static_cast<int>(rows.size()) > h)
    throw std::invalid_argument("more selected rows than column height");
  std::set<int> real_rows;
  for (int r : rows) {
    if (r < 0 || r > lambda_small.length())
      throw std::invalid_argument("row index out of range");
    if (r > 0 && !real_rows.insert(r).second)
      throw std::invalid_argument("duplicate selected row");
  }

  const int np = lambda_small.n();
  const int total = np + 2 * h;
  // Basis: h vectors of V+, then the Jordan chains of W (chain i stored as
  // w_1..w_{m_i}), then h vectors of V-.
  std::vector<int> chain_offset;
  {
    int off = h;
    for (int mi : lambda_small.parts()) {
      chain_offset.push_back(off);
      off += mi;
    }
  }

  ExactMatrix x(total);
  for (int i = 0; i < lambda_small.length(); ++i) {
    const int m = lambda_small.parts()[i];
    for (int r = 2; r <= m; ++r)
      x.at(chain_offset[i] + r - 2, chain_offset[i] + r - 1) = 1;
  }

  ExactMatrix xi(total);
  for (size_t slot = 0; slot < rows.size(); ++slot) {
    const int vminus = np + h + static_cast<int>(slot);
    const int vplus = static_cast<int>(slot);
    if (rows[slot] == 0) {
      // Virtual zero row: couple the slot's V- vector straight to its V+
      // partner.  The imaginary unit keeps the B block skew.
      xi.at(vplus, vminus) = GaussianRational::imaginary_unit();
      continue;
    }
    const int i = rows[slot] - 1;
    const int m = lambda_small.parts()[i];
    // eta column: the leading chain vector w_m of the selected row.
    xi.at(chain_offset[i] + m - 1, vminus) = 1;
    // xi row: forced by membership in the unitary Lie algebra,
    // xi = -(eta^* Phi')/2; only the w_1 pairing survives.
    GaussianRational half(cpp_rational(1, 2));
    xi.at(vplus, chain_offset[i]) = -half * chain_form_entry(m, m);
  }
  return {x, xi};
}

namespace {

bool dominates(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) return false;
  int sa = 0, sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int j = 1; j <= len; ++j) {
    sa += a.part(j);
    sb += b.part(j);
    if (sa < sb) return false;
  }
  return true;
}

Partition add_two_at(const Partition& lambda_small,
                     const std::vector<int>& rows) {
  std::vector<int> parts = lambda_small.parts();
  for (int r : rows) {
    if (r == 0)
      parts.push_back(2);
    else
      parts[r - 1] += 2;
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace

InductionReport verify_induction(const Partition& lambda_small, int h,
                                 int size_limit) {
  if (lambda_small.n() + 2 * h > size_limit)
    throw std::invalid_argument("induction check size limit exceeded");
  InductionReport rep;
  {
    std::vector<int> parts = lambda_small.parts();
    parts.resize(std::max<size_t>(parts.size(), h), 0);
    for (int j = 0; j < h; ++j) parts[j] += 2;
    std::sort(parts.rbegin(), parts.rend());
    rep.expected_max = Partition(parts);
  }

  // All selections of h slots: a subset of real rows plus virtual rows.
  const int l = lambda_small.length();
  std::vector<std::vector<int>> selections;
  for (int mask = 0; mask < (1 << l); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < l; ++i)
      if (mask & (1 << i)) rows.push_back(i + 1);
    if (static_cast<int>(rows.size()) > h) continue;
    while (static_cast<int>(rows.size()) < h) rows.push_back(0);
    selections.push_back(std::move(rows));
  }
  std::sort(selections.begin(), selections.end());
  selections.erase(std::unique(selections.begin(), selections.end()),
                   selections.end());

  bool max_attained = false;
  bool all_dominated = true;
  for (const auto& rows : selections) {
    auto [x, xi] = build_induced_pair(lambda_small, rows, h);
    InductionOutcome oc;
    oc.rows = rows;
    oc.jordan = jordan_type(x + xi);
    oc.expected = add_two_at(lambda_small, rows);
    oc.match = oc.jordan == oc.expected;
    if (!oc.match) rep.ok = false;
    if (oc.jordan == rep.expected_max) max_attained = true;
    if (!dominates(rep.expected_max, oc.jordan)) all_dominated = false;
    rep.outcomes.push_back(std::move(oc));
  }
  rep.max_ok = max_attained && all_dominated;
  if (!rep.max_ok) rep.ok = false;
  return rep;
}

}  // namespace orbitgraph
