#include "orbitgraph/series.hpp"

#include <stdexcept>

#include "orbitgraph/signed_diagram.hpp"

namespace orbitgraph {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.a = a + o.a;
  r.b = b + o.b;
  r.t.resize(std::max(t.size(), o.t.size()), 0);
  for (size_t i = 0; i < t.size(); ++i) r.t[i] += t[i];
  for (size_t i = 0; i < o.t.size(); ++i) r.t[i] += o.t[i];
  r.trim();
  return r;
}

TruncatedSeries TruncatedSeries::one(int bound) {
  TruncatedSeries s(bound);
  s.terms_[Monomial{}] = 1;
  return s;
}

void TruncatedSeries::add(const Monomial& m, long long c) {
  if (c == 0 || m.weight() > bound_) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

void TruncatedSeries::multiply_geometric(const Monomial& m) {
  const int w = m.weight();
  if (w <= 0) throw std::invalid_argument("factor needs positive t-weight");
  if (w > bound_) return;
  std::map<Monomial, long long> out;
  for (const auto& [mono, c] : terms_) {
    Monomial cur = mono;
    for (int weight = cur.weight(); weight <= bound_; weight += w) {
      out[cur] += c;
      cur = cur * m;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
}

long long TruncatedSeries::coefficient(const Partition& lambda, int p,
                                       int q) const {
  if (lambda.n() > bound_)
    throw std::out_of_range("shape size exceeds the truncation bound");
  Monomial m;
  m.a = p;
  m.b = q;
  for (auto [len, mult] : lambda.multiplicities()) {
    if (static_cast<size_t>(len) > m.t.size()) m.t.resize(len, 0);
    m.t[len - 1] = mult;
  }
  m.trim();
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

TruncatedSeries genfunc(PairType type, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  TruncatedSeries s = TruncatedSeries::one(bound);
  for (const auto& prim : primitive_set(type, bound)) {
    Monomial m;
    m.a = prim.plus_count;
    m.b = prim.minus_count;
    for (auto [len, start] : prim.rows) {
      if (static_cast<size_t>(len) > m.t.size()) m.t.resize(len, 0);
      ++m.t[len - 1];
    }
    if (m.weight() > bound) continue;
    s.multiply_geometric(m);
  }
  return s;
}

}  // namespace orbitgraph
