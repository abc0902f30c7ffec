#include "orbitgraph/signed_diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitgraph {

namespace {

Primitive make_primitive(PairType type,
                         std::vector<std::pair<int, Sign>> rows) {
  Primitive p;
  p.type = type;
  p.rows = std::move(rows);
  for (auto [len, start] : p.rows) {
    p.plus_count += boxes_of_sign(len, start, +1);
    p.minus_count += boxes_of_sign(len, start, -1);
  }
  return p;
}

bool row_less(const std::pair<int, Sign>& a, const std::pair<int, Sign>& b) {
  if (a.first != b.first) return a.first > b.first;
  return a.second > b.second;  // + before -
}

}  // namespace

std::vector<Primitive> primitive_set(PairType type, int max_length) {
  if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");
  std::vector<Primitive> out;
  for (int len = max_length; len >= 1; --len) {
    const bool odd = len % 2 != 0;
    switch (type) {
      case PairType::AIII:
        out.push_back(make_primitive(type, {{len, +1}}));
        out.push_back(make_primitive(type, {{len, -1}}));
        break;
      case PairType::BDI:
        if (odd) {
          out.push_back(make_primitive(type, {{len, +1}}));
          out.push_back(make_primitive(type, {{len, -1}}));
        } else {
          out.push_back(make_primitive(type, {{len, +1}, {len, -1}}));
        }
        break;
      case PairType::CI:
        if (!odd) {
          out.push_back(make_primitive(type, {{len, +1}}));
          out.push_back(make_primitive(type, {{len, -1}}));
        } else {
          out.push_back(make_primitive(type, {{len, +1}, {len, -1}}));
        }
        break;
      case PairType::CII:
        if (odd) {
          out.push_back(make_primitive(type, {{len, +1}, {len, +1}}));
          out.push_back(make_primitive(type, {{len, -1}, {len, -1}}));
        } else {
          out.push_back(make_primitive(type, {{len, +1}, {len, -1}}));
        }
        break;
      case PairType::DIII:
        if (!odd) {
          out.push_back(make_primitive(type, {{len, +1}, {len, +1}}));
          out.push_back(make_primitive(type, {{len, -1}, {len, -1}}));
        } else {
          out.push_back(make_primitive(type, {{len, +1}, {len, -1}}));
        }
        break;
    }
  }
  return out;
}

SignedDiagram::SignedDiagram(std::vector<std::pair<int, Sign>> rows)
    : rows_(std::move(rows)) {
  for (auto [len, start] : rows_) {
    if (len <= 0) throw std::invalid_argument("row lengths must be positive");
    if (start != 1 && start != -1)
      throw std::invalid_argument("row start must be +1 or -1");
  }
  std::sort(rows_.begin(), rows_.end(), row_less);
}

SignedDiagram::SignedDiagram(const Partition& shape,
                             const std::vector<Sign>& starts) {
  if (static_cast<size_t>(shape.length()) != starts.size())
    throw std::invalid_argument("one start sign per row required");
  std::vector<std::pair<int, Sign>> rows;
  for (int j = 0; j < shape.length(); ++j)
    rows.emplace_back(shape.parts()[j], starts[j]);
  *this = SignedDiagram(std::move(rows));
}

Partition SignedDiagram::shape() const {
  std::vector<int> parts;
  for (auto [len, start] : rows_) parts.push_back(len);
  return Partition(parts);
}

int SignedDiagram::plus_boxes() const {
  int c = 0;
  for (auto [len, start] : rows_) c += boxes_of_sign(len, start, +1);
  return c;
}

int SignedDiagram::minus_boxes() const {
  int c = 0;
  for (auto [len, start] : rows_) c += boxes_of_sign(len, start, -1);
  return c;
}

std::string SignedDiagram::to_string() const {
  std::string s;
  for (size_t j = 0; j < rows_.size(); ++j) {
    if (j) s += '/';
    auto [len, start] = rows_[j];
    for (int i = 0; i < len; ++i)
      s += sign_char(i % 2 == 0 ? start : -start);
  }
  return s;
}

SignedDiagram SignedDiagram::parse(const std::string& text) {
  std::vector<std::pair<int, Sign>> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t slash = text.find('/', pos);
    std::string row = text.substr(
        pos, slash == std::string::npos ? std::string::npos : slash - pos);
    if (!row.empty()) {
      Sign start = row[0] == '+' ? +1 : -1;
      for (size_t i = 0; i < row.size(); ++i) {
        char want = sign_char(i % 2 == 0 ? start : -start);
        if (row[i] != want)
          throw std::invalid_argument("row signs must alternate: " + row);
      }
      rows.emplace_back(static_cast<int>(row.size()), start);
    }
    if (slash == std::string::npos) break;
    pos = slash + 1;
  }
  return SignedDiagram(std::move(rows));
}

PiVector pi_vector(const SignedDiagram& t) {
  PiVector v;
  int cur_len = -1;
  for (auto [len, start] : t.rows()) {
    if (len != cur_len) {
      v.push_back(0);
      cur_len = len;
    }
    if (start > 0) ++v.back();
  }
  return v;
}

namespace {

// Per-coordinate constraint for coordinate value a at a distinct length
// (len, mult).  Returns false and names the constraint on violation.
bool coordinate_ok(PairType type, int len, int mult, int a,
                   std::string* why) {
  const bool odd = len % 2 != 0;
  auto fail = [&](const std::string& msg) {
    if (why)
      *why = "length " + std::to_string(len) + ": " + msg;
    return false;
  };
  switch (type) {
    case PairType::AIII:
      return true;
    case PairType::BDI:
      if (!odd && (mult % 2 != 0 || a * 2 != mult))
        return fail("even lengths need balanced starts");
      return true;
    case PairType::CI:
      if (odd && (mult % 2 != 0 || a * 2 != mult))
        return fail("odd lengths need balanced starts");
      return true;
    case PairType::CII:
      if (!odd && (mult % 2 != 0 || a * 2 != mult))
        return fail("even lengths need balanced starts");
      if (odd && (mult % 2 != 0 || a % 2 != 0))
        return fail("odd lengths come in same-start pairs");
      return true;
    case PairType::DIII:
      if (odd && (mult % 2 != 0 || a * 2 != mult))
        return fail("odd lengths need balanced starts");
      if (!odd && (mult % 2 != 0 || a % 2 != 0))
        return fail("even lengths come in same-start pairs");
      return true;
  }
  return false;
}

}  // namespace

bool valid_pi_vector(PairType type, const Partition& lambda, int p, int q,
                     const PiVector& v, std::string* why) {
  if (!signature_ok(type, p, q, why)) return false;
  if (p + q != lambda.n()) {
    if (why) *why = "signature total must equal the diagram size";
    return false;
  }
  const auto mults = lambda.multiplicities();
  if (v.size() != mults.size()) {
    if (why) *why = "one coordinate per distinct length required";
    return false;
  }
  long long odd_plus = 0, odd_mult = 0;
  for (size_t r = 0; r < mults.size(); ++r) {
    auto [len, mult] = mults[r];
    if (v[r] < 0 || v[r] > mult) {
      if (why)
        *why = "box bound 0 <= m+(i) <= m(i) violated at length " +
               std::to_string(len);
      return false;
    }
    if (!coordinate_ok(type, len, mult, v[r], why)) return false;
    if (len % 2 != 0) {
      odd_plus += v[r];
      odd_mult += mult;
    }
  }
  if (2 * odd_plus - odd_mult != p - q) {
    if (why) *why = "parity condition p - q = 2*sum m+(odd) - sum m(odd)";
    return false;
  }
  return true;
}

std::vector<PiVector> enumerate_pi_vectors(PairType type,
                                           const Partition& lambda, int p,
                                           int q) {
  check_signature(type, p, q);
  if (p + q != lambda.n())
    throw std::invalid_argument("signature total must equal the diagram size");
  const auto mults = lambda.multiplicities();
  std::vector<PiVector> out;
  PiVector cur(mults.size(), 0);
  // DFS in ascending coordinate order -> lexicographic output.
  auto rec = [&](auto&& self, size_t r, long long odd_plus) -> void {
    if (r == mults.size()) {
      long long odd_mult = 0;
      for (auto [len, mult] : mults)
        if (len % 2 != 0) odd_mult += mult;
      if (2 * odd_plus - odd_mult == p - q) out.push_back(cur);
      return;
    }
    auto [len, mult] = mults[r];
    for (int a = 0; a <= mult; ++a) {
      if (!coordinate_ok(type, len, mult, a, nullptr)) continue;
      cur[r] = a;
      self(self, r + 1, odd_plus + (len % 2 != 0 ? a : 0));
    }
    cur[r] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

SignedDiagram from_pi(PairType type, const Partition& lambda, int p, int q,
                      const PiVector& v) {
  std::string why;
  if (!valid_pi_vector(type, lambda, p, q, v, &why))
    throw std::invalid_argument("invalid pi-vector for (" +
                                lambda.to_string() + "): " + why);
  std::vector<std::pair<int, Sign>> rows;
  const auto mults = lambda.multiplicities();
  for (size_t r = 0; r < mults.size(); ++r) {
    auto [len, mult] = mults[r];
    for (int j = 0; j < mult; ++j)
      rows.emplace_back(len, j < v[r] ? +1 : -1);
  }
  return SignedDiagram(std::move(rows));
}

std::vector<SignedDiagram> enumerate_syd(PairType type,
                                         const Partition& lambda, int p,
                                         int q) {
  std::vector<SignedDiagram> out;
  for (const auto& v : enumerate_pi_vectors(type, lambda, p, q))
    out.push_back(from_pi(type, lambda, p, q, v));
  return out;
}

bool diagram_in_family(PairType type, const SignedDiagram& t) {
  return valid_pi_vector(type, t.shape(), t.plus_boxes(), t.minus_boxes(),
                         pi_vector(t));
}

}  // namespace orbitgraph
