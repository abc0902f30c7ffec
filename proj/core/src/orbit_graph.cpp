#include "orbitgraph/orbit_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace orbitgraph {

int OrbitGraph::vertex_index(const PiVector& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::vector<std::vector<int>> allowed_edge_vectors(PairType type,
                                                   const Partition& lambda) {
  const auto mults = lambda.multiplicities();
  const int k = static_cast<int>(mults.size());
  std::vector<std::vector<int>> out;
  if (k == 0) return out;
  const int step = (type == PairType::CII || type == PairType::DIII) ? 2 : 1;
  auto len_ok = [&](int r) {
    const bool odd = mults[r].first % 2 != 0;
    switch (type) {
      case PairType::AIII: return true;
      case PairType::BDI:
      case PairType::CII: return odd;
      case PairType::CI:
      case PairType::DIII: return !odd;
    }
    return false;
  };
  for (int r = 0; r + 1 < k; ++r) {
    if (!len_ok(r) || !len_ok(r + 1)) continue;
    std::vector<int> v(k, 0);
    v[r] = step;
    v[r + 1] = -step;
    out.push_back(std::move(v));
  }
  // The lone last-coordinate direction exists only for the families whose
  // shortest-length constraint admits it.
  bool last = false;
  switch (type) {
    case PairType::AIII: last = true; break;
    case PairType::CI:
    case PairType::DIII: last = mults[k - 1].first % 2 == 0; break;
    default: break;
  }
  if (last) {
    std::vector<int> v(k, 0);
    v[k - 1] = step;
    out.push_back(std::move(v));
  }
  return out;
}

OrbitGraph build_graph(PairType type, const Partition& lambda, int p, int q) {
  OrbitGraph g;
  g.type = type;
  g.shape = lambda;
  g.p = p;
  g.q = q;
  g.vertices = enumerate_pi_vectors(type, lambda, p, q);
  const auto dirs = allowed_edge_vectors(type, lambda);
  const int nv = static_cast<int>(g.vertices.size());
  for (int i = 0; i < nv; ++i) {
    for (const auto& d : dirs) {
      for (int sgn : {+1, -1}) {
        PiVector target = g.vertices[i];
        for (size_t r = 0; r < d.size(); ++r) target[r] += sgn * d[r];
        int j = g.vertex_index(target);
        if (j > i) {
          g.edges.emplace_back(i, j);
          std::vector<int> ev(d.size());
          for (size_t r = 0; r < d.size(); ++r) ev[r] = sgn * d[r];
          g.edge_vectors.push_back(std::move(ev));
        }
      }
    }
  }
  return g;
}

ComponentLabel components_bfs(const OrbitGraph& g) {
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(nv);
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  ComponentLabel cl;
  cl.label.assign(nv, -1);
  for (int s = 0; s < nv; ++s) {
    if (cl.label[s] != -1) continue;
    const int id = cl.count++;
    std::deque<int> queue{s};
    cl.label[s] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v])
        if (cl.label[w] == -1) {
          cl.label[w] = id;
          queue.push_back(w);
        }
    }
  }
  return cl;
}

namespace {

// Coefficients of prod (1 + t + ... + t^{g}) over the given gaps.
std::vector<long long> unit_range_product(const std::vector<int>& gaps) {
  std::vector<long long> poly{1};
  for (int g : gaps) {
    std::vector<long long> next(poly.size() + g, 0);
    for (size_t i = 0; i < poly.size(); ++i)
      for (int j = 0; j <= g; ++j) next[i + j] += poly[i];
    poly = std::move(next);
  }
  return poly;
}

long long coeff_at(const std::vector<long long>& poly, long long d) {
  if (d < 0 || d >= static_cast<long long>(poly.size())) return 0;
  return poly[d];
}

}  // namespace

long long component_count_formula(PairType type, const Partition& lambda,
                                  int p, int q) {
  check_signature(type, p, q);
  if (p + q != lambda.n())
    throw std::invalid_argument("signature total must equal the diagram size");
  if (!yd_membership(lambda, type)) return 0;

  // Reduce to distinct column lengths; each removal shifts the signature
  // down by the removed height and preserves the component count.
  Partition lam = lambda;
  long long pp = p, qq = q;
  for (;;) {
    auto hs = removable_column_heights(lam);
    if (hs.empty()) break;
    pp -= hs.front();
    qq -= hs.front();
    lam = remove_column_pair(lam, hs.front());
  }
  if (lam.empty()) return (pp == 0 && qq == 0) ? 1 : 0;

  // Distinct column lengths 0 = kappa_0 < kappa_1 < ... < kappa_m; block s
  // spans rows (kappa_{s-1}, kappa_s] and its rows share the parity of the
  // row at kappa_s.
  std::vector<int> kappa = lam.transpose().parts();
  std::sort(kappa.begin(), kappa.end());
  const long long odd = lam.count_odd_parts();
  if ((pp - qq + odd) % 2 != 0) return 0;
  const long long d = (pp - qq + odd) / 2;

  std::vector<int> odd_gaps;
  long long even_factor = 1;
  int prev = 0;
  for (int ks : kappa) {
    const int gap = ks - prev;
    if (lam.part(ks) % 2 != 0)
      odd_gaps.push_back(gap);
    else
      even_factor *= gap + 1;
    prev = ks;
  }

  switch (type) {
    case PairType::AIII:
      return coeff_at(unit_range_product(odd_gaps), d) * even_factor;
    case PairType::BDI:
      return coeff_at(unit_range_product(odd_gaps), d);
    case PairType::CI:
      return even_factor;
    case PairType::CII: {
      if (d % 2 != 0) return 0;
      std::vector<int> half;
      for (int g : odd_gaps) half.push_back(g / 2);
      return coeff_at(unit_range_product(half), d / 2);
    }
    case PairType::DIII: {
      long long f = 1;
      prev = 0;
      for (int ks : kappa) {
        if (lam.part(ks) % 2 == 0) f *= 1 + (ks - prev) / 2;
        prev = ks;
      }
      return f;
    }
  }
  return 0;
}

namespace {

bool odds_then_evens(const Partition& lambda) {
  bool seen_even = false;
  for (int x : lambda.parts()) {
    if (x % 2 == 0)
      seen_even = true;
    else if (seen_even)
      return false;
  }
  return true;
}

bool even_odd_even(const Partition& lambda) {
  // evens, then odds, then evens (any segment may be empty)
  int stage = 0;
  for (int x : lambda.parts()) {
    const bool odd = x % 2 != 0;
    if (stage == 0 && odd) stage = 1;
    else if (stage == 1 && !odd) stage = 2;
    else if (stage == 2 && odd) return false;
  }
  return true;
}

}  // namespace

Classification classify(PairType type, const Partition& lambda, int p,
                        int q) {
  Classification c;
  const long long count = component_count_formula(type, lambda, p, q);
  if (count == 0) {
    c.edgeless = true;  // no vertices, no edges
    return c;
  }
  const auto mults = lambda.multiplicities();
  const int odd = lambda.count_odd_parts();
  const int dq = std::abs(p - q);

  switch (type) {
    case PairType::AIII:
      c.single_vertex = odd == lambda.length() &&
                        (lambda.length() == dq || mults.size() <= 1);
      c.connected = odds_then_evens(lambda);
      break;
    case PairType::BDI:
    case PairType::CII: {
      bool odd_same_length = true;
      int odd_len = 0;
      for (auto [len, mult] : mults)
        if (len % 2 != 0) {
          if (odd_len == 0) odd_len = len;
          else odd_same_length = false;
        }
      c.single_vertex = odd == dq || odd_same_length;
      c.connected = even_odd_even(lambda) || odd == dq;
      break;
    }
    case PairType::CI:
    case PairType::DIII:
      c.single_vertex = odd == lambda.length();  // all parts odd
      c.connected = odds_then_evens(lambda);
      break;
  }

  // Exact edge-existence test.  The column-multiplicity criterion decides
  // whether the needed difference vector is admissible, but at extreme
  // signatures the constrained coordinates can be pinned to the boundary of
  // their range, in which case the edge has no endpoints; the d-range guards
  // catch that.
  {
    int odd_total = 0;
    for (auto [len, mult] : mults)
      if (len % 2 != 0) odd_total += mult;
    const int d = (p - q + odd_total) / 2;
    bool adj_odd = false, adj_even = false;
    for (size_t r = 0; r + 1 < mults.size(); ++r) {
      const bool a = mults[r].first % 2 != 0;
      const bool b = mults[r + 1].first % 2 != 0;
      if (a && b) adj_odd = true;
      if (!a && !b) adj_even = true;
    }
    const bool last_even =
        !mults.empty() && mults.back().first % 2 == 0;
    bool has_edge = false;
    switch (type) {
      case PairType::AIII:
        has_edge = adj_even || last_even ||
                   (adj_odd && 1 <= d && d <= odd_total - 1);
        break;
      case PairType::BDI:
        has_edge = adj_odd && 1 <= d && d <= odd_total - 1;
        break;
      case PairType::CII:
        has_edge = adj_odd && 2 <= d && d <= odd_total - 2;
        break;
      case PairType::CI:
      case PairType::DIII:
        has_edge = adj_even || last_even;
        break;
    }
    c.edgeless = !has_edge;
  }
  c.disconnected = !c.connected;
  return c;
}

std::vector<std::vector<int>> component_tuples(const Partition& lambda, int p,
                                               int q) {
  check_signature(PairType::AIII, p, q);
  if (p + q != lambda.n())
    throw std::invalid_argument("signature total must equal the diagram size");
  const KSequence ks = k_sequence(lambda);
  std::vector<std::vector<int>> out;
  if (ks.formal) {
    if (p == q) out.push_back({0});
    return out;
  }
  const int odd = lambda.count_odd_parts();
  std::vector<int> cur(ks.k.size(), 0);
  auto rec = [&](auto&& self, size_t s, int odd_sum) -> void {
    if (s == ks.k.size()) {
      if (2 * odd_sum - odd == p - q) out.push_back(cur);
      return;
    }
    const int lo = s == 0 ? 0 : ks.k[s - 1];
    for (int v = 0; v <= ks.k[s] - lo; ++v) {
      cur[s] = v;
      self(self, s + 1,
           odd_sum + (lambda.part(ks.k[s]) % 2 != 0 ? v : 0));
    }
    cur[s] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<std::pair<std::vector<int>, SignedDiagram>> representatives(
    const Partition& lambda, int p, int q) {
  std::vector<std::pair<std::vector<int>, SignedDiagram>> out;
  const KSequence ks = k_sequence(lambda);
  for (const auto& tuple : component_tuples(lambda, p, q)) {
    std::vector<Sign> starts(lambda.length(), -1);
    if (!ks.formal) {
      for (size_t s = 0; s < ks.k.size(); ++s) {
        const int lo = s == 0 ? 0 : ks.k[s - 1];
        for (int j = 0; j < tuple[s]; ++j) starts[lo + j] = +1;
      }
    }
    out.emplace_back(tuple, SignedDiagram(lambda, starts));
  }
  return out;
}

std::string ProductFactor::to_string() const {
  std::string s(kind == Kind::A ? "A(" : "C(");
  for (size_t i = 0; i < bounds.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(bounds[i]);
  }
  if (kind == Kind::A) s += ";" + std::to_string(level);
  s += ")";
  return s;
}

SmallGraph factor_graph(const ProductFactor& f) {
  SmallGraph g;
  // enumerate box points in lexicographic order
  std::vector<int> cur(f.bounds.size(), 0);
  auto rec = [&](auto&& self, size_t i, int sum) -> void {
    if (i == f.bounds.size()) {
      if (f.kind == ProductFactor::Kind::C || sum == f.level)
        g.vertices.push_back(cur);
      return;
    }
    for (int v = 0; v <= f.bounds[i]; ++v) {
      cur[i] = v;
      self(self, i + 1, sum + v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, 0);

  const size_t dim = f.bounds.size();
  std::vector<std::vector<int>> dirs;
  for (size_t r = 0; r + 1 < dim; ++r) {
    std::vector<int> d(dim, 0);
    d[r] = 1;
    d[r + 1] = -1;
    dirs.push_back(std::move(d));
  }
  if (f.kind == ProductFactor::Kind::C && dim > 0) {
    std::vector<int> d(dim, 0);
    d[dim - 1] = 1;
    dirs.push_back(std::move(d));
  }
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (const auto& d : dirs)
      for (int sgn : {+1, -1}) {
        std::vector<int> t = g.vertices[i];
        for (size_t r = 0; r < dim; ++r) t[r] += sgn * d[r];
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), t);
        if (it != g.vertices.end() && *it == t) {
          int j = static_cast<int>(it - g.vertices.begin());
          if (j > static_cast<int>(i))
            g.edges.emplace_back(static_cast<int>(i), j);
        }
      }
  return g;
}

SmallGraph product_graph(const std::vector<ProductFactor>& fs) {
  SmallGraph acc;
  acc.vertices.push_back({});
  for (const auto& f : fs) {
    const SmallGraph fg = factor_graph(f);
    SmallGraph next;
    // vertex (i, j) -> index i * |fg.V| + j; concatenated coordinates
    for (const auto& u : acc.vertices)
      for (const auto& w : fg.vertices) {
        std::vector<int> v = u;
        v.insert(v.end(), w.begin(), w.end());
        next.vertices.push_back(std::move(v));
      }
    const int fn = static_cast<int>(fg.vertices.size());
    for (auto [i, j] : acc.edges)
      for (int w = 0; w < fn; ++w)
        next.edges.emplace_back(i * fn + w, j * fn + w);
    for (int u = 0; u < static_cast<int>(acc.vertices.size()); ++u)
      for (auto [i, j] : fg.edges)
        next.edges.emplace_back(u * fn + i, u * fn + j);
    acc = std::move(next);
  }
  return acc;
}

std::vector<std::pair<std::vector<int>, std::vector<ProductFactor>>>
product_decomposition(const Partition& lambda, int p, int q) {
  std::vector<std::pair<std::vector<int>, std::vector<ProductFactor>>> out;
  const KSequence ks = k_sequence(lambda);
  const auto mults = lambda.multiplicities();
  const int k = static_cast<int>(mults.size());

  // r_s = number of distinct lengths among the first k_s rows
  std::vector<int> r;
  for (int s = 0; s < ks.m(); ++s) {
    int cnt = 0, rows = 0;
    while (cnt < k && rows + mults[cnt].second <= ks.k[s]) {
      rows += mults[cnt].second;
      ++cnt;
    }
    r.push_back(cnt);
  }

  for (const auto& tuple : component_tuples(lambda, p, q)) {
    std::vector<ProductFactor> fs;
    int prev_r = 0;
    for (int s = 0; s < ks.m(); ++s) {
      if (r[s] == prev_r) continue;  // formal block, no rows
      ProductFactor f;
      f.kind = ProductFactor::Kind::A;
      for (int i = prev_r; i < r[s]; ++i) f.bounds.push_back(mults[i].second);
      f.level = tuple[s];
      fs.push_back(std::move(f));
      prev_r = r[s];
    }
    if (prev_r < k) {
      ProductFactor f;
      f.kind = ProductFactor::Kind::C;
      for (int i = prev_r; i < k; ++i) f.bounds.push_back(mults[i].second);
      fs.push_back(std::move(f));
    }
    out.emplace_back(tuple, std::move(fs));
  }
  return out;
}

namespace {

using RowMultiset = std::vector<std::pair<int, Sign>>;  // sorted canonical

// rows of a minus rows of b, as multisets
RowMultiset row_difference(const RowMultiset& a, const RowMultiset& b) {
  RowMultiset out;
  std::map<std::pair<int, Sign>, int> counts;
  for (const auto& r : a) ++counts[r];
  for (const auto& r : b) --counts[r];
  for (const auto& [row, c] : counts)
    for (int i = 0; i < c; ++i) out.push_back(row);
  return out;
}

// Does the residue pair match "mult rows of (L1,s) + mult rows of (L2,-s)"
// versus the same with starts swapped, for some L1 > L2 >= 0 of the given
// parity (L2 = 0 rows are absent)?  On success the side condition "the shape
// has no row length strictly between L2 and L1" is checked too.
bool swap_pattern(const RowMultiset& r1, const RowMultiset& r2, int parity,
                  int mult, const Partition& shape) {
  auto split = [&](const RowMultiset& r)
      -> std::vector<std::pair<std::pair<int, Sign>, int>> {
    std::vector<std::pair<std::pair<int, Sign>, int>> kinds;
    for (const auto& row : r) {
      if (!kinds.empty() && kinds.back().first == row)
        ++kinds.back().second;
      else
        kinds.push_back({row, 1});
    }
    return kinds;
  };
  const auto k1 = split(r1), k2 = split(r2);
  if (k1.size() != k2.size() || k1.empty() || k1.size() > 2) return false;
  for (const auto& kinds : {k1, k2})
    for (const auto& [row, c] : kinds)
      if (c != mult || row.first % 2 != parity) return false;

  int L1, L2;
  Sign s;
  if (k1.size() == 2) {
    L1 = std::max(k1[0].first.first, k1[1].first.first);
    L2 = std::min(k1[0].first.first, k1[1].first.first);
    if (L1 == L2) return false;
    s = k1[0].first.first == L1 ? k1[0].first.second : k1[1].first.second;
    // r1 must be {L1:s, L2:-s}; r2 the swap
    RowMultiset want1, want2;
    for (int i = 0; i < mult; ++i) want1.emplace_back(L1, s);
    for (int i = 0; i < mult; ++i) want1.emplace_back(L2, -s);
    for (int i = 0; i < mult; ++i) want2.emplace_back(L1, -s);
    for (int i = 0; i < mult; ++i) want2.emplace_back(L2, s);
    std::sort(want1.begin(), want1.end());
    std::sort(want2.begin(), want2.end());
    RowMultiset a = r1, b = r2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != want1 || b != want2) return false;
  } else {
    // single length: the short pattern row has length zero
    if (parity != 0) return false;
    L1 = k1[0].first.first;
    L2 = 0;
    s = k1[0].first.second;
    if (k2[0].first.first != L1 || k2[0].first.second != -s) return false;
  }
  for (int x : shape.parts())
    if (x > L2 && x < L1) return false;
  return true;
}

}  // namespace

bool adjacency_by_pattern(PairType type, const SignedDiagram& t1,
                          const SignedDiagram& t2) {
  if (t1.shape() != t2.shape() || t1.plus_boxes() != t2.plus_boxes())
    throw std::invalid_argument("adjacency needs equal shape and signature");
  const RowMultiset r1 = row_difference(t1.rows(), t2.rows());
  const RowMultiset r2 = row_difference(t2.rows(), t1.rows());
  if (r1.empty()) return false;
  const Partition shape = t1.shape();
  switch (type) {
    case PairType::AIII:
      return swap_pattern(r1, r2, 0, 1, shape) ||
             swap_pattern(r1, r2, 1, 1, shape);
    case PairType::BDI:
      return swap_pattern(r1, r2, 1, 1, shape);
    case PairType::CI:
      return swap_pattern(r1, r2, 0, 1, shape);
    case PairType::CII:
      return swap_pattern(r1, r2, 1, 2, shape);
    case PairType::DIII:
      return swap_pattern(r1, r2, 0, 2, shape);
  }
  return false;
}

}  // namespace orbitgraph
