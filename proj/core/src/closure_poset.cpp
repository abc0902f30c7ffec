#include "orbitgraph/closure_poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "orbitgraph/partition.hpp"

namespace orbitgraph {

namespace {

// One template row of a cover pattern: length cu*u + cv*v + c0, labeled a or
// b ({a,b} = {+,-} both ways at instantiation).  AIII's cases (i)/(iii) pin
// the *ending* sign of the row; everything else pins the start.
struct PatRow {
  int cu, cv, c0;
  bool end_anchor;
  int letter;  // 0 = a, 1 = b
};

struct CoverPattern {
  const char* label;
  std::vector<PatRow> s_rows;  // residue of the lower diagram
  std::vector<PatRow> t_rows;  // residue of the upper diagram
  int min_v;
  bool tie;        // v = u (single-parameter pattern)
  bool even_diff;  // u - v even
};

// a-rows / b-rows shorthand; S = start anchor, E = end anchor.
constexpr bool S = false, E = true;
constexpr int A = 0, B = 1;

const std::vector<CoverPattern>& patterns_for(PairType type) {
  static const std::vector<CoverPattern> aiii = {
      {"i", {{1, 0, 0, E, B}, {0, 1, 0, E, A}},
            {{1, 0, 1, E, A}, {0, 1, -1, E, B}}, 1, false, false},
      {"ii", {{1, 0, 0, S, B}, {0, 1, 0, S, A}},
             {{1, 0, 1, S, A}, {0, 1, -1, S, B}}, 1, false, false},
      {"iii", {{1, 0, 0, E, A}, {0, 1, 0, E, A}},
              {{1, 0, 2, E, A}, {0, 1, -2, E, A}}, 2, false, true},
  };
  static const std::vector<CoverPattern> bdi = {
      {"1", {{2, 0, 0, S, B}, {2, 0, 0, S, A}},
            {{2, 0, 1, S, B}, {2, 0, -1, S, A}}, 1, true, false},
      {"2", {{2, 0, 1, S, A}, {0, 2, 1, S, A}},
            {{2, 0, 3, S, A}, {0, 2, -1, S, A}}, 1, false, false},
      {"3", {{2, 0, 1, S, A}, {0, 2, 1, S, B}},
            {{2, 0, 3, S, A}, {0, 2, -1, S, B}}, 1, false, false},
      {"4", {{2, 0, 1, S, A}, {2, 0, 1, S, B}, {0, 2, 1, S, A}},
            {{2, 0, 2, S, B}, {2, 0, 2, S, A}, {0, 2, -1, S, A}}, 1, false,
       false},
      {"5", {{2, 0, 1, S, A}, {0, 2, 1, S, A}, {0, 2, 1, S, B}},
            {{2, 0, 3, S, A}, {0, 2, 0, S, A}, {0, 2, 0, S, B}}, 0, false,
       false},
      {"6",
       {{2, 0, 1, S, A}, {2, 0, 1, S, B}, {0, 2, 1, S, A}, {0, 2, 1, S, B}},
       {{2, 0, 2, S, A}, {2, 0, 2, S, B}, {0, 2, 0, S, A}, {0, 2, 0, S, B}},
       0, false, false},
      {"7",
       {{2, 0, 1, S, B}, {2, 0, 1, S, B}, {0, 2, 1, S, A}, {0, 2, 1, S, A}},
       {{2, 0, 2, S, B}, {2, 0, 2, S, A}, {0, 2, 0, S, B}, {0, 2, 0, S, A}},
       0, false, false},
      {"8", {{2, 0, 1, S, B}, {0, 2, 1, S, A}},
            {{2, 0, 3, S, A}, {0, 2, -1, S, B}}, 1, false, false},
      {"9", {{2, 0, 1, S, B}, {0, 2, 1, S, A}, {0, 2, 1, S, A}},
            {{2, 0, 3, S, A}, {0, 2, 0, S, B}, {0, 2, 0, S, A}}, 0, false,
       false},
      {"10", {{2, 0, 1, S, B}, {2, 0, 1, S, B}, {0, 2, 1, S, A}},
             {{2, 0, 2, S, B}, {2, 0, 2, S, A}, {0, 2, -1, S, B}}, 1, false,
       false},
  };
  static const std::vector<CoverPattern> ci = {
      {"1", {{2, 0, -1, S, A}, {2, 0, -1, S, B}},
            {{2, 0, 0, S, A}, {2, 0, -2, S, B}}, 1, true, false},
      {"2", {{2, 0, 0, S, B}, {0, 2, 0, S, B}},
            {{2, 0, 2, S, B}, {0, 2, -2, S, B}}, 1, false, false},
      {"3", {{2, 0, 0, S, B}, {0, 2, 0, S, A}},
            {{2, 0, 2, S, B}, {0, 2, -2, S, A}}, 1, false, false},
      {"4", {{2, 0, 0, S, B}, {2, 0, 0, S, A}, {0, 2, 0, S, B}},
            {{2, 0, 1, S, A}, {2, 0, 1, S, B}, {0, 2, -2, S, B}}, 1, false,
       false},
      {"5", {{2, 0, 0, S, B}, {0, 2, 0, S, B}, {0, 2, 0, S, A}},
            {{2, 0, 2, S, B}, {0, 2, -1, S, B}, {0, 2, -1, S, A}}, 1, false,
       false},
      {"6",
       {{2, 0, 0, S, B}, {2, 0, 0, S, A}, {0, 2, 0, S, B}, {0, 2, 0, S, A}},
       {{2, 0, 1, S, B}, {2, 0, 1, S, A}, {0, 2, -1, S, B}, {0, 2, -1, S, A}},
       1, false, false},
      {"7",
       {{2, 0, 0, S, A}, {2, 0, 0, S, A}, {0, 2, 0, S, B}, {0, 2, 0, S, B}},
       {{2, 0, 1, S, A}, {2, 0, 1, S, B}, {0, 2, -1, S, A}, {0, 2, -1, S, B}},
       1, false, false},
      {"8", {{2, 0, 0, S, A}, {0, 2, 0, S, B}},
            {{2, 0, 2, S, B}, {0, 2, -2, S, A}}, 1, false, false},
      {"9", {{2, 0, 0, S, A}, {0, 2, 0, S, B}, {0, 2, 0, S, B}},
            {{2, 0, 2, S, B}, {0, 2, -1, S, A}, {0, 2, -1, S, B}}, 1, false,
       false},
      {"10", {{2, 0, 0, S, A}, {2, 0, 0, S, A}, {0, 2, 0, S, B}},
             {{2, 0, 1, S, A}, {2, 0, 1, S, B}, {0, 2, -2, S, A}}, 1, false,
       false},
  };
  static const std::vector<CoverPattern> cii = {
      {"1", {{2, 0, 0, S, B}, {2, 0, 0, S, A}, {0, 2, 0, S, B},
             {0, 2, 0, S, A}},
            {{2, 0, 1, S, B}, {2, 0, 1, S, B}, {0, 2, -1, S, A},
             {0, 2, -1, S, A}}, 1, false, false},
      {"2", {{2, 0, 1, S, A}, {2, 0, 1, S, A}, {0, 2, 0, S, B},
             {0, 2, 0, S, A}},
            {{2, 0, 2, S, B}, {2, 0, 2, S, A}, {0, 2, -1, S, A},
             {0, 2, -1, S, A}}, 1, false, false},
      {"3", {{2, 0, 0, S, B}, {2, 0, 0, S, A}, {0, 2, 1, S, A},
             {0, 2, 1, S, A}},
            {{2, 0, 1, S, A}, {2, 0, 1, S, A}, {0, 2, 0, S, B},
             {0, 2, 0, S, A}}, 0, false, false},
      {"4", {{2, 0, 1, S, B}, {2, 0, 1, S, B}, {0, 2, 1, S, A},
             {0, 2, 1, S, A}},
            {{2, 0, 2, S, B}, {2, 0, 2, S, A}, {0, 2, 0, S, B},
             {0, 2, 0, S, A}}, 0, false, false},
      {"5", {{2, 0, 1, S, A}, {2, 0, 1, S, A}, {0, 2, 1, S, A},
             {0, 2, 1, S, A}},
            {{2, 0, 3, S, A}, {2, 0, 3, S, A}, {0, 2, -1, S, A},
             {0, 2, -1, S, A}}, 1, false, false},
  };
  static const std::vector<CoverPattern> diii = {
      {"1", {{2, 0, -1, S, A}, {2, 0, -1, S, B}, {0, 2, -1, S, A},
             {0, 2, -1, S, B}},
            {{2, 0, 0, S, A}, {2, 0, 0, S, A}, {0, 2, -2, S, B},
             {0, 2, -2, S, B}}, 1, false, false},
      {"2", {{2, 0, 0, S, B}, {2, 0, 0, S, B}, {0, 2, -1, S, A},
             {0, 2, -1, S, B}},
            {{2, 0, 1, S, A}, {2, 0, 1, S, B}, {0, 2, -2, S, B},
             {0, 2, -2, S, B}}, 1, false, false},
      {"3", {{2, 0, -1, S, A}, {2, 0, -1, S, B}, {0, 2, 0, S, B},
             {0, 2, 0, S, B}},
            {{2, 0, 0, S, B}, {2, 0, 0, S, B}, {0, 2, -1, S, A},
             {0, 2, -1, S, B}}, 1, false, false},
      {"4", {{2, 0, 0, S, A}, {2, 0, 0, S, A}, {0, 2, 0, S, B},
             {0, 2, 0, S, B}},
            {{2, 0, 1, S, A}, {2, 0, 1, S, B}, {0, 2, -1, S, A},
             {0, 2, -1, S, B}}, 1, false, false},
      {"5", {{2, 0, 0, S, B}, {2, 0, 0, S, B}, {0, 2, 0, S, B},
             {0, 2, 0, S, B}},
            {{2, 0, 2, S, B}, {2, 0, 2, S, B}, {0, 2, -2, S, B},
             {0, 2, -2, S, B}}, 1, false, false},
  };
  switch (type) {
    case PairType::AIII: return aiii;
    case PairType::BDI: return bdi;
    case PairType::CI: return ci;
    case PairType::CII: return cii;
    case PairType::DIII: return diii;
  }
  return aiii;
}

using Rows = std::vector<std::pair<int, Sign>>;

// Instantiates the template rows; zero-length rows vanish.  Returns false if
// any length is negative.
bool instantiate(const std::vector<PatRow>& pat, int u, int v, Sign a,
                 Rows* out, int* longest, int* shortest) {
  out->clear();
  *longest = 0;
  *shortest = 1 << 30;
  for (const auto& pr : pat) {
    const int len = pr.cu * u + pr.cv * v + pr.c0;
    if (len < 0) return false;
    *longest = std::max(*longest, len);
    *shortest = std::min(*shortest, len);
    if (len == 0) continue;
    Sign letter = pr.letter == A ? a : -a;
    Sign start = pr.end_anchor ? end_sign(len, letter) : letter;
    out->emplace_back(len, start);
  }
  std::sort(out->begin(), out->end());
  return true;
}

bool multiset_contains(Rows big, const Rows& small) {
  std::sort(big.begin(), big.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Rows multiset_subtract(Rows big, const Rows& small) {
  std::sort(big.begin(), big.end());
  Rows out;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                      std::back_inserter(out));
  return out;
}

bool multisets_disjoint(const Rows& a, const Rows& b) {
  Rows aa = a, bb = b, inter;
  std::sort(aa.begin(), aa.end());
  std::sort(bb.begin(), bb.end());
  std::set_intersection(aa.begin(), aa.end(), bb.begin(), bb.end(),
                        std::back_inserter(inter));
  return inter.empty();
}

}  // namespace

std::vector<CoverRelation> covers_down(PairType type, const SignedDiagram& t) {
  const Partition shape = t.shape();
  const int maxlen = shape.part(1);
  const long long dim_t = orbit_dimension(shape, type).dim_k;
  std::vector<CoverRelation> out;
  std::set<std::pair<SignedDiagram, std::string>> seen;

  for (const auto& pat : patterns_for(type)) {
    for (Sign a : {+1, -1}) {
      for (int u = 0; u <= maxlen; ++u) {
        const int v_lo = pat.tie ? u : pat.min_v;
        const int v_hi = pat.tie ? u : u;
        for (int v = v_lo; v <= v_hi; ++v) {
          if (pat.tie && u < pat.min_v) continue;
          if (pat.even_diff && (u - v) % 2 != 0) continue;
          Rows s_rows, t_rows;
          int t_long, t_short, s_long, s_short;
          if (!instantiate(pat.s_rows, u, v, a, &s_rows, &s_long, &s_short))
            continue;
          if (!instantiate(pat.t_rows, u, v, a, &t_rows, &t_long, &t_short))
            continue;
          if (t_rows.empty() || s_rows.empty()) continue;
          // The pattern describes the rows left after cancelling common
          // ones, so overlapping instantiations do not stand for themselves.
          if (!multisets_disjoint(s_rows, t_rows)) continue;
          if (!multiset_contains(t.rows(), t_rows)) continue;
          Rows lower_rows = multiset_subtract(t.rows(), t_rows);
          lower_rows.insert(lower_rows.end(), s_rows.begin(), s_rows.end());
          SignedDiagram lower(lower_rows);
          if (lower.plus_boxes() != t.plus_boxes()) continue;
          if (!diagram_in_family(type, lower)) continue;
          if (!seen.emplace(lower, pat.label).second) continue;
          CoverRelation cr;
          cr.lower = lower;
          cr.upper = t;
          cr.case_label = pat.label;
          cr.codim =
              dim_t - orbit_dimension(lower.shape(), type).dim_k;
          cr.t_long = t_long;
          cr.t_short = t_short;
          out.push_back(std::move(cr));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CoverRelation& x,
                                       const CoverRelation& y) {
    if (x.lower != y.lower) return x.lower < y.lower;
    return x.case_label < y.case_label;
  });
  return out;
}

std::vector<CoverRelation> codim_one_covers(PairType type,
                                            const SignedDiagram& t) {
  std::vector<CoverRelation> out;
  const Partition shape = t.shape();
  const auto all = covers_down(type, t);
  // A lower orbit can be reached through several patterns (e.g. a mirror
  // pair), so the side condition is an OR over the matches for that lower.
  for (size_t i = 0; i < all.size();) {
    size_t j = i;
    bool by_side = false;
    while (j < all.size() && all[j].lower == all[i].lower) {
      const CoverRelation& cr = all[j];
      bool case_allowed = false;
      switch (type) {
        case PairType::AIII:
          case_allowed = cr.case_label == "i" || cr.case_label == "ii";
          break;
        case PairType::BDI:
        case PairType::CI:
          case_allowed = true;
          break;
        case PairType::CII:
        case PairType::DIII:
          case_allowed = cr.case_label == "1";
          break;
      }
      bool no_between = true;
      for (int x : shape.parts())
        if (x > cr.t_short && x < cr.t_long) no_between = false;
      by_side = by_side || (case_allowed && no_between);
      ++j;
    }
    const bool by_dim = all[i].codim == 1;
    if (by_side != by_dim)
      throw std::logic_error(
          "codimension-one side condition disagrees with the dimension "
          "formula: " +
          all[i].upper.to_string() + " over " + all[i].lower.to_string());
    if (by_dim) out.push_back(all[i]);
    i = j;
  }
  return out;
}

ClosurePoset closure_diagram(PairType type, int p, int q, int max_n) {
  check_signature(type, p, q);
  const int n = p + q;
  if (n > max_n)
    throw std::invalid_argument("closure diagram size limit exceeded");
  ClosurePoset poset;
  poset.type = type;
  poset.p = p;
  poset.q = q;
  for (const auto& lam : partitions_of(n))
    for (const auto& t : enumerate_syd(type, lam, p, q))
      poset.nodes.push_back(t);
  std::sort(poset.nodes.begin(), poset.nodes.end(),
            [&](const SignedDiagram& x, const SignedDiagram& y) {
              const long long dx = orbit_dimension(x.shape(), type).dim_k;
              const long long dy = orbit_dimension(y.shape(), type).dim_k;
              if (dx != dy) return dx > dy;
              return x < y;
            });
  std::map<SignedDiagram, int> index;
  for (size_t i = 0; i < poset.nodes.size(); ++i)
    index[poset.nodes[i]] = static_cast<int>(i);

  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < poset.nodes.size(); ++i) {
    for (const auto& cr : covers_down(type, poset.nodes[i])) {
      auto it = index.find(cr.lower);
      if (it == index.end())
        throw std::logic_error("cover target missing from closure diagram");
      if (!seen.emplace(it->second, static_cast<int>(i)).second) continue;
      poset.covers.push_back(
          {it->second, static_cast<int>(i), cr.case_label, cr.codim});
    }
  }
  std::sort(poset.covers.begin(), poset.covers.end(),
            [](const ClosurePoset::Cover& x, const ClosurePoset::Cover& y) {
              if (x.upper != y.upper) return x.upper < y.upper;
              return x.lower < y.lower;
            });
  return poset;
}

}  // namespace orbitgraph
