#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitgraph/partition.hpp"

namespace orbitgraph {

// A row of a signed diagram is determined by its length and starting sign
// (signs alternate along the row).  +1 / -1.
using Sign = int;

inline char sign_char(Sign s) { return s > 0 ? '+' : '-'; }

// Boxes of sign `s` in a row of length `len` starting with sign `start`.
inline int boxes_of_sign(int len, Sign start, Sign s) {
  return start == s ? (len + 1) / 2 : len / 2;
}

// Ending sign of a row: equals the start for odd length, opposite for even.
inline Sign end_sign(int len, Sign start) {
  return len % 2 ? start : -start;
}

// One- or two-row building block from which every diagram of a family is
// assembled.
struct Primitive {
  PairType type;
  std::vector<std::pair<int, Sign>> rows;  // (length, start)
  int plus_count = 0;
  int minus_count = 0;
};

// All primitives of the family with rows of length <= max_length.
std::vector<Primitive> primitive_set(PairType type, int max_length);

// Signed Young diagram in canonical form: rows sorted by length descending,
// +-starting rows before --starting among equal lengths.  Equality is
// multiset equality of (length, start) rows.
class SignedDiagram {
 public:
  SignedDiagram() = default;  // empty diagram
  // rows as (length, start); canonicalized on construction.
  explicit SignedDiagram(std::vector<std::pair<int, Sign>> rows);
  SignedDiagram(const Partition& shape, const std::vector<Sign>& starts);

  const std::vector<std::pair<int, Sign>>& rows() const { return rows_; }
  Partition shape() const;
  int plus_boxes() const;
  int minus_boxes() const;

  // Rows as "+-+/-+-/+": each row spelled out sign by sign.
  std::string to_string() const;
  static SignedDiagram parse(const std::string& text);

  bool operator==(const SignedDiagram&) const = default;
  auto operator<=>(const SignedDiagram&) const = default;

 private:
  std::vector<std::pair<int, Sign>> rows_;
};

// Count of +-starting rows per distinct length of the shape, longest first.
using PiVector = std::vector<int>;

PiVector pi_vector(const SignedDiagram& t);

// Lattice description of the valid pi-vectors of (type, lambda, p, q):
// box bounds 0 <= a_r <= m(i_r), the parity condition
// p - q = 2*sum_{i_r odd} a_r - sum_{i_r odd} m(i_r), and the per-family
// coordinate constraints.  Throws on signature violations; returns the
// empty list when no diagram exists.
std::vector<PiVector> enumerate_pi_vectors(PairType type,
                                           const Partition& lambda, int p,
                                           int q);

// Same set materialized as diagrams, in canonical (lexicographic pi) order.
std::vector<SignedDiagram> enumerate_syd(PairType type,
                                         const Partition& lambda, int p,
                                         int q);

// Validates a pi-vector against all constraints; on failure names the
// violated constraint in *why.
bool valid_pi_vector(PairType type, const Partition& lambda, int p, int q,
                     const PiVector& v, std::string* why = nullptr);

// Inverse of pi_vector on the valid lattice set; throws naming the violated
// constraint otherwise.
SignedDiagram from_pi(PairType type, const Partition& lambda, int p, int q,
                      const PiVector& v);

// Whether the diagram is assembled from primitives of the family (with its
// own signature); the per-length criterion behind enumerate_pi_vectors.
bool diagram_in_family(PairType type, const SignedDiagram& t);

}  // namespace orbitgraph
