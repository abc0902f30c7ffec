#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbitgraph/pair_type.hpp"

namespace orbitgraph {

// Integer partition: nonincreasing positive parts.  The empty partition is a
// legitimate value (it shows up when removing the last column pair).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Parses "6,4,4,2,2"; the empty string is the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based row access; rows past the end have length 0.
  int part(int j) const {
    return (j >= 1 && j <= length()) ? parts_[j - 1] : 0;
  }

  Partition transpose() const;

  // Distinct row lengths i_1 > i_2 > ... with multiplicities, longest first.
  // The positional index r here is the coordinate index of pi-vectors.
  std::vector<std::pair<int, int>> multiplicities() const;

  int count_odd_parts() const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Row indices 0 = k_0 < k_1 < ... < k_m where lambda_j - lambda_{j+1} is odd
// (lambda_{l+1} = 0).  When lambda has no odd part the sequence is the formal
// (0) with m = 1.
struct KSequence {
  std::vector<int> k;  // k_1..k_m, excludes the leading k_0 = 0
  bool formal = false;

  int m() const { return static_cast<int>(k.size()); }
  bool operator==(const KSequence&) const = default;
};

KSequence k_sequence(const Partition& lambda);

// Removes two adjacent equal columns of height h; rows 1..h each lose 2 boxes.
// Throws if transpose(lambda) does not contain h at least twice.
Partition remove_column_pair(const Partition& lambda, int h);

// Column heights h such that remove_column_pair(lambda, h) is valid,
// in decreasing order.
std::vector<int> removable_column_heights(const Partition& lambda);

// Shape admissibility: which partitions carry at least one signed diagram of
// the given family for some signature.
bool yd_membership(const Partition& lambda, PairType type);

// All parts share one parity.
bool is_even_orbit(const Partition& lambda);

struct OrbitDim {
  long long dim_g = 0;
  long long dim_k = 0;
  bool operator==(const OrbitDim&) const = default;
};

// Dimension of the nilpotent G-orbit of Jordan type lambda in the ambient Lie
// algebra of the family (gl_n / o_n / sp_n), and its half, the K-orbit
// dimension.
OrbitDim orbit_dimension(const Partition& lambda, PairType type);

// All partitions of n, n >= 0, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace orbitgraph
