#pragma once

#include <string>
#include <vector>

#include "orbitgraph/signed_diagram.hpp"

namespace orbitgraph {

// A cover relation between K-orbit closures: S (lower) sits directly under T
// (upper), no orbit strictly between.  The case label names the matched
// row-swap pattern; t_long/t_short are the instantiated residue lengths of T
// (t_short may be 0 for a vanished row), used for the codimension-one side
// condition.
struct CoverRelation {
  SignedDiagram lower;
  SignedDiagram upper;
  std::string case_label;
  long long codim = 0;
  int t_long = 0;
  int t_short = 0;
};

// All diagrams directly below T in the closure order, by exhaustive pattern
// instantiation; deduplicated on (lower, case label).
std::vector<CoverRelation> covers_down(PairType type, const SignedDiagram& t);

// The covers of codimension exactly one.  Each candidate is evaluated both by
// the side condition (allowed case + no intermediate row lengths in T) and by
// the dimension formula; a disagreement throws, since it would mean a
// transcription bug in the tables.
std::vector<CoverRelation> codim_one_covers(PairType type,
                                            const SignedDiagram& t);

// Full closure order over every diagram of the given signature, all shapes of
// n = p + q.  Nodes are sorted by decreasing orbit dimension, then
// lexicographically.
struct ClosurePoset {
  PairType type = PairType::AIII;
  int p = 0;
  int q = 0;
  std::vector<SignedDiagram> nodes;
  struct Cover {
    int lower = 0;
    int upper = 0;
    std::string case_label;
    long long codim = 0;
  };
  std::vector<Cover> covers;
};

ClosurePoset closure_diagram(PairType type, int p, int q, int max_n = 12);

}  // namespace orbitgraph
