#pragma once

#include <string>
#include <vector>

#include "orbitgraph/signed_diagram.hpp"

namespace orbitgraph {

// The diagrams of shape lambda whose restriction along the removal of a
// column pair (rightmost pair of equal-height columns, height h determined
// by the sizes) is t_small.  Throws when shape(t_small) is not
// remove_column_pair(lambda, h) for that h, or, for the families whose
// column heights are forced even, when h is odd.
std::vector<SignedDiagram> ind_set(PairType type, const SignedDiagram& t_small,
                                   const Partition& lambda);

// Checks the component bijection along one column-pair removal:
// (a) the fibers ind_set(T') over T' in syd(lambda') partition
//     syd(lambda; p, q);
// (b) each fiber spans a connected subgraph;
// (c) the fiber union over a component of the small graph is exactly one
//     component of the big graph, and this is a bijection on components.
struct BijectionReport {
  bool ok = true;
  int components_small = 0;
  int components_big = 0;
  std::vector<std::string> failures;
};

BijectionReport verify_component_bijection(PairType type,
                                           const Partition& lambda, int h,
                                           int p, int q);

}  // namespace orbitgraph
