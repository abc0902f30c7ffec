#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitgraph/partition.hpp"
#include "orbitgraph/signed_diagram.hpp"

namespace orbitgraph {

// The codimension-one adjacency graph on the K-orbits inside one nilpotent
// G-orbit.  Vertices are pi-vectors in lexicographic order; edges are stored
// once with i < j and carry the pi-difference that produced them.
struct OrbitGraph {
  PairType type = PairType::AIII;
  Partition shape;
  int p = 0;
  int q = 0;
  std::vector<PiVector> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> edge_vectors;  // vertices[j] - vertices[i]

  int vertex_index(const PiVector& v) const;  // -1 if absent
};

// Allowed pi-difference vectors for the family on the given shape:
// AIII: +-(e_r - e_{r+1}) for all r and +-e_k;
// BDI:  +-(e_r - e_{r+1}) with both lengths odd;
// CI:   +-(e_r - e_{r+1}) with both lengths even, +-e_k if i_k even;
// CII:  +-2(e_r - e_{r+1}) with both lengths odd;
// DIII: +-2(e_r - e_{r+1}) with both lengths even, +-2e_k if i_k even.
// Only the +direction vectors are returned; both signs are applied by the
// builder.
std::vector<std::vector<int>> allowed_edge_vectors(PairType type,
                                                   const Partition& lambda);

OrbitGraph build_graph(PairType type, const Partition& lambda, int p, int q);

struct ComponentLabel {
  std::vector<int> label;  // vertex index -> component id
  int count = 0;
};

// Connected components; ids contiguous from 0, ordered by smallest contained
// vertex index.
ComponentLabel components_bfs(const OrbitGraph& g);

// Closed-form component count.  The shape is first reduced by repeated
// column-pair removal (which shifts the signature down by the removed height)
// until all column lengths are distinct, then the per-family coefficient
// formula is evaluated.  Returns 0 when no diagram exists.
long long component_count_formula(PairType type, const Partition& lambda,
                                  int p, int q);

struct Classification {
  bool single_vertex = false;
  bool edgeless = false;
  bool connected = false;
  bool disconnected = false;
};

// Closed-form classification of the orbit graph.
Classification classify(PairType type, const Partition& lambda, int p, int q);

// Tuples (p_1..p_m) with 0 <= p_s <= k_s - k_{s-1} and
// 2*sum_{lambda_{k_s} odd} p_s - #odd parts = p - q.  When lambda has no odd
// part this is {(0)} if p = q and empty otherwise.
std::vector<std::vector<int>> component_tuples(const Partition& lambda, int p,
                                               int q);

// One canonical diagram per connected component (AIII): in block s the first
// p_s rows after row k_{s-1} start with +, all other rows start with -.
std::vector<std::pair<std::vector<int>, SignedDiagram>> representatives(
    const Partition& lambda, int p, int q);

// Building-block graph: A(m; rho) is the slice sum(a) = rho of the box
// prod [0, m_s] with edges +-(e_s - e_{s+1}); C(m) is the full box with
// additionally +-e_last.  C of no bounds is the one-point graph.
struct ProductFactor {
  enum class Kind { A, C };
  Kind kind = Kind::A;
  std::vector<int> bounds;
  int level = 0;  // A only

  std::string to_string() const;
};

// Vertex/edge realization of one factor, and of a direct product of factors
// (vertices are concatenated coordinate tuples).
struct SmallGraph {
  std::vector<std::vector<int>> vertices;
  std::vector<std::pair<int, int>> edges;
};
SmallGraph factor_graph(const ProductFactor& f);
SmallGraph product_graph(const std::vector<ProductFactor>& fs);

// AIII component decomposition: for each tuple in component_tuples, the list
// of factors whose direct product is that component.
std::vector<std::pair<std::vector<int>, std::vector<ProductFactor>>>
product_decomposition(const Partition& lambda, int p, int q);

// Independent shape-level adjacency test: strips the rows common to both
// diagrams and matches the residue against the family's swap patterns, with
// the no-intermediate-row-length side condition.
bool adjacency_by_pattern(PairType type, const SignedDiagram& t1,
                          const SignedDiagram& t2);

}  // namespace orbitgraph
