#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rayleigh/assignment.hpp"
#include "rayleigh/matroid.hpp"
#include "rayleigh/report.hpp"
#include "rayleigh/sparse_poly.hpp"

namespace rayleigh {

// Edges are oriented by their input order: the first endpoint is the tail.
// Only the square-certificate signs depend on the orientation.
struct GraphEdge {
  std::string label;
  std::string tail;
  std::string head;
};

// A multigraph: parallel edges and self-loops are allowed. At most 20 edges,
// so tree enumeration stays exact and quick.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;

  // Validates distinct nonempty labels and known endpoints.
  static Graph make(std::vector<std::string> vertices,
                    std::vector<GraphEdge> edges);

  int vertex_index(const std::string& label) const;  // throws UnknownElement
  int edge_index(const std::string& label) const;    // throws UnknownElement
  bool connected() const;
};

// Edge sets of all spanning trees, as masks over edge positions, in
// increasing numeric order.
std::vector<Subset> spanning_trees(const Graph& g);

// Matroid whose bases are the spanning trees; graph loops become matroid
// loops. Throws DisconnectedGraph when no spanning tree exists.
Matroid graphic_matroid(const Graph& g);

// Spanning-tree polynomial T(G; y) over the edge namespace.
SparsePoly tree_poly(const Graph& g);

// The graph with vertex b merged into vertex a; edges between them become
// self-loops.
Graph merge_vertices(const Graph& g, const std::string& a,
                     const std::string& b);

// Kirchhoff: T(G; y) / T(G/ab; y) with every edge weight strictly positive.
Scalar effective_conductance(const Graph& g, const std::string& a,
                             const std::string& b, const Assignment& y);

// Adds a fresh pole edge f joining a and b, then verifies the difference
// form T_e^f T_f^e - T_ef T^ef >= 0 for every edge e at the all-ones point,
// fixed pilot points, and `samples` seeded positive points. This inequality
// is equivalent to d conductance / d y_e >= 0.
PropertyReport monotonicity_check(const Graph& g, const std::string& a,
                                  const std::string& b, long samples,
                                  uint64_t seed, uint64_t bound = 100);

struct CertificateResult {
  SparsePoly p;   // sum over common near-trees S of the cycle sign times y^S
  bool verified;  // the pair difference equals p^2 exactly
};

// For edges e != f: P = sum of C_ef(S) y^S over all S with both S + e and
// S + f spanning trees, where C_ef(S) = +1 exactly when the tree path of
// S + e from tail(f) to head(f) traverses e from its tail to its head.
CertificateResult square_certificate(const Graph& g, const std::string& e,
                                     const std::string& f);

// Path on b unit segments, each segment fattened to a parallel class of a
// edges ("i" or "i.k"), plus a root edge "g" joining the two endpoints.
// Its tree counts split as a^b trees avoiding the root and b*a^(b-1)
// containing it.
Graph parallel_path_graph(int a, int b);

}  // namespace rayleigh
