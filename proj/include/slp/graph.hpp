#ifndef SLP_GRAPH_HPP
#define SLP_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "slp/error.hpp"

namespace slp {

// Subset of the numbered edges 1..n, n <= 64.
struct EdgeSet {
  std::uint64_t bits = 0;

  static EdgeSet of(std::initializer_list<int> edges) {
    EdgeSet s;
    for (int e : edges) s.add(e);
    return s;
  }
  bool contains(int e) const { return bits >> (e - 1) & 1; }
  void add(int e) { bits |= std::uint64_t(1) << (e - 1); }
  void remove(int e) { bits &= ~(std::uint64_t(1) << (e - 1)); }
  int size() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b) + 1);
    return out;
  }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet{a.bits | b.bits}; }
  friend EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet{a.bits & b.bits}; }
};

// Numbered-edge multigraph.  Vertices are labeled 1..vertex_count; edge i
// is edges[i-1] and stays tied to variable x_i throughout the library.
// Parallel edges and self-loops are allowed; "simple" is a predicate.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_simple() const;
  bool is_connected() const;
  void validate() const;  // endpoint labels in range

  friend bool operator==(const Graph&, const Graph&) = default;
};

// ---- interchange formats ----

// graph6 short form (printable bytes 63..126, upper triangle in column
// order).  Parsed edges are numbered from 1 in the graph6 bit order.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Binary edge-set string over the C(n,2) vertex pairs in lexicographic
// order, with a space after every tenth character on output.
Graph parse_edge_bits(const std::string& text, int vertex_count);
std::string emit_edge_bits(const Graph& g);

// Reads one graph per line from a multi-line text; '#' lines and blank
// lines are ignored.  Each record is graph6, or edge-bits when
// `edge_bits_vertices` > 0.
std::vector<Graph> parse_graph_file(const std::string& text, int edge_bits_vertices = 0);

// ---- structure ----

struct GraphPiece {
  Graph graph;
  std::vector<int> edge_map;  // local edge j+1 -> original edge number
};

// Edge partition into maximal biconnected subgraphs.  Requires connected
// input.  Pieces are ordered by smallest original edge number.
std::vector<GraphPiece> biconnected_components(const Graph& g);

bool is_acyclic(const Graph& g, EdgeSet I);

// G/I: merges the endpoints of every edge in I (I must be acyclic), drops
// the contracted edges, keeps every other edge under its original number
// via the edge_map.  Loops created by contraction are retained.
GraphPiece contract_edges(const Graph& g, EdgeSet I);

// ---- spanning-tree machinery ----

// Sum over spanning trees of the product of edge weights, computed as a
// reduced weighted Laplacian determinant, exactly over big integers.
// Loops are ignored, parallel edges accumulate.  Returns 0 when g is
// disconnected.
mpz_class weighted_tree_value(const Graph& g, std::span<const mpz_class> weights);
std::uint64_t weighted_tree_value_mod(const Graph& g, std::span<const std::uint64_t> weights,
                                      std::uint64_t p);

// Calls fn for every spanning tree, each exactly once.  Requires
// edge_count <= 64.
void for_each_spanning_tree(const Graph& g, const std::function<void(EdgeSet)>& fn);
std::vector<EdgeSet> spanning_trees(const Graph& g);

// ---- isomorph-free enumeration ----

enum class GraphFilter { kConnected, kBiconnected };

// One representative per isomorphism class of simple graphs on
// vertex_count <= 8 vertices satisfying the filter, ordered by edge count
// then canonical edge-bit string.  Edges are numbered in lexicographic
// pair order.
std::vector<Graph> enumerate_nonisomorphic(int vertex_count, GraphFilter filter);

// Canonical adjacency bitmask (lexicographically greatest over all vertex
// relabelings, in lex pair order).  Simple graphs, vertex_count <= 8.
std::uint32_t canonical_edge_mask(const Graph& g);

bool is_biconnected(const Graph& g);

}  // namespace slp

#endif
