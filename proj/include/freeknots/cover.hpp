#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freeknots/diagram.hpp"

namespace freeknots {

// An edge of a framed graph, with its fundamental cycle when it is not in the
// spanning tree.
struct EdgeClass {
  int edge = 0;
  bool tree = false;
  bool good = true;
  std::vector<int> cycle;  // edge indices, the edge itself first
  int rotating = 0;
  int transversal = 0;
};

struct EdgeClassification {
  std::vector<int> tree;
  std::vector<EdgeClass> edges;  // indexed like FramedGraph::edges()
};

// Spanning forest from the edges taken in the given order (Kruskal).
std::vector<int> spanning_forest(const FramedGraph& g, const std::vector<int>& order);
// Every spanning forest, or nothing when there are more than `limit`.
std::vector<std::vector<int>> all_spanning_forests(const FramedGraph& g, std::size_t limit = 100000);

// Edges are taken in index order unless a seed shuffles them.
EdgeClassification classify_edges(const FramedGraph& g, std::optional<std::uint64_t> tree_seed = {});
EdgeClassification classify_edges_with_tree(const FramedGraph& g, const std::vector<int>& tree);

// The doubled graph. Vertex v has lifts v and v + V; the involution exchanges
// them, and the same for half-edges (h and h + 4V).
struct CoveringGraph {
  FramedGraph graph;
  EdgeClassification classification;
  Diagram diagram;  // components in traversal order, free circles last
  std::vector<int> component_dual;

  int involution_vertex(int v) const {
    const int half = graph.vertex_count / 2;
    return v < half ? v + half : v - half;
  }
  int involution_half_edge(int h) const {
    const int half = 2 * graph.vertex_count;
    return h < half ? h + half : h - half;
  }
};

CoveringGraph covering_K2(const Diagram& d, std::optional<std::uint64_t> tree_seed = {});
CoveringGraph covering_K2_with_tree(const Diagram& d, const std::vector<int>& tree);

// A knot diagram with every Gaussian-odd crossing deleted.
Diagram projection_Kprime(const Diagram& d);

// One component from each dual pair: the lower-indexed one.
Diagram kprime_from_k2(const CoveringGraph& c);

}  // namespace freeknots
