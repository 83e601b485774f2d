#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "freeknots/diagram.hpp"
#include "freeknots/moves.hpp"

namespace freeknots {

// Parity of the number of passages strictly inside the first half at a pure
// crossing. The crossing's component must have even length, which makes the
// two halves agree.
int gaussian_parity(const Diagram& d, int crossing);

// Gaussian parity of every pure crossing on components of even length, by id.
std::map<int, int> gaussian_parities(const Diagram& d);

// Parity of mixed passages (with `other`) in a half of `k_component` at
// `crossing`. Requires two components and an even number of mixed crossings.
int p_L(const Diagram& d, int crossing, int k_component = 0);
std::map<int, int> p_L_parities(const Diagram& d, int k_component = 0);

// Standalone graph of one component: pure crossings of that component are the
// vertices; the word segments between consecutive vertex passages are the
// edges, carrying the mixed passages they contain as markers.
struct ComponentGraph {
  struct Edge {
    int from = 0;  // crossing id
    int to = 0;    // crossing id
    int start = 0; // word index of the passage the edge leaves
    std::vector<int> markers;
  };
  int component = 0;
  std::vector<int> vertices;
  std::vector<Edge> edges;
};

ComponentGraph component_graph(const Diagram& d, int component);

struct Cycle {
  std::vector<int> edges;  // indices into ComponentGraph::edges
  int intersections = 0;   // markers met, counting multiplicity
  bool valid = false;      // even number of intersections with the other component
};

struct CycleBasis {
  ComponentGraph graph;
  std::vector<int> tree_edges;
  std::vector<Cycle> cycles;
};

// Fundamental cycles of the spanning tree built from the lowest-indexed edges.
CycleBasis cycle_basis(const Diagram& d, int l_component = 1);

// Parity of mixed passages in the first half of K at `crossing` whose passage
// on L lies on an edge of `cycle`.
int homology_parity(const Diagram& d, int crossing, const CycleBasis& basis, const Cycle& cycle);

enum class ParityRule { gaussian, p_L };

std::string_view to_string(ParityRule rule) noexcept;

struct AxiomReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// Checks the parity axioms for one move: the larger side's R1 crossing is
// even, R2 crossings share a parity, the R3 triple keeps its parities with an
// even number of odd members, and every other crossing keeps its parity.
// For p_L, moves that involve L or mixed crossings must not change any parity
// of K, special third moves included.
AxiomReport check_parity_axioms(ParityRule rule, const Diagram& d, const MoveApplication& m, int k_component = 0);

}  // namespace freeknots
