#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freeknots/error.hpp"

namespace freeknots {

// A cyclic Gauss word over crossing ids. The written direction is the
// component's orientation.
using Word = std::vector<int>;

struct Position {
  int component = 0;
  int index = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

enum class CrossingKind { pure, mixed };

std::string_view to_string(CrossingKind kind) noexcept;

// Multi-component Gauss code. Every crossing id occurs exactly twice across
// all component words; an empty word is a crossing-free circle.
//
// Ids are dense (0..crossing_count()-1). Labels are the user-facing names and
// survive every operation that keeps the crossing, so moves and smoothings can
// be tracked by label.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<Word> components, std::vector<std::string> labels);

  // Renumbers ids in first-appearance order and drops labels that no longer
  // occur. Used by every operation that deletes crossings.
  static Diagram compact(std::vector<Word> components, const std::vector<std::string>& labels);

  const std::vector<Word>& components() const noexcept { return components_; }
  const Word& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
  int component_count() const noexcept { return static_cast<int>(components_.size()); }
  int crossing_count() const noexcept { return static_cast<int>(labels_.size()); }
  int component_length(int i) const { return static_cast<int>(component(i).size()); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int crossing) const { return labels_.at(static_cast<std::size_t>(crossing)); }
  std::optional<int> find(std::string_view label) const;
  int crossing(std::string_view label) const;

  // Occurrences ordered by (component, index).
  const std::array<Position, 2>& occurrences(int crossing) const {
    return occurrences_.at(static_cast<std::size_t>(crossing));
  }
  bool is_pure(int crossing) const {
    const auto& occ = occurrences(crossing);
    return occ[0].component == occ[1].component;
  }
  CrossingKind kind(int crossing) const { return is_pure(crossing) ? CrossingKind::pure : CrossingKind::mixed; }
  int at(Position p) const { return component(p.component).at(static_cast<std::size_t>(p.index)); }

  // Number of crossings shared by components a and b (a != b).
  int mixed_count(int a, int b) const;
  int mixed_count_total() const;

  std::string str() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.components_ == b.components_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Word> components_;
  std::vector<std::string> labels_;
  std::vector<std::array<Position, 2>> occurrences_;
};

bool is_valid_label(std::string_view label) noexcept;

Diagram parse_gauss(std::string_view text);
std::string serialize(const Diagram& d);

std::map<std::string, CrossingKind> classify_crossings(const Diagram& d);

struct Half {
  std::vector<int> passages;
};

// The two arcs strictly between the occurrences of a pure crossing. The first
// half follows the first occurrence in the written direction.
std::pair<Half, Half> halves(const Diagram& d, int crossing);

// Which symmetries canonicalization may use. Components before
// `fixed_components` keep their position; the rest may be permuted. Each word
// may always be rotated; it may be reversed unless `oriented`.
struct Symmetry {
  int fixed_components = 0;
  bool oriented = false;

  static constexpr Symmetry unordered() { return {0, false}; }
  static constexpr Symmetry ordered() { return {1 << 20, false}; }
};

struct CanonicalForm {
  std::string text;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonicalize(const Diagram& d, Symmetry symmetry);
CanonicalForm canonicalize(const Diagram& d, bool ordered = false);
std::string canonical_text(const Diagram& d, Symmetry symmetry = {});
Diagram canonical_diagram(const Diagram& d, Symmetry symmetry = {});

// Labels a, b, ..., z, aa, ab, ...
std::string canonical_label(int index);

// True iff the components split into two nonempty groups with no mixed
// crossing between the groups.
bool is_split_diagram(const Diagram& d);

// Groups of components connected through mixed crossings.
std::vector<std::vector<int>> mixed_connectivity_groups(const Diagram& d);

// Vertex/half-edge view. Half-edge h belongs to vertex h / 4; its opposite
// half-edge is h ^ 1, so the framing pairs are {4v, 4v+1} and {4v+2, 4v+3}.
// mate[h] is the other end of the edge starting at h.
struct FramedGraph {
  int vertex_count = 0;
  std::vector<int> mate;
  int free_circles = 0;
  std::vector<std::string> labels;

  static constexpr int vertex_of(int half_edge) noexcept { return half_edge / 4; }
  static constexpr int opposite(int half_edge) noexcept { return half_edge ^ 1; }

  // Each edge once, as (h, mate[h]) with h < mate[h], ordered by h.
  std::vector<std::pair<int, int>> edges() const;
  // Edge index of every half-edge.
  std::vector<int> edge_of_half_edge() const;

  static FramedGraph from_diagram(const Diagram& d);
  Diagram to_diagram() const;
};

struct Traversal {
  // Words of vertex ids, one per non-cyclic unicursal component.
  std::vector<Word> words;
  // Component of every half-edge.
  std::vector<int> component_of_half_edge;
};

Traversal traverse(const FramedGraph& g);

struct UnicursalComponents {
  int count = 0;
  // Edge indices (into FramedGraph::edges()) per non-cyclic component; free
  // circles follow as empty entries.
  std::vector<std::vector<int>> members;
};

UnicursalComponents unicursal_components(const FramedGraph& g);

}  // namespace freeknots
