#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freeknots/diagram.hpp"
#include "freeknots/moves.hpp"

namespace freeknots {

struct SearchBudget {
  int max_crossings = 10;
  int max_depth = 4;
  std::size_t max_states = 20000;
};

using MoveFilter = std::function<bool(const Diagram&, const MoveApplication&)>;
// Receives the state and its canonical text under the search symmetry.
using Goal = std::function<bool(const Diagram&, const std::string&)>;

struct SearchOutcome {
  std::optional<std::vector<MoveApplication>> path;
  Diagram reached;
  std::size_t states = 0;
  // Every state within the crossing and depth limits was expanded.
  bool exhausted = false;
};

// Breadth-first search over Reidemeister moves with states deduplicated by
// canonical form. Each level is ordered by canonical text, so results do not
// depend on move enumeration order. Paths apply to `start` exactly.
SearchOutcome breadth_first_search(const Diagram& start, Symmetry symmetry, const SearchBudget& budget, const Goal& goal,
                                   const MoveFilter& filter = {});

// Replays a path and returns the final diagram.
Diagram replay(const Diagram& start, const std::vector<MoveApplication>& path);

// The listed components in the given order; crossings with any other
// component are erased.
Diagram sublink(const Diagram& d, const std::vector<int>& components);

// Move-invariant signatures used to certify that two diagrams are distinct.
// Names: component-count, mixed-parity, component-brackets and, for
// two-component links, smoothing-bracket.
// Respects the fixed components of `symmetry`.
std::vector<std::pair<std::string, std::string>> link_invariants(const Diagram& d, Symmetry symmetry = {});

enum class Verdict { equivalent, distinct, unknown };

std::string_view to_string(Verdict v) noexcept;

struct SearchVerdict {
  Verdict outcome = Verdict::unknown;
  // For equivalent verdicts found by search: moves transforming `source` into
  // a diagram with the canonical form of `target`.
  std::vector<MoveApplication> path;
  Diagram source;
  std::string target;
  // Separating invariant for distinct verdicts; "descent" for equivalent
  // verdicts where both diagrams reduce to the same form.
  std::string invariant;
  std::size_t states = 0;
};

// Sound equivalence oracle: equivalent only with a verified path or a common
// reduce_descending form, distinct only with a differing invariant. The search starts from the argument with
// the smaller canonical form, so the verdict class is symmetric.
SearchVerdict bounded_equiv(const Diagram& a, const Diagram& b, const SearchBudget& budget, Symmetry symmetry = {});

enum class SplitStatus { nonsplit, split, unknown };

std::string_view to_string(SplitStatus s) noexcept;

struct SplitVerdict {
  SplitStatus status = SplitStatus::unknown;
  std::string certificate;
  std::vector<MoveApplication> path;
  std::size_t states = 0;
};

SplitVerdict certified_nonsplit(const Diagram& d, const SearchBudget& budget);

// Whether the link is a disjoint union of something with a trivial knot.
// `split` here means "has a trivial split component".
SplitVerdict trivial_component_split(const Diagram& d, const SearchBudget& budget);

// Smallest canonical form among the fewest-crossing diagrams reachable by
// decreasing moves and third moves.
std::string reduce_descending(const Diagram& d, Symmetry symmetry, std::size_t max_states = 5000);

}  // namespace freeknots
