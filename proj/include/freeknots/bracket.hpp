#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freeknots/diagram.hpp"
#include "freeknots/z2.hpp"

namespace freeknots {

// way-0 follows the orientation; way-1 is the other smoothing.
enum class Way { oriented = 0, disoriented = 1 };

// Pure crossing: word v H1 v H2 becomes (H1)(H2) or (H1 reverse(H2)).
Diagram smooth(const Diagram& d, int crossing, Way way);
// Mixed crossing between (v X) and (v Y): (X Y) or (X reverse(Y)).
Diagram smooth_mixed(const Diagram& d, int crossing, Way way);
// Dispatches on the crossing's kind.
Diagram smooth_any(const Diagram& d, int crossing, Way way);

// Smooths the labelled crossings one after another; bit i of `state` picks
// the way for labels[i].
Diagram smooth_state(const Diagram& d, const std::vector<std::string>& labels, unsigned long state);

// Greedy exhaustive decreasing R2. `allow` restricts which sites may fire.
Diagram reduce_r2(const Diagram& d, const std::function<bool(const Diagram&, int, int)>& allow = {});

// Canonical text of the R2-irreducible representative, or nullopt when the
// diagram is annihilated (more than one component and a crossing-free circle).
std::optional<std::string> normalize_G(const Diagram& d);

// Every terminal canonical form reachable by some order of R2 reductions.
std::vector<std::string> r2_terminal_forms(const Diagram& d);

enum class Space { G, G1, G2rel };

std::string_view to_string(Space space) noexcept;
Space parse_space(std::string_view name);

struct BracketValue {
  Space space = Space::G;
  Z2Set terms;

  bool zero() const noexcept { return terms.zero(); }
  friend bool operator==(const BracketValue&, const BracketValue&) = default;
};

// Labels of Gaussian-even pure crossings of `component` (all components when -1).
std::vector<std::string> even_crossings(const Diagram& d, int component = -1);

BracketValue bracket_full(const Diagram& d);
BracketValue bracket_knot(const Diagram& d);
BracketValue bracket_rel(const Diagram& d);

// Sum over the states smoothing every pure crossing both ways, mixed
// crossings kept, each normalized in G. Declaring every pure crossing even and
// every mixed one odd satisfies the parity axioms on links with at most two
// components, so the value is invariant there. Throws InvalidArgument on more
// than two components.
BracketValue smoothing_bracket(const Diagram& d);

BracketValue bracket(const Diagram& d, Space space);

}  // namespace freeknots
