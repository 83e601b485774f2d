#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "freeknots/diagram.hpp"
#include "freeknots/search.hpp"
#include "freeknots/z2.hpp"

namespace freeknots {

// Which summands a cobracket drops: every certified-split one, or only those
// certified to have a trivial split component.
enum class FilterMode { nonsplit, no_trivial_component };

std::string_view to_string(FilterMode mode) noexcept;
FilterMode parse_filter_mode(std::string_view name);

struct DeltaOptions {
  FilterMode mode = FilterMode::no_trivial_component;
  // Undecided summands with equal terms cancel in pairs. Strict mode throws
  // FilterUndecided for any other undecided summand; lax mode keeps it and
  // records it as undecided.
  bool strict = true;
  SearchBudget budget{10, 3, 20000};
};

// One smoothing site and what happened to its summand.
struct Summand {
  std::string site;
  Diagram raw;
  std::string term;    // reduced canonical text
  std::string status;  // kept, split, trivial-component, undecided, cancelled, pattern-mismatch
  std::string certificate;
  int p_part = -1;  // f_PQ: component of `raw` equivalent to P
};

struct DeltaValue {
  FilterMode mode = FilterMode::no_trivial_component;
  Z2Set terms;
  std::vector<Summand> summands;

  std::size_t undecided() const;
};

// Sum of the oriented smoothings of a knot over its crossings.
DeltaValue turaev_delta(const Diagram& d, const DeltaOptions& options = {});

// Oriented smoothings of a two-component link K ∪ L at the crossings of L.
// Terms are three-component links with K kept first.
DeltaValue delta_L(const Diagram& d, const DeltaOptions& options = {FilterMode::nonsplit, true, {10, 3, 20000}});

// Compares two cobracket values up to equivalence of their terms. Equal term
// sets are equivalent; otherwise the symmetric difference must split into
// classes of bounded-equivalent terms of even size.
Verdict values_equivalent(const Z2Set& a, const Z2Set& b, Symmetry symmetry, const SearchBudget& budget);

// A pattern P ∪ Q given as one two-component diagram (P first).
struct Pattern {
  Diagram link;
  Diagram p;
  Diagram q;
};

// Validates that P and Q are nontrivial and inequivalent and P ∪ Q is
// nonsplit. Throws PatternIllFormed or PatternUndecided.
Pattern make_pattern(const Diagram& link, const SearchBudget& budget);

// delta_L restricted to summands whose L-parts form a link equivalent to the
// pattern. Kept terms order the parts as K, Q-part, P-part.
DeltaValue f_PQ(const Diagram& d, const Pattern& pattern, const DeltaOptions& options = {FilterMode::nonsplit, true, {10, 3, 20000}});

// Sum over the summands kept by f_PQ of the parity of v in the two-component
// sublink K ∪ (P-part).
int p_PQ(const Diagram& d, std::string_view v, const Pattern& pattern,
         const DeltaOptions& options = {FilterMode::nonsplit, true, {10, 3, 20000}});

}  // namespace freeknots
