#include "freeknots/delta.hpp"

#include <algorithm>
#include <numeric>

#include "freeknots/bracket.hpp"
#include "freeknots/parity.hpp"

namespace freeknots {

std::string_view to_string(FilterMode mode) noexcept {
  switch (mode) {
    case FilterMode::nonsplit: return "nonsplit";
    case FilterMode::no_trivial_component: return "no-trivial-component";
  }
  return "?";
}

FilterMode parse_filter_mode(std::string_view name) {
  if (name == "nonsplit") return FilterMode::nonsplit;
  if (name == "no-trivial-component") return FilterMode::no_trivial_component;
  throw Error(ErrorCode::InvalidArgument, std::string(name), "mode must be nonsplit or no-trivial-component");
}

std::size_t DeltaValue::undecided() const {
  return static_cast<std::size_t>(
      std::count_if(summands.begin(), summands.end(), [](const Summand& s) { return s.status == "undecided"; }));
}

namespace {

constexpr Symmetry kKnotTerms{0, false};
constexpr Symmetry kLinkTerms{1, false};

// Applies the split filter to one summand. Returns false when it is dropped.
bool apply_filter(Summand& s, const DeltaOptions& options) {
  SplitVerdict v = options.mode == FilterMode::nonsplit ? certified_nonsplit(s.raw, options.budget)
                                                        : trivial_component_split(s.raw, options.budget);
  s.certificate = v.certificate;
  switch (v.status) {
    case SplitStatus::split:
      s.status = options.mode == FilterMode::nonsplit ? "split" : "trivial-component";
      return false;
    case SplitStatus::nonsplit:
      s.status = "kept";
      return true;
    case SplitStatus::unknown:
      s.status = "undecided";
      return true;
  }
  return true;
}

void throw_if_strict(const Summand& s, const DeltaOptions& options) {
  if (options.strict) {
    throw Error(ErrorCode::FilterUndecided, s.site, "split status unknown for " + canonical_text(s.raw));
  }
}

// Undecided summands with the same term are the same link, so the filter
// treats them alike and each pair cancels whatever the verdict.
void pair_undecided(std::vector<Summand>& summands, const DeltaOptions& options) {
  std::vector<Summand*> open;
  for (auto& s : summands) {
    if (s.status != "undecided") continue;
    auto it = std::find_if(open.begin(), open.end(), [&](const Summand* o) { return o->term == s.term; });
    if (it == open.end()) {
      open.push_back(&s);
      continue;
    }
    s.status = (*it)->status = "cancelled";
    s.certificate = "pairs with " + (*it)->site;
    (*it)->certificate = "pairs with " + s.site;
    open.erase(it);
  }
  if (!open.empty()) throw_if_strict(*open.front(), options);
}

void accumulate(DeltaValue& value) {
  for (const auto& s : value.summands) {
    if (s.status == "kept" || s.status == "undecided") value.terms.toggle(s.term);
  }
}

std::vector<Summand> l_sites(const Diagram& d) {
  if (d.component_count() != 2) throw Error(ErrorCode::NotTwoComponents, std::to_string(d.component_count()));
  std::vector<Summand> out;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (!d.is_pure(x) || d.occurrences(x)[0].component != 1) continue;
    Summand s;
    s.site = d.label(x);
    s.raw = smooth(d, x, Way::oriented);
    out.push_back(std::move(s));
  }
  return out;
}

Diagram reorder(const Diagram& d, const std::vector<int>& order) {
  std::vector<Word> words;
  for (int c : order) words.push_back(d.component(c));
  return Diagram(std::move(words), d.labels());
}

}  // namespace

DeltaValue turaev_delta(const Diagram& d, const DeltaOptions& options) {
  if (d.component_count() != 1) throw Error(ErrorCode::NotAKnot, std::to_string(d.component_count()));
  DeltaValue value;
  value.mode = options.mode;
  for (int x = 0; x < d.crossing_count(); ++x) {
    Summand s;
    s.site = d.label(x);
    s.raw = smooth(d, x, Way::oriented);
    if (apply_filter(s, options)) s.term = reduce_descending(s.raw, kKnotTerms);
    value.summands.push_back(std::move(s));
  }
  pair_undecided(value.summands, options);
  accumulate(value);
  return value;
}

DeltaValue delta_L(const Diagram& d, const DeltaOptions& options) {
  DeltaValue value;
  value.mode = options.mode;
  for (auto& s : l_sites(d)) {
    if (apply_filter(s, options)) s.term = reduce_descending(s.raw, kLinkTerms);
    value.summands.push_back(std::move(s));
  }
  pair_undecided(value.summands, options);
  accumulate(value);
  return value;
}

Verdict values_equivalent(const Z2Set& a, const Z2Set& b, Symmetry symmetry, const SearchBudget& budget) {
  Z2Set diff = a;
  diff.add(b);
  if (diff.zero()) return Verdict::equivalent;
  const auto terms = diff.sorted();
  const int n = static_cast<int>(terms.size());
  std::vector<Diagram> diagrams;
  for (const auto& t : terms) diagrams.push_back(parse_gauss(t));
  std::vector<int> cls(static_cast<std::size_t>(n));
  std::iota(cls.begin(), cls.end(), 0);
  auto find = [&](int i) {
    while (cls[i] != i) i = cls[i] = cls[cls[i]];
    return i;
  };
  bool undecided = false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      const auto v = bounded_equiv(diagrams[i], diagrams[j], budget, symmetry);
      if (v.outcome == Verdict::equivalent) {
        cls[find(i)] = find(j);
      } else if (v.outcome == Verdict::unknown) {
        undecided = true;
      }
    }
  }
  std::vector<int> sizes(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) ++sizes[find(i)];
  if (std::all_of(sizes.begin(), sizes.end(), [](int s) { return s % 2 == 0; })) return Verdict::equivalent;
  return undecided ? Verdict::unknown : Verdict::distinct;
}

namespace {

// Throws unless `a` and `b` are certified inequivalent.
void require_distinct(const Diagram& a, const Diagram& b, const SearchBudget& budget, const std::string& what) {
  const auto v = bounded_equiv(a, b, budget);
  if (v.outcome == Verdict::equivalent) throw Error(ErrorCode::PatternIllFormed, what);
  if (v.outcome == Verdict::unknown) throw Error(ErrorCode::PatternUndecided, what);
}

}  // namespace

Pattern make_pattern(const Diagram& link, const SearchBudget& budget) {
  if (link.component_count() != 2) throw Error(ErrorCode::NotTwoComponents, std::to_string(link.component_count()));
  Pattern pattern{link, sublink(link, {0}), sublink(link, {1})};
  const Diagram unknot = parse_gauss("()");
  require_distinct(pattern.p, unknot, budget, "P is trivial");
  require_distinct(pattern.q, unknot, budget, "Q is trivial");
  require_distinct(pattern.p, pattern.q, budget, "P is equivalent to Q");
  const auto split = certified_nonsplit(link, budget);
  if (split.status == SplitStatus::split) throw Error(ErrorCode::PatternIllFormed, "P and Q split");
  if (split.status == SplitStatus::unknown) throw Error(ErrorCode::PatternUndecided, "P and Q split");
  return pattern;
}

namespace {

void require_even_mixed(const Diagram& d) {
  if (d.mixed_count(0, 1) % 2 != 0) throw Error(ErrorCode::OddMixedCount, std::to_string(d.mixed_count(0, 1)));
}

// Index (1 or 2) of the L-part equivalent to P, or -1 when the parts do not
// realize the pattern.
int match_pattern(Summand& s, const Pattern& pattern, const DeltaOptions& options) {
  const auto undecided = [&](const std::string& what) {
    if (options.strict) throw Error(ErrorCode::PatternUndecided, s.site, what);
    s.status = "undecided";
    return -1;
  };
  const auto link = bounded_equiv(sublink(s.raw, {1, 2}), pattern.link, options.budget, Symmetry::unordered());
  if (link.outcome == Verdict::distinct) {
    s.status = "pattern-mismatch";
    s.certificate = link.invariant;
    return -1;
  }
  if (link.outcome == Verdict::unknown) return undecided("L-parts against P and Q");
  for (int part : {1, 2}) {
    const auto v = bounded_equiv(sublink(s.raw, {part}), pattern.p, options.budget);
    if (v.outcome == Verdict::equivalent) return part;
  }
  return undecided("which L-part is P");
}

}  // namespace

DeltaValue f_PQ(const Diagram& d, const Pattern& pattern, const DeltaOptions& options) {
  auto sites = l_sites(d);
  require_even_mixed(d);
  DeltaValue value;
  value.mode = options.mode;
  for (auto& s : sites) {
    const int p_part = match_pattern(s, pattern, options);
    if (p_part > 0 && apply_filter(s, options)) {
      if (s.status == "undecided") throw_if_strict(s, options);
      s.p_part = p_part;
      s.term = reduce_descending(reorder(s.raw, {0, 3 - p_part, p_part}), Symmetry{3, false});
      if (s.status == "kept") value.terms.toggle(s.term);
    }
    value.summands.push_back(std::move(s));
  }
  return value;
}

int p_PQ(const Diagram& d, std::string_view v, const Pattern& pattern, const DeltaOptions& options) {
  const int x = d.crossing(v);
  if (!d.is_pure(x) || d.occurrences(x)[0].component != 0) {
    throw Error(ErrorCode::NotPure, std::string(v), "not a pure crossing of K");
  }
  const auto value = f_PQ(d, pattern, options);
  int sum = 0;
  for (const auto& s : value.summands) {
    if (s.status != "kept") continue;
    const Diagram pair = sublink(s.raw, {0, s.p_part});
    sum ^= p_L(pair, pair.crossing(v), 0);
  }
  return sum;
}

}  // namespace freeknots
