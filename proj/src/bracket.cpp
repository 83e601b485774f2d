#include "freeknots/bracket.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "freeknots/moves.hpp"
#include "freeknots/parity.hpp"

namespace freeknots {

Diagram smooth(const Diagram& d, int crossing, Way way) {
  if (!d.is_pure(crossing)) throw Error(ErrorCode::NotPure, d.label(crossing));
  const int c = d.occurrences(crossing)[0].component;
  auto [h1, h2] = halves(d, crossing);
  auto words = d.components();
  if (way == Way::oriented) {
    words[c] = std::move(h1.passages);
    words.insert(words.begin() + c + 1, std::move(h2.passages));
  } else {
    Word joined = std::move(h1.passages);
    joined.insert(joined.end(), h2.passages.rbegin(), h2.passages.rend());
    words[c] = std::move(joined);
  }
  return Diagram::compact(std::move(words), d.labels());
}

Diagram smooth_mixed(const Diagram& d, int crossing, Way way) {
  if (d.is_pure(crossing)) throw Error(ErrorCode::NotMixed, d.label(crossing));
  const auto& occ = d.occurrences(crossing);
  auto after = [&](Position p) {
    const auto& w = d.component(p.component);
    const int n = static_cast<int>(w.size());
    Word out;
    for (int k = 1; k < n; ++k) out.push_back(w[(p.index + k) % n]);
    return out;
  };
  Word joined = after(occ[0]);
  Word y = after(occ[1]);
  if (way == Way::oriented) {
    joined.insert(joined.end(), y.begin(), y.end());
  } else {
    joined.insert(joined.end(), y.rbegin(), y.rend());
  }
  auto words = d.components();
  words[occ[0].component] = std::move(joined);
  words.erase(words.begin() + occ[1].component);
  return Diagram::compact(std::move(words), d.labels());
}

Diagram smooth_any(const Diagram& d, int crossing, Way way) {
  return d.is_pure(crossing) ? smooth(d, crossing, way) : smooth_mixed(d, crossing, way);
}

Diagram smooth_state(const Diagram& d, const std::vector<std::string>& labels, unsigned long state) {
  Diagram out = d;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Way way = (state >> i) & 1UL ? Way::disoriented : Way::oriented;
    out = smooth_any(out, out.crossing(labels[i]), way);
  }
  return out;
}

Diagram reduce_r2(const Diagram& d, const std::function<bool(const Diagram&, int, int)>& allow) {
  Diagram current = d;
  while (true) {
    bool moved = false;
    for (const auto& m : decreasing_r2_moves(current)) {
      if (allow) {
        const auto ids = involved_crossings(current, m);
        if (!allow(current, ids[0], ids[1])) continue;
      }
      current = apply_move(current, m);
      moved = true;
      break;
    }
    if (!moved) return current;
  }
}

namespace {

bool annihilated(const Diagram& d) {
  if (d.component_count() < 2) return false;
  return std::any_of(d.components().begin(), d.components().end(), [](const Word& w) { return w.empty(); });
}

void collect_terminals(const Diagram& d, std::map<std::string, std::set<std::string>>& memo, std::set<std::string>& out) {
  const auto key = canonical_text(d);
  if (auto it = memo.find(key); it != memo.end()) {
    out.insert(it->second.begin(), it->second.end());
    return;
  }
  std::set<std::string> found;
  const auto moves = decreasing_r2_moves(d);
  if (moves.empty()) {
    found.insert(key);
  } else {
    for (const auto& m : moves) collect_terminals(apply_move(d, m), memo, found);
  }
  out.insert(found.begin(), found.end());
  memo.emplace(key, std::move(found));
}

}  // namespace

std::optional<std::string> normalize_G(const Diagram& d) {
  const Diagram reduced = reduce_r2(d);
  if (annihilated(reduced)) return std::nullopt;
  return canonical_text(reduced);
}

std::vector<std::string> r2_terminal_forms(const Diagram& d) {
  std::map<std::string, std::set<std::string>> memo;
  std::set<std::string> out;
  collect_terminals(d, memo, out);
  return {out.begin(), out.end()};
}

std::string_view to_string(Space space) noexcept {
  switch (space) {
    case Space::G: return "G";
    case Space::G1: return "G1";
    case Space::G2rel: return "G2rel";
  }
  return "?";
}

Space parse_space(std::string_view name) {
  if (name == "G") return Space::G;
  if (name == "G1") return Space::G1;
  if (name == "G2rel") return Space::G2rel;
  throw Error(ErrorCode::InvalidArgument, std::string(name), "space must be G, G1 or G2rel");
}

std::vector<std::string> even_crossings(const Diagram& d, int component) {
  std::vector<std::string> out;
  for (int c = 0; c < d.component_count(); ++c) {
    if ((component < 0 || component == c) && d.component_length(c) % 2 != 0) {
      throw Error(ErrorCode::OddComponentLength, std::to_string(c));
    }
  }
  for (auto [x, p] : gaussian_parities(d)) {
    if (p == 0 && (component < 0 || d.occurrences(x)[0].component == component)) out.push_back(d.label(x));
  }
  return out;
}

namespace {

void check_state_count(std::size_t even) {
  if (even >= 8 * sizeof(unsigned long) - 1) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(even), "too many even crossings to enumerate states");
  }
}

}  // namespace

BracketValue bracket_full(const Diagram& d) {
  const auto even = even_crossings(d);
  check_state_count(even.size());
  BracketValue value{Space::G, {}};
  for (unsigned long state = 0; state < (1UL << even.size()); ++state) {
    if (auto term = normalize_G(smooth_state(d, even, state))) value.terms.toggle(*term);
  }
  return value;
}

BracketValue bracket_knot(const Diagram& d) {
  if (d.component_count() != 1) throw Error(ErrorCode::NotAKnot, std::to_string(d.component_count()));
  BracketValue value{Space::G1, {}};
  const auto full = bracket_full(d);
  for (const auto& term : full.terms.terms()) {
    if (term.find('/') == std::string::npos) value.terms.toggle(term);
  }
  return value;
}

BracketValue bracket_rel(const Diagram& d) {
  if (d.component_count() != 2) throw Error(ErrorCode::NotTwoComponents, std::to_string(d.component_count()));
  const auto even = even_crossings(d, 1);
  check_state_count(even.size());
  auto on_l = [](const Diagram& s, int x, int y) {
    return s.is_pure(x) && s.is_pure(y) && s.occurrences(x)[0].component == 1 && s.occurrences(y)[0].component == 1;
  };
  BracketValue value{Space::G2rel, {}};
  for (unsigned long state = 0; state < (1UL << even.size()); ++state) {
    const Diagram s = smooth_state(d, even, state);
    if (s.component_count() != 2) continue;
    value.terms.toggle(canonical_text(reduce_r2(s, on_l), Symmetry::ordered()));
  }
  return value;
}

BracketValue smoothing_bracket(const Diagram& d) {
  if (d.component_count() > 2) throw Error(ErrorCode::InvalidArgument, std::to_string(d.component_count()));
  std::vector<std::string> pure;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (d.is_pure(x)) pure.push_back(d.label(x));
  }
  check_state_count(pure.size());
  BracketValue value{Space::G, {}};
  for (unsigned long state = 0; state < (1UL << pure.size()); ++state) {
    if (auto term = normalize_G(smooth_state(d, pure, state))) value.terms.toggle(*term);
  }
  return value;
}

BracketValue bracket(const Diagram& d, Space space) {
  switch (space) {
    case Space::G: return bracket_full(d);
    case Space::G1: return bracket_knot(d);
    case Space::G2rel: return bracket_rel(d);
  }
  return {};
}

}  // namespace freeknots
