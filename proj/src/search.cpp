#include "freeknots/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "freeknots/bracket.hpp"

namespace freeknots {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::distinct: return "distinct";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(SplitStatus s) noexcept {
  switch (s) {
    case SplitStatus::nonsplit: return "nonsplit";
    case SplitStatus::split: return "split";
    case SplitStatus::unknown: return "unknown";
  }
  return "?";
}

SearchOutcome breadth_first_search(const Diagram& start, Symmetry symmetry, const SearchBudget& budget, const Goal& goal,
                                   const MoveFilter& filter) {
  struct Node {
    Diagram diagram;
    int parent;
    MoveApplication move;
  };
  std::vector<Node> nodes{{start, -1, {}}};
  std::unordered_set<std::string> visited;
  const auto start_key = canonical_text(start, symmetry);
  visited.insert(start_key);

  auto path_to = [&](int idx) {
    std::vector<MoveApplication> path;
    for (; nodes[idx].parent >= 0; idx = nodes[idx].parent) path.push_back(nodes[idx].move);
    std::reverse(path.begin(), path.end());
    return path;
  };

  SearchOutcome out;
  out.reached = start;
  if (goal(start, start_key)) {
    out.path = std::vector<MoveApplication>{};
    out.states = 1;
    return out;
  }

  const MoveCaps caps{true, budget.max_crossings, SIZE_MAX};
  std::vector<int> frontier{0};
  bool truncated = false;
  for (int depth = 0; depth < budget.max_depth && !frontier.empty() && !truncated; ++depth) {
    std::vector<std::pair<std::string, Node>> level;
    for (int idx : frontier) {
      const Diagram current = nodes[idx].diagram;
      for (auto& m : enumerate_moves(current, caps)) {
        if (filter && !filter(current, m)) continue;
        Diagram next = apply_move(current, m);
        auto key = canonical_text(next, symmetry);
        if (visited.count(key)) continue;
        if (visited.size() >= budget.max_states) {
          truncated = true;
          break;
        }
        visited.insert(key);
        level.emplace_back(std::move(key), Node{std::move(next), idx, std::move(m)});
      }
      if (truncated) break;
    }
    std::stable_sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    frontier.clear();
    for (auto& [key, node] : level) {
      nodes.push_back(std::move(node));
      const int idx = static_cast<int>(nodes.size()) - 1;
      if (goal(nodes[idx].diagram, key)) {
        out.path = path_to(idx);
        out.reached = nodes[idx].diagram;
        out.states = visited.size();
        return out;
      }
      frontier.push_back(idx);
    }
  }
  out.states = visited.size();
  out.exhausted = frontier.empty() && !truncated;
  return out;
}

Diagram replay(const Diagram& start, const std::vector<MoveApplication>& path) {
  Diagram d = start;
  for (const auto& m : path) d = apply_move(d, m);
  return d;
}

Diagram sublink(const Diagram& d, const std::vector<int>& components) {
  std::vector<bool> keep(static_cast<std::size_t>(d.component_count()), false);
  for (int c : components) keep.at(static_cast<std::size_t>(c)) = true;
  std::vector<Word> words;
  for (int c : components) {
    Word w;
    for (int x : d.component(c)) {
      const auto& occ = d.occurrences(x);
      if (keep[occ[0].component] && keep[occ[1].component]) w.push_back(x);
    }
    words.push_back(std::move(w));
  }
  return Diagram::compact(std::move(words), d.labels());
}

namespace {

constexpr int kMaxPureForInvariant = 16;

Diagram component_alone(const Diagram& d, int c) { return sublink(d, {c}); }

std::string mixed_parity_signature(const Diagram& d, int fixed) {
  const int k = d.component_count();
  fixed = std::min(fixed, k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> parity(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) parity[a][b] = parity[b][a] = d.mixed_count(a, b) % 2;
  }
  std::string best;
  do {
    std::string code;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) code += static_cast<char>('0' + parity[perm[a]][perm[b]]);
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin() + fixed, perm.end()));
  return best;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

int pure_count(const Diagram& d) {
  int n = 0;
  for (int x = 0; x < d.crossing_count(); ++x) n += d.is_pure(x);
  return n;
}

// Smoothing bracket of a two-component link, shrunk by descending moves
// first; empty when still too large.
std::optional<BracketValue> affordable_smoothing_bracket(const Diagram& d) {
  Diagram small = d;
  if (pure_count(small) > kMaxPureForInvariant) small = parse_gauss(reduce_descending(d, Symmetry::unordered()));
  if (pure_count(small) > kMaxPureForInvariant) return std::nullopt;
  return smoothing_bracket(small);
}

}  // namespace

namespace {

using Invariants = std::vector<std::pair<std::string, std::string>>;

Invariants cheap_invariants(const Diagram& d, Symmetry symmetry) {
  Invariants out;
  const int k = d.component_count();
  const int fixed = std::min(symmetry.fixed_components, k);
  out.emplace_back("component-count", std::to_string(k));
  if (k >= 2) out.emplace_back("mixed-parity", mixed_parity_signature(d, fixed));

  std::vector<std::string> fixed_parts;
  std::vector<std::string> free_parts;
  for (int c = 0; c < k; ++c) {
    const Diagram alone = component_alone(d, c);
    std::string value = "{" + join(bracket_knot(alone).terms.sorted(), ", ") + "}";
    (c < fixed ? fixed_parts : free_parts).push_back(std::move(value));
  }
  std::sort(free_parts.begin(), free_parts.end());
  fixed_parts.insert(fixed_parts.end(), free_parts.begin(), free_parts.end());
  out.emplace_back("component-brackets", join(fixed_parts, " ; "));
  return out;
}

Invariants costly_invariants(const Diagram& d) {
  Invariants out;
  if (d.component_count() == 2) {
    if (const auto b = affordable_smoothing_bracket(d)) {
      out.emplace_back("smoothing-bracket", "{" + join(b->terms.sorted(), ", ") + "}");
    }
  }
  return out;
}

// Name of the first invariant present on both sides with different values.
std::string first_difference(const Invariants& a, const Invariants& b) {
  for (const auto& [name, value] : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const auto& p) { return p.first == name; });
    if (it != b.end() && it->second != value) return name;
  }
  return {};
}

}  // namespace

std::vector<std::pair<std::string, std::string>> link_invariants(const Diagram& d, Symmetry symmetry) {
  auto out = cheap_invariants(d, symmetry);
  for (auto& entry : costly_invariants(d)) out.push_back(std::move(entry));
  return out;
}

SearchVerdict bounded_equiv(const Diagram& a, const Diagram& b, const SearchBudget& budget, Symmetry symmetry) {
  SearchVerdict v;
  const auto ca = canonical_text(a, symmetry);
  const auto cb = canonical_text(b, symmetry);
  const bool a_first = ca <= cb;
  v.source = a_first ? a : b;
  v.target = a_first ? cb : ca;
  if (ca == cb) {
    v.outcome = Verdict::equivalent;
    return v;
  }
  auto differs = first_difference(cheap_invariants(a, symmetry), cheap_invariants(b, symmetry));
  if (differs.empty()) differs = first_difference(costly_invariants(a), costly_invariants(b));
  if (!differs.empty()) {
    v.outcome = Verdict::distinct;
    v.invariant = differs;
    return v;
  }
  if (reduce_descending(a, symmetry) == reduce_descending(b, symmetry)) {
    v.outcome = Verdict::equivalent;
    v.invariant = "descent";
    return v;
  }
  const auto outcome = breadth_first_search(
      v.source, symmetry, budget, [&](const Diagram&, const std::string& key) { return key == v.target; });
  v.states = outcome.states;
  if (outcome.path) {
    v.outcome = Verdict::equivalent;
    v.path = *outcome.path;
  }
  return v;
}

namespace {

// Components joined by an odd number of mixed crossings cannot be separated:
// the parity of each pairwise mixed count is invariant under all moves.
std::vector<int> odd_pair_groups(const Diagram& d) {
  const int k = d.component_count();
  std::vector<int> group(static_cast<std::size_t>(k));
  std::iota(group.begin(), group.end(), 0);
  auto find = [&](int a) {
    while (group[a] != a) a = group[a] = group[group[a]];
    return a;
  };
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (d.mixed_count(a, b) % 2 == 1) group[find(a)] = find(b);
    }
  }
  for (int a = 0; a < k; ++a) group[a] = find(a);
  return group;
}

bool has_odd_partner(const Diagram& d, int c) {
  for (int other = 0; other < d.component_count(); ++other) {
    if (other != c && d.mixed_count(c, other) % 2 == 1) return true;
  }
  return false;
}

// Non-increasing moves first, which is cheap and usually enough, then the
// full budgeted search.
SearchOutcome find_with_descent(const Diagram& d, const SearchBudget& budget, const Goal& goal) {
  const SearchBudget descent{d.crossing_count(), 4 * d.crossing_count() + 4, budget.max_states};
  auto outcome = breadth_first_search(d, Symmetry::unordered(), descent, goal, [](const Diagram&, const MoveApplication& m) {
    return m.direction != MoveDirection::increasing;
  });
  if (outcome.path || budget.max_depth == 0) return outcome;
  auto full = breadth_first_search(d, Symmetry::unordered(), budget, goal);
  full.states += outcome.states;
  return full;
}

bool has_free_circle(const Diagram& d) {
  return std::any_of(d.components().begin(), d.components().end(), [](const Word& w) { return w.empty(); });
}

}  // namespace

SplitVerdict certified_nonsplit(const Diagram& d, const SearchBudget& budget) {
  if (d.component_count() < 2) throw Error(ErrorCode::FewerThanTwoComponents, std::to_string(d.component_count()));
  SplitVerdict v;
  if (is_split_diagram(d)) {
    v.status = SplitStatus::split;
    v.certificate = "split-diagram";
    return v;
  }
  auto groups = odd_pair_groups(d);
  auto connected = [&] { return std::all_of(groups.begin(), groups.end(), [&](int g) { return g == groups[0]; }); };
  if (connected()) {
    v.status = SplitStatus::nonsplit;
    v.certificate = "mixed-parity";
    return v;
  }
  // A split of the link splits every two-component sublink across it.
  const int k = d.component_count();
  for (int a = 0; a < k && !connected(); ++a) {
    for (int b = a + 1; b < k && !connected(); ++b) {
      if (groups[a] == groups[b] || d.mixed_count(a, b) == 0) continue;
      const auto pair = affordable_smoothing_bracket(sublink(d, {a, b}));
      if (!pair) continue;
      const auto& terms = pair->terms.terms();
      if (std::all_of(terms.begin(), terms.end(), [](const std::string& t) { return is_split_diagram(parse_gauss(t)); })) {
        continue;
      }
      const int from = groups[b];
      for (auto& g : groups) {
        if (g == from) g = groups[a];
      }
    }
  }
  if (connected()) {
    v.status = SplitStatus::nonsplit;
    v.certificate = "pair-brackets";
    return v;
  }
  const auto outcome =
      find_with_descent(d, budget, [](const Diagram& x, const std::string&) { return is_split_diagram(x); });
  v.states = outcome.states;
  if (outcome.path) {
    v.status = SplitStatus::split;
    v.certificate = "search";
    v.path = *outcome.path;
  }
  return v;
}

SplitVerdict trivial_component_split(const Diagram& d, const SearchBudget& budget) {
  if (d.component_count() < 2) throw Error(ErrorCode::FewerThanTwoComponents, std::to_string(d.component_count()));
  SplitVerdict v;
  if (has_free_circle(d)) {
    v.status = SplitStatus::split;
    v.certificate = "free-circle";
    return v;
  }
  // A trivial split component stays one in every sublink containing it,
  // which makes the smoothing bracket of such a pair zero.
  const int k = d.component_count();
  bool all_excluded = true;
  bool used_pairs = false;
  for (int c = 0; c < k && all_excluded; ++c) {
    if (has_odd_partner(d, c)) continue;
    const auto alone = bracket_knot(component_alone(d, c));
    if (!(alone.terms.size() == 1 && alone.terms.contains("()"))) continue;
    bool excluded = false;
    for (int other = 0; other < k && !excluded; ++other) {
      if (other == c || d.mixed_count(c, other) == 0) continue;
      const auto pair = affordable_smoothing_bracket(sublink(d, {c, other}));
      excluded = pair && !pair->zero();
    }
    used_pairs = used_pairs || excluded;
    all_excluded = excluded;
  }
  if (all_excluded) {
    v.status = SplitStatus::nonsplit;
    v.certificate = used_pairs ? "pair-brackets" : "components-nontrivial-or-odd-linked";
    return v;
  }
  const auto outcome =
      find_with_descent(d, budget, [](const Diagram& x, const std::string&) { return has_free_circle(x); });
  v.states = outcome.states;
  if (outcome.path) {
    v.status = SplitStatus::split;
    v.certificate = "search";
    v.path = *outcome.path;
  }
  return v;
}

std::string reduce_descending(const Diagram& d, Symmetry symmetry, std::size_t max_states) {
  std::unordered_set<std::string> visited;
  std::vector<Diagram> queue{d};
  auto key = canonical_text(d, symmetry);
  visited.insert(key);
  int best_count = d.crossing_count();
  std::string best = key;
  const MoveCaps caps{false, 0, 0};
  for (std::size_t i = 0; i < queue.size() && visited.size() < max_states; ++i) {
    for (const auto& m : enumerate_moves(queue[i], caps)) {
      Diagram next = apply_move(queue[i], m);
      auto k = canonical_text(next, symmetry);
      if (!visited.insert(k).second) continue;
      if (next.crossing_count() < best_count || (next.crossing_count() == best_count && k < best)) {
        best_count = next.crossing_count();
        best = k;
      }
      queue.push_back(std::move(next));
    }
  }
  return best;
}

}  // namespace freeknots
