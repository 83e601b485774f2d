#include "freeknots/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace freeknots {

std::string_view to_string(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::R1: return "R1";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

std::string_view to_string(MoveDirection direction) noexcept {
  switch (direction) {
    case MoveDirection::increasing: return "increasing";
    case MoveDirection::decreasing: return "decreasing";
    case MoveDirection::neutral: return "neutral";
  }
  return "?";
}

std::string describe(const MoveApplication& m) {
  std::string out(to_string(m.kind));
  out += m.direction == MoveDirection::increasing ? "+" : m.direction == MoveDirection::decreasing ? "-" : "";
  out += " {";
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    if (i > 0) out += ",";
    out += m.labels[i];
  }
  out += "} at";
  for (const auto& p : m.site) out += " (" + std::to_string(p.component) + "," + std::to_string(p.index) + ")";
  if (m.reversed) out += " reversed";
  return out;
}

namespace {

struct Pair {
  Position start;
  int second_index;  // index of the second occurrence in the same component
  int x;             // crossing at start
  int y;             // crossing after start
};

std::vector<Pair> adjacent_pairs(const Diagram& d) {
  std::vector<Pair> out;
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& w = d.component(c);
    const int n = static_cast<int>(w.size());
    if (n < 2) continue;
    // A word of length two has a single pair of positions.
    const int starts = n == 2 ? 1 : n;
    for (int p = 0; p < starts; ++p) out.push_back(Pair{Position{c, p}, (p + 1) % n, w[p], w[(p + 1) % n]});
  }
  return out;
}

bool disjoint(const Pair& a, const Pair& b) {
  if (a.start.component != b.start.component) return true;
  const int a0 = a.start.index, a1 = a.second_index, b0 = b.start.index, b1 = b.second_index;
  return a0 != b0 && a0 != b1 && a1 != b0 && a1 != b1;
}

bool same_set(const Pair& p, int a, int b) { return (p.x == a && p.y == b) || (p.x == b && p.y == a); }

Pair pair_at(const Diagram& d, Position start) {
  if (start.component < 0 || start.component >= d.component_count()) {
    throw Error(ErrorCode::InvalidSite, std::to_string(start.component), "no such component");
  }
  const auto& w = d.component(start.component);
  const int n = static_cast<int>(w.size());
  if (n < 2 || start.index < 0 || start.index >= n) {
    throw Error(ErrorCode::InvalidSite, std::to_string(start.index), "position out of range");
  }
  return Pair{start, (start.index + 1) % n, w[start.index], w[(start.index + 1) % n]};
}

MoveApplication make_decreasing(const Diagram& d, MoveKind kind, std::vector<Position> site, std::vector<int> crossings) {
  MoveApplication m;
  m.kind = kind;
  m.direction = kind == MoveKind::R3 ? MoveDirection::neutral : MoveDirection::decreasing;
  m.site = std::move(site);
  for (int x : crossings) m.labels.push_back(d.label(x));
  return m;
}

// Validates the pattern of a decreasing or neutral move and returns its pairs.
std::vector<Pair> checked_pairs(const Diagram& d, const MoveApplication& m) {
  const std::size_t expected = m.kind == MoveKind::R1 ? 1 : m.kind == MoveKind::R2 ? 2 : 3;
  if (m.site.size() != expected) throw Error(ErrorCode::InvalidSite, describe(m), "wrong number of pairs");
  std::vector<Pair> pairs;
  for (const auto& p : m.site) pairs.push_back(pair_at(d, p));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (!disjoint(pairs[i], pairs[j])) throw Error(ErrorCode::InvalidSite, describe(m), "overlapping pairs");
    }
  }
  switch (m.kind) {
    case MoveKind::R1:
      if (pairs[0].x != pairs[0].y) throw Error(ErrorCode::InvalidSite, describe(m), "not a kink");
      break;
    case MoveKind::R2:
      if (pairs[0].x == pairs[0].y || !same_set(pairs[1], pairs[0].x, pairs[0].y)) {
        throw Error(ErrorCode::InvalidSite, describe(m), "not a bigon");
      }
      break;
    case MoveKind::R3: {
      const int a = pairs[0].x, b = pairs[0].y;
      if (a == b) throw Error(ErrorCode::InvalidSite, describe(m), "not a triangle");
      int c = -1;
      for (int v : {pairs[1].x, pairs[1].y}) {
        if (v != a && v != b) c = v;
      }
      if (c < 0 || pairs[1].x == pairs[1].y) throw Error(ErrorCode::InvalidSite, describe(m), "not a triangle");
      const bool second_ab = same_set(pairs[1], a, c) || same_set(pairs[1], b, c);
      const int other = same_set(pairs[1], a, c) ? b : a;
      if (!second_ab || !same_set(pairs[2], other, c)) throw Error(ErrorCode::InvalidSite, describe(m), "not a triangle");
      break;
    }
  }
  return pairs;
}

}  // namespace

std::vector<int> involved_crossings(const Diagram& d, const MoveApplication& m) {
  std::set<int> out;
  if (m.direction == MoveDirection::increasing) return {};
  for (const auto& p : checked_pairs(d, m)) {
    out.insert(p.x);
    out.insert(p.y);
  }
  return {out.begin(), out.end()};
}

std::vector<MoveApplication> decreasing_r2_moves(const Diagram& d) {
  std::vector<MoveApplication> out;
  const auto pairs = adjacent_pairs(d);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (p.x == p.y) continue;
    const auto key = std::minmax(p.x, p.y);
    if (seen.count(key)) continue;
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (same_set(pairs[j], p.x, p.y) && disjoint(p, pairs[j])) {
        seen.insert(key);
        out.push_back(make_decreasing(d, MoveKind::R2, {p.start, pairs[j].start}, {p.x, p.y}));
        break;
      }
    }
  }
  return out;
}

std::vector<MoveApplication> r3_moves(const Diagram& d) {
  std::vector<MoveApplication> out;
  const auto pairs = adjacent_pairs(d);
  std::map<std::pair<int, int>, std::vector<int>> by_set;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    if (pairs[i].x != pairs[i].y) by_set[std::minmax(pairs[i].x, pairs[i].y)].push_back(i);
  }
  std::set<std::vector<int>> seen;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    const auto& pi = pairs[i];
    if (pi.x == pi.y) continue;
    const int a = pi.x, b = pi.y;
    for (int j = 0; j < static_cast<int>(pairs.size()); ++j) {
      const auto& pj = pairs[j];
      if (j == i || pj.x == pj.y || !disjoint(pi, pj)) continue;
      int c = -1;
      if (pj.x == a && pj.y != b) c = pj.y;
      if (pj.y == a && pj.x != b) c = pj.x;
      if (c < 0) continue;
      auto it = by_set.find(std::minmax(b, c));
      if (it == by_set.end()) continue;
      for (int k : it->second) {
        if (k == i || k == j || !disjoint(pi, pairs[k]) || !disjoint(pj, pairs[k])) continue;
        std::vector<int> key{i, j, k};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        out.push_back(make_decreasing(d, MoveKind::R3, {pairs[key[0]].start, pairs[key[1]].start, pairs[key[2]].start},
                                      {a, b, c}));
      }
    }
  }
  return out;
}

std::vector<MoveApplication> decreasing_moves(const Diagram& d) {
  std::vector<MoveApplication> out;
  std::set<int> kinks;
  for (const auto& p : adjacent_pairs(d)) {
    if (p.x == p.y && kinks.insert(p.x).second) out.push_back(make_decreasing(d, MoveKind::R1, {p.start}, {p.x}));
  }
  for (auto& m : decreasing_r2_moves(d)) out.push_back(std::move(m));
  return out;
}

std::vector<std::string> fresh_labels(const Diagram& d, int count) {
  std::vector<std::string> out;
  std::set<std::string> taken(d.labels().begin(), d.labels().end());
  for (int k = d.crossing_count() + 1; static_cast<int>(out.size()) < count; ++k) {
    auto name = std::to_string(k);
    if (!taken.count(name)) out.push_back(std::move(name));
  }
  return out;
}

std::vector<MoveApplication> enumerate_moves(const Diagram& d, const MoveCaps& caps) {
  auto out = decreasing_moves(d);
  for (auto& m : r3_moves(d)) out.push_back(std::move(m));
  if (!caps.increasing) return out;

  std::vector<Position> gaps;
  for (int c = 0; c < d.component_count(); ++c) {
    const int n = std::max(1, d.component_length(c));
    for (int g = 0; g < n; ++g) gaps.push_back(Position{c, g});
  }
  std::size_t added = 0;
  if (d.crossing_count() + 1 <= caps.max_crossings) {
    const auto label = fresh_labels(d, 1);
    for (const auto& g : gaps) {
      if (added >= caps.max_increasing) return out;
      out.push_back(MoveApplication{MoveKind::R1, MoveDirection::increasing, {g}, false, label});
      ++added;
    }
  }
  if (d.crossing_count() + 2 <= caps.max_crossings) {
    const auto labels = fresh_labels(d, 2);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      for (std::size_t j = i; j < gaps.size(); ++j) {
        for (bool reversed : {false, true}) {
          if (added >= caps.max_increasing) return out;
          out.push_back(MoveApplication{MoveKind::R2, MoveDirection::increasing, {gaps[i], gaps[j]}, reversed, labels});
          ++added;
        }
      }
    }
  }
  return out;
}

namespace {

Diagram apply_increasing(const Diagram& d, const MoveApplication& m) {
  const std::size_t expected = m.kind == MoveKind::R1 ? 1 : 2;
  if (m.kind == MoveKind::R3 || m.site.size() != expected || m.labels.size() != expected) {
    throw Error(ErrorCode::InvalidSite, describe(m), "malformed increasing move");
  }
  auto labels = d.labels();
  std::vector<int> ids;
  for (const auto& l : m.labels) {
    if (!is_valid_label(l) || d.find(l) || std::count(m.labels.begin(), m.labels.end(), l) != 1) {
      throw Error(ErrorCode::InvalidSite, l, "new crossing label is invalid or taken");
    }
    ids.push_back(static_cast<int>(labels.size()));
    labels.push_back(l);
  }
  for (const auto& g : m.site) {
    if (g.component < 0 || g.component >= d.component_count() || g.index < 0 ||
        g.index >= std::max(1, d.component_length(g.component))) {
      throw Error(ErrorCode::InvalidSite, describe(m), "gap out of range");
    }
  }
  auto words = d.components();
  auto insert = [&](Position g, std::vector<int> seq) {
    auto& w = words[g.component];
    w.insert(w.begin() + g.index, seq.begin(), seq.end());
  };
  if (m.kind == MoveKind::R1) {
    insert(m.site[0], {ids[0], ids[0]});
  } else {
    const int a = ids[0], b = ids[1];
    std::vector<int> second = m.reversed ? std::vector<int>{b, a} : std::vector<int>{a, b};
    if (m.site[0] == m.site[1]) {
      insert(m.site[0], {a, b, second[0], second[1]});
    } else if (m.site[0].component == m.site[1].component && m.site[0].index > m.site[1].index) {
      insert(m.site[0], {a, b});
      insert(m.site[1], second);
    } else {
      insert(m.site[1], second);
      insert(m.site[0], {a, b});
    }
  }
  return Diagram::compact(std::move(words), labels);
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveApplication& m) {
  if (m.direction == MoveDirection::increasing) return apply_increasing(d, m);
  if ((m.kind == MoveKind::R3) != (m.direction == MoveDirection::neutral)) {
    throw Error(ErrorCode::InvalidSite, describe(m), "direction does not match kind");
  }
  const auto pairs = checked_pairs(d, m);
  auto words = d.components();
  if (m.kind == MoveKind::R3) {
    for (const auto& p : pairs) {
      auto& w = words[p.start.component];
      std::swap(w[p.start.index], w[p.second_index]);
    }
    return Diagram(std::move(words), d.labels());
  }
  std::vector<std::vector<bool>> drop(words.size());
  for (std::size_t c = 0; c < words.size(); ++c) drop[c].assign(words[c].size(), false);
  for (const auto& p : pairs) {
    drop[p.start.component][p.start.index] = true;
    drop[p.start.component][p.second_index] = true;
  }
  for (std::size_t c = 0; c < words.size(); ++c) {
    Word kept;
    for (std::size_t i = 0; i < words[c].size(); ++i) {
      if (!drop[c][i]) kept.push_back(words[c][i]);
    }
    words[c] = std::move(kept);
  }
  return Diagram::compact(std::move(words), d.labels());
}

namespace {

// Gap in the reduced word where a deleted pair used to sit: the new index of
// the first surviving position after the pair, cyclically.
int gap_after(const std::vector<bool>& drop, int after) {
  const int n = static_cast<int>(drop.size());
  std::vector<int> new_index(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (!drop[i]) new_index[i] = next++;
  }
  for (int step = 1; step <= n; ++step) {
    const int q = (after + step) % n;
    if (!drop[q]) return new_index[q];
  }
  return 0;
}

}  // namespace

MoveApplication inverse_move(const Diagram& before, const MoveApplication& m) {
  if (m.kind == MoveKind::R3) {
    checked_pairs(before, m);
    return m;
  }
  if (m.direction == MoveDirection::increasing) {
    const auto after = apply_move(before, m);
    std::set<int> fresh;
    for (const auto& l : m.labels) fresh.insert(after.crossing(l));
    for (auto& cand : decreasing_moves(after)) {
      if (cand.kind != m.kind) continue;
      std::set<int> ids;
      for (const auto& l : cand.labels) ids.insert(after.crossing(l));
      if (ids == fresh) return cand;
    }
    throw Error(ErrorCode::InvalidSite, describe(m), "inserted crossings do not form a decreasing site");
  }

  const auto pairs = checked_pairs(before, m);
  std::vector<std::vector<bool>> drop(static_cast<std::size_t>(before.component_count()));
  for (int c = 0; c < before.component_count(); ++c) drop[c].assign(before.component(c).size(), false);
  for (const auto& p : pairs) {
    drop[p.start.component][p.start.index] = true;
    drop[p.start.component][p.second_index] = true;
  }
  auto gap_of = [&](const Pair& p) {
    return Position{p.start.component, gap_after(drop[p.start.component], p.second_index)};
  };
  MoveApplication inv;
  inv.kind = m.kind;
  inv.direction = MoveDirection::increasing;
  if (m.kind == MoveKind::R1) {
    inv.site = {gap_of(pairs[0])};
    inv.labels = {before.label(pairs[0].x)};
    return inv;
  }
  Pair first = pairs[0];
  Pair second = pairs[1];
  const Position g1 = gap_of(first);
  const Position g2 = gap_of(second);
  if (g1 == g2) {
    // Back to back: the pair that is immediately followed by the other goes first.
    const int n = before.component_length(first.start.component);
    if ((first.second_index + 1) % n != second.start.index) std::swap(first, second);
  }
  inv.site = {gap_of(first), gap_of(second)};
  inv.labels = {before.label(first.x), before.label(first.y)};
  inv.reversed = second.x != first.x;
  return inv;
}

}  // namespace freeknots
