#include "freeknots/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace freeknots {

std::string_view to_string(CrossingKind kind) noexcept {
  return kind == CrossingKind::pure ? "pure" : "mixed";
}

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '/' || c == '(' || c == ')') return false;
  }
  return true;
}

Diagram::Diagram(std::vector<Word> components, std::vector<std::string> labels)
    : components_(std::move(components)), labels_(std::move(labels)) {
  const auto n = labels_.size();
  std::vector<int> seen(n, 0);
  occurrences_.assign(n, {});
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& w = components_[c];
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int x = w[i];
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw Error(ErrorCode::UnknownCrossing, std::to_string(x), "crossing id out of range");
      }
      if (seen[x] < 2) occurrences_[x][seen[x]] = Position{static_cast<int>(c), static_cast<int>(i)};
      ++seen[x];
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x] != 2) throw Error(ErrorCode::OccurrenceCountNotTwo, labels_[x]);
  }
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw Error(ErrorCode::MalformedToken, *it, "duplicate crossing label");
  }
}

Diagram Diagram::compact(std::vector<Word> components, const std::vector<std::string>& labels) {
  std::vector<int> remap(labels.size(), -1);
  std::vector<std::string> next_labels;
  for (auto& w : components) {
    for (auto& x : w) {
      if (remap.at(static_cast<std::size_t>(x)) < 0) {
        remap[x] = static_cast<int>(next_labels.size());
        next_labels.push_back(labels[x]);
      }
      x = remap[x];
    }
  }
  return Diagram(std::move(components), std::move(next_labels));
}

std::optional<int> Diagram::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

int Diagram::crossing(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw Error(ErrorCode::UnknownCrossing, std::string(label));
}

int Diagram::mixed_count(int a, int b) const {
  int count = 0;
  for (const auto& occ : occurrences_) {
    if ((occ[0].component == a && occ[1].component == b) || (occ[0].component == b && occ[1].component == a)) {
      ++count;
    }
  }
  return count;
}

int Diagram::mixed_count_total() const {
  int count = 0;
  for (const auto& occ : occurrences_) count += occ[0].component != occ[1].component;
  return count;
}

std::string Diagram::str() const {
  std::string out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c > 0) out += " / ";
    if (components_[c].empty()) {
      out += "()";
      continue;
    }
    for (std::size_t i = 0; i < components_[c].size(); ++i) {
      if (i > 0) out += ' ';
      out += labels_[components_[c][i]];
    }
  }
  return out;
}

std::string serialize(const Diagram& d) { return d.str(); }

Diagram parse_gauss(std::string_view text) {
  std::vector<std::vector<std::string>> words;
  bool any_token = false;
  std::size_t start = 0;
  while (true) {
    const auto slash = text.find('/', start);
    const auto piece = text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    std::istringstream in{std::string(piece)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    words.push_back(std::move(tokens));
    any_token = any_token || !words.back().empty();
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (!any_token) {
    if (words.size() == 1) throw Error(ErrorCode::EmptyInputIsZeroComponents, "");
    throw Error(ErrorCode::MalformedToken, "", "empty component; write () for a crossing-free circle");
  }

  std::vector<std::string> labels;
  std::map<std::string, int> ids;
  std::vector<int> count;
  std::vector<Word> components;
  for (const auto& tokens : words) {
    Word w;
    if (tokens.empty()) throw Error(ErrorCode::MalformedToken, "", "empty component; write () for a crossing-free circle");
    if (tokens.size() == 1 && tokens[0] == "()") {
      components.push_back(std::move(w));
      continue;
    }
    for (const auto& tok : tokens) {
      if (!is_valid_label(tok)) throw Error(ErrorCode::MalformedToken, tok);
      auto [it, inserted] = ids.emplace(tok, static_cast<int>(labels.size()));
      if (inserted) {
        labels.push_back(tok);
        count.push_back(0);
      }
      ++count[it->second];
      w.push_back(it->second);
    }
    components.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (count[i] != 2) throw Error(ErrorCode::OccurrenceCountNotTwo, labels[i]);
  }
  return Diagram(std::move(components), std::move(labels));
}

std::map<std::string, CrossingKind> classify_crossings(const Diagram& d) {
  std::map<std::string, CrossingKind> out;
  for (int x = 0; x < d.crossing_count(); ++x) out.emplace(d.label(x), d.kind(x));
  return out;
}

std::pair<Half, Half> halves(const Diagram& d, int crossing) {
  if (!d.is_pure(crossing)) throw Error(ErrorCode::NotPure, d.label(crossing));
  const auto& occ = d.occurrences(crossing);
  const auto& w = d.component(occ[0].component);
  const int n = static_cast<int>(w.size());
  const int i = occ[0].index;
  const int j = occ[1].index;
  Half first;
  Half second;
  for (int k = i + 1; k < j; ++k) first.passages.push_back(w[k]);
  for (int k = j + 1; k < n + i; ++k) second.passages.push_back(w[k % n]);
  return {std::move(first), std::move(second)};
}

std::string canonical_label(int index) {
  std::string out;
  int n = index + 1;
  while (n > 0) {
    --n;
    out.insert(out.begin(), static_cast<char>('a' + n % 26));
    n /= 26;
  }
  return out;
}

namespace {

constexpr int kSeparator = -1;

// Branch-and-bound minimization of the relabeled encoding over component
// order, rotations and reflections. The encoding lists each component's
// relabeled word followed by kSeparator; new labels are assigned in
// first-appearance order.
class Canonicalizer {
 public:
  Canonicalizer(const Diagram& d, Symmetry symmetry)
      : d_(d),
        fixed_(std::min(symmetry.fixed_components, d.component_count())),
        oriented_(symmetry.oriented),
        relabel_(static_cast<std::size_t>(d.crossing_count()), -1),
        used_(static_cast<std::size_t>(d.component_count()), false) {
    std::size_t total = 0;
    for (const auto& w : d.components()) total += w.size() + 1;
    current_.reserve(total);
  }

  std::vector<int> run() {
    search(0);
    return best_;
  }

  const std::vector<int>& order() const { return best_order_; }

 private:
  // Appends one value; returns false when the branch is worse than best.
  bool push(int value) {
    const std::size_t pos = current_.size();
    current_.push_back(value);
    if (!has_best_ || less_) return true;
    if (value < best_[pos]) {
      less_ = true;
      less_at_ = pos;
      return true;
    }
    return value == best_[pos];
  }

  void pop_to(std::size_t size) {
    current_.resize(size);
    if (less_ && less_at_ >= size) less_ = false;
  }

  void search(int slot) {
    const int k = d_.component_count();
    if (slot == k) {
      if (!has_best_ || less_) {
        best_ = current_;
        best_order_ = order_;
        has_best_ = true;
        less_ = false;
      }
      return;
    }
    const int first = slot < fixed_ ? slot : 0;
    const int last = slot < fixed_ ? slot + 1 : k;
    for (int c = first; c < last; ++c) {
      if (used_[c]) continue;
      if (slot >= fixed_ && skip_duplicate(c)) continue;
      used_[c] = true;
      order_.push_back(c);
      place(slot, c);
      order_.pop_back();
      used_[c] = false;
    }
  }

  // Two unused empty words are interchangeable.
  bool skip_duplicate(int c) const {
    if (!d_.component(c).empty()) return false;
    for (int e = 0; e < c; ++e) {
      if (!used_[e] && e >= fixed_ && d_.component(e).empty()) return true;
    }
    return false;
  }

  void place(int slot, int c) {
    const auto& w = d_.component(c);
    const int n = static_cast<int>(w.size());
    const std::size_t base = current_.size();
    if (n == 0) {
      if (push(kSeparator)) search(slot + 1);
      pop_to(base);
      return;
    }
    const int directions = oriented_ ? 1 : 2;
    std::vector<int> assigned;
    assigned.reserve(static_cast<std::size_t>(n));
    for (int dir = 0; dir < directions; ++dir) {
      for (int r = 0; r < n; ++r) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          const int idx = dir == 0 ? (r + i) % n : ((r - i) % n + n) % n;
          const int x = w[idx];
          if (relabel_[x] < 0) {
            relabel_[x] = next_label_++;
            assigned.push_back(x);
          }
          ok = push(relabel_[x]);
        }
        if (ok && push(kSeparator)) search(slot + 1);
        pop_to(base);
        for (int x : assigned) relabel_[x] = -1;
        next_label_ -= static_cast<int>(assigned.size());
        assigned.clear();
      }
    }
  }

  const Diagram& d_;
  int fixed_;
  bool oriented_;
  std::vector<int> relabel_;
  std::vector<bool> used_;
  int next_label_ = 0;
  std::vector<int> current_;
  std::vector<int> best_;
  std::vector<int> order_;
  std::vector<int> best_order_;
  bool has_best_ = false;
  bool less_ = false;
  std::size_t less_at_ = 0;
};

}  // namespace

std::string canonical_text(const Diagram& d, Symmetry symmetry) {
  if (d.component_count() == 0) return "";
  const auto code = Canonicalizer(d, symmetry).run();
  std::string out;
  bool fresh_component = true;
  bool empty_component = true;
  for (int v : code) {
    if (v == kSeparator) {
      if (empty_component) out += "()";
      out += " / ";
      fresh_component = true;
      empty_component = true;
      continue;
    }
    if (!fresh_component) out += ' ';
    out += canonical_label(v);
    fresh_component = false;
    empty_component = false;
  }
  out.resize(out.size() - 3);
  return out;
}

CanonicalForm canonicalize(const Diagram& d, Symmetry symmetry) { return CanonicalForm{canonical_text(d, symmetry)}; }

CanonicalForm canonicalize(const Diagram& d, bool ordered) {
  return canonicalize(d, ordered ? Symmetry::ordered() : Symmetry::unordered());
}

Diagram canonical_diagram(const Diagram& d, Symmetry symmetry) {
  if (d.component_count() == 0) return d;
  return parse_gauss(canonical_text(d, symmetry));
}

std::vector<std::vector<int>> mixed_connectivity_groups(const Diagram& d) {
  const int k = d.component_count();
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& occ = d.occurrences(x);
    parent[root(occ[0].component)] = root(occ[1].component);
  }
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < k; ++c) groups[root(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_split_diagram(const Diagram& d) {
  if (d.component_count() < 2) throw Error(ErrorCode::FewerThanTwoComponents, std::to_string(d.component_count()));
  return mixed_connectivity_groups(d).size() >= 2;
}

std::vector<std::pair<int, int>> FramedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < static_cast<int>(mate.size()); ++h) {
    if (h < mate[h]) out.emplace_back(h, mate[h]);
  }
  return out;
}

std::vector<int> FramedGraph::edge_of_half_edge() const {
  std::vector<int> out(mate.size(), -1);
  int e = 0;
  for (int h = 0; h < static_cast<int>(mate.size()); ++h) {
    if (h < mate[h]) {
      out[h] = e;
      out[mate[h]] = e;
      ++e;
    }
  }
  return out;
}

// Occurrence k of crossing x has in-half 4x+2k and out-half 4x+2k+1; the edge
// from word position i to i+1 joins out(i) with in(i+1).
FramedGraph FramedGraph::from_diagram(const Diagram& d) {
  FramedGraph g;
  g.vertex_count = d.crossing_count();
  g.labels = d.labels();
  g.mate.assign(static_cast<std::size_t>(4 * g.vertex_count), -1);
  auto half = [&](Position p, bool out) {
    const int x = d.at(p);
    const int k = d.occurrences(x)[0] == p ? 0 : 1;
    return 4 * x + 2 * k + (out ? 1 : 0);
  };
  for (int c = 0; c < d.component_count(); ++c) {
    const int n = d.component_length(c);
    if (n == 0) {
      ++g.free_circles;
      continue;
    }
    for (int i = 0; i < n; ++i) {
      const int from = half(Position{c, i}, true);
      const int to = half(Position{c, (i + 1) % n}, false);
      g.mate[from] = to;
      g.mate[to] = from;
    }
  }
  return g;
}

Traversal traverse(const FramedGraph& g) {
  Traversal t;
  const int halves_total = static_cast<int>(g.mate.size());
  t.component_of_half_edge.assign(g.mate.size(), -1);
  // Odd half-edges first so that graphs built from diagrams keep the written
  // orientation.
  std::vector<int> starts;
  for (int h = 1; h < halves_total; h += 2) starts.push_back(h);
  for (int h = 0; h < halves_total; h += 2) starts.push_back(h);
  for (int start : starts) {
    if (t.component_of_half_edge[start] >= 0) continue;
    const int comp = static_cast<int>(t.words.size());
    Word w;
    int leave = start;
    do {
      const int arrive = g.mate[leave];
      t.component_of_half_edge[leave] = comp;
      t.component_of_half_edge[arrive] = comp;
      w.push_back(FramedGraph::vertex_of(arrive));
      leave = FramedGraph::opposite(arrive);
    } while (leave != start);
    t.words.push_back(std::move(w));
  }
  return t;
}

Diagram FramedGraph::to_diagram() const {
  auto t = traverse(*this);
  for (int i = 0; i < free_circles; ++i) t.words.emplace_back();
  return Diagram::compact(std::move(t.words), labels);
}

UnicursalComponents unicursal_components(const FramedGraph& g) {
  const auto edges = g.edges();
  const auto edge_of = g.edge_of_half_edge();
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int h = 0; h < static_cast<int>(g.mate.size()); h += 2) {
    parent[root(edge_of[h])] = root(edge_of[h + 1]);
  }
  std::map<int, std::vector<int>> classes;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) classes[root(e)].push_back(e);
  UnicursalComponents out;
  for (auto& [r, members] : classes) out.members.push_back(std::move(members));
  std::sort(out.members.begin(), out.members.end());
  for (int i = 0; i < g.free_circles; ++i) out.members.emplace_back();
  out.count = static_cast<int>(out.members.size());
  return out;
}

}  // namespace freeknots
