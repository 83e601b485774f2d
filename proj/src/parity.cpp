#include "freeknots/parity.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace freeknots {

std::string_view to_string(ParityRule rule) noexcept { return rule == ParityRule::gaussian ? "gaussian" : "pL"; }

int gaussian_parity(const Diagram& d, int crossing) {
  if (!d.is_pure(crossing)) throw Error(ErrorCode::NotPure, d.label(crossing));
  const int c = d.occurrences(crossing)[0].component;
  if (d.component_length(c) % 2 != 0) throw Error(ErrorCode::OddComponentLength, std::to_string(c));
  return static_cast<int>(halves(d, crossing).first.passages.size() % 2);
}

std::map<int, int> gaussian_parities(const Diagram& d) {
  std::map<int, int> out;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (d.is_pure(x) && d.component_length(d.occurrences(x)[0].component) % 2 == 0) out[x] = gaussian_parity(d, x);
  }
  return out;
}

namespace {

void require_pL_link(const Diagram& d, int k_component) {
  if (d.component_count() != 2) throw Error(ErrorCode::NotTwoComponents, std::to_string(d.component_count()));
  if (k_component != 0 && k_component != 1) throw Error(ErrorCode::InvalidArgument, std::to_string(k_component));
  if (d.mixed_count_total() % 2 != 0) throw Error(ErrorCode::OddMixedCount, std::to_string(d.mixed_count_total()));
}

}  // namespace

int p_L(const Diagram& d, int crossing, int k_component) {
  require_pL_link(d, k_component);
  if (!d.is_pure(crossing) || d.occurrences(crossing)[0].component != k_component) {
    throw Error(ErrorCode::NotPure, d.label(crossing), "not a pure crossing of K");
  }
  int count = 0;
  for (int x : halves(d, crossing).first.passages) count += !d.is_pure(x);
  return count % 2;
}

std::map<int, int> p_L_parities(const Diagram& d, int k_component) {
  require_pL_link(d, k_component);
  std::map<int, int> out;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (d.is_pure(x) && d.occurrences(x)[0].component == k_component) out[x] = p_L(d, x, k_component);
  }
  return out;
}

ComponentGraph component_graph(const Diagram& d, int component) {
  ComponentGraph g;
  g.component = component;
  const auto& w = d.component(component);
  const int n = static_cast<int>(w.size());
  std::vector<int> stops;
  std::set<int> vertices;
  for (int i = 0; i < n; ++i) {
    if (d.is_pure(w[i])) {
      stops.push_back(i);
      vertices.insert(w[i]);
    }
  }
  g.vertices.assign(vertices.begin(), vertices.end());
  for (std::size_t s = 0; s < stops.size(); ++s) {
    const int from = stops[s];
    const int to = stops[(s + 1) % stops.size()];
    ComponentGraph::Edge e;
    e.from = w[from];
    e.to = w[to];
    e.start = from;
    const int span = ((to - from) % n + n) % n;
    for (int k = 1; k < (span == 0 ? n : span); ++k) e.markers.push_back(w[(from + k) % n]);
    g.edges.push_back(std::move(e));
  }
  return g;
}

CycleBasis cycle_basis(const Diagram& d, int l_component) {
  if (d.component_count() != 2) throw Error(ErrorCode::NotTwoComponents, std::to_string(d.component_count()));
  CycleBasis basis;
  basis.graph = component_graph(d, l_component);
  const auto& g = basis.graph;
  const int k_component = 1 - l_component;

  std::map<int, int> local;
  for (int v : g.vertices) local.emplace(v, static_cast<int>(local.size()));
  std::vector<int> parent(local.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::pair<int, int>>> tree_adj(local.size());  // (neighbour, edge)
  std::vector<int> non_tree;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const int a = local.at(g.edges[e].from);
    const int b = local.at(g.edges[e].to);
    if (root(a) != root(b)) {
      parent[root(a)] = root(b);
      basis.tree_edges.push_back(e);
      tree_adj[a].emplace_back(b, e);
      tree_adj[b].emplace_back(a, e);
    } else {
      non_tree.push_back(e);
    }
  }

  auto tree_path = [&](int from, int to) {
    std::vector<int> via(local.size(), -1);
    std::vector<int> prev(local.size(), -1);
    std::vector<int> queue{from};
    std::vector<bool> seen(local.size(), false);
    seen[from] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto [nb, e] : tree_adj[queue[i]]) {
        if (seen[nb]) continue;
        seen[nb] = true;
        via[nb] = e;
        prev[nb] = queue[i];
        queue.push_back(nb);
      }
    }
    std::vector<int> path;
    for (int v = to; v != from; v = prev[v]) path.push_back(via[v]);
    return path;
  };

  for (int e : non_tree) {
    Cycle cycle;
    cycle.edges = tree_path(local.at(g.edges[e].from), local.at(g.edges[e].to));
    cycle.edges.push_back(e);
    std::sort(cycle.edges.begin(), cycle.edges.end());
    for (int ce : cycle.edges) {
      for (int x : g.edges[ce].markers) {
        const auto& occ = d.occurrences(x);
        cycle.intersections += occ[0].component == k_component || occ[1].component == k_component;
      }
    }
    cycle.valid = cycle.intersections % 2 == 0;
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

int homology_parity(const Diagram& d, int crossing, const CycleBasis& basis, const Cycle& cycle) {
  if (!cycle.valid) throw Error(ErrorCode::InvalidCycle, std::to_string(cycle.intersections));
  const int k_component = 1 - basis.graph.component;
  if (!d.is_pure(crossing) || d.occurrences(crossing)[0].component != k_component) {
    throw Error(ErrorCode::NotPure, d.label(crossing), "not a pure crossing of K");
  }
  const auto first = halves(d, crossing).first.passages;
  const std::set<int> in_half(first.begin(), first.end());
  int count = 0;
  for (int e : cycle.edges) {
    for (int x : basis.graph.edges[e].markers) count += in_half.count(x) > 0;
  }
  return count % 2;
}

namespace {

std::map<std::string, int> parities_by_label(ParityRule rule, const Diagram& d, int k_component) {
  const auto by_id = rule == ParityRule::gaussian ? gaussian_parities(d) : p_L_parities(d, k_component);
  std::map<std::string, int> out;
  for (auto [x, p] : by_id) out[d.label(x)] = p;
  return out;
}

}  // namespace

AxiomReport check_parity_axioms(ParityRule rule, const Diagram& d, const MoveApplication& m, int k_component) {
  const Diagram other = apply_move(d, m);
  const bool increasing = m.direction == MoveDirection::increasing;
  const Diagram& big = increasing ? other : d;
  const MoveApplication on_big = increasing ? inverse_move(d, m) : m;

  const auto before = parities_by_label(rule, d, k_component);
  const auto after = parities_by_label(rule, other, k_component);
  const auto& big_parities = increasing ? after : before;

  std::vector<std::string> involved;
  for (int x : involved_crossings(big, on_big)) involved.push_back(big.label(x));

  AxiomReport report;
  auto fail = [&](std::string what) {
    report.pass = false;
    report.violations.push_back(describe(m) + ": " + std::move(what));
  };

  for (const auto& [label, p] : before) {
    auto it = after.find(label);
    if (it != after.end() && it->second != p) fail("crossing " + label + " changed parity");
  }

  std::vector<int> involved_parities;
  for (const auto& label : involved) {
    if (auto it = big_parities.find(label); it != big_parities.end()) involved_parities.push_back(it->second);
  }
  if (involved_parities.size() != involved.size()) return report;  // the move is not within the ruled crossings

  switch (m.kind) {
    case MoveKind::R1:
      if (involved_parities[0] != 0) fail("first-move crossing " + involved[0] + " is odd");
      break;
    case MoveKind::R2:
      if (involved_parities[0] != involved_parities[1]) fail("second-move crossings have different parities");
      break;
    case MoveKind::R3: {
      const int odd = std::accumulate(involved_parities.begin(), involved_parities.end(), 0);
      if (odd % 2 != 0) fail("third-move triple has an odd number of odd crossings");
      break;
    }
  }
  return report;
}

}  // namespace freeknots
