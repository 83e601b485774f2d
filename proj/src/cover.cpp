#include "freeknots/cover.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "freeknots/parity.hpp"
#include "freeknots/search.hpp"

namespace freeknots {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

int vertex_components(const FramedGraph& g) {
  UnionFind uf(g.vertex_count);
  int count = g.vertex_count;
  for (auto [a, b] : g.edges()) count -= uf.unite(FramedGraph::vertex_of(a), FramedGraph::vertex_of(b));
  return count;
}

}  // namespace

std::vector<int> spanning_forest(const FramedGraph& g, const std::vector<int>& order) {
  const auto edges = g.edges();
  UnionFind uf(g.vertex_count);
  std::vector<int> tree;
  for (int e : order) {
    if (uf.unite(FramedGraph::vertex_of(edges[e].first), FramedGraph::vertex_of(edges[e].second))) tree.push_back(e);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<std::vector<int>> all_spanning_forests(const FramedGraph& g, std::size_t limit) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int size = g.vertex_count - vertex_components(g);
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int next) -> bool {
    if (static_cast<int>(chosen.size()) == size) {
      UnionFind uf(g.vertex_count);
      for (int e : chosen) {
        if (!uf.unite(FramedGraph::vertex_of(edges[e].first), FramedGraph::vertex_of(edges[e].second))) return true;
      }
      out.push_back(chosen);
      return out.size() <= limit;
    }
    for (int e = next; e < m; ++e) {
      chosen.push_back(e);
      const bool go_on = self(self, e + 1);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  if (!rec(rec, 0)) out.clear();
  return out;
}

EdgeClassification classify_edges_with_tree(const FramedGraph& g, const std::vector<int>& tree) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<bool> in_tree(static_cast<std::size_t>(m), false);
  for (int e : tree) in_tree.at(static_cast<std::size_t>(e)) = true;

  // Tree adjacency: for each vertex, (edge, half-edge here, half-edge there).
  struct Step {
    int edge, here, there;
  };
  std::vector<std::vector<Step>> adj(static_cast<std::size_t>(g.vertex_count));
  for (int e : tree) {
    auto [a, b] = edges[e];
    adj[FramedGraph::vertex_of(a)].push_back({e, a, b});
    adj[FramedGraph::vertex_of(b)].push_back({e, b, a});
  }

  EdgeClassification out;
  out.tree = tree;
  std::sort(out.tree.begin(), out.tree.end());
  for (int e = 0; e < m; ++e) {
    EdgeClass ec;
    ec.edge = e;
    ec.tree = in_tree[e];
    if (ec.tree) {
      out.edges.push_back(ec);
      continue;
    }
    // The cycle leaves v by `h`, arrives at w by `mate`, and returns from w to
    // v through the tree.
    const auto [h, mate] = edges[e];
    const int v = FramedGraph::vertex_of(h);
    const int w = FramedGraph::vertex_of(mate);
    std::vector<Step> via(static_cast<std::size_t>(g.vertex_count), Step{-1, -1, -1});
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count), false);
    std::queue<int> queue;
    queue.push(w);
    seen[w] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (const auto& s : adj[u]) {
        const int t = FramedGraph::vertex_of(s.there);
        if (seen[t]) continue;
        seen[t] = true;
        via[t] = s;
        queue.push(t);
      }
    }
    // Half-edges of the cycle at each vertex it passes.
    std::vector<std::pair<int, int>> turns;
    ec.cycle.push_back(e);
    int arrive_at_v = mate;
    if (v != w) {
      std::vector<Step> path;
      for (int u = v; u != w; u = FramedGraph::vertex_of(via[u].here)) path.push_back(via[u]);
      std::reverse(path.begin(), path.end());
      int arrive = mate;
      for (const auto& s : path) {
        turns.emplace_back(arrive, s.here);
        ec.cycle.push_back(s.edge);
        arrive = s.there;
      }
      arrive_at_v = arrive;
    }
    turns.emplace_back(arrive_at_v, h);
    for (auto [a, b] : turns) {
      if (FramedGraph::opposite(a) == b) {
        ++ec.transversal;
      } else {
        ++ec.rotating;
      }
    }
    ec.good = ec.transversal % 2 == 0;
    out.edges.push_back(std::move(ec));
  }
  return out;
}

EdgeClassification classify_edges(const FramedGraph& g, std::optional<std::uint64_t> tree_seed) {
  std::vector<int> order(g.edges().size());
  std::iota(order.begin(), order.end(), 0);
  if (tree_seed) {
    std::mt19937_64 rng(*tree_seed);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  }
  return classify_edges_with_tree(g, spanning_forest(g, order));
}

namespace {

CoveringGraph build_covering(const Diagram& d, EdgeClassification classification) {
  const FramedGraph g = FramedGraph::from_diagram(d);
  const int v_count = g.vertex_count;
  const int shift = 4 * v_count;
  CoveringGraph c;
  c.classification = std::move(classification);
  c.graph.vertex_count = 2 * v_count;
  c.graph.mate.assign(static_cast<std::size_t>(2 * shift), -1);
  c.graph.free_circles = 2 * g.free_circles;
  for (const auto& label : g.labels) c.graph.labels.push_back(label + ".1");
  for (const auto& label : g.labels) c.graph.labels.push_back(label + ".2");
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    const int cross = c.classification.edges[e].good ? 0 : shift;
    c.graph.mate[a] = b + cross;
    c.graph.mate[b + cross] = a;
    c.graph.mate[a + shift] = b + shift - cross;
    c.graph.mate[b + shift - cross] = a + shift;
  }
  const auto t = traverse(c.graph);
  c.diagram = c.graph.to_diagram();
  const int walked = static_cast<int>(t.words.size());
  for (int comp = 0; comp < walked; ++comp) {
    const auto it = std::find(t.component_of_half_edge.begin(), t.component_of_half_edge.end(), comp);
    const int h = static_cast<int>(it - t.component_of_half_edge.begin());
    c.component_dual.push_back(t.component_of_half_edge[c.involution_half_edge(h)]);
  }
  for (int i = 0; i < c.graph.free_circles; ++i) c.component_dual.push_back(walked + (i ^ 1));
  return c;
}

}  // namespace

CoveringGraph covering_K2(const Diagram& d, std::optional<std::uint64_t> tree_seed) {
  return build_covering(d, classify_edges(FramedGraph::from_diagram(d), tree_seed));
}

CoveringGraph covering_K2_with_tree(const Diagram& d, const std::vector<int>& tree) {
  return build_covering(d, classify_edges_with_tree(FramedGraph::from_diagram(d), tree));
}

Diagram projection_Kprime(const Diagram& d) {
  if (d.component_count() != 1) throw Error(ErrorCode::NotAKnot, std::to_string(d.component_count()));
  const auto parities = gaussian_parities(d);
  Word w;
  for (int x : d.component(0)) {
    if (parities.at(x) == 0) w.push_back(x);
  }
  return Diagram::compact({std::move(w)}, d.labels());
}

Diagram kprime_from_k2(const CoveringGraph& c) {
  std::vector<int> chosen;
  for (int comp = 0; comp < static_cast<int>(c.component_dual.size()); ++comp) {
    const int dual = c.component_dual[comp];
    if (dual == comp) throw Error(ErrorCode::SelfDualComponent, std::to_string(comp));
    if (comp < dual) chosen.push_back(comp);
  }
  return sublink(c.diagram, chosen);
}

}  // namespace freeknots
