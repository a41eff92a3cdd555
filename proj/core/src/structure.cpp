#include "pdng/structure.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace pdng {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

/// Dense residual network for small unit-capacity max-flow problems.
class FlowNetwork {
public:
  explicit FlowNetwork(int nodes)
      : nodes_(nodes), cap_(static_cast<std::size_t>(nodes * nodes), 0) {}

  void add_arc(int u, int v, int c) { cap_[index(u, v)] += c; }

  /// Max-flow from s to t, stopping early once `limit` units are routed.
  int max_flow(int s, int t, int limit) const {
    std::vector<int> residual = cap_;
    std::vector<int> parent(static_cast<std::size_t>(nodes_));
    std::vector<int> queue(static_cast<std::size_t>(nodes_));
    int flow = 0;
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[static_cast<std::size_t>(s)] = s;
      std::size_t head = 0;
      std::size_t tail = 0;
      queue[tail++] = s;
      while (head < tail && parent[static_cast<std::size_t>(t)] < 0) {
        const int u = queue[head++];
        for (int v = 0; v < nodes_; ++v) {
          if (parent[static_cast<std::size_t>(v)] < 0 && residual[index(u, v)] > 0) {
            parent[static_cast<std::size_t>(v)] = u;
            queue[tail++] = v;
          }
        }
      }
      if (parent[static_cast<std::size_t>(t)] < 0) {
        break;
      }
      // Every augmenting path here carries one unit: some arc on it has capacity 1.
      int bottleneck = kUnbounded;
      for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)]) {
        bottleneck = std::min(bottleneck, residual[index(parent[static_cast<std::size_t>(v)], v)]);
      }
      bottleneck = std::min(bottleneck, limit - flow);
      for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)]) {
        const int u = parent[static_cast<std::size_t>(v)];
        residual[index(u, v)] -= bottleneck;
        residual[index(v, u)] += bottleneck;
      }
      flow += bottleneck;
    }
    return flow;
  }

private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u * nodes_ + v); }

  int nodes_;
  std::vector<int> cap_;
};

/// Internally vertex-disjoint s-t paths, capped at `limit`.
int disjoint_paths(const Graph& g, int s, int t, int limit) {
  const int n = g.order();
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) {
    net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kUnbounded : 1);
    for (int u : g.neighbors(v)) {
      net.add_arc(2 * v + 1, 2 * u, kUnbounded);
    }
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

FlowNetwork edge_network(const Graph& g, int extra_nodes) {
  FlowNetwork net(g.order() + extra_nodes);
  for (auto [u, v] : g.edges()) {
    net.add_arc(u, v, 1);
    net.add_arc(v, u, 1);
  }
  return net;
}

bool find_clique(const Graph& g, VertexSet candidates, int need) {
  if (need == 0) {
    return true;
  }
  if (candidates.size() < need) {
    return false;
  }
  for (int v : candidates) {
    candidates = candidates.without(v);
    if (find_clique(g, candidates & g.neighbors(v), need - 1)) {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Kuratowski search

using Rows = std::array<Mask, kMaxOrder>;

/// Deletes vertices of degree <= 1 and smooths degree-2 vertices until the
/// minimum degree is 3. Both moves preserve planarity in each direction.
VertexSet reduce_for_planarity(Rows& adj, VertexSet active) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : active) {
      const VertexSet nb{adj[static_cast<std::size_t>(v)]};
      if (nb.size() > 2) {
        continue;
      }
      for (int u : nb) {
        adj[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
      }
      adj[static_cast<std::size_t>(v)] = 0;
      active = active.without(v);
      if (nb.size() == 2) {
        const int a = nb.first();
        const int b = nb.without(a).first();
        adj[static_cast<std::size_t>(a)] |= Mask{1} << b;
        adj[static_cast<std::size_t>(b)] |= Mask{1} << a;
      }
      changed = true;
    }
  }
  return active;
}

class SubdivisionSearch {
public:
  SubdivisionSearch(const Rows& adj, std::vector<Edge> pattern, VertexSet branch)
      : adj_(adj), pattern_(std::move(pattern)), branch_(branch) {}

  bool run() { return solve(0, branch_); }

private:
  bool feasible(std::size_t idx, VertexSet used) const {
    for (int x : branch_) {
      int needed = 0;
      int direct = 0;
      for (std::size_t k = idx; k < pattern_.size(); ++k) {
        auto [a, b] = pattern_[k];
        if (a == x || b == x) {
          ++needed;
          const int other = a == x ? b : a;
          direct += (adj_[static_cast<std::size_t>(x)] >> other) & 1U;
        }
      }
      const int free_nb = (VertexSet{adj_[static_cast<std::size_t>(x)]} - used).size();
      if (free_nb + direct < needed) {
        return false;
      }
    }
    return true;
  }

  bool solve(std::size_t idx, VertexSet used) {
    if (idx == pattern_.size()) {
      return true;
    }
    if (!feasible(idx, used)) {
      return false;
    }
    auto [x, y] = pattern_[idx];
    return extend(idx, x, y, used);
  }

  bool extend(std::size_t idx, int cur, int target, VertexSet used) {
    const VertexSet nb{adj_[static_cast<std::size_t>(cur)]};
    if (nb.contains(target) && solve(idx + 1, used)) {
      return true;
    }
    for (int w : nb - used) {
      if (extend(idx, w, target, used.with(w))) {
        return true;
      }
    }
    return false;
  }

  const Rows& adj_;
  std::vector<Edge> pattern_;
  VertexSet branch_;
};

template <typename Fn>
bool for_each_subset(const std::vector<int>& pool, int k, std::size_t start, std::vector<int>& chosen,
                     Fn&& fn) {
  if (static_cast<int>(chosen.size()) == k) {
    return fn(chosen);
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    chosen.push_back(pool[i]);
    if (for_each_subset(pool, k, i + 1, chosen, fn)) {
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

bool has_k5_subdivision(const Rows& adj, VertexSet active) {
  std::vector<int> pool;
  for (int v : active) {
    if (VertexSet{adj[static_cast<std::size_t>(v)]}.size() >= 4) {
      pool.push_back(v);
    }
  }
  std::vector<int> chosen;
  return for_each_subset(pool, 5, 0, chosen, [&](const std::vector<int>& b) {
    std::vector<Edge> pattern;
    VertexSet branch;
    for (std::size_t i = 0; i < b.size(); ++i) {
      branch = branch.with(b[i]);
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        pattern.emplace_back(b[i], b[j]);
      }
    }
    return SubdivisionSearch(adj, std::move(pattern), branch).run();
  });
}

bool has_k33_subdivision(const Rows& adj, VertexSet active) {
  std::vector<int> pool;
  for (int v : active) {
    if (VertexSet{adj[static_cast<std::size_t>(v)]}.size() >= 3) {
      pool.push_back(v);
    }
  }
  std::vector<int> left;
  return for_each_subset(pool, 3, 0, left, [&](const std::vector<int>& a) {
    std::vector<int> rest;
    for (int v : pool) {
      // The side holding the smallest branch vertex is always `a`.
      if (v > a.front() && std::find(a.begin(), a.end(), v) == a.end()) {
        rest.push_back(v);
      }
    }
    std::vector<int> right;
    return for_each_subset(rest, 3, 0, right, [&](const std::vector<int>& b) {
      std::vector<Edge> pattern;
      VertexSet branch;
      for (int x : a) {
        branch = branch.with(x);
        for (int y : b) {
          pattern.emplace_back(x, y);
        }
      }
      for (int y : b) {
        branch = branch.with(y);
      }
      return SubdivisionSearch(adj, std::move(pattern), branch).run();
    });
  });
}

} // namespace

DegreeStats degree_stats(const Graph& g) {
  DegreeStats out{g.degree(0), g.degree(0)};
  for (int v = 1; v < g.order(); ++v) {
    out.min_degree = std::min(out.min_degree, g.degree(v));
    out.max_degree = std::max(out.max_degree, g.degree(v));
  }
  return out;
}

std::optional<int> diameter(const Graph& g) {
  const VertexSet all = g.vertices();
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int depth = 0;
    while (seen != all) {
      frontier = open_neighborhood(g, frontier) - seen;
      if (frontier.empty()) {
        return std::nullopt;
      }
      seen |= frontier;
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (g.edge_count() == n * (n - 1) / 2) {
    return n - 1;
  }
  if (!is_connected(g)) {
    return 0;
  }
  int best = degree_stats(g).min_degree;
  for (int s = 0; s < n; ++s) {
    for (int t : g.vertices() - g.neighbors(s) - VertexSet{full_mask(s + 1)}) {
      best = std::min(best, disjoint_paths(g, s, t, best));
      if (best == 1) {
        return best;
      }
    }
  }
  return best;
}

int edge_connectivity(const Graph& g) {
  if (g.order() == 1 || !is_connected(g)) {
    return 0;
  }
  const FlowNetwork net = edge_network(g, 0);
  int best = degree_stats(g).min_degree;
  for (int t = 1; t < g.order(); ++t) {
    best = std::min(best, net.max_flow(0, t, best));
  }
  return best;
}

bool super_lambda_by_cliques(const Graph& g) {
  const int delta = degree_stats(g).min_degree;
  if (delta <= 1) {
    return true;
  }
  VertexSet low;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == delta) {
      low = low.with(v);
    }
  }
  return !find_clique(g, low, delta);
}

bool super_lambda_by_cuts(const Graph& g) {
  const int delta = degree_stats(g).min_degree;
  const int lambda = edge_connectivity(g);
  if (lambda != delta) {
    return false;
  }
  // A nontrivial minimum cut is minimal, so both sides are connected and each
  // holds an edge. Route flow between every pair of disjoint edges.
  const int n = g.order();
  const int source = n;
  const int sink = n + 1;
  const auto edges = g.edges();
  const FlowNetwork base = edge_network(g, 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) {
        continue;
      }
      FlowNetwork net = base;
      net.add_arc(source, a, kUnbounded);
      net.add_arc(source, b, kUnbounded);
      net.add_arc(c, sink, kUnbounded);
      net.add_arc(d, sink, kUnbounded);
      if (net.max_flow(source, sink, lambda + 1) <= lambda) {
        return false;
      }
    }
  }
  return true;
}

bool is_super_lambda(const Graph& g) {
  if (!is_connected(g)) {
    throw GraphError("super-lambda is undefined for disconnected graphs");
  }
  const auto diam = diameter(g);
  if (diam && *diam == 2) {
    return super_lambda_by_cliques(g);
  }
  return super_lambda_by_cuts(g);
}

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n <= 4) {
    return true;
  }
  if (g.edge_count() > 3 * n - 6) {
    return false;
  }
  Rows adj{};
  std::copy(g.rows().begin(), g.rows().end(), adj.begin());
  const VertexSet active = reduce_for_planarity(adj, g.vertices());
  const int k = active.size();
  if (k <= 4) {
    return true;
  }
  int twice_m = 0;
  for (int v : active) {
    twice_m += VertexSet{adj[static_cast<std::size_t>(v)]}.size();
  }
  if (twice_m / 2 > 3 * k - 6) {
    return false;
  }
  return !has_k33_subdivision(adj, active) && !has_k5_subdivision(adj, active);
}

bool is_regular(const Graph& g, int r) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != r) {
      return false;
    }
  }
  return true;
}

std::optional<int> regular_degree(const Graph& g) {
  const int r = g.degree(0);
  return is_regular(g, r) ? std::optional<int>{r} : std::nullopt;
}

// ---------------------------------------------------------------------------

int StructureReport::min_degree() const {
  if (!degrees_) degrees_ = degree_stats(graph_);
  return degrees_->min_degree;
}

int StructureReport::max_degree() const {
  if (!degrees_) degrees_ = degree_stats(graph_);
  return degrees_->max_degree;
}

std::optional<int> StructureReport::diameter() const {
  if (!diameter_) {
    diameter_ = connected() ? pdng::diameter(graph_) : std::nullopt;
  }
  return *diameter_;
}

int StructureReport::kappa() const {
  if (!kappa_) kappa_ = vertex_connectivity(graph_);
  return *kappa_;
}

int StructureReport::lambda() const {
  if (!lambda_) lambda_ = edge_connectivity(graph_);
  return *lambda_;
}

std::optional<bool> StructureReport::super_lambda() const {
  if (!super_lambda_) {
    if (!connected()) {
      super_lambda_ = std::optional<bool>{};
    } else if (auto d = diameter(); d && *d == 2) {
      super_lambda_ = std::optional<bool>{super_lambda_by_cliques(graph_)};
    } else {
      super_lambda_ = std::optional<bool>{super_lambda_by_cuts(graph_)};
    }
  }
  return *super_lambda_;
}

bool StructureReport::planar() const {
  if (!planar_) planar_ = is_planar(graph_);
  return *planar_;
}

std::optional<int> StructureReport::regular_of() const {
  return min_degree() == max_degree() ? std::optional<int>{min_degree()} : std::nullopt;
}

const ComponentDecomposition& StructureReport::components() const {
  if (!components_) components_ = pdng::components(graph_);
  return *components_;
}

const std::vector<int>& StructureReport::component_orders() const {
  if (!component_orders_) {
    std::vector<int> orders;
    for (auto part : components().parts) {
      orders.push_back(part.size());
    }
    component_orders_ = std::move(orders);
  }
  return *component_orders_;
}

} // end of namespace pdng
