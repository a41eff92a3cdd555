#include "pdng/graph.hpp"

#include <string>

namespace pdng {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw GraphError("graph order must be in 1.." + std::to_string(kMaxOrder) +
                     ", got " + std::to_string(n));
  }
}

} // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") for order " + std::to_string(n));
    }
    if (u == v) {
      throw GraphError("loop at vertex " + std::to_string(u));
    }
    g.adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
    g.adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return g;
}

Graph Graph::from_rows(std::span<const Mask> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  Graph g;
  g.n_ = n;
  const Mask all = full_mask(n);
  for (int v = 0; v < n; ++v) {
    const Mask row = rows[static_cast<std::size_t>(v)];
    if ((row & ~all) != 0 || ((row >> v) & 1U) != 0) {
      throw GraphError("adjacency row " + std::to_string(v) + " is not simple");
    }
    for (int u : VertexSet{row}) {
      if (((rows[static_cast<std::size_t>(u)] >> v) & 1U) == 0) {
        throw GraphError("adjacency rows are not symmetric");
      }
    }
    g.adj_[static_cast<std::size_t>(v)] = row;
  }
  return g;
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) {
    twice += degree(v);
  }
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u) - VertexSet{full_mask(u + 1)}) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const noexcept {
  if (n_ != other.n_) {
    return false;
  }
  for (int v = 0; v < n_; ++v) {
    if (adj_[static_cast<std::size_t>(v)] != other.adj_[static_cast<std::size_t>(v)]) {
      return false;
    }
  }
  return true;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::array<Mask, kMaxOrder> rows{};
  const Mask all = full_mask(n);
  for (int v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] = all & ~g.neighbors(v).bits() & ~(Mask{1} << v);
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (int v : s) {
    out |= g.neighbors(v);
  }
  return out;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  return s | open_neighborhood(g, s);
}

VertexSet reachable(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = (open_neighborhood(g, frontier) & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

ComponentDecomposition components(const Graph& g) {
  ComponentDecomposition out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet part = reachable(g, left.first(), left);
    out.parts.push_back(part);
    left -= part;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return reachable(g, 0, g.vertices()) == g.vertices();
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
  if (w.empty()) {
    throw GraphError("induced_subgraph requires a nonempty vertex set");
  }
  if (!w.subset_of(g.vertices())) {
    throw GraphError("induced_subgraph vertex set exceeds graph order");
  }
  std::array<int, kMaxOrder> local{};
  int k = 0;
  for (int v : w) {
    local[static_cast<std::size_t>(v)] = k++;
  }
  std::array<Mask, kMaxOrder> rows{};
  for (int v : w) {
    Mask row = 0;
    for (int u : g.neighbors(v) & w) {
      row |= Mask{1} << local[static_cast<std::size_t>(u)];
    }
    rows[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])] = row;
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(k)});
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) {
    throw GraphError("disjoint_union of no graphs");
  }
  int total = 0;
  for (const auto& p : parts) {
    total += p.order();
  }
  if (total > kMaxOrder) {
    throw GraphError("disjoint union exceeds maximum order");
  }
  std::array<Mask, kMaxOrder> rows{};
  int offset = 0;
  for (const auto& p : parts) {
    for (int v = 0; v < p.order(); ++v) {
      rows[static_cast<std::size_t>(offset + v)] = p.neighbors(v).bits() << offset;
    }
    offset += p.order();
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(total)});
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw GraphError("relabel: permutation size mismatch");
  }
  Mask used = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((used >> p) & 1U) != 0) {
      throw GraphError("relabel: not a permutation");
    }
    used |= Mask{1} << p;
  }
  std::array<Mask, kMaxOrder> rows{};
  for (int v = 0; v < n; ++v) {
    Mask row = 0;
    for (int u : g.neighbors(v)) {
      row |= Mask{1} << perm[static_cast<std::size_t>(u)];
    }
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

VertexSet lift(VertexSet local, VertexSet w) {
  VertexSet out;
  int i = 0;
  for (int v : w) {
    if (local.contains(i)) {
      out = out.with(v);
    }
    ++i;
  }
  return out;
}

} // end of namespace pdng
