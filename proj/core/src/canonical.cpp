#include "pdng/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "pdng/graph6.hpp"

namespace pdng {

namespace {

using Coloring = std::array<int, kMaxOrder>;

int color_count(const Coloring& color, int n) {
  int k = 0;
  for (int v = 0; v < n; ++v) k = std::max(k, color[static_cast<std::size_t>(v)] + 1);
  return k;
}

/// Equitable refinement: split cells by neighbor counts per cell until
/// stable. New colors are ranks of (old color, count vector), so the result
/// depends only on the isomorphism type of the colored graph.
void refine(const Graph& g, Coloring& color) {
  const int n = g.order();
  int k = color_count(color, n);
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.assign(static_cast<std::size_t>(k + 1), 0);
      s[0] = color[static_cast<std::size_t>(v)];
      for (int u : g.neighbors(v)) {
        ++s[static_cast<std::size_t>(color[static_cast<std::size_t>(u)] + 1)];
      }
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
    });
    int rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])]) {
        ++rank;
      }
      color[static_cast<std::size_t>(order[i])] = rank;
    }
    if (rank + 1 == k) {
      return;
    }
    k = rank + 1;
  }
}

bool twins(const Graph& g, int u, int v) {
  const VertexSet nu = g.neighbors(u).without(v);
  const VertexSet nv = g.neighbors(v).without(u);
  return nu == nv;
}

struct Best {
  std::string cert;
  Coloring labeling{};
};

void search(const Graph& g, Coloring color, Best& best) {
  refine(g, color);
  const int n = g.order();
  const int k = color_count(color, n);
  if (k == n) {
    std::vector<int> perm(color.begin(), color.begin() + n);
    std::string cert = emit_graph6(relabel(g, perm));
    if (cert > best.cert) {
      best.cert = std::move(cert);
      best.labeling = color;
    }
    return;
  }
  // First non-singleton cell.
  std::vector<int> size(static_cast<std::size_t>(k), 0);
  for (int v = 0; v < n; ++v) ++size[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
  int target = 0;
  while (size[static_cast<std::size_t>(target)] < 2) ++target;

  std::vector<int> tried;
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] != target) continue;
    // Swapping twins is an automorphism fixing every individualized vertex,
    // so their subtrees yield the same certificates.
    if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
    tried.push_back(v);
    Coloring child = color;
    for (int w = 0; w < n; ++w) {
      const int c = color[static_cast<std::size_t>(w)];
      if (c > target || (c == target && w != v)) ++child[static_cast<std::size_t>(w)];
    }
    search(g, child, best);
  }
}

Best canonical_search(const Graph& g) {
  Best best;
  search(g, Coloring{}, best);
  return best;
}

} // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  const Best best = canonical_search(g);
  return {best.labeling.begin(), best.labeling.begin() + g.order()};
}

CanonicalForm canonical_form(const Graph& g) {
  return {canonical_search(g).cert};
}

Graph canonical_graph(const Graph& g) {
  return parse_graph6(canonical_search(g).cert);
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_all(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw EnumerationError("built-in enumeration supports orders 1.." +
                           std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n) +
                           "; supply an external graph6 catalog for larger orders");
  }
  // Vertex augmentation: every graph of order k arises from one of order k-1
  // by adding vertex k-1 with some neighborhood. Dedup by certificate.
  std::map<std::string, int> level{{emit_graph6(Graph::build(1, {})), 0}};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, int> next;
    for (const auto& [cert, edges] : level) {
      const Graph base = parse_graph6(cert);
      std::array<Mask, kMaxOrder> rows{};
      for (int v = 0; v < k - 1; ++v) rows[static_cast<std::size_t>(v)] = base.neighbors(v).bits();
      for (Mask s = 0; s < (Mask{1} << (k - 1)); ++s) {
        auto grown = rows;
        grown[static_cast<std::size_t>(k - 1)] = s;
        for (int v : VertexSet{s}) grown[static_cast<std::size_t>(v)] |= Mask{1} << (k - 1);
        const Graph g = Graph::from_rows({grown.data(), static_cast<std::size_t>(k)});
        next.emplace(canonical_form(g).cert, g.edge_count());
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<int, std::string>> keyed;
  keyed.reserve(level.size());
  for (auto& [cert, edges] : level) keyed.emplace_back(edges, cert);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (const auto& [edges, cert] : keyed) out.push_back(parse_graph6(cert));
  return out;
}

} // end of namespace pdng
