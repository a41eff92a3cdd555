#include "pdng/generators.hpp"

#include <charconv>

#include "pdng/graph6.hpp"

namespace pdng {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw FamilySpecError(what);
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  require(ec == std::errc{} && ptr == token.data() + token.size(),
          "expected an integer in family spec '" + std::string(context) + "', got '" +
              std::string(token) + "'");
  return value;
}

Graph parse_base(std::string_view text) {
  if (text.starts_with("g6=")) {
    return parse_graph6(text.substr(3));
  }
  return generate(parse_family_spec(text));
}

FamilySpec simple(Family family, std::vector<std::string_view> parts, std::size_t arity,
                  std::string_view text) {
  require(parts.size() == arity + 1, "family '" + std::string(parts[0]) + "' takes " +
                                         std::to_string(arity) + " parameter(s): '" +
                                         std::string(text) + "'");
  FamilySpec spec;
  spec.family = family;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    spec.params.push_back(parse_int(parts[i], text));
  }
  spec.text = std::string(text);
  return spec;
}

} // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const auto parts = split(text, ':');

  if (name == "path") return simple(Family::Path, parts, 1, text);
  if (name == "cycle") return simple(Family::Cycle, parts, 1, text);
  if (name == "complete") return simple(Family::Complete, parts, 1, text);
  if (name == "kpq") return simple(Family::CompleteBipartite, parts, 2, text);
  if (name == "star") return simple(Family::Star, parts, 1, text);
  if (name == "edgeless") return simple(Family::Edgeless, parts, 1, text);
  if (name == "petersen") return simple(Family::Petersen, parts, 0, text);
  if (name == "rk3") return simple(Family::RK3, parts, 1, text);
  if (name == "comb") return simple(Family::Comb, parts, 1, text);
  if (name == "necklace") return simple(Family::Necklace, parts, 1, text);

  FamilySpec spec;
  spec.text = std::string(text);
  if (name == "union") {
    require(!rest.empty(), "union needs at least one part");
    spec.family = Family::DisjointUnion;
    for (auto part : split(rest, '+')) {
      spec.bases.push_back(parse_base(part));
    }
    return spec;
  }
  if (name == "tfamily" || name == "twoleaves") {
    require(!rest.empty(), std::string(name) + " needs a base graph");
    std::string_view base = rest;
    if (name == "tfamily") {
      spec.family = Family::TFamily;
      if (const auto pos = rest.rfind(":edges="); pos != std::string_view::npos) {
        base = rest.substr(0, pos);
        for (char c : rest.substr(pos + 7)) {
          require(c == '0' || c == '1', "edges= takes a 0/1 string");
          spec.gadget_edges.push_back(c == '1');
        }
      }
    } else {
      spec.family = Family::TwoLeaves;
    }
    spec.bases.push_back(parse_base(base));
    return spec;
  }
  throw FamilySpecError("unknown family '" + std::string(name) + "'");
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto param = [&](std::size_t i) {
    require(i < p.size(), "missing family parameter");
    return p[i];
  };
  switch (spec.family) {
  case Family::Path: return path(param(0));
  case Family::Cycle: return cycle(param(0));
  case Family::Complete: return complete(param(0));
  case Family::CompleteBipartite: return complete_bipartite(param(0), param(1));
  case Family::Star: return star(param(0));
  case Family::Edgeless: return edgeless(param(0));
  case Family::Petersen: return petersen();
  case Family::RK3: return r_k3(param(0));
  case Family::Comb: return comb(param(0));
  case Family::Necklace: return necklace(param(0));
  case Family::DisjointUnion:
    require(!spec.bases.empty(), "union needs at least one part");
    return disjoint_union(spec.bases);
  case Family::TFamily:
    require(spec.bases.size() == 1, "tfamily needs one base graph");
    return t_family(spec.bases.front(), spec.gadget_edges);
  case Family::TwoLeaves:
    require(spec.bases.size() == 1, "twoleaves needs one base graph");
    return two_leaves(spec.bases.front());
  }
  throw FamilySpecError("unhandled family");
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::build(n, edges);
}

Graph complete_bipartite(int p, int q) {
  require(p >= 1 && q >= 1, "complete bipartite graph needs p, q >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
  return Graph::build(p + q, edges);
}

Graph star(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::build(n, edges);
}

Graph edgeless(int n) {
  require(n >= 1, "edgeless graph needs n >= 1");
  return Graph::build(n, {});
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::build(10, edges);
}

Graph r_k3(int r) {
  require(r >= 1, "rk3 needs r >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) {
    edges.emplace_back(3 * i, 3 * i + 1);
    edges.emplace_back(3 * i, 3 * i + 2);
    edges.emplace_back(3 * i + 1, 3 * i + 2);
  }
  return Graph::build(3 * r, edges);
}

Graph comb(int k) {
  require(k >= 1, "comb needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(2 * i, 2 * i + 1);
    if (i + 1 < k) edges.emplace_back(2 * i, 2 * i + 2);
  }
  return Graph::build(2 * k, edges);
}

Graph necklace(int r) {
  require(r >= 2, "necklace needs r >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) {
    const int b = 4 * i;
    // K_4 minus {b, b+1}: b and b+1 keep degree 2 inside the copy.
    edges.emplace_back(b, b + 2);
    edges.emplace_back(b, b + 3);
    edges.emplace_back(b + 1, b + 2);
    edges.emplace_back(b + 1, b + 3);
    edges.emplace_back(b + 2, b + 3);
    edges.emplace_back(b + 1, (b + 4) % (4 * r));
  }
  return Graph::build(4 * r, edges);
}

Graph t_family(const Graph& base, const std::vector<bool>& gadget_edges) {
  const int h = base.order();
  require(is_connected(base), "tfamily base graph must be connected");
  require(gadget_edges.empty() || static_cast<int>(gadget_edges.size()) == h,
          "tfamily edges= needs one flag per base vertex");
  require(3 * h <= kMaxOrder, "tfamily result exceeds maximum order");
  std::vector<Edge> edges;
  for (auto [u, v] : base.edges()) {
    edges.emplace_back(3 * u, 3 * v);
  }
  for (int i = 0; i < h; ++i) {
    edges.emplace_back(3 * i, 3 * i + 1);
    edges.emplace_back(3 * i, 3 * i + 2);
    if (!gadget_edges.empty() && gadget_edges[static_cast<std::size_t>(i)]) {
      edges.emplace_back(3 * i + 1, 3 * i + 2);
    }
  }
  return Graph::build(3 * h, edges);
}

Graph two_leaves(const Graph& base) {
  return t_family(base, {});
}

namespace {

/// Gadget test for x inside triple {v, x, y}: x ~ v and N[x] within the triple.
bool gadget_of(const Graph& g, int x, int v, int y) {
  const VertexSet triple = VertexSet::single(v).with(x).with(y);
  return g.adjacent(x, v) && g.neighbors(x).with(x).subset_of(triple);
}

bool cover(const Graph& g, VertexSet left, std::vector<std::array<int, 3>>& triples) {
  if (left.empty()) {
    VertexSet base;
    for (const auto& t : triples) base = base.with(t[0]);
    return reachable(g, base.first(), base) == base;
  }
  const int x = left.first();
  // x as a base vertex with two gadget neighbors.
  const VertexSet nx = g.neighbors(x) & left;
  for (int y : nx) {
    for (int z : nx - VertexSet{full_mask(y + 1)}) {
      if (gadget_of(g, y, x, z) && gadget_of(g, z, x, y)) {
        triples.push_back({x, y, z});
        if (cover(g, left.without(x).without(y).without(z), triples)) return true;
        triples.pop_back();
      }
    }
  }
  // x as a gadget vertex of some base v, with partner y.
  if (g.degree(x) <= 2) {
    for (int v : nx) {
      for (int y : (g.neighbors(v) & left).without(x)) {
        if (y < x) continue;
        if (gadget_of(g, x, v, y) && gadget_of(g, y, v, x)) {
          triples.push_back({v, x, y});
          if (cover(g, left.without(x).without(y).without(v), triples)) return true;
          triples.pop_back();
        }
      }
    }
  }
  return false;
}

} // namespace

std::optional<TDecomposition> t_family_decomposition(const Graph& g) {
  if (g.order() % 3 != 0) {
    return std::nullopt;
  }
  TDecomposition out;
  if (!cover(g, g.vertices(), out.triples)) {
    return std::nullopt;
  }
  return out;
}

bool is_in_t_family(const Graph& g) {
  return t_family_decomposition(g).has_value();
}

} // end of namespace pdng
