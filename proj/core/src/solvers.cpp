#include "pdng/solvers.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "pdng/structure.hpp"

namespace pdng {

namespace {

VertexSet force_to_fixed_point(const Graph& g, VertexSet observed) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : observed) {
      const VertexSet white = g.neighbors(v) - observed;
      if (white.size() == 1) {
        observed |= white;
        changed = true;
      }
    }
  }
  return observed;
}

VertexSet force_in_order(const Graph& g, VertexSet observed, std::span<const int> order) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : order) {
      if (!observed.contains(v)) {
        continue;
      }
      const VertexSet white = g.neighbors(v) - observed;
      if (white.size() == 1) {
        observed |= white;
        changed = true;
      }
    }
  }
  return observed;
}

/// Calls `visit` on every k-subset of `pool` in colexicographic order of the
/// pool-index bitmask, stopping when it returns true.
bool for_each_k_subset(std::span<const int> pool, int k, const std::function<bool(VertexSet)>& visit) {
  const int c = static_cast<int>(pool.size());
  if (k > c) {
    return false;
  }
  if (k == 0) {
    return visit(VertexSet{});
  }
  const Mask limit = full_mask(c);
  Mask x = full_mask(k);
  while (true) {
    VertexSet s;
    for (Mask rest = x; rest != 0; rest &= rest - 1) {
      s = s.with(pool[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    if (visit(s)) {
      return true;
    }
    // Gosper's hack: next integer with the same popcount.
    const Mask low = x & (~x + 1);
    const Mask ripple = x + low;
    if (ripple == 0 || ripple > limit) {
      return false;
    }
    x = (((ripple ^ x) >> 2) / low) | ripple;
    if (x > limit) {
      return false;
    }
  }
}

std::vector<int> members(VertexSet s) { return {s.begin(), s.end()}; }

/// Twin classes: vertices with equal closed (closed=true) or open neighborhoods.
std::vector<VertexSet> twin_classes(const Graph& g, bool closed) {
  std::vector<VertexSet> out;
  VertexSet assigned;
  for (int v = 0; v < g.order(); ++v) {
    if (assigned.contains(v)) {
      continue;
    }
    const VertexSet key = closed ? g.neighbors(v).with(v) : g.neighbors(v);
    VertexSet cls = VertexSet::single(v);
    for (int u = v + 1; u < g.order(); ++u) {
      const VertexSet other = closed ? g.neighbors(u).with(u) : g.neighbors(u);
      if (other == key) {
        cls = cls.with(u);
      }
    }
    assigned |= cls;
    if (cls.size() >= 2) {
      out.push_back(cls);
    }
  }
  return out;
}

/// Lowest-index prefixes of a class: prefix[j] holds its j smallest members.
std::vector<VertexSet> prefixes(VertexSet cls) {
  std::vector<VertexSet> out{VertexSet{}};
  for (int v : cls) {
    out.push_back(out.back().with(v));
  }
  return out;
}

/// Symmetry breaking over twin classes. Exchanging two twins is an
/// automorphism, so every vertex set maps to one that takes a lowest-index
/// prefix of each class and the closures correspond; searching only prefix
/// sets loses no size.
class TwinCanon {
public:
  TwinCanon(const Graph& g, bool include_closed) {
    for (auto cls : twin_classes(g, false)) {
      classes_.push_back(cls);
      table_.push_back(prefixes(cls));
    }
    if (include_closed) {
      for (auto cls : twin_classes(g, true)) {
        classes_.push_back(cls);
        table_.push_back(prefixes(cls));
      }
    }
  }

  bool canonical(VertexSet s) const {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      const VertexSet t = s & classes_[i];
      if (t != table_[i][static_cast<std::size_t>(t.size())]) {
        return false;
      }
    }
    return true;
  }

private:
  std::vector<VertexSet> classes_;
  std::vector<std::vector<VertexSet>> table_;
};

using ComponentSolver = SolveResult (*)(const Graph&);

SolveResult solve_by_components(const Graph& g, ComponentSolver solve) {
  SolveResult total;
  for (auto part : components(g).parts) {
    const SolveResult local = solve(induced_subgraph(g, part));
    total.value += local.value;
    total.witness |= lift(local.witness, part);
    total.subsets_examined += local.subsets_examined;
  }
  return total;
}

SolveResult ascending_search(const Graph& g, int first_k, std::span<const int> pool,
                             const std::function<bool(VertexSet)>& admissible,
                             const std::function<bool(VertexSet)>& succeeds) {
  SolveResult out;
  for (int k = first_k; k <= static_cast<int>(pool.size()); ++k) {
    const bool found = for_each_k_subset(pool, k, [&](VertexSet s) {
      if (!admissible(s)) {
        return false;
      }
      ++out.subsets_examined;
      if (succeeds(s)) {
        out.value = k;
        out.witness = s;
        return true;
      }
      return false;
    });
    if (found) {
      return out;
    }
  }
  // Unreachable for the three parameters: the whole vertex set always succeeds.
  out.value = g.order();
  out.witness = g.vertices();
  return out;
}

SolveResult gamma_p_connected(const Graph& g) {
  // Closed twins: with u and v both in S, N[S - v] = N[S], so a minimum set
  // holds at most one member of a closed class. Only the first is offered.
  VertexSet pool_set = g.vertices();
  for (auto cls : twin_classes(g, true)) {
    pool_set -= cls.without(cls.first());
  }
  const std::vector<int> pool = members(pool_set);
  const TwinCanon canon(g, false);
  const auto obstructions = twins_obstructions(g);
  return ascending_search(
      g, 1, pool,
      [&](VertexSet s) { return canon.canonical(s) && hits_all(obstructions, s); },
      [&](VertexSet s) { return is_power_dominating(g, s); });
}

SolveResult gamma_connected(const Graph& g) {
  const int n = g.order();
  // Candidate reduction: if N[u] is a subset of N[v], any dominating set using
  // u may use v instead. Keep one maximal vertex per equivalence class.
  VertexSet pool_set;
  for (int u = 0; u < n; ++u) {
    const VertexSet nu = g.neighbors(u).with(u);
    bool dominated = false;
    for (int v = 0; v < n && !dominated; ++v) {
      if (v == u) {
        continue;
      }
      const VertexSet nv = g.neighbors(v).with(v);
      dominated = nu.subset_of(nv) && (nu != nv || v < u);
    }
    if (!dominated) {
      pool_set = pool_set.with(u);
    }
  }
  // A vertex whose closed neighborhood meets exactly one candidate forces it.
  VertexSet forced;
  for (int w = 0; w < n; ++w) {
    const VertexSet covering = g.neighbors(w).with(w) & pool_set;
    if (covering.size() == 1) {
      forced |= covering;
    }
  }
  // Greedy cover gives the stopping point of the ascending search.
  VertexSet greedy = forced;
  VertexSet covered = closed_neighborhood(g, greedy);
  while (covered != g.vertices()) {
    int best = -1;
    int gain = -1;
    for (int v : pool_set - greedy) {
      const int here = (g.neighbors(v).with(v) - covered).size();
      if (here > gain) {
        gain = here;
        best = v;
      }
    }
    greedy = greedy.with(best);
    covered = closed_neighborhood(g, greedy);
  }

  const std::vector<int> rest = members(pool_set - forced);
  SolveResult out;
  for (int k = forced.size(); k < greedy.size(); ++k) {
    const bool found = for_each_k_subset(rest, k - forced.size(), [&](VertexSet s) {
      ++out.subsets_examined;
      if (is_dominating(g, s | forced)) {
        out.value = k;
        out.witness = s | forced;
        return true;
      }
      return false;
    });
    if (found) {
      return out;
    }
  }
  out.value = greedy.size();
  out.witness = greedy;
  return out;
}

SolveResult zero_forcing_connected(const Graph& g) {
  // Z(G) >= delta(G): the first force needs a blue vertex with all but one
  // neighbor blue. K_1 is the one case needing no force.
  const int delta = std::max(1, degree_stats(g).min_degree);
  const std::vector<int> pool = members(g.vertices());
  const TwinCanon canon(g, true);
  return ascending_search(
      g, delta, pool, [&](VertexSet s) { return canon.canonical(s); },
      [&](VertexSet s) { return is_zero_forcing(g, s); });
}

SolveResult unpruned(const Graph& g, const std::function<bool(VertexSet)>& succeeds) {
  const std::vector<int> pool = members(g.vertices());
  return ascending_search(g, 1, pool, [](VertexSet) { return true; }, succeeds);
}

} // namespace

VertexSet pd_closure(const Graph& g, VertexSet s) {
  return zf_closure(g, closed_neighborhood(g, s));
}

VertexSet pd_closure(const Graph& g, VertexSet s, std::span<const int> scan_order) {
  return force_in_order(g, closed_neighborhood(g, s), scan_order);
}

VertexSet zf_closure(const Graph& g, VertexSet b) {
  return force_to_fixed_point(g, b);
}

VertexSet zf_closure(const Graph& g, VertexSet b, std::span<const int> scan_order) {
  return force_in_order(g, b, scan_order);
}

bool is_power_dominating(const Graph& g, VertexSet s) {
  return pd_closure(g, s) == g.vertices();
}

bool is_dominating(const Graph& g, VertexSet s) {
  return closed_neighborhood(g, s) == g.vertices();
}

bool is_zero_forcing(const Graph& g, VertexSet b) {
  return zf_closure(g, b) == g.vertices();
}

SolveResult gamma_p(const Graph& g, SolveOptions options) {
  if (!options.prune) {
    return unpruned(g, [&](VertexSet s) { return is_power_dominating(g, s); });
  }
  return solve_by_components(g, &gamma_p_connected);
}

SolveResult gamma(const Graph& g, SolveOptions options) {
  if (!options.prune) {
    return unpruned(g, [&](VertexSet s) { return is_dominating(g, s); });
  }
  return solve_by_components(g, &gamma_connected);
}

SolveResult zero_forcing(const Graph& g, SolveOptions options) {
  if (!options.prune) {
    return unpruned(g, [&](VertexSet s) { return is_zero_forcing(g, s); });
  }
  return solve_by_components(g, &zero_forcing_connected);
}

std::vector<VertexSet> all_minimum_power_dominating_sets(const Graph& g) {
  const int k = gamma_p(g).value;
  const std::vector<int> pool = members(g.vertices());
  std::vector<VertexSet> out;
  for_each_k_subset(pool, k, [&](VertexSet s) {
    if (is_power_dominating(g, s)) {
      out.push_back(s);
    }
    return false;
  });
  return out;
}

std::vector<TwinsObstruction> twins_obstructions(const Graph& g) {
  std::vector<TwinsObstruction> out;
  for (bool closed : {true, false}) {
    for (auto cls : twin_classes(g, closed)) {
      out.push_back({cls, closed_neighborhood(g, cls), closed});
    }
  }
  return out;
}

TwinsObstruction make_obstruction(const Graph& g, VertexSet w) {
  if (w.size() < 2 || !w.subset_of(g.vertices())) {
    throw GraphError("obstruction set needs at least two vertices of the graph");
  }
  for (int v : g.vertices() - w) {
    if ((g.neighbors(v) & w).size() == 1) {
      throw GraphError("vertex " + std::to_string(v) + " has exactly one neighbor in W");
    }
  }
  bool closed = true;
  for (int v : w) {
    closed = closed && g.neighbors(v).with(v) == g.neighbors(w.first()).with(w.first());
  }
  return {w, closed_neighborhood(g, w), closed};
}

bool hits_all(std::span<const TwinsObstruction> obstructions, VertexSet s) {
  return std::all_of(obstructions.begin(), obstructions.end(),
                     [&](const TwinsObstruction& o) { return s.intersects(o.required_hitting_set); });
}

} // end of namespace pdng
