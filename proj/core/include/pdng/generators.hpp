#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdng/graph.hpp"

namespace pdng {

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Star,
  DisjointUnion,
  RK3,
  Comb,
  Necklace,
  TFamily,
  TwoLeaves,
  Petersen,
  Edgeless,
};

/// A named graph family with its parameters.
///
/// Text form (parse_family_spec / to_string):
///   path:N  cycle:N  complete:N  kpq:P:Q  star:N  edgeless:N  petersen
///   rk3:R  comb:K  necklace:R  union:SPEC+SPEC[+...]
///   tfamily:BASE[:edges=BITS]  twoleaves:BASE
/// where BASE is a family spec or `g6=<graph6>`, and BITS holds one 0/1 per
/// base vertex selecting the optional edge between its two gadget vertices.
struct FamilySpec {
  Family family = Family::Path;
  std::vector<int> params;
  /// Base graph(s): the connected H for TFamily/TwoLeaves, the parts of a DisjointUnion.
  std::vector<Graph> bases;
  /// TFamily only; empty means all false.
  std::vector<bool> gadget_edges;
  /// Canonical text form recorded by the parser, used for reporting.
  std::string text;
};

class FamilySpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

FamilySpec parse_family_spec(std::string_view text);
Graph generate(const FamilySpec& spec);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int p, int q);
/// K_{1,n-1}; vertex 0 is the center.
Graph star(int n);
Graph edgeless(int n);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();
/// r disjoint triangles, copy i on 3i..3i+2.
Graph r_k3(int r);
/// Path vertex i is 2i, its leaf is 2i+1.
Graph comb(int k);
/// r copies of K_4 - e on 4i..4i+3 with the missing edge {4i, 4i+1};
/// cycle edges {4i+1, 4(i+1) mod 4r}.
Graph necklace(int r);
/// Base vertex i of H becomes 3i with gadget vertices 3i+1, 3i+2; the gadget
/// pair is adjacent when gadget_edges[i] is set. H must be connected.
Graph t_family(const Graph& base, const std::vector<bool>& gadget_edges);
/// Two pendant leaves added to each vertex of `base` (no gadget edges).
Graph two_leaves(const Graph& base);

/// One triple per base vertex: {base, gadget, gadget}.
struct TDecomposition {
  std::vector<std::array<int, 3>> triples;
};

/// Partition into triples {v, v', v''} with N[v'], N[v''] inside the triple,
/// v', v'' adjacent to v, and the base vertices inducing a connected graph.
std::optional<TDecomposition> t_family_decomposition(const Graph& g);
bool is_in_t_family(const Graph& g);

} // end of namespace pdng
