#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdng/graph.hpp"

namespace pdng {

/// Isomorphism certificate: equal iff the graphs are isomorphic.
struct CanonicalForm {
  std::string cert;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// perm[v] is the canonical position of vertex v.
std::vector<int> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// The relabeled representative whose graph6 string is the certificate.
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

class EnumerationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxEnumerationOrder = 8;

/// One canonical representative per isomorphism class of graphs of order n,
/// sorted by edge count and then certificate. Orders above
/// kMaxEnumerationOrder are rejected; use an external graph6 catalog.
std::vector<Graph> enumerate_all(int n);

} // end of namespace pdng
