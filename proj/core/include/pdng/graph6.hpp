#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pdng/graph.hpp"

namespace pdng {

class Graph6Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Graph6Options {
  /// Reject nonzero padding bits in the last payload byte.
  bool strict_padding = true;
};

/// Parses one graph6 line (single-byte size form only, so n <= 62).
/// A leading ">>graph6<<" header and trailing CR/LF are accepted.
Graph parse_graph6(std::string_view line, Graph6Options options = {});

/// Canonical single-byte-size encoding with zero padding.
std::string emit_graph6(const Graph& g);

} // end of namespace pdng
