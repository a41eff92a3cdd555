#include "pdng/graph6.hpp"

#include <array>

namespace pdng {

namespace {

constexpr int kBias = 63;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

} // namespace

Graph parse_graph6(std::string_view line, Graph6Options options) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) {
    line.remove_prefix(header.size());
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) {
    throw Graph6Error("empty graph6 record");
  }
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > 126) {
      throw Graph6Error("byte " + std::to_string(i) + " (value " + std::to_string(c) +
                        ") outside the graph6 range 63..126");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - kBias;
  if (n == 63) {
    throw Graph6Error("multi-byte size form (order > 62) is not supported");
  }
  if (n < 1) {
    throw Graph6Error("graph6 order must be at least 1");
  }
  const std::size_t expected = payload_bytes(n);
  const std::string_view payload = line.substr(1);
  if (payload.size() < expected) {
    throw Graph6Error("truncated graph6 payload: expected " + std::to_string(expected) +
                      " bytes, got " + std::to_string(payload.size()));
  }
  if (payload.size() > expected) {
    throw Graph6Error("trailing bytes after graph6 payload");
  }

  std::array<Mask, kMaxOrder> rows{};
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = static_cast<unsigned char>(payload[bit / 6]) - kBias;
      if ((value >> (5 - bit % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= Mask{1} << j;
        rows[static_cast<std::size_t>(j)] |= Mask{1} << i;
      }
    }
  }
  if (options.strict_padding && bit % 6 != 0) {
    const int value = static_cast<unsigned char>(payload.back()) - kBias;
    const int pad_bits = 6 - static_cast<int>(bit % 6);
    if ((value & ((1 << pad_bits) - 1)) != 0) {
      throw Graph6Error("nonzero graph6 padding bits");
    }
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1 + payload_bytes(n), '\0');
  out[0] = static_cast<char>(kBias + n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) {
        out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] | (1 << (5 - bit % 6)));
      }
    }
  }
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = static_cast<char>(out[k] + kBias);
  return out;
}

} // end of namespace pdng
