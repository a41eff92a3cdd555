#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdng/graph.hpp"
#include "pdng/stream.hpp"

namespace pdng::cli {

/// One unit of work: a graph, or the input line that failed to parse.
struct Item {
  std::size_t index = 0;
  std::string label;
  std::optional<Graph> graph;
  std::string error;
};

struct InputSpec {
  std::optional<std::string> graph6;
  std::optional<std::string> file;
  std::optional<int> enumerate;
  std::optional<std::string> family;
  std::optional<std::string> random;
  std::uint64_t seed = 1;
  bool strict = false;

  int sources() const;
};

/// Pull-style producer of Items. Errors in setup (missing file, bad family
/// spec, n out of range) throw std::invalid_argument or IoError.
class ItemSource {
public:
  explicit ItemSource(const InputSpec& spec);

  std::optional<Item> next();

private:
  std::function<std::optional<Item>()> pull_;
  std::shared_ptr<Graph6Reader> reader_;
  std::size_t count_ = 0;
};

std::filesystem::path data_dir(const std::optional<std::string>& override_dir);

/// The catalog `name` inside `dir`, also trying `name` with and without a
/// trailing ".gz". Throws IoError naming the expected file when absent.
std::filesystem::path find_catalog(const std::filesystem::path& dir, const std::string& name,
                                   const std::string& how_to_generate);

} // end of namespace pdng::cli
