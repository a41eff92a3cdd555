#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdng/graph.hpp"
#include "pdng/graph6.hpp"

namespace pdng {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One input line: the parsed graph, or the reason it was rejected.
struct Graph6Record {
  std::size_t line = 0;
  std::string text;
  std::optional<Graph> graph;
  std::string error;
};

struct StreamError {
  std::size_t line = 0;
  std::string message;
};

/// Line-oriented graph6 reader over a file (plain or gzip), standard input,
/// or an std::istream. Blank lines are skipped; malformed lines become
/// records carrying an error and reading continues.
class Graph6Reader {
public:
  static Graph6Reader open(const std::filesystem::path& path, Graph6Options options = {});
  static Graph6Reader open_stdin(Graph6Options options = {});
  static Graph6Reader from_stream(std::istream& in, Graph6Options options = {});

  Graph6Reader(Graph6Reader&&) noexcept;
  Graph6Reader& operator=(Graph6Reader&&) noexcept;
  ~Graph6Reader();

  /// Next nonblank record; std::nullopt at end of input. Throws IoError on
  /// read failures.
  std::optional<Graph6Record> next_record();
  /// Next successfully parsed graph; bad lines are recorded in errors().
  std::optional<Graph> next();

  const std::vector<StreamError>& errors() const noexcept { return errors_; }

  class Source;

private:
  Graph6Reader(std::unique_ptr<Source> source, Graph6Options options);

  std::unique_ptr<Source> source_;
  Graph6Options options_;
  std::size_t line_ = 0;
  std::vector<StreamError> errors_;
};

/// Reads every graph of a stream; bad lines land in `errors`.
std::vector<Graph> read_stream(Graph6Reader& reader);

} // end of namespace pdng
