#include "pdng/stream.hpp"

#include <cstdio>

#include <zlib.h>

namespace pdng {

class Graph6Reader::Source {
public:
  virtual ~Source() = default;
  /// Reads one line without its terminator; false at end of input.
  virtual bool read_line(std::string& line) = 0;
};

namespace {

class GzSource final : public Graph6Reader::Source {
public:
  GzSource(gzFile file, std::string name) : file_(file), name_(std::move(name)) {}
  ~GzSource() override { gzclose(file_); }
  GzSource(const GzSource&) = delete;
  GzSource& operator=(const GzSource&) = delete;

  bool read_line(std::string& line) override {
    line.clear();
    char buffer[4096];
    while (true) {
      if (gzgets(file_, buffer, sizeof buffer) == nullptr) {
        int code = 0;
        const char* message = gzerror(file_, &code);
        if (code != Z_OK && code != Z_STREAM_END) {
          throw IoError(name_ + ": read error: " + message);
        }
        return !line.empty();
      }
      line += buffer;
      if (!line.empty() && line.back() == '\n') {
        line.pop_back();
        return true;
      }
    }
  }

private:
  gzFile file_;
  std::string name_;
};

class IstreamSource final : public Graph6Reader::Source {
public:
  explicit IstreamSource(std::istream& in) : in_(in) {}

  bool read_line(std::string& line) override {
    if (!std::getline(in_, line)) {
      if (in_.bad()) {
        throw IoError("stream read error");
      }
      return false;
    }
    return true;
  }

private:
  std::istream& in_;
};

} // namespace

Graph6Reader::Graph6Reader(std::unique_ptr<Source> source, Graph6Options options)
    : source_(std::move(source)), options_(options) {}

Graph6Reader::Graph6Reader(Graph6Reader&&) noexcept = default;
Graph6Reader& Graph6Reader::operator=(Graph6Reader&&) noexcept = default;
Graph6Reader::~Graph6Reader() = default;

Graph6Reader Graph6Reader::open(const std::filesystem::path& path, Graph6Options options) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) {
    throw IoError("cannot open " + path.string());
  }
  return Graph6Reader(std::make_unique<GzSource>(file, path.string()), options);
}

Graph6Reader Graph6Reader::open_stdin(Graph6Options options) {
  gzFile file = gzdopen(fileno(stdin), "rb");
  if (file == nullptr) {
    throw IoError("cannot read standard input");
  }
  return Graph6Reader(std::make_unique<GzSource>(file, "<stdin>"), options);
}

Graph6Reader Graph6Reader::from_stream(std::istream& in, Graph6Options options) {
  return Graph6Reader(std::make_unique<IstreamSource>(in), options);
}

std::optional<Graph6Record> Graph6Reader::next_record() {
  std::string text;
  while (true) {
    bool got = false;
    try {
      got = source_->read_line(text);
    } catch (const IoError& e) {
      throw IoError(std::string(e.what()) + " after line " + std::to_string(line_));
    }
    if (!got) {
      return std::nullopt;
    }
    ++line_;
    if (!text.empty() && text.back() == '\r') {
      text.pop_back();
    }
    if (!text.empty()) {
      break;
    }
  }
  Graph6Record record;
  record.line = line_;
  record.text = text;
  try {
    record.graph = parse_graph6(text, options_);
  } catch (const std::exception& e) {
    record.error = e.what();
    errors_.push_back({line_, record.error});
  }
  return record;
}

std::optional<Graph> Graph6Reader::next() {
  while (auto record = next_record()) {
    if (record->graph) {
      return std::move(record->graph);
    }
  }
  return std::nullopt;
}

std::vector<Graph> read_stream(Graph6Reader& reader) {
  std::vector<Graph> out;
  while (auto g = reader.next()) {
    out.push_back(std::move(*g));
  }
  return out;
}

} // end of namespace pdng
