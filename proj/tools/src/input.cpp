#include "input.hpp"

#include <charconv>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "pdng/canonical.hpp"
#include "pdng/generators.hpp"
#include "pdng/graph6.hpp"

namespace pdng::cli {

namespace {

Item from_record(Graph6Record&& r) {
  Item item;
  item.index = r.line;
  item.label = std::move(r.text);
  item.graph = std::move(r.graph);
  item.error = std::move(r.error);
  return item;
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

/// "N:P:COUNT" -> G(N, P) samples.
std::function<std::optional<Item>()> random_source(const std::string& text, std::uint64_t seed) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw std::invalid_argument("--random expects N:P:COUNT");
  const int n = parse_int(std::string_view(text).substr(0, a), "order");
  const double p = std::stod(text.substr(a + 1, b - a - 1));
  const int count = parse_int(std::string_view(text).substr(b + 1), "count");
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("--random order out of range");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("--random probability outside [0,1]");
  auto rng = std::make_shared<std::mt19937_64>(seed);
  auto made = std::make_shared<int>(0);
  return [=]() -> std::optional<Item> {
    if (*made >= count) return std::nullopt;
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (coin(*rng)) edges.emplace_back(u, v);
      }
    }
    Item item;
    item.index = static_cast<std::size_t>(++*made);
    item.graph = Graph::build(n, edges);
    item.label = emit_graph6(*item.graph);
    return item;
  };
}

} // namespace

int InputSpec::sources() const {
  return int(graph6.has_value()) + int(file.has_value()) + int(enumerate.has_value()) +
         int(family.has_value()) + int(random.has_value());
}

ItemSource::ItemSource(const InputSpec& spec) {
  const Graph6Options options{.strict_padding = spec.strict};
  if (spec.graph6) {
    auto done = std::make_shared<bool>(false);
    const std::string text = *spec.graph6;
    pull_ = [done, text, options]() -> std::optional<Item> {
      if (*done) return std::nullopt;
      *done = true;
      Item item{1, text, std::nullopt, {}};
      try {
        item.graph = parse_graph6(text, options);
      } catch (const Graph6Error& e) {
        item.error = e.what();
      }
      return item;
    };
  } else if (spec.file) {
    reader_ = std::make_shared<Graph6Reader>(*spec.file == "-" ? Graph6Reader::open_stdin(options)
                                                               : Graph6Reader::open(*spec.file, options));
    auto reader = reader_;
    pull_ = [reader]() -> std::optional<Item> {
      auto rec = reader->next_record();
      if (!rec) return std::nullopt;
      return from_record(std::move(*rec));
    };
  } else if (spec.enumerate) {
    auto graphs = std::make_shared<std::vector<Graph>>(enumerate_all(*spec.enumerate));
    auto pos = std::make_shared<std::size_t>(0);
    pull_ = [graphs, pos]() -> std::optional<Item> {
      if (*pos >= graphs->size()) return std::nullopt;
      const Graph& g = (*graphs)[*pos];
      ++*pos;
      return Item{*pos, emit_graph6(g), g, {}};
    };
  } else if (spec.family) {
    const FamilySpec fs = parse_family_spec(*spec.family);
    auto g = std::make_shared<std::optional<Graph>>(generate(fs));
    const std::string label = fs.text;
    pull_ = [g, label]() -> std::optional<Item> {
      if (!*g) return std::nullopt;
      Item item{1, label, std::move(**g), {}};
      g->reset();
      return item;
    };
  } else if (spec.random) {
    pull_ = random_source(*spec.random, spec.seed);
  } else {
    throw std::invalid_argument("no input source");
  }
}

std::optional<Item> ItemSource::next() {
  auto item = pull_();
  if (item) ++count_;
  return item;
}

std::filesystem::path data_dir(const std::optional<std::string>& override_dir) {
  if (override_dir) return *override_dir;
  if (const char* env = std::getenv("PDNG_DATA_DIR"); env && *env) return env;
#ifdef PDNG_DEFAULT_DATA_DIR
  return PDNG_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

std::filesystem::path find_catalog(const std::filesystem::path& dir, const std::string& name,
                                   const std::string& how_to_generate) {
  std::vector<std::filesystem::path> tries{dir / name};
  if (name.ends_with(".gz")) {
    tries.push_back(dir / name.substr(0, name.size() - 3));
  } else {
    tries.push_back(dir / (name + ".gz"));
  }
  for (const auto& p : tries) {
    if (std::filesystem::is_regular_file(p)) return p;
  }
  throw IoError("catalog " + (dir / name).string() + " not found; generate it with `" +
                how_to_generate + "` or point PDNG_DATA_DIR (or --data-dir) at its directory");
}

} // end of namespace pdng::cli
