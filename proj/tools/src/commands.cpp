#include "commands.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pdng/canonical.hpp"
#include "pdng/generators.hpp"
#include "pdng/graph6.hpp"
#include "pdng/parallel.hpp"
#include "pdng/solvers.hpp"
#include "pdng/structure.hpp"
#include "pdng_cli/cli.hpp"

namespace pdng::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kChunk = 64;

/// Streams the configured input through `work` and hands results to `emit`
/// in input order. Returns kInput when a bad line stops a strict run.
template <typename Out>
int process(const RunConfig& cfg, std::ostream& err, const std::function<Out(const Graph&)>& work,
            const std::function<void(const Item&, Out&&)>& emit, std::size_t* errors = nullptr) {
  ItemSource source(cfg.input);
  int status = kOk;
  ordered_parallel_map<Item, std::optional<Out>>(
      [&source] { return source.next(); }, kChunk, cfg.jobs,
      [&work](const Item& item) -> std::optional<Out> {
        if (!item.graph) return std::nullopt;
        return work(*item.graph);
      },
      [&](const Item& item, std::optional<Out>&& out) {
        if (!out) {
          err << "line " << item.index << ": " << item.error << '\n';
          if (errors) ++*errors;
          if (cfg.input.strict) {
            status = kInput;
            return false;
          }
          return true;
        }
        emit(item, std::move(*out));
        return true;
      });
  return status;
}

Json witness_json(VertexSet s, int base) {
  Json arr = Json::array();
  for (int v : s) arr.push_back(v + base);
  return arr;
}

struct ComputeRow {
  std::optional<SolveResult> gp;
  std::optional<SolveResult> g;
  std::optional<SolveResult> z;
  DegreeStats degrees;
  std::optional<int> diameter;
  int kappa = 0;
  int lambda = 0;
  std::optional<bool> super_lambda;
  bool planar = false;
  std::optional<int> regular;
  std::vector<int> components;
};

bool report_selected(const RunConfig& cfg, const NGReport& r) {
  for (auto h : cfg.filters) {
    if (!r.has_flag(h)) return false;
  }
  for (const auto& [key, value] : cfg.find) {
    std::optional<int> got;
    if (key == "sum") got = r.sum_p;
    else if (key == "prod") got = r.prod_p;
    else if (key == "p") got = r.p;
    else if (key == "p_bar") got = r.p_bar;
    else if (key == "g") got = r.g;
    else if (key == "g_bar") got = r.g_bar;
    else if (key == "z") got = r.z;
    else if (key == "z_bar") got = r.z_bar;
    if (!got || *got != value) return false;
  }
  return true;
}

struct ClassStats {
  std::size_t count = 0;
  int min_sum = INT_MAX;
  int max_sum = INT_MIN;
  int min_prod = INT_MAX;
  int max_prod = INT_MIN;

  void add(const NGReport& r) {
    ++count;
    min_sum = std::min(min_sum, r.sum_p);
    max_sum = std::max(max_sum, r.sum_p);
    min_prod = std::min(min_prod, r.prod_p);
    max_prod = std::max(max_prod, r.prod_p);
  }
};

struct CheckStats {
  std::size_t applicable = 0;
  std::size_t held = 0;
  std::size_t violated = 0;
};

constexpr std::size_t kMaxListedAttainers = 20;

/// Running statistics of an ngcheck or sweep run.
class Summary {
public:
  void add(const NGReport& r, bool selected) {
    for (const auto& c : r.checks) {
      auto& s = checks_[c.id];
      if (!c.applicable) continue;
      ++s.applicable;
      ++(c.holds ? s.held : s.violated);
    }
    if (!r.violations().empty()) red_alerts_.push_back(r);
    if (!selected) return;
    all_.add(r);
    for (auto h : r.flags) by_flag_[h].add(r);
    if (r.sum_p > best_sum_) {
      best_sum_ = r.sum_p;
      attainers_.clear();
      attainer_count_ = 0;
    }
    if (r.sum_p == best_sum_) {
      ++attainer_count_;
      if (attainers_.size() < kMaxListedAttainers) attainers_.push_back(r.graph6);
    }
  }

  const std::vector<NGReport>& red_alerts() const { return red_alerts_; }

  void print(std::ostream& os, std::size_t processed, std::size_t errors) const {
    os << "graphs: " << processed << "  selected: " << all_.count << "  input errors: " << errors
       << "  violations: " << red_alerts_.size() << '\n';
    os << '\n';
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %8s %8s %8s %9s %9s\n", "class", "graphs", "min_sum",
                  "max_sum", "min_prod", "max_prod");
    os << line;
    auto row = [&](std::string_view name, const ClassStats& s) {
      if (s.count == 0) {
        std::snprintf(line, sizeof line, "%-26.*s %8d %8s %8s %9s %9s\n", int(name.size()),
                      name.data(), 0, "-", "-", "-", "-");
      } else {
        std::snprintf(line, sizeof line, "%-26.*s %8zu %8d %8d %9d %9d\n", int(name.size()),
                      name.data(), s.count, s.min_sum, s.max_sum, s.min_prod, s.max_prod);
      }
      os << line;
    };
    row("all", all_);
    for (auto h : all_hypotheses()) {
      const auto it = by_flag_.find(h);
      row(hypothesis_name(h), it == by_flag_.end() ? ClassStats{} : it->second);
    }
    if (all_.count > 0) {
      os << "\nmax sum " << best_sum_ << " attained by " << attainer_count_ << " graph(s):\n";
      for (const auto& g6 : attainers_) os << "  " << g6 << '\n';
      if (attainer_count_ > attainers_.size()) {
        os << "  ... " << attainer_count_ - attainers_.size() << " more\n";
      }
    }
    os << '\n';
    std::snprintf(line, sizeof line, "%-48s %10s %10s %9s\n", "check", "applicable", "held",
                  "violated");
    os << line;
    for (const auto& [id, s] : checks_) {
      std::snprintf(line, sizeof line, "%-48s %10zu %10zu %9zu\n", id.c_str(), s.applicable,
                    s.held, s.violated);
      os << line;
    }
  }

private:
  ClassStats all_;
  std::map<HypothesisId, ClassStats> by_flag_;
  std::map<std::string, CheckStats> checks_;
  std::vector<NGReport> red_alerts_;
  int best_sum_ = INT_MIN;
  std::vector<std::string> attainers_;
  std::size_t attainer_count_ = 0;
};

void report_red_alerts(const Summary& summary, std::ostream& err) {
  for (const auto& r : summary.red_alerts()) {
    for (const auto& c : r.violations()) {
      err << "RED ALERT " << r.graph6 << ' ' << c.id << " bound=" << c.bound
          << " observed=" << c.observed << '\n';
    }
  }
}

} // namespace

ParamSet parse_params(const std::string& text, bool& want_gamma_p) {
  ParamSet params;
  want_gamma_p = false;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "gp") want_gamma_p = true;
    else if (tok == "g") params.gamma = true;
    else if (tok == "z") params.zero_forcing = true;
    else throw std::invalid_argument("unknown parameter '" + tok + "' (expected gp, g, z)");
  }
  if (!want_gamma_p && !params.gamma && !params.zero_forcing) {
    throw std::invalid_argument("--params is empty");
  }
  return params;
}

std::string witness_text(VertexSet s, int base) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + base);
  }
  return out;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::Summary) {
    err << "compute supports --format jsonl or csv\n";
    return kUsage;
  }
  if (cfg.format == Format::Csv) {
    out << "n,graph6,label,gp,gp_witness,g,g_witness,z,z_witness,min_degree,max_degree,"
           "diameter,kappa,lambda,super_lambda,planar,regular,components\n";
  }
  const std::function<ComputeRow(const Graph&)> work = [&cfg](const Graph& g) {
    ComputeRow row;
    if (cfg.want_gamma_p) row.gp = gamma_p(g);
    if (cfg.params.gamma) row.g = gamma(g);
    if (cfg.params.zero_forcing) row.z = zero_forcing(g);
    const StructureReport s(g);
    row.degrees = {s.min_degree(), s.max_degree()};
    row.diameter = s.diameter();
    row.kappa = s.kappa();
    row.lambda = s.lambda();
    row.super_lambda = s.super_lambda();
    row.planar = s.planar();
    row.regular = s.regular_of();
    row.components = s.component_orders();
    return row;
  };
  const std::function<void(const Item&, ComputeRow&&)> emit = [&](const Item& item, ComputeRow&& r) {
    const Graph& g = *item.graph;
    const std::string g6 = emit_graph6(g);
    if (cfg.format == Format::Jsonl) {
      Json j;
      j["n"] = g.order();
      j["graph6"] = g6;
      if (item.label != g6) j["label"] = item.label;
      auto put = [&](const char* key, const std::optional<SolveResult>& s) {
        if (!s) return;
        j[key] = s->value;
        j[std::string(key) + "_witness"] = witness_json(s->witness, cfg.index_base);
      };
      put("gp", r.gp);
      put("g", r.g);
      put("z", r.z);
      Json m;
      m["min_degree"] = r.degrees.min_degree;
      m["max_degree"] = r.degrees.max_degree;
      m["diameter"] = r.diameter ? Json(*r.diameter) : Json(nullptr);
      m["kappa"] = r.kappa;
      m["lambda"] = r.lambda;
      m["super_lambda"] = r.super_lambda ? Json(*r.super_lambda) : Json(nullptr);
      m["planar"] = r.planar;
      m["regular"] = r.regular ? Json(*r.regular) : Json(nullptr);
      m["components"] = r.components;
      j["metrics"] = std::move(m);
      out << j.dump() << '\n';
    } else {
      auto val = [](const std::optional<SolveResult>& s) {
        return s ? std::to_string(s->value) : std::string{};
      };
      auto wit = [&](const std::optional<SolveResult>& s) {
        return s ? witness_text(s->witness, cfg.index_base) : std::string{};
      };
      std::string comps;
      for (int k : r.components) comps += (comps.empty() ? "" : " ") + std::to_string(k);
      out << g.order() << ",\"" << g6 << "\",\"" << item.label << "\"," << val(r.gp) << ','
          << wit(r.gp) << ',' << val(r.g) << ',' << wit(r.g) << ',' << val(r.z) << ','
          << wit(r.z) << ',' << r.degrees.min_degree << ',' << r.degrees.max_degree << ','
          << (r.diameter ? std::to_string(*r.diameter) : "inf") << ',' << r.kappa << ','
          << r.lambda << ','
          << (r.super_lambda ? (*r.super_lambda ? "true" : "false") : "") << ','
          << (r.planar ? "true" : "false") << ','
          << (r.regular ? std::to_string(*r.regular) : "") << ',' << comps << '\n';
    }
  };
  return process<ComputeRow>(cfg, err, work, emit);
}

int cmd_ngcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Summary summary;
  std::size_t processed = 0;
  std::size_t errors = 0;
  if (cfg.format == Format::Csv) out << csv_header() << '\n';
  const std::function<NGReport(const Graph&)> work = [&cfg](const Graph& g) {
    return ng_report(g, cfg.params);
  };
  const std::function<void(const Item&, NGReport&&)> emit = [&](const Item&, NGReport&& r) {
    ++processed;
    const bool selected = report_selected(cfg, r);
    summary.add(r, selected);
    if (!selected) return;
    if (cfg.format == Format::Jsonl) out << to_json_line(r) << '\n';
    else if (cfg.format == Format::Csv) out << to_csv_row(r) << '\n';
  };
  const int status = process<NGReport>(cfg, err, work, emit, &errors);
  summary.print(cfg.format == Format::Summary ? out : err, processed, errors);
  report_red_alerts(summary, err);
  if (status != kOk) return status;
  return summary.red_alerts().empty() ? kOk : kRedAlert;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  struct OrderStats {
    std::size_t graphs = 0;
    int max_sum_acg3 = INT_MIN;
    std::string max_sum_acg3_example;
    int min_sum = INT_MAX;
    std::string min_sum_example;
  };
  std::map<int, OrderStats> orders;
  Summary summary;
  std::size_t processed = 0;
  std::size_t errors = 0;
  const std::function<NGReport(const Graph&)> work = [&cfg](const Graph& g) {
    return ng_report(g, cfg.params);
  };
  const std::function<void(const Item&, NGReport&&)> emit = [&](const Item&, NGReport&& r) {
    ++processed;
    const bool selected = report_selected(cfg, r);
    summary.add(r, selected);
    if (!selected) return;
    auto& o = orders[r.n];
    ++o.graphs;
    if (r.has_flag(HypothesisId::AllComponentsGe3) && r.sum_p > o.max_sum_acg3) {
      o.max_sum_acg3 = r.sum_p;
      o.max_sum_acg3_example = r.graph6;
    }
    if (r.sum_p < o.min_sum) {
      o.min_sum = r.sum_p;
      o.min_sum_example = r.graph6;
    }
  };
  const int status = process<NGReport>(cfg, err, work, emit, &errors);
  if (cfg.format == Format::Summary) summary.print(out, processed, errors);
  report_red_alerts(summary, err);

  Json verdict;
  verdict["graphs"] = processed;
  verdict["input_errors"] = errors;
  verdict["violations"] = summary.red_alerts().size();
  Json per_order = Json::array();
  for (const auto& [n, o] : orders) {
    Json j;
    j["n"] = n;
    j["graphs"] = o.graphs;
    j["min_sum"] = o.min_sum;
    j["min_sum_example"] = o.min_sum_example;
    if (o.max_sum_acg3 != INT_MIN) {
      j["max_sum_all_components_ge3"] = o.max_sum_acg3;
      j["max_sum_all_components_ge3_example"] = o.max_sum_acg3_example;
    } else {
      j["max_sum_all_components_ge3"] = nullptr;
    }
    j["floor_n_over_3_plus_2"] = n / 3 + 2;
    per_order.push_back(std::move(j));
  }
  verdict["orders"] = std::move(per_order);
  const bool red = !summary.red_alerts().empty();
  verdict["verdict"] = red ? "red-alert" : (status != kOk ? "input-error" : "ok");
  out << verdict.dump() << '\n';
  if (status != kOk) return status;
  return red ? kRedAlert : kOk;
}

int cmd_generate(const std::string& family, std::ostream& out) {
  out << emit_graph6(generate(parse_family_spec(family))) << '\n';
  return kOk;
}

int cmd_enumerate(int n, std::ostream& out) {
  for (const auto& g : enumerate_all(n)) out << emit_graph6(g) << '\n';
  return kOk;
}

} // end of namespace pdng::cli
