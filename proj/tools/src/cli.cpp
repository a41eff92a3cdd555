#include "pdng_cli/cli.hpp"

#include <fstream>
#include <memory>

#include "CLI11.hpp"
#include "commands.hpp"
#include "pdng/canonical.hpp"
#include "pdng/generators.hpp"
#include "pdng/graph.hpp"
#include "pdng/stream.hpp"

namespace pdng::cli {

namespace {

struct Raw {
  std::string params = "gp";
  std::vector<std::string> filters;
  std::vector<std::string> find;
  std::string format = "jsonl";
  std::optional<std::string> output;
};

void add_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--graph6", cfg.input.graph6, "Single graph6 string");
  sub->add_option("--file", cfg.input.file, "graph6 file, optionally gzip-compressed; '-' for stdin");
  sub->add_option("--enumerate", cfg.input.enumerate, "All graphs of order N (N <= 8)");
  sub->add_option("--family", cfg.input.family, "Family spec, e.g. necklace:3, comb:9, rk3:4");
  sub->add_option("--random", cfg.input.random, "COUNT random graphs G(N,P), given as N:P:COUNT");
  sub->add_option("--seed", cfg.input.seed, "Seed for --random");
  sub->add_flag("--strict", cfg.input.strict,
                "Reject nonzero graph6 padding and stop at the first malformed line");
}

void add_run(CLI::App* sub, RunConfig& cfg, Raw& raw, bool with_filters) {
  sub->add_option("--params", raw.params, "Comma list of gp, g, z")->capture_default_str();
  sub->add_option("--format", raw.format, "jsonl, csv or summary")
      ->check(CLI::IsMember({"jsonl", "csv", "summary"}))
      ->capture_default_str();
  sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--output", raw.output, "Write results to PATH instead of stdout");
  sub->add_option("--index-base", cfg.index_base, "First vertex label in witnesses")
      ->check(CLI::IsMember({0, 1}));
  if (with_filters) {
    sub->add_option("--filter", raw.filters, "Required hypothesis flags, e.g. all-components-ge3")
        ->delimiter(',');
    sub->add_option("--find", raw.find, "KEY=VAL with KEY in sum, prod, p, p_bar, g, g_bar, z, z_bar");
  }
}

void finish_config(RunConfig& cfg, const Raw& raw) {
  cfg.params = parse_params(raw.params, cfg.want_gamma_p);
  if (raw.format == "csv") cfg.format = Format::Csv;
  else if (raw.format == "summary") cfg.format = Format::Summary;
  for (const auto& f : raw.filters) {
    auto h = parse_hypothesis(f);
    if (!h) throw CLI::ValidationError("--filter", "unknown hypothesis '" + f + "'");
    cfg.filters.push_back(*h);
  }
  for (const auto& f : raw.find) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--find", "expected KEY=VAL");
    cfg.find.emplace_back(f.substr(0, eq), std::stoi(f.substr(eq + 1)));
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power domination Nordhaus-Gaddum toolkit", "pdng"};
  app.require_subcommand(1);

  RunConfig cfg;
  Raw raw;
  std::string target;
  std::string family;
  int order = 0;

  auto* compute = app.add_subcommand("compute", "Power domination, domination and zero forcing numbers");
  add_input(compute, cfg);
  add_run(compute, cfg, raw, false);

  auto* ngcheck = app.add_subcommand("ngcheck", "Nordhaus-Gaddum reports and bound checks");
  add_input(ngcheck, cfg);
  add_run(ngcheck, cfg, raw, true);

  auto* sweep = app.add_subcommand("sweep", "Verify every bound over a whole catalog");
  add_input(sweep, cfg);
  add_run(sweep, cfg, raw, true);

  auto* reconstruct = app.add_subcommand("reconstruct", "Search catalogs for the known extremal graphs");
  reconstruct->add_option("target", target, "s4k3, fig2, fig3 or cubic-diam2")
      ->required()
      ->check(CLI::IsMember({"s4k3", "fig2", "fig3", "cubic-diam2"}));
  reconstruct->add_option("--file", cfg.input.file, "Catalog to search instead of the default");
  reconstruct->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  reconstruct->add_option("--output", raw.output, "Write results to PATH instead of stdout");

  auto* generate = app.add_subcommand("generate", "Print a family member as graph6");
  generate->add_option("--family", family, "Family spec")->required();
  generate->add_option("--output", raw.output, "Write results to PATH instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "Print all graphs of order N as graph6");
  enumerate->add_option("n", order, "Order, at most 8")->required();
  enumerate->add_option("--output", raw.output, "Write results to PATH instead of stdout");

  for (auto* sub : {compute, ngcheck, sweep, reconstruct}) {
    sub->add_option("--data-dir", cfg.data_dir, "Directory holding graph6 catalogs");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    finish_config(cfg, raw);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const bool needs_input = compute->parsed() || ngcheck->parsed() || sweep->parsed();
  if (needs_input && cfg.input.sources() != 1) {
    err << "error: give exactly one of --graph6, --file, --enumerate, --family, --random\n";
    return kUsage;
  }

  std::unique_ptr<std::ofstream> file_out;
  if (raw.output) {
    file_out = std::make_unique<std::ofstream>(*raw.output);
    if (!*file_out) {
      err << "error: cannot write " << *raw.output << '\n';
      return kInput;
    }
  }
  std::ostream& sink = file_out ? *file_out : out;

  try {
    if (compute->parsed()) return cmd_compute(cfg, sink, err);
    if (ngcheck->parsed()) return cmd_ngcheck(cfg, sink, err);
    if (sweep->parsed()) return cmd_sweep(cfg, sink, err);
    if (reconstruct->parsed()) return cmd_reconstruct(target, cfg, sink, err);
    if (generate->parsed()) return cmd_generate(family, sink);
    if (enumerate->parsed()) return cmd_enumerate(order, sink);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const FamilySpecError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const EnumerationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // end of namespace pdng::cli
