#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "input.hpp"
#include "pdng/ng_analysis.hpp"

namespace pdng::cli {

enum class Format { Jsonl, Csv, Summary };

struct RunConfig {
  InputSpec input;
  ParamSet params;
  bool want_gamma_p = true;
  std::vector<HypothesisId> filters;
  std::vector<std::pair<std::string, int>> find;
  Format format = Format::Jsonl;
  int jobs = 1;
  int index_base = 0;
  std::optional<std::string> data_dir;
};

/// Parses "gp,g,z" into the parameter set; throws std::invalid_argument.
ParamSet parse_params(const std::string& text, bool& want_gamma_p);

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ngcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_reconstruct(const std::string& target, const RunConfig& cfg, std::ostream& out,
                    std::ostream& err);
int cmd_generate(const std::string& family, std::ostream& out);
int cmd_enumerate(int n, std::ostream& out);

std::string witness_text(VertexSet s, int base);

} // end of namespace pdng::cli
