#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "dcsplit/core.hpp"
#include "dcsplit/solvers.hpp"

namespace dcsplit {

// Fixed float formatting so identical runs serialize to identical bytes.
inline std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string to_csv(const RunTrace& trace) {
  std::string out = "n,err,objective,time_s,step_norm,gap_norm,lyap_c,lyap_a\n";
  for (const TraceRow& r : trace.rows) {
    out += std::to_string(r.n);
    out += ',';
    out += fmt_g(r.err);
    out += ',';
    if (r.objective) out += fmt_g(*r.objective);
    out += ',';
    out += fmt_g(r.time_s);
    out += ',';
    out += fmt_g(r.step_norm);
    out += ',';
    out += fmt_g(r.gap_norm);
    out += ',';
    if (r.lyap_c) out += fmt_g(*r.lyap_c);
    out += ',';
    if (r.lyap_a) out += fmt_g(*r.lyap_a);
    out += '\n';
  }
  return out;
}

inline const char* stop_rule_name(StopRule::Kind k) {
  switch (k) {
    case StopRule::Kind::squared_step: return "squared-step";
    case StopRule::Kind::relative_step: return "relative-step";
    case StopRule::Kind::absolute_step: return "absolute-step";
  }
  return "?";
}

inline nlohmann::json summary_json(const RunResult& result) {
  nlohmann::json j;
  j["method"] = method_name(result.method.tag);
  j["converged"] = result.trace.terminal.converged;
  j["iterations"] = result.trace.terminal.total_iterations;
  j["prox_pairs"] = result.trace.terminal.total_prox_pairs;
  j["time_s"] = result.trace.terminal.total_seconds;
  j["r1"] = result.trace.terminal.r1;
  j["r2"] = result.trace.terminal.r2;
  j["inner_not_converged"] = result.trace.terminal.inner_not_converged;
  if (!result.trace.rows.empty()) {
    j["final_err"] = result.trace.rows.back().err;
    if (result.trace.rows.back().objective)
      j["final_objective"] = *result.trace.rows.back().objective;
  }
  nlohmann::json cfg;
  cfg["beta"] = result.config.beta;
  cfg["theta"] = result.config.theta;
  cfg["alpha"] = result.config.alpha.describe();
  cfg["kappa"] = result.config.kappa.describe();
  cfg["max_iter"] = result.config.max_iter;
  cfg["stop_rule"] = stop_rule_name(result.config.stop.kind);
  cfg["stop_tol"] = result.config.stop.tol;
  cfg["seed"] = result.config.seed.value;
  if (result.method.tag == MethodTag::admm)
    cfg["admm_penalty"] = result.method.admm_penalty;
  if (result.method.tag == MethodTag::dca) {
    cfg["dca_inner_budget"] = result.method.dca_inner_budget;
    cfg["dca_inner_tol"] = result.method.dca_inner_tol;
  }
  j["config"] = cfg;
  return j;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace dcsplit
