#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dcsplit/data.hpp"
#include "dcsplit/metrics.hpp"
#include "dcsplit/problems.hpp"
#include "dcsplit/serialize.hpp"
#include "dcsplit/solvers.hpp"

namespace dcsplit {

// ---------------------------------------------------------------------------
// Benchmark harness shared by the CLI and the acceptance suite. Each
// subcommand expands into independent (instance, parameter) jobs, runs them
// on a small worker pool, then assembles tables single-threaded so output
// bytes never depend on scheduling.
// ---------------------------------------------------------------------------

struct SizePair {
  std::size_t rows = 0;
  std::size_t cols = 0;
};

inline std::vector<SizePair> parse_sizes(const std::string& text) {
  std::vector<SizePair> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos)
      throw InvalidConfigError("size '" + item + "' must look like 100x25");
    SizePair s;
    s.rows = std::stoul(item.substr(0, x));
    s.cols = std::stoul(item.substr(x + 1));
    if (s.rows < 1 || s.cols < 1)
      throw InvalidConfigError("size '" + item + "' must be positive");
    out.push_back(s);
  }
  if (out.empty()) throw InvalidConfigError("empty size list");
  return out;
}

inline std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw InvalidConfigError("empty list");
  return out;
}

inline MethodTag parse_method(const std::string& name) {
  if (name == "drs-theta") return MethodTag::drs_theta;
  if (name == "drs-alpha") return MethodTag::drs_alpha;
  if (name == "gdcp") return MethodTag::gdcp;
  if (name == "dca") return MethodTag::dca;
  if (name == "admm") return MethodTag::admm;
  throw InvalidConfigError("unknown method '" + name + "'");
}

inline std::vector<MethodTag> parse_methods(const std::string& text) {
  std::vector<MethodTag> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_method(item));
  if (out.empty()) throw InvalidConfigError("empty method list");
  return out;
}

inline std::size_t worker_count(std::size_t jobs) {
  std::size_t cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("DC_SPLIT_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) cap = static_cast<std::size_t>(v);
  }
  return std::min(cap, std::max<std::size_t>(jobs, 1));
}

// Runs all jobs; each job writes only into its own result slot. The first
// exception (if any) is rethrown on the calling thread after the pool joins.
inline void run_jobs(const std::vector<std::function<void()>>& jobs) {
  const std::size_t workers = worker_count(jobs.size());
  if (workers <= 1) {
    for (const auto& job : jobs) job();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        try {
          jobs[i]();
        } catch (...) {
          std::scoped_lock lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------
// CSV table assembly.
// ---------------------------------------------------------------------------

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const {
    std::string out;
    for (std::size_t j = 0; j < header.size(); ++j) {
      out += header[j];
      out += j + 1 < header.size() ? ',' : '\n';
    }
    for (const auto& row : rows)
      for (std::size_t j = 0; j < row.size(); ++j) {
        out += row[j];
        out += j + 1 < row.size() ? ',' : '\n';
      }
    return out;
  }
};

inline void ensure_dir(const std::string& dir) {
  std::filesystem::create_directories(dir);
}

// ---------------------------------------------------------------------------
// Parameter-tuning benchmarks on the quadratic + l1 - Huber model.
// Preset: kappa = 0.009, delta = 0.001, stop ||x+ - x||^2 < 1e-5, 1000 iters.
// ---------------------------------------------------------------------------

struct TuneConfig {
  std::vector<SizePair> sizes;
  std::vector<double> grid;  // theta values or beta values
  double beta = 1.0;         // fixed beta for the theta sweep
  double theta = 0.0005;     // fixed theta for the beta sweep
  double kappa = 0.009;
  double delta = 0.001;
  double l1_weight = 1.0;
  bool spd = false;  // square G^T G + 0.1 I instead of the rectangular path
  std::size_t max_iter = 1000;
  RngSeed seed;
  std::string out_dir;  // empty: no files written
  bool write_traces = true;
};

struct TuneCell {
  std::size_t iterations = 0;
  double time_s = 0.0;
  bool converged = false;
};

struct TuneResult {
  Table table;
  // cell[i][j]: sizes[i] x grid[j]
  std::vector<std::vector<TuneCell>> cells;
};

namespace detail {

inline RunResult tune_run(const SizePair& size, double theta, double beta,
                          const TuneConfig& cfg) {
  QuadL1HuberSpec spec;
  spec.M = size.rows;
  spec.N = size.cols;
  spec.delta = cfg.delta;
  spec.l1_weight = cfg.l1_weight;
  spec.spd = cfg.spd;
  spec.seed = cfg.seed.derive(size.rows * 131071 + size.cols);
  const DCProblem problem = build_quad_l1_huber(spec);
  SolverConfig c;
  c.beta = beta;
  c.theta = theta;
  c.kappa = KappaSchedule::constant(cfg.kappa);
  c.max_iter = cfg.max_iter;
  c.stop = {StopRule::Kind::squared_step, 1e-5};
  c.seed = spec.seed;
  const Vector x0 = gaussian_vector(spec.N, spec.seed.derive(99));
  Method m;
  m.tag = MethodTag::drs_theta;
  return solve(problem, m, c, x0);
}

inline std::string size_tag(const SizePair& s) {
  return std::to_string(s.rows) + "x" + std::to_string(s.cols);
}

}  // namespace detail

inline TuneResult run_tune(const TuneConfig& cfg, bool grid_is_theta) {
  if (cfg.grid.empty() || cfg.sizes.empty())
    throw InvalidConfigError("tune: empty grid or size list");
  for (double v : cfg.grid)
    if (grid_is_theta ? v < 0.0 : v <= 0.0)
      throw InvalidConfigError("tune: grid value out of range");
  // reject bad settings before any work starts
  for (double v : cfg.grid) {
    SolverConfig probe;
    probe.beta = grid_is_theta ? cfg.beta : v;
    probe.theta = grid_is_theta ? v : cfg.theta;
    probe.kappa = KappaSchedule::constant(cfg.kappa);
    probe.validate();
  }

  TuneResult res;
  res.cells.assign(cfg.sizes.size(),
                   std::vector<TuneCell>(cfg.grid.size()));
  std::vector<RunResult> runs(cfg.sizes.size() * cfg.grid.size());
  std::vector<std::function<void()>> jobs;
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i)
    for (std::size_t j = 0; j < cfg.grid.size(); ++j)
      jobs.push_back([&, i, j] {
        const double theta = grid_is_theta ? cfg.grid[j] : cfg.theta;
        const double beta = grid_is_theta ? cfg.beta : cfg.grid[j];
        runs[i * cfg.grid.size() + j] =
            detail::tune_run(cfg.sizes[i], theta, beta, cfg);
      });
  run_jobs(jobs);

  const std::string param = grid_is_theta ? "theta" : "beta";
  res.table.header = {"M", "N"};
  for (double v : cfg.grid) {
    res.table.header.push_back("iter_" + param + "_" + fmt_g(v));
    res.table.header.push_back("time_s_" + param + "_" + fmt_g(v));
  }
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    std::vector<std::string> row = {std::to_string(cfg.sizes[i].rows),
                                    std::to_string(cfg.sizes[i].cols)};
    for (std::size_t j = 0; j < cfg.grid.size(); ++j) {
      const RunResult& r = runs[i * cfg.grid.size() + j];
      res.cells[i][j] = {r.trace.terminal.total_iterations,
                         r.trace.terminal.total_seconds,
                         r.trace.terminal.converged};
      row.push_back(std::to_string(r.trace.terminal.total_iterations));
      row.push_back(fmt_g(r.trace.terminal.total_seconds));
    }
    res.table.rows.push_back(std::move(row));
  }

  if (!cfg.out_dir.empty()) {
    ensure_dir(cfg.out_dir);
    const std::string stem = grid_is_theta ? "tune_theta" : "tune_beta";
    write_file(cfg.out_dir + "/" + stem + ".csv", res.table.to_csv());
    nlohmann::json summary;
    summary["subcommand"] = stem;
    summary["seed"] = cfg.seed.value;
    summary["runs"] = nlohmann::json::array();
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i)
      for (std::size_t j = 0; j < cfg.grid.size(); ++j) {
        const RunResult& r = runs[i * cfg.grid.size() + j];
        nlohmann::json one = summary_json(r);
        one["instance"] = detail::size_tag(cfg.sizes[i]);
        one[param] = cfg.grid[j];
        summary["runs"].push_back(one);
        if (cfg.write_traces) {
          ensure_dir(cfg.out_dir + "/traces");
          write_file(cfg.out_dir + "/traces/" + stem + "_" +
                         detail::size_tag(cfg.sizes[i]) + "_" + param +
                         fmt_g(cfg.grid[j]) + ".csv",
                     to_csv(r.trace));
        }
      }
    write_file(cfg.out_dir + "/summary.json", summary.dump(2) + "\n");
  }
  return res;
}

// ---------------------------------------------------------------------------
// Regularized-least-squares comparison benchmark.
// Preset: mu = 0.001, eps = 0.5, beta = 0.04, kappa_n = n/(n+10),
// theta = 0.9, alpha_n = 1/(n+1), stop ||dx||/max{1,||x||} < 1e-5, 1000
// iters. The baseline runs with its customary constant step 0.09.
// ---------------------------------------------------------------------------

struct RlsBenchConfig {
  std::vector<SizePair> sizes;  // m x N
  std::vector<MethodTag> methods = {MethodTag::drs_theta, MethodTag::drs_alpha,
                                    MethodTag::dca, MethodTag::gdcp};
  double mu = 0.001;
  double epsilon = 0.5;
  double beta = 0.04;
  double theta = 0.9;
  std::size_t max_iter = 1000;
  double gdcp_kappa = 0.09;
  RngSeed seed;
  std::string out_dir;
  bool write_traces = true;
};

struct RlsRunRow {
  SizePair size;
  MethodTag method;
  std::size_t iterations = 0;
  std::size_t prox_pairs = 0;  // = iterations except for the two-level dca
  double time_s = 0.0;
  bool converged = false;
  double final_err = 0.0;
};

struct RlsBenchResult {
  Table table;
  std::vector<RlsRunRow> rows;
};

inline SolverConfig rls_method_config(const RlsBenchConfig& cfg,
                                      MethodTag tag) {
  SolverConfig c;
  c.beta = cfg.beta;
  c.max_iter = cfg.max_iter;
  c.stop = {StopRule::Kind::relative_step, 1e-5};
  switch (tag) {
    case MethodTag::drs_theta:
      c.theta = cfg.theta;
      c.kappa = KappaSchedule::fraction(10.0);
      break;
    case MethodTag::drs_alpha:
      c.alpha = AlphaSchedule::harmonic(1.0);
      c.kappa = KappaSchedule::fraction(10.0);
      break;
    case MethodTag::gdcp:
      c.kappa = KappaSchedule::constant(cfg.gdcp_kappa);
      break;
    default:
      c.kappa = KappaSchedule::constant(1.0);
      break;
  }
  return c;
}

inline RlsBenchResult run_rls_bench(const RlsBenchConfig& cfg) {
  if (cfg.sizes.empty() || cfg.methods.empty())
    throw InvalidConfigError("rls-bench: empty sizes or methods");
  for (MethodTag t : cfg.methods) {
    if (t == MethodTag::admm)
      throw InvalidConfigError("rls-bench: admm is not part of this benchmark");
    rls_method_config(cfg, t).validate();  // before any work starts
  }

  const std::size_t nm = cfg.methods.size();
  std::vector<RunResult> runs(cfg.sizes.size() * nm);
  std::vector<std::function<void()>> jobs;
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    for (std::size_t j = 0; j < nm; ++j) {
      jobs.push_back([&, i, j] {
        RlsLogSpec spec;
        spec.m = cfg.sizes[i].rows;
        spec.N = cfg.sizes[i].cols;
        spec.mu = cfg.mu;
        spec.epsilon = cfg.epsilon;
        spec.seed = cfg.seed.derive(spec.m * 524287 + spec.N);
        const DCProblem problem = build_rls_log(spec);
        SolverConfig c = rls_method_config(cfg, cfg.methods[j]);
        c.seed = spec.seed;
        const Vector x0 = gaussian_vector(spec.N, spec.seed.derive(99));
        Method m;
        m.tag = cfg.methods[j];
        runs[i * nm + j] = solve(problem, m, c, x0);
      });
    }
  }
  run_jobs(jobs);

  RlsBenchResult res;
  res.table.header = {"m",          "N",      "method",    "iterations",
                      "prox_pairs", "time_s", "converged", "final_err"};
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i)
    for (std::size_t j = 0; j < nm; ++j) {
      const RunResult& r = runs[i * nm + j];
      RlsRunRow row;
      row.size = cfg.sizes[i];
      row.method = cfg.methods[j];
      row.iterations = r.trace.terminal.total_iterations;
      row.prox_pairs = r.trace.terminal.total_prox_pairs;
      row.time_s = r.trace.terminal.total_seconds;
      row.converged = r.trace.terminal.converged;
      row.final_err = r.trace.rows.empty() ? 0.0 : r.trace.rows.back().err;
      res.rows.push_back(row);
      res.table.rows.push_back({std::to_string(row.size.rows),
                                std::to_string(row.size.cols),
                                method_name(row.method),
                                std::to_string(row.iterations),
                                std::to_string(row.prox_pairs),
                                fmt_g(row.time_s),
                                row.converged ? "1" : "0",
                                fmt_g(row.final_err)});
    }

  if (!cfg.out_dir.empty()) {
    ensure_dir(cfg.out_dir);
    write_file(cfg.out_dir + "/rls_bench.csv", res.table.to_csv());
    nlohmann::json summary;
    summary["subcommand"] = "rls-bench";
    summary["seed"] = cfg.seed.value;
    summary["runs"] = nlohmann::json::array();
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i)
      for (std::size_t j = 0; j < nm; ++j) {
        const RunResult& r = runs[i * nm + j];
        nlohmann::json one = summary_json(r);
        one["instance"] = detail::size_tag(cfg.sizes[i]);
        summary["runs"].push_back(one);
        if (cfg.write_traces) {
          ensure_dir(cfg.out_dir + "/traces");
          write_file(cfg.out_dir + "/traces/rls_" +
                         detail::size_tag(cfg.sizes[i]) + "_" +
                         method_name(cfg.methods[j]) + ".csv",
                     to_csv(r.trace));
        }
      }
    write_file(cfg.out_dir + "/summary.json", summary.dump(2) + "\n");
  }
  return res;
}

// ---------------------------------------------------------------------------
// SVM benchmark.
// Preset: C = 1, lambda = 0.001, theta = 0.01, beta = 0.001, kappa = 0.3,
// alpha_n = 1/(10(n+1)), stop ||x+ - x|| < 1e-4, 2000 iters.
// ---------------------------------------------------------------------------

struct SvmBenchConfig {
  std::string dataset_path;
  std::string label_column = "class";
  double positive_value = 1.0;
  bool undersample = false;
  std::vector<double> splits = {0.1, 0.2, 0.3, 0.4};
  std::vector<MethodTag> methods = {MethodTag::admm, MethodTag::drs_theta,
                                    MethodTag::drs_alpha, MethodTag::dca,
                                    MethodTag::gdcp};
  double C = 1.0;
  double lambda = 0.001;
  double beta = 0.001;
  double theta = 0.01;
  double kappa = 0.3;
  double admm_penalty = 1.0;
  std::size_t max_iter = 2000;
  RngSeed seed;
  std::string out_dir;
  bool write_traces = true;
};

struct SvmRunRow {
  double split = 0.0;
  MethodTag method;
  ClassificationReport report;
  bool converged = false;
};

struct SvmBenchResult {
  std::vector<Table> tables;  // one per split
  std::vector<SvmRunRow> rows;
};

inline SolverConfig svm_method_config(const SvmBenchConfig& cfg,
                                      MethodTag tag) {
  SolverConfig c;
  c.beta = cfg.beta;
  c.kappa = KappaSchedule::constant(cfg.kappa);
  c.max_iter = cfg.max_iter;
  c.stop = {StopRule::Kind::absolute_step, 1e-4};
  if (tag == MethodTag::drs_theta) c.theta = cfg.theta;
  if (tag == MethodTag::drs_alpha) c.alpha = AlphaSchedule::harmonic(10.0);
  return c;
}

inline SvmBenchResult run_svm_bench(const SvmBenchConfig& cfg) {
  if (cfg.splits.empty() || cfg.methods.empty())
    throw InvalidConfigError("svm-bench: empty splits or methods");
  for (double s : cfg.splits)
    if (!(s > 0.0 && s < 1.0))
      throw InvalidConfigError("svm-bench: split fraction out of (0,1)");
  for (MethodTag t : cfg.methods)
    svm_method_config(cfg, t).validate();  // before any work starts
  if (!(cfg.admm_penalty > 0.0))
    throw InvalidConfigError("svm-bench: admm penalty must be > 0");

  Dataset data = load_csv(cfg.dataset_path, cfg.label_column,
                          cfg.positive_value);
  if (cfg.undersample)
    data = undersample_majority(data, cfg.seed.derive(17));

  struct Prepared {
    Dataset train, test;
    Vector x0;
  };
  std::vector<Prepared> prepared(cfg.splits.size());
  for (std::size_t i = 0; i < cfg.splits.size(); ++i) {
    const SplitSpec split{cfg.splits[i], cfg.seed.derive(100 + i), true};
    auto [train, test] = train_test_split(data, split);
    auto [tr, te] = standardize(train, test);
    prepared[i].train = std::move(tr);
    prepared[i].test = std::move(te);
    // one starting point per split, shared by every method
    prepared[i].x0 =
        gaussian_vector(data.X.cols + 1, cfg.seed.derive(200 + i));
  }

  const std::size_t nm = cfg.methods.size();
  std::vector<RunResult> runs(cfg.splits.size() * nm);
  std::vector<std::vector<int>> predictions(cfg.splits.size() * nm);
  std::vector<std::function<void()>> jobs;
  for (std::size_t i = 0; i < cfg.splits.size(); ++i)
    for (std::size_t j = 0; j < nm; ++j)
      jobs.push_back([&, i, j] {
        const Prepared& prep = prepared[i];
        SvmSpec spec;
        spec.C = cfg.C;
        spec.lambda = cfg.lambda;
        const DCProblem problem = build_svm(spec, prep.train);
        SolverConfig c = svm_method_config(cfg, cfg.methods[j]);
        c.seed = cfg.seed;
        Method m;
        m.tag = cfg.methods[j];
        m.admm_penalty = cfg.admm_penalty;
        RunResult r = solve(problem, m, c, prep.x0);
        const Vector w(r.x.begin(), r.x.end() - 1);
        predictions[i * nm + j] = predict_svm(w, r.x.back(), prep.test.X);
        runs[i * nm + j] = std::move(r);
      });
  run_jobs(jobs);

  SvmBenchResult res;
  nlohmann::json summary;
  summary["subcommand"] = "svm-bench";
  summary["seed"] = cfg.seed.value;
  summary["dataset"] = cfg.dataset_path;
  summary["undersample"] = cfg.undersample;
  summary["runs"] = nlohmann::json::array();

  for (std::size_t i = 0; i < cfg.splits.size(); ++i) {
    Table t;
    t.header = {"method", "accuracy", "precision",  "mae",      "mse",
                "rmse",   "time_s",   "iterations", "converged"};
    for (std::size_t j = 0; j < nm; ++j) {
      const RunResult& r = runs[i * nm + j];
      const std::vector<int>& pred = predictions[i * nm + j];
      SvmRunRow row;
      row.split = cfg.splits[i];
      row.method = cfg.methods[j];
      row.converged = r.trace.terminal.converged;
      ClassificationReport& rep = row.report;
      rep.accuracy = accuracy(prepared[i].test.y, pred);
      rep.precision =
          precision(prepared[i].test.y, pred, &rep.precision_degenerate);
      rep.mae = mae(prepared[i].test.y, pred);
      rep.mse = mse(prepared[i].test.y, pred);
      rep.rmse = rmse(prepared[i].test.y, pred);
      rep.time_seconds = r.trace.terminal.total_seconds;
      rep.iterations = r.trace.terminal.total_iterations;
      res.rows.push_back(row);
      t.rows.push_back({method_name(row.method), fmt_g(rep.accuracy),
                        fmt_g(rep.precision), fmt_g(rep.mae), fmt_g(rep.mse),
                        fmt_g(rep.rmse), fmt_g(rep.time_seconds),
                        std::to_string(rep.iterations),
                        row.converged ? "1" : "0"});

      nlohmann::json one = summary_json(r);
      one["split"] = cfg.splits[i];
      one["accuracy"] = rep.accuracy;
      one["precision"] = rep.precision;
      one["precision_degenerate"] = rep.precision_degenerate;
      one["mae"] = rep.mae;
      one["mse"] = rep.mse;
      one["rmse"] = rep.rmse;
      summary["runs"].push_back(one);
    }
    res.tables.push_back(std::move(t));
  }

  if (!cfg.out_dir.empty()) {
    ensure_dir(cfg.out_dir);
    for (std::size_t i = 0; i < cfg.splits.size(); ++i) {
      const int pct = static_cast<int>(cfg.splits[i] * 100.0 + 0.5);
      write_file(cfg.out_dir + "/svm_split_" + std::to_string(pct) + ".csv",
                 res.tables[i].to_csv());
      if (cfg.write_traces) {
        ensure_dir(cfg.out_dir + "/traces");
        for (std::size_t j = 0; j < nm; ++j)
          write_file(cfg.out_dir + "/traces/svm_split" + std::to_string(pct) +
                         "_" + method_name(cfg.methods[j]) + ".csv",
                     to_csv(runs[i * nm + j].trace));
      }
    }
    write_file(cfg.out_dir + "/summary.json", summary.dump(2) + "\n");
  }
  return res;
}

// ---------------------------------------------------------------------------
// Synthetic dataset fixtures. The repository ships no third-party data; these
// seeded generators produce schema-compatible stand-ins (committed under
// data/, regenerable with the gen-fixture tool).
// ---------------------------------------------------------------------------

inline std::string dataset_to_csv(const Dataset& d,
                                  const std::string& label_name,
                                  double positive_raw, double negative_raw) {
  std::string out;
  for (const auto& name : d.feature_names) {
    out += name;
    out += ',';
  }
  out += label_name;
  out += '\n';
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.X.cols; ++j) {
      out += fmt_g(d.X(i, j));
      out += ',';
    }
    out += fmt_g(d.y[i] == 1 ? positive_raw : negative_raw);
    out += '\n';
  }
  return out;
}

// Two-Gaussian stand-in with the banknote file's schema: 1372 rows, four
// features, 762 negative (genuine, class 0) vs 610 positive (fake, class 1).
inline Dataset make_synthetic_banknote(RngSeed seed) {
  const std::size_t n_neg = 762, n_pos = 610;
  const double mean_neg[4] = {2.8, 5.0, 0.9, -1.2};
  const double mean_pos[4] = {-2.8, -4.0, 2.0, -1.2};
  const double sd_neg[4] = {2.0, 5.0, 4.0, 2.0};
  const double sd_pos[4] = {1.9, 5.2, 5.0, 2.1};

  Dataset d;
  d.feature_names = {"variance", "skewness", "curtosis", "entropy"};
  d.X = Matrix(n_neg + n_pos, 4);
  d.y.assign(n_neg, -1);
  d.y.insert(d.y.end(), n_pos, 1);
  Rng rng(seed);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const bool pos = d.y[i] == 1;
    for (std::size_t j = 0; j < 4; ++j)
      d.X(i, j) = (pos ? mean_pos[j] : mean_neg[j]) +
                  (pos ? sd_pos[j] : sd_neg[j]) * rng.normal();
  }
  // seeded row shuffle so class blocks are interleaved in the file
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    const std::size_t j = i + rng.uniform_index(d.size() - i);
    for (std::size_t k = 0; k < 4; ++k) std::swap(d.X(i, k), d.X(j, k));
    std::swap(d.y[i], d.y[j]);
  }
  d.provenance.push_back("make_synthetic_banknote(seed=" +
                         std::to_string(seed.value) + ")");
  return d;
}

// Small imbalanced fixture (30 positive / 270 negative) for the
// undersampling path.
inline Dataset make_synthetic_imbalanced(RngSeed seed) {
  const std::size_t n_pos = 30, n_neg = 270;
  Dataset d;
  d.feature_names = {"f0", "f1", "f2"};
  d.X = Matrix(n_pos + n_neg, 3);
  d.y.assign(n_pos, 1);
  d.y.insert(d.y.end(), n_neg, -1);
  Rng rng(seed);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double m = d.y[i] == 1 ? 2.0 : -1.0;
    for (std::size_t j = 0; j < 3; ++j)
      d.X(i, j) = (j < 2 ? m : 0.0) + 1.5 * rng.normal();
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    const std::size_t j = i + rng.uniform_index(d.size() - i);
    for (std::size_t k = 0; k < 3; ++k) std::swap(d.X(i, k), d.X(j, k));
    std::swap(d.y[i], d.y[j]);
  }
  d.provenance.push_back("make_synthetic_imbalanced(seed=" +
                         std::to_string(seed.value) + ")");
  return d;
}

}  // namespace dcsplit
