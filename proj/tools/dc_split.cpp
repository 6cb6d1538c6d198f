// Benchmark CLI for the DC splitting library. Subcommands mirror the four
// experiment families; every run is fully seeded, so re-running a command
// with the same seed reproduces its CSV outputs byte for byte (wall-time
// columns aside).

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "dcsplit/bench.hpp"

namespace {

constexpr const char* kTuneSizes = "100x25,200x100,300x150,400x250,600x300,600x400";
constexpr const char* kRlsSizes = "100x50,200x128,521x304,700x500,1000x700,1500x1000";

struct CommonArgs {
  std::uint64_t seed = 0;
  std::string out = "out";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--seed", args.seed, "Seed for every random draw");
  cmd->add_option("--out", args.out, "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dc-split: benchmarks for averaged Douglas-Rachford DC solvers"};
  app.require_subcommand(1);

  // ---- tune-theta ----
  CommonArgs tt_common;
  std::string tt_sizes = kTuneSizes;
  std::string tt_grid = "0.0005,0.05,0.5,1,5";
  double tt_beta = 1.0;
  double tt_kappa = 0.009;
  double tt_l1 = 1.0;
  bool tt_spd = false;
  std::size_t tt_max_iter = 1000;
  CLI::App* tune_theta =
      app.add_subcommand("tune-theta", "Sweep the averaging weight theta");
  tune_theta->add_option("--sizes", tt_sizes, "MxN list, e.g. 100x25,200x100");
  tune_theta->add_option("--theta", tt_grid, "theta grid (comma list)");
  tune_theta->add_option("--beta", tt_beta, "fixed prox stepsize");
  tune_theta->add_option("--kappa", tt_kappa, "relaxation step");
  tune_theta->add_option("--l1-weight", tt_l1, "l1 regularization weight");
  tune_theta->add_flag("--spd", tt_spd,
                       "use the square G^T G + 0.1 I quadratic instead of the "
                       "rectangular Gaussian one");
  tune_theta->add_option("--max-iter", tt_max_iter, "iteration cap");
  add_common(tune_theta, tt_common);

  // ---- tune-beta ----
  CommonArgs tb_common;
  std::string tb_sizes = kTuneSizes;
  std::string tb_grid = "0.0001,0.001,0.1,1,10";
  double tb_theta = 0.0005;
  double tb_kappa = 0.009;
  double tb_l1 = 1.0;
  bool tb_spd = false;
  std::size_t tb_max_iter = 1000;
  CLI::App* tune_beta =
      app.add_subcommand("tune-beta", "Sweep the prox stepsize beta");
  tune_beta->add_option("--sizes", tb_sizes, "MxN list");
  tune_beta->add_option("--beta", tb_grid, "beta grid (comma list)");
  tune_beta->add_option("--theta", tb_theta, "fixed averaging weight");
  tune_beta->add_option("--kappa", tb_kappa, "relaxation step");
  tune_beta->add_option("--l1-weight", tb_l1, "l1 regularization weight");
  tune_beta->add_flag("--spd", tb_spd, "use the square SPD quadratic");
  tune_beta->add_option("--max-iter", tb_max_iter, "iteration cap");
  add_common(tune_beta, tb_common);

  // ---- rls-bench ----
  CommonArgs rb_common;
  std::string rb_sizes = kRlsSizes;
  std::string rb_methods = "drs-theta,drs-alpha,dca,gdcp";
  double rb_beta = 0.04;
  double rb_theta = 0.9;
  double rb_gdcp_kappa = 0.09;
  std::size_t rb_max_iter = 1000;
  CLI::App* rls = app.add_subcommand(
      "rls-bench", "Regularized least squares with log regularizer");
  rls->add_option("--sizes", rb_sizes, "mxN list");
  rls->add_option("--methods", rb_methods, "subset of drs-theta,drs-alpha,dca,gdcp");
  rls->add_option("--beta", rb_beta, "prox stepsize");
  rls->add_option("--theta", rb_theta, "averaging weight for drs-theta");
  rls->add_option("--gdcp-kappa", rb_gdcp_kappa, "constant step of the baseline");
  rls->add_option("--max-iter", rb_max_iter, "iteration cap");
  add_common(rls, rb_common);

  // ---- svm-bench ----
  CommonArgs sb_common;
  std::string sb_dataset;
  std::string sb_label = "class";
  double sb_positive = 1.0;
  std::string sb_splits = "0.1,0.2,0.3,0.4";
  std::string sb_methods = "admm,drs-theta,drs-alpha,dca,gdcp";
  bool sb_undersample = false;
  double sb_beta = 0.001;
  double sb_theta = 0.01;
  double sb_kappa = 0.3;
  double sb_C = 1.0;
  double sb_lambda = 0.001;
  std::size_t sb_max_iter = 2000;
  CLI::App* svm =
      app.add_subcommand("svm-bench", "l1-regularized SVM classification");
  svm->add_option("--dataset", sb_dataset, "CSV file with a header row")
      ->required();
  svm->add_option("--label-col", sb_label, "label column name");
  svm->add_option("--positive", sb_positive, "raw label value mapped to +1");
  svm->add_option("--splits", sb_splits, "test fractions (comma list)");
  svm->add_option("--methods", sb_methods,
                  "subset of admm,drs-theta,drs-alpha,dca,gdcp");
  svm->add_flag("--undersample", sb_undersample,
                "balance classes before splitting");
  svm->add_option("--beta", sb_beta, "prox stepsize");
  svm->add_option("--theta", sb_theta, "averaging weight for drs-theta");
  svm->add_option("--kappa", sb_kappa, "relaxation step");
  svm->add_option("--C", sb_C, "hinge loss weight");
  svm->add_option("--lambda", sb_lambda, "l1 weight");
  svm->add_option("--max-iter", sb_max_iter, "iteration cap");
  add_common(svm, sb_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (tune_theta->parsed()) {
      dcsplit::TuneConfig cfg;
      cfg.sizes = dcsplit::parse_sizes(tt_sizes);
      cfg.grid = dcsplit::parse_double_list(tt_grid);
      cfg.beta = tt_beta;
      cfg.kappa = tt_kappa;
      cfg.l1_weight = tt_l1;
      cfg.spd = tt_spd;
      cfg.max_iter = tt_max_iter;
      cfg.seed = dcsplit::RngSeed{tt_common.seed};
      cfg.out_dir = tt_common.out;
      dcsplit::run_tune(cfg, /*grid_is_theta=*/true);
      std::printf("tune-theta: wrote %s/tune_theta.csv\n", tt_common.out.c_str());
    } else if (tune_beta->parsed()) {
      dcsplit::TuneConfig cfg;
      cfg.sizes = dcsplit::parse_sizes(tb_sizes);
      cfg.grid = dcsplit::parse_double_list(tb_grid);
      cfg.theta = tb_theta;
      cfg.kappa = tb_kappa;
      cfg.l1_weight = tb_l1;
      cfg.spd = tb_spd;
      cfg.max_iter = tb_max_iter;
      cfg.seed = dcsplit::RngSeed{tb_common.seed};
      cfg.out_dir = tb_common.out;
      dcsplit::run_tune(cfg, /*grid_is_theta=*/false);
      std::printf("tune-beta: wrote %s/tune_beta.csv\n", tb_common.out.c_str());
    } else if (rls->parsed()) {
      dcsplit::RlsBenchConfig cfg;
      cfg.sizes = dcsplit::parse_sizes(rb_sizes);
      cfg.methods = dcsplit::parse_methods(rb_methods);
      cfg.beta = rb_beta;
      cfg.theta = rb_theta;
      cfg.gdcp_kappa = rb_gdcp_kappa;
      cfg.max_iter = rb_max_iter;
      cfg.seed = dcsplit::RngSeed{rb_common.seed};
      cfg.out_dir = rb_common.out;
      dcsplit::run_rls_bench(cfg);
      std::printf("rls-bench: wrote %s/rls_bench.csv\n", rb_common.out.c_str());
    } else if (svm->parsed()) {
      dcsplit::SvmBenchConfig cfg;
      cfg.dataset_path = sb_dataset;
      cfg.label_column = sb_label;
      cfg.positive_value = sb_positive;
      cfg.splits = dcsplit::parse_double_list(sb_splits);
      cfg.methods = dcsplit::parse_methods(sb_methods);
      cfg.undersample = sb_undersample;
      cfg.beta = sb_beta;
      cfg.theta = sb_theta;
      cfg.kappa = sb_kappa;
      cfg.C = sb_C;
      cfg.lambda = sb_lambda;
      cfg.max_iter = sb_max_iter;
      cfg.seed = dcsplit::RngSeed{sb_common.seed};
      cfg.out_dir = sb_common.out;
      dcsplit::run_svm_bench(cfg);
      std::printf("svm-bench: wrote per-split tables under %s\n",
                  sb_common.out.c_str());
    }
  } catch (const dcsplit::ParseError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return 2;
  } catch (const dcsplit::MissingColumnError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return 2;
  } catch (const dcsplit::SingleClassError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return 2;
  } catch (const dcsplit::Error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
