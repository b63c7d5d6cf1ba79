#include <iostream>

#include "CLI11.hpp"
#include "wenonn/errors.hpp"
#include "wenonn_tools/commands.hpp"
#include "wenonn_tools/problems.hpp"

using namespace wenonn;
using namespace wenonn::tools;

int main(int argc, char** argv) {
  CLI::App app{"wenonn: WENO5 schemes with learned weight compensation"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out-dir", out_dir, "Directory for outputs and manifest.json");
  };

  TrainOptions train;
  auto* t = app.add_subcommand("train", "Train a compensation network");
  t->add_option("--config", train.config_path, "Training config file")->required();
  t->add_option("--epochs", train.epochs, "Override the epoch count");
  t->add_option("--seed", train.seed, "Override the seed");
  t->add_flag("--quiet", train.quiet, "No per-epoch progress");
  add_out(t);

  AdrOptions adr;
  auto* a = app.add_subcommand("adr", "Spectrum and spectral error bound of a scheme");
  a->add_option("--scheme", adr.scheme, "linear|weno5-js|weno5-z|weno5-js-nn|weno5-z-nn");
  a->add_option("--checkpoint", adr.checkpoint, "Network checkpoint for NN schemes");
  a->add_option("--n,-N", adr.N, "Grid points (even)");
  add_out(a);

  RunOptions run;
  auto* r = app.add_subcommand("run", "Run a built-in problem");
  r->add_option("problem", run.problem, "Problem name")
      ->required()
      ->check(CLI::IsMember(problem_names()));
  r->add_option("--scheme", run.scheme, "Reconstruction scheme");
  r->add_option("--checkpoint", run.checkpoint, "Network checkpoint for NN schemes");
  r->add_option("--nx", run.nx, "Cells in x");
  r->add_option("--ny", run.ny, "Cells in y (2D problems)");
  r->add_option("--tfinal", run.t_final, "Final time");
  r->add_option("--cfl", run.cfl, "CFL number");
  r->add_option("--snapshot-times", run.snapshot_times, "Extra output times")->delimiter(',');
  r->add_flag("--quiet", run.quiet, "No progress output");
  add_out(r);

  ConvergenceOptions conv;
  auto* c = app.add_subcommand("convergence", "Order of accuracy on periodic sine advection");
  c->add_option("--scheme", conv.scheme, "Reconstruction scheme");
  c->add_option("--checkpoint", conv.checkpoint, "Network checkpoint for NN schemes");
  c->add_option("--resolutions", conv.resolutions, "Strictly increasing cell counts")
      ->delimiter(',');
  c->add_option("--cfl", conv.cfl, "Step factor: dt = cfl * dx^(5/3)");
  add_out(c);

  WeightsOptions weights;
  auto* w = app.add_subcommand("weights", "Nonlinear weight distribution on a probe function");
  w->add_option("--function", weights.function, "sine-jump|sine|constant");
  w->add_option("--scheme", weights.schemes, "Schemes (repeatable)");
  w->add_option("--checkpoint", weights.checkpoints, "Checkpoints for the NN schemes, in order");
  w->add_option("--nx", weights.nx, "Cells on [0, 2]");
  add_out(w);

  DatasetOptions dataset;
  auto* d = app.add_subcommand("dataset", "Generate the training dataset and list its samples");
  d->add_option("--config", dataset.config_path, "Training config (dataset keys and seed)");
  d->add_option("--seed", dataset.seed, "Override the seed");
  add_out(d);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (t->parsed()) {
      train.out_dir = out_dir;
      return cmd_train(train);
    }
    if (a->parsed()) {
      adr.out_dir = out_dir;
      return cmd_adr(adr);
    }
    if (r->parsed()) {
      run.out_dir = out_dir;
      return cmd_run(run);
    }
    if (c->parsed()) {
      conv.out_dir = out_dir;
      return cmd_convergence(conv);
    }
    if (w->parsed()) {
      weights.out_dir = out_dir;
      return cmd_weights(weights);
    }
    if (d->parsed()) {
      dataset.out_dir = out_dir;
      return cmd_dataset(dataset);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
