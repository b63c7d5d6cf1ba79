#pragma once

// Subcommand implementations. Each throws ConfigError / NumericError; the
// executable maps them to exit codes 2 / 3.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wenonn/weno.hpp"

namespace wenonn::tools {

/// Record of one CLI invocation, written as manifest.json next to the outputs.
struct RunManifest {
  std::string command;
  std::string config_digest;  ///< fnv1a64 of the canonical inputs
  std::string scheme;
  std::string checkpoint_id;  ///< theta_id of the loaded network, empty otherwise
  std::string grid;
  double t_final = 0.0;
  double wall_time_s = 0.0;
  std::vector<std::string> outputs;
  std::string status = "ok";
  /// Canonical description of the inputs the digest was computed from.
  std::string inputs;

  std::string to_json() const;
  void write(const std::filesystem::path& out_dir) const;
};

/// Classical scheme by name, or an NN scheme backed by `checkpoint`. Throws
/// ConfigError when an NN scheme lacks a checkpoint, a classical one gets one,
/// or the checkpoint base does not match the NN kind.
SchemeConfig resolve_scheme(const std::string& name, const std::optional<std::string>& checkpoint);

struct TrainOptions {
  std::string config_path;
  std::filesystem::path out_dir = ".";
  std::optional<int> epochs;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};
/// Writes checkpoint.json, loss_history.csv and manifest.json. Returns 3 when
/// training stopped on a non-finite loss (the last good checkpoint is still written).
int cmd_train(const TrainOptions& opt);

struct AdrOptions {
  std::string scheme = "weno5-z";
  std::optional<std::string> checkpoint;
  int N = 128;
  std::filesystem::path out_dir = ".";
};
/// Writes spectrum.csv, bound.csv and manifest.json.
int cmd_adr(const AdrOptions& opt);

struct RunOptions {
  std::string problem;
  std::string scheme = "weno5-js";
  std::optional<std::string> checkpoint;
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<double> t_final;
  std::optional<double> cfl;
  std::vector<double> snapshot_times;
  std::filesystem::path out_dir = ".";
  bool quiet = false;
};
/// Writes one snapshot per output time (CSV in 1D, grid text in 2D) and manifest.json.
int cmd_run(const RunOptions& opt);

struct ConvergenceOptions {
  std::string scheme = "weno5-z";
  std::optional<std::string> checkpoint;
  std::vector<int> resolutions{25, 50, 100, 200};
  double cfl = 0.4;
  std::filesystem::path out_dir = ".";
};
/// Writes convergence.csv and manifest.json.
int cmd_convergence(const ConvergenceOptions& opt);

struct WeightsOptions {
  std::string function = "sine-jump";
  std::vector<std::string> schemes{"weno5-js", "weno5-z"};
  /// Consumed in order by the NN schemes.
  std::vector<std::string> checkpoints;
  int nx = 200;
  std::filesystem::path out_dir = ".";
};
/// Writes weights.csv and manifest.json.
int cmd_weights(const WeightsOptions& opt);

struct DatasetOptions {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_dir = ".";
};
/// Writes dataset.csv (one row per sample: index,family,params) and manifest.json.
int cmd_dataset(const DatasetOptions& opt);

}  // namespace wenonn::tools
