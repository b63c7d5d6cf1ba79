#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wenonn/dataset.hpp"
#include "wenonn/weno.hpp"

namespace wenonn {

/// Every knob of a training run.
///
/// Config files are plain `key = value` lines; `#` starts a comment and blank
/// lines are ignored. Keys match the field names below, `hidden` is a comma
/// separated list of widths and `base` is JS or Z. Unknown keys are errors.
struct TrainConfig {
  double lambda_tvd = 5.0;
  double lambda_diss = 200.0;
  double lambda_w = 1e-8;
  int batch_size = 800;
  double lr0 = 1e-3;
  double lr_decay = 0.98;
  int epochs = 500;
  std::uint64_t seed = 20240601;
  double tvd_cfl = 0.4;
  int adr_grid = 100;
  double eps1 = 1e-30;
  SchemeKind base = SchemeKind::Z;
  std::vector<int> hidden{30, 30, 30};
  DatasetSpec dataset;

  std::vector<int> layer_sizes() const;
  /// Throws ConfigError when a field is out of range; pass the dataset size to
  /// also check batch_size <= dataset size.
  void validate(std::size_t dataset_size = 0) const;
  /// Canonical key = value rendering (round-trips through parse_train_config).
  std::string canonical() const;
  std::string digest() const;
  /// Classical base scheme with default epsilon.
  SchemeConfig base_scheme() const;
};

/// `source` names the input in diagnostics ("<file>:<line>: ...").
TrainConfig parse_train_config(std::istream& in, const std::string& source = "<config>");
TrainConfig load_train_config(const std::filesystem::path& path);

}  // namespace wenonn
