#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wenonn/dataset.hpp"
#include "wenonn/losses.hpp"
#include "wenonn/network.hpp"
#include "wenonn/train_config.hpp"

namespace wenonn {

class AdamOptimizer {
 public:
  explicit AdamOptimizer(std::size_t n_params, double beta1 = 0.9, double beta2 = 0.999,
                         double epsilon = 1e-8);

  void step(std::span<double> params, std::span<const double> grad, double lr);
  long steps() const { return t_; }

 private:
  double beta1_, beta2_, eps_;
  long t_ = 0;
  std::vector<double> m_, v_;
};

/// Loss components over the whole dataset after `epoch` epochs (epoch 0 is the
/// initial network). `lr` is the learning rate used during that epoch.
struct EpochRecord {
  int epoch = 0;
  LossTerms loss;
  double lr = 0.0;
};

struct TrainResult {
  NetworkParams params;
  std::vector<EpochRecord> history;
  bool completed = true;
  /// Diagnostics when a non-finite loss or gradient stopped the run; `params`
  /// is then the last parameter set that produced a finite loss.
  std::string failure;
};

/// Adam on shuffled mini-batches with lr = lr0 * lr_decay^(epoch - 1).
/// Deterministic for a fixed config (seed drives both initialisation and shuffling).
TrainResult train(const std::vector<TrainingSample>& dataset, const TrainConfig& cfg,
                  const std::function<void(const EpochRecord&)>& on_epoch = {});

/// Same, starting from given parameters instead of a fresh initialisation.
TrainResult train_from(NetworkParams initial, const std::vector<TrainingSample>& dataset,
                       const TrainConfig& cfg,
                       const std::function<void(const EpochRecord&)>& on_epoch = {});

/// Header `epoch,L_r,L_tvd,L_diss,L_reg,total,lr`. The component columns are
/// unweighted; `total` carries the lambdas.
void write_loss_history_csv(std::ostream& out, const std::vector<EpochRecord>& history);

}  // namespace wenonn
