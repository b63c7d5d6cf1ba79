#pragma once

// Training losses of the compensated scheme and their parameter gradients.
//
// Every function takes an optional gradient span laid out like
// NetworkParams::values(); when non-empty the gradient of the returned value is
// *added* to it.

#include <memory>
#include <span>
#include <vector>

#include "wenonn/dataset.hpp"
#include "wenonn/flux_tape.hpp"
#include "wenonn/network.hpp"
#include "wenonn/train_config.hpp"

namespace wenonn {

using Batch = std::span<const TrainingSample* const>;

std::vector<const TrainingSample*> as_batch(const std::vector<TrainingSample>& samples);

struct LossTerms {
  double reconstruction = 0.0;
  double tvd = 0.0;
  double dissipation = 0.0;
  double regularization = 0.0;  ///< unweighted sum of squared weight-matrix entries
  double total = 0.0;
};

/// Mean over the batch and the n_cells + 1 interfaces of (f_nn - h)^2.
double loss_reconstruction(Batch batch, const NetworkParams& params, const SchemeConfig& base,
                           std::span<double> grad = {});

/// Mean over the batch of max(TV(u1) - TV(u0), 0)^2 where u1 is one forward-Euler
/// step of u_t + u_x = 0 with dt = cfl * dx.
double loss_tvd(Batch batch, const NetworkParams& params, const SchemeConfig& base, double cfl,
                std::span<double> grad = {});

/// (2/N) sum_{n=0}^{N/2} max(Im Phi(phi_n), 0)^2 for the compensated scheme.
double loss_dissipation(const NetworkParams& params, const SchemeConfig& base, int N,
                        std::span<double> grad = {});

/// Sum of squared weight-matrix entries (biases excluded).
double loss_regularization(const NetworkParams& params, std::span<double> grad = {});

/// Penalty of one step: max(TV(u1) - TV(u0), 0)^2, non-periodic TV.
double tvd_step_penalty(std::span<const double> u0, std::span<const double> u1);

/// Evaluates the weighted total loss. Keeps its tapes between calls so the
/// training loop does not reallocate.
class LossEvaluator {
 public:
  LossEvaluator(const TrainConfig& cfg, const NetworkParams& params);

  /// L_r + lambda_tvd L_tvd + lambda_diss L_diss + lambda_w ||W||^2.
  LossTerms evaluate(Batch batch, const NetworkParams& params, std::span<double> grad = {});

 private:
  TrainConfig cfg_;
  SchemeConfig base_;
  FluxTape sample_tape_;
  FluxTape harmonic_tape_;
  std::vector<double> adjoint_;
};

LossTerms total_loss(Batch batch, const NetworkParams& params, const TrainConfig& cfg,
                     std::span<double> grad = {});

}  // namespace wenonn
