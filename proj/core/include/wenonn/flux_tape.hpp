#pragma once

#include <span>
#include <vector>

#include "wenonn/network.hpp"
#include "wenonn/weno.hpp"

namespace wenonn {

/// Reverse-mode recording of NN-compensated reconstructions.
///
/// `record` evaluates f_{i+1/2} for one stencil exactly as reconstruct_interface
/// does for the NN kinds and keeps every intermediate needed to differentiate it
/// with respect to the network parameters: the features, hidden activations,
/// the pre-clip weights, their sum and the candidate fluxes. `backward` pushes
/// an adjoint dL/df through the normalisation and the MLP and accumulates into
/// a gradient laid out like NetworkParams::values().
///
/// The tape is owned by the training loop and reused between steps; inference
/// never touches it.
class FluxTape {
 public:
  /// `base` selects the classical weights (JS or Z); its network field is ignored.
  FluxTape(const NetworkParams& params, const SchemeConfig& base);

  /// Rebinds to new parameters and drops every record. Storage is retained.
  void reset(const NetworkParams& params);
  void clear() { count_ = 0; }

  /// Returns the record index.
  std::size_t record(const Stencil5& s);
  double flux(std::size_t idx) const { return entry(idx)[kFlux]; }
  std::size_t size() const { return count_; }

  /// grad += adjoint * d flux(idx) / d theta.
  void backward(std::size_t idx, double adjoint, std::span<double> grad) const;

 private:
  // Entry layout: flux, sum of clipped weights, candidates[3], pre-clip weights[3],
  // features[4], then the post-ReLU activations of each hidden layer.
  static constexpr std::size_t kFlux = 0, kSum = 1, kCand = 2, kPre = 5, kFeat = 8, kHidden = 12;

  const double* entry(std::size_t idx) const { return arena_.data() + idx * stride_; }
  double* entry(std::size_t idx) { return arena_.data() + idx * stride_; }

  const NetworkParams* params_;
  SchemeConfig base_;
  std::size_t stride_ = 0;
  std::size_t count_ = 0;
  std::vector<std::size_t> hidden_offsets_;
  std::vector<double> arena_;
};

}  // namespace wenonn
