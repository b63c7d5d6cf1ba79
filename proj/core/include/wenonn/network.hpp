#pragma once

// Learned compensation of the WENO weights: Delta-layer features of the
// stencil, a ReLU multilayer perceptron producing three corrections, and the
// ReLU-clip renormalisation that turns base + correction into convex weights.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wenonn/weno.hpp"

namespace wenonn {

/// Widest layer supported by the allocation-free forward pass.
inline constexpr int kMaxLayerWidth = 128;

/// Default architecture: 4 features, three hidden layers of 30, 3 outputs.
inline const std::vector<int> kDefaultLayerSizes{4, 30, 30, 30, 3};

using FeatureVector = std::array<double, 4>;

/// MLP parameters stored contiguously. For each affine layer l the row-major
/// weight matrix (out x in) is followed by its bias vector.
class NetworkParams {
 public:
  /// Throws ContractError if the sizes do not chain 4 -> ... -> 3, exceed
  /// kMaxLayerWidth, or `values` has the wrong length or non-finite entries.
  NetworkParams(std::vector<int> layer_sizes, std::vector<double> values);

  static NetworkParams zeros(std::vector<int> layer_sizes);
  /// Glorot-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases.
  static NetworkParams glorot_uniform(std::vector<int> layer_sizes, std::uint64_t seed);

  const std::vector<int>& layer_sizes() const { return sizes_; }
  int n_layers() const { return static_cast<int>(sizes_.size()) - 1; }
  int fan_in(int layer) const { return sizes_[static_cast<std::size_t>(layer)]; }
  int fan_out(int layer) const { return sizes_[static_cast<std::size_t>(layer) + 1]; }

  std::span<const double> weights(int layer) const;
  std::span<const double> biases(int layer) const;
  std::size_t weight_offset(int layer) const { return offsets_[static_cast<std::size_t>(layer)]; }
  std::size_t bias_offset(int layer) const {
    return weight_offset(layer) + static_cast<std::size_t>(fan_in(layer)) * fan_out(layer);
  }

  std::span<const double> values() const { return values_; }
  /// For the optimiser that owns the parameters during training.
  std::span<double> mutable_values() { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Hex checksum of the architecture and every parameter bit.
  std::string theta_id() const;

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<double> values_;
};

/// Number of parameters for the given architecture.
std::size_t parameter_count(const std::vector<int>& layer_sizes);

/// Absolute consecutive differences normalised by their maximum (floored by eps1).
FeatureVector delta_features(const Stencil5& s, double eps1);

/// Hidden layers are affine + ReLU, the output layer affine with identity activation.
Triple mlp_forward(const NetworkParams& params, const FeatureVector& x);

/// w_k = relu(w*_k + w_nn_k) / sum. Falls back to w_star when every term clips to
/// zero; a zero correction returns w_star unchanged (bit for bit).
WeightTriple compensate_and_normalize(const WeightTriple& w_star, const Triple& w_nn);

}  // namespace wenonn
