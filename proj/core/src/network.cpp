#include "wenonn/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>

#include "wenonn/digest.hpp"
#include "wenonn/errors.hpp"

namespace wenonn {

std::size_t parameter_count(const std::vector<int>& sizes) {
  std::size_t n = 0;
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    n += static_cast<std::size_t>(sizes[l]) * sizes[l + 1] + sizes[l + 1];
  }
  return n;
}

NetworkParams::NetworkParams(std::vector<int> layer_sizes, std::vector<double> values)
    : sizes_(std::move(layer_sizes)), values_(std::move(values)) {
  if (sizes_.size() < 2) throw ContractError("network: need at least input and output sizes");
  if (sizes_.front() != 4) throw ContractError("network: input width must be 4");
  if (sizes_.back() != 3) throw ContractError("network: output width must be 3");
  for (int s : sizes_) {
    if (s < 1 || s > kMaxLayerWidth) {
      throw ContractError("network: layer width " + std::to_string(s) + " outside [1, " +
                          std::to_string(kMaxLayerWidth) + "]");
    }
  }
  if (values_.size() != parameter_count(sizes_)) {
    throw ContractError("network: expected " + std::to_string(parameter_count(sizes_)) +
                        " parameters, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ContractError("network: non-finite parameter");
  }
  std::size_t off = 0;
  for (int l = 0; l < n_layers(); ++l) {
    offsets_.push_back(off);
    off += static_cast<std::size_t>(fan_in(l)) * fan_out(l) + fan_out(l);
  }
}

NetworkParams NetworkParams::zeros(std::vector<int> layer_sizes) {
  const std::size_t n = parameter_count(layer_sizes);
  return NetworkParams(std::move(layer_sizes), std::vector<double>(n, 0.0));
}

NetworkParams NetworkParams::glorot_uniform(std::vector<int> layer_sizes, std::uint64_t seed) {
  NetworkParams net = zeros(std::move(layer_sizes));
  std::mt19937_64 rng(seed);
  for (int l = 0; l < net.n_layers(); ++l) {
    const double limit = std::sqrt(6.0 / (net.fan_in(l) + net.fan_out(l)));
    std::uniform_real_distribution<double> dist(-limit, limit);
    const std::size_t off = net.weight_offset(l);
    const std::size_t count = static_cast<std::size_t>(net.fan_in(l)) * net.fan_out(l);
    for (std::size_t k = 0; k < count; ++k) net.values_[off + k] = dist(rng);
  }
  return net;
}

std::span<const double> NetworkParams::weights(int layer) const {
  return {values_.data() + weight_offset(layer),
          static_cast<std::size_t>(fan_in(layer)) * fan_out(layer)};
}

std::span<const double> NetworkParams::biases(int layer) const {
  return {values_.data() + bias_offset(layer), static_cast<std::size_t>(fan_out(layer))};
}

std::string NetworkParams::theta_id() const {
  std::uint64_t h = fnv1a64(std::span<const unsigned char>(
      reinterpret_cast<const unsigned char*>(sizes_.data()), sizes_.size() * sizeof(int)));
  h = fnv1a64(std::span<const unsigned char>(
                  reinterpret_cast<const unsigned char*>(values_.data()),
                  values_.size() * sizeof(double)),
              h);
  return hex_digest(h);
}

FeatureVector delta_features(const Stencil5& s, double eps1) {
  FeatureVector d{};
  double largest = 0.0;
  for (std::size_t j = 0; j < 4; ++j) {
    d[j] = std::abs(s[j + 1] - s[j]);
    largest = std::max(largest, d[j]);
  }
  const double denom = std::max(largest, eps1);
  for (double& v : d) v /= denom;
  return d;
}

Triple mlp_forward(const NetworkParams& params, const FeatureVector& x) {
  std::array<double, kMaxLayerWidth> in{};
  std::array<double, kMaxLayerWidth> out{};
  std::copy(x.begin(), x.end(), in.begin());
  const int last = params.n_layers() - 1;
  for (int l = 0; l <= last; ++l) {
    const int n_in = params.fan_in(l);
    const int n_out = params.fan_out(l);
    const double* W = params.weights(l).data();
    const double* b = params.biases(l).data();
    for (int r = 0; r < n_out; ++r) {
      double acc = b[r];
      const double* row = W + static_cast<std::size_t>(r) * n_in;
      for (int c = 0; c < n_in; ++c) acc += row[c] * in[static_cast<std::size_t>(c)];
      out[static_cast<std::size_t>(r)] = (l < last && acc < 0.0) ? 0.0 : acc;
    }
    std::swap(in, out);
  }
  return {in[0], in[1], in[2]};
}

WeightTriple compensate_and_normalize(const WeightTriple& w_star, const Triple& w_nn) {
  if (w_nn[0] == 0.0 && w_nn[1] == 0.0 && w_nn[2] == 0.0) return w_star;
  Triple t{};
  for (std::size_t k = 0; k < 3; ++k) t[k] = std::max(w_star.w[k] + w_nn[k], 0.0);
  const double sum = t[0] + t[1] + t[2];
  if (!(sum > 0.0)) return w_star;
  return WeightTriple{{t[0] / sum, t[1] / sum, t[2] / sum}};
}

}  // namespace wenonn
