#include "wenonn/flux_tape.hpp"

#include <algorithm>
#include <array>

#include "wenonn/errors.hpp"

namespace wenonn {

FluxTape::FluxTape(const NetworkParams& params, const SchemeConfig& base)
    : params_(&params), base_(base.classical_base()) {
  if (base_.kind != SchemeKind::JS && base_.kind != SchemeKind::Z) {
    throw ContractError("FluxTape: base scheme must be JS or Z");
  }
  reset(params);
}

void FluxTape::reset(const NetworkParams& params) {
  params_ = &params;
  hidden_offsets_.clear();
  std::size_t off = kHidden;
  for (int l = 0; l + 1 < params.n_layers(); ++l) {
    hidden_offsets_.push_back(off);
    off += static_cast<std::size_t>(params.fan_out(l));
  }
  stride_ = off;
  count_ = 0;
}

std::size_t FluxTape::record(const Stencil5& s) {
  if ((count_ + 1) * stride_ > arena_.size()) {
    arena_.resize(std::max<std::size_t>(arena_.size() * 2, (count_ + 1) * stride_ * 64));
  }
  const std::size_t idx = count_++;
  double* e = entry(idx);
  const NetworkParams& net = *params_;

  const Triple cand = candidate_fluxes(s);
  const WeightTriple w_star = classical_weights(s, base_);
  const FeatureVector x = delta_features(s, base_.eps1);
  std::copy(cand.begin(), cand.end(), e + kCand);
  std::copy(x.begin(), x.end(), e + kFeat);

  // Forward pass, storing hidden activations in place.
  const int last = net.n_layers() - 1;
  const double* in = e + kFeat;
  std::array<double, 3> y{};
  for (int l = 0; l <= last; ++l) {
    const int n_in = net.fan_in(l);
    const int n_out = net.fan_out(l);
    const double* W = net.weights(l).data();
    const double* b = net.biases(l).data();
    double* out = l < last ? e + hidden_offsets_[static_cast<std::size_t>(l)] : y.data();
    for (int r = 0; r < n_out; ++r) {
      double acc = b[r];
      const double* row = W + static_cast<std::size_t>(r) * n_in;
      for (int c = 0; c < n_in; ++c) acc += row[c] * in[c];
      out[r] = (l < last && acc < 0.0) ? 0.0 : acc;
    }
    in = out;
  }

  double sum = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    e[kPre + k] = w_star.w[k] + y[k];
    sum += std::max(e[kPre + k], 0.0);
  }
  e[kSum] = sum;
  e[kFlux] = combine(cand, compensate_and_normalize(w_star, y));
  return idx;
}

void FluxTape::backward(std::size_t idx, double adjoint, std::span<double> grad) const {
  if (adjoint == 0.0) return;
  if (grad.size() != params_->size()) throw ContractError("FluxTape: gradient size mismatch");
  const double* e = entry(idx);
  const double sum = e[kSum];
  if (!(sum > 0.0)) return;  // fallback branch: flux independent of the network
  const NetworkParams& net = *params_;
  const double f = e[kFlux];

  std::array<double, kMaxLayerWidth> delta{};
  std::array<double, kMaxLayerWidth> prev{};
  bool any = false;
  for (std::size_t k = 0; k < 3; ++k) {
    delta[k] = e[kPre + k] > 0.0 ? adjoint * (e[kCand + k] - f) / sum : 0.0;
    any = any || delta[k] != 0.0;
  }
  if (!any) return;

  for (int l = net.n_layers() - 1; l >= 0; --l) {
    const int n_in = net.fan_in(l);
    const int n_out = net.fan_out(l);
    const double* W = net.weights(l).data();
    const double* a_in = l == 0 ? e + kFeat : e + hidden_offsets_[static_cast<std::size_t>(l) - 1];
    double* gW = grad.data() + net.weight_offset(l);
    double* gb = grad.data() + net.bias_offset(l);
    for (int r = 0; r < n_out; ++r) {
      const double d = delta[static_cast<std::size_t>(r)];
      if (d == 0.0) continue;
      gb[r] += d;
      double* grow = gW + static_cast<std::size_t>(r) * n_in;
      for (int c = 0; c < n_in; ++c) grow[c] += d * a_in[c];
    }
    if (l == 0) break;
    for (int c = 0; c < n_in; ++c) {
      double acc = 0.0;
      if (a_in[c] > 0.0) {
        for (int r = 0; r < n_out; ++r) {
          acc += W[static_cast<std::size_t>(r) * n_in + c] * delta[static_cast<std::size_t>(r)];
        }
      }
      prev[static_cast<std::size_t>(c)] = acc;
    }
    std::swap(delta, prev);
  }
}

}  // namespace wenonn
