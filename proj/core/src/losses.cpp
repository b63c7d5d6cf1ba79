#include "wenonn/losses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wenonn/adr.hpp"
#include "wenonn/errors.hpp"
#include "wenonn/solver.hpp"
#include "wenonn/state_field.hpp"

namespace wenonn {

std::vector<const TrainingSample*> as_batch(const std::vector<TrainingSample>& samples) {
  std::vector<const TrainingSample*> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(&s);
  return out;
}

namespace {

void check_grad(std::span<double> grad, const NetworkParams& params) {
  if (!grad.empty() && grad.size() != params.size()) {
    throw ContractError("loss: gradient span does not match the parameter count");
  }
}

Stencil5 sample_stencil(const TrainingSample& s, int k) {
  const double* v = s.grid_values.data() + k;
  return {v[0], v[1], v[2], v[3], v[4]};
}

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Records every interface of every sample; returns the tape index of interface 0
// of each sample.
std::vector<std::size_t> record_batch(Batch batch, FluxTape& tape) {
  std::vector<std::size_t> first;
  first.reserve(batch.size());
  for (const TrainingSample* s : batch) {
    first.push_back(tape.size());
    for (int k = 0; k < s->n_interfaces(); ++k) tape.record(sample_stencil(*s, k));
  }
  return first;
}

// L_r of the recorded batch. Adds scale * dL_r/df to adjoint.
double reconstruction_term(Batch batch, const FluxTape& tape,
                           const std::vector<std::size_t>& first, double scale,
                           std::vector<double>& adjoint) {
  std::size_t count = 0;
  for (const TrainingSample* s : batch) count += static_cast<std::size_t>(s->n_interfaces());
  double sum = 0.0;
  for (std::size_t b = 0; b < batch.size(); ++b) {
    const TrainingSample& s = *batch[b];
    for (int k = 0; k < s.n_interfaces(); ++k) {
      const std::size_t idx = first[b] + static_cast<std::size_t>(k);
      const double e = tape.flux(idx) - s.reference_fluxes[static_cast<std::size_t>(k)];
      sum += e * e;
      if (scale != 0.0) adjoint[idx] += scale * 2.0 * e / static_cast<double>(count);
    }
  }
  return sum / static_cast<double>(count);
}

double tvd_term(Batch batch, const FluxTape& tape, const std::vector<std::size_t>& first,
                double cfl, double scale, std::vector<double>& adjoint) {
  double sum = 0.0;
  const double nb = static_cast<double>(batch.size());
  std::vector<double> u0, u1, g;
  for (std::size_t b = 0; b < batch.size(); ++b) {
    const TrainingSample& s = *batch[b];
    const int n = s.n_cells();
    u0.assign(s.grid_values.begin() + kGhostWidth, s.grid_values.begin() + kGhostWidth + n);
    u1.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double fr = tape.flux(first[b] + static_cast<std::size_t>(i) + 1);
      const double fl = tape.flux(first[b] + static_cast<std::size_t>(i));
      u1[static_cast<std::size_t>(i)] = u0[static_cast<std::size_t>(i)] - cfl * (fr - fl);
    }
    const double excess = total_variation(u1) - total_variation(u0);
    if (!(excess > 0.0)) continue;
    sum += excess * excess;
    if (scale == 0.0) continue;
    // dL/du1_i, then through u1_i = u0_i - cfl (f_{i+1} - f_i).
    const double dtv = scale * 2.0 * excess / nb;
    g.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) {
      const double d = sgn(u1[static_cast<std::size_t>(i) + 1] - u1[static_cast<std::size_t>(i)]);
      g[static_cast<std::size_t>(i) + 1] += dtv * d;
      g[static_cast<std::size_t>(i)] -= dtv * d;
    }
    for (int i = 0; i < n; ++i) {
      adjoint[first[b] + static_cast<std::size_t>(i) + 1] -= cfl * g[static_cast<std::size_t>(i)];
      adjoint[first[b] + static_cast<std::size_t>(i)] += cfl * g[static_cast<std::size_t>(i)];
    }
  }
  return sum / nb;
}

// Records the cosine and sine parts of modes 1..N/2 (mode 0 contributes nothing),
// evaluates L_diss and, when scale != 0, back-propagates scale * dL_diss/df.
double dissipation_term(FluxTape& tape, int N, double scale, std::span<double> grad) {
  if (N < 6 || N % 2 != 0) throw ContractError("loss_dissipation: N must be even and >= 6");
  tape.clear();
  const std::size_t uN = static_cast<std::size_t>(N);
  std::vector<double> fr(uN), fi(uN);
  double sum = 0.0;
  const double half = N / 2.0;
  for (int n = 1; n <= N / 2; ++n) {
    const HarmonicField h = make_harmonic(n, N);
    const std::size_t base = tape.size();
    auto at = [&](const std::vector<double>& v, int j) { return v[(uN + j) % uN]; };
    for (const auto* part : {&h.real_part, &h.imag_part}) {
      for (int j = 0; j < N; ++j) {
        tape.record({at(*part, j - 2), at(*part, j - 1), at(*part, j), at(*part, j + 1),
                     at(*part, j + 2)});
      }
    }
    for (std::size_t j = 0; j < uN; ++j) {
      fr[j] = tape.flux(base + j);
      fi[j] = tape.flux(base + uN + j);
    }
    const double im = modified_wavenumber_from_fluxes(fr, fi, n).imag();
    if (!(im > 0.0)) continue;
    sum += im * im;
    if (scale == 0.0 || grad.empty()) continue;
    const double d_im = scale * 2.0 * im / half;
    const double phi = 2.0 * std::numbers::pi * n / N;
    for (int k = 0; k < N; ++k) {
      const double dr = -(std::cos(phi * k) - std::cos(phi * (k + 1))) / N;
      const double di = -(std::sin(phi * k) - std::sin(phi * (k + 1))) / N;
      tape.backward(base + static_cast<std::size_t>(k), d_im * dr, grad);
      tape.backward(base + uN + static_cast<std::size_t>(k), d_im * di, grad);
    }
  }
  return sum / half;
}

}  // namespace

double tvd_step_penalty(std::span<const double> u0, std::span<const double> u1) {
  const double excess = total_variation(u1) - total_variation(u0);
  return excess > 0.0 ? excess * excess : 0.0;
}

double loss_reconstruction(Batch batch, const NetworkParams& params, const SchemeConfig& base,
                           std::span<double> grad) {
  if (batch.empty()) throw ContractError("loss_reconstruction: empty batch");
  check_grad(grad, params);
  FluxTape tape(params, base);
  const auto first = record_batch(batch, tape);
  std::vector<double> adjoint(tape.size(), 0.0);
  const double value = reconstruction_term(batch, tape, first, grad.empty() ? 0.0 : 1.0, adjoint);
  if (!grad.empty()) {
    for (std::size_t i = 0; i < tape.size(); ++i) tape.backward(i, adjoint[i], grad);
  }
  return value;
}

double loss_tvd(Batch batch, const NetworkParams& params, const SchemeConfig& base, double cfl,
                std::span<double> grad) {
  if (batch.empty()) throw ContractError("loss_tvd: empty batch");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ContractError("loss_tvd: cfl must lie in (0, 1]");
  check_grad(grad, params);
  FluxTape tape(params, base);
  const auto first = record_batch(batch, tape);
  std::vector<double> adjoint(tape.size(), 0.0);
  const double value = tvd_term(batch, tape, first, cfl, grad.empty() ? 0.0 : 1.0, adjoint);
  if (!grad.empty()) {
    for (std::size_t i = 0; i < tape.size(); ++i) tape.backward(i, adjoint[i], grad);
  }
  return value;
}

double loss_dissipation(const NetworkParams& params, const SchemeConfig& base, int N,
                        std::span<double> grad) {
  check_grad(grad, params);
  FluxTape tape(params, base);
  return dissipation_term(tape, N, grad.empty() ? 0.0 : 1.0, grad);
}

double loss_regularization(const NetworkParams& params, std::span<double> grad) {
  check_grad(grad, params);
  double sum = 0.0;
  for (int l = 0; l < params.n_layers(); ++l) {
    const auto w = params.weights(l);
    const std::size_t off = params.weight_offset(l);
    for (std::size_t k = 0; k < w.size(); ++k) {
      sum += w[k] * w[k];
      if (!grad.empty()) grad[off + k] += 2.0 * w[k];
    }
  }
  return sum;
}

LossEvaluator::LossEvaluator(const TrainConfig& cfg, const NetworkParams& params)
    : cfg_(cfg),
      base_(cfg.base_scheme()),
      sample_tape_(params, base_),
      harmonic_tape_(params, base_) {}

LossTerms LossEvaluator::evaluate(Batch batch, const NetworkParams& params,
                                  std::span<double> grad) {
  if (batch.empty()) throw ContractError("total_loss: empty batch");
  check_grad(grad, params);
  const bool want_grad = !grad.empty();
  LossTerms t;

  if (want_grad) {
    sample_tape_.reset(params);
    const auto first = record_batch(batch, sample_tape_);
    adjoint_.assign(sample_tape_.size(), 0.0);
    t.reconstruction = reconstruction_term(batch, sample_tape_, first, 1.0, adjoint_);
    t.tvd = tvd_term(batch, sample_tape_, first, cfg_.tvd_cfl, cfg_.lambda_tvd, adjoint_);
    for (std::size_t i = 0; i < sample_tape_.size(); ++i) {
      sample_tape_.backward(i, adjoint_[i], grad);
    }
  } else {
    // Chunked so that whole-dataset evaluations keep the tape small.
    constexpr std::size_t kChunk = 256;
    std::size_t interfaces = 0;
    for (const TrainingSample* s : batch) interfaces += static_cast<std::size_t>(s->n_interfaces());
    for (std::size_t lo = 0; lo < batch.size(); lo += kChunk) {
      const Batch part = batch.subspan(lo, std::min(kChunk, batch.size() - lo));
      sample_tape_.reset(params);
      const auto first = record_batch(part, sample_tape_);
      std::size_t n_part = 0;
      for (const TrainingSample* s : part) n_part += static_cast<std::size_t>(s->n_interfaces());
      t.reconstruction += reconstruction_term(part, sample_tape_, first, 0.0, adjoint_) *
                          static_cast<double>(n_part) / static_cast<double>(interfaces);
      t.tvd += tvd_term(part, sample_tape_, first, cfg_.tvd_cfl, 0.0, adjoint_) *
               static_cast<double>(part.size()) / static_cast<double>(batch.size());
    }
  }

  harmonic_tape_.reset(params);
  t.dissipation = dissipation_term(harmonic_tape_, cfg_.adr_grid,
                                   want_grad ? cfg_.lambda_diss : 0.0, grad);

  t.regularization = loss_regularization(params);
  if (want_grad && cfg_.lambda_w != 0.0) {
    for (int l = 0; l < params.n_layers(); ++l) {
      const auto w = params.weights(l);
      const std::size_t off = params.weight_offset(l);
      for (std::size_t k = 0; k < w.size(); ++k) grad[off + k] += cfg_.lambda_w * 2.0 * w[k];
    }
  }

  t.total = t.reconstruction + cfg_.lambda_tvd * t.tvd + cfg_.lambda_diss * t.dissipation +
            cfg_.lambda_w * t.regularization;
  return t;
}

LossTerms total_loss(Batch batch, const NetworkParams& params, const TrainConfig& cfg,
                     std::span<double> grad) {
  LossEvaluator eval(cfg, params);
  return eval.evaluate(batch, params, grad);
}

}  // namespace wenonn
