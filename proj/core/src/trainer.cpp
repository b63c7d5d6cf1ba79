#include "wenonn/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "wenonn/errors.hpp"

namespace wenonn {

AdamOptimizer::AdamOptimizer(std::size_t n_params, double beta1, double beta2, double epsilon)
    : beta1_(beta1), beta2_(beta2), eps_(epsilon), m_(n_params, 0.0), v_(n_params, 0.0) {}

void AdamOptimizer::step(std::span<double> params, std::span<const double> grad, double lr) {
  if (params.size() != m_.size() || grad.size() != m_.size()) {
    throw ContractError("Adam: parameter/gradient size mismatch");
  }
  ++t_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (std::size_t i = 0; i < params.size(); ++i) {
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i] * grad[i];
    params[i] -= lr * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + eps_);
  }
}

namespace {

bool finite(const LossTerms& t) {
  return std::isfinite(t.reconstruction) && std::isfinite(t.tvd) &&
         std::isfinite(t.dissipation) && std::isfinite(t.regularization) &&
         std::isfinite(t.total);
}

std::string describe(const LossTerms& t) {
  std::ostringstream os;
  os << "L_r=" << t.reconstruction << " L_tvd=" << t.tvd << " L_diss=" << t.dissipation
     << " L_reg=" << t.regularization << " total=" << t.total;
  return os.str();
}

}  // namespace

TrainResult train(const std::vector<TrainingSample>& dataset, const TrainConfig& cfg,
                  const std::function<void(const EpochRecord&)>& on_epoch) {
  cfg.validate(dataset.size());
  return train_from(NetworkParams::glorot_uniform(cfg.layer_sizes(), cfg.seed), dataset, cfg,
                    on_epoch);
}

TrainResult train_from(NetworkParams initial, const std::vector<TrainingSample>& dataset,
                       const TrainConfig& cfg,
                       const std::function<void(const EpochRecord&)>& on_epoch) {
  cfg.validate(dataset.size());
  if (dataset.empty()) throw ConfigError("train: empty dataset");
  if (initial.layer_sizes() != cfg.layer_sizes()) {
    throw ConfigError("train: initial network does not match the configured architecture");
  }

  TrainResult result{std::move(initial), {}, true, {}};
  NetworkParams& params = result.params;
  const auto everything = as_batch(dataset);
  LossEvaluator evaluator(cfg, params);
  AdamOptimizer adam(params.size());
  std::mt19937_64 shuffle_rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> grad(params.size());
  std::vector<const TrainingSample*> batch;

  auto record_epoch = [&](int epoch, double lr) {
    EpochRecord rec{epoch, evaluator.evaluate(everything, params), lr};
    result.history.push_back(rec);
    if (on_epoch) on_epoch(rec);
    return rec;
  };

  const EpochRecord start = record_epoch(0, cfg.lr0);
  if (!finite(start.loss)) {
    result.completed = false;
    result.failure = "non-finite loss for the initial network: " + describe(start.loss);
    return result;
  }

  std::vector<double> last_good(params.values().begin(), params.values().end());
  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    const double lr = cfg.lr0 * std::pow(cfg.lr_decay, epoch - 1);
    std::shuffle(order.begin(), order.end(), shuffle_rng);
    for (std::size_t start_idx = 0; start_idx < order.size();
         start_idx += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t stop =
          std::min(order.size(), start_idx + static_cast<std::size_t>(cfg.batch_size));
      batch.clear();
      for (std::size_t k = start_idx; k < stop; ++k) batch.push_back(&dataset[order[k]]);

      std::fill(grad.begin(), grad.end(), 0.0);
      const LossTerms terms = evaluator.evaluate(batch, params, grad);
      const bool grad_ok =
          std::all_of(grad.begin(), grad.end(), [](double g) { return std::isfinite(g); });
      if (!finite(terms) || !grad_ok) {
        std::copy(last_good.begin(), last_good.end(), params.mutable_values().begin());
        result.completed = false;
        result.failure = "non-finite " + std::string(grad_ok ? "loss" : "gradient") +
                         " at epoch " + std::to_string(epoch) + ", batch starting at " +
                         std::to_string(start_idx) + ": " + describe(terms);
        return result;
      }
      std::copy(params.values().begin(), params.values().end(), last_good.begin());
      adam.step(params.mutable_values(), grad, lr);
    }
    const EpochRecord rec = record_epoch(epoch, lr);
    if (!finite(rec.loss)) {
      std::copy(last_good.begin(), last_good.end(), params.mutable_values().begin());
      result.completed = false;
      result.failure =
          "non-finite loss after epoch " + std::to_string(epoch) + ": " + describe(rec.loss);
      return result;
    }
  }
  return result;
}

void write_loss_history_csv(std::ostream& out, const std::vector<EpochRecord>& history) {
  const auto old_precision = out.precision(17);
  out << "epoch,L_r,L_tvd,L_diss,L_reg,total,lr\n";
  for (const auto& r : history) {
    out << r.epoch << ',' << r.loss.reconstruction << ',' << r.loss.tvd << ','
        << r.loss.dissipation << ',' << r.loss.regularization << ',' << r.loss.total
        << ',' << r.lr << '\n';
  }
  out.precision(old_precision);
}

}  // namespace wenonn
