#include "wenonn/weno.hpp"

#include <cmath>
#include <utility>

#include "wenonn/errors.hpp"
#include "wenonn/network.hpp"

namespace wenonn {

bool WeightTriple::valid(double tol) const {
  return w[0] >= 0.0 && w[1] >= 0.0 && w[2] >= 0.0 && std::abs(sum() - 1.0) <= tol;
}

SchemeConfig SchemeConfig::linear() {
  SchemeConfig c;
  c.kind = SchemeKind::Linear;
  return c;
}

SchemeConfig SchemeConfig::js(double epsilon) {
  SchemeConfig c;
  c.kind = SchemeKind::JS;
  c.epsilon = epsilon;
  return c;
}

SchemeConfig SchemeConfig::z(double epsilon) {
  SchemeConfig c;
  c.kind = SchemeKind::Z;
  c.epsilon = epsilon;
  return c;
}

SchemeConfig SchemeConfig::js_nn(std::shared_ptr<const NetworkParams> net, double eps1) {
  SchemeConfig c = js();
  c.kind = SchemeKind::JS_NN;
  c.network = std::move(net);
  c.eps1 = eps1;
  return c;
}

SchemeConfig SchemeConfig::z_nn(std::shared_ptr<const NetworkParams> net, double eps1) {
  SchemeConfig c = z();
  c.kind = SchemeKind::Z_NN;
  c.network = std::move(net);
  c.eps1 = eps1;
  return c;
}

SchemeConfig SchemeConfig::upwind1() {
  SchemeConfig c;
  c.kind = SchemeKind::Upwind1;
  return c;
}

SchemeConfig SchemeConfig::classical_base() const {
  SchemeConfig c = *this;
  if (kind == SchemeKind::JS_NN) c.kind = SchemeKind::JS;
  if (kind == SchemeKind::Z_NN) c.kind = SchemeKind::Z;
  c.network.reset();
  return c;
}

void SchemeConfig::validate() const {
  if (!(epsilon > 0.0)) throw ConfigError("scheme: epsilon must be positive");
  if (p < 1 || q < 1) throw ConfigError("scheme: p and q must be >= 1");
  if (is_nn()) {
    if (!network) throw ConfigError("scheme: NN kinds require a network checkpoint");
    if (!(eps1 > 0.0)) throw ConfigError("scheme: eps1 must be positive");
  }
}

std::string_view scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Linear: return "linear";
    case SchemeKind::JS: return "weno5-js";
    case SchemeKind::Z: return "weno5-z";
    case SchemeKind::JS_NN: return "weno5-js-nn";
    case SchemeKind::Z_NN: return "weno5-z-nn";
    case SchemeKind::Upwind1: return "upwind1";
  }
  return "unknown";
}

SchemeKind parse_scheme(std::string_view name) {
  for (SchemeKind k : {SchemeKind::Linear, SchemeKind::JS, SchemeKind::Z, SchemeKind::JS_NN,
                       SchemeKind::Z_NN, SchemeKind::Upwind1}) {
    if (scheme_name(k) == name) return k;
  }
  throw ConfigError("unknown scheme '" + std::string(name) +
                    "' (expected linear|weno5-js|weno5-z|weno5-js-nn|weno5-z-nn)");
}

Triple smoothness_indicators(const Stencil5& s) {
  const double a = s[0], b = s[1], c = s[2], d = s[3], e = s[4];
  constexpr double k13 = 13.0 / 12.0;
  const double b0 = k13 * (a - 2.0 * b + c) * (a - 2.0 * b + c) +
                    0.25 * (a - 4.0 * b + 3.0 * c) * (a - 4.0 * b + 3.0 * c);
  const double b1 = k13 * (b - 2.0 * c + d) * (b - 2.0 * c + d) + 0.25 * (b - d) * (b - d);
  const double b2 = k13 * (c - 2.0 * d + e) * (c - 2.0 * d + e) +
                    0.25 * (3.0 * c - 4.0 * d + e) * (3.0 * c - 4.0 * d + e);
  return {b0, b1, b2};
}

Triple candidate_fluxes(const Stencil5& s) {
  // Written as f_i plus differences so that constant data is reproduced exactly.
  const double a = s[0] - s[2], b = s[1] - s[2], d = s[3] - s[2], e = s[4] - s[2];
  const double c = s[2];
  return {c + (2.0 * a - 7.0 * b) / 6.0,
          c + (2.0 * d - b) / 6.0,
          c + (5.0 * d - e) / 6.0};
}

namespace {

WeightTriple normalize(double a0, double a1, double a2) {
  const double sum = a0 + a1 + a2;
  return WeightTriple{{a0 / sum, a1 / sum, a2 / sum}};
}

double ipow(double x, int n) {
  if (n == 1) return x;
  if (n == 2) return x * x;
  return std::pow(x, n);
}

}  // namespace

WeightTriple weights_js(const Triple& beta, const SchemeConfig& cfg) {
  const double eps = cfg.epsilon;
  return normalize(kIdealWeights[0] / ipow(beta[0] + eps, cfg.p),
                   kIdealWeights[1] / ipow(beta[1] + eps, cfg.p),
                   kIdealWeights[2] / ipow(beta[2] + eps, cfg.p));
}

WeightTriple weights_z(const Triple& beta, const SchemeConfig& cfg) {
  const double eps = cfg.epsilon;
  const double tau5 = std::abs(beta[2] - beta[0]);
  return normalize(kIdealWeights[0] * (1.0 + ipow(tau5 / (beta[0] + eps), cfg.q)),
                   kIdealWeights[1] * (1.0 + ipow(tau5 / (beta[1] + eps), cfg.q)),
                   kIdealWeights[2] * (1.0 + ipow(tau5 / (beta[2] + eps), cfg.q)));
}

double combine(const Triple& candidates, const WeightTriple& w) {
  return w[0] * candidates[0] + w[1] * candidates[1] + w[2] * candidates[2];
}

WeightTriple classical_weights(const Stencil5& s, const SchemeConfig& cfg) {
  switch (cfg.kind) {
    case SchemeKind::Linear:
    case SchemeKind::Upwind1:
      return WeightTriple{kIdealWeights};
    case SchemeKind::JS:
    case SchemeKind::JS_NN:
      return weights_js(smoothness_indicators(s), cfg);
    case SchemeKind::Z:
    case SchemeKind::Z_NN:
      return weights_z(smoothness_indicators(s), cfg);
  }
  return WeightTriple{kIdealWeights};
}

WeightTriple nonlinear_weights(const Stencil5& s, const SchemeConfig& cfg) {
  const WeightTriple base = classical_weights(s, cfg);
  if (!cfg.is_nn()) return base;
  if (!cfg.network) throw ConfigError("scheme: NN kinds require a network checkpoint");
  const Triple w_nn = mlp_forward(*cfg.network, delta_features(s, cfg.eps1));
  return compensate_and_normalize(base, w_nn);
}

double reconstruct_interface(const Stencil5& s, const SchemeConfig& cfg) {
  if (cfg.kind == SchemeKind::Upwind1) return s[2];
  return combine(candidate_fluxes(s), nonlinear_weights(s, cfg));
}

}  // namespace wenonn
