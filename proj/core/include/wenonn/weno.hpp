#pragma once

// Fifth-order WENO reconstruction of the interface value f_{i+1/2} from the
// point values f_{i-2..i+2}: three third-order candidates, their smoothness
// indicators, and the ideal / Jiang-Shu / Borges-Z weightings.

#include <array>
#include <memory>
#include <string>
#include <string_view>

namespace wenonn {

class NetworkParams;

/// (f_{i-2}, f_{i-1}, f_i, f_{i+1}, f_{i+2}).
using Stencil5 = std::array<double, 5>;
using Triple = std::array<double, 3>;

inline constexpr Triple kIdealWeights{0.1, 0.6, 0.3};

/// Convex weights of the three substencils.
struct WeightTriple {
  Triple w{};

  double operator[](int k) const { return w[static_cast<std::size_t>(k)]; }
  double sum() const { return w[0] + w[1] + w[2]; }
  /// Non-negative and summing to one within `tol`.
  bool valid(double tol = 1e-12) const;
};

enum class SchemeKind {
  Linear,   ///< ideal weights d_k (UP5)
  JS,
  Z,
  JS_NN,    ///< JS weights plus learned compensation
  Z_NN,     ///< Z weights plus learned compensation
  Upwind1,  ///< first-order donor cell; debug anchor for convergence studies
};

struct SchemeConfig {
  SchemeKind kind = SchemeKind::Z;
  double epsilon = 1e-40;
  int p = 2;
  int q = 1;
  std::shared_ptr<const NetworkParams> network;
  /// Delta-layer floor for the NN kinds.
  double eps1 = 1e-30;

  static SchemeConfig linear();
  static SchemeConfig js(double epsilon = 1e-6);
  static SchemeConfig z(double epsilon = 1e-40);
  static SchemeConfig js_nn(std::shared_ptr<const NetworkParams> net, double eps1 = 1e-30);
  static SchemeConfig z_nn(std::shared_ptr<const NetworkParams> net, double eps1 = 1e-30);
  static SchemeConfig upwind1();

  bool is_nn() const { return kind == SchemeKind::JS_NN || kind == SchemeKind::Z_NN; }
  /// The classical scheme underneath an NN kind (identity for the others).
  SchemeConfig classical_base() const;
  /// Throws ConfigError on epsilon <= 0, p/q < 1, or an NN kind without a network.
  void validate() const;
};

/// CLI spelling: linear, weno5-js, weno5-z, weno5-js-nn, weno5-z-nn, upwind1.
std::string_view scheme_name(SchemeKind kind);
/// Inverse of scheme_name; throws ConfigError on unknown names.
SchemeKind parse_scheme(std::string_view name);

Triple smoothness_indicators(const Stencil5& s);
Triple candidate_fluxes(const Stencil5& s);
WeightTriple weights_js(const Triple& beta, const SchemeConfig& cfg);
WeightTriple weights_z(const Triple& beta, const SchemeConfig& cfg);
double combine(const Triple& candidates, const WeightTriple& w);

/// Classical weights for Linear/JS/Z (and the base of the NN kinds).
WeightTriple classical_weights(const Stencil5& s, const SchemeConfig& cfg);
/// Final weights used by `cfg`, including the NN compensation.
WeightTriple nonlinear_weights(const Stencil5& s, const SchemeConfig& cfg);
/// Reconstructed interface value f_{i+1/2}.
double reconstruct_interface(const Stencil5& s, const SchemeConfig& cfg);

}  // namespace wenonn
