#pragma once

// Numerical experiments behind the CLI reports: convergence tables, weight
// distributions and spectrum tables.

#include <iosfwd>
#include <string>
#include <vector>

#include "wenonn/adr.hpp"
#include "wenonn/weno.hpp"

namespace wenonn::tools {

struct ConvergenceRow {
  int N = 0;
  double L1 = 0.0;
  double Linf = 0.0;
  double order_L1 = 0.0;  ///< 0 on the coarsest row
  double order_Linf = 0.0;
};

/// Advects sin(2 pi x) once around [0, 1] with dt = cfl * dx^(5/3) so the time
/// error stays below the spatial one. Throws ConfigError unless `resolutions`
/// is strictly increasing.
std::vector<ConvergenceRow> convergence_study(const SchemeConfig& scheme,
                                              const std::vector<int>& resolutions,
                                              double cfl = 0.4);
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

/// Test functions for the weight probe.
enum class ProbeFunction {
  SineJump,  ///< 2/3 sin(6 pi x) + 1/4 sin(1.6 pi x), plus 3 for x >= 0.5
  Sine,      ///< the same without the jump
  Constant,  ///< f = 1
};
ProbeFunction parse_probe_function(const std::string& name);
double probe_value(ProbeFunction fn, double x);

struct WeightRow {
  double x = 0.0;  ///< interface position
  WeightTriple w;
};

/// Nonlinear weights at every interface of an n_cells grid on [x_left, x_right];
/// stencils reaching past the ends sample the function analytically.
std::vector<WeightRow> weights_study(ProbeFunction fn, const SchemeConfig& scheme,
                                     int n_cells = 200, double x_left = 0.0,
                                     double x_right = 2.0);
/// Header `scheme,x,w0,w1,w2`.
void write_weights_header(std::ostream& out);
void write_weights_rows(std::ostream& out, const std::string& scheme_label,
                        const std::vector<WeightRow>& rows);

/// Header `phi,re_Phi,im_Phi,dispersion_err,dissipation`.
void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumSample>& spectrum);
/// Header `phi,error,bound`, modes n = 0..N/2.
void write_bound_csv(std::ostream& out, const SchemeConfig& scheme, int N);

}  // namespace wenonn::tools
