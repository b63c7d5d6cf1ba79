#include "wenonn_tools/studies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "wenonn/errors.hpp"
#include "wenonn/solver.hpp"
#include "wenonn_tools/problems.hpp"

namespace wenonn::tools {

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(const SchemeConfig& scheme,
                                              const std::vector<int>& resolutions, double cfl) {
  if (resolutions.empty()) throw ConfigError("convergence: no resolutions given");
  for (std::size_t k = 1; k < resolutions.size(); ++k)
    if (resolutions[k] <= resolutions[k - 1])
      throw ConfigError("convergence: resolutions must be strictly increasing");

  std::vector<ConvergenceRow> rows;
  for (int N : resolutions) {
    ProblemOverrides ov;
    ov.nx = N;
    ProblemSpec p = make_problem("sine-advection", ov);
    p.fixed_dt = cfl * std::pow(p.x.dx, 5.0 / 3.0);
    const RunResult r = run(p, scheme);
    ConvergenceRow row;
    row.N = N;
    for (int i = 0; i < N; ++i) {
      const double e = std::abs(r.final_field(i, 0, 0) - sine_advection_exact(p.x.center(i), r.time));
      row.L1 += e / N;
      row.Linf = std::max(row.Linf, e);
    }
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      const double ratio = std::log(static_cast<double>(N) / prev.N);
      row.order_L1 = std::log(prev.L1 / row.L1) / ratio;
      row.order_Linf = std::log(prev.Linf / row.Linf) / ratio;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "N,L1,Linf,order_L1,order_Linf\n";
  for (const auto& r : rows)
    out << r.N << ',' << g17(r.L1) << ',' << g17(r.Linf) << ',' << g17(r.order_L1) << ','
        << g17(r.order_Linf) << '\n';
}

ProbeFunction parse_probe_function(const std::string& name) {
  if (name == "sine-jump") return ProbeFunction::SineJump;
  if (name == "sine") return ProbeFunction::Sine;
  if (name == "constant") return ProbeFunction::Constant;
  throw ConfigError("unknown probe function '" + name + "' (sine-jump, sine, constant)");
}

double probe_value(ProbeFunction fn, double x) {
  using std::numbers::pi;
  if (fn == ProbeFunction::Constant) return 1.0;
  const double s = 2.0 / 3.0 * std::sin(6.0 * pi * x) + 0.25 * std::sin(1.6 * pi * x);
  return fn == ProbeFunction::SineJump && x >= 0.5 ? s + 3.0 : s;
}

std::vector<WeightRow> weights_study(ProbeFunction fn, const SchemeConfig& scheme, int n_cells,
                                     double x_left, double x_right) {
  scheme.validate();
  const Grid1D g = make_grid(x_left, x_right, n_cells);
  std::vector<double> values(static_cast<std::size_t>(n_cells) + 6);
  for (int p = 0; p < n_cells + 6; ++p) values[p] = probe_value(fn, g.center(p - 3));
  std::vector<WeightRow> rows;
  rows.reserve(static_cast<std::size_t>(n_cells) + 1);
  for (int k = 0; k <= n_cells; ++k) {
    Stencil5 s;
    std::copy_n(values.begin() + k, 5, s.begin());
    rows.push_back({g.face(k), nonlinear_weights(s, scheme)});
  }
  return rows;
}

void write_weights_header(std::ostream& out) { out << "scheme,x,w0,w1,w2\n"; }

void write_weights_rows(std::ostream& out, const std::string& label,
                        const std::vector<WeightRow>& rows) {
  for (const auto& r : rows)
    out << label << ',' << g17(r.x) << ',' << g17(r.w[0]) << ',' << g17(r.w[1]) << ','
        << g17(r.w[2]) << '\n';
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumSample>& spectrum) {
  out << "phi,re_Phi,im_Phi,dispersion_err,dissipation\n";
  for (const auto& s : spectrum)
    out << g17(s.phi) << ',' << g17(s.Phi.real()) << ',' << g17(s.Phi.imag()) << ','
        << g17(s.Phi.real() - s.phi) << ',' << g17(s.Phi.imag()) << '\n';
}

void write_bound_csv(std::ostream& out, const SchemeConfig& scheme, int N) {
  out << "phi,error,bound\n";
  for (int n = 0; n <= N / 2; ++n) {
    const SpectralErrorBound b = spectral_error_bound(scheme, n, N);
    out << g17(2.0 * std::numbers::pi * n / N) << ',' << g17(b.error) << ',' << g17(b.bound)
        << '\n';
  }
}

}  // namespace wenonn::tools
