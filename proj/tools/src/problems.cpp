#include "wenonn_tools/problems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "wenonn/errors.hpp"

namespace wenonn::tools {

namespace {

using std::numbers::pi;

struct Preset {
  std::function<ProblemSpec(int nx, int ny)> build;
  int nx;
  int ny;  // 0 for 1D
};

std::vector<double> prim1(double rho, double u, double p, double gamma) {
  const EulerState1D s = conserved_1d(rho, u, p, gamma);
  return {s.rho, s.mom, s.E};
}

std::vector<double> prim2(double rho, double u, double v, double p, double gamma) {
  const EulerState2D s = conserved_2d(rho, u, v, p, gamma);
  return {s.rho, s.mx, s.my, s.E};
}

ProblemSpec euler_1d(std::string name, double xl, double xr, int nx, double t_final,
                     std::function<std::vector<double>(double)> ic, const BoundaryKind& bc) {
  ProblemSpec p;
  p.name = std::move(name);
  p.dimension = 1;
  p.physics = PhysicsModel::euler(1.4);
  p.x = make_grid(xl, xr, nx);
  p.t_final = t_final;
  p.initial_condition = [ic = std::move(ic)](double x, double) { return ic(x); };
  p.boundaries = Boundaries::all(bc);
  return p;
}

ProblemSpec composite(int nx, int) {
  ProblemSpec p;
  p.name = "composite";
  p.dimension = 1;
  p.physics = PhysicsModel::advection(1.0);
  p.x = make_grid(-1.0, 1.0, nx);
  p.t_final = 4.0;
  p.initial_condition = [](double x, double) { return std::vector<double>{composite_profile(x)}; };
  p.boundaries = Boundaries::all(Periodic{});
  return p;
}

ProblemSpec sine_advection(int nx, int) {
  ProblemSpec p;
  p.name = "sine-advection";
  p.dimension = 1;
  p.physics = PhysicsModel::advection(1.0);
  p.x = make_grid(0.0, 1.0, nx);
  p.t_final = 1.0;
  p.initial_condition = [](double x, double) {
    return std::vector<double>{sine_advection_exact(x, 0.0)};
  };
  p.boundaries = Boundaries::all(Periodic{});
  return p;
}

ProblemSpec titarev_toro(int nx, int) {
  return euler_1d("titarev-toro", -5.0, 5.0, nx, 5.0, [](double x) {
    if (x < -4.5) return prim1(1.515695, 0.523346, 1.805, 1.4);
    return prim1(1.0 + 0.1 * std::sin(20.0 * pi * x), 0.0, 1.0, 1.4);
  }, NonReflective{});
}

ProblemSpec lax(int nx, int) {
  return euler_1d("lax", 0.0, 1.0, nx, 0.14, [](double x) {
    return x < 0.5 ? prim1(0.445, 0.698, 3.528, 1.4) : prim1(0.5, 0.0, 0.5710, 1.4);
  }, NonReflective{});
}

ProblemSpec blast(int nx, int) {
  return euler_1d("blast", 0.0, 1.0, nx, 0.038, [](double x) {
    const double p = x < 0.1 ? 1000.0 : (x < 0.9 ? 0.01 : 100.0);
    return prim1(1.0, 0.0, p, 1.4);
  }, Reflective{});
}

ProblemSpec shu_osher(int nx, int) {
  return euler_1d("shu-osher", 0.0, 10.0, nx, 1.8, [](double x) {
    if (x < 1.0) return prim1(3.857, 2.629, 10.333, 1.4);
    return prim1(1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0, 1.4);
  }, NonReflective{});
}

ProblemSpec euler_2d(std::string name, double gamma, Grid2D g, double t_final) {
  ProblemSpec p;
  p.name = std::move(name);
  p.dimension = 2;
  p.physics = PhysicsModel::euler(gamma);
  p.x = g.x;
  p.y = g.y;
  p.t_final = t_final;
  return p;
}

ProblemSpec riemann2d(int nx, int ny) {
  ProblemSpec p = euler_2d("riemann2d", 1.4, make_grid_2d(0.0, 1.0, nx, 0.0, 1.0, ny), 0.8);
  p.initial_condition = [](double x, double y) {
    if (y >= 0.8) return x >= 0.8 ? prim2(1.5, 0.0, 0.0, 1.5, 1.4) : prim2(0.5323, 1.206, 0.0, 0.3, 1.4);
    return x < 0.8 ? prim2(0.138, 1.206, 1.206, 0.029, 1.4) : prim2(0.5323, 0.0, 1.206, 0.3, 1.4);
  };
  p.boundaries = Boundaries::all(NonReflective{});
  return p;
}

ProblemSpec rayleigh_taylor(int nx, int ny) {
  constexpr double g = 5.0 / 3.0;
  ProblemSpec p = euler_2d("rt", g, make_grid_2d(0.0, 0.25, nx, 0.0, 1.0, ny), 1.95);
  p.physics.source = SourceKind::RayleighTaylor;
  p.initial_condition = [](double x, double y) {
    const double rho = y < 0.5 ? 2.0 : 1.0;
    const double pr = y < 0.5 ? 2.0 * y + 1.0 : y + 1.5;
    const double v = -0.025 * std::sqrt(g * pr / rho) * std::cos(8.0 * pi * x);
    return prim2(rho, 0.0, v, pr, g);
  };
  p.boundaries.left = Reflective{};
  p.boundaries.right = Reflective{};
  p.boundaries.top = Fixed{prim2(1.0, 0.0, 0.0, 2.5, g)};
  p.boundaries.bottom = Fixed{prim2(2.0, 0.0, 0.0, 1.0, g)};
  return p;
}

ProblemSpec double_mach(int nx, int ny) {
  ProblemSpec p = euler_2d("double-mach", 1.4, make_grid_2d(0.0, 4.0, nx, 0.0, 1.0, ny), 0.2);
  const double s3 = std::sqrt(3.0);
  const std::vector<double> post = prim2(8.0, 8.25 * std::sin(pi / 3.0), -8.25 * std::cos(pi / 3.0), 116.5, 1.4);
  const std::vector<double> pre = prim2(1.4, 0.0, 0.0, 1.0, 1.4);
  p.initial_condition = [post, pre, s3](double x, double y) {
    return x > 1.0 / 6.0 + y / s3 ? pre : post;
  };
  p.boundaries.left = Fixed{post};
  p.boundaries.right = NonReflective{};
  p.boundaries.top = DoubleMachTop{1.0 / 6.0 + 1.0 / s3, 20.0 / s3, post, pre};
  p.boundaries.bottom = PartialReflective{1.0 / 6.0};
  return p;
}

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = {
      {"composite", {composite, 200, 0}},
      {"titarev-toro", {titarev_toro, 1000, 0}},
      {"lax", {lax, 200, 0}},
      {"blast", {blast, 400, 0}},
      {"shu-osher", {shu_osher, 200, 0}},
      {"riemann2d", {riemann2d, 500, 500}},
      {"rt", {rayleigh_taylor, 200, 800}},
      {"double-mach", {double_mach, 960, 240}},
      {"sine-advection", {sine_advection, 100, 0}},
  };
  return table;
}

}  // namespace

std::vector<std::string> problem_names() {
  return {"composite", "titarev-toro", "lax",         "blast",         "shu-osher",
          "riemann2d", "rt",           "double-mach", "sine-advection"};
}

ProblemSpec make_problem(const std::string& name, const ProblemOverrides& ov) {
  const auto it = presets().find(name);
  if (it == presets().end()) throw ConfigError("unknown problem '" + name + "'");
  const Preset& preset = it->second;
  if (ov.ny && preset.ny == 0) throw ConfigError("problem '" + name + "' is 1D; --ny not allowed");
  ProblemSpec p = preset.build(ov.nx.value_or(preset.nx), ov.ny.value_or(preset.ny));
  if (ov.t_final) p.t_final = *ov.t_final;
  if (ov.cfl) p.cfl = *ov.cfl;
  p.validate();
  return p;
}

double composite_profile(double x) {
  constexpr double z = -0.7, delta = 0.005, alpha = 10.0, a = 0.5;
  const double beta = std::log(2.0) / (36.0 * delta * delta);
  auto G = [&](double c) { return std::exp(-beta * (x - c) * (x - c)); };
  auto F = [&](double c) { return std::sqrt(std::max(1.0 - alpha * alpha * (x - c) * (x - c), 0.0)); };
  if (x >= -0.8 && x < -0.6) return (G(z - delta) + G(z + delta) + 4.0 * G(z)) / 6.0;
  if (x >= -0.4 && x < -0.2) return 1.0;
  if (x >= 0.0 && x < 0.2) return 1.0 - std::abs(10.0 * (x - 0.1));
  if (x >= 0.4 && x < 0.6) return (F(a - delta) + F(a + delta) + 4.0 * F(a)) / 6.0;
  return 0.0;
}

double sine_advection_exact(double x, double t) { return std::sin(2.0 * pi * (x - t)); }

}  // namespace wenonn::tools
