#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "wenonn/adr.hpp"
#include "wenonn/errors.hpp"
#include "wenonn/euler.hpp"
#include "wenonn/network.hpp"
#include "wenonn/snapshot_io.hpp"
#include "wenonn/solver.hpp"

using namespace wenonn;
using doctest::Approx;
using std::numbers::pi;

namespace {

template <int N>
Matrix<N> multiply(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> c{};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

ProblemSpec constant_problem_1d(const std::vector<double>& state, int n = 40) {
  ProblemSpec p;
  p.name = "constant";
  p.physics = PhysicsModel::euler(1.4);
  p.x = make_grid(0, 1, n);
  p.t_final = 0.05;
  p.initial_condition = [state](double, double) { return state; };
  p.boundaries = Boundaries::all(Periodic{});
  return p;
}

}  // namespace

TEST_CASE("lax-friedrichs splitting") {
  const auto s = lf_split(2.0, 1.0, 3.0);
  CHECK(s.plus == 2.5);
  CHECK(s.minus == -0.5);
  const auto a = lf_split(0.7 * 1.3, 1.3, 0.7);
  CHECK(a.minus == 0.0);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> G;
  for (int t = 0; t < 100; ++t) {
    const double f = G(rng), u = G(rng), al = std::abs(G(rng));
    const auto r = lf_split(f, u, al);
    CHECK(r.plus + r.minus == Approx(f).epsilon(1e-14));
  }
}

TEST_CASE("roe average") {
  const auto s = conserved_1d(1.2, 0.3, 2.0, 1.4);
  const auto same = roe_average(s, s, 1.4);
  CHECK(same.rho == Approx(1.2));
  CHECK(same.u == Approx(0.3));
  CHECK(same.H == Approx((s.E + 2.0) / 1.2));
  CHECK(same.c == Approx(std::sqrt(1.4 * 2.0 / 1.2)));

  const auto lr = roe_average(conserved_1d(1, 0, 1, 1.4), conserved_1d(4, 0, 1, 1.4), 1.4);
  CHECK(lr.u == 0.0);
  CHECK(lr.rho == Approx(2.0));

  const auto sym = roe_average(conserved_1d(1, 0.5, 1, 1.4), conserved_1d(1, -0.5, 1, 1.4), 1.4);
  CHECK(sym.u == Approx(0.0).scale(1.0));

  CHECK_THROWS_AS(roe_average(EulerState1D{-1, 0, 1}, EulerState1D{1, 0, 1}, 1.4), NumericError);
  // Enthalpy too small for the kinetic energy.
  CHECK_THROWS_AS(roe_average(EulerState1D{1, 10, 1}, EulerState1D{1, 10, 1}, 1.4), NumericError);
}

TEST_CASE("eigensystems invert and diagonalise the flux Jacobian") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> U(0.1, 5.0), V(-3.0, 3.0);
  const double gamma = 1.4;
  for (int t = 0; t < 10000; ++t) {
    const auto a = conserved_2d(U(rng), V(rng), V(rng), U(rng), gamma);
    const auto b = conserved_2d(U(rng), V(rng), V(rng), U(rng), gamma);
    const auto avg = roe_average(a, b, gamma);
    for (Direction d : {Direction::X, Direction::Y}) {
      const auto es = eigensystem(avg, gamma, d);
      const auto id = multiply<4>(es.left, es.right);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(id[i][j] - (i == j)) < 1e-12 * (1 + std::abs(avg.u) + std::abs(avg.v)) * 10);
    }
    const auto a1 = conserved_1d(U(rng), V(rng), U(rng), gamma);
    const auto b1 = conserved_1d(U(rng), V(rng), U(rng), gamma);
    const auto e1 = eigensystem(roe_average(a1, b1, gamma), gamma);
    const auto id1 = multiply<3>(e1.left, e1.right);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::abs(id1[i][j] - (i == j)) < 1e-11);
  }

  const auto rest = eigensystem(roe_average(conserved_1d(1, 0, 1, gamma), conserved_1d(1, 0, 1, gamma), gamma), gamma);
  const double c = std::sqrt(gamma);
  CHECK(rest.lambda[0] == Approx(-c));
  CHECK(rest.lambda[1] == 0.0);
  CHECK(rest.lambda[2] == Approx(c));
}

TEST_CASE("R diag(lambda) L equals the finite-difference flux Jacobian") {
  const double gamma = 1.4;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> U(0.3, 3.0), V(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const auto s = conserved_2d(U(rng), V(rng), V(rng), U(rng), gamma);
    const auto avg = roe_average(s, s, gamma);
    for (Direction d : {Direction::X, Direction::Y}) {
      const auto es = eigensystem(avg, gamma, d);
      const double u0[4] = {s.rho, s.mx, s.my, s.E};
      for (int j = 0; j < 4; ++j) {
        double up[4], um[4];
        std::copy(u0, u0 + 4, up);
        std::copy(u0, u0 + 4, um);
        const double h = 1e-6 * std::max(1.0, std::abs(u0[j]));
        up[j] += h;
        um[j] -= h;
        const auto fp = euler_flux(EulerState2D{up[0], up[1], up[2], up[3]}, gamma, d);
        const auto fm = euler_flux(EulerState2D{um[0], um[1], um[2], um[3]}, gamma, d);
        for (int i = 0; i < 4; ++i) {
          const double fd = (fp[i] - fm[i]) / (2 * h);
          double a = 0.0;
          for (int k = 0; k < 4; ++k) a += es.right[i][k] * es.lambda[k] * es.left[k][j];
          CHECK(std::abs(a - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
        }
      }
    }
  }
}

TEST_CASE("interface flux: free stream, scalar consistency, zero network") {
  const double gamma = 1.4;
  const auto s = conserved_1d(1.3, 0.4, 2.2, gamma);
  std::vector<double> window;
  for (int m = 0; m < 6; ++m) window.insert(window.end(), {s.rho, s.mom, s.E});
  const auto exact = euler_flux(s, gamma);
  const auto f = interface_flux(window, 3, SchemeConfig::js(), 2.5, PhysicsModel::euler(gamma));
  for (int i = 0; i < 3; ++i) CHECK(f[i] == Approx(exact[i]).epsilon(1e-14));

  // Scalar advection: split fluxes reconstructed exactly as module weno does.
  const std::vector<double> u{0.1, 0.5, 0.2, 0.9, 0.4, 0.3};
  const double a = 0.7, alpha = 1.1;
  const auto phys = PhysicsModel::advection(a);
  for (const auto& cfg : {SchemeConfig::js(), SchemeConfig::z(), SchemeConfig::linear()}) {
    Stencil5 p, m;
    for (int k = 0; k < 5; ++k) p[k] = 0.5 * (a * u[k] + alpha * u[k]);
    for (int k = 0; k < 5; ++k) m[k] = 0.5 * (a * u[5 - k] - alpha * u[5 - k]);
    const double expect = reconstruct_interface(p, cfg) + reconstruct_interface(m, cfg);
    CHECK(interface_flux(u, 1, cfg, alpha, phys)[0] == expect);
  }

  auto net = std::make_shared<const NetworkParams>(NetworkParams::zeros(kDefaultLayerSizes));
  std::vector<double> w2;
  for (int m = 0; m < 6; ++m) {
    const auto st = conserved_2d(1.0 + 0.1 * m, 0.2 * m, -0.1 * m, 2.0 + 0.3 * m, gamma);
    w2.insert(w2.end(), {st.rho, st.mx, st.my, st.E});
  }
  for (Direction d : {Direction::X, Direction::Y}) {
    CHECK(interface_flux(w2, 4, SchemeConfig::z_nn(net), 3.0, PhysicsModel::euler(gamma), d) ==
          interface_flux(w2, 4, SchemeConfig::z(), 3.0, PhysicsModel::euler(gamma), d));
  }
  CHECK_THROWS_AS(interface_flux(w2, 3, SchemeConfig::z(), 1.0, PhysicsModel::euler()), ContractError);
}

TEST_CASE("constant states are fixed points of the rhs") {
  const auto p = constant_problem_1d({1.1, 0.3, 2.7});
  const StateField u = p.initial_field();
  const StateField r = rhs(u, SchemeConfig::js(), p.boundaries, 0.0, p.physics);
  for (double v : r.values()) CHECK(std::abs(v) < 1e-13);

  StateField u2(make_grid_2d(0, 1, 16, 0, 2, 12), 4);
  for (int j = 0; j < 12; ++j)
    for (int i = 0; i < 16; ++i) {
      const auto s = conserved_2d(0.8, 0.4, -0.7, 1.5, 1.4);
      u2(i, j, 0) = s.rho;
      u2(i, j, 1) = s.mx;
      u2(i, j, 2) = s.my;
      u2(i, j, 3) = s.E;
    }
  for (const auto& bcs : {Boundaries::all(Periodic{}), Boundaries::all(NonReflective{})}) {
    const auto r2 = rhs(u2, SchemeConfig::z(), bcs, 0.0, PhysicsModel::euler(1.4));
    for (double v : r2.values()) CHECK(std::abs(v) < 1e-13);
  }
}

TEST_CASE("advection rhs reproduces the ADR modified wavenumber") {
  const int N = 64;
  const double L = 2.0;
  const double delta = L / N;
  const auto phys = PhysicsModel::advection(1.0);
  for (const auto& cfg : {SchemeConfig::linear(), SchemeConfig::js(), SchemeConfig::z()}) {
    for (int n : {1, 5, 17, 30}) {
      const auto h = make_harmonic(n, N);
      StateField re(make_grid(0, L, N), 1), im(make_grid(0, L, N), 1);
      for (int j = 0; j < N; ++j) {
        re(j, 0, 0) = h.real_part[j];
        im(j, 0, 0) = h.imag_part[j];
      }
      const auto rr = rhs(re, cfg, Boundaries::all(Periodic{}), 0.0, phys);
      const auto ri = rhs(im, cfg, Boundaries::all(Periodic{}), 0.0, phys);
      std::vector<std::complex<double>> z(N);
      for (int j = 0; j < N; ++j) z[j] = {rr(j, 0, 0), ri(j, 0, 0)};
      const auto coeff = dft_coefficient(z, n);
      const auto Phi = modified_wavenumber(cfg, n, N).Phi;
      const auto expect = -std::complex<double>(0.0, 1.0) * Phi / delta;
      CHECK(std::abs(coeff - expect) < 1e-11);
    }
  }
}

TEST_CASE("Rayleigh-Taylor source term") {
  const double g = 5.0 / 3.0;
  StateField u(make_grid_2d(0, 1, 12, 0, 1, 12), 4);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.5, 2.0);
  for (int j = 0; j < 12; ++j)
    for (int i = 0; i < 12; ++i) {
      const auto s = conserved_2d(U(rng), U(rng) - 1.25, U(rng) - 1.25, U(rng), g);
      u(i, j, 0) = s.rho;
      u(i, j, 1) = s.mx;
      u(i, j, 2) = s.my;
      u(i, j, 3) = s.E;
    }
  const auto bcs = Boundaries::all(Periodic{});
  const auto plain = rhs(u, SchemeConfig::js(), bcs, 0.0, PhysicsModel::euler(g));
  const auto src = rhs(u, SchemeConfig::js(), bcs, 0.0, PhysicsModel::euler(g, SourceKind::RayleighTaylor));
  for (int j = 0; j < 12; ++j)
    for (int i = 0; i < 12; ++i) {
      CHECK(src(i, j, 0) == plain(i, j, 0));
      CHECK(src(i, j, 1) == plain(i, j, 1));
      CHECK(src(i, j, 2) - plain(i, j, 2) == Approx(u(i, j, 0)));
      CHECK(src(i, j, 3) - plain(i, j, 3) == Approx(u(i, j, 2)));
    }
}

TEST_CASE("SSP-RK3 stage algebra") {
  StateField u(make_grid(0, 1, 10), 1);
  for (int i = 0; i < 10; ++i) u(i, 0, 0) = 1.0 + i;
  const StateField u0 = u;
  rk3_step(u, 0.0, 0.1, [](const StateField&, double, StateField& out) {
    for (double& v : out.values()) v = 0.0;
  });
  CHECK(std::equal(u.values().begin(), u.values().end(), u0.values().begin()));

  for (double lambda : {-1.0, -2.5, 0.7}) {
    const double dt = 0.3;
    StateField x(make_grid(0, 1, 10), 1);
    for (double& v : x.values()) v = 1.0;
    rk3_step(x, 0.0, dt, [lambda](const StateField& in, double, StateField& out) {
      for (std::size_t k = 0; k < in.values().size(); ++k) out.values()[k] = lambda * in.values()[k];
    });
    const double z = lambda * dt;
    CHECK(std::abs(x(0, 0, 0) - (1 + z + z * z / 2 + z * z * z / 6)) < 1e-14);
  }

  // Linearity for a linear operator (periodic linear advection, Linear scheme).
  const auto phys = PhysicsModel::advection(1.0);
  const auto bcs = Boundaries::all(Periodic{});
  RhsFunction L = [&](const StateField& in, double t, StateField& out) {
    rhs(in, SchemeConfig::linear(), bcs, t, phys, out);
  };
  StateField a(make_grid(0, 1, 20), 1), b(make_grid(0, 1, 20), 1), c(make_grid(0, 1, 20), 1);
  for (int i = 0; i < 20; ++i) {
    a(i, 0, 0) = std::sin(0.3 * i);
    b(i, 0, 0) = std::cos(1.1 * i);
    c(i, 0, 0) = 2.0 * a(i, 0, 0) - 3.0 * b(i, 0, 0);
  }
  rk3_step(a, 0, 0.01, L);
  rk3_step(b, 0, 0.01, L);
  rk3_step(c, 0, 0.01, L);
  for (int i = 0; i < 20; ++i) CHECK(c(i, 0, 0) == Approx(2.0 * a(i, 0, 0) - 3.0 * b(i, 0, 0)).epsilon(1e-12));
  CHECK_THROWS_AS(rk3_step(a, 0, 0.0, L), ContractError);
}

TEST_CASE("compute_dt") {
  StateField u(make_grid(0, 1, 100), 3);
  for (int i = 0; i < 100; ++i) {
    const auto s = conserved_1d(1, 0, 1, 1.4);
    u(i, 0, 0) = s.rho;
    u(i, 0, 1) = s.mom;
    u(i, 0, 2) = s.E;
  }
  const double dt = compute_dt(u, 0.4, PhysicsModel::euler(1.4));
  CHECK(dt == Approx(0.004 / std::sqrt(1.4)).epsilon(1e-14));
  CHECK(dt == Approx(3.381e-3).epsilon(1e-3));

  StateField fine(make_grid(0, 1, 200), 3);
  for (int i = 0; i < 200; ++i) {
    fine(i, 0, 0) = u(0, 0, 0);
    fine(i, 0, 1) = u(0, 0, 1);
    fine(i, 0, 2) = u(0, 0, 2);
  }
  CHECK(compute_dt(fine, 0.4, PhysicsModel::euler(1.4)) == Approx(dt / 2).epsilon(1e-14));

  StateField two(make_grid_2d(0, 1, 10, 0, 2, 10), 4);
  for (int k = 0; k < 100; ++k) {
    const auto s = conserved_2d(1, 0.5, -1.0, 1, 1.4);
    two.values()[4 * k] = s.rho;
    two.values()[4 * k + 1] = s.mx;
    two.values()[4 * k + 2] = s.my;
    two.values()[4 * k + 3] = s.E;
  }
  const double c = std::sqrt(1.4);
  CHECK(compute_dt(two, 0.4, PhysicsModel::euler(1.4)) == Approx(0.4 / ((0.5 + c) / 0.1 + (1.0 + c) / 0.2)));
  CHECK(compute_dt(StateField(make_grid(0, 1, 10), 1), 0.5, PhysicsModel::advection(0.0)) == Approx(0.05));
}

TEST_CASE("run: constant states, final-time clamp and snapshots") {
  auto p = constant_problem_1d({1.0, 0.5, 3.0});
  p.t_final = 0.0123;
  p.snapshot_times = {0.005, 0.02, -1.0};
  const auto r = run(p, SchemeConfig::js());
  CHECK(r.time == 0.0123);
  REQUIRE(r.snapshots.size() == 2);
  CHECK(r.snapshots[0].time == 0.005);
  CHECK(r.snapshots[1].time == 0.0123);
  for (int i = 0; i < 40; ++i) {
    CHECK(r.final_field(i, 0, 0) == Approx(1.0).epsilon(1e-14));
    CHECK(r.final_field(i, 0, 1) == Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("run: sine advection over one period") {
  ProblemSpec p;
  p.name = "sine";
  p.physics = PhysicsModel::advection(1.0);
  p.x = make_grid(0, 1, 100);
  p.t_final = 1.0;
  p.initial_condition = [](double x, double) { return std::vector<double>{std::sin(2 * pi * x)}; };
  p.boundaries = Boundaries::all(Periodic{});
  const auto r = run(p, SchemeConfig::z());
  double linf = 0.0;
  for (int i = 0; i < 100; ++i) linf = std::max(linf, std::abs(r.final_field(i, 0, 0) - std::sin(2 * pi * p.x.center(i))));
  CHECK(linf < 1e-4);
}

TEST_CASE("periodic Euler conserves mass, momentum and energy") {
  ProblemSpec p;
  p.name = "wave";
  p.physics = PhysicsModel::euler(1.4);
  p.x = make_grid(0, 1, 64);
  p.t_final = 0.05;
  p.initial_condition = [](double x, double) {
    const auto s = conserved_1d(1 + 0.2 * std::sin(2 * pi * x), 0.5, 1 + 0.1 * std::cos(2 * pi * x), 1.4);
    return std::vector<double>{s.rho, s.mom, s.E};
  };
  p.boundaries = Boundaries::all(Periodic{});
  StateField u = p.initial_field();
  auto sums = [](const StateField& f) {
    std::array<double, 3> s{};
    for (int i = 0; i < f.nx(); ++i)
      for (int v = 0; v < 3; ++v) s[v] += f(i, 0, v) * f.x_axis().dx;
    return s;
  };
  auto before = sums(u);
  RhsFunction L = [&](const StateField& in, double t, StateField& out) {
    rhs(in, SchemeConfig::js(), p.boundaries, t, p.physics, out);
  };
  for (int step = 0; step < 20; ++step) {
    rk3_step(u, 0.0, compute_dt(u, 0.4, p.physics), L);
    const auto after = sums(u);
    for (int v = 0; v < 3; ++v) CHECK(std::abs(after[v] - before[v]) < 1e-12);
    before = after;
  }
}

TEST_CASE("zero-network schemes give identical trajectories") {
  ProblemSpec p;
  p.name = "sod";
  p.physics = PhysicsModel::euler(1.4);
  p.x = make_grid(0, 1, 80);
  p.t_final = 0.1;
  p.initial_condition = [](double x, double) {
    const auto s = x < 0.5 ? conserved_1d(1, 0, 1, 1.4) : conserved_1d(0.125, 0, 0.1, 1.4);
    return std::vector<double>{s.rho, s.mom, s.E};
  };
  p.boundaries = Boundaries::all(NonReflective{});
  auto net = std::make_shared<const NetworkParams>(NetworkParams::zeros(kDefaultLayerSizes));
  const auto a = run(p, SchemeConfig::js());
  const auto b = run(p, SchemeConfig::js_nn(net));
  CHECK(a.steps == b.steps);
  CHECK(std::equal(a.final_field.values().begin(), a.final_field.values().end(), b.final_field.values().begin()));
}

TEST_CASE("inadmissible states abort with diagnostics") {
  auto p = constant_problem_1d({1.0, 0.0, 1.0});
  p.initial_condition = [](double x, double) {
    return x > 0.5 && x < 0.53 ? std::vector<double>{-1.0, 0.0, 1.0} : std::vector<double>{1.0, 0.0, 1.0};
  };
  try {
    run(p, SchemeConfig::js());
    FAIL("expected SolverFailure");
  } catch (const SolverFailure& e) {
    CHECK(e.cell_i == 20);
    CHECK(e.time == 0.0);
    CHECK(std::string(e.what()).find("density") != std::string::npos);
  }
  p.t_final = -1;
  CHECK_THROWS_AS(run(p, SchemeConfig::js()), ConfigError);
}

TEST_CASE("total variation") {
  CHECK(total_variation(std::vector<double>{2, 2, 2}) == 0.0);
  CHECK(total_variation(std::vector<double>{0, 0, 1, 1}) == 1.0);
  CHECK(total_variation(std::vector<double>{0, 0, 1, 1}, true) == 2.0);
  std::vector<double> s(1000);
  for (int i = 0; i < 1000; ++i) s[i] = 1.5 * std::sin(2 * pi * (i + 0.5) / 1000);
  CHECK(total_variation(s, true) == Approx(6.0).epsilon(1e-4));
  CHECK_THROWS_AS(total_variation(std::vector<double>{1}), ContractError);
}

TEST_CASE("snapshot formats") {
  StateField f(make_grid(0, 1, 10), 3);
  for (int i = 0; i < 10; ++i) {
    const auto s = conserved_1d(1 + 0.1 * i, 0.3, 1.0, 1.4);
    f(i, 0, 0) = s.rho;
    f(i, 0, 1) = s.mom;
    f(i, 0, 2) = s.E;
  }
  std::ostringstream csv;
  write_snapshot_csv(csv, f, 1.4);
  std::istringstream lines(csv.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "x,rho,mom,E,u,p");
  CHECK(first.rfind("0.050000000000000003,1,", 0) == 0);

  StateField sc(make_grid(0, 1, 10), 1);
  std::ostringstream scsv;
  write_snapshot_csv(scsv, sc, 1.4);
  CHECK(scsv.str().rfind("x,u\n", 0) == 0);

  StateField g(make_grid_2d(0, 2, 10, -1, 1, 12), 4);
  for (int j = 0; j < 12; ++j)
    for (int i = 0; i < 10; ++i) {
      const auto s = conserved_2d(1 + 0.01 * i + 0.1 * j, 0.1 * i, -0.2 * j, 2 + std::sin(i + j), 1.4);
      g(i, j, 0) = s.rho;
      g(i, j, 1) = s.mx;
      g(i, j, 2) = s.my;
      g(i, j, 3) = s.E;
    }
  std::ostringstream grid;
  write_grid2d(grid, g, 1.4, 0.25);
  CHECK(grid.str().rfind("wenonn-grid2d 1\n10 12\n0 2 -1 1\ntime 0.25\nrho\n", 0) == 0);
  std::istringstream back(grid.str());
  const auto snap = read_grid2d(back);
  CHECK(snap.nx == 10);
  CHECK(snap.ny == 12);
  CHECK(snap.time == 0.25);
  CHECK(snap.rho[5 * 10 + 3] == g(3, 5, 0));
  CHECK(snap.u[5 * 10 + 3] == g(3, 5, 1) / g(3, 5, 0));
  CHECK(snap.p[0] == Approx(pressure(EulerState2D{g(0, 0, 0), g(0, 0, 1), g(0, 0, 2), g(0, 0, 3)}, 1.4)));
  std::istringstream bad("wenonn-grid2d 2\n");
  CHECK_THROWS_AS(read_grid2d(bad), ConfigError);
}
