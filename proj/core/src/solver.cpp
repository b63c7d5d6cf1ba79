#include "wenonn/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace wenonn {

PhysicsModel PhysicsModel::advection(double speed) {
  PhysicsModel m;
  m.equation = Equation::Advection;
  m.advection_speed = speed;
  return m;
}

PhysicsModel PhysicsModel::euler(double gamma, SourceKind source) {
  PhysicsModel m;
  m.equation = Equation::Euler;
  m.gamma = gamma;
  m.source = source;
  return m;
}

int PhysicsModel::n_vars(int dimension) const {
  return equation == Equation::Advection ? 1 : dimension + 2;
}

void ProblemSpec::validate() const {
  auto fail = [&](const std::string& msg) { throw ConfigError("problem '" + name + "': " + msg); };
  if (dimension != 1 && dimension != 2) fail("dimension must be 1 or 2");
  if (physics.equation == Equation::Euler && !(physics.gamma > 1.0)) fail("gamma must exceed 1");
  if (physics.equation == Equation::Advection && dimension != 1) fail("advection is 1D only");
  if (physics.source == SourceKind::RayleighTaylor && dimension != 2)
    fail("the Rayleigh-Taylor source needs a 2D problem");
  if (!(t_final > 0.0)) fail("t_final must be positive");
  if (!(cfl > 0.0)) fail("cfl must be positive");
  if (!(fixed_dt >= 0.0)) fail("fixed_dt must be non-negative");
  if (!initial_condition) fail("missing initial condition");
  if (x.n_cells < 10 || !(x.dx > 0.0)) fail("bad x grid");
  if (dimension == 2 && (y.n_cells < 10 || !(y.dx > 0.0))) fail("bad y grid");
}

StateField ProblemSpec::make_field() const {
  const int nv = physics.n_vars(dimension);
  return dimension == 1 ? StateField(x, nv) : StateField(Grid2D{x, y}, nv);
}

StateField ProblemSpec::initial_field() const {
  StateField f = make_field();
  for (int j = 0; j < f.ny(); ++j) {
    const double yc = dimension == 2 ? y.center(j) : 0.0;
    for (int i = 0; i < f.nx(); ++i) {
      const std::vector<double> s = initial_condition(x.center(i), yc);
      if (static_cast<int>(s.size()) != f.n_vars())
        throw ConfigError("problem '" + name + "': initial condition returned " +
                          std::to_string(s.size()) + " values, expected " +
                          std::to_string(f.n_vars()));
      std::copy(s.begin(), s.end(), f.cell(i, j).begin());
    }
  }
  return f;
}

double total_variation(std::span<const double> values, bool periodic) {
  if (values.size() < 2) throw ContractError("total_variation: need at least two values");
  double tv = 0.0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) tv += std::abs(values[i + 1] - values[i]);
  if (periodic) tv += std::abs(values.front() - values.back());
  return tv;
}

namespace {

template <int NV>
using State = std::array<double, NV>;

template <int NV>
State<NV> physical_flux(const double* u, const PhysicsModel& ph, Direction dir) {
  if constexpr (NV == 1) {
    return {ph.advection_speed * u[0]};
  } else if constexpr (NV == 3) {
    return euler_flux(EulerState1D{u[0], u[1], u[2]}, ph.gamma);
  } else {
    return euler_flux(EulerState2D{u[0], u[1], u[2], u[3]}, ph.gamma, dir);
  }
}

/// Flux at the interface between cells 2 and 3 of six consecutive states.
template <int NV>
State<NV> window_flux(const double* U, const double* F, const SchemeConfig& scheme, double alpha,
                      const PhysicsModel& ph, Direction dir) {
  if constexpr (NV == 1) {
    Stencil5 plus, minus;
    for (int m = 0; m < 5; ++m) plus[m] = 0.5 * (F[m] + alpha * U[m]);
    for (int m = 0; m < 5; ++m) minus[m] = 0.5 * (F[5 - m] - alpha * U[5 - m]);
    return {reconstruct_interface(plus, scheme) + reconstruct_interface(minus, scheme)};
  } else {
    const double* ul = U + 2 * NV;
    const double* ur = U + 3 * NV;
    RoeAverage avg;
    if constexpr (NV == 3) {
      avg = roe_average(EulerState1D{ul[0], ul[1], ul[2]}, EulerState1D{ur[0], ur[1], ur[2]},
                        ph.gamma);
    } else {
      avg = roe_average(EulerState2D{ul[0], ul[1], ul[2], ul[3]},
                        EulerState2D{ur[0], ur[1], ur[2], ur[3]}, ph.gamma);
    }
    Eigensystem<NV> es;
    if constexpr (NV == 3) {
      es = eigensystem(avg, ph.gamma);
    } else {
      es = eigensystem(avg, ph.gamma, dir);
    }
    State<NV> fhat{};
    for (int r = 0; r < NV; ++r) {
      const auto& lr = es.left[r];
      std::array<double, 6> w{}, g{};
      for (int m = 0; m < 6; ++m) {
        double sw = 0.0, sg = 0.0;
        for (int c = 0; c < NV; ++c) {
          sw += lr[c] * U[m * NV + c];
          sg += lr[c] * F[m * NV + c];
        }
        w[m] = sw;
        g[m] = sg;
      }
      Stencil5 plus, minus;
      for (int m = 0; m < 5; ++m) plus[m] = 0.5 * (g[m] + alpha * w[m]);
      for (int m = 0; m < 5; ++m) minus[m] = 0.5 * (g[5 - m] - alpha * w[5 - m]);
      fhat[r] = reconstruct_interface(plus, scheme) + reconstruct_interface(minus, scheme);
    }
    State<NV> out{};
    for (int c = 0; c < NV; ++c) {
      double s = 0.0;
      for (int r = 0; r < NV; ++r) s += es.right[c][r] * fhat[r];
      out[c] = s;
    }
    return out;
  }
}

template <int NV>
double max_speed(const double* u, const PhysicsModel& ph, Direction dir) {
  if constexpr (NV == 1) {
    return std::abs(ph.advection_speed);
  } else {
    const double rho = u[0];
    const double un = (NV == 4 && dir == Direction::Y ? u[2] : u[1]) / rho;
    double ke = 0.0;
    for (int c = 1; c < NV - 1; ++c) ke += u[c] * u[c];
    const double p = (ph.gamma - 1.0) * (u[NV - 1] - 0.5 * ke / rho);
    return std::abs(un) + std::sqrt(ph.gamma * p / rho);
  }
}

/// Line buffers reused across sweeps.
template <int NV>
struct LineWork {
  std::vector<double> U, F, flux;
  void resize(int n_padded) {
    U.resize(static_cast<std::size_t>(n_padded) * NV);
    F.resize(static_cast<std::size_t>(n_padded) * NV);
    flux.resize(static_cast<std::size_t>(n_padded) * NV);
  }
};

/// Adds -(f_{i+1/2} - f_{i-1/2}) / h for one grid line. `get(p)` returns padded
/// cell p - ghost of the line; `acc(i)` the output cell i.
template <int NV, class Get, class Acc>
void sweep_line(int n, double h, Get get, Acc acc, const SchemeConfig& scheme, double alpha,
                const PhysicsModel& ph, Direction dir, LineWork<NV>& work) {
  const int np = n + 2 * kGhostWidth;
  work.resize(np);
  for (int p = 0; p < np; ++p) {
    std::span<const double> c = get(p - kGhostWidth);
    std::copy(c.begin(), c.end(), work.U.begin() + p * NV);
    const State<NV> f = physical_flux<NV>(c.data(), ph, dir);
    std::copy(f.begin(), f.end(), work.F.begin() + p * NV);
  }
  // Interface k sits between cells k-1 and k; its window starts at padded cell k.
  for (int k = 0; k <= n; ++k) {
    const State<NV> f = window_flux<NV>(work.U.data() + k * NV, work.F.data() + k * NV, scheme,
                                        alpha, ph, dir);
    std::copy(f.begin(), f.end(), work.flux.begin() + k * NV);
  }
  const double inv_h = 1.0 / h;
  for (int i = 0; i < n; ++i) {
    std::span<double> out = acc(i);
    for (int c = 0; c < NV; ++c)
      out[c] -= (work.flux[(i + 1) * NV + c] - work.flux[i * NV + c]) * inv_h;
  }
}

template <int NV>
double splitting_speed_impl(const PaddedField& pf, const PhysicsModel& ph, Direction dir) {
  double a = 0.0;
  const int g = pf.ghost();
  const int jlo = pf.two_d() ? -g : 0;
  const int jhi = pf.two_d() ? pf.ny() + g : 1;
  for (int j = jlo; j < jhi; ++j)
    for (int i = -g; i < pf.nx() + g; ++i) a = std::max(a, max_speed<NV>(pf.cell(i, j).data(), ph, dir));
  if (!std::isfinite(a)) throw NumericError("splitting_speed: non-finite wave speed");
  return a;
}

template <int NV>
void rhs_impl(const StateField& field, const SchemeConfig& scheme, const Boundaries& bcs, double t,
              const PhysicsModel& ph, StateField& out) {
  const PaddedField pf = fill_ghosts(field, bcs, t);
  std::fill(out.values().begin(), out.values().end(), 0.0);
  LineWork<NV> work;
  const int nx = field.nx();
  const int ny = field.ny();

  const double ax = splitting_speed_impl<NV>(pf, ph, Direction::X);
  for (int j = 0; j < ny; ++j) {
    sweep_line<NV>(
        nx, field.x_axis().dx, [&](int i) { return pf.cell(i, j); },
        [&](int i) { return out.cell(i, j); }, scheme, ax, ph, Direction::X, work);
  }
  if (field.dimension() == 2) {
    const double ay = splitting_speed_impl<NV>(pf, ph, Direction::Y);
    for (int i = 0; i < nx; ++i) {
      sweep_line<NV>(
          ny, field.y_axis().dx, [&](int j) { return pf.cell(i, j); },
          [&](int j) { return out.cell(i, j); }, scheme, ay, ph, Direction::Y, work);
    }
  }
  if constexpr (NV == 4) {
    if (ph.source == SourceKind::RayleighTaylor) {
      for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
          const auto u = field.cell(i, j);
          auto r = out.cell(i, j);
          r[2] += u[0];
          r[3] += u[2];
        }
      }
    }
  }
}

template <class Fn>
decltype(auto) dispatch_nv(int nv, Fn&& fn) {
  switch (nv) {
    case 1: return fn(std::integral_constant<int, 1>{});
    case 3: return fn(std::integral_constant<int, 3>{});
    case 4: return fn(std::integral_constant<int, 4>{});
    default:
      throw ContractError("solver: unsupported variable count " + std::to_string(nv));
  }
}

int expected_vars(const StateField& field, const PhysicsModel& ph) {
  return ph.n_vars(field.dimension());
}

}  // namespace

std::vector<double> interface_flux(std::span<const double> window, int n_vars,
                                   const SchemeConfig& scheme, double alpha,
                                   const PhysicsModel& physics, Direction direction) {
  if (window.size() != static_cast<std::size_t>(6 * n_vars))
    throw ContractError("interface_flux: window must hold six states");
  return dispatch_nv(n_vars, [&](auto nvc) {
    constexpr int NV = decltype(nvc)::value;
    std::array<double, 6 * NV> F{};
    for (int m = 0; m < 6; ++m) {
      const State<NV> f = physical_flux<NV>(window.data() + m * NV, physics, direction);
      std::copy(f.begin(), f.end(), F.begin() + m * NV);
    }
    const State<NV> r = window_flux<NV>(window.data(), F.data(), scheme, alpha, physics, direction);
    return std::vector<double>(r.begin(), r.end());
  });
}

double splitting_speed(const PaddedField& padded, const PhysicsModel& physics,
                       Direction direction) {
  return dispatch_nv(padded.n_vars(), [&](auto nvc) {
    return splitting_speed_impl<decltype(nvc)::value>(padded, physics, direction);
  });
}

void check_admissible(const StateField& field, const PhysicsModel& physics, double t) {
  const int nv = field.n_vars();
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) {
      const auto u = field.cell(i, j);
      bool ok = std::all_of(u.begin(), u.end(), [](double v) { return std::isfinite(v); });
      const char* what = "non-finite value";
      if (ok && physics.equation == Equation::Euler) {
        double ke = 0.0;
        for (int c = 1; c < nv - 1; ++c) ke += u[c] * u[c];
        const double p = u[0] > 0.0 ? (physics.gamma - 1.0) * (u[nv - 1] - 0.5 * ke / u[0]) : 0.0;
        if (!(u[0] > 0.0)) {
          ok = false;
          what = "non-positive density";
        } else if (!(p > 0.0)) {
          ok = false;
          what = "non-positive pressure";
        }
      }
      if (!ok) {
        std::ostringstream msg;
        msg << what << " at t = " << t << " in cell (" << i;
        if (field.dimension() == 2) msg << ", " << j;
        msg << ")";
        throw SolverFailure(msg.str(), t, i, j);
      }
    }
  }
}

void rhs(const StateField& field, const SchemeConfig& scheme, const Boundaries& bcs, double t,
         const PhysicsModel& physics, StateField& out) {
  if (!field.same_layout(out)) throw ContractError("rhs: output layout mismatch");
  if (field.n_vars() != expected_vars(field, physics))
    throw ContractError("rhs: variable count does not match the physics model");
  check_admissible(field, physics, t);
  dispatch_nv(field.n_vars(), [&](auto nvc) {
    rhs_impl<decltype(nvc)::value>(field, scheme, bcs, t, physics, out);
  });
}

StateField rhs(const StateField& field, const SchemeConfig& scheme, const Boundaries& bcs,
               double t, const PhysicsModel& physics) {
  StateField out = field;
  rhs(field, scheme, bcs, t, physics, out);
  return out;
}

void rk3_step(StateField& u, double t, double dt, const RhsFunction& rhs_fn) {
  if (!(dt > 0.0)) throw ContractError("rk3_step: dt must be positive");
  StateField k = u;
  StateField stage = u;
  auto U = u.values();
  auto K = k.values();
  auto S = stage.values();
  const std::size_t n = U.size();

  rhs_fn(u, t, k);
  for (std::size_t i = 0; i < n; ++i) S[i] = U[i] + dt * K[i];
  rhs_fn(stage, t + dt, k);
  for (std::size_t i = 0; i < n; ++i) S[i] = 0.75 * U[i] + 0.25 * (S[i] + dt * K[i]);
  rhs_fn(stage, t + 0.5 * dt, k);
  for (std::size_t i = 0; i < n; ++i) U[i] = U[i] / 3.0 + (2.0 / 3.0) * (S[i] + dt * K[i]);
}

double compute_dt(const StateField& field, double cfl, const PhysicsModel& physics) {
  const double dx = field.x_axis().dx;
  if (physics.equation == Equation::Advection) {
    const double a = std::abs(physics.advection_speed);
    return a > 0.0 ? cfl * dx / a : cfl * dx;
  }
  const int nv = field.n_vars();
  double sx = 0.0, sy = 0.0;
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) {
      const auto u = field.cell(i, j);
      double ke = 0.0;
      for (int c = 1; c < nv - 1; ++c) ke += u[c] * u[c];
      const double p = (physics.gamma - 1.0) * (u[nv - 1] - 0.5 * ke / u[0]);
      const double c = std::sqrt(physics.gamma * p / u[0]);
      sx = std::max(sx, std::abs(u[1] / u[0]) + c);
      if (nv == 4) sy = std::max(sy, std::abs(u[2] / u[0]) + c);
    }
  }
  if (field.dimension() == 1) return sx > 0.0 ? cfl * dx / sx : cfl * dx;
  const double dy = field.y_axis().dx;
  const double rate = sx / dx + sy / dy;
  return rate > 0.0 ? cfl / rate : cfl * dx;
}

RunResult run(const ProblemSpec& problem, const SchemeConfig& scheme,
              const StepObserver& observer) {
  problem.validate();
  scheme.validate();
  StateField u = problem.initial_field();
  check_admissible(u, problem.physics, 0.0);

  std::vector<double> targets;
  for (double ts : problem.snapshot_times)
    if (ts > 0.0 && ts < problem.t_final) targets.push_back(ts);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  targets.push_back(problem.t_final);

  const RhsFunction rhs_fn = [&](const StateField& v, double tt, StateField& out) {
    rhs(v, scheme, problem.boundaries, tt, problem.physics, out);
  };

  RunResult result{u, 0.0, 0, {}};
  double t = 0.0;
  long steps = 0;
  for (double target : targets) {
    while (t < target) {
      double dt = problem.fixed_dt > 0.0 ? problem.fixed_dt
                                         : compute_dt(u, problem.cfl, problem.physics);
      if (!std::isfinite(dt) || !(dt > 0.0))
        throw SolverFailure("invalid time step at t = " + std::to_string(t), t, -1, -1);
      const bool last = t + dt >= target;
      if (last) dt = target - t;
      rk3_step(u, t, dt, rhs_fn);
      t = last ? target : t + dt;
      ++steps;
      if (observer) observer(t, steps);
    }
    check_admissible(u, problem.physics, t);
    result.snapshots.push_back({t, u});
  }
  result.final_field = std::move(u);
  result.time = t;
  result.steps = steps;
  return result;
}

}  // namespace wenonn
