#pragma once

// Method-of-lines solver for linear advection and the 1D/2D Euler equations:
// characteristic-wise WENO fluxes with global Lax-Friedrichs splitting and
// SSP-RK3 time stepping.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wenonn/boundary.hpp"
#include "wenonn/errors.hpp"
#include "wenonn/euler.hpp"
#include "wenonn/state_field.hpp"
#include "wenonn/weno.hpp"

namespace wenonn {

enum class Equation { Advection, Euler };
enum class SourceKind { None, RayleighTaylor };

struct PhysicsModel {
  Equation equation = Equation::Euler;
  double gamma = 1.4;
  /// Wave speed of u_t + a u_x = 0.
  double advection_speed = 1.0;
  SourceKind source = SourceKind::None;

  static PhysicsModel advection(double speed = 1.0);
  static PhysicsModel euler(double gamma = 1.4, SourceKind source = SourceKind::None);

  /// 1 for advection, dimension + 2 for Euler.
  int n_vars(int dimension) const;
};

/// Conserved state at a point.
using InitialCondition = std::function<std::vector<double>(double x, double y)>;

struct ProblemSpec {
  std::string name;
  int dimension = 1;
  PhysicsModel physics;
  Grid1D x;
  Grid1D y;  ///< unused in 1D
  double t_final = 1.0;
  InitialCondition initial_condition;
  Boundaries boundaries;
  double cfl = 0.4;
  /// When positive, every step uses this dt (the last step is still clamped).
  double fixed_dt = 0.0;
  /// Extra output times in (0, t_final); t_final is always recorded.
  std::vector<double> snapshot_times;

  /// Throws ConfigError on gamma <= 1, t_final <= 0, cfl <= 0, a missing
  /// initial condition, or advection in 2D.
  void validate() const;
  StateField make_field() const;
  /// Samples the initial condition at the cell centres.
  StateField initial_field() const;
};

/// Aborted run: non-finite or inadmissible state in an interior cell.
class SolverFailure : public NumericError {
 public:
  SolverFailure(const std::string& what, double t, int i, int j)
      : NumericError(what), time(t), cell_i(i), cell_j(j) {}
  double time;
  int cell_i;
  int cell_j;
};

/// Sum of |u_{i+1} - u_i|, closing the loop when `periodic`.
double total_variation(std::span<const double> values, bool periodic = false);

/// Numerical flux at the interface between window cells 2 and 3. `window` holds
/// six conserved states (cells i-2..i+3, n_vars each, contiguous).
std::vector<double> interface_flux(std::span<const double> window, int n_vars,
                                   const SchemeConfig& scheme, double alpha,
                                   const PhysicsModel& physics,
                                   Direction direction = Direction::X);

/// Global Lax-Friedrichs speed along `direction`: max |u_n| + c (|a| for
/// advection) over interior and ghost cells.
double splitting_speed(const PaddedField& padded, const PhysicsModel& physics,
                       Direction direction);

/// Throws SolverFailure for the first non-finite or inadmissible interior cell.
void check_admissible(const StateField& field, const PhysicsModel& physics, double t);

/// du/dt = -(f_{i+1/2} - f_{i-1/2}) / dx (+ the y sweep in 2D) (+ source).
void rhs(const StateField& field, const SchemeConfig& scheme, const Boundaries& bcs, double t,
         const PhysicsModel& physics, StateField& out);
StateField rhs(const StateField& field, const SchemeConfig& scheme, const Boundaries& bcs,
               double t, const PhysicsModel& physics);

using RhsFunction = std::function<void(const StateField& u, double t, StateField& out)>;

/// One Shu-Osher SSP-RK3 step from time t, stage times t, t + dt, t + dt/2.
void rk3_step(StateField& field, double t, double dt, const RhsFunction& rhs_fn);

/// Largest stable step for the given CFL number; cfl * dx when nothing moves.
double compute_dt(const StateField& field, double cfl, const PhysicsModel& physics);

struct Snapshot {
  double time = 0.0;
  StateField field;
};

struct RunResult {
  StateField final_field;
  double time = 0.0;
  long steps = 0;
  /// One entry per requested snapshot time followed by t_final.
  std::vector<Snapshot> snapshots;
};

/// Called after every accepted step with (time, step count).
using StepObserver = std::function<void(double t, long steps)>;

/// Integrates from the initial condition to t_final. Deterministic.
RunResult run(const ProblemSpec& problem, const SchemeConfig& scheme,
              const StepObserver& observer = {});

}  // namespace wenonn
