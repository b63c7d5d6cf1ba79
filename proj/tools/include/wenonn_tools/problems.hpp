#pragma once

// Built-in benchmark problems: initial data, boundaries and default grids.

#include <optional>
#include <string>
#include <vector>

#include "wenonn/solver.hpp"

namespace wenonn::tools {

struct ProblemOverrides {
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<double> t_final;
  std::optional<double> cfl;
};

/// composite, titarev-toro, lax, blast, shu-osher, riemann2d, rt, double-mach, sine-advection.
std::vector<std::string> problem_names();

/// Throws ConfigError for an unknown name or an invalid override.
ProblemSpec make_problem(const std::string& name, const ProblemOverrides& overrides = {});

/// Initial profile of the composite advection test (Gaussian, square, triangle, semi-ellipse).
double composite_profile(double x);

/// Exact solution of the sine-advection problem: sin(2 pi (x - t)).
double sine_advection_exact(double x, double t);

}  // namespace wenonn::tools
