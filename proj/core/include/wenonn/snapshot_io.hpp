#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wenonn/state_field.hpp"

namespace wenonn {

/// 1D snapshot CSV. Euler header "x,rho,mom,E,u,p"; scalar header "x,u".
/// Values are printed with %.17g so they round-trip exactly.
void write_snapshot_csv(std::ostream& out, const StateField& field, double gamma);

/// 2D Euler snapshot:
///   wenonn-grid2d 1
///   <nx> <ny>
///   <x_left> <x_right> <y_bottom> <y_top>
///   time <t>
///   rho / u / v / p blocks: a name line, then ny rows (bottom to top) of nx values.
void write_grid2d(std::ostream& out, const StateField& field, double gamma, double t);

struct Grid2DSnapshot {
  int nx = 0;
  int ny = 0;
  double x_left = 0.0, x_right = 0.0, y_bottom = 0.0, y_top = 0.0;
  double time = 0.0;
  /// Row-major, index j * nx + i.
  std::vector<double> rho, u, v, p;
};

/// Throws ConfigError on malformed input.
Grid2DSnapshot read_grid2d(std::istream& in);

}  // namespace wenonn
