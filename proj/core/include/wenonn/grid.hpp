#pragma once

#include <vector>

namespace wenonn {

/// Uniform cell-centred grid on [x_left, x_right].
struct Grid1D {
  double x_left = 0.0;
  double x_right = 1.0;
  int n_cells = 0;
  double dx = 0.0;

  /// Centre of cell i; valid for ghost indices too.
  double center(int i) const { return x_left + (i + 0.5) * dx; }
  /// Interface x_{i-1/2}; face(0) is x_left, face(n_cells) is x_right.
  double face(int i) const { return x_left + i * dx; }
  std::vector<double> cell_centers() const;
};

struct Grid2D {
  Grid1D x;
  Grid1D y;

  int n_cells() const { return x.n_cells * y.n_cells; }
};

/// Throws ConfigError unless x_right > x_left and n_cells >= 10.
Grid1D make_grid(double x_left, double x_right, int n_cells);
Grid2D make_grid_2d(double x_left, double x_right, int nx,
                    double y_bottom, double y_top, int ny);

}  // namespace wenonn
