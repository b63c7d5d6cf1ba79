#include "wenonn/grid.hpp"

#include <cmath>
#include <string>

#include "wenonn/errors.hpp"

namespace wenonn {

std::vector<double> Grid1D::cell_centers() const {
  std::vector<double> xs(static_cast<std::size_t>(n_cells));
  for (int i = 0; i < n_cells; ++i) xs[static_cast<std::size_t>(i)] = center(i);
  return xs;
}

Grid1D make_grid(double x_left, double x_right, int n_cells) {
  if (!std::isfinite(x_left) || !std::isfinite(x_right) || !(x_right > x_left)) {
    throw ConfigError("grid: degenerate domain [" + std::to_string(x_left) + ", " +
                      std::to_string(x_right) + "]");
  }
  if (n_cells < 10) {
    throw ConfigError("grid: need at least 10 cells, got " + std::to_string(n_cells));
  }
  return Grid1D{x_left, x_right, n_cells, (x_right - x_left) / n_cells};
}

Grid2D make_grid_2d(double x_left, double x_right, int nx,
                    double y_bottom, double y_top, int ny) {
  return Grid2D{make_grid(x_left, x_right, nx), make_grid(y_bottom, y_top, ny)};
}

}  // namespace wenonn
