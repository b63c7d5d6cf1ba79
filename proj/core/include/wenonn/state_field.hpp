#pragma once

#include <span>
#include <vector>

#include "wenonn/grid.hpp"

namespace wenonn {

/// Ghost layers on each side: the five-point stencil around interface i-1/2 reaches cell i-3.
inline constexpr int kGhostWidth = 3;

/// Conserved variables over a 1D or 2D grid, interior cells only.
///
/// Storage is cell-major: all variables of a cell are contiguous, and cells run
/// x-fastest (index = j * nx + i). A 1D field behaves as ny == 1.
class StateField {
 public:
  StateField(const Grid1D& grid, int n_vars);
  StateField(const Grid2D& grid, int n_vars);

  int dimension() const { return dimension_; }
  int n_vars() const { return n_vars_; }
  int nx() const { return x_.n_cells; }
  int ny() const { return dimension_ == 1 ? 1 : y_.n_cells; }
  int n_cells() const { return nx() * ny(); }
  const Grid1D& x_axis() const { return x_; }
  /// Throws ContractError for 1D fields.
  const Grid1D& y_axis() const;
  Grid2D grid_2d() const;

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  std::span<double> cell(int i, int j = 0) {
    return {values_.data() + offset(i, j), static_cast<std::size_t>(n_vars_)};
  }
  std::span<const double> cell(int i, int j = 0) const {
    return {values_.data() + offset(i, j), static_cast<std::size_t>(n_vars_)};
  }
  double& operator()(int i, int j, int v) { return values_[offset(i, j) + v]; }
  double operator()(int i, int j, int v) const { return values_[offset(i, j) + v]; }

  /// Same grid and variable count.
  bool same_layout(const StateField& other) const;

 private:
  std::size_t offset(int i, int j) const {
    return (static_cast<std::size_t>(j) * x_.n_cells + i) * n_vars_;
  }

  int dimension_;
  int n_vars_;
  Grid1D x_;
  Grid1D y_;
  std::vector<double> values_;
};

}  // namespace wenonn
