#include "wenonn/state_field.hpp"

#include "wenonn/errors.hpp"

namespace wenonn {

namespace {

void check_vars(int n_vars) {
  if (n_vars < 1) throw ContractError("StateField: n_vars must be positive");
}

}  // namespace

StateField::StateField(const Grid1D& grid, int n_vars)
    : dimension_(1), n_vars_(n_vars), x_(grid) {
  check_vars(n_vars);
  values_.assign(static_cast<std::size_t>(grid.n_cells) * n_vars, 0.0);
}

StateField::StateField(const Grid2D& grid, int n_vars)
    : dimension_(2), n_vars_(n_vars), x_(grid.x), y_(grid.y) {
  check_vars(n_vars);
  values_.assign(static_cast<std::size_t>(grid.n_cells()) * n_vars, 0.0);
}

const Grid1D& StateField::y_axis() const {
  if (dimension_ != 2) throw ContractError("StateField: 1D field has no y axis");
  return y_;
}

Grid2D StateField::grid_2d() const { return Grid2D{x_, y_axis()}; }

bool StateField::same_layout(const StateField& other) const {
  return dimension_ == other.dimension_ && n_vars_ == other.n_vars_ && nx() == other.nx() &&
         ny() == other.ny();
}

}  // namespace wenonn
