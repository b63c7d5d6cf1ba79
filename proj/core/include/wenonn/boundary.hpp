#pragma once

#include <span>
#include <variant>
#include <vector>

#include "wenonn/state_field.hpp"

namespace wenonn {

struct Periodic {};

/// Zero-gradient extrapolation: every ghost copies the nearest interior cell.
struct NonReflective {};

/// Mirror image across the wall with the wall-normal momentum negated.
struct Reflective {};

/// Ghosts hold a fixed conserved state.
struct Fixed {
  std::vector<double> state;
};

/// Top boundary of the double Mach reflection: ghosts left of the moving shock
/// trace x_s(t) = x_shock_t0 + shock_speed * t take the post-shock state.
struct DoubleMachTop {
  double x_shock_t0 = 0.0;
  double shock_speed = 0.0;
  std::vector<double> post;
  std::vector<double> pre;

  double shock_x(double t) const { return x_shock_t0 + shock_speed * t; }
};

/// Bottom boundary of the double Mach reflection: zero-gradient for cell
/// centres x <= x_wall, reflective wall beyond.
struct PartialReflective {
  double x_wall = 0.0;
};

using BoundaryKind =
    std::variant<Periodic, NonReflective, Reflective, Fixed, DoubleMachTop, PartialReflective>;

/// One kind per side. bottom/top are ignored for 1D fields.
struct Boundaries {
  BoundaryKind left = NonReflective{};
  BoundaryKind right = NonReflective{};
  BoundaryKind bottom = NonReflective{};
  BoundaryKind top = NonReflective{};

  static Boundaries all(const BoundaryKind& kind) { return {kind, kind, kind, kind}; }
};

/// Interior values extended by `ghost` layers on every side of each active axis.
class PaddedField {
 public:
  PaddedField(int nx, int ny, int n_vars, int ghost, bool two_d);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int n_vars() const { return n_vars_; }
  int ghost() const { return ghost_; }
  bool two_d() const { return two_d_; }
  int padded_nx() const { return nx_ + 2 * ghost_; }
  int padded_ny() const { return two_d_ ? ny_ + 2 * ghost_ : 1; }

  /// i in [-ghost, nx + ghost), j likewise in 2D (j == 0 in 1D).
  std::span<double> cell(int i, int j = 0) {
    return {data_.data() + offset(i, j), static_cast<std::size_t>(n_vars_)};
  }
  std::span<const double> cell(int i, int j = 0) const {
    return {data_.data() + offset(i, j), static_cast<std::size_t>(n_vars_)};
  }
  std::span<const double> raw() const { return data_; }

 private:
  std::size_t offset(int i, int j) const {
    const int jj = two_d_ ? j + ghost_ : 0;
    return (static_cast<std::size_t>(jj) * padded_nx() + (i + ghost_)) * n_vars_;
  }

  int nx_, ny_, n_vars_, ghost_;
  bool two_d_;
  std::vector<double> data_;
};

/// Pads `field` with ghost cells per `bcs` at time t. The interior is copied unchanged.
/// In 2D the x ghosts are filled first, then y ghosts for every padded column, so
/// corner cells follow the bottom/top rule.
///
/// Throws ContractError when a Fixed/DoubleMachTop state has the wrong size or the
/// ghost width exceeds the interior extent.
PaddedField fill_ghosts(const StateField& field, const Boundaries& bcs, double t,
                        int ghost = kGhostWidth);

/// Index of the momentum component normal to an x- (axis 0) or y-wall (axis 1), or -1.
int wall_normal_component(int n_vars, int axis);

}  // namespace wenonn
