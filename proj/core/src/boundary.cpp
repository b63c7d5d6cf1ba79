#include "wenonn/boundary.hpp"

#include <string>
#include <type_traits>

#include "wenonn/errors.hpp"

namespace wenonn {

PaddedField::PaddedField(int nx, int ny, int n_vars, int ghost, bool two_d)
    : nx_(nx), ny_(two_d ? ny : 1), n_vars_(n_vars), ghost_(ghost), two_d_(two_d) {
  data_.assign(static_cast<std::size_t>(padded_nx()) * padded_ny() * n_vars_, 0.0);
}

int wall_normal_component(int n_vars, int axis) {
  if (n_vars == 3) return axis == 0 ? 1 : -1;
  if (n_vars == 4) return axis == 0 ? 1 : 2;
  return -1;
}

namespace {

enum class Side { Low, High };

void check_state(const std::vector<double>& state, int n_vars, const char* what) {
  if (static_cast<int>(state.size()) != n_vars) {
    throw ContractError(std::string(what) + ": state has " + std::to_string(state.size()) +
                        " variables, field has " + std::to_string(n_vars));
  }
}

// Fills the ghost cells of one line. `at(k)` addresses line position k in
// [-g, n + g); `coord(k)` is the transverse coordinate used by the double Mach rule
// (the along-wall position of the line itself).
template <class At>
void fill_side(const BoundaryKind& kind, Side side, int n, int g, int n_vars, int normal,
               double along_wall, double t, At at) {
  for (int k = 1; k <= g; ++k) {
    const int ghost = side == Side::Low ? -k : n - 1 + k;
    const int nearest = side == Side::Low ? 0 : n - 1;
    const int mirror = side == Side::Low ? k - 1 : n - k;
    const int wrap = side == Side::Low ? n - k : k - 1;
    std::span<double> dst = at(ghost);

    auto copy_from = [&](int src) {
      std::span<const double> s = at(src);
      for (int v = 0; v < n_vars; ++v) dst[v] = s[v];
    };
    auto mirror_from = [&](int src) {
      copy_from(src);
      if (normal >= 0) dst[normal] = -dst[normal];
    };
    auto write = [&](const std::vector<double>& state) {
      for (int v = 0; v < n_vars; ++v) dst[v] = state[v];
    };

    std::visit(
        [&](const auto& bc) {
          using T = std::decay_t<decltype(bc)>;
          if constexpr (std::is_same_v<T, Periodic>) {
            copy_from(wrap);
          } else if constexpr (std::is_same_v<T, NonReflective>) {
            copy_from(nearest);
          } else if constexpr (std::is_same_v<T, Reflective>) {
            mirror_from(mirror);
          } else if constexpr (std::is_same_v<T, Fixed>) {
            write(bc.state);
          } else if constexpr (std::is_same_v<T, DoubleMachTop>) {
            write(along_wall < bc.shock_x(t) ? bc.post : bc.pre);
          } else if constexpr (std::is_same_v<T, PartialReflective>) {
            if (along_wall <= bc.x_wall) {
              copy_from(nearest);
            } else {
              mirror_from(mirror);
            }
          }
        },
        kind);
  }
}

void validate(const BoundaryKind& kind, int n_vars) {
  if (const auto* f = std::get_if<Fixed>(&kind)) check_state(f->state, n_vars, "Fixed boundary");
  if (const auto* d = std::get_if<DoubleMachTop>(&kind)) {
    check_state(d->post, n_vars, "DoubleMachTop post-shock");
    check_state(d->pre, n_vars, "DoubleMachTop pre-shock");
  }
}

}  // namespace

PaddedField fill_ghosts(const StateField& field, const Boundaries& bcs, double t, int ghost) {
  const int nx = field.nx();
  const int ny = field.ny();
  const int nv = field.n_vars();
  const bool two_d = field.dimension() == 2;
  if (ghost < 1) throw ContractError("fill_ghosts: ghost width must be positive");
  if (ghost > nx || (two_d && ghost > ny)) {
    throw ContractError("fill_ghosts: ghost width exceeds interior extent");
  }
  validate(bcs.left, nv);
  validate(bcs.right, nv);
  if (two_d) {
    validate(bcs.bottom, nv);
    validate(bcs.top, nv);
  }

  PaddedField out(nx, ny, nv, ghost, two_d);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      std::span<const double> src = field.cell(i, j);
      std::span<double> dst = out.cell(i, j);
      for (int v = 0; v < nv; ++v) dst[v] = src[v];
    }
  }

  const int x_normal = wall_normal_component(nv, 0);
  const double y_mid = two_d ? field.y_axis().center(0) : 0.0;
  for (int j = 0; j < ny; ++j) {
    const double y = two_d ? field.y_axis().center(j) : y_mid;
    auto row = [&](int i) { return out.cell(i, j); };
    fill_side(bcs.left, Side::Low, nx, ghost, nv, x_normal, y, t, row);
    fill_side(bcs.right, Side::High, nx, ghost, nv, x_normal, y, t, row);
  }
  if (two_d) {
    const int y_normal = wall_normal_component(nv, 1);
    for (int i = -ghost; i < nx + ghost; ++i) {
      const double x = field.x_axis().center(i);
      auto column = [&](int j) { return out.cell(i, j); };
      fill_side(bcs.bottom, Side::Low, ny, ghost, nv, y_normal, x, t, column);
      fill_side(bcs.top, Side::High, ny, ghost, nv, y_normal, x, t, column);
    }
  }
  return out;
}

}  // namespace wenonn
