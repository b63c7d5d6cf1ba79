#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wenonn/grid.hpp"

namespace wenonn {

enum class FunctionFamily { Tanh, Sine, Poly };

std::string_view family_name(FunctionFamily family);

/// One training function sampled on the training grid.
///
/// `grid_values` holds f at the cell centres i = -3 .. n_cells + 2 (the three
/// outer layers on each side are the analytic continuation of f, so no stencil
/// wraps around). `reference_fluxes[k]` is the target interface value at
/// x = grid.face(k), k = 0 .. n_cells; the reconstruction of interface k uses
/// grid_values[k .. k + 4].
struct TrainingSample {
  FunctionFamily family = FunctionFamily::Sine;
  /// Tanh: {a}. Sine: {b, phase}. Poly: {c0, ..., c5}.
  std::vector<double> params;
  Grid1D grid;
  std::vector<double> grid_values;
  std::vector<double> reference_fluxes;

  int n_cells() const { return grid.n_cells; }
  int n_interfaces() const { return grid.n_cells + 1; }
};

struct DatasetSpec {
  int n_tanh = 2000;
  int n_sine = 1000;
  int n_poly = 1000;
  int n_cells = 100;
  double x_left = -1.0;
  double x_right = 1.0;
};

/// f, f'' and f'''' of a family member, differentiated in closed form.
struct FamilyDerivatives {
  double f = 0.0;
  double f2 = 0.0;
  double f4 = 0.0;
};

FamilyDerivatives family_derivatives(FunctionFamily family, std::span<const double> params,
                                     double x);

/// Builds a sample (grid values and reference fluxes) for one family member.
TrainingSample make_sample(FunctionFamily family, std::vector<double> params, const Grid1D& grid);

/// Tanh with |a| ~ U(50, 100) and a random sign, sines with b ~ U(1, 18) and
/// phase ~ U(0, 2 pi), quintics with c_k ~ U(-1/(k+1), 1/(k+1)). Deterministic in `seed`.
std::vector<TrainingSample> generate_dataset(std::uint64_t seed, const DatasetSpec& spec = {});

/// f - dx^2/24 f'' + 7 dx^4/5760 f'''' at grid.face(interface_index).
double reference_flux(const TrainingSample& sample, int interface_index);

}  // namespace wenonn
