#include "wenonn/dataset.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "wenonn/errors.hpp"
#include "wenonn/state_field.hpp"

namespace wenonn {

std::string_view family_name(FunctionFamily family) {
  switch (family) {
    case FunctionFamily::Tanh: return "tanh";
    case FunctionFamily::Sine: return "sine";
    case FunctionFamily::Poly: return "poly";
  }
  return "unknown";
}

FamilyDerivatives family_derivatives(FunctionFamily family, std::span<const double> p, double x) {
  switch (family) {
    case FunctionFamily::Tanh: {
      // t = tanh(ax): t'' = -2a^2 t(1-t^2), t'''' = 8a^4 t(2-3t^2)(1-t^2).
      const double a = p[0];
      const double t = std::tanh(a * x);
      const double s = 1.0 - t * t;
      const double a2 = a * a;
      return {t, -2.0 * a2 * t * s, 8.0 * a2 * a2 * t * (2.0 - 3.0 * t * t) * s};
    }
    case FunctionFamily::Sine: {
      const double k = p[0] * std::numbers::pi;
      const double f = std::sin(k * x + p[1]);
      const double k2 = k * k;
      return {f, -k2 * f, k2 * k2 * f};
    }
    case FunctionFamily::Poly: {
      double f = 0.0, f2 = 0.0, f4 = 0.0;
      for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        f = f * x + p[static_cast<std::size_t>(k)];
      }
      for (int k = static_cast<int>(p.size()) - 1; k >= 2; --k) {
        f2 = f2 * x + k * (k - 1) * p[static_cast<std::size_t>(k)];
      }
      for (int k = static_cast<int>(p.size()) - 1; k >= 4; --k) {
        f4 = f4 * x + k * (k - 1) * (k - 2) * (k - 3) * p[static_cast<std::size_t>(k)];
      }
      return {f, f2, f4};
    }
  }
  return {};
}

namespace {

double interface_reference(FunctionFamily family, std::span<const double> params, double x,
                           double dx) {
  const FamilyDerivatives d = family_derivatives(family, params, x);
  const double dx2 = dx * dx;
  return d.f - dx2 / 24.0 * d.f2 + 7.0 * dx2 * dx2 / 5760.0 * d.f4;
}

}  // namespace

TrainingSample make_sample(FunctionFamily family, std::vector<double> params, const Grid1D& grid) {
  TrainingSample s;
  s.family = family;
  s.params = std::move(params);
  s.grid = grid;
  s.grid_values.resize(static_cast<std::size_t>(grid.n_cells + 2 * kGhostWidth));
  for (int i = -kGhostWidth; i < grid.n_cells + kGhostWidth; ++i) {
    s.grid_values[static_cast<std::size_t>(i + kGhostWidth)] =
        family_derivatives(family, s.params, grid.center(i)).f;
  }
  s.reference_fluxes.resize(static_cast<std::size_t>(grid.n_cells + 1));
  for (int k = 0; k <= grid.n_cells; ++k) {
    s.reference_fluxes[static_cast<std::size_t>(k)] =
        interface_reference(family, s.params, grid.face(k), grid.dx);
  }
  return s;
}

std::vector<TrainingSample> generate_dataset(std::uint64_t seed, const DatasetSpec& spec) {
  if (spec.n_tanh < 0 || spec.n_sine < 0 || spec.n_poly < 0) {
    throw ConfigError("dataset: sample counts must be non-negative");
  }
  const Grid1D grid = make_grid(spec.x_left, spec.x_right, spec.n_cells);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  std::vector<TrainingSample> out;
  out.reserve(static_cast<std::size_t>(spec.n_tanh + spec.n_sine + spec.n_poly));
  for (int s = 0; s < spec.n_tanh; ++s) {
    const double magnitude = uniform(50.0, 100.0);
    const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
    out.push_back(make_sample(FunctionFamily::Tanh, {sign * magnitude}, grid));
  }
  for (int s = 0; s < spec.n_sine; ++s) {
    const double b = uniform(1.0, 18.0);
    const double phase = uniform(0.0, 2.0 * std::numbers::pi);
    out.push_back(make_sample(FunctionFamily::Sine, {b, phase}, grid));
  }
  for (int s = 0; s < spec.n_poly; ++s) {
    std::vector<double> c(6);
    for (int k = 0; k < 6; ++k) {
      const double r = 1.0 / (k + 1);
      c[static_cast<std::size_t>(k)] = uniform(-r, r);
    }
    out.push_back(make_sample(FunctionFamily::Poly, std::move(c), grid));
  }
  return out;
}

double reference_flux(const TrainingSample& sample, int interface_index) {
  if (interface_index < 0 || interface_index > sample.grid.n_cells) {
    throw ContractError("reference_flux: interface index out of range");
  }
  return interface_reference(sample.family, sample.params, sample.grid.face(interface_index),
                             sample.grid.dx);
}

}  // namespace wenonn
