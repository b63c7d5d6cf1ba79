#pragma once

// Ideal-gas Euler equations: state conversions, fluxes, the Roe-averaged
// characteristic decomposition and global Lax-Friedrichs splitting.

#include <array>

namespace wenonn {

struct EulerState1D {
  double rho = 1.0;
  double mom = 0.0;
  double E = 1.0;
};

struct EulerState2D {
  double rho = 1.0;
  double mx = 0.0;
  double my = 0.0;
  double E = 1.0;
};

enum class Direction { X, Y };

template <int N>
using Matrix = std::array<std::array<double, N>, N>;

double pressure(const EulerState1D& s, double gamma);
double pressure(const EulerState2D& s, double gamma);
double sound_speed(double rho, double p, double gamma);

EulerState1D conserved_1d(double rho, double u, double p, double gamma);
EulerState2D conserved_2d(double rho, double u, double v, double p, double gamma);

/// rho > 0 and p > 0.
bool admissible(const EulerState1D& s, double gamma);
bool admissible(const EulerState2D& s, double gamma);

std::array<double, 3> euler_flux(const EulerState1D& s, double gamma);
std::array<double, 4> euler_flux(const EulerState2D& s, double gamma, Direction dir);

struct SplitFlux {
  double plus = 0.0;
  double minus = 0.0;
};

/// f+- = (f +- alpha u) / 2.
inline SplitFlux lf_split(double f, double u, double alpha) {
  return {0.5 * (f + alpha * u), 0.5 * (f - alpha * u)};
}

/// Square-root-density weighted averages. `v` is zero in 1D.
struct RoeAverage {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double H = 0.0;
  double c = 0.0;
};

/// Throws NumericError for non-positive densities or a non-real averaged sound speed.
RoeAverage roe_average(const EulerState1D& left, const EulerState1D& right, double gamma);
RoeAverage roe_average(const EulerState2D& left, const EulerState2D& right, double gamma);

template <int N>
struct Eigensystem {
  std::array<double, N> lambda{};
  Matrix<N> right{};  ///< columns are right eigenvectors
  Matrix<N> left{};   ///< rows are left eigenvectors; left * right = I
};

/// Eigenvalues (u - c, u, u + c).
Eigensystem<3> eigensystem(const RoeAverage& avg, double gamma);
/// Eigenvalues (un - c, un, un, un + c) with un the velocity along `dir`.
Eigensystem<4> eigensystem(const RoeAverage& avg, double gamma, Direction dir);

}  // namespace wenonn
