#pragma once

// Time-independent approximate dispersion relation of a (possibly nonlinear)
// reconstruction. A harmonic e^{i phi j} on a periodic grid of N points is split
// into its cosine and sine parts, each part is pushed through the scheme, and
// the DFT of the resulting flux difference at the same mode gives the modified
// wavenumber Phi(phi). Advection speed is 1 throughout.

#include <complex>
#include <span>
#include <vector>

#include "wenonn/weno.hpp"

namespace wenonn {

struct SpectrumSample {
  double phi = 0.0;               ///< reduced wavenumber 2 pi n / N
  std::complex<double> Phi{};     ///< modified wavenumber
};

/// cos(phi_n j) and sin(phi_n j) for j = 0..N-1.
struct HarmonicField {
  int N = 0;
  int n = 0;
  std::vector<double> real_part;
  std::vector<double> imag_part;
};

/// Throws ContractError unless N is even, N >= 6 and 0 <= n <= N/2.
HarmonicField make_harmonic(int n, int N);

/// (1/N) sum_j samples_j e^{-i 2 pi n j / N}, by direct summation.
std::complex<double> dft_coefficient(std::span<const double> samples, int n);
std::complex<double> dft_coefficient(std::span<const std::complex<double>> samples, int n);

/// f_{j+1/2} for j = 0..N-1 on a periodic grid (stencil j-2..j+2).
std::vector<double> periodic_interface_fluxes(std::span<const double> values,
                                              const SchemeConfig& scheme);

/// Phi = -i F[f'](phi_n) from interface fluxes of the cosine and sine parts of mode n.
std::complex<double> modified_wavenumber_from_fluxes(std::span<const double> flux_re,
                                                     std::span<const double> flux_im, int n);

SpectrumSample modified_wavenumber(const SchemeConfig& scheme, int n, int N);
/// Modes n = 0..N/2.
std::vector<SpectrumSample> spectrum(const SchemeConfig& scheme, int N);

/// Closed-form modified wavenumber of the ideal-weight (UP5) scheme.
std::complex<double> up5_modified_wavenumber(double phi);

/// Interface value h(x_{j+1/2}) that reproduces the exact derivative of e^{i phi j}:
/// (phi/2)/sin(phi/2) e^{i phi (j + 1/2)}.
std::complex<double> exact_interface_flux(double phi, double j_half);

struct SpectralErrorBound {
  double error = 0.0;  ///< |Phi(phi_n) - phi_n|
  double bound = 0.0;  ///< sqrt((8/N) sum_j of squared interface errors at j +- 1/2)
};

SpectralErrorBound spectral_error_bound(const SchemeConfig& scheme, int n, int N);

}  // namespace wenonn
