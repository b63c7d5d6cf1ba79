#include "wenonn/adr.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wenonn/errors.hpp"

namespace wenonn {

namespace {

void check_mode(int n, int N) {
  if (N < 6 || N % 2 != 0) throw ContractError("adr: N must be even and >= 6");
  if (n < 0 || n > N / 2) {
    throw ContractError("adr: mode " + std::to_string(n) + " outside [0, N/2]");
  }
}

double reduced_wavenumber(int n, int N) { return 2.0 * std::numbers::pi * n / N; }

}  // namespace

HarmonicField make_harmonic(int n, int N) {
  check_mode(n, N);
  HarmonicField h{N, n, std::vector<double>(static_cast<std::size_t>(N)),
                  std::vector<double>(static_cast<std::size_t>(N))};
  const double phi = reduced_wavenumber(n, N);
  for (int j = 0; j < N; ++j) {
    h.real_part[static_cast<std::size_t>(j)] = std::cos(phi * j);
    h.imag_part[static_cast<std::size_t>(j)] = std::sin(phi * j);
  }
  return h;
}

std::complex<double> dft_coefficient(std::span<const std::complex<double>> samples, int n) {
  const int N = static_cast<int>(samples.size());
  if (N == 0) throw ContractError("dft: empty input");
  if (n < 0 || 2 * n > N) throw ContractError("dft: mode outside [0, N/2]");
  std::complex<double> acc{};
  const double phi = 2.0 * std::numbers::pi * n / N;
  for (int j = 0; j < N; ++j) {
    acc += samples[static_cast<std::size_t>(j)] *
           std::complex<double>(std::cos(phi * j), -std::sin(phi * j));
  }
  return acc / static_cast<double>(N);
}

std::complex<double> dft_coefficient(std::span<const double> samples, int n) {
  std::vector<std::complex<double>> z(samples.begin(), samples.end());
  return dft_coefficient(std::span<const std::complex<double>>(z), n);
}

std::vector<double> periodic_interface_fluxes(std::span<const double> values,
                                              const SchemeConfig& scheme) {
  const int N = static_cast<int>(values.size());
  if (N < 5) throw ContractError("periodic_interface_fluxes: need at least 5 points");
  std::vector<double> flux(static_cast<std::size_t>(N));
  auto at = [&](int j) { return values[static_cast<std::size_t>(((j % N) + N) % N)]; };
  for (int j = 0; j < N; ++j) {
    const Stencil5 s{at(j - 2), at(j - 1), at(j), at(j + 1), at(j + 2)};
    flux[static_cast<std::size_t>(j)] = reconstruct_interface(s, scheme);
  }
  return flux;
}

std::complex<double> modified_wavenumber_from_fluxes(std::span<const double> flux_re,
                                                     std::span<const double> flux_im, int n) {
  const std::size_t N = flux_re.size();
  if (flux_im.size() != N) throw ContractError("adr: flux arrays differ in length");
  // delta * f'_j = f_{j+1/2} - f_{j-1/2}; the grid spacing cancels in Phi.
  std::vector<std::complex<double>> deriv(N);
  for (std::size_t j = 0; j < N; ++j) {
    const std::size_t jm = (j + N - 1) % N;
    deriv[j] = {flux_re[j] - flux_re[jm], flux_im[j] - flux_im[jm]};
  }
  return std::complex<double>(0.0, -1.0) * dft_coefficient(deriv, n);
}

SpectrumSample modified_wavenumber(const SchemeConfig& scheme, int n, int N) {
  const HarmonicField h = make_harmonic(n, N);
  const auto fr = periodic_interface_fluxes(h.real_part, scheme);
  const auto fi = periodic_interface_fluxes(h.imag_part, scheme);
  return {reduced_wavenumber(n, N), modified_wavenumber_from_fluxes(fr, fi, n)};
}

std::vector<SpectrumSample> spectrum(const SchemeConfig& scheme, int N) {
  check_mode(0, N);
  std::vector<SpectrumSample> out;
  out.reserve(static_cast<std::size_t>(N / 2 + 1));
  for (int n = 0; n <= N / 2; ++n) out.push_back(modified_wavenumber(scheme, n, N));
  return out;
}

std::complex<double> up5_modified_wavenumber(double phi) {
  using C = std::complex<double>;
  const C I(0.0, 1.0);
  const C transfer = (2.0 * std::exp(-2.0 * I * phi) - 13.0 * std::exp(-I * phi) + 47.0 +
                      27.0 * std::exp(I * phi) - 3.0 * std::exp(2.0 * I * phi)) /
                     60.0;
  return -I * (1.0 - std::exp(-I * phi)) * transfer;
}

std::complex<double> exact_interface_flux(double phi, double j_half) {
  const double scale = phi == 0.0 ? 1.0 : (0.5 * phi) / std::sin(0.5 * phi);
  return scale * std::complex<double>(std::cos(phi * j_half), std::sin(phi * j_half));
}

SpectralErrorBound spectral_error_bound(const SchemeConfig& scheme, int n, int N) {
  const HarmonicField h = make_harmonic(n, N);
  const double phi = reduced_wavenumber(n, N);
  const auto fr = periodic_interface_fluxes(h.real_part, scheme);
  const auto fi = periodic_interface_fluxes(h.imag_part, scheme);
  const std::complex<double> Phi = modified_wavenumber_from_fluxes(fr, fi, n);

  // Squared reconstruction error at x_{j+1/2}; the sum over j of the j-1/2 terms
  // is the same periodic sum shifted by one.
  double sum_sq = 0.0;
  for (int j = 0; j < N; ++j) {
    const std::complex<double> exact = exact_interface_flux(phi, j + 0.5);
    const double er = fr[static_cast<std::size_t>(j)] - exact.real();
    const double ei = fi[static_cast<std::size_t>(j)] - exact.imag();
    sum_sq += er * er + ei * ei;
  }
  return {std::abs(Phi - phi), std::sqrt(8.0 / N * 2.0 * sum_sq)};
}

}  // namespace wenonn
