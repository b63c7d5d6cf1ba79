#include "wenonn/euler.hpp"

#include <cmath>
#include <utility>

#include "wenonn/errors.hpp"

namespace wenonn {

double pressure(const EulerState1D& s, double gamma) {
  return (gamma - 1.0) * (s.E - 0.5 * s.mom * s.mom / s.rho);
}

double pressure(const EulerState2D& s, double gamma) {
  return (gamma - 1.0) * (s.E - 0.5 * (s.mx * s.mx + s.my * s.my) / s.rho);
}

double sound_speed(double rho, double p, double gamma) { return std::sqrt(gamma * p / rho); }

EulerState1D conserved_1d(double rho, double u, double p, double gamma) {
  return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
}

EulerState2D conserved_2d(double rho, double u, double v, double p, double gamma) {
  return {rho, rho * u, rho * v, p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)};
}

bool admissible(const EulerState1D& s, double gamma) {
  return s.rho > 0.0 && pressure(s, gamma) > 0.0;
}

bool admissible(const EulerState2D& s, double gamma) {
  return s.rho > 0.0 && pressure(s, gamma) > 0.0;
}

std::array<double, 3> euler_flux(const EulerState1D& s, double gamma) {
  const double u = s.mom / s.rho;
  const double p = pressure(s, gamma);
  return {s.mom, s.mom * u + p, u * (s.E + p)};
}

std::array<double, 4> euler_flux(const EulerState2D& s, double gamma, Direction dir) {
  const double u = s.mx / s.rho;
  const double v = s.my / s.rho;
  const double p = pressure(s, gamma);
  if (dir == Direction::X) return {s.mx, s.mx * u + p, s.my * u, u * (s.E + p)};
  return {s.my, s.mx * v, s.my * v + p, v * (s.E + p)};
}

namespace {

RoeAverage roe(double rl, double ul, double vl, double hl, double rr, double ur, double vr,
               double hr, double gamma) {
  if (!(rl > 0.0) || !(rr > 0.0)) throw NumericError("roe_average: non-positive density");
  const double sl = std::sqrt(rl);
  const double sr = std::sqrt(rr);
  const double inv = 1.0 / (sl + sr);
  RoeAverage a;
  a.rho = sl * sr;
  a.u = (sl * ul + sr * ur) * inv;
  a.v = (sl * vl + sr * vr) * inv;
  a.H = (sl * hl + sr * hr) * inv;
  const double c2 = (gamma - 1.0) * (a.H - 0.5 * (a.u * a.u + a.v * a.v));
  if (!(c2 > 0.0)) throw NumericError("roe_average: inadmissible averaged state (c^2 <= 0)");
  a.c = std::sqrt(c2);
  return a;
}

}  // namespace

RoeAverage roe_average(const EulerState1D& l, const EulerState1D& r, double gamma) {
  return roe(l.rho, l.mom / l.rho, 0.0, (l.E + pressure(l, gamma)) / l.rho, r.rho, r.mom / r.rho,
             0.0, (r.E + pressure(r, gamma)) / r.rho, gamma);
}

RoeAverage roe_average(const EulerState2D& l, const EulerState2D& r, double gamma) {
  return roe(l.rho, l.mx / l.rho, l.my / l.rho, (l.E + pressure(l, gamma)) / l.rho, r.rho,
             r.mx / r.rho, r.my / r.rho, (r.E + pressure(r, gamma)) / r.rho, gamma);
}

Eigensystem<3> eigensystem(const RoeAverage& a, double gamma) {
  if (!(a.c > 0.0)) throw NumericError("eigensystem: non-positive sound speed");
  const double u = a.u, c = a.c, H = a.H;
  const double b1 = (gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * u * u;
  Eigensystem<3> e;
  e.lambda = {u - c, u, u + c};
  e.right = {{{1.0, 1.0, 1.0}, {u - c, u, u + c}, {H - u * c, 0.5 * u * u, H + u * c}}};
  e.left = {{{0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1},
             {1.0 - b2, b1 * u, -b1},
             {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1}}};
  return e;
}

Eigensystem<4> eigensystem(const RoeAverage& a, double gamma, Direction dir) {
  if (!(a.c > 0.0)) throw NumericError("eigensystem: non-positive sound speed");
  // Build the x-direction system with (normal, tangential) velocities, then swap
  // the momentum components for y.
  const double un = dir == Direction::X ? a.u : a.v;
  const double ut = dir == Direction::X ? a.v : a.u;
  const double c = a.c, H = a.H;
  const double q2 = un * un + ut * ut;
  const double b1 = (gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * q2;
  Eigensystem<4> e;
  e.lambda = {un - c, un, un, un + c};
  e.right = {{{1.0, 1.0, 0.0, 1.0},
              {un - c, un, 0.0, un + c},
              {ut, ut, 1.0, ut},
              {H - un * c, 0.5 * q2, ut, H + un * c}}};
  e.left = {{{0.5 * (b2 + un / c), -0.5 * (b1 * un + 1.0 / c), -0.5 * b1 * ut, 0.5 * b1},
             {1.0 - b2, b1 * un, b1 * ut, -b1},
             {-ut, 0.0, 1.0, 0.0},
             {0.5 * (b2 - un / c), -0.5 * (b1 * un - 1.0 / c), -0.5 * b1 * ut, 0.5 * b1}}};
  if (dir == Direction::Y) {
    std::swap(e.right[1], e.right[2]);
    for (auto& row : e.left) std::swap(row[1], row[2]);
  }
  return e;
}

}  // namespace wenonn
