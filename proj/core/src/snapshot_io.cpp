#include "wenonn/snapshot_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "wenonn/errors.hpp"

namespace wenonn {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_snapshot_csv(std::ostream& out, const StateField& field, double gamma) {
  if (field.dimension() != 1) throw ContractError("write_snapshot_csv: 1D field required");
  const Grid1D& g = field.x_axis();
  if (field.n_vars() == 1) {
    out << "x,u\n";
    for (int i = 0; i < field.nx(); ++i) out << fmt(g.center(i)) << ',' << fmt(field(i, 0, 0)) << '\n';
    return;
  }
  if (field.n_vars() != 3) throw ContractError("write_snapshot_csv: expected 1 or 3 variables");
  out << "x,rho,mom,E,u,p\n";
  for (int i = 0; i < field.nx(); ++i) {
    const double rho = field(i, 0, 0), mom = field(i, 0, 1), E = field(i, 0, 2);
    const double u = mom / rho;
    const double p = (gamma - 1.0) * (E - 0.5 * mom * u);
    out << fmt(g.center(i)) << ',' << fmt(rho) << ',' << fmt(mom) << ',' << fmt(E) << ','
        << fmt(u) << ',' << fmt(p) << '\n';
  }
}

void write_grid2d(std::ostream& out, const StateField& field, double gamma, double t) {
  if (field.dimension() != 2 || field.n_vars() != 4)
    throw ContractError("write_grid2d: 2D Euler field required");
  const Grid1D& gx = field.x_axis();
  const Grid1D& gy = field.y_axis();
  out << "wenonn-grid2d 1\n"
      << field.nx() << ' ' << field.ny() << '\n'
      << fmt(gx.x_left) << ' ' << fmt(gx.x_right) << ' ' << fmt(gy.x_left) << ' '
      << fmt(gy.x_right) << '\n'
      << "time " << fmt(t) << '\n';
  const char* names[] = {"rho", "u", "v", "p"};
  for (int q = 0; q < 4; ++q) {
    out << names[q] << '\n';
    for (int j = 0; j < field.ny(); ++j) {
      for (int i = 0; i < field.nx(); ++i) {
        const auto s = field.cell(i, j);
        double v = s[0];
        if (q == 1) v = s[1] / s[0];
        if (q == 2) v = s[2] / s[0];
        if (q == 3) v = (gamma - 1.0) * (s[3] - 0.5 * (s[1] * s[1] + s[2] * s[2]) / s[0]);
        if (i) out << ' ';
        out << fmt(v);
      }
      out << '\n';
    }
  }
}

Grid2DSnapshot read_grid2d(std::istream& in) {
  auto fail = [](const std::string& m) { throw ConfigError("read_grid2d: " + m); };
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "wenonn-grid2d" || version != 1) fail("bad header");
  Grid2DSnapshot s;
  std::string tag;
  if (!(in >> s.nx >> s.ny) || s.nx <= 0 || s.ny <= 0) fail("bad dimensions");
  if (!(in >> s.x_left >> s.x_right >> s.y_bottom >> s.y_top)) fail("bad bounds");
  if (!(in >> tag >> s.time) || tag != "time") fail("bad time line");
  const std::size_t n = static_cast<std::size_t>(s.nx) * s.ny;
  std::vector<double>* blocks[] = {&s.rho, &s.u, &s.v, &s.p};
  const char* names[] = {"rho", "u", "v", "p"};
  for (int q = 0; q < 4; ++q) {
    if (!(in >> tag) || tag != names[q]) fail(std::string("expected block ") + names[q]);
    blocks[q]->resize(n);
    for (std::size_t k = 0; k < n; ++k)
      if (!(in >> (*blocks[q])[k])) fail(std::string("truncated block ") + names[q]);
  }
  return s;
}

}  // namespace wenonn
