// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fd_check.hpp"
#include "wenonn/adr.hpp"
#include "wenonn/checkpoint.hpp"
#include "wenonn/dataset.hpp"
#include "wenonn/losses.hpp"
#include "wenonn/network.hpp"
#include "wenonn/solver.hpp"
#include "wenonn/trainer.hpp"
#include "wenonn/weno.hpp"
#include "wenonn_tools/problems.hpp"
#include "wenonn_tools/studies.hpp"

using namespace wenonn;
using namespace wenonn::tools;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Options {
  std::optional<std::string> checkpoint_z;
  std::optional<std::string> checkpoint_js;
};

using NetPtr = std::shared_ptr<const NetworkParams>;

// Desk-scale configuration: 400 samples in the default 2:1:1 family ratio.
TrainConfig desk_config(SchemeKind base, double lambda_tvd, double lambda_diss) {
  TrainConfig cfg;
  cfg.base = base;
  cfg.lambda_tvd = lambda_tvd;
  cfg.lambda_diss = lambda_diss;
  cfg.batch_size = 100;
  cfg.epochs = 50;
  cfg.dataset.n_tanh = 200;
  cfg.dataset.n_sine = 100;
  cfg.dataset.n_poly = 100;
  return cfg;
}

TrainResult desk_train(const TrainConfig& cfg) {
  const auto data = generate_dataset(cfg.seed, cfg.dataset);
  return train(data, cfg);
}

NetPtr trained_network(const std::optional<std::string>& path, SchemeKind base) {
  if (path) {
    auto ck = load_checkpoint(*path);
    return std::make_shared<const NetworkParams>(ck.params);
  }
  const auto cfg = base == SchemeKind::Z ? desk_config(SchemeKind::Z, 5, 200)
                                         : desk_config(SchemeKind::JS, 80, 700);
  return std::make_shared<const NetworkParams>(desk_train(cfg).params);
}

double max_im_phi(const SchemeConfig& scheme, int N) {
  double m = -INFINITY;
  for (const auto& s : spectrum(scheme, N)) {
    if (s.phi > 0.0) m = std::max(m, s.Phi.imag());
  }
  return m;
}

double band_error(const SchemeConfig& scheme, int N) {
  double sum = 0.0;
  for (const auto& s : spectrum(scheme, N)) {
    if (s.phi >= 0.0628 && s.phi <= 1.1310 + 1e-12) sum += std::abs(s.Phi - s.phi);
  }
  return sum;
}

// ---------------------------------------------------------------------------

Outcome weight_validity(const Options&) {
  const auto t0 = std::chrono::steady_clock::now();
  auto net = std::make_shared<const NetworkParams>(testing::random_network(kDefaultLayerSizes, 5, 0.5));
  const std::vector<std::pair<const char*, SchemeConfig>> schemes{
      {"linear", SchemeConfig::linear()}, {"js", SchemeConfig::js()}, {"z", SchemeConfig::z()},
      {"js-nn", SchemeConfig::js_nn(net)}, {"z-nn", SchemeConfig::z_nn(net)},
      {"upwind1", SchemeConfig::upwind1()}};
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> U(-1.0, 1.0), pos(0.0, 5.0), mag(-3.0, 3.0);
  std::normal_distribution<double> G;
  const int n = 1000000;
  long bad = 0;
  double worst = 0.0;
  for (int t = 0; t < n; ++t) {
    Stencil5 s;
    switch (t % 3) {
      case 0:
        for (double& v : s) v = U(rng);
        break;
      case 1:
        for (double& v : s) v = G(rng);
        break;
      default: {
        const double at = pos(rng), h = std::pow(10.0, mag(rng));
        const double a = U(rng), b = 0.1 * U(rng);
        for (int j = 0; j < 5; ++j) s[j] = a + b * j + (j >= at ? h : 0.0);
      }
    }
    for (const auto& [name, cfg] : schemes) {
      const auto w = nonlinear_weights(s, cfg);
      const double err = std::abs(w.sum() - 1.0);
      worst = std::max(worst, err);
      if (!(err <= 1e-12) || w[0] < 0 || w[1] < 0 || w[2] < 0) ++bad;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {bad == 0 && secs < 60.0,
          fmt("%d stencils x %zu schemes, %ld invalid, max |sum-1| = %.1e, %.1f s", n,
              schemes.size(), bad, worst, secs)};
}

Outcome smooth_rates(const Options&) {
  // Least-squares slope of log max_k |w_k - d_k| against log dx, sin data around x0.
  auto slope = [](const SchemeConfig& cfg) {
    std::vector<double> lx, ly;
    for (double dx = 0.05; dx > 0.005; dx /= 2) {
      double dev = 0.0;
      for (double x0 : {0.3, 1.1, 2.0}) {
        Stencil5 s;
        for (int j = -2; j <= 2; ++j) s[j + 2] = std::sin(x0 + j * dx);
        const auto w = nonlinear_weights(s, cfg);
        for (int k = 0; k < 3; ++k) dev = std::max(dev, std::abs(w[k] - kIdealWeights[k]));
      }
      lx.push_back(std::log(dx));
      ly.push_back(std::log(dev));
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sx += lx[i];
      sy += ly[i];
      sxx += lx[i] * lx[i];
      sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  const double js = slope(SchemeConfig::js(1e-40));
  const double z = slope(SchemeConfig::z());
  const bool ok_js = std::abs(js - 2.0) <= 0.3;
  const bool ok_z = std::abs(z - 3.0) <= 0.3;
  return {ok_js && ok_z, fmt("slope JS = %.3f (target 2 +- 0.3, %s), slope Z = %.3f (target 3 +- 0.3, %s)",
                             js, ok_js ? "ok" : "out", z, ok_z ? "ok" : "out")};
}

Outcome convergence(const Options&) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto z = convergence_study(SchemeConfig::z(), {100, 200});
  const auto lin = convergence_study(SchemeConfig::linear(), {100, 200});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double oz = z[1].order_L1, ol = lin[1].order_L1;
  return {oz >= 4.5 && ol >= 4.8 && secs < 120.0,
          fmt("L1 order Z = %.3f (>= 4.5), Linear = %.3f (>= 4.8), %.1f s", oz, ol, secs)};
}

Outcome adr_oracle(const Options&) {
  const std::complex<double> I(0.0, 1.0);
  const auto spec = spectrum(SchemeConfig::linear(), 128);
  double worst = 0.0;
  for (const auto& s : spec) {
    // f_{j+1/2} = (2u_{j-2} - 13u_{j-1} + 47u_j + 27u_{j+1} - 3u_{j+2}) / 60
    const std::complex<double> e = std::exp(-I * s.phi);
    const auto poly = 2.0 * e * e - 13.0 * e + 47.0 + 27.0 / e - 3.0 / (e * e);
    const auto closed = -I * (1.0 - e) * poly / 60.0;
    worst = std::max(worst, std::abs(s.Phi - closed));
  }
  return {spec.size() == 65 && worst <= 1e-10,
          fmt("%zu modes, max |Phi - UP5| = %.2e", spec.size(), worst)};
}

Outcome error_bound(const Options&) {
  int violations = 0, checked = 0;
  double tightest = 0.0;
  for (const auto& cfg : {SchemeConfig::linear(), SchemeConfig::js(), SchemeConfig::z()}) {
    for (int n = 0; n <= 50; ++n) {
      const auto b = spectral_error_bound(cfg, n, 100);
      ++checked;
      if (!(b.error <= b.bound)) ++violations;
      if (b.bound > 0) tightest = std::max(tightest, b.error / b.bound);
    }
  }
  return {violations == 0,
          fmt("%d (scheme, mode) pairs, %d violations, max error/bound = %.3f", checked, violations,
              tightest)};
}

Outcome zero_network(const Options&) {
  auto net = std::make_shared<const NetworkParams>(NetworkParams::zeros(kDefaultLayerSizes));
  const auto lax = make_problem("lax");
  bool same = true;
  long steps = 0;
  for (const auto& [base, nn] : {std::pair{SchemeConfig::js(), SchemeConfig::js_nn(net)},
                                 std::pair{SchemeConfig::z(), SchemeConfig::z_nn(net)}}) {
    const auto a = run(lax, base);
    const auto b = run(lax, nn);
    const auto va = a.final_field.values(), vb = b.final_field.values();
    same = same && a.steps == b.steps && std::equal(va.begin(), va.end(), vb.begin(), vb.end());
    steps = a.steps;
  }
  return {same, fmt("Lax, %ld steps: JS/JS-NN and Z/Z-NN %s", steps,
                    same ? "bitwise identical" : "differ")};
}

Outcome gradients(const Options&) {
  DatasetSpec spec;
  spec.n_tanh = 4;
  spec.n_sine = 4;
  spec.n_poly = 2;
  spec.n_cells = 40;
  const auto data = generate_dataset(11, spec);
  const auto batch = as_batch(data);
  const std::vector<int> sizes{4, 8, 3};
  const auto cfg = SchemeConfig::z();
  const auto net = testing::random_network(sizes, 31, 0.2);
  const auto loud = testing::random_network(sizes, 32, 1.0);
  std::vector<double> tilted(loud.values().begin(), loud.values().end());
  const std::size_t ob = loud.bias_offset(loud.n_layers() - 1);
  tilted[ob] = -0.05;
  tilted[ob + 1] = -0.3;
  tilted[ob + 2] = 0.3;
  const NetworkParams anti(sizes, tilted);

  struct Term {
    const char* name;
    const NetworkParams* at;
    testing::LossFn fn;
  };
  const std::vector<Term> terms{
      {"L_r", &net, [&](const NetworkParams& p, std::span<double> g) { return loss_reconstruction(batch, p, cfg, g); }},
      {"L_tvd", &loud, [&](const NetworkParams& p, std::span<double> g) { return loss_tvd(batch, p, cfg, 1.0, g); }},
      {"L_diss", &anti, [&](const NetworkParams& p, std::span<double> g) { return loss_dissipation(p, cfg, 32, g); }},
      {"L_reg", &net, [&](const NetworkParams& p, std::span<double> g) { return loss_regularization(p, g); }},
  };
  bool ok = true;
  std::string detail;
  for (const auto& t : terms) {
    const double value = t.fn(*t.at, {});
    const auto rep = testing::fd_check(*t.at, t.fn, 100, 7);
    const bool good = rep.failed == 0 && rep.checked >= 80 && value > 0.0;
    ok = ok && good;
    detail += fmt("%s %d/%d checked, worst rel %.1e; ", t.name, rep.checked, rep.checked + rep.skipped,
                  rep.worst_rel);
  }
  return {ok, detail};
}

Outcome desk_training(const Options&) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cfg = desk_config(SchemeKind::Z, 5, 200);
  const auto with = desk_train(cfg);
  auto cfg0 = cfg;
  cfg0.lambda_diss = 0.0;
  const auto without = desk_train(cfg0);

  const double first = with.history.front().loss.total, last = with.history.back().loss.total;
  const bool loss_ok = with.completed && with.history.size() == 51 && last <= 0.5 * first;

  auto net = std::make_shared<const NetworkParams>(with.params);
  auto net0 = std::make_shared<const NetworkParams>(without.params);
  const double im = max_im_phi(SchemeConfig::z_nn(net), cfg.adr_grid);
  const double im0 = max_im_phi(SchemeConfig::z_nn(net0), cfg.adr_grid);
  const bool diss_ok = im <= im0;

  const auto problem = make_problem("composite");
  const auto u0 = problem.initial_field();
  const auto res = run(problem, SchemeConfig::z_nn(net));
  const double tv0 = total_variation(u0.values(), true);
  const double tv1 = total_variation(res.final_field.values(), true);
  const bool tv_ok = tv1 <= tv0 + 0.05;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {loss_ok && diss_ok && tv_ok,
          fmt("loss %.4g -> %.4g (%s); max Im Phi %.3e vs %.3e without L_diss (%s); "
              "composite TV %.4f -> %.4f (%s); %.0f s",
              first, last, loss_ok ? "ok" : "fail", im, im0, diss_ok ? "ok" : "fail", tv0, tv1,
              tv_ok ? "ok" : "fail", secs)};
}

// Interpolated x where the density crosses `level` between cells i and i+1.
double crossing(const StateField& f, int i, double level) {
  const double a = f(i, 0, 0), b = f(i + 1, 0, 0);
  const double t = (level - a) / (b - a);
  return f.x_axis().center(i) + t * f.x_axis().dx;
}

struct LaxFeatures {
  double contact = 0.0;
  double shock = 0.0;
};

// Contact: first upward crossing of the mid level between the two star densities.
// Shock: last downward crossing of the mid level between the right star state and
// the undisturbed right state.
LaxFeatures locate(const StateField& f, double rho_lo, double rho_hi, double rho_right) {
  LaxFeatures out{NAN, NAN};
  const double mid_c = 0.5 * (rho_lo + rho_hi), mid_s = 0.5 * (rho_hi + rho_right);
  for (int i = 0; i + 1 < f.nx(); ++i) {
    if (std::isnan(out.contact) && f(i, 0, 0) < mid_c && f(i + 1, 0, 0) >= mid_c)
      out.contact = crossing(f, i, mid_c);
    if (f(i, 0, 0) > mid_s && f(i + 1, 0, 0) <= mid_s) out.shock = crossing(f, i, mid_s);
  }
  return out;
}

Outcome shock_fidelity(const Options& opt) {
  ProblemOverrides fine;
  fine.nx = 5000;
  const auto ref = run(make_problem("lax", fine), SchemeConfig::js()).final_field;
  double rho_lo = INFINITY, rho_hi = -INFINITY;
  for (int i = 0; i < ref.nx(); ++i) {
    rho_lo = std::min(rho_lo, ref(i, 0, 0));
    rho_hi = std::max(rho_hi, ref(i, 0, 0));
  }
  const double rho_right = ref(ref.nx() - 1, 0, 0);
  const auto target = locate(ref, rho_lo, rho_hi, rho_right);

  const auto js_net = trained_network(opt.checkpoint_js, SchemeKind::JS);
  const auto z_net = trained_network(opt.checkpoint_z, SchemeKind::Z);
  const std::vector<std::pair<const char*, SchemeConfig>> schemes{
      {"JS", SchemeConfig::js()}, {"Z", SchemeConfig::z()},
      {"JS-NN", SchemeConfig::js_nn(js_net)}, {"Z-NN", SchemeConfig::z_nn(z_net)}};

  const auto problem = make_problem("lax");
  const double dx = problem.x.dx;
  const double jump_c = rho_hi - rho_lo, jump_s = rho_hi - rho_right;
  bool all = true;
  std::string detail = fmt("reference contact %.4f shock %.4f; ", target.contact, target.shock);
  for (const auto& [name, cfg] : schemes) {
    const auto u = run(problem, cfg).final_field;
    const auto got = locate(u, rho_lo, rho_hi, rho_right);
    const double ec = std::abs(got.contact - target.contact) / dx;
    const double es = std::abs(got.shock - target.shock) / dx;
    // Overshoot: between the contact and shock zones and to the right of the shock
    // the density must stay within the bracketing plateau levels.
    double worst = 0.0;
    for (int i = 0; i < u.nx(); ++i) {
      const double x = u.x_axis().center(i);
      if (std::abs(x - target.contact) <= 4 * dx || std::abs(x - target.shock) <= 4 * dx) continue;
      const double r = u(i, 0, 0);
      if (x > target.contact && x < target.shock) {
        worst = std::max(worst, (r - rho_hi) / jump_s);
      } else if (x > target.shock) {
        worst = std::max(worst, std::abs(r - rho_right) / jump_s);
      } else if (x < target.contact && x > target.contact - 0.1) {
        worst = std::max(worst, (rho_lo - r) / jump_c);
      }
    }
    const bool ok = ec <= 2.0 && es <= 2.0 && worst <= 0.02;
    all = all && ok;
    detail += fmt("%s %s (contact %.2f cells, shock %.2f cells, overshoot %.2f%%); ", name,
                  ok ? "ok" : "fail", ec, es, 100.0 * std::max(worst, 0.0));
  }
  return {all, detail};
}

Outcome two_d_sanity(const Options&) {
  StateField u(make_grid_2d(0, 1, 64, 0, 1, 64), 4);
  const double gamma = 1.4;
  const auto s = conserved_2d(1.3, 0.7, -0.4, 2.1, gamma);
  for (int j = 0; j < 64; ++j)
    for (int i = 0; i < 64; ++i) {
      u(i, j, 0) = s.rho;
      u(i, j, 1) = s.mx;
      u(i, j, 2) = s.my;
      u(i, j, 3) = s.E;
    }
  const StateField u0 = u;
  const auto physics = PhysicsModel::euler(gamma);
  const auto bcs = Boundaries::all(Periodic{});
  RhsFunction L = [&](const StateField& in, double t, StateField& out) {
    rhs(in, SchemeConfig::z(), bcs, t, physics, out);
  };
  double t = 0.0;
  for (int step = 0; step < 100; ++step) {
    const double dt = compute_dt(u, 0.4, physics);
    rk3_step(u, t, dt, L);
    t += dt;
  }
  double drift = 0.0;
  for (std::size_t k = 0; k < u.values().size(); ++k)
    drift = std::max(drift, std::abs(u.values()[k] - u0.values()[k]));

  ProblemOverrides ov;
  ov.nx = 100;
  ov.ny = 400;
  ov.t_final = 0.5;
  const auto rt = run(make_problem("rt", ov), SchemeConfig::z());
  const auto& f = rt.final_field;
  double asym = 0.0;
  for (int j = 0; j < f.ny(); ++j)
    for (int i = 0; i < f.nx() / 2; ++i) {
      const int m = f.nx() - 1 - i;
      asym = std::max(asym, std::abs(f(i, j, 0) - f(m, j, 0)));
      asym = std::max(asym, std::abs(f(i, j, 1) + f(m, j, 1)));
      asym = std::max(asym, std::abs(f(i, j, 2) - f(m, j, 2)));
      asym = std::max(asym, std::abs(f(i, j, 3) - f(m, j, 3)));
    }
  return {drift <= 1e-13 && asym <= 1e-8,
          fmt("free-stream drift %.1e after 100 steps; RT mirror asymmetry %.1e at t = %.2f (%ld steps)",
              drift, asym, rt.time, rt.steps)};
}

Outcome spectral_improvement(const Options& opt) {
  const auto net = trained_network(opt.checkpoint_z, SchemeKind::Z);
  const int N = 100;
  const double nn = band_error(SchemeConfig::z_nn(net), N);
  const double z = band_error(SchemeConfig::z(), N);
  return {nn < z, fmt("sum |Phi - phi| over phi in [0.0628, 1.1310], N = %d: Z-NN %.4e, Z %.4e (%s checkpoint)",
                      N, nn, z, opt.checkpoint_z ? "given" : "desk-trained")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> which;
  Options opt;
  app.add_option("criteria", which, "Criterion numbers (default: all)")->check(CLI::Range(1, 11));
  app.add_option("--checkpoint-z", opt.checkpoint_z, "Trained Z-NN checkpoint (default: desk-scale training)");
  app.add_option("--checkpoint-js", opt.checkpoint_js, "Trained JS-NN checkpoint (default: desk-scale training)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Outcome(const Options&)>>> criteria{
      {"weight validity", weight_validity},   {"smooth-limit rates", smooth_rates},
      {"convergence order", convergence},     {"ADR oracle", adr_oracle},
      {"spectral error bound", error_bound},  {"zero-network consistency", zero_network},
      {"gradient correctness", gradients},    {"desk-scale training", desk_training},
      {"shock fidelity", shock_fidelity},     {"2D sanity", two_d_sanity},
      {"spectral improvement", spectral_improvement}};
  if (which.empty())
    for (int k = 1; k <= 11; ++k) which.push_back(k);

  int failures = 0;
  for (int k : which) {
    const auto& [name, fn] = criteria[static_cast<std::size_t>(k - 1)];
    Outcome o;
    try {
      o = fn(opt);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %s  %s: %s\n", k, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
