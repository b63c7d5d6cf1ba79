#include "wenonn_tools/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "wenonn/adr.hpp"
#include "wenonn/checkpoint.hpp"
#include "wenonn/dataset.hpp"
#include "wenonn/digest.hpp"
#include "wenonn/errors.hpp"
#include "wenonn/snapshot_io.hpp"
#include "wenonn/solver.hpp"
#include "wenonn/train_config.hpp"
#include "wenonn/trainer.hpp"
#include "wenonn_tools/problems.hpp"
#include "wenonn_tools/studies.hpp"

namespace wenonn::tools {

namespace fs = std::filesystem;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", t);
  return buf;
}

void finish(RunManifest& m, const Stopwatch& sw, const fs::path& out_dir) {
  m.config_digest = hex_digest(fnv1a64(m.inputs));
  m.wall_time_s = sw.seconds();
  m.write(out_dir);
}

std::string checkpoint_id_of(const SchemeConfig& s) {
  return s.network ? s.network->theta_id() : std::string{};
}

}  // namespace

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["config_digest"] = config_digest;
  j["scheme"] = scheme;
  j["checkpoint_id"] = checkpoint_id;
  j["grid"] = grid;
  j["t_final"] = t_final;
  j["wall_time_s"] = wall_time_s;
  j["outputs"] = outputs;
  j["status"] = status;
  j["inputs"] = inputs;
  return j.dump(2) + "\n";
}

void RunManifest::write(const fs::path& out_dir) const {
  open_output(out_dir / "manifest.json") << to_json();
}

SchemeConfig resolve_scheme(const std::string& name, const std::optional<std::string>& checkpoint) {
  const SchemeKind kind = parse_scheme(name);
  SchemeConfig cfg;
  switch (kind) {
    case SchemeKind::Linear: cfg = SchemeConfig::linear(); break;
    case SchemeKind::JS: cfg = SchemeConfig::js(); break;
    case SchemeKind::Z: cfg = SchemeConfig::z(); break;
    case SchemeKind::Upwind1: cfg = SchemeConfig::upwind1(); break;
    case SchemeKind::JS_NN:
    case SchemeKind::Z_NN: {
      if (!checkpoint) throw ConfigError("scheme " + name + " requires --checkpoint");
      const Checkpoint ckpt = load_checkpoint(*checkpoint);
      const SchemeKind want = kind == SchemeKind::JS_NN ? SchemeKind::JS : SchemeKind::Z;
      if (ckpt.base != want)
        throw ConfigError("checkpoint " + *checkpoint + " was trained on " +
                          std::string(scheme_name(ckpt.base)) + ", not usable for " + name);
      return ckpt.scheme();
    }
  }
  if (checkpoint) throw ConfigError("--checkpoint given for classical scheme " + name);
  return cfg;
}

int cmd_train(const TrainOptions& opt) {
  Stopwatch sw;
  TrainConfig cfg = load_train_config(opt.config_path);
  if (opt.epochs) cfg.epochs = *opt.epochs;
  if (opt.seed) cfg.seed = *opt.seed;
  const auto dataset = generate_dataset(cfg.seed, cfg.dataset);
  cfg.validate(dataset.size());
  ensure_dir(opt.out_dir);

  const TrainResult result = train(dataset, cfg, [&](const EpochRecord& r) {
    if (opt.quiet) return;
    std::fprintf(stderr, "epoch %4d  total %.6e  L_r %.4e  L_tvd %.4e  L_diss %.4e  lr %.3e\n",
                 r.epoch, r.loss.total, r.loss.reconstruction, r.loss.tvd, r.loss.dissipation,
                 r.lr);
  });

  Checkpoint ckpt{result.params, cfg.base, cfg.eps1, cfg.digest()};
  save_checkpoint(opt.out_dir / "checkpoint.json", ckpt);
  {
    auto out = open_output(opt.out_dir / "loss_history.csv");
    write_loss_history_csv(out, result.history);
  }

  RunManifest m;
  m.command = "train";
  m.scheme = std::string(scheme_name(cfg.base == SchemeKind::JS ? SchemeKind::JS_NN : SchemeKind::Z_NN));
  m.checkpoint_id = result.params.theta_id();
  m.grid = std::to_string(cfg.dataset.n_cells) + " cells on [" + g17(cfg.dataset.x_left) + ", " +
           g17(cfg.dataset.x_right) + "]";
  m.outputs = {"checkpoint.json", "loss_history.csv"};
  m.inputs = cfg.canonical();
  if (!result.completed) m.status = "numeric failure: " + result.failure;
  finish(m, sw, opt.out_dir);
  if (!result.completed) {
    std::cerr << "training stopped: " << result.failure << "\n";
    return 3;
  }
  return 0;
}

int cmd_adr(const AdrOptions& opt) {
  Stopwatch sw;
  const SchemeConfig scheme = resolve_scheme(opt.scheme, opt.checkpoint);
  if (opt.N < 6 || opt.N % 2 != 0) throw ConfigError("adr: N must be even and >= 6");
  ensure_dir(opt.out_dir);
  {
    auto out = open_output(opt.out_dir / "spectrum.csv");
    write_spectrum_csv(out, spectrum(scheme, opt.N));
  }
  {
    auto out = open_output(opt.out_dir / "bound.csv");
    write_bound_csv(out, scheme, opt.N);
  }
  RunManifest m;
  m.command = "adr";
  m.scheme = opt.scheme;
  m.checkpoint_id = checkpoint_id_of(scheme);
  m.grid = "N=" + std::to_string(opt.N);
  m.outputs = {"spectrum.csv", "bound.csv"};
  m.inputs = "adr scheme=" + opt.scheme + " N=" + std::to_string(opt.N) + " theta=" + m.checkpoint_id;
  finish(m, sw, opt.out_dir);
  return 0;
}

int cmd_run(const RunOptions& opt) {
  Stopwatch sw;
  const SchemeConfig scheme = resolve_scheme(opt.scheme, opt.checkpoint);
  ProblemOverrides ov{opt.nx, opt.ny, opt.t_final, opt.cfl};
  ProblemSpec problem = make_problem(opt.problem, ov);
  problem.snapshot_times = opt.snapshot_times;
  ensure_dir(opt.out_dir);

  RunManifest m;
  m.command = "run " + opt.problem;
  m.scheme = opt.scheme;
  m.checkpoint_id = checkpoint_id_of(scheme);
  m.grid = std::to_string(problem.x.n_cells);
  if (problem.dimension == 2) m.grid += "x" + std::to_string(problem.y.n_cells);
  m.t_final = problem.t_final;
  std::ostringstream in;
  in << "run problem=" << opt.problem << " scheme=" << opt.scheme << " theta=" << m.checkpoint_id
     << " grid=" << m.grid << " t_final=" << g17(problem.t_final) << " cfl=" << g17(problem.cfl);
  for (double t : opt.snapshot_times) in << " snap=" << g17(t);
  m.inputs = in.str();

  std::optional<RunResult> result;
  try {
    long last_report = 0;
    result = run(problem, scheme, [&](double t, long steps) {
      if (opt.quiet || steps - last_report < 100) return;
      last_report = steps;
      std::fprintf(stderr, "step %ld  t = %.6g\n", steps, t);
    });
  } catch (const NumericError& e) {
    m.status = std::string("numeric failure: ") + e.what();
    finish(m, sw, opt.out_dir);
    throw;
  }

  const std::string stem = opt.problem + "_" + opt.scheme + "_t";
  for (const Snapshot& s : result->snapshots) {
    const std::string name = stem + time_tag(s.time) + (problem.dimension == 1 ? ".csv" : ".grid");
    auto out = open_output(opt.out_dir / name);
    if (problem.dimension == 1)
      write_snapshot_csv(out, s.field, problem.physics.gamma);
    else
      write_grid2d(out, s.field, problem.physics.gamma, s.time);
    m.outputs.push_back(name);
  }
  finish(m, sw, opt.out_dir);
  return 0;
}

int cmd_convergence(const ConvergenceOptions& opt) {
  Stopwatch sw;
  const SchemeConfig scheme = resolve_scheme(opt.scheme, opt.checkpoint);
  const auto rows = convergence_study(scheme, opt.resolutions, opt.cfl);
  ensure_dir(opt.out_dir);
  {
    auto out = open_output(opt.out_dir / "convergence.csv");
    write_convergence_csv(out, rows);
  }
  RunManifest m;
  m.command = "convergence";
  m.scheme = opt.scheme;
  m.checkpoint_id = checkpoint_id_of(scheme);
  m.t_final = 1.0;
  std::ostringstream in;
  in << "convergence scheme=" << opt.scheme << " theta=" << m.checkpoint_id << " cfl=" << g17(opt.cfl);
  for (int n : opt.resolutions) {
    in << " N=" << n;
    m.grid += (m.grid.empty() ? "" : ",") + std::to_string(n);
  }
  m.inputs = in.str();
  m.outputs = {"convergence.csv"};
  finish(m, sw, opt.out_dir);
  return 0;
}

int cmd_weights(const WeightsOptions& opt) {
  Stopwatch sw;
  const ProbeFunction fn = parse_probe_function(opt.function);
  if (opt.schemes.empty()) throw ConfigError("weights: at least one --scheme required");
  std::vector<SchemeConfig> schemes;
  std::size_t next_ckpt = 0;
  for (const auto& name : opt.schemes) {
    std::optional<std::string> ckpt;
    if (parse_scheme(name) == SchemeKind::JS_NN || parse_scheme(name) == SchemeKind::Z_NN) {
      if (next_ckpt >= opt.checkpoints.size())
        throw ConfigError("weights: scheme " + name + " needs a --checkpoint");
      ckpt = opt.checkpoints[next_ckpt++];
    }
    schemes.push_back(resolve_scheme(name, ckpt));
  }
  if (next_ckpt != opt.checkpoints.size()) throw ConfigError("weights: unused --checkpoint given");

  ensure_dir(opt.out_dir);
  RunManifest m;
  m.command = "weights";
  std::ostringstream in;
  in << "weights function=" << opt.function << " nx=" << opt.nx;
  {
    auto out = open_output(opt.out_dir / "weights.csv");
    write_weights_header(out);
    for (std::size_t k = 0; k < schemes.size(); ++k) {
      write_weights_rows(out, opt.schemes[k], weights_study(fn, schemes[k], opt.nx));
      const std::string id = checkpoint_id_of(schemes[k]);
      m.scheme += (k ? "," : "") + opt.schemes[k];
      if (!id.empty()) m.checkpoint_id += (m.checkpoint_id.empty() ? "" : ",") + id;
      in << " scheme=" << opt.schemes[k] << " theta=" << id;
    }
  }
  m.grid = std::to_string(opt.nx) + " cells on [0, 2]";
  m.inputs = in.str();
  m.outputs = {"weights.csv"};
  finish(m, sw, opt.out_dir);
  return 0;
}

int cmd_dataset(const DatasetOptions& opt) {
  Stopwatch sw;
  TrainConfig cfg = opt.config_path ? load_train_config(*opt.config_path) : TrainConfig{};
  if (opt.seed) cfg.seed = *opt.seed;
  const auto data = generate_dataset(cfg.seed, cfg.dataset);
  ensure_dir(opt.out_dir);
  {
    auto out = open_output(opt.out_dir / "dataset.csv");
    out << "index,family,params\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
      out << i << ',' << family_name(data[i].family) << ',';
      for (std::size_t k = 0; k < data[i].params.size(); ++k)
        out << (k ? ";" : "") << g17(data[i].params[k]);
      out << '\n';
    }
  }
  RunManifest m;
  m.command = "dataset";
  m.grid = std::to_string(cfg.dataset.n_cells) + " cells";
  m.outputs = {"dataset.csv"};
  m.inputs = cfg.canonical();
  finish(m, sw, opt.out_dir);
  return 0;
}

}  // namespace wenonn::tools
