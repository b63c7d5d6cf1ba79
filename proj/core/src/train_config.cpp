#include "wenonn/train_config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "wenonn/digest.hpp"
#include "wenonn/errors.hpp"

namespace wenonn {

std::vector<int> TrainConfig::layer_sizes() const {
  std::vector<int> sizes{4};
  sizes.insert(sizes.end(), hidden.begin(), hidden.end());
  sizes.push_back(3);
  return sizes;
}

void TrainConfig::validate(std::size_t dataset_size) const {
  auto fail = [](const std::string& msg) { throw ConfigError("train config: " + msg); };
  if (lambda_tvd < 0 || lambda_diss < 0 || lambda_w < 0) fail("lambdas must be >= 0");
  if (batch_size < 1) fail("batch_size must be >= 1");
  if (dataset_size > 0 && static_cast<std::size_t>(batch_size) > dataset_size) {
    fail("batch_size exceeds dataset size");
  }
  if (!(lr0 > 0)) fail("lr0 must be > 0");
  if (!(lr_decay > 0 && lr_decay <= 1)) fail("lr_decay must lie in (0, 1]");
  if (epochs < 0) fail("epochs must be >= 0");
  if (!(tvd_cfl > 0 && tvd_cfl <= 1)) fail("tvd_cfl must lie in (0, 1]");
  if (adr_grid < 6 || adr_grid % 2 != 0) fail("adr_grid must be even and >= 6");
  if (!(eps1 > 0)) fail("eps1 must be > 0");
  if (base != SchemeKind::JS && base != SchemeKind::Z) fail("base must be JS or Z");
  for (int h : hidden) {
    if (h < 1 || h > 128) fail("hidden widths must lie in [1, 128]");
  }
  if (dataset.n_cells < 10) fail("n_cells must be >= 10");
  if (dataset.n_tanh + dataset.n_sine + dataset.n_poly < 1) fail("dataset is empty");
}

SchemeConfig TrainConfig::base_scheme() const {
  SchemeConfig s = base == SchemeKind::JS ? SchemeConfig::js() : SchemeConfig::z();
  s.eps1 = eps1;
  return s;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

template <class T>
T parse_number(const std::string& text, const std::string& where) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError(where + ": cannot parse '" + text + "' as a number");
  }
  return value;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string TrainConfig::canonical() const {
  std::ostringstream os;
  os << "base = " << (base == SchemeKind::JS ? "JS" : "Z") << "\n";
  os << "lambda_tvd = " << fmt(lambda_tvd) << "\n";
  os << "lambda_diss = " << fmt(lambda_diss) << "\n";
  os << "lambda_w = " << fmt(lambda_w) << "\n";
  os << "batch_size = " << batch_size << "\n";
  os << "lr0 = " << fmt(lr0) << "\n";
  os << "lr_decay = " << fmt(lr_decay) << "\n";
  os << "epochs = " << epochs << "\n";
  os << "seed = " << seed << "\n";
  os << "tvd_cfl = " << fmt(tvd_cfl) << "\n";
  os << "adr_grid = " << adr_grid << "\n";
  os << "eps1 = " << fmt(eps1) << "\n";
  os << "hidden = ";
  for (std::size_t i = 0; i < hidden.size(); ++i) os << (i ? "," : "") << hidden[i];
  os << "\n";
  os << "n_tanh = " << dataset.n_tanh << "\n";
  os << "n_sine = " << dataset.n_sine << "\n";
  os << "n_poly = " << dataset.n_poly << "\n";
  os << "n_cells = " << dataset.n_cells << "\n";
  return os.str();
}

std::string TrainConfig::digest() const { return hex_digest(fnv1a64(canonical())); }

TrainConfig parse_train_config(std::istream& in, const std::string& source) {
  TrainConfig cfg;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters{
      {"lambda_tvd", [&](auto& v, auto& w) { cfg.lambda_tvd = parse_number<double>(v, w); }},
      {"lambda_diss", [&](auto& v, auto& w) { cfg.lambda_diss = parse_number<double>(v, w); }},
      {"lambda_w", [&](auto& v, auto& w) { cfg.lambda_w = parse_number<double>(v, w); }},
      {"batch_size", [&](auto& v, auto& w) { cfg.batch_size = parse_number<int>(v, w); }},
      {"lr0", [&](auto& v, auto& w) { cfg.lr0 = parse_number<double>(v, w); }},
      {"lr_decay", [&](auto& v, auto& w) { cfg.lr_decay = parse_number<double>(v, w); }},
      {"epochs", [&](auto& v, auto& w) { cfg.epochs = parse_number<int>(v, w); }},
      {"seed", [&](auto& v, auto& w) { cfg.seed = parse_number<std::uint64_t>(v, w); }},
      {"tvd_cfl", [&](auto& v, auto& w) { cfg.tvd_cfl = parse_number<double>(v, w); }},
      {"adr_grid", [&](auto& v, auto& w) { cfg.adr_grid = parse_number<int>(v, w); }},
      {"eps1", [&](auto& v, auto& w) { cfg.eps1 = parse_number<double>(v, w); }},
      {"n_tanh", [&](auto& v, auto& w) { cfg.dataset.n_tanh = parse_number<int>(v, w); }},
      {"n_sine", [&](auto& v, auto& w) { cfg.dataset.n_sine = parse_number<int>(v, w); }},
      {"n_poly", [&](auto& v, auto& w) { cfg.dataset.n_poly = parse_number<int>(v, w); }},
      {"n_cells", [&](auto& v, auto& w) { cfg.dataset.n_cells = parse_number<int>(v, w); }},
      {"base",
       [&](auto& v, auto& w) {
         if (v == "JS") {
           cfg.base = SchemeKind::JS;
         } else if (v == "Z") {
           cfg.base = SchemeKind::Z;
         } else {
           throw ConfigError(w + ": base must be JS or Z, got '" + v + "'");
         }
       }},
      {"hidden",
       [&](auto& v, auto& w) {
         cfg.hidden.clear();
         std::stringstream ss(v);
         std::string item;
         while (std::getline(ss, item, ',')) cfg.hidden.push_back(parse_number<int>(trim(item), w));
       }},
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError(where + ": unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
    it->second(value, where);
  }
  cfg.validate();
  return cfg;
}

TrainConfig load_train_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  return parse_train_config(in, path.string());
}

}  // namespace wenonn
