#include "wenonn/checkpoint.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "wenonn/errors.hpp"

namespace wenonn {

using nlohmann::json;

SchemeConfig Checkpoint::scheme() const {
  auto net = std::make_shared<const NetworkParams>(params);
  return base == SchemeKind::JS ? SchemeConfig::js_nn(net, eps1) : SchemeConfig::z_nn(net, eps1);
}

std::string checkpoint_to_json(const Checkpoint& ckpt) {
  if (ckpt.base != SchemeKind::JS && ckpt.base != SchemeKind::Z) {
    throw ContractError("checkpoint: base scheme must be JS or Z");
  }
  json doc;
  doc["schema_version"] = kCheckpointSchemaVersion;
  doc["base_scheme"] = ckpt.base == SchemeKind::JS ? "JS" : "Z";
  doc["layer_sizes"] = ckpt.params.layer_sizes();
  json weights = json::array();
  json biases = json::array();
  for (int l = 0; l < ckpt.params.n_layers(); ++l) {
    auto w = ckpt.params.weights(l);
    auto b = ckpt.params.biases(l);
    weights.push_back(std::vector<double>(w.begin(), w.end()));
    biases.push_back(std::vector<double>(b.begin(), b.end()));
  }
  doc["weights"] = std::move(weights);
  doc["biases"] = std::move(biases);
  doc["eps1"] = ckpt.eps1;
  doc["training_config_digest"] = ckpt.training_config_digest;
  doc["theta_id"] = ckpt.params.theta_id();
  return doc.dump(1) + "\n";
}

Checkpoint checkpoint_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("checkpoint: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kCheckpointSchemaVersion) {
      throw ConfigError("checkpoint: unsupported schema_version " +
                        doc.at("schema_version").dump());
    }
    const std::string base = doc.at("base_scheme").get<std::string>();
    if (base != "JS" && base != "Z") throw ConfigError("checkpoint: base_scheme must be JS or Z");
    auto sizes = doc.at("layer_sizes").get<std::vector<int>>();
    const auto& weights = doc.at("weights");
    const auto& biases = doc.at("biases");
    if (weights.size() + 1 != sizes.size() || biases.size() + 1 != sizes.size()) {
      throw ConfigError("checkpoint: layer count does not match layer_sizes");
    }
    std::vector<double> values;
    for (std::size_t l = 0; l < weights.size(); ++l) {
      auto w = weights[l].get<std::vector<double>>();
      auto b = biases[l].get<std::vector<double>>();
      if (w.size() != static_cast<std::size_t>(sizes[l]) * sizes[l + 1] ||
          b.size() != static_cast<std::size_t>(sizes[l + 1])) {
        throw ConfigError("checkpoint: layer " + std::to_string(l) + " has the wrong shape");
      }
      values.insert(values.end(), w.begin(), w.end());
      values.insert(values.end(), b.begin(), b.end());
    }
    Checkpoint ckpt{NetworkParams(std::move(sizes), std::move(values)),
                    base == "JS" ? SchemeKind::JS : SchemeKind::Z, doc.at("eps1").get<double>(),
                    doc.value("training_config_digest", std::string{})};
    if (doc.contains("theta_id") && doc["theta_id"].get<std::string>() != ckpt.params.theta_id()) {
      throw ConfigError("checkpoint: theta_id does not match the stored parameters");
    }
    return ckpt;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("checkpoint: ") + e.what());
  } catch (const ContractError& e) {
    throw ConfigError(std::string("checkpoint: ") + e.what());
  }
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
  std::ofstream out(path);
  if (!out) throw ConfigError("checkpoint: cannot write " + path.string());
  out << checkpoint_to_json(ckpt);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("checkpoint: cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return checkpoint_from_json(buf.str());
}

}  // namespace wenonn
