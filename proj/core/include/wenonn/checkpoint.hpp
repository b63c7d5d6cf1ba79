#pragma once

#include <filesystem>
#include <string>

#include "wenonn/network.hpp"
#include "wenonn/weno.hpp"

namespace wenonn {

inline constexpr int kCheckpointSchemaVersion = 1;

/// A trained compensation network together with the scheme it was trained on.
///
/// On disk this is a JSON document:
///
///     {
///       "schema_version": 1,
///       "base_scheme": "Z",                  // "JS" or "Z"
///       "layer_sizes": [4, 30, 30, 30, 3],
///       "weights": [[...], ...],             // one row-major (out x in) array per layer
///       "biases": [[...], ...],
///       "eps1": 1e-30,
///       "training_config_digest": "…",
///       "theta_id": "…"                      // checked on load
///     }
///
/// Numbers are written in shortest round-trip form, so a load reproduces every
/// parameter bit.
struct Checkpoint {
  NetworkParams params;
  SchemeKind base = SchemeKind::Z;  ///< JS or Z
  double eps1 = 1e-30;
  std::string training_config_digest;

  /// NN scheme (JS_NN or Z_NN) backed by a shared copy of the parameters.
  SchemeConfig scheme() const;
};

std::string checkpoint_to_json(const Checkpoint& ckpt);
/// Throws ConfigError on malformed documents, schema mismatch or theta_id mismatch.
Checkpoint checkpoint_from_json(const std::string& text);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace wenonn
