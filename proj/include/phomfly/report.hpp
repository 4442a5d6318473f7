#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace phomfly {

/// Outcome of a verification run. Serialized as
/// {"check": name, "instances": N, "failures": [...], "elapsed_ms": t}.
struct Report {
  std::string check;
  std::size_t instances = 0;
  std::vector<nlohmann::json> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

}  // namespace phomfly
