#pragma once

// Command results in a form that serializes to JSON and renders to text.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace schurmult {

struct Report {
  std::string command;
  /// Echo of the input: a serialized presentation or the parameters.
  std::string input;
  long p = 0;
  /// Exponents of the resulting group, descending; [2, 1] is Z_{p^2} x Z_p.
  std::vector<int> factors;
  /// log_p of the stage orders.
  std::map<std::string, int> trace;
  nlohmann::json details = nlohmann::json::object();
  /// Process exit status the CLI should use.
  int status = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
/// Single-line JSON.
std::string serialize_report(const Report& r);
/// Throws Error(Parse) on malformed input.
Report parse_report(const std::string& text);

/// Human-readable rendering, derived from the fields only.
std::string render_text(const Report& r);

}  // namespace schurmult
