#include "core/report.hpp"

#include <sstream>

#include "core/abelian.hpp"
#include "core/error.hpp"

namespace schurmult {

using nlohmann::json;

json report_to_json(const Report& r) {
  json j = json::object();
  j["command"] = r.command;
  j["p"] = r.p;
  j["factors"] = r.factors;
  j["trace"] = r.trace;
  j["details"] = r.details;
  j["input"] = r.input;
  j["status"] = r.status;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.p = j.at("p").get<long>();
    r.factors = j.at("factors").get<std::vector<int>>();
    r.trace = j.at("trace").get<std::map<std::string, int>>();
    r.details = j.at("details");
    r.input = j.at("input").get<std::string>();
    r.status = j.at("status").get<int>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
  }
}

std::string serialize_report(const Report& r) { return report_to_json(r).dump(); }

Report parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
  }
  return report_from_json(j);
}

namespace {

std::string power_of(long p, int e) { return std::to_string(p) + "^" + std::to_string(e); }

std::string int_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// "a1^2 a3 b1^4" for a normal form; "1" for the identity.
std::string word(const json& e, const json& f) {
  std::string out;
  auto part = [&](const json& v, char name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string c = int_text(v[i]);
      if (c == "0") continue;
      if (!out.empty()) out += ' ';
      out += name + std::to_string(i + 1);
      if (c != "1") out += "^" + c;
    }
  };
  part(e, 'a');
  part(f, 'b');
  return out.empty() ? "1" : out;
}

std::string vector_text(const json& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + int_text(v[i]);
  return out + ")";
}

const std::vector<std::pair<std::string, std::string>>& trace_labels() {
  static const std::vector<std::pair<std::string, std::string>> labels{
      {"VxW", "|V (x) W|"}, {"wedge", "|V ^ V|"}, {"W", "|W|"},   {"X1", "|X1|"},
      {"X2", "|X2|"},       {"X", "|X|"},         {"N", "|N|"},   {"ker_rho", "|ker rho|"},
      {"Mstar", "|M*|"},    {"M", "|M|"},         {"exp_M", "exp(M)"}};
  return labels;
}

void render_trace(std::ostringstream& os, const Report& r) {
  for (const auto& [key, label] : trace_labels()) {
    const auto it = r.trace.find(key);
    if (it == r.trace.end()) continue;
    os << "  " << label << " = " << power_of(r.p, it->second) << '\n';
  }
}

void render_schur(std::ostringstream& os, const Report& r) {
  os << "M(G) = " << format_group(r.p, r.factors) << '\n';
  render_trace(os, r);
  const json& d = r.details;
  if (d.contains("order_check")) {
    const int lhs = r.trace.at("VxW") - r.trace.at("X") + r.trace.at("wedge") - r.trace.at("W");
    os << "order check: |V (x) W / X| * |V ^ V| / |W| = " << power_of(r.p, lhs) << " = |M| ["
       << (d["order_check"].get<bool>() ? "ok" : "FAILED") << "]\n";
  }
  if (d.contains("witness")) {
    os << "M* relations (columns x_1..x_D, n_1..n_m):\n";
    for (const auto& row : d["witness"]["mstar_relations"]) os << "  " << vector_text(row) << '\n';
    os << "ker rho basis (V ^ V coordinates):\n";
    if (d["witness"]["ker_rho_basis"].empty()) os << "  (trivial)\n";
    for (const auto& v : d["witness"]["ker_rho_basis"]) os << "  " << vector_text(v) << '\n';
  }
}

void render_decompose(std::ostringstream& os, const Report& r) {
  const json& fs = r.details["central_factors"];
  os << "central product of " << fs.size() << " s-extraspecial factor" << (fs.size() == 1 ? "" : "s") << '\n';
  std::size_t i = 0;
  for (const auto& f : fs) {
    const json zero_e = json(std::vector<int>(f["g1"]["e"].size(), 0));
    os << "  factor " << ++i << ": g1 = " << word(f["g1"]["e"], f["g1"]["f"])
       << ", g2 = " << word(f["g2"]["e"], f["g2"]["f"]) << ", [g1,g2] = " << word(zero_e, f["commutator"])
       << ", g1^(p^s) = " << word(zero_e, f["powers"][0]) << ", g2^(p^s) = " << word(zero_e, f["powers"][1])
       << ", |factor| = " << power_of(r.p, f["log_order"].get<int>()) << '\n';
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  const json& d = r.details;
  if (r.command == "validate") {
    if (d["valid"].get<bool>()) {
      os << "valid\n";
    } else {
      os << "invalid:\n";
      for (const auto& v : d["violations"]) os << "  - " << v.get<std::string>() << '\n';
    }
  } else if (r.command == "order") {
    os << "|G| = " << int_text(d["order"]) << " = " << power_of(r.p, d["log_order"].get<int>()) << '\n';
  } else if (r.command == "schur") {
    render_schur(os, r);
  } else if (r.command == "epicenter") {
    os << "epicenter part (Z*(G) meet G') = " << format_group(r.p, r.factors) << '\n';
    for (const auto& b : d["basis"]) os << "  generator " << vector_text(b) << '\n';
    if (d.contains("contains"))
      os << "subgroup contained in epicenter: " << (d["contains"].get<bool>() ? "yes" : "no") << '\n';
  } else if (r.command == "decompose") {
    render_decompose(os, r);
  } else if (r.command == "family") {
    os << "G = " << d["family"].get<std::string>() << '\n';
    os << "|G| = " << power_of(r.p, d["log_order"].get<int>()) << '\n';
    if (d["expected"].is_null()) {
      os << "expected M(G): no closed form\n";
    } else {
      os << "expected M(G) = " << format_group(r.p, d["expected"].get<std::vector<int>>()) << '\n';
    }
    os << "computed M(G) = " << format_group(r.p, r.factors);
    if (!d["expected"].is_null()) os << (d["agrees"].get<bool>() ? " [agrees]" : " [DISAGREES]");
    os << '\n';
  } else if (r.command == "realize") {
    os << "target = " << format_group(r.p, d["target"].get<std::vector<int>>()) << '\n';
    os << "realized by " << d["family"].get<std::string>() << '\n';
    os << "M(G) = " << format_group(r.p, r.factors) << " [verified]\n";
  } else if (r.command == "oracle") {
    os << "order(M) = " << int_text(d["order"]);
    if (d["agrees"].get<bool>()) {
      os << " [agrees with pipeline]\n";
    } else {
      os << " [DISAGREES with pipeline: " << int_text(d["pipeline_order"]) << "]\n";
    }
  } else {
    os << serialize_report(r) << '\n';
  }
  return os.str();
}

}  // namespace schurmult
