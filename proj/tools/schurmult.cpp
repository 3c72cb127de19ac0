// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "schurmult/schurmult.h"

namespace {

struct Outcome {
  std::string out;
  std::string err;
  int code = 0;
};

struct ReportDeleter {
  void operator()(sm_report* r) const { sm_report_free(r); }
};
struct PresentationDeleter {
  void operator()(sm_presentation* p) const { sm_presentation_free(p); }
};
using ReportPtr = std::unique_ptr<sm_report, ReportDeleter>;
using PresentationPtr = std::unique_ptr<sm_presentation, PresentationDeleter>;

Outcome failure(sm_status status, const std::string& message) {
  return {"", "error[" + std::string(sm_status_name(status)) + "]: " + message + "\n", sm_exit_code(status)};
}

Outcome failure(sm_status status) { return failure(status, sm_last_error()); }

std::string take(char* s) {
  std::string out(s);
  sm_string_free(s);
  return out;
}

std::optional<std::string> read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) return std::nullopt;
  ss << in.rdbuf();
  return ss.str();
}

/// Renders a finished report, or only its presentation when emit is set.
Outcome render(sm_status status, sm_report* raw, bool machine, bool emit = false) {
  if (status != SM_OK) return failure(status);
  ReportPtr r(raw);
  char* s = nullptr;
  Outcome o;
  if (emit) {
    if (const sm_status st = sm_report_presentation(r.get(), &s); st != SM_OK) return failure(st);
  } else if (machine) {
    if (const sm_status st = sm_report_json(r.get(), &s); st != SM_OK) return failure(st);
  } else {
    if (const sm_status st = sm_report_text(r.get(), &s); st != SM_OK) return failure(st);
  }
  o.out = take(s);
  if (machine && !emit) o.out += '\n';
  o.code = sm_report_exit_status(r.get());
  return o;
}

using PresentationCommand = std::function<sm_status(const sm_presentation*, sm_report**)>;

Outcome on_file(const std::string& path, bool machine, const PresentationCommand& run) {
  const auto text = read_input(path);
  if (!text) return failure(SM_E_PARAM, "cannot read '" + path + "'");
  sm_presentation* raw = nullptr;
  if (const sm_status st = sm_presentation_parse(text->c_str(), &raw); st != SM_OK) return failure(st);
  PresentationPtr P(raw);
  sm_report* r = nullptr;
  const sm_status st = run(P.get(), &r);
  return render(st, r, machine);
}

/// Processes the inputs on up to `jobs` threads and prints results in input order.
int run_batch(const std::vector<std::string>& paths, unsigned jobs, bool machine, const PresentationCommand& run) {
  std::vector<Outcome> results(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < paths.size();) results[i] = on_file(paths[i], machine, run);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(paths.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  int code = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths.size() > 1 && !machine) std::cout << "== " << paths[i] << " ==\n";
    std::cout << results[i].out;
    std::cerr << results[i].err;
    code = std::max(code, results[i].code);
  }
  std::cout.flush();
  return code;
}

int emit(const Outcome& o) {
  std::cout << o.out;
  std::cerr << o.err;
  return o.code;
}

/// "1,2,3" -> {1, 2, 3}.
std::optional<std::vector<long>> parse_list(const std::string& text) {
  std::vector<long> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::vector<int> to_ints(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multipliers of class-2 p-groups with homocyclic abelianization"};
  app.require_subcommand(1);
  std::function<int()> action;

  bool machine = false;
  auto add_machine = [&](CLI::App* sub) { sub->add_flag("--machine", machine, "Print a single JSON object"); };

  // Commands on one presentation file.
  std::string file;
  auto single = [&](const char* name, const char* help, PresentationCommand run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Presentation file, or - for stdin")->required();
    add_machine(sub);
    sub->callback([&, run] { action = [&, run] { return emit(on_file(file, machine, run)); }; });
    return sub;
  };

  single("validate", "Check the standing hypotheses", sm_validate);
  single("order", "Print |G|", sm_order);
  single("decompose", "Central-product decomposition of an s-extraspecial group", sm_decompose);

  std::optional<std::string> subgroup;
  CLI::App* epi = single("epicenter", "Epicenter part Z*(G) meet G'", [&](const sm_presentation* P, sm_report** r) {
    return sm_epicenter(P, subgroup ? subgroup->c_str() : nullptr, r);
  });
  epi->add_option("--subgroup", subgroup, "Generators c1,...,ck;... in W coordinates");

  std::uint64_t max_order = 256;
  CLI::App* orc = single("oracle", "Cohomological order of M(G), compared with the pipeline",
                         [&](const sm_presentation* P, sm_report** r) { return sm_oracle(P, max_order, r); });
  orc->add_option("--max-order", max_order, "Largest |G| to enumerate")->capture_default_str();

  // schur accepts several inputs.
  std::vector<std::string> files;
  bool witness = false;
  bool check_order = false;
  unsigned jobs = 1;
  CLI::App* schur = app.add_subcommand("schur", "Compute M(G)");
  schur->add_option("files", files, "Presentation files, or - for stdin")->required();
  add_machine(schur);
  schur->add_flag("--witness", witness, "Print the M* relations and a ker rho basis");
  schur->add_flag("--check-order", check_order, "Cross-check |M| against the stage orders");
  schur->add_option("--jobs", jobs, "Process inputs in parallel")->check(CLI::PositiveNumber);
  schur->callback([&] {
    action = [&] {
      const unsigned flags = (witness ? SM_SCHUR_WITNESS : 0u) | (check_order ? SM_SCHUR_CHECK_ORDER : 0u);
      return run_batch(files, jobs, machine, [flags](const sm_presentation* P, sm_report** r) {
        return sm_schur(P, flags, r);
      });
    };
  });

  // family
  std::string family;
  sm_family_params fp = sm_family_defaults();
  std::optional<std::string> t_list, powers_list;
  std::optional<int> cyclic_t;
  bool emit_presentation = false;
  CLI::App* fam = app.add_subcommand("family", "Build a named family and compare with its closed form");
  fam->add_option("kind", family, "gk, gkgap, gjk, extraspecial or table")->required();
  fam->add_option("--p", fp.p, "Odd prime")->required();
  fam->add_option("--s", fp.s, "Exponent of G/G' is p^s")->required();
  fam->add_option("--d", fp.d, "Number of generators")->capture_default_str();
  fam->add_option("--k", fp.k, "Family parameter k")->capture_default_str();
  fam->add_option("--j", fp.j, "Family parameter j")->capture_default_str();
  fam->add_option("--t", t_list, "t1,t2,...");
  fam->add_option("--r", fp.r, "Number of extraspecial factors")->capture_default_str();
  fam->add_option("--row", fp.row, "Table row 1-6")->capture_default_str();
  fam->add_option("--cyclic-t", cyclic_t, "Direct factor Z_{p^T}");
  fam->add_option("--powers", powers_list, "Extraspecial power data x1,x2;x1,x2;...");
  fam->add_flag("--emit", emit_presentation, "Write the presentation to stdout");
  add_machine(fam);
  fam->callback([&] {
    action = [&]() -> int {
      std::vector<int> t;
      std::vector<long> powers;
      if (t_list) {
        const auto v = parse_list(*t_list);
        if (!v) return emit(failure(SM_E_PARAM, "--t expects a comma-separated list of integers"));
        t = to_ints(*v);
      }
      if (powers_list) {
        std::istringstream in(*powers_list);
        std::string pair;
        while (std::getline(in, pair, ';')) {
          const auto v = parse_list(pair);
          if (!v || v->size() != 2) return emit(failure(SM_E_PARAM, "--powers expects x1,x2 pairs separated by ';'"));
          powers.insert(powers.end(), v->begin(), v->end());
        }
      }
      fp.family = family.c_str();
      fp.t = t.data();
      fp.t_len = t.size();
      fp.powers = powers.data();
      fp.powers_len = powers.size();
      fp.cyclic_t = cyclic_t.value_or(-1);
      sm_report* r = nullptr;
      const sm_status st = sm_family(&fp, &r);
      return emit(render(st, r, machine, emit_presentation));
    };
  });

  // realize
  long rp = 0;
  int rs = 0, rn = 0;
  std::optional<std::string> m_list, triple;
  bool realize_emit = false;
  CLI::App* rea = app.add_subcommand("realize", "Find a family member whose multiplier is a given group");
  rea->add_option("--p", rp, "Odd prime")->required();
  CLI::Option* s_opt = rea->add_option("--s", rs, "Target exponent p^s");
  CLI::Option* n_opt = rea->add_option("--n", rn, "Number of Z_{p^s} factors");
  rea->add_option("--m", m_list, "m1,m2,...: factors Z_{p^{m_i}} with m_i < s");
  CLI::Option* tri = rea->add_option("--triple", triple, "n1,n2,n3: target Z_{p^n1} x Z_{p^n2} x Z_{p^n3}");
  tri->excludes(s_opt)->excludes(n_opt);
  rea->add_flag("--emit", realize_emit, "Write the presentation to stdout");
  add_machine(rea);
  rea->callback([&] {
    action = [&]() -> int {
      sm_report* r = nullptr;
      sm_status st;
      if (triple) {
        const auto v = parse_list(*triple);
        if (!v || v->size() != 3) return emit(failure(SM_E_PARAM, "--triple expects n1,n2,n3"));
        st = sm_realize_triple(rp, static_cast<int>((*v)[0]), static_cast<int>((*v)[1]), static_cast<int>((*v)[2]), &r);
      } else {
        if (!s_opt->count() || !n_opt->count()) return emit(failure(SM_E_PARAM, "realize needs --s and --n, or --triple"));
        std::vector<int> m;
        if (m_list) {
          const auto v = parse_list(*m_list);
          if (!v) return emit(failure(SM_E_PARAM, "--m expects a comma-separated list of integers"));
          m = to_ints(*v);
        }
        const sm_target target{rp, rs, rn, m.data(), m.size()};
        st = sm_realize(&target, &r);
      }
      return emit(render(st, r, machine, realize_emit));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return action ? action() : 1;
}
