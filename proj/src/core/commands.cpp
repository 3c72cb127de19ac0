#include "core/commands.hpp"

#include <sstream>

#include "core/error.hpp"
#include "core/oracle.hpp"
#include "core/schur.hpp"

namespace schurmult {

using nlohmann::json;

namespace {

/// Number when it fits in a long, decimal string otherwise.
json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json vec_json(const IntVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

json element_json(const GroupElement& g) { return json{{"e", vec_json(g.e)}, {"f", vec_json(g.f)}}; }

std::map<std::string, int> trace_map(const SchurTrace& t) {
  return {{"VxW", t.log_VW}, {"wedge", t.log_wedge}, {"W", t.log_W},       {"X1", t.log_X1},
          {"X2", t.log_X2},  {"X", t.log_X},         {"N", t.log_N},       {"ker_rho", t.log_ker_rho},
          {"Mstar", t.log_mstar}, {"M", t.log_M},    {"exp_M", t.log_exponent_M}};
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Report base(const std::string& command, const ClassTwoPresentation& P) {
  Report r;
  r.command = command;
  r.input = serialize(P);
  r.p = P.p;
  return r;
}

/// H x Z_{p^t} as a presentation; only possible for t = s, where the extra
/// generator keeps the abelianization homocyclic.
std::optional<ClassTwoPresentation> with_cyclic_factor(const FamilyGroup& g) {
  if (!g.cyclic_t) return g.presentation;
  const auto& H = g.presentation;
  if (*g.cyclic_t != H.s) return std::nullopt;
  ClassTwoPresentation P = ClassTwoPresentation::zero(H.p, H.s, H.d + 1, H.t);
  for (std::size_t i = 0; i < static_cast<std::size_t>(H.d); ++i) {
    P.set_power(i, H.alpha[i]);
    for (std::size_t j = i + 1; j < static_cast<std::size_t>(H.d); ++j) P.set_commutator(i, j, H.commutator_of(i, j));
  }
  return P;
}

}  // namespace

int exit_status(ErrorCode code) noexcept {
  return code == ErrorCode::Consistency || code == ErrorCode::Internal ? 2 : 1;
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream os;
  os << family_name(spec.kind) << "(p=" << spec.p << ", s=" << spec.s;
  switch (spec.kind) {
    case FamilyKind::GK:
    case FamilyKind::GKGap:
      os << ", d=" << spec.d << ", k=" << spec.k;
      break;
    case FamilyKind::GJK:
      os << ", d=" << spec.d << ", j=" << spec.j << ", k=" << spec.k << ", t=" << join_ints(spec.t);
      break;
    case FamilyKind::Extraspecial:
      os << ", r=" << spec.r;
      if (!spec.powers.empty()) {
        os << ", powers=";
        for (std::size_t i = 0; i < spec.powers.size(); ++i)
          os << (i ? ";" : "") << spec.powers[i].first << ',' << spec.powers[i].second;
      }
      break;
    case FamilyKind::Table:
      os << ", row=" << spec.row;
      if (!spec.t.empty()) os << ", t=" << join_ints(spec.t);
      break;
  }
  os << ')';
  if (spec.cyclic_t) os << " x C" << spec.p << '^' << *spec.cyclic_t;
  return os.str();
}

Report run_validate(const ClassTwoPresentation& P) {
  Report r = base("validate", P);
  const auto violations = validate(P);
  r.details["valid"] = violations.empty();
  r.details["violations"] = violations;
  r.status = violations.empty() ? 0 : 1;
  return r;
}

Report run_order(const ClassTwoPresentation& P) {
  require_valid(P);
  Report r = base("order", P);
  r.details["order"] = int_json(group_order(P));
  r.details["log_order"] = log_group_order(P);
  return r;
}

Report run_schur(const ClassTwoPresentation& P, const SchurOptions& opts) {
  const SchurResult res = schur_multiplier(P);
  Report r = base("schur", P);
  r.factors = res.multiplier.canonical().exps();
  r.trace = trace_map(res.trace);
  r.details["order"] = int_json(res.multiplier.order());
  if (opts.check_order) {
    const bool ok = order_formula_check(res);
    r.details["order_check"] = ok;
    if (!ok) r.status = 2;
  }
  if (opts.witness) {
    json rel = json::array();
    for (std::size_t i = 0; i < res.mstar_relations.rows(); ++i) rel.push_back(vec_json(res.mstar_relations.row(i)));
    json ker = json::array();
    for (const auto& v : res.ker_rho_basis) ker.push_back(vec_json(v));
    r.details["witness"] = json{{"mstar_relations", rel}, {"ker_rho_basis", ker}};
  }
  return r;
}

std::vector<GroupVec> parse_subgroup(const std::string& text, std::size_t k) {
  std::vector<GroupVec> out;
  std::istringstream groups(text);
  std::string item;
  while (std::getline(groups, item, ';')) {
    GroupVec v;
    std::istringstream coords(item);
    std::string c;
    while (std::getline(coords, c, ',')) {
      const auto first = c.find_first_not_of(" \t");
      const auto last = c.find_last_not_of(" \t");
      if (first == std::string::npos) throw Error(ErrorCode::Parse, "empty coordinate in subgroup generator");
      Int x;
      if (x.set_str(c.substr(first, last - first + 1), 10) != 0)
        throw Error(ErrorCode::Parse, "bad coordinate '" + c + "' in subgroup generator");
      v.push_back(x);
    }
    if (v.size() != k)
      throw Error(ErrorCode::Parse, "subgroup generator has " + std::to_string(v.size()) + " coordinates, expected " +
                                        std::to_string(k));
    out.push_back(std::move(v));
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty subgroup");
  return out;
}

Report run_epicenter(const ClassTwoPresentation& P, const std::optional<std::vector<GroupVec>>& subgroup) {
  const SubgroupData E = epicenter_part(P);
  Report r = base("epicenter", P);
  r.factors = E.basis_exps;
  json basis = json::array();
  for (const auto& b : E.basis) basis.push_back(vec_json(b));
  r.details["basis"] = basis;
  r.details["log_order"] = E.log_order();
  if (subgroup) {
    const GroupVec mods = P.w_moduli();
    std::vector<GroupVec> reduced;
    for (GroupVec z : *subgroup) {
      for (std::size_t n = 0; n < z.size(); ++n) z[n] = mod_floor(z[n], mods[n]);
      reduced.push_back(std::move(z));
    }
    r.details["contains"] = epicenter_contains(P, reduced);
  }
  return r;
}

Report run_decompose(const ClassTwoPresentation& P) {
  const auto factors = decompose_extraspecial(P);
  Report r = base("decompose", P);
  json fs = json::array();
  for (const auto& f : factors) {
    const auto& Q = f.presentation;
    fs.push_back(json{{"g1", element_json(f.g1)},
                      {"g2", element_json(f.g2)},
                      {"commutator", vec_json(Q.gamma[0])},
                      {"powers", json::array({vec_json(Q.alpha[0]), vec_json(Q.alpha[1])})},
                      {"log_order", log_group_order(Q)},
                      {"presentation", serialize(Q)}});
  }
  r.details["central_factors"] = fs;
  return r;
}

Report run_family(const FamilySpec& spec) {
  const FamilyGroup g = build(spec);
  const SchurResult res = schur_multiplier(g.presentation);
  const AbelianPGroup computed =
      g.cyclic_t ? kunneth_with_cyclic(res.multiplier, g.presentation.V(), *g.cyclic_t) : res.multiplier;

  Report r;
  r.command = "family";
  r.input = describe(spec);
  r.p = spec.p;
  r.factors = computed.canonical().exps();
  r.trace = trace_map(res.trace);
  r.details["family"] = describe(spec);
  if (const auto whole = with_cyclic_factor(g)) r.details["presentation"] = serialize(*whole);
  r.details["log_order"] = log_group_order(g.presentation) + g.cyclic_t.value_or(0);
  r.details["expected"] = nullptr;
  try {
    const AbelianPGroup expected = expected_multiplier(spec).canonical();
    const bool agrees = expected.isomorphic(computed);
    r.details["expected"] = expected.exps();
    r.details["agrees"] = agrees;
    if (!agrees) r.status = 2;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCovered) throw;
  }
  return r;
}

Report run_realize(const TargetAbelian& target) {
  const Realization real = realize(target);
  Report r;
  r.command = "realize";
  r.input = "p=" + std::to_string(target.p) + " s=" + std::to_string(target.s) + " n=" + std::to_string(target.n) +
            " m=" + join_ints(target.m);
  r.p = target.p;
  r.factors = real.multiplier.canonical().exps();
  r.details["target"] = target_group(target).canonical().exps();
  r.details["family"] = describe(real.spec);
  r.details["d"] = real.spec.d;
  r.details["j"] = real.spec.j;
  r.details["k"] = real.spec.k;
  r.details["t"] = real.spec.t;
  r.details["presentation"] = serialize(real.presentation);
  return r;
}

Report run_oracle(const ClassTwoPresentation& P, std::uint64_t max_order) {
  const Int oracle = schur_order_oracle(P, max_order);
  const Int pipeline = schur_multiplier(P).multiplier.order();
  Report r = base("oracle", P);
  r.details["order"] = int_json(oracle);
  r.details["pipeline_order"] = int_json(pipeline);
  const bool agrees = oracle == pipeline;
  r.details["agrees"] = agrees;
  if (!agrees) r.status = 2;
  return r;
}

}  // namespace schurmult
