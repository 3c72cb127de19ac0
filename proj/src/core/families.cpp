#include "core/families.hpp"

#include <algorithm>
#include <functional>

#include "core/error.hpp"
#include "core/schur.hpp"

namespace schurmult {

namespace {

[[noreturn]] void param(const std::string& msg) { throw Error(ErrorCode::Param, msg); }

int choose2(int d) { return d * (d - 1) / 2; }

IntVec unit_w(std::size_t k, std::size_t n) {
  IntVec w(k);
  w[n] = 1;
  return w;
}

/// Canonical group from a list of exponents; zero exponents are dropped.
AbelianPGroup group_of(long p, std::vector<int> exps) {
  std::erase(exps, 0);
  return AbelianPGroup(p, std::move(exps)).canonical();
}

void append(std::vector<int>& exps, int e, int count) {
  for (int i = 0; i < count; ++i) exps.push_back(e);
}

void check_common(const FamilySpec& spec) {
  if (!is_prime(spec.p) || spec.p == 2) param("p must be an odd prime");
  if (spec.s < 1) param("s must be positive");
  if (spec.cyclic_t && *spec.cyclic_t < 1) param("cyclic factor exponent must be positive");
}

void check_table(const FamilySpec& spec) {
  const int s = spec.s;
  switch (spec.row) {
    case 1:
    case 2:
      if (!spec.cyclic_t) param("table rows 1 and 2 need the cyclic factor exponent");
      if (*spec.cyclic_t > s) param("table rows 1 and 2 need t <= s");
      if (!spec.t.empty()) param("table rows 1 and 2 take no t list");
      break;
    case 3:
    case 4:
      if (spec.t.size() != 1 || spec.t[0] < 1 || spec.t[0] > s) param("table rows 3 and 4 need one t with 1 <= t <= s");
      break;
    case 5:
      if (spec.t.size() != 2) param("table row 5 needs t1, t2");
      if (spec.t[0] < 1 || spec.t[0] > spec.t[1] || spec.t[1] > s) param("table row 5 needs 1 <= t1 <= t2 <= s");
      break;
    case 6:
      if (spec.t.size() != 1 || spec.t[0] < 1 || 2 * spec.t[0] > s) param("table row 6 needs one t with 1 <= 2t <= s");
      break;
    default:
      param("table row must be between 1 and 6");
  }
  if (spec.row > 2 && spec.cyclic_t) param("only table rows 1 and 2 carry a cyclic factor");
}

void check_spec(const FamilySpec& spec) {
  check_common(spec);
  switch (spec.kind) {
    case FamilyKind::GK:
      if (spec.d < 2 || spec.k < 0 || spec.k > spec.d - 2) param("gk needs d >= 2 and 0 <= k <= d-2");
      break;
    case FamilyKind::GKGap:
      if (spec.d < 4 || spec.k < 1 || spec.k > spec.d - 3) param("gkgap needs d >= 4 and 1 <= k <= d-3");
      break;
    case FamilyKind::GJK:
      if (spec.d < 2 || spec.k < 0 || spec.k > spec.d - 2) param("gjk needs d >= 2 and 0 <= k <= d-2");
      if (spec.j < 1 || spec.j > spec.k + 1) param("gjk needs 1 <= j <= k+1");
      if (spec.t.size() != static_cast<std::size_t>(spec.j)) param("gjk needs exactly j entries in t");
      for (int e : spec.t)
        if (e < 1 || e > spec.s) param("gjk needs 1 <= t_i <= s");
      break;
    case FamilyKind::Extraspecial:
      if (spec.r < 1) param("extraspecial needs r >= 1");
      if (!spec.powers.empty() && spec.powers.size() != static_cast<std::size_t>(spec.r))
        param("extraspecial power data needs one pair per factor");
      break;
    case FamilyKind::Table:
      check_table(spec);
      break;
  }
}

ClassTwoPresentation build_table(const FamilySpec& spec) {
  const long p = spec.p;
  const int s = spec.s;
  switch (spec.row) {
    case 1: {
      auto P = ClassTwoPresentation::zero(p, s, 3, {s, s});
      P.set_commutator(0, 1, {1, 0});
      P.set_commutator(1, 2, {0, 1});
      P.set_power(0, {1, 0});
      P.set_power(1, {0, 1});
      return P;
    }
    case 2: {
      auto P = ClassTwoPresentation::zero(p, s, 2, {s});
      P.set_commutator(0, 1, {1});
      return P;
    }
    case 3: {
      auto P = ClassTwoPresentation::zero(p, s, 3, {s, spec.t[0]});
      P.set_commutator(0, 1, {1, 0});
      P.set_commutator(1, 2, {0, 1});
      P.set_power(2, {1, 0});
      return P;
    }
    case 4: {
      auto P = ClassTwoPresentation::zero(p, s, 3, {s, spec.t[0], s});
      P.set_commutator(0, 2, {1, 0, 0});
      P.set_commutator(1, 2, {0, 1, 0});
      P.set_commutator(0, 1, {0, 0, 1});
      P.set_power(0, {1, 0, 0});
      P.set_power(2, {0, 1, 0});
      return P;
    }
    case 5: {
      auto P = ClassTwoPresentation::zero(p, s, 4, {spec.t[0], spec.t[1], s, s});
      P.set_commutator(0, 1, unit_w(4, 0));
      P.set_commutator(1, 2, unit_w(4, 1));
      P.set_commutator(2, 3, unit_w(4, 2));
      P.set_commutator(0, 3, unit_w(4, 3));
      for (std::size_t i = 0; i < 4; ++i) P.set_power(i, unit_w(4, i));
      return P;
    }
    default: {
      const int t = spec.t[0];
      auto P = ClassTwoPresentation::zero(p, s, 3, {2 * t});
      P.set_commutator(0, 1, {1});
      P.set_commutator(0, 2, {1});
      const Int pt = ipow(p, static_cast<unsigned long>(t));
      P.set_power(1, {pt});
      P.set_power(2, {pt});
      return P;
    }
  }
}

}  // namespace

const char* family_name(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::GK: return "gk";
    case FamilyKind::GKGap: return "gkgap";
    case FamilyKind::GJK: return "gjk";
    case FamilyKind::Extraspecial: return "extraspecial";
    case FamilyKind::Table: return "table";
  }
  return "gk";
}

FamilyKind parse_family_name(const std::string& name) {
  for (auto kind : {FamilyKind::GK, FamilyKind::GKGap, FamilyKind::GJK, FamilyKind::Extraspecial, FamilyKind::Table})
    if (name == family_name(kind)) return kind;
  param("unknown family '" + name + "'");
}

FamilyGroup build(const FamilySpec& spec) {
  check_spec(spec);
  const long p = spec.p;
  const int s = spec.s;
  FamilyGroup out{ClassTwoPresentation{}, spec.cyclic_t};
  ClassTwoPresentation& P = out.presentation;

  switch (spec.kind) {
    case FamilyKind::GK: {
      const auto k = static_cast<std::size_t>(spec.k) + 1;
      P = ClassTwoPresentation::zero(p, s, spec.d, std::vector<int>(k, s));
      for (std::size_t i = 0; i < k; ++i) P.set_commutator(i, i + 1, unit_w(k, i));
      break;
    }
    case FamilyKind::GKGap: {
      const auto k = static_cast<std::size_t>(spec.k);
      P = ClassTwoPresentation::zero(p, s, spec.d, std::vector<int>(k + 1, s));
      for (std::size_t i = 0; i < k; ++i) P.set_commutator(i, i + 1, unit_w(k + 1, i));
      P.set_commutator(k + 1, k + 2, unit_w(k + 1, k));
      break;
    }
    case FamilyKind::GJK: {
      const auto k = static_cast<std::size_t>(spec.k) + 1;
      std::vector<int> t(k, s);
      std::copy(spec.t.begin(), spec.t.end(), t.begin());
      P = ClassTwoPresentation::zero(p, s, spec.d, t);
      for (std::size_t i = 0; i < k; ++i) P.set_commutator(i, i + 1, unit_w(k, i));
      for (std::size_t i = 0; i < static_cast<std::size_t>(spec.j); ++i) P.set_power(i, unit_w(k, i));
      break;
    }
    case FamilyKind::Extraspecial: {
      P = ClassTwoPresentation::zero(p, s, 2 * spec.r, {s});
      for (std::size_t i = 0; i < static_cast<std::size_t>(spec.r); ++i) {
        P.set_commutator(2 * i, 2 * i + 1, {1});
        if (!spec.powers.empty()) {
          P.set_power(2 * i, {Int(spec.powers[i].first)});
          P.set_power(2 * i + 1, {Int(spec.powers[i].second)});
        }
      }
      break;
    }
    case FamilyKind::Table:
      P = build_table(spec);
      break;
  }
  require_valid(P);
  return out;
}

AbelianPGroup kunneth_with_cyclic(const AbelianPGroup& M_H, const AbelianPGroup& H_ab, int t) {
  if (t < 1) param("cyclic factor exponent must be positive");
  if (M_H.prime() != H_ab.prime()) param("prime mismatch");
  std::vector<int> exps = M_H.exps();
  for (int e : H_ab.exps()) exps.push_back(std::min(e, t));
  return group_of(M_H.prime(), std::move(exps));
}

AbelianPGroup expected_multiplier(const FamilySpec& spec) {
  check_spec(spec);
  const long p = spec.p;
  const int s = spec.s, d = spec.d, k = spec.k;
  std::vector<int> exps;

  switch (spec.kind) {
    case FamilyKind::GK:
      append(exps, s, choose2(d) + 2 * k + 1);
      break;
    case FamilyKind::GKGap:
      append(exps, s, choose2(d) + 2 * k);
      break;
    case FamilyKind::GJK: {
      const int j = spec.j;
      append(exps, s, j < k + 1 ? choose2(d) + 2 * k + 1 - 3 * j : choose2(d) - (k + 1));
      for (int e : spec.t) exps.push_back(s - e);
      break;
    }
    case FamilyKind::Extraspecial:
      if (spec.r == 1) throw Error(ErrorCode::NotCovered, "no closed form for r = 1 extraspecial groups");
      append(exps, s, 2 * spec.r * spec.r - spec.r - 1);
      break;
    case FamilyKind::Table: {
      switch (spec.row) {
        case 1:
          exps.push_back(s);
          append(exps, *spec.cyclic_t, 3);
          break;
        case 2:
          append(exps, s, 2);
          append(exps, *spec.cyclic_t, 2);
          break;
        case 3: {
          const int t = spec.t[0];
          append(exps, t, 2);
          exps.push_back(s - t);
          exps.push_back(s);
          break;
        }
        case 4: {
          const int t = spec.t[0];
          exps.push_back(t);
          exps.push_back(s - t);
          append(exps, s, 2);
          break;
        }
        case 5: {
          const int t1 = spec.t[0], t2 = spec.t[1];
          exps.push_back(s - t1);
          exps.push_back(s - t2);
          append(exps, s + t1, 2);
          break;
        }
        default: {
          const int t = spec.t[0];
          exps.push_back(s - 2 * t);
          append(exps, t, 2);
          append(exps, s, 2);
          break;
        }
      }
      return group_of(p, std::move(exps));
    }
  }
  AbelianPGroup M = group_of(p, std::move(exps));
  if (spec.cyclic_t) {
    const int dd = spec.kind == FamilyKind::Extraspecial ? 2 * spec.r : d;
    M = kunneth_with_cyclic(M, AbelianPGroup(p, std::vector<int>(static_cast<std::size_t>(dd), s)), *spec.cyclic_t);
  }
  return M;
}

AbelianPGroup computed_multiplier(const FamilyGroup& g) {
  const AbelianPGroup M = schur_multiplier(g.presentation).multiplier;
  if (!g.cyclic_t) return M;
  return kunneth_with_cyclic(M, g.presentation.V(), *g.cyclic_t);
}

bool is_s_extraspecial(const ClassTwoPresentation& P) {
  require_valid(P);
  if (P.k() != 1 || P.t[0] != P.s) return false;
  // x = a^e is central iff sum_i e_i [a_i, a_j] = 0 for every j.
  const auto d = static_cast<std::size_t>(P.d);
  IntMatrix A(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) A(j, i) = P.commutator_of(i, j)[0];
  const IntVec moduli(d, P.s_modulus());
  return kernel_mod(A, moduli, moduli).empty();
}

std::vector<ExtraspecialFactor> decompose_extraspecial(const ClassTwoPresentation& P) {
  if (!is_s_extraspecial(P)) param("presentation is not s-extraspecial");
  const ClassTwoGroup G(P);
  const Int q = P.s_modulus();
  const auto comm = [&](const GroupElement& x, const GroupElement& y) { return G.commutator(x, y).f[0]; };
  const auto unit = [&](const Int& c) { return sgn(c) != 0 && mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(P.p)) == 0; };

  std::vector<GroupElement> rest;
  for (std::size_t i = 0; i < static_cast<std::size_t>(P.d); ++i) rest.push_back(G.a(i));

  std::vector<ExtraspecialFactor> out;
  while (!rest.empty()) {
    std::size_t bi = rest.size(), bj = rest.size();
    for (std::size_t i = 0; i < rest.size() && bi == rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j)
        if (unit(comm(rest[i], rest[j]))) {
          bi = i;
          bj = j;
          break;
        }
    if (bi == rest.size()) throw Error(ErrorCode::Internal, "no generator pair with a unit commutator");

    const GroupElement g1 = rest[bi], g2 = rest[bj];
    const Int u = comm(g1, g2);
    Int u_inv;
    mpz_invert(u_inv.get_mpz_t(), u.get_mpz_t(), q.get_mpz_t());

    std::vector<GroupElement> next;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (i == bi || i == bj) continue;
      const GroupElement& h = rest[i];
      const Int x = mod_floor(comm(g2, h) * u_inv, q);
      const Int y = mod_floor(-comm(g1, h) * u_inv, q);
      next.push_back(G.multiply(G.multiply(h, G.power(g1, x)), G.power(g2, y)));
    }

    ExtraspecialFactor f{g1, g2, ClassTwoPresentation::zero(P.p, P.s, 2, {P.s})};
    f.presentation.set_commutator(0, 1, {u});
    f.presentation.set_power(0, G.power(g1, q).f);
    f.presentation.set_power(1, G.power(g2, q).f);
    out.push_back(std::move(f));
    rest = std::move(next);
  }
  return out;
}

ClassTwoPresentation change_generators(const ClassTwoPresentation& P, const IntMatrix& U) {
  const auto d = static_cast<std::size_t>(P.d);
  if (U.rows() != d || U.cols() != d) throw Error(ErrorCode::Dimension, "generator change needs a d x d matrix");
  if (mpz_divisible_ui_p(determinant(U).get_mpz_t(), static_cast<unsigned long>(P.p)))
    param("generator change is not invertible mod p");
  const ClassTwoGroup G(P);
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(G.element(U.column(i), IntVec(P.k())));
  ClassTwoPresentation Q = ClassTwoPresentation::zero(P.p, P.s, P.d, P.t);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) Q.set_commutator(i, j, G.commutator(gens[i], gens[j]).f);
    Q.set_power(i, G.power(gens[i], P.s_modulus()).f);
  }
  return Q;
}

TargetAbelian target_from_triple(long p, int n1, int n2, int n3) {
  if (n1 < 0 || n2 < 0 || n3 < 0) param("triple entries must be non-negative");
  std::vector<int> v{n1, n2, n3};
  std::sort(v.begin(), v.end(), std::greater<>());
  const int a = v[0], b = v[1], c = v[2];
  if (a == 0) return {p, 1, 0, {}};
  if (a > b) return {p, a, 1, {b, c}};
  if (b > c) return {p, a, 2, {c}};
  return {p, a, 3, {}};
}

namespace {

void check_target(const TargetAbelian& target) {
  if (!is_prime(target.p) || target.p == 2) param("p must be an odd prime");
  if (target.s < 1) param("s must be positive");
  if (target.n < 0) param("n must be non-negative");
  for (int e : target.m)
    if (e < 0 || e >= target.s) param("each m_i must satisfy 0 <= m_i < s");
}

std::vector<int> nonzero_m(const TargetAbelian& target) {
  std::vector<int> m;
  for (int e : target.m)
    if (e > 0) m.push_back(e);
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

}  // namespace

AbelianPGroup target_group(const TargetAbelian& target) {
  check_target(target);
  std::vector<int> exps(static_cast<std::size_t>(target.n), target.s);
  exps.insert(exps.end(), target.m.begin(), target.m.end());
  return group_of(target.p, std::move(exps));
}

bool target_covered(const TargetAbelian& target) {
  check_target(target);
  const auto r = static_cast<int>(nonzero_m(target).size());
  if (r <= 1) return true;
  if (r == 2) return target.n >= 1 && target.n != 2;
  const int a = (3 * r + 1) / 2 + 2;  // ceil(3r/2 + 2)
  return 2 * target.n >= (a - 1) * (a - 2);
}

Realization realize(const TargetAbelian& target) {
  if (!target_covered(target)) throw Error(ErrorCode::NotCovered, "target shape is not covered");
  const std::vector<int> m = nonzero_m(target);
  const auto r = static_cast<int>(m.size());
  const AbelianPGroup wanted = target_group(target);
  constexpr int max_d = 16;

  for (int d = 2; d <= max_d; ++d)
    for (int j = std::max(1, r); j <= d - 1; ++j)
      for (int k = j - 1; k <= d - 2; ++k) {
        const int count = j < k + 1 ? choose2(d) + 2 * k + 1 - 3 * j : choose2(d) - (k + 1);
        if (count != target.n) continue;
        FamilySpec spec;
        spec.kind = FamilyKind::GJK;
        spec.p = target.p;
        spec.s = target.s;
        spec.d = d;
        spec.j = j;
        spec.k = k;
        spec.t.assign(static_cast<std::size_t>(j), target.s);
        for (int i = 0; i < r; ++i) spec.t[static_cast<std::size_t>(i)] = target.s - m[static_cast<std::size_t>(i)];
        ClassTwoPresentation P = build(spec).presentation;
        AbelianPGroup M = schur_multiplier(P).multiplier;
        if (!M.isomorphic(wanted))
          throw Error(ErrorCode::Consistency, "realized group has multiplier " + M.to_string() + ", expected " +
                                                  wanted.to_string());
        return {std::move(spec), std::move(P), std::move(M)};
      }
  throw Error(ErrorCode::Bound, "no realization with d <= " + std::to_string(max_d));
}

}  // namespace schurmult
