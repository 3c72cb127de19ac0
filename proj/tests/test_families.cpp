#include "doctest.h"

#include <functional>

#include "core/error.hpp"
#include "core/families.hpp"
#include "core/schur.hpp"
#include "support.hpp"

using namespace schurmult;
using namespace schurmult::testing;

namespace {

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

void check_factors_commute(const ClassTwoPresentation& P, const std::vector<ExtraspecialFactor>& fs) {
  const ClassTwoGroup G(P);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Int q = P.s_modulus();
    const GroupElement c = G.commutator(fs[i].g1, fs[i].g2);
    CHECK_FALSE(G.is_identity(c));
    // [g1, g2] generates G' = Z_{p^s}, so the factor has order p^{3s}.
    CHECK(G.is_identity(G.power(c, q)));
    CHECK_FALSE(G.is_identity(G.power(c, q / P.p)));
    CHECK(log_group_order(fs[i].presentation) == 3 * P.s);
    CHECK(G.power(fs[i].g1, q) == G.element(IntVec(P.d), fs[i].presentation.alpha[0]));
    CHECK(G.power(fs[i].g2, q) == G.element(IntVec(P.d), fs[i].presentation.alpha[1]));
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      for (const auto* x : {&fs[i].g1, &fs[i].g2})
        for (const auto* y : {&fs[j].g1, &fs[j].g2}) CHECK(G.is_identity(G.commutator(*x, *y)));
  }
}

}  // namespace

TEST_CASE("family names") {
  for (auto kind : {FamilyKind::GK, FamilyKind::GKGap, FamilyKind::GJK, FamilyKind::Extraspecial, FamilyKind::Table})
    CHECK(parse_family_name(family_name(kind)) == kind);
  CHECK(error_of([] { parse_family_name("nope"); }) == ErrorCode::Param);
}

TEST_CASE("builders") {
  const ClassTwoPresentation G0 = family(gk(3, 1, 2, 0));
  CHECK(group_order(G0) == 27);
  CHECK(G0.commutator_of(0, 1) == IntVec{Int(1)});

  const ClassTwoPresentation J = family(gjk(3, 2, 3, 2, 1, {1, 2}));
  CHECK(log_group_order(J) == 9);
  CHECK(J.alpha[0] == IntVec{Int(1), Int(0)});
  CHECK(J.alpha[1] == IntVec{Int(0), Int(1)});
  CHECK(J.alpha[2] == IntVec{Int(0), Int(0)});

  CHECK(log_group_order(family(extraspecial(3, 1, 2))) == 5);
  CHECK(log_group_order(family(extraspecial(3, 2, 3, {{1, 0}, {0, 1}, {2, 2}}))) == 14);

  CHECK(error_of([] { build(gk(3, 1, 3, 2)); }) == ErrorCode::Param);
  CHECK(error_of([] { build(gk(4, 1, 3, 0)); }) == ErrorCode::Param);
  CHECK(error_of([] { build(gkgap(3, 1, 3, 1)); }) == ErrorCode::Param);
  CHECK(error_of([] { build(gjk(3, 1, 3, 1, 1, {2})); }) == ErrorCode::Param);
  CHECK(error_of([] { build(gjk(3, 1, 3, 2, 1, {1})); }) == ErrorCode::Param);
  CHECK(error_of([] { build(table_row(3, 2, 6, {2})); }) == ErrorCode::Param);
  CHECK(error_of([] { build(table_row(3, 2, 5, {2, 1})); }) == ErrorCode::Param);
  CHECK(error_of([] { build(table_row(3, 2, 1, {})); }) == ErrorCode::Param);
  CHECK(error_of([] { build(table_row(3, 2, 7, {1})); }) == ErrorCode::Param);
}

TEST_CASE("closed forms against the pipeline") {
  CHECK(computed_multiplier(build(gk(3, 1, 4, 2))).to_string() == "C3^11");
  CHECK(computed_multiplier(build(gjk(3, 2, 3, 1, 1, {1}))).to_string() == "C9^3 x C3");
  CHECK(computed_multiplier(build(table_row(3, 2, 3, {1}))).to_string() == "C9 x C3^3");
  for (long p : {3L, 5L})
    for (int s : {1, 2}) {
      for (int d = 2; d <= 5; ++d)
        for (int k = 0; k <= d - 2; ++k) {
          CHECK(computed_multiplier(build(gk(p, s, d, k))).isomorphic(expected_multiplier(gk(p, s, d, k))));
          if (d >= 4 && k >= 1 && k <= d - 3)
            CHECK(computed_multiplier(build(gkgap(p, s, d, k))).isomorphic(expected_multiplier(gkgap(p, s, d, k))));
        }
    }
  CHECK(error_of([] { expected_multiplier(extraspecial(3, 1, 1)); }) == ErrorCode::NotCovered);
}

TEST_CASE("direct product with a cyclic group") {
  const AbelianPGroup trivial(3, {});
  CHECK(kunneth_with_cyclic(trivial, trivial, 2).is_trivial());
  const AbelianPGroup M = kunneth_with_cyclic(AbelianPGroup(3, {2, 2}), AbelianPGroup(3, {2, 2}), 1);
  CHECK(M.canonical().exps() == std::vector<int>{2, 2, 1, 1});
  for (int row = 1; row <= 2; ++row)
    for (int t = 1; t <= 2; ++t) {
      const FamilySpec spec = table_row(3, 2, row, {}, t);
      CHECK(computed_multiplier(build(spec)).isomorphic(expected_multiplier(spec)));
    }
}

TEST_CASE("s-extraspecial recognition and decomposition") {
  CHECK(is_s_extraspecial(family(extraspecial(3, 1, 2))));
  ClassTwoPresentation P = ClassTwoPresentation::zero(3, 1, 3, {1});
  P.set_commutator(0, 1, {1});
  CHECK_FALSE(is_s_extraspecial(P));
  CHECK_FALSE(is_s_extraspecial(family(gk(3, 1, 3, 1))));
  CHECK(error_of([&] { decompose_extraspecial(P); }) == ErrorCode::Param);

  const ClassTwoPresentation E = family(extraspecial(3, 1, 2));
  const auto fs = decompose_extraspecial(E);
  REQUIRE(fs.size() == 2);
  const ClassTwoGroup G(E);
  CHECK(fs[0].g1 == G.a(0));
  CHECK(fs[0].g2 == G.a(1));
  CHECK(fs[1].g1 == G.a(2));
  CHECK(fs[1].g2 == G.a(3));
  check_factors_commute(E, fs);

  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + trial % 2;
    const int s = 1 + (trial / 2) % 2;
    std::vector<std::pair<long, long>> powers;
    for (int i = 0; i < r; ++i) powers.emplace_back(uniform(0, 8), uniform(0, 8));
    for (auto& [x, y] : powers) {
      x %= ipow(3, s).get_si();
      y %= ipow(3, s).get_si();
    }
    const ClassTwoPresentation base = family(extraspecial(3, s, r, powers));
    const ClassTwoPresentation mixed = change_generators(base, random_unimodular(static_cast<std::size_t>(2 * r)));
    REQUIRE(validate(mixed).empty());
    CHECK(is_s_extraspecial(mixed));
    CHECK(group_order(mixed) == group_order(base));
    CHECK(schur_multiplier(mixed).multiplier.isomorphic(schur_multiplier(base).multiplier));
    const auto parts = decompose_extraspecial(mixed);
    CHECK(parts.size() == static_cast<std::size_t>(r));
    check_factors_commute(mixed, parts);
  }
}

TEST_CASE("change of generators") {
  const ClassTwoPresentation P = family(gjk(3, 2, 3, 2, 1, {1, 2}));
  CHECK(change_generators(P, IntMatrix::identity(3)) == P);
  IntMatrix swap(3, 3);
  swap(1, 0) = 1;
  swap(0, 1) = 1;
  swap(2, 2) = 1;
  const ClassTwoPresentation Q = change_generators(P, swap);
  CHECK(Q.commutator_of(0, 1) == P.commutator_of(1, 0));
  CHECK(Q.alpha[0] == P.alpha[1]);
  CHECK(error_of([&] { change_generators(P, IntMatrix{{3, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }) == ErrorCode::Param);
}

TEST_CASE("realizer") {
  const Realization r1 = realize({3, 2, 1, {1}});
  CHECK(r1.spec.kind == FamilyKind::GJK);
  CHECK(r1.spec.d == 3);
  CHECK(r1.spec.j == 2);
  CHECK(r1.spec.k == 1);
  CHECK(r1.spec.t == std::vector<int>{1, 2});
  CHECK(r1.multiplier.to_string() == "C9 x C3");

  const Realization r2 = realize({3, 1, 0, {0}});
  CHECK(r2.multiplier.is_trivial());
  CHECK(r2.spec.d == 2);

  const TargetAbelian tri = target_from_triple(3, 2, 1, 1);
  CHECK(target_group(tri).to_string() == "C9 x C3 x C3");
  CHECK(realize(tri).multiplier.to_string() == "C9 x C3 x C3");

  CHECK(error_of([] { realize({3, 2, 2, {1, 1}}); }) == ErrorCode::NotCovered);
  CHECK_FALSE(target_covered({3, 2, 2, {1, 1}}));
  CHECK(target_covered({3, 2, 3, {1, 1}}));
  CHECK(error_of([] { realize({3, 1, 1, {1}}); }) == ErrorCode::Param);
  CHECK(error_of([] { realize({4, 1, 1, {}}); }) == ErrorCode::Param);
}
