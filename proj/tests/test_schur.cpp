#include "doctest.h"

#include "core/error.hpp"
#include "core/schur.hpp"
#include "support.hpp"

using namespace schurmult;
using namespace schurmult::testing;

namespace {

ClassTwoPresentation g0() { return family(gk(3, 1, 2, 0)); }

GroupVec unit(std::size_t n, std::size_t i, long c = 1) {
  GroupVec v(n);
  v[i] = c;
  return v;
}

}  // namespace

TEST_CASE("X1 from Jacobi triples") {
  CHECK(generate_X1(g0()).log_order() == 0);

  ClassTwoPresentation P = ClassTwoPresentation::zero(3, 1, 3, {1});
  P.set_commutator(0, 1, {1});
  const SubgroupData X1 = generate_X1(P);
  CHECK(X1.log_order() == 1);
  const TensorProduct VW = tensor(P.V(), P.W());
  CHECK(contains(X1, VW.apply(unit(3, 2), unit(1, 0))));
  CHECK_FALSE(contains(X1, VW.apply(unit(3, 0), unit(1, 0))));
}

TEST_CASE("X2 from v (x) f(v)") {
  CHECK(generate_X2(g0()).log_order() == 0);

  for (int t = 1; t <= 2; ++t) {
    const ClassTwoPresentation P = family(gjk(3, 2, 2, 1, 0, {t}));
    const SubgroupData X2 = generate_X2(P);
    const TensorProduct VW = tensor(P.V(), P.W());
    CHECK(contains(X2, VW.apply(unit(2, 0), unit(1, 0))));
    CHECK(contains(X2, VW.apply(unit(2, 1), unit(1, 0))));
    CHECK(X2.log_order() == 2 * t);
  }

  // j = k + 1: X has order p^{d * sum t_i}.
  const ClassTwoPresentation J = family(gjk(3, 2, 3, 2, 1, {1, 2}));
  CHECK(generate_X(J).log_order() == 3 * 3);
}

TEST_CASE("X and N") {
  const ClassTwoPresentation G41 = family(gk(3, 1, 4, 1));
  CHECK(generate_X(G41).log_order() == 3);
  CHECK(compute_N(G41).group.log_order() == 5);

  const ClassTwoPresentation E = family(extraspecial(3, 1, 2));
  const SchurPipeline pipe(E);
  CHECK(pipe.X().log_order() == 4);
  CHECK(pipe.X().log_order() == pipe.VW().group.log_order());
  CHECK(pipe.N().group.is_trivial());

  CHECK(compute_N(g0()).group.exps() == std::vector<int>{1, 1});
}

TEST_CASE("sigma") {
  CHECK(sigma(g0()).matrix.is_zero());

  const ClassTwoPresentation F = family(gjk(3, 1, 2, 1, 0, {1}));
  const SchurPipeline pf(F);
  CHECK(pf.N().group.is_zero(pf.sigma().apply(unit(1, 0))));

  SUBCASE("well-definedness probes") {
    std::vector<ClassTwoPresentation> cases{family(gjk(3, 2, 3, 2, 1, {1, 2})), family(gk(5, 1, 4, 2)),
                                            family(table_row(3, 2, 5, {1, 2})),
                                            family(extraspecial(3, 2, 2, {{1, 4}, {3, 0}}))};
    for (int i = 0; i < 6; ++i) cases.push_back(random_presentation(3, 2, 2 + i % 3, 1 + i % 3));
    for (const auto& P : cases) {
      const SchurPipeline pipe(P);
      const auto d = static_cast<std::size_t>(P.d);
      const Quotient& N = pipe.N();
      std::vector<GroupVec> probes;
      for (std::size_t i = 0; i < d; ++i) probes.push_back(unit(d, i));
      for (int r = 0; r < 200; ++r) {
        GroupVec v(d);
        for (auto& x : v) x = uniform(0, P.s_modulus().get_si() - 1);
        probes.push_back(v);
      }
      for (const auto& v : probes) CHECK(N.group.is_zero(pipe.sigma_pairing(v, v)));
      // Alternating and consistent with the matrix on basis pairs.
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          const GroupVec s = pipe.sigma_pairing(unit(d, i), unit(d, j));
          CHECK(N.group.is_zero(N.group.add(s, pipe.sigma_pairing(unit(d, j), unit(d, i)))));
          CHECK(s == pipe.sigma().apply(unit(pipe.wedge().group.rank(), pipe.wedge().pair_index(i, j))));
        }
      CHECK(pipe.sigma().order_compatible());
    }
  }
}

TEST_CASE("M* and ker rho") {
  SUBCASE("sigma = 0 splits") {
    const ClassTwoPresentation P = family(gk(3, 2, 3, 1));
    const SchurPipeline pipe(P);
    REQUIRE(pipe.sigma().matrix.is_zero());
    std::vector<int> both = pipe.wedge().group.exps();
    for (int e : pipe.N().group.exps()) both.push_back(e);
    CHECK(pipe.mstar().group.group.isomorphic(AbelianPGroup(3, both).canonical()));
  }
  SUBCASE("order of M* on random presentations") {
    for (int i = 0; i < 20; ++i) {
      const ClassTwoPresentation P = random_presentation(i % 2 ? 3 : 5, 1 + i % 2, 2 + i % 3, 1 + i % 3);
      const SchurPipeline pipe(P);
      CHECK(pipe.mstar().group.group.log_order() == pipe.wedge().group.log_order() + pipe.N().group.log_order());
      CHECK(pipe.mstar().lifts == pipe.wedge().group.rank());
    }
  }
  ClassTwoPresentation H = ClassTwoPresentation::zero(5, 2, 2, {2});
  H.set_commutator(0, 1, {1});
  CHECK(kernel_rho(H).log_order() == 0);
  CHECK(kernel_rho(g0()).log_order() == 0);
  CHECK(kernel_rho(family(extraspecial(3, 1, 2))).log_order() == 5);
}

TEST_CASE("multipliers of named groups") {
  CHECK(schur_multiplier(g0()).multiplier.exps() == std::vector<int>{1, 1});
  CHECK(schur_multiplier(family(gjk(3, 2, 3, 2, 1, {1, 2}))).multiplier.exps() == std::vector<int>{2, 1});
  CHECK(schur_multiplier(family(extraspecial(3, 1, 2))).multiplier.to_string() == "C3^5");
  const SchurResult r = schur_multiplier(family(gk(3, 1, 4, 2)));
  CHECK(r.multiplier.log_order() == 11);
  CHECK(r.trace.log_M == 11);
  CHECK(schur_multiplier(family(gkgap(3, 1, 4, 1))).multiplier.log_order() == 8);
  CHECK_THROWS_AS(SchurPipeline(ClassTwoPresentation::zero(3, 1, 2, {1})), Error);
}

TEST_CASE("order identity and exponent bounds") {
  for (const auto& spec : {gk(3, 1, 4, 2), gkgap(3, 1, 4, 1), gjk(5, 2, 3, 1, 1, {2}), extraspecial(3, 2, 3)})
    CHECK(order_formula_check(family(spec)));
  for (int i = 0; i < 100; ++i) {
    const ClassTwoPresentation P = random_presentation(i % 3 ? 3 : 5, 1 + i % 2, 2 + i % 3, 1 + i % 3);
    const SchurResult r = schur_multiplier(P);
    CAPTURE(serialize(P));
    CHECK(order_formula_check(r));
    CHECK(r.multiplier.log_exponent() <= 2 * P.s);
  }
  for (int d = 2; d <= 5; ++d)
    for (int k = 0; k <= d - 2; ++k)
      CHECK(schur_multiplier(family(gk(3, 2, d, k))).multiplier.log_exponent() <= 2);
}

TEST_CASE("epicenter") {
  const ClassTwoPresentation E = family(extraspecial(3, 1, 2));
  CHECK(epicenter_part(E).log_order() == E.W().log_order());
  CHECK(epicenter_contains(E, {GroupVec{Int(1)}}));
  CHECK(epicenter_contains(E, {}));
  CHECK(epicenter_part(g0()).log_order() == 0);
  CHECK_FALSE(epicenter_contains(g0(), {GroupVec{Int(1)}}));
  CHECK(epicenter_contains(g0(), {GroupVec{Int(0)}}));
  CHECK_THROWS_AS(epicenter_contains(g0(), {GroupVec{Int(1), Int(0)}}), Error);
}
