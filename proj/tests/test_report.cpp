#include "doctest.h"

#include <string>

#include "core/commands.hpp"
#include "core/error.hpp"
#include "support.hpp"

using namespace schurmult;
using namespace schurmult::testing;

namespace {

bool contains_text(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("json round trip") {
  const Report r = run_schur(family(gk(3, 1, 4, 2)), {true, true});
  CHECK(parse_report(serialize_report(r)) == r);
  const nlohmann::json j = report_to_json(r);
  CHECK(j["p"] == 3);
  CHECK(j["factors"].size() == 11);
  CHECK(j["trace"]["X"] == 4);
  CHECK(serialize_report(r).find('\n') == std::string::npos);

  CHECK_THROWS_AS(parse_report("{"), Error);
  CHECK_THROWS_AS(parse_report("{\"p\": 3}"), Error);
}

TEST_CASE("large integers serialize as strings") {
  const Report r = run_order(family(gk(5, 2, 5, 3)));
  CHECK(r.details["log_order"] == 18);
  CHECK(r.details["order"] == 3814697265625LL);
  CHECK(parse_report(serialize_report(r)) == r);
  // 3^40 does not fit in a long.
  const Report big = run_order(family(gjk(3, 5, 5, 3, 3, {5, 5, 5})));
  CHECK(big.details["order"].is_string());
}

TEST_CASE("text rendering") {
  const Report s = run_schur(family(gk(3, 1, 2, 0)), {false, true});
  const std::string text = render_text(s);
  CHECK(contains_text(text, "M(G) = C3 x C3\n"));
  CHECK(contains_text(text, "|X| = 3^0"));
  CHECK(contains_text(text, "[ok]"));

  CHECK(render_text(run_order(family(gk(3, 1, 2, 0)))) == "|G| = 27 = 3^3\n");
  CHECK(render_text(run_validate(family(gk(3, 1, 2, 0)))) == "valid\n");
  const Report bad = run_validate(ClassTwoPresentation::zero(3, 1, 2, {1}));
  CHECK(bad.status == 1);
  CHECK(render_text(bad) == "invalid:\n  - abelian input\n");

  const std::string fam = render_text(run_family(gk(3, 1, 4, 2)));
  CHECK(contains_text(fam, "G = gk(p=3, s=1, d=4, k=2)"));
  CHECK(contains_text(fam, "expected M(G) = C3^11"));
  CHECK(contains_text(fam, "computed M(G) = C3^11 [agrees]"));

  const std::string es = render_text(run_family(extraspecial(3, 1, 1)));
  CHECK(contains_text(es, "no closed form"));

  const std::string dec = render_text(run_decompose(family(extraspecial(3, 2, 2, {{1, 4}, {0, 0}}))));
  CHECK(contains_text(dec, "central product of 2 s-extraspecial factors"));
  CHECK(contains_text(dec, "g1 = a1, g2 = a2, [g1,g2] = b1, g1^(p^s) = b1, g2^(p^s) = b1^4"));

  const std::string rea = render_text(run_realize({3, 2, 1, {1}}));
  CHECK(contains_text(rea, "target = C9 x C3"));
  CHECK(contains_text(rea, "realized by gjk(p=3, s=2, d=3, j=2, k=1, t=1,2)"));

  CHECK(render_text(run_oracle(family(gk(3, 1, 2, 0)))) == "order(M) = 9 [agrees with pipeline]\n");
}

TEST_CASE("epicenter command") {
  const ClassTwoPresentation E = family(extraspecial(3, 1, 2));
  const Report r = run_epicenter(E, parse_subgroup("2", 1));
  CHECK(r.factors == std::vector<int>{1});
  CHECK(r.details["contains"] == true);
  const Report g = run_epicenter(family(gk(3, 1, 2, 0)), parse_subgroup("-1", 1));
  CHECK(g.factors.empty());
  CHECK(g.details["contains"] == false);

  CHECK(parse_subgroup("1,0;0,1", 2).size() == 2);
  CHECK_THROWS_AS(parse_subgroup("1,0;0", 2), Error);
  CHECK_THROWS_AS(parse_subgroup("x", 1), Error);
  CHECK_THROWS_AS(parse_subgroup("", 1), Error);
}

TEST_CASE("family presentations with a cyclic factor") {
  // Z_{p^s} can be added as a generator; smaller cyclic factors cannot.
  const Report full = run_family(table_row(3, 2, 1, {}, 2));
  REQUIRE(full.details.contains("presentation"));
  const ClassTwoPresentation P = parse_presentation(full.details["presentation"].get<std::string>());
  CHECK(run_schur(P).factors == full.factors);
  CHECK_FALSE(run_family(table_row(3, 2, 1, {}, 1)).details.contains("presentation"));
}

TEST_CASE("exit statuses") {
  CHECK(exit_status(ErrorCode::Parse) == 1);
  CHECK(exit_status(ErrorCode::NotCovered) == 1);
  CHECK(exit_status(ErrorCode::Consistency) == 2);
  CHECK(exit_status(ErrorCode::Internal) == 2);
}
