// Exercises the shared library through its C interface only.

#include "doctest.h"

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "schurmult/schurmult.h"

namespace {

const char* kG0 = "p 3\ns 1\nd 2\nt 1\ncomm 1 2 : 1\n";

std::string take(char* s) {
  std::string out(s);
  sm_string_free(s);
  return out;
}

sm_presentation* parse(const char* text) {
  sm_presentation* P = nullptr;
  REQUIRE(sm_presentation_parse(text, &P) == SM_OK);
  return P;
}

}  // namespace

TEST_CASE("status names and exit codes") {
  CHECK(std::strcmp(sm_status_name(SM_OK), "OK") == 0);
  CHECK(std::strcmp(sm_status_name(SM_E_PARSE), "E_PARSE") == 0);
  CHECK(std::strcmp(sm_status_name(SM_E_NOT_COVERED), "E_NOT_COVERED") == 0);
  CHECK(std::strcmp(sm_status_name(SM_E_CONSISTENCY), "E_CONSISTENCY") == 0);
  CHECK(sm_exit_code(SM_OK) == 0);
  CHECK(sm_exit_code(SM_E_INVALID) == 1);
  CHECK(sm_exit_code(SM_E_CONSISTENCY) == 2);
  CHECK(sm_exit_code(SM_E_INTERNAL) == 2);
}

TEST_CASE("presentations") {
  sm_presentation* P = parse(kG0);
  char* text = nullptr;
  REQUIRE(sm_presentation_serialize(P, &text) == SM_OK);
  CHECK(take(text) == kG0);
  sm_presentation_free(P);

  sm_presentation* bad = nullptr;
  CHECK(sm_presentation_parse("p 3\n", &bad) == SM_E_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(sm_last_error()).find("line") != std::string::npos);
  CHECK(sm_presentation_parse(nullptr, &bad) == SM_E_ARG);
  sm_presentation_free(nullptr);
}

TEST_CASE("schur through the C API") {
  sm_presentation* P = parse(kG0);
  sm_report* r = nullptr;
  REQUIRE(sm_schur(P, SM_SCHUR_CHECK_ORDER | SM_SCHUR_WITNESS, &r) == SM_OK);
  CHECK(sm_report_prime(r) == 3);
  REQUIRE(sm_report_factor_count(r) == 2);
  CHECK(sm_report_factor(r, 0) == 1);
  CHECK(sm_report_factor(r, 1) == 1);
  CHECK(sm_report_factor(r, 2) == -1);
  CHECK(sm_report_exit_status(r) == 0);
  char* s = nullptr;
  REQUIRE(sm_report_text(r, &s) == SM_OK);
  CHECK(take(s).rfind("M(G) = C3 x C3\n", 0) == 0);
  REQUIRE(sm_report_json(r, &s) == SM_OK);
  const std::string json = take(s);
  CHECK(json.find("\"factors\":[1,1]") != std::string::npos);
  CHECK(json.find("\"witness\"") != std::string::npos);
  CHECK(sm_report_presentation(r, &s) == SM_E_PARAM);
  sm_report_free(r);
  sm_presentation_free(P);

  CHECK(sm_schur(nullptr, 0, &r) == SM_E_ARG);
}

TEST_CASE("errors map to status codes") {
  sm_presentation* A = parse("p 3\ns 1\nd 2\nt 1\n");
  sm_report* r = nullptr;
  CHECK(sm_schur(A, 0, &r) == SM_E_INVALID);
  CHECK(r == nullptr);
  CHECK(std::string(sm_last_error()).find("abelian input") != std::string::npos);
  REQUIRE(sm_validate(A, &r) == SM_OK);
  CHECK(sm_report_exit_status(r) == 1);
  sm_report_free(r);
  CHECK(sm_decompose(A, &r) == SM_E_INVALID);
  sm_presentation_free(A);

  sm_presentation* G = parse("p 3\ns 1\nd 4\nt 1\ncomm 1 2 : 1\ncomm 3 4 : 1\n");
  CHECK(sm_oracle(G, 100, &r) == SM_E_BOUND);
  CHECK(sm_epicenter(G, "1,1", &r) == SM_E_PARSE);
  REQUIRE(sm_epicenter(G, "1", &r) == SM_OK);
  sm_report_free(r);
  REQUIRE(sm_decompose(G, &r) == SM_OK);
  sm_report_free(r);
  sm_presentation_free(G);
}

TEST_CASE("families and realization") {
  sm_family_params fp = sm_family_defaults();
  fp.d = 4;
  fp.k = 2;
  sm_report* r = nullptr;
  REQUIRE(sm_family(&fp, &r) == SM_OK);
  CHECK(sm_report_factor_count(r) == 11);
  char* s = nullptr;
  REQUIRE(sm_report_presentation(r, &s) == SM_OK);
  sm_presentation* P = parse(s);
  sm_string_free(s);
  sm_report* again = nullptr;
  REQUIRE(sm_schur(P, 0, &again) == SM_OK);
  CHECK(sm_report_factor_count(again) == 11);
  sm_report_free(again);
  sm_presentation_free(P);
  sm_report_free(r);

  const long powers[] = {1, 4, 2, 0};
  fp = sm_family_defaults();
  fp.family = "extraspecial";
  fp.s = 2;
  fp.r = 2;
  fp.powers = powers;
  fp.powers_len = 4;
  REQUIRE(sm_family(&fp, &r) == SM_OK);
  CHECK(sm_report_factor_count(r) == 5);
  CHECK(sm_report_factor(r, 0) == 2);
  sm_report_free(r);
  fp.powers_len = 3;
  CHECK(sm_family(&fp, &r) == SM_E_ARG);
  fp.family = "nope";
  fp.powers_len = 4;
  CHECK(sm_family(&fp, &r) == SM_E_PARAM);

  const int m[] = {1};
  const sm_target target{3, 2, 1, m, 1};
  REQUIRE(sm_realize(&target, &r) == SM_OK);
  CHECK(sm_report_factor_count(r) == 2);
  sm_report_free(r);
  const int mm[] = {1, 1};
  const sm_target uncovered{3, 2, 2, mm, 2};
  CHECK(sm_realize(&uncovered, &r) == SM_E_NOT_COVERED);
  REQUIRE(sm_realize_triple(3, 2, 1, 1, &r) == SM_OK);
  CHECK(sm_report_factor_count(r) == 3);
  sm_report_free(r);
}

TEST_CASE("last error is per thread") {
  sm_presentation* bad = nullptr;
  REQUIRE(sm_presentation_parse("garbage", &bad) == SM_E_PARSE);
  std::string other;
  std::thread([&] {
    sm_presentation* P = nullptr;
    sm_presentation_parse(kG0, &P);
    other = sm_last_error();
    sm_presentation_free(P);
  }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(sm_last_error()).empty());
}
