#include "schurmult/schurmult.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/commands.hpp"
#include "core/error.hpp"

struct sm_presentation {
  schurmult::ClassTwoPresentation value;
};

struct sm_report {
  schurmult::Report value;
};

namespace {

using schurmult::Error;
using schurmult::ErrorCode;

thread_local std::string last_error;

sm_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return SM_E_PARSE;
    case ErrorCode::Invalid: return SM_E_INVALID;
    case ErrorCode::Param: return SM_E_PARAM;
    case ErrorCode::NotCovered: return SM_E_NOT_COVERED;
    case ErrorCode::Bound: return SM_E_BOUND;
    case ErrorCode::Dimension: return SM_E_DIMENSION;
    case ErrorCode::Consistency: return SM_E_CONSISTENCY;
    case ErrorCode::Internal: return SM_E_INTERNAL;
  }
  return SM_E_INTERNAL;
}

sm_status fail(sm_status status, const std::string& message) {
  last_error = message;
  return status;
}

/// Runs f, translating exceptions into status codes.
template <class F>
sm_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SM_E_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
sm_status make_report(sm_report** out, F&& f) {
  if (!out) return fail(SM_E_ARG, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new sm_report{f()};
    return SM_OK;
  });
}

template <class F>
sm_status with_presentation(const sm_presentation* P, sm_report** out, F&& f) {
  if (!P) return fail(SM_E_ARG, "null presentation");
  return make_report(out, [&] { return f(P->value); });
}

}  // namespace

extern "C" {

const char* sm_status_name(sm_status status) {
  switch (status) {
    case SM_OK: return "OK";
    case SM_E_ARG: return "E_ARG";
    case SM_E_PARSE: return schurmult::error_code_name(ErrorCode::Parse);
    case SM_E_INVALID: return schurmult::error_code_name(ErrorCode::Invalid);
    case SM_E_PARAM: return schurmult::error_code_name(ErrorCode::Param);
    case SM_E_NOT_COVERED: return schurmult::error_code_name(ErrorCode::NotCovered);
    case SM_E_BOUND: return schurmult::error_code_name(ErrorCode::Bound);
    case SM_E_DIMENSION: return schurmult::error_code_name(ErrorCode::Dimension);
    case SM_E_CONSISTENCY: return schurmult::error_code_name(ErrorCode::Consistency);
    case SM_E_INTERNAL: return schurmult::error_code_name(ErrorCode::Internal);
  }
  return "E_UNKNOWN";
}

int sm_exit_code(sm_status status) {
  if (status == SM_OK) return 0;
  return status == SM_E_CONSISTENCY || status == SM_E_INTERNAL ? 2 : 1;
}

const char* sm_last_error(void) { return last_error.c_str(); }

void sm_string_free(char* s) { std::free(s); }

sm_status sm_presentation_parse(const char* text, sm_presentation** out) {
  if (!text || !out) return fail(SM_E_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new sm_presentation{schurmult::parse_presentation(text)};
    return SM_OK;
  });
}

sm_status sm_presentation_serialize(const sm_presentation* P, char** out) {
  if (!P || !out) return fail(SM_E_ARG, "null argument");
  return guarded([&] {
    *out = copy_string(schurmult::serialize(P->value));
    return SM_OK;
  });
}

void sm_presentation_free(sm_presentation* P) { delete P; }

sm_status sm_validate(const sm_presentation* P, sm_report** out) {
  return with_presentation(P, out, [](const auto& Q) { return schurmult::run_validate(Q); });
}

sm_status sm_order(const sm_presentation* P, sm_report** out) {
  return with_presentation(P, out, [](const auto& Q) { return schurmult::run_order(Q); });
}

sm_status sm_schur(const sm_presentation* P, unsigned flags, sm_report** out) {
  schurmult::SchurOptions opts;
  opts.witness = (flags & SM_SCHUR_WITNESS) != 0;
  opts.check_order = (flags & SM_SCHUR_CHECK_ORDER) != 0;
  return with_presentation(P, out, [&](const auto& Q) { return schurmult::run_schur(Q, opts); });
}

sm_status sm_epicenter(const sm_presentation* P, const char* subgroup, sm_report** out) {
  return with_presentation(P, out, [&](const auto& Q) {
    std::optional<std::vector<schurmult::GroupVec>> z;
    if (subgroup) z = schurmult::parse_subgroup(subgroup, Q.k());
    return schurmult::run_epicenter(Q, z);
  });
}

sm_status sm_decompose(const sm_presentation* P, sm_report** out) {
  return with_presentation(P, out, [](const auto& Q) { return schurmult::run_decompose(Q); });
}

sm_status sm_oracle(const sm_presentation* P, uint64_t max_order, sm_report** out) {
  return with_presentation(P, out, [&](const auto& Q) { return schurmult::run_oracle(Q, max_order); });
}

sm_family_params sm_family_defaults(void) {
  sm_family_params params{};
  params.family = "gk";
  params.p = 3;
  params.s = 1;
  params.d = 2;
  params.j = 1;
  params.r = 1;
  params.row = 1;
  params.cyclic_t = -1;
  return params;
}

sm_status sm_family(const sm_family_params* params, sm_report** out) {
  if (!params || !params->family) return fail(SM_E_ARG, "null family parameters");
  if ((params->t_len && !params->t) || (params->powers_len && !params->powers))
    return fail(SM_E_ARG, "null array with nonzero length");
  if (params->powers_len % 2 != 0) return fail(SM_E_ARG, "powers must hold (x1, x2) pairs");
  return make_report(out, [&] {
    schurmult::FamilySpec spec;
    spec.kind = schurmult::parse_family_name(params->family);
    spec.p = params->p;
    spec.s = params->s;
    spec.d = params->d;
    spec.k = params->k;
    spec.j = params->j;
    spec.t.assign(params->t, params->t + params->t_len);
    spec.r = params->r;
    for (std::size_t i = 0; i < params->powers_len; i += 2)
      spec.powers.emplace_back(params->powers[i], params->powers[i + 1]);
    spec.row = params->row;
    if (params->cyclic_t >= 0) spec.cyclic_t = params->cyclic_t;
    return schurmult::run_family(spec);
  });
}

sm_status sm_realize(const sm_target* target, sm_report** out) {
  if (!target || (target->m_len && !target->m)) return fail(SM_E_ARG, "null target");
  return make_report(out, [&] {
    schurmult::TargetAbelian t;
    t.p = target->p;
    t.s = target->s;
    t.n = target->n;
    t.m.assign(target->m, target->m + target->m_len);
    return schurmult::run_realize(t);
  });
}

sm_status sm_realize_triple(long p, int n1, int n2, int n3, sm_report** out) {
  return make_report(out, [&] { return schurmult::run_realize(schurmult::target_from_triple(p, n1, n2, n3)); });
}

sm_status sm_report_text(const sm_report* r, char** out) {
  if (!r || !out) return fail(SM_E_ARG, "null argument");
  return guarded([&] {
    *out = copy_string(schurmult::render_text(r->value));
    return SM_OK;
  });
}

sm_status sm_report_json(const sm_report* r, char** out) {
  if (!r || !out) return fail(SM_E_ARG, "null argument");
  return guarded([&] {
    *out = copy_string(schurmult::serialize_report(r->value));
    return SM_OK;
  });
}

sm_status sm_report_presentation(const sm_report* r, char** out) {
  if (!r || !out) return fail(SM_E_ARG, "null argument");
  const auto& d = r->value.details;
  if (!d.contains("presentation")) {
    return fail(SM_E_PARAM, "a direct cyclic factor of order other than p^s has no presentation in this format");
  }
  return guarded([&] {
    *out = copy_string(d["presentation"].get<std::string>());
    return SM_OK;
  });
}

long sm_report_prime(const sm_report* r) { return r ? r->value.p : 0; }

size_t sm_report_factor_count(const sm_report* r) { return r ? r->value.factors.size() : 0; }

int sm_report_factor(const sm_report* r, size_t i) {
  if (!r || i >= r->value.factors.size()) return -1;
  return r->value.factors[i];
}

int sm_report_exit_status(const sm_report* r) { return r ? r->value.status : 1; }

void sm_report_free(sm_report* r) { delete r; }

}  // extern "C"
