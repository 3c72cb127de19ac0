#pragma once

// Shared generators for the test suites. All randomness is seeded.

#include <optional>
#include <random>
#include <vector>

#include "core/arith.hpp"
#include "core/families.hpp"
#include "core/presentation.hpp"

namespace schurmult::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5c4u);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound) {
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = uniform(-bound, bound);
  return a;
}

/// Random unimodular n x n matrix: a product of elementary operations.
inline IntMatrix random_unimodular(std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    u.add_col_multiple(i, j, Int(uniform(-2, 2)));
    if (uniform(0, 3) == 0) u.swap_cols(i, j);
  }
  return u;
}

/// Random presentation passing validation.
inline ClassTwoPresentation random_presentation(long p, int s, int d, int k) {
  for (;;) {
    std::vector<int> t(static_cast<std::size_t>(k));
    for (auto& x : t) x = static_cast<int>(uniform(1, s));
    ClassTwoPresentation P = ClassTwoPresentation::zero(p, s, d, t);
    auto fill = [&](IntVec& w) {
      for (std::size_t n = 0; n < w.size(); ++n) w[n] = uniform(0, ipow(p, static_cast<unsigned long>(t[n])).get_si() - 1);
    };
    for (auto& g : P.gamma) fill(g);
    for (auto& a : P.alpha)
      if (uniform(0, 1)) fill(a);
    if (validate(P).empty()) return P;
  }
}

inline ClassTwoPresentation family(FamilySpec spec) { return build(spec).presentation; }

inline FamilySpec gk(long p, int s, int d, int k) {
  FamilySpec f;
  f.kind = FamilyKind::GK;
  f.p = p;
  f.s = s;
  f.d = d;
  f.k = k;
  return f;
}

inline FamilySpec gkgap(long p, int s, int d, int k) {
  FamilySpec f = gk(p, s, d, k);
  f.kind = FamilyKind::GKGap;
  return f;
}

inline FamilySpec gjk(long p, int s, int d, int j, int k, std::vector<int> t) {
  FamilySpec f = gk(p, s, d, k);
  f.kind = FamilyKind::GJK;
  f.j = j;
  f.t = std::move(t);
  return f;
}

inline FamilySpec extraspecial(long p, int s, int r, std::vector<std::pair<long, long>> powers = {}) {
  FamilySpec f;
  f.kind = FamilyKind::Extraspecial;
  f.p = p;
  f.s = s;
  f.r = r;
  f.powers = std::move(powers);
  return f;
}

inline FamilySpec table_row(long p, int s, int row, std::vector<int> t, std::optional<int> cyclic_t = std::nullopt) {
  FamilySpec f;
  f.kind = FamilyKind::Table;
  f.p = p;
  f.s = s;
  f.row = row;
  f.t = std::move(t);
  f.cyclic_t = cyclic_t;
  return f;
}

}  // namespace schurmult::testing
