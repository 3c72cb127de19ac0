#include "doctest.h"

#include <vector>

#include "core/arith.hpp"
#include "core/error.hpp"
#include "support.hpp"

using namespace schurmult;
using schurmult::testing::random_matrix;
using schurmult::testing::uniform;

namespace {

bool is_unimodular(const IntMatrix& u) {
  const Int det = determinant(u);
  return det == 1 || det == -1;
}

void check_snf(const IntMatrix& a) {
  const SNFWithInverse full = snf_with_inverse(a);
  const SNFResult& r = full.snf;
  REQUIRE(r.U * a * r.V == r.D);
  CHECK(is_unimodular(r.U));
  CHECK(is_unimodular(r.V));
  CHECK(r.V * full.V_inv == IntMatrix::identity(a.cols()));
  const IntVec diag = r.diagonal();
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < r.D.rows(); ++i)
    for (std::size_t j = 0; j < r.D.cols(); ++j)
      if (i != j) CHECK(r.D(i, j) == 0);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (diag[i] != 0) ++nonzero;
    if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    if (i + 1 < diag.size() && diag[i] == 0) CHECK(diag[i + 1] == 0);
  }
  CHECK(nonzero == r.rank);
  if (a.rows() == a.cols()) {
    Int prod = 1;
    for (const auto& x : diag) prod *= x;
    CHECK(abs(determinant(a)) == prod);
  }
}

void check_hnf(const IntMatrix& a) {
  const HNFResult r = hnf_with_transform(a);
  REQUIRE(a * r.U == r.H);
  CHECK(is_unimodular(r.U));
  // Column echelon form: pivot rows strictly increase, pivots are positive,
  // entries to the left of a pivot are reduced, columns past the rank vanish.
  std::size_t prev_row = 0;
  for (std::size_t c = 0; c < r.H.cols(); ++c) {
    std::size_t row = r.H.rows();
    for (std::size_t i = 0; i < r.H.rows(); ++i)
      if (r.H(i, c) != 0) {
        row = i;
        break;
      }
    if (c >= r.rank) {
      CHECK(row == r.H.rows());
      continue;
    }
    REQUIRE(row < r.H.rows());
    if (c > 0) CHECK(row > prev_row);
    prev_row = row;
    CHECK(r.H(row, c) > 0);
    for (std::size_t j = 0; j < c; ++j) {
      CHECK(r.H(row, j) >= 0);
      CHECK(r.H(row, j) < r.H(row, c));
    }
  }
  CHECK(r.rank == snf(a).rank);
}

}  // namespace

TEST_CASE("snf of small fixed matrices") {
  const SNFResult id = snf(IntMatrix{{1, 0}, {0, 1}});
  CHECK(id.D == IntMatrix::identity(2));
  CHECK(id.U == IntMatrix::identity(2));
  CHECK(id.V == IntMatrix::identity(2));

  const SNFResult zero = snf(IntMatrix(2, 3));
  CHECK(zero.D == IntMatrix(2, 3));
  CHECK(zero.rank == 0);

  const IntMatrix a{{2, 4}, {6, 8}};
  const SNFResult r = snf(a);
  CHECK(r.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(r.U * a * r.V == r.D);
}

TEST_CASE("snf invariants on 1000 random matrices") {
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rows = static_cast<std::size_t>(uniform(1, 6));
    const auto cols = static_cast<std::size_t>(uniform(1, 6));
    check_snf(random_matrix(rows, cols, trial % 3 == 0 ? 100 : 9));
  }
}

TEST_CASE("hnf of small fixed matrices") {
  CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
  CHECK(hnf(IntMatrix{{4}, {0}}) == IntMatrix{{4}, {0}});
  CHECK(hnf(IntMatrix{{2, 3}, {0, 0}}) == IntMatrix{{1, 0}, {0, 0}});
}

TEST_CASE("hnf invariants on 1000 random matrices") {
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rows = static_cast<std::size_t>(uniform(1, 6));
    const auto cols = static_cast<std::size_t>(uniform(1, 6));
    check_hnf(random_matrix(rows, cols, trial % 3 == 0 ? 100 : 9));
  }
}

TEST_CASE("solve_mod") {
  const std::vector<Int> nine{9};
  SUBCASE("fixed cases") {
    const std::vector<Int> five{5}, one{1}, six{6};
    const auto x = solve_mod(IntMatrix{{1}}, five, nine);
    REQUIRE(x);
    CHECK((*x)[0] == 5);
    CHECK_FALSE(solve_mod(IntMatrix{{3}}, one, nine));
    const auto y = solve_mod(IntMatrix{{3}}, six, nine);
    REQUIRE(y);
    CHECK(mod_floor(3 * (*y)[0] - 6, 9) == 0);
  }
  SUBCASE("random consistent systems") {
    for (int trial = 0; trial < 300; ++trial) {
      const auto rows = static_cast<std::size_t>(uniform(1, 4));
      const auto cols = static_cast<std::size_t>(uniform(1, 4));
      const IntMatrix a = random_matrix(rows, cols, 20);
      std::vector<Int> moduli(rows);
      for (auto& m : moduli) m = ipow(3, static_cast<unsigned long>(uniform(1, 3)));
      IntVec x0(cols);
      for (auto& v : x0) v = uniform(0, 26);
      IntVec b = a * x0;
      const auto x = solve_mod(a, b, moduli);
      REQUIRE(x);
      const IntVec ax = a * *x;
      for (std::size_t i = 0; i < rows; ++i) CHECK(mod_floor(ax[i] - b[i], moduli[i]) == 0);
    }
  }
  SUBCASE("dimension mismatch") {
    const std::vector<Int> b{1, 2};
    CHECK_THROWS_AS(solve_mod(IntMatrix{{1}}, b, nine), Error);
  }
}

TEST_CASE("kernel_mod") {
  const std::vector<Int> nine{9}, nines{9, 9};
  CHECK(kernel_mod(IntMatrix::identity(2), nines, nines).empty());

  const auto k = kernel_mod(IntMatrix{{3}}, nine, nine);
  REQUIRE(k.size() == 1);
  CHECK(mod_floor(k[0][0], 9) % 3 == 0);
  CHECK(mod_floor(k[0][0], 9) != 0);

  // 3x = 0 mod 3^s has a nontrivial solution because 3 | det.
  for (unsigned s = 1; s <= 3; ++s) {
    const std::vector<Int> q{ipow(3, s)};
    CHECK_FALSE(kernel_mod(IntMatrix{{3}}, q, q).empty());
  }

  SUBCASE("kernel size matches enumeration mod 3") {
    for (int trial = 0; trial < 100; ++trial) {
      const auto rows = static_cast<std::size_t>(uniform(1, 3));
      const auto cols = static_cast<std::size_t>(uniform(1, 3));
      const IntMatrix a = random_matrix(rows, cols, 5);
      const std::vector<Int> mods(rows, Int(9));
      const std::vector<Int> col_mods(cols, Int(9));
      const auto gens = kernel_mod(a, mods, col_mods);
      for (const auto& g : gens) {
        const IntVec ag = a * g;
        for (const auto& v : ag) CHECK(mod_floor(v, 9) == 0);
      }
      // Enumerate the span of gens and the true kernel in (Z_9)^cols.
      std::size_t total = 1;
      for (std::size_t c = 0; c < cols; ++c) total *= 9;
      std::vector<char> in_kernel(total, 0), in_span(total, 0);
      auto encode = [&](const IntVec& v) {
        std::size_t idx = 0;
        for (const auto& x : v) idx = idx * 9 + mod_floor(x, 9).get_ui();
        return idx;
      };
      for (std::size_t idx = 0; idx < total; ++idx) {
        IntVec v(cols);
        std::size_t rest = idx;
        for (std::size_t c = cols; c-- > 0;) {
          v[c] = static_cast<long>(rest % 9);
          rest /= 9;
        }
        bool zero = true;
        for (const auto& x : a * v) zero = zero && mod_floor(x, 9) == 0;
        in_kernel[idx] = zero;
      }
      std::vector<std::size_t> frontier{0};
      in_span[0] = 1;
      while (!frontier.empty()) {
        const std::size_t idx = frontier.back();
        frontier.pop_back();
        IntVec v(cols);
        std::size_t rest = idx;
        for (std::size_t c = cols; c-- > 0;) {
          v[c] = static_cast<long>(rest % 9);
          rest /= 9;
        }
        for (const auto& g : gens) {
          IntVec w = v;
          for (std::size_t c = 0; c < cols; ++c) w[c] += g[c];
          const std::size_t j = encode(w);
          if (!in_span[j]) {
            in_span[j] = 1;
            frontier.push_back(j);
          }
        }
      }
      CHECK(in_span == in_kernel);
    }
  }
}

TEST_CASE("scalar helpers") {
  CHECK(ipow(3, 0) == 1);
  CHECK(ipow(5, 3) == 125);
  CHECK(valuation(Int(54), 3) == 3);
  CHECK(valuation(Int(-7), 3) == 0);
  CHECK(mod_floor(Int(-1), Int(9)) == 8);
  CHECK(mod_floor(Int(18), Int(9)) == 0);
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}
