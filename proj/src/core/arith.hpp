#pragma once

// Exact integer matrix algebra: Smith and Hermite normal forms, and linear
// congruence solving by lifting to an integer system.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schurmult {

using Int = mpz_class;
using IntVec = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  IntMatrix transposed() const;
  bool is_zero() const;

  // Elementary operations; the column variants act on the right.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVec operator*(const IntMatrix& a, const IntVec& x);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ...
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  /// Diagonal of D, min(rows, cols) entries, zeros last.
  IntVec diagonal() const;
};

SNFResult snf(const IntMatrix& a);

/// Same as snf() but also returns V^-1, needed to read off subgroup bases.
struct SNFWithInverse {
  SNFResult snf;
  IntMatrix V_inv;
};
SNFWithInverse snf_with_inverse(const IntMatrix& a);

/// Column-style Hermite normal form H = A * U.
IntMatrix hnf(const IntMatrix& a);

struct HNFResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};
HNFResult hnf_with_transform(const IntMatrix& a);

/// Finds x with A x = b (mod moduli[i] in row i). Entries of x are reduced
/// into [0, max modulus). Returns nullopt when no solution exists.
std::optional<IntVec> solve_mod(const IntMatrix& a, std::span<const Int> b,
                                std::span<const Int> moduli);

/// Generators of {x : A x = 0 (mod moduli)}. When col_moduli is non-empty the
/// generators are reduced modulo it and zero vectors are dropped; otherwise
/// they are integer vectors spanning the full integer solution lattice.
std::vector<IntVec> kernel_mod(const IntMatrix& a, std::span<const Int> moduli,
                               std::span<const Int> col_moduli = {});

/// Exact determinant (fraction-free elimination).
Int determinant(const IntMatrix& a);

Int ipow(long base, unsigned long exp);

/// Largest e with p^e | x; x must be nonzero.
int valuation(const Int& x, long p);

/// Non-negative residue of x modulo m.
Int mod_floor(const Int& x, const Int& m);

}  // namespace schurmult
