#include "core/arith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "core/error.hpp"

namespace schurmult {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::Invalid: return "E_INVALID";
    case ErrorCode::Param: return "E_PARAM";
    case ErrorCode::NotCovered: return "E_NOT_COVERED";
    case ErrorCode::Bound: return "E_BOUND";
    case ErrorCode::Dimension: return "E_DIMENSION";
    case ErrorCode::Consistency: return "E_CONSISTENCY";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_INTERNAL";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::Dimension, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::Dimension, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorCode::Dimension, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Int& s = (*this)(src, j);
    if (sgn(s) != 0) (*this)(dst, j) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Int& s = (*this)(i, src);
    if (sgn(s) != 0) (*this)(i, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::Dimension, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::Dimension, "matrix-vector shape mismatch");
  IntVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

IntVec SNFResult::diagonal() const {
  const std::size_t n = std::min(D.rows(), D.cols());
  IntVec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = D(i, i);
  return out;
}

namespace {

// Working state for SNF. Row operations are mirrored on U, column operations
// on V and (inverted, as row operations) on V^-1.
struct SnfState {
  IntMatrix d, u, v, vinv;
  bool track_inverse;

  void row_add(std::size_t dst, std::size_t src, const Int& f) {
    d.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void col_add(std::size_t dst, std::size_t src, const Int& f) {
    d.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
    if (track_inverse) vinv.add_row_multiple(src, dst, -f);
  }
  void row_swap(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    if (track_inverse) vinv.swap_rows(a, b);
  }
  void row_negate(std::size_t r) {
    d.negate_row(r);
    u.negate_row(r);
  }
};

bool abs_less(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

SNFWithInverse run_snf(const IntMatrix& a, bool track_inverse) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfState st{a, IntMatrix::identity(m), IntMatrix::identity(n),
              track_inverse ? IntMatrix::identity(n) : IntMatrix(), track_inverse};
  IntMatrix& d = st.d;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block, lowest row then column.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(d(i, j)) != 0 && (pr == m || abs_less(d(i, j), d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    st.row_swap(t, pr);
    st.col_swap(t, pc);

    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Int q = d(i, t) / d(t, t);
        st.row_add(i, t, -q);
        if (sgn(d(i, t)) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Int q = d(t, j) / d(t, t);
        st.col_add(j, t, -q);
        if (sgn(d(t, j)) != 0) residue = true;
      }
      if (residue) {
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d(i, t)) != 0 && abs_less(d(i, t), d(br, bc))) {
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(t, j)) != 0 && abs_less(d(t, j), d(br, bc))) {
            br = t;
            bc = j;
          }
        st.row_swap(t, br);
        st.col_swap(t, bc);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(i, j)) != 0 && d(i, j) % d(t, t) != 0) {
            st.row_add(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (sgn(d(t, t)) < 0) st.row_negate(t);
  }

  SNFWithInverse out;
  out.snf.U = std::move(st.u);
  out.snf.D = std::move(st.d);
  out.snf.V = std::move(st.v);
  out.snf.rank = t;
  out.V_inv = std::move(st.vinv);
  return out;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntMatrix lift_with_moduli(const IntMatrix& a, std::span<const Int> moduli) {
  const std::size_t r = a.rows(), n = a.cols();
  IntMatrix lifted(r, n + r);
  for (std::size_t i = 0; i < r; ++i) {
    if (sgn(moduli[i]) <= 0) throw Error(ErrorCode::Dimension, "moduli must be positive");
    for (std::size_t j = 0; j < n; ++j) lifted(i, j) = a(i, j);
    lifted(i, n + i) = moduli[i];
  }
  return lifted;
}

}  // namespace

SNFResult snf(const IntMatrix& a) { return run_snf(a, false).snf; }

SNFWithInverse snf_with_inverse(const IntMatrix& a) { return run_snf(a, true); }

HNFResult hnf_with_transform(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HNFResult out{a, IntMatrix::identity(n), 0};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    h.add_col_multiple(dst, src, f);
    u.add_col_multiple(dst, src, f);
  };

  std::size_t col = 0;
  for (std::size_t i = 0; i < m && col < n; ++i) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j)
        if (sgn(h(i, j)) != 0 && (best == n || abs_less(h(i, j), h(i, best)))) best = j;
      if (best == n) break;
      h.swap_cols(col, best);
      u.swap_cols(col, best);
      bool clean = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (sgn(h(i, j)) == 0) continue;
        col_add(j, col, -floor_div(h(i, j), h(i, col)));
        if (sgn(h(i, j)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(h(i, col)) == 0) continue;
    if (sgn(h(i, col)) < 0) {
      h.negate_col(col);
      u.negate_col(col);
    }
    for (std::size_t j = 0; j < col; ++j) col_add(j, col, -floor_div(h(i, j), h(i, col)));
    ++col;
  }
  out.rank = col;
  return out;
}

IntMatrix hnf(const IntMatrix& a) { return hnf_with_transform(a).H; }

std::optional<IntVec> solve_mod(const IntMatrix& a, std::span<const Int> b,
                                std::span<const Int> moduli) {
  const std::size_t r = a.rows(), n = a.cols();
  if (b.size() != r || moduli.size() != r)
    throw Error(ErrorCode::Dimension, "solve_mod: right-hand side or moduli length mismatch");
  if (r == 0) return IntVec(n);

  const HNFResult res = hnf_with_transform(lift_with_moduli(a, moduli));
  // The modulus columns make the lattice full rank, so H = [L | 0] with L
  // lower triangular and pivot (c, c) in every row.
  IntVec y(n + r);
  for (std::size_t c = 0; c < r; ++c) {
    Int rem = b[c];
    for (std::size_t j = 0; j < c; ++j) rem -= res.H(c, j) * y[j];
    if (rem % res.H(c, c) != 0) return std::nullopt;
    y[c] = rem / res.H(c, c);
  }
  const IntVec z = res.U * y;
  const Int bound = *std::max_element(moduli.begin(), moduli.end());
  IntVec x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
  for (auto& v : x) v = mod_floor(v, bound);
  return x;
}

std::vector<IntVec> kernel_mod(const IntMatrix& a, std::span<const Int> moduli,
                               std::span<const Int> col_moduli) {
  const std::size_t r = a.rows(), n = a.cols();
  if (moduli.size() != r) throw Error(ErrorCode::Dimension, "kernel_mod: moduli length mismatch");
  if (!col_moduli.empty() && col_moduli.size() != n)
    throw Error(ErrorCode::Dimension, "kernel_mod: column moduli length mismatch");
  if (n == 0) return {};

  std::vector<IntVec> gens;
  if (r == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      IntVec e(n);
      e[j] = 1;
      gens.push_back(std::move(e));
    }
  } else {
    const HNFResult res = hnf_with_transform(lift_with_moduli(a, moduli));
    for (std::size_t c = res.rank; c < n + r; ++c) {
      IntVec v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = res.U(i, c);
      gens.push_back(std::move(v));
    }
  }
  if (col_moduli.empty()) return gens;

  std::vector<IntVec> reduced;
  for (auto& g : gens) {
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = mod_floor(g[i], col_moduli[i]);
      if (sgn(g[i]) != 0) zero = false;
    }
    if (!zero && std::find(reduced.begin(), reduced.end(), g) == reduced.end())
      reduced.push_back(std::move(g));
  }
  return reduced;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::Dimension, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(m(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Int ipow(long base, unsigned long exp) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

int valuation(const Int& x, long p) {
  if (sgn(x) == 0) throw Error(ErrorCode::Internal, "valuation of zero");
  Int q = abs(x);
  int v = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(p))) {
    q /= p;
    ++v;
  }
  return v;
}

Int mod_floor(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace schurmult
