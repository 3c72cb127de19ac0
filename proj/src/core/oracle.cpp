#include "core/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>

#include "core/error.hpp"

namespace schurmult {

namespace {

using Row = std::vector<std::int64_t>;

struct Modulus {
  long p;
  int e;
  std::int64_t m;

  Modulus(long p_, int e_) : p(p_), e(e_), m(1) {
    if (p < 2 || e < 1) throw Error(ErrorCode::Param, "coefficient modulus must be p^e with e >= 1");
    for (int i = 0; i < e; ++i) {
      if (m > std::numeric_limits<std::int32_t>::max() / p) throw Error(ErrorCode::Bound, "coefficient modulus too large");
      m *= p;
    }
  }

  int val(std::int64_t x) const {
    int v = 0;
    while (v < e && x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  }

  std::int64_t pow_p(int v) const {
    std::int64_t r = 1;
    for (int i = 0; i < v; ++i) r *= p;
    return r;
  }

  std::int64_t inv(std::int64_t u) const {
    std::int64_t a = u % m, b = m, x0 = 1, x1 = 0;
    while (b != 0) {
      const std::int64_t q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    return ((x0 % m) + m) % m;
  }

  std::int64_t norm(std::int64_t x) const { return ((x % m) + m) % m; }

  /// dst = dst - f * src.
  void axpy(Row& dst, const Row& src, std::int64_t f, std::size_t from) const {
    if (f == 0) return;
    for (std::size_t j = from; j < dst.size(); ++j)
      if (src[j] != 0) dst[j] = norm(dst[j] - f * src[j] % m);
  }

  /// Scales r so that r[c] becomes exactly p^v.
  void normalize(Row& r, std::size_t c, int v) const {
    const std::int64_t unit = r[c] / pow_p(v);
    const std::int64_t f = inv(unit);
    for (std::size_t j = c; j < r.size(); ++j) r[j] = r[j] * f % m;
  }
};

/// Incremental echelon generating set of a submodule of (Z/p^e)^n: at most
/// one row per pivot column, same span as everything inserted.
class RowSpan {
 public:
  RowSpan(std::size_t ncols, const Modulus& mod) : mod_(mod), pivots_(ncols), vals_(ncols, -1) {}

  void insert(Row r) {
    std::size_t c = 0;
    const std::size_t n = pivots_.size();
    for (;;) {
      while (c < n && r[c] == 0) ++c;
      if (c == n) return;
      const int v = mod_.val(r[c]);
      if (vals_[c] < 0) {
        mod_.normalize(r, c, v);
        pivots_[c] = std::move(r);
        vals_[c] = v;
        return;
      }
      if (v >= vals_[c]) {
        mod_.axpy(r, pivots_[c], r[c] / mod_.pow_p(vals_[c]), c);
      } else {
        mod_.normalize(r, c, v);
        std::swap(r, pivots_[c]);
        const int w = vals_[c];
        vals_[c] = v;
        mod_.axpy(r, pivots_[c], mod_.pow_p(w - v), c);
      }
      ++c;
    }
  }

  /// log_p of the order of the span.
  int log_order() const {
    std::vector<Row> rows;
    for (std::size_t c = 0; c < pivots_.size(); ++c)
      if (vals_[c] >= 0) rows.push_back(pivots_[c]);
    const std::size_t n = pivots_.size();
    std::vector<bool> col_done(n, false);
    int total = 0;
    // Smith form over the local ring: a minimal-valuation pivot divides every
    // remaining entry, so clearing its column and dropping its row and column
    // leaves the rest untouched.
    while (!rows.empty()) {
      std::size_t br = rows.size(), bc = n;
      int bv = mod_.e;
      for (std::size_t i = 0; i < rows.size() && bv > 0; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (col_done[j] || rows[i][j] == 0) continue;
          const int v = mod_.val(rows[i][j]);
          if (v < bv) {
            bv = v;
            br = i;
            bc = j;
            if (v == 0) break;
          }
        }
      if (br == rows.size()) break;
      Row piv = std::move(rows[br]);
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(br));
      const std::int64_t unit_inv = mod_.inv(piv[bc] / mod_.pow_p(bv));
      for (auto& r : rows) {
        if (r[bc] == 0) continue;
        mod_.axpy(r, piv, (r[bc] / mod_.pow_p(bv)) % mod_.m * unit_inv % mod_.m, 0);
      }
      col_done[bc] = true;
      total += mod_.e - bv;
      std::erase_if(rows, [](const Row& r) { return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; }); });
    }
    return total;
  }

 private:
  const Modulus& mod_;
  std::vector<Row> pivots_;
  std::vector<int> vals_;
};

int log_p_exact(std::size_t n, long p) {
  int v = 0;
  while (n > 1) {
    if (n % static_cast<std::size_t>(p) != 0) throw Error(ErrorCode::Param, "group order is not a power of p");
    n /= static_cast<std::size_t>(p);
    ++v;
  }
  return v;
}

}  // namespace

std::size_t CayleyTable::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order; ++b)
    if (mul(a, b) == identity) return b;
  throw Error(ErrorCode::Internal, "element without inverse");
}

bool CayleyTable::is_associative() const {
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

CayleyTable CayleyTable::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != order) throw Error(ErrorCode::Dimension, "relabeling must be a permutation of the elements");
  CayleyTable out{order, perm[identity], std::vector<std::uint32_t>(order * order)};
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      out.product[perm[a] * order + perm[b]] = static_cast<std::uint32_t>(perm[mul(a, b)]);
  return out;
}

CayleyTable cayley_table_from(std::size_t order, std::vector<std::uint32_t> product) {
  if (order == 0 || product.size() != order * order) throw Error(ErrorCode::Param, "table must be order x order");
  for (auto x : product)
    if (x >= order) throw Error(ErrorCode::Param, "table entry out of range");
  CayleyTable t{order, order, std::move(product)};
  for (std::size_t e = 0; e < order && t.identity == order; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a) ok = t.mul(e, a) == a && t.mul(a, e) == a;
    if (ok) t.identity = e;
  }
  if (t.identity == order) throw Error(ErrorCode::Param, "table has no identity");
  for (std::size_t a = 0; a < order; ++a) {
    const std::size_t b = t.inverse(a);
    if (t.mul(b, a) != t.identity) throw Error(ErrorCode::Param, "table has no two-sided inverses");
  }
  return t;
}

CayleyTable cayley_table(const ClassTwoPresentation& P, std::uint64_t max_order) {
  const std::vector<GroupElement> elems = enumerate(P, max_order);
  const ClassTwoGroup G(P);
  const std::size_t n = elems.size();
  CayleyTable t{n, G.index_of(G.identity()), std::vector<std::uint32_t>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t.product[a * n + b] = static_cast<std::uint32_t>(G.index_of(G.multiply(elems[a], elems[b])));
  return t;
}

std::vector<std::size_t> generating_set(const CayleyTable& G) {
  std::vector<std::size_t> S;
  std::vector<bool> in(G.order, false);
  in[G.identity] = true;
  std::size_t count = 1;
  for (std::size_t g = 0; g < G.order && count < G.order; ++g) {
    if (in[g]) continue;
    S.push_back(g);
    // Close up again under right multiplication by S.
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < G.order; ++x)
      if (in[x]) queue.push_back(x);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t s : S) {
        const std::size_t y = G.mul(x, s);
        if (!in[y]) {
          in[y] = true;
          ++count;
          queue.push_back(y);
        }
      }
    }
  }
  return S;
}

int log_abelianization(const CayleyTable& G, long p) {
  const std::size_t n = G.order;
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) inv[a] = G.inverse(a);
  std::vector<bool> in(n, false);
  std::vector<std::size_t> gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = G.mul(G.mul(inv[a], inv[b]), G.mul(a, b));
      if (!in[c]) {
        in[c] = true;
        gens.push_back(c);
      }
    }
  std::fill(in.begin(), in.end(), false);
  in[G.identity] = true;
  std::deque<std::size_t> queue{G.identity};
  std::size_t size = 1;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t g : gens) {
      const std::size_t y = G.mul(x, g);
      if (!in[y]) {
        in[y] = true;
        ++size;
        queue.push_back(y);
      }
    }
  }
  return log_p_exact(n, p) - log_p_exact(size, p);
}

int log_kernel_order(const std::vector<std::vector<std::int64_t>>& rows, std::size_t ncols, long p, int e) {
  const Modulus mod(p, e);
  RowSpan span(ncols, mod);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw Error(ErrorCode::Dimension, "row length mismatch");
    Row x(ncols);
    for (std::size_t j = 0; j < ncols; ++j) x[j] = mod.norm(r[j]);
    span.insert(std::move(x));
  }
  return e * static_cast<int>(ncols) - span.log_order();
}

namespace {

int log_hom_count(const CayleyTable& G, const std::vector<std::size_t>& S, const Modulus& mod, bool full) {
  const std::size_t n = G.order;
  RowSpan span(n, mod);
  auto add = [&](std::size_t g, std::size_t h) {
    Row r(n);
    r[g] = mod.norm(r[g] + 1);
    r[h] = mod.norm(r[h] + 1);
    const std::size_t gh = G.mul(g, h);
    r[gh] = mod.norm(r[gh] - 1);
    span.insert(std::move(r));
  };
  for (std::size_t g = 0; g < n; ++g) {
    if (full) {
      for (std::size_t h = 0; h < n; ++h) add(g, h);
    } else {
      for (std::size_t s : S) add(g, s);
    }
  }
  return mod.e * static_cast<int>(n) - span.log_order();
}

int log_cocycles_full(const CayleyTable& G, const Modulus& mod) {
  const std::size_t n = G.order;
  if (n > 32) throw Error(ErrorCode::Bound, "full cocycle system is limited to 32 elements");
  RowSpan span(n * n, mod);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k) {
        Row r(n * n);
        auto bump = [&](std::size_t a, std::size_t b, std::int64_t v) { r[a * n + b] = mod.norm(r[a * n + b] + v); };
        bump(h, k, 1);
        bump(G.mul(g, h), k, -1);
        bump(g, G.mul(h, k), 1);
        bump(g, h, -1);
        span.insert(std::move(r));
      }
  return mod.e * static_cast<int>(n * n) - span.log_order();
}

int log_cocycles_reduced(const CayleyTable& G, const std::vector<std::size_t>& S, const Modulus& mod) {
  const std::size_t n = G.order, q = S.size();
  const std::size_t id = G.identity;
  const std::size_t nparams = (n - 1) * q;
  auto param = [&](std::size_t y, std::size_t si) { return (y < id ? y : y - 1) * q + si; };

  // Spanning tree of the right Cayley graph.
  std::vector<std::size_t> order{id}, parent(n, n), via(n, q);
  std::vector<bool> seen(n, false);
  seen[id] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t si = 0; si < q; ++si) {
      const std::size_t y = G.mul(order[i], S[si]);
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = order[i];
      via[y] = si;
      order.push_back(y);
    }
  if (order.size() != n) throw Error(ErrorCode::Internal, "generating set does not generate");

  RowSpan span(nparams, mod);
  std::vector<Row> F(n, Row(nparams));
  auto add_param = [&](Row& r, std::size_t y, std::size_t si, std::int64_t v) {
    if (y != id) r[param(y, si)] = mod.norm(r[param(y, si)] + v);
  };
  for (std::size_t g = 0; g < n; ++g) {
    // F[x] = c(g, x) as a linear form in the parameters:
    // c(g, h s) = c(g, h) + c(g h, s) - c(h, s).
    std::fill(F[id].begin(), F[id].end(), 0);
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t x = order[i], h = parent[x], si = via[x];
      F[x] = F[h];
      add_param(F[x], G.mul(g, h), si, 1);
      add_param(F[x], h, si, -1);
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t si = 0; si < q; ++si) {
        const std::size_t y = G.mul(x, S[si]);
        if (parent[y] == x && via[y] == si) continue;
        Row r = F[y];
        for (std::size_t j = 0; j < nparams; ++j)
          if (F[x][j] != 0) r[j] = mod.norm(r[j] - F[x][j]);
        add_param(r, G.mul(g, x), si, -1);
        add_param(r, x, si, 1);
        span.insert(std::move(r));
      }
  }
  // Normalized cocycles, plus the constant cocycles.
  return mod.e * static_cast<int>(nparams) - span.log_order() + mod.e;
}

}  // namespace

CohomologyCounts cohomology_counts(const CayleyTable& G, long p, int e, bool full) {
  const Modulus mod(p, e);
  const std::vector<std::size_t> S = generating_set(G);
  CohomologyCounts c;
  c.p = p;
  c.e = e;
  const int n = static_cast<int>(G.order);
  c.log_Gab = log_abelianization(G, p);
  c.log_hom = log_hom_count(G, S, mod, full);
  c.log_Z2 = full ? log_cocycles_full(G, mod) : log_cocycles_reduced(G, S, mod);
  c.log_B2 = e * n - c.log_hom;
  if (c.log_B2 > c.log_Z2) throw Error(ErrorCode::Internal, "coboundaries larger than cocycles");
  c.log_H2 = c.log_Z2 - c.log_B2;
  if (c.log_hom != c.log_Gab)
    throw Error(ErrorCode::Internal, "coefficient modulus is smaller than the exponent of G_ab");
  if (c.log_H2 < c.log_Gab) throw Error(ErrorCode::Internal, "|H^2| is not a multiple of |G_ab|");
  c.log_M = c.log_H2 - c.log_Gab;
  return c;
}

Int schur_order_oracle(const ClassTwoPresentation& P, std::uint64_t max_order) {
  require_valid(P);
  const CayleyTable G = cayley_table(P, max_order);
  const CohomologyCounts c = cohomology_counts(G, P.p, 2 * P.s);
  return ipow(P.p, static_cast<unsigned long>(c.log_M));
}

}  // namespace schurmult
