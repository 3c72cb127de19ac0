#pragma once

// Brute-force |M(G)| from 2-cocycles with coefficients in Z_m, m = p^e.
// Works on a Cayley table only and shares no code with the pipeline.
//
// With m a multiple of the exponents of G_ab and M(G),
//   |H^2(G, Z_m)| = |Hom(M(G), Z_m)| * |Ext(G_ab, Z_m)| = |M(G)| * |G_ab|.
// Normalized cocycles are parametrized by c(y, s) for y != 1 and s in a
// generating set S; c(g, x) for other x follows from the cocycle identity
// along a spanning tree of the Cayley graph, and the remaining edges give
// the constraints. Checking the identity for k in S is enough because the
// set of k where it holds is closed under products.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/arith.hpp"
#include "core/presentation.hpp"

namespace schurmult {

struct CayleyTable {
  std::size_t order = 0;
  std::size_t identity = 0;
  /// product[a * order + b] = index of a*b.
  std::vector<std::uint32_t> product;

  std::uint32_t mul(std::size_t a, std::size_t b) const { return product[a * order + b]; }
  /// Index of the inverse of a.
  std::size_t inverse(std::size_t a) const;
  /// Exhaustive associativity check; O(order^3).
  bool is_associative() const;
  /// Same group with element i renamed perm[i].
  CayleyTable relabeled(const std::vector<std::size_t>& perm) const;
};

/// Throws Error(Bound) above max_order.
CayleyTable cayley_table(const ClassTwoPresentation& P, std::uint64_t max_order = 256);
/// Checks for an identity and inverses; throws Error(Param) otherwise.
CayleyTable cayley_table_from(std::size_t order, std::vector<std::uint32_t> product);

/// Greedy generating set, in index order.
std::vector<std::size_t> generating_set(const CayleyTable& G);
/// log_p of |G / G'|.
int log_abelianization(const CayleyTable& G, long p);

/// log_p of the orders involved, coefficients Z_{p^e}.
struct CohomologyCounts {
  long p = 0;
  int e = 0;
  int log_Z2 = 0;
  int log_B2 = 0;
  int log_H2 = 0;
  int log_hom = 0;  // |Hom(G, Z_m)|
  int log_Gab = 0;
  int log_M = 0;    // log |H^2| - log |G_ab|
};

/// full = true uses all |G|^2 unknowns and all |G|^3 cocycle equations;
/// meant for very small tables. Throws Error(Internal) when the counts are
/// inconsistent.
CohomologyCounts cohomology_counts(const CayleyTable& G, long p, int e, bool full = false);

/// |M(G)| with m = p^{2s}. Throws Error(Bound) above max_order.
Int schur_order_oracle(const ClassTwoPresentation& P, std::uint64_t max_order = 256);

/// Order of the kernel of x -> A x over Z/p^e, as log_p. Rows are dense.
int log_kernel_order(const std::vector<std::vector<std::int64_t>>& rows, std::size_t ncols, long p, int e);

}  // namespace schurmult
