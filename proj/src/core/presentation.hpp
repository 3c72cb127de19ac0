#pragma once

// Class-2 p-groups given by structure constants. Generators a_1..a_d of
// order p^s modulo G', central generators b_1..b_k of order p^{t_n}, with
//   [a_i, a_j] = prod_n b_n^{gamma_ij^n},   a_i^{p^s} = prod_n b_n^{alpha_in}.
// Indices are 0-based in code and 1-based in the text format.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "core/abelian.hpp"

namespace schurmult {

struct ClassTwoPresentation {
  long p = 3;
  int s = 1;
  int d = 0;
  std::vector<int> t;
  /// One entry per pair i < j in lexicographic order, each of length k.
  std::vector<IntVec> gamma;
  /// One entry per a-generator, each of length k.
  std::vector<IntVec> alpha;

  /// All structure constants zero.
  static ClassTwoPresentation zero(long p, int s, int d, std::vector<int> t);

  std::size_t k() const noexcept { return t.size(); }
  std::size_t pair_count() const noexcept { return static_cast<std::size_t>(d) * (d - 1) / 2; }
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  Int s_modulus() const { return ipow(p, static_cast<unsigned long>(s)); }
  Int t_modulus(std::size_t n) const { return ipow(p, static_cast<unsigned long>(t[n])); }
  IntVec w_moduli() const;
  IntVec reduce_w(IntVec w) const;

  /// [a_i, a_j] for any i, j (antisymmetric, zero on the diagonal).
  IntVec commutator_of(std::size_t i, std::size_t j) const;
  void set_commutator(std::size_t i, std::size_t j, IntVec w);
  void set_power(std::size_t i, IntVec w);

  AbelianPGroup V() const { return AbelianPGroup(p, std::vector<int>(static_cast<std::size_t>(d), s)); }
  AbelianPGroup W() const { return AbelianPGroup(p, t); }

  friend bool operator==(const ClassTwoPresentation&, const ClassTwoPresentation&) = default;
};

/// Every violated standing hypothesis, in a fixed order. Empty means valid.
std::vector<std::string> validate(const ClassTwoPresentation& P);
/// Throws Error(Invalid) listing the violations.
void require_valid(const ClassTwoPresentation& P);

/// p^{sd + sum t_n}.
Int group_order(const ClassTwoPresentation& P);
int log_group_order(const ClassTwoPresentation& P);

/// Text format: "p", "s", "d", "t" lines, then "comm i j : c1 .. ck" and
/// "pow i : c1 .. ck" lines. '#' starts a comment.
ClassTwoPresentation parse_presentation(const std::string& text);
ClassTwoPresentation read_presentation(std::istream& in);
std::string serialize(const ClassTwoPresentation& P);

/// Normal form a_1^{e_1} ... a_d^{e_d} b_1^{f_1} ... b_k^{f_k}.
struct GroupElement {
  IntVec e;
  IntVec f;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Collection arithmetic for a presentation. Validation is not required so
/// that degenerate tables (for instance p = 2 test groups) can be built.
class ClassTwoGroup {
 public:
  explicit ClassTwoGroup(ClassTwoPresentation P);

  const ClassTwoPresentation& presentation() const noexcept { return P_; }

  GroupElement identity() const;
  GroupElement a(std::size_t i) const;
  GroupElement b(std::size_t n) const;
  GroupElement element(IntVec e, IntVec f) const;
  bool is_identity(const GroupElement& x) const;

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  GroupElement power(const GroupElement& x, const Int& n) const;
  GroupElement commutator(const GroupElement& x, const GroupElement& y) const;

  /// Number of normal forms; p^{sd + sum t}.
  Int order() const;
  /// Mixed-radix position in the enumeration order (e_1 most significant).
  std::uint64_t index_of(const GroupElement& x) const;
  GroupElement element_at(std::uint64_t idx) const;

 private:
  void check(const GroupElement& x) const;
  /// sum_{i>j} x_i y_j [a_i, a_j] + carry terms, unreduced.
  IntVec correction(const IntVec& x, const IntVec& y) const;

  ClassTwoPresentation P_;
  Int q_;            // p^s
  IntVec w_mod_;     // p^{t_n}
  std::vector<std::vector<IntVec>> comm_;  // comm_[i][j] = [a_i, a_j]
};

/// All elements in enumeration order. Throws Error(Bound) above max_order.
std::vector<GroupElement> enumerate(const ClassTwoPresentation& P, std::uint64_t max_order);

struct AbelianizationData {
  AbelianPGroup V;
  AbelianPGroup W;
  ExteriorSquare wedge;
  HomMap rho;  // V^V -> W, basis (i, j) -> gamma(i, j)
  HomMap f;    // V -> W, basis i -> alpha(i)
};

AbelianizationData abelianization_data(const ClassTwoPresentation& P);

}  // namespace schurmult
