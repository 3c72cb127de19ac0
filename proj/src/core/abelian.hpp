#pragma once

// Finite abelian p-groups given as direct sums of cyclic groups, with
// elements as coordinate tuples relative to the stored cyclic generators.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "core/arith.hpp"

namespace schurmult {

using GroupVec = IntVec;

bool is_prime(long n);

/// "C9 x C3 x C3" from exponents in any order; three or more equal factors
/// collapse to "C3^3". The trivial group prints as "1".
std::string format_group(long p, std::vector<int> exps);

/// Direct sum of Z_{p^e_i}. The stored order of factors is kept as given so
/// coordinates can follow an external generator list; results of quotients
/// and subgroup computations are returned in canonical (descending) form.
class AbelianPGroup {
 public:
  AbelianPGroup() = default;
  AbelianPGroup(long p, std::vector<int> exps);

  long prime() const noexcept { return p_; }
  const std::vector<int>& exps() const noexcept { return exps_; }
  std::size_t rank() const noexcept { return exps_.size(); }
  bool is_trivial() const noexcept { return exps_.empty(); }

  Int modulus(std::size_t i) const { return ipow(p_, static_cast<unsigned long>(exps_[i])); }
  IntVec moduli() const;
  int log_order() const;
  Int order() const { return ipow(p_, static_cast<unsigned long>(log_order())); }
  /// log_p of the exponent; 0 for the trivial group.
  int log_exponent() const;
  bool is_homocyclic() const;

  AbelianPGroup canonical() const;
  /// Same invariant factors.
  bool isomorphic(const AbelianPGroup& other) const;

  GroupVec zero() const { return GroupVec(rank()); }
  GroupVec unit(std::size_t i) const;
  GroupVec reduce(GroupVec v) const;
  bool is_element(const GroupVec& v) const;
  GroupVec add(const GroupVec& a, const GroupVec& b) const;
  GroupVec scale(const GroupVec& a, const Int& k) const;
  bool is_zero(const GroupVec& v) const;
  /// log_p of the order of an element.
  int log_element_order(const GroupVec& v) const;

  std::string to_string() const { return format_group(p_, exps_); }

  friend bool operator==(const AbelianPGroup&, const AbelianPGroup&) = default;

 private:
  long p_ = 3;
  std::vector<int> exps_;
};

/// Homomorphism given by the images of the source generators: column j of
/// `matrix` holds the target coordinates of the image of generator j.
struct HomMap {
  AbelianPGroup source;
  AbelianPGroup target;
  IntMatrix matrix;

  GroupVec apply(const GroupVec& x) const;
  /// p^{e_j} * column_j == 0 in the target for every source generator j.
  bool order_compatible() const;
};

/// A subgroup of `parent` with its generators and a basis in the sense of
/// complete and independent sets. basis_exps[i] is log_p of the order of
/// basis[i]; the basis is sorted by descending order.
struct SubgroupData {
  AbelianPGroup parent;
  std::vector<GroupVec> generators;
  std::vector<GroupVec> basis;
  std::vector<int> basis_exps;

  int log_order() const;
  Int order() const { return ipow(parent.prime(), static_cast<unsigned long>(log_order())); }
  /// Canonical group isomorphic to the subgroup.
  AbelianPGroup structure() const { return AbelianPGroup(parent.prime(), basis_exps); }
};

SubgroupData subgroup_basis(const AbelianPGroup& parent, std::vector<GroupVec> gens);

/// Membership via solve_mod against the generators.
bool contains(const SubgroupData& s, const GroupVec& x);

/// Subgroup generated by both.
SubgroupData join(const SubgroupData& a, const SubgroupData& b);

struct Quotient {
  AbelianPGroup group;  // canonical
  HomMap projection;    // parent -> group
};

Quotient quotient(const AbelianPGroup& parent, const SubgroupData& s);

/// Abelian group Z^n / (row span of relations), in canonical form, together
/// with the coordinate map Z^n -> group (column j = image of e_j).
struct PresentedGroup {
  AbelianPGroup group;
  IntMatrix coordinate_map;

  GroupVec image(const IntVec& x) const;
};

PresentedGroup present(long p, const IntMatrix& relations);

struct TensorProduct {
  AbelianPGroup group;
  std::size_t left_rank = 0;
  std::size_t right_rank = 0;

  std::size_t index(std::size_t i, std::size_t j) const { return i * right_rank + j; }
  /// a (x) b for a in the left factor and b in the right factor.
  GroupVec apply(const GroupVec& a, const GroupVec& b) const;
};

TensorProduct tensor(const AbelianPGroup& a, const AbelianPGroup& b);

/// Exterior square of a homocyclic group (Z_{p^s})^d. Basis element (i, j)
/// with i < j is stored at pair_index(i, j) in lexicographic order.
struct ExteriorSquare {
  AbelianPGroup group;
  std::size_t base_rank = 0;

  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> pair_at(std::size_t idx) const;
  /// +1 / -1 / 0 coefficient of basis element pair_index(min, max) for i ^ j.
  int sign(std::size_t i, std::size_t j) const { return i < j ? 1 : (i > j ? -1 : 0); }
  GroupVec wedge(const GroupVec& a, const GroupVec& b) const;
};

ExteriorSquare exterior_square(const AbelianPGroup& v);

}  // namespace schurmult
