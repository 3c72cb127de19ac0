#pragma once

// Named families of class-2 groups with known multipliers, the direct
// product with a cyclic group, the central-product decomposition of
// s-extraspecial groups, and a search that realizes prescribed abelian
// groups as multipliers.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/abelian.hpp"
#include "core/presentation.hpp"

namespace schurmult {

enum class FamilyKind { GK, GKGap, GJK, Extraspecial, Table };

const char* family_name(FamilyKind kind) noexcept;
/// "gk", "gkgap", "gjk", "extraspecial", "table"; throws Error(Param).
FamilyKind parse_family_name(const std::string& name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::GK;
  long p = 3;
  int s = 1;
  int d = 2;
  int k = 0;
  int j = 1;
  /// GJK: orders of b_1..b_j. Table rows 3, 4, 6: {t}; row 5: {t1, t2}.
  std::vector<int> t;
  int r = 1;
  /// Extraspecial: (x1, x2) per factor, a_{2i-1}^{p^s} = b^{x1}, a_{2i}^{p^s} = b^{x2}.
  std::vector<std::pair<long, long>> powers;
  int row = 1;
  /// Direct factor Z_{p^cyclic_t}; required for table rows 1 and 2.
  std::optional<int> cyclic_t;
};

/// A presentation together with an optional direct cyclic factor, which the
/// presentation format cannot express when the factor is not in G'.
struct FamilyGroup {
  ClassTwoPresentation presentation;
  std::optional<int> cyclic_t;
};

/// Throws Error(Param) on out-of-range parameters.
FamilyGroup build(const FamilySpec& spec);
/// Closed form. Throws Error(NotCovered) for r = 1 extraspecial groups.
AbelianPGroup expected_multiplier(const FamilySpec& spec);
/// Pipeline multiplier, combined with the cyclic factor when present.
AbelianPGroup computed_multiplier(const FamilyGroup& g);

/// M(H x C_{p^t}) = M(H) + H_ab (x) C_{p^t}.
AbelianPGroup kunneth_with_cyclic(const AbelianPGroup& M_H, const AbelianPGroup& H_ab, int t);

bool is_s_extraspecial(const ClassTwoPresentation& P);

struct ExtraspecialFactor {
  GroupElement g1;
  GroupElement g2;
  /// Two-generator presentation with [g1, g2] and the p^s-th powers.
  ClassTwoPresentation presentation;
};

/// Throws Error(Param) when P is not s-extraspecial.
std::vector<ExtraspecialFactor> decompose_extraspecial(const ClassTwoPresentation& P);

/// Same group on the generators a'_i = a^{column i of U}; U must be
/// invertible mod p.
ClassTwoPresentation change_generators(const ClassTwoPresentation& P, const IntMatrix& U);

/// (Z_{p^s})^n x Z_{p^{m_1}} x ... x Z_{p^{m_r}} with 0 <= m_i < s.
struct TargetAbelian {
  long p = 3;
  int s = 1;
  int n = 0;
  std::vector<int> m;
};

/// (n1, n2, n3) -> the equivalent (s, n, m) target.
TargetAbelian target_from_triple(long p, int n1, int n2, int n3);
AbelianPGroup target_group(const TargetAbelian& target);
/// Whether the target has one of the covered shapes.
bool target_covered(const TargetAbelian& target);

struct Realization {
  FamilySpec spec;
  ClassTwoPresentation presentation;
  AbelianPGroup multiplier;
};

/// Smallest d first, then (j, k), then the smallest t list. Throws
/// Error(NotCovered), Error(Bound) past d = 16, or Error(Consistency) if the
/// pipeline disagrees with the closed form.
Realization realize(const TargetAbelian& target);

}  // namespace schurmult
