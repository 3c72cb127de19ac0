#pragma once

// Schur multiplier of a class-2 p-group with G/G' = (Z_{p^s})^d and G' = W.
//
// With V = G/G' and f(gG') = g^{p^s}:
//   X1 = <a_i (x) [a_j,a_l] + a_j (x) [a_l,a_i] + a_l (x) [a_i,a_j]>
//   X2 = <v (x) f(v)>,  X = X1 + X2,  N = (V (x) W) / X
//   sigma : V^V -> N,   v1 ^ v2 -> v1 (x) f(v2) + X
//   M* = extension of N by V^V with x^{p^s} = sigma(x), one lift x_j per
//        basis pair of V^V
//   M  = preimage in M* of ker(rho : V^V -> W), and M(G) = M.

#include <cstddef>
#include <vector>

#include "core/abelian.hpp"
#include "core/presentation.hpp"

namespace schurmult {

struct SchurTrace {
  int log_VW = 0;
  int log_wedge = 0;
  int log_W = 0;
  int log_X1 = 0;
  int log_X2 = 0;
  int log_X = 0;
  int log_N = 0;
  int log_ker_rho = 0;
  int log_mstar = 0;
  int log_M = 0;
  int log_exponent_M = 0;

  friend bool operator==(const SchurTrace&, const SchurTrace&) = default;
};

struct SchurResult {
  AbelianPGroup multiplier;
  Int order_X;
  Int order_N;
  Int order_ker_rho;
  /// Rows p^s x_j - sigma_j followed by p^{c_i} n_i; columns x_1..x_D, n_1..n_m.
  IntMatrix mstar_relations;
  /// Basis of ker rho in V^V coordinates.
  std::vector<GroupVec> ker_rho_basis;
  SchurTrace trace;
};

struct MStar {
  std::size_t lifts = 0;  // D = C(d, 2)
  IntMatrix relations;
  PresentedGroup group;
};

/// Runs every stage once; the free functions below are views of it.
class SchurPipeline {
 public:
  /// Throws Error(Invalid) for presentations failing validation.
  explicit SchurPipeline(const ClassTwoPresentation& P);

  const ClassTwoPresentation& presentation() const noexcept { return P_; }
  const AbelianPGroup& V() const noexcept { return V_; }
  const AbelianPGroup& W() const noexcept { return W_; }
  const ExteriorSquare& wedge() const noexcept { return wedge_; }
  const TensorProduct& VW() const noexcept { return vw_; }
  const HomMap& rho() const noexcept { return rho_; }
  const HomMap& f() const noexcept { return f_; }
  const SubgroupData& X1() const noexcept { return x1_; }
  const SubgroupData& X2() const noexcept { return x2_; }
  const SubgroupData& X() const noexcept { return x_; }
  const Quotient& N() const noexcept { return n_; }
  const HomMap& sigma() const noexcept { return sigma_; }
  const SubgroupData& ker_rho() const noexcept { return ker_rho_; }
  const MStar& mstar() const noexcept { return mstar_; }

  /// v1 (x) f(v2) + X in N; alternating in (v1, v2).
  GroupVec sigma_pairing(const GroupVec& v1, const GroupVec& v2) const;

  /// Assembles M and checks the order identities; throws Error(Consistency)
  /// if they fail.
  SchurResult result() const;

 private:
  ClassTwoPresentation P_;
  AbelianPGroup V_, W_;
  ExteriorSquare wedge_;
  TensorProduct vw_;
  HomMap rho_, f_;
  SubgroupData x1_, x2_, x_;
  Quotient n_;
  HomMap sigma_;
  SubgroupData ker_rho_;
  MStar mstar_;
};

SubgroupData generate_X1(const ClassTwoPresentation& P);
SubgroupData generate_X2(const ClassTwoPresentation& P);
SubgroupData generate_X(const ClassTwoPresentation& P);
Quotient compute_N(const ClassTwoPresentation& P);
HomMap sigma(const ClassTwoPresentation& P);
MStar build_M_star(const ClassTwoPresentation& P);
SubgroupData kernel_rho(const ClassTwoPresentation& P);
SchurResult schur_multiplier(const ClassTwoPresentation& P);

/// |M| = |V(x)W / X| * |V^V| / |W|, recomputed from the stage orders.
bool order_formula_check(const ClassTwoPresentation& P);
bool order_formula_check(const SchurResult& r);

/// { w in W : a_i (x) w in X for all i }.
SubgroupData epicenter_part(const ClassTwoPresentation& P);
/// True iff a_i (x) z lies in X for every a_i and every generator z.
/// Throws Error(Param) if a generator is not a W element.
bool epicenter_contains(const ClassTwoPresentation& P, const std::vector<GroupVec>& Z);

}  // namespace schurmult
