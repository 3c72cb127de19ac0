#include "core/schur.hpp"

#include "core/error.hpp"

namespace schurmult {

namespace {

void add_tensor(const TensorProduct& vw, GroupVec& acc, std::size_t i, const IntVec& w, int sign = 1) {
  for (std::size_t n = 0; n < w.size(); ++n) acc[vw.index(i, n)] += sign * w[n];
}

}  // namespace

SchurPipeline::SchurPipeline(const ClassTwoPresentation& P) : P_(P) {
  const AbelianizationData ab = abelianization_data(P_);
  V_ = ab.V;
  W_ = ab.W;
  wedge_ = ab.wedge;
  rho_ = ab.rho;
  f_ = ab.f;
  vw_ = tensor(V_, W_);

  const auto d = static_cast<std::size_t>(P_.d);
  const AbelianPGroup& VW = vw_.group;

  std::vector<GroupVec> g1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t l = j + 1; l < d; ++l) {
        GroupVec x = VW.zero();
        add_tensor(vw_, x, i, P_.commutator_of(j, l));
        add_tensor(vw_, x, j, P_.commutator_of(l, i));
        add_tensor(vw_, x, l, P_.commutator_of(i, j));
        g1.push_back(VW.reduce(std::move(x)));
      }
  x1_ = subgroup_basis(VW, std::move(g1));

  // Polarization: (u+v) (x) f(u+v) - u (x) f(u) - v (x) f(v) spans X2 from
  // these generators.
  std::vector<GroupVec> g2;
  for (std::size_t i = 0; i < d; ++i) {
    GroupVec x = VW.zero();
    add_tensor(vw_, x, i, P_.alpha[i]);
    g2.push_back(VW.reduce(std::move(x)));
    for (std::size_t j = i + 1; j < d; ++j) {
      GroupVec y = VW.zero();
      add_tensor(vw_, y, i, P_.alpha[j]);
      add_tensor(vw_, y, j, P_.alpha[i]);
      g2.push_back(VW.reduce(std::move(y)));
    }
  }
  x2_ = subgroup_basis(VW, std::move(g2));
  x_ = join(x1_, x2_);
  n_ = quotient(VW, x_);

  const std::size_t D = wedge_.group.rank();
  IntMatrix sig(n_.group.rank(), D);
  for (std::size_t c = 0; c < D; ++c) {
    const auto [i, j] = wedge_.pair_at(c);
    GroupVec x = VW.zero();
    add_tensor(vw_, x, i, P_.alpha[j]);
    const GroupVec img = n_.projection.apply(VW.reduce(std::move(x)));
    for (std::size_t r = 0; r < img.size(); ++r) sig(r, c) = img[r];
  }
  sigma_ = HomMap{wedge_.group, n_.group, std::move(sig)};

  const IntVec col_moduli = wedge_.group.moduli();
  ker_rho_ = subgroup_basis(wedge_.group, kernel_mod(rho_.matrix, W_.moduli(), col_moduli));

  // Block-triangular relations: p^s x_j = sigma(w_j), p^{c_i} n_i = 0.
  const std::size_t m = n_.group.rank();
  IntMatrix rel(D + m, D + m);
  const Int q = P_.s_modulus();
  for (std::size_t j = 0; j < D; ++j) {
    rel(j, j) = q;
    for (std::size_t r = 0; r < m; ++r) rel(j, D + r) = -sigma_.matrix(r, j);
  }
  for (std::size_t r = 0; r < m; ++r) rel(D + r, D + r) = n_.group.modulus(r);
  mstar_.lifts = D;
  mstar_.group = present(P_.p, rel);
  mstar_.relations = std::move(rel);
}

GroupVec SchurPipeline::sigma_pairing(const GroupVec& v1, const GroupVec& v2) const {
  return n_.projection.apply(vw_.apply(V_.reduce(v1), f_.apply(V_.reduce(v2))));
}

SchurResult SchurPipeline::result() const {
  const std::size_t D = mstar_.lifts;
  const std::size_t m = n_.group.rank();
  const PresentedGroup& ms = mstar_.group;

  std::vector<GroupVec> gens;
  for (std::size_t r = 0; r < m; ++r) {
    IntVec e(D + m);
    e[D + r] = 1;
    gens.push_back(ms.image(e));
  }
  for (const auto& lambda : ker_rho_.basis) {
    IntVec e(D + m);
    for (std::size_t j = 0; j < D; ++j) e[j] = lambda[j];
    gens.push_back(ms.image(e));
  }
  const SubgroupData M = subgroup_basis(ms.group, std::move(gens));

  SchurResult out;
  out.multiplier = M.structure();
  out.order_X = x_.order();
  out.order_N = n_.group.order();
  out.order_ker_rho = ker_rho_.order();
  out.mstar_relations = mstar_.relations;
  out.ker_rho_basis = ker_rho_.basis;
  SchurTrace& t = out.trace;
  t.log_VW = vw_.group.log_order();
  t.log_wedge = wedge_.group.log_order();
  t.log_W = W_.log_order();
  t.log_X1 = x1_.log_order();
  t.log_X2 = x2_.log_order();
  t.log_X = x_.log_order();
  t.log_N = n_.group.log_order();
  t.log_ker_rho = ker_rho_.log_order();
  t.log_mstar = ms.group.log_order();
  t.log_M = out.multiplier.log_order();
  t.log_exponent_M = out.multiplier.log_exponent();

  if (t.log_mstar != t.log_wedge + t.log_N)
    throw Error(ErrorCode::Consistency, "|M*| differs from |V^V| * |N|");
  if (!order_formula_check(out))
    throw Error(ErrorCode::Consistency, "multiplier order disagrees with |V(x)W/X| * |V^V| / |W|");
  if (t.log_exponent_M > 2 * P_.s)
    throw Error(ErrorCode::Consistency, "multiplier exponent exceeds p^{2s}");
  return out;
}

SubgroupData generate_X1(const ClassTwoPresentation& P) { return SchurPipeline(P).X1(); }
SubgroupData generate_X2(const ClassTwoPresentation& P) { return SchurPipeline(P).X2(); }
SubgroupData generate_X(const ClassTwoPresentation& P) { return SchurPipeline(P).X(); }
Quotient compute_N(const ClassTwoPresentation& P) { return SchurPipeline(P).N(); }
HomMap sigma(const ClassTwoPresentation& P) { return SchurPipeline(P).sigma(); }
MStar build_M_star(const ClassTwoPresentation& P) { return SchurPipeline(P).mstar(); }
SubgroupData kernel_rho(const ClassTwoPresentation& P) { return SchurPipeline(P).ker_rho(); }
SchurResult schur_multiplier(const ClassTwoPresentation& P) { return SchurPipeline(P).result(); }

bool order_formula_check(const SchurResult& r) {
  const SchurTrace& t = r.trace;
  return t.log_M == t.log_N + t.log_ker_rho && t.log_M == (t.log_VW - t.log_X) + (t.log_wedge - t.log_W);
}

bool order_formula_check(const ClassTwoPresentation& P) {
  try {
    return order_formula_check(SchurPipeline(P).result());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Consistency) return false;
    throw;
  }
}

namespace {

/// Matrix of w -> (pi(a_i (x) w))_i from W into N^d.
IntMatrix epicenter_system(const SchurPipeline& pl, IntVec& moduli) {
  const std::size_t d = pl.V().rank(), k = pl.W().rank();
  const AbelianPGroup& N = pl.N().group;
  const IntMatrix& pi = pl.N().projection.matrix;
  IntMatrix A(d * N.rank(), k);
  moduli.assign(d * N.rank(), 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < N.rank(); ++r) {
      moduli[i * N.rank() + r] = N.modulus(r);
      for (std::size_t n = 0; n < k; ++n) A(i * N.rank() + r, n) = pi(r, pl.VW().index(i, n));
    }
  return A;
}

}  // namespace

SubgroupData epicenter_part(const ClassTwoPresentation& P) {
  const SchurPipeline pl(P);
  IntVec moduli;
  const IntMatrix A = epicenter_system(pl, moduli);
  return subgroup_basis(pl.W(), kernel_mod(A, moduli, pl.W().moduli()));
}

bool epicenter_contains(const ClassTwoPresentation& P, const std::vector<GroupVec>& Z) {
  const SchurPipeline pl(P);
  const AbelianPGroup& W = pl.W();
  for (const auto& z : Z)
    if (z.size() != W.rank()) throw Error(ErrorCode::Param, "subgroup generator is not an element of W");
  for (const auto& z : Z)
    for (std::size_t i = 0; i < pl.V().rank(); ++i)
      if (!pl.N().group.is_zero(pl.N().projection.apply(pl.VW().apply(pl.V().unit(i), W.reduce(z)))))
        return false;
  return true;
}

}  // namespace schurmult
