#include "core/abelian.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "core/error.hpp"

namespace schurmult {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::string format_group(long p, std::vector<int> exps) {
  std::sort(exps.begin(), exps.end(), std::greater<>());
  std::erase(exps, 0);
  if (exps.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& s) {
    os << (first ? "" : " x ") << s;
    first = false;
  };
  for (std::size_t i = 0; i < exps.size();) {
    std::size_t j = i;
    while (j < exps.size() && exps[j] == exps[i]) ++j;
    const std::string factor = "C" + ipow(p, static_cast<unsigned long>(exps[i])).get_str();
    if (j - i >= 3) {
      emit(factor + "^" + std::to_string(j - i));
    } else {
      for (std::size_t k = i; k < j; ++k) emit(factor);
    }
    i = j;
  }
  return os.str();
}

AbelianPGroup::AbelianPGroup(long p, std::vector<int> exps) : p_(p), exps_(std::move(exps)) {
  if (!is_prime(p_) || p_ == 2) throw Error(ErrorCode::Param, "abelian group prime must be an odd prime");
  for (int e : exps_)
    if (e <= 0) throw Error(ErrorCode::Param, "cyclic factor exponents must be positive");
}

IntVec AbelianPGroup::moduli() const {
  IntVec out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = modulus(i);
  return out;
}

int AbelianPGroup::log_order() const {
  int total = 0;
  for (int e : exps_) total += e;
  return total;
}

int AbelianPGroup::log_exponent() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

bool AbelianPGroup::is_homocyclic() const {
  return std::adjacent_find(exps_.begin(), exps_.end(), std::not_equal_to<>()) == exps_.end();
}

AbelianPGroup AbelianPGroup::canonical() const {
  std::vector<int> sorted = exps_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return AbelianPGroup(p_, std::move(sorted));
}

bool AbelianPGroup::isomorphic(const AbelianPGroup& other) const {
  return p_ == other.p_ && canonical().exps_ == other.canonical().exps_;
}

GroupVec AbelianPGroup::unit(std::size_t i) const {
  GroupVec v(rank());
  v.at(i) = 1;
  return v;
}

GroupVec AbelianPGroup::reduce(GroupVec v) const {
  if (v.size() != rank()) throw Error(ErrorCode::Dimension, "element has wrong number of coordinates");
  for (std::size_t i = 0; i < rank(); ++i) v[i] = mod_floor(v[i], modulus(i));
  return v;
}

bool AbelianPGroup::is_element(const GroupVec& v) const {
  if (v.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (sgn(v[i]) < 0 || v[i] >= modulus(i)) return false;
  return true;
}

GroupVec AbelianPGroup::add(const GroupVec& a, const GroupVec& b) const {
  if (a.size() != rank() || b.size() != rank())
    throw Error(ErrorCode::Dimension, "element has wrong number of coordinates");
  GroupVec out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = a[i] + b[i];
  return reduce(std::move(out));
}

GroupVec AbelianPGroup::scale(const GroupVec& a, const Int& k) const {
  GroupVec out = a;
  for (auto& x : out) x *= k;
  return reduce(std::move(out));
}

bool AbelianPGroup::is_zero(const GroupVec& v) const {
  const GroupVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return sgn(x) == 0; });
}

int AbelianPGroup::log_element_order(const GroupVec& v) const {
  const GroupVec r = reduce(v);
  int best = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(r[i]) == 0) continue;
    best = std::max(best, exps_[i] - valuation(r[i], p_));
  }
  return best;
}

GroupVec HomMap::apply(const GroupVec& x) const {
  if (x.size() != source.rank()) throw Error(ErrorCode::Dimension, "homomorphism applied to wrong group");
  return target.reduce(matrix * x);
}

bool HomMap::order_compatible() const {
  for (std::size_t j = 0; j < source.rank(); ++j) {
    GroupVec col = matrix.column(j);
    if (!target.is_zero(target.scale(col, source.modulus(j)))) return false;
  }
  return true;
}

int SubgroupData::log_order() const {
  int total = 0;
  for (int e : basis_exps) total += e;
  return total;
}

namespace {

IntMatrix generator_matrix(const AbelianPGroup& parent, const std::vector<GroupVec>& gens) {
  return IntMatrix::from_columns(gens, parent.rank());
}

}  // namespace

SubgroupData subgroup_basis(const AbelianPGroup& parent, std::vector<GroupVec> gens) {
  SubgroupData out{parent, {}, {}, {}};
  for (auto& g : gens) out.generators.push_back(parent.reduce(std::move(g)));

  std::vector<GroupVec> nonzero;
  for (const auto& g : out.generators)
    if (!parent.is_zero(g)) nonzero.push_back(g);
  if (nonzero.empty()) return out;

  // Relation lattice of the generators; its Smith form splits the subgroup
  // into cyclic pieces generated by the rows of V^-1.
  const IntVec moduli = parent.moduli();
  const IntMatrix gm = generator_matrix(parent, nonzero);
  std::vector<IntVec> rel = kernel_mod(gm, moduli);
  IntVec orders(nonzero.size());
  for (std::size_t j = 0; j < nonzero.size(); ++j) {
    orders[j] = ipow(parent.prime(), static_cast<unsigned long>(parent.log_element_order(nonzero[j])));
    for (auto& r : rel) r[j] = mod_floor(r[j], orders[j]);
  }
  for (std::size_t j = 0; j < nonzero.size(); ++j) {
    IntVec r(nonzero.size());
    r[j] = orders[j];
    rel.push_back(std::move(r));
  }
  const IntMatrix relations = IntMatrix::from_rows(rel, nonzero.size());
  const SNFWithInverse s = snf_with_inverse(relations);
  if (s.snf.rank != nonzero.size()) throw Error(ErrorCode::Internal, "subgroup relation lattice is not full rank");

  for (std::size_t i = s.snf.rank; i-- > 0;) {
    const Int& di = s.snf.D(i, i);
    if (di == 1) continue;
    GroupVec elem(parent.rank());
    for (std::size_t j = 0; j < nonzero.size(); ++j)
      for (std::size_t c = 0; c < parent.rank(); ++c) elem[c] += s.V_inv(i, j) * nonzero[j][c];
    out.basis.push_back(parent.reduce(std::move(elem)));
    out.basis_exps.push_back(valuation(di, parent.prime()));
  }
  return out;
}

bool contains(const SubgroupData& s, const GroupVec& x) {
  const AbelianPGroup& parent = s.parent;
  if (s.generators.empty()) return parent.is_zero(x);
  const IntMatrix gm = generator_matrix(parent, s.generators);
  const IntVec moduli = parent.moduli();
  const GroupVec target = parent.reduce(x);
  return solve_mod(gm, target, moduli).has_value();
}

SubgroupData join(const SubgroupData& a, const SubgroupData& b) {
  if (!(a.parent == b.parent)) throw Error(ErrorCode::Dimension, "join of subgroups of different groups");
  std::vector<GroupVec> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return subgroup_basis(a.parent, std::move(gens));
}

GroupVec PresentedGroup::image(const IntVec& x) const { return group.reduce(coordinate_map * x); }

PresentedGroup present(long p, const IntMatrix& relations) {
  const std::size_t n = relations.cols();
  if (n == 0) return {AbelianPGroup(p, {}), IntMatrix(0, 0)};
  const SNFResult s = snf(relations);
  if (s.rank != n) throw Error(ErrorCode::Internal, "relations do not define a finite group");

  std::vector<int> exps;
  std::vector<std::size_t> kept;
  for (std::size_t i = n; i-- > 0;) {
    const Int& di = s.D(i, i);
    if (di == 1) continue;
    Int q = di;
    int e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (q != 1) throw Error(ErrorCode::Internal, "relations define a group that is not a p-group");
    exps.push_back(e);
    kept.push_back(i);
  }
  AbelianPGroup group(p, exps);
  IntMatrix map(kept.size(), n);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    const Int mod = group.modulus(r);
    for (std::size_t j = 0; j < n; ++j) map(r, j) = mod_floor(s.V(j, kept[r]), mod);
  }
  return {std::move(group), std::move(map)};
}

Quotient quotient(const AbelianPGroup& parent, const SubgroupData& s) {
  if (!(s.parent == parent)) throw Error(ErrorCode::Dimension, "quotient by a subgroup of another group");
  const std::size_t n = parent.rank();
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec r(n);
    r[i] = parent.modulus(i);
    rows.push_back(std::move(r));
  }
  for (const auto& g : s.generators) rows.push_back(g);
  PresentedGroup pg = present(parent.prime(), IntMatrix::from_rows(rows, n));
  return {pg.group, HomMap{parent, pg.group, std::move(pg.coordinate_map)}};
}

GroupVec TensorProduct::apply(const GroupVec& a, const GroupVec& b) const {
  if (a.size() != left_rank || b.size() != right_rank)
    throw Error(ErrorCode::Dimension, "tensor arguments have wrong rank");
  GroupVec out(group.rank());
  for (std::size_t i = 0; i < left_rank; ++i)
    for (std::size_t j = 0; j < right_rank; ++j) out[index(i, j)] = a[i] * b[j];
  return group.reduce(std::move(out));
}

TensorProduct tensor(const AbelianPGroup& a, const AbelianPGroup& b) {
  if (a.prime() != b.prime()) throw Error(ErrorCode::Param, "tensor product of groups for different primes");
  std::vector<int> exps;
  for (int e : a.exps())
    for (int f : b.exps()) exps.push_back(std::min(e, f));
  return {AbelianPGroup(a.prime(), std::move(exps)), a.rank(), b.rank()};
}

std::size_t ExteriorSquare::pair_index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= base_rank) throw Error(ErrorCode::Dimension, "pair index needs i < j < rank");
  return i * base_rank - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> ExteriorSquare::pair_at(std::size_t idx) const {
  for (std::size_t i = 0; i + 1 < base_rank; ++i) {
    const std::size_t row = base_rank - i - 1;
    if (idx < row) return {i, i + 1 + idx};
    idx -= row;
  }
  throw Error(ErrorCode::Dimension, "pair index out of range");
}

GroupVec ExteriorSquare::wedge(const GroupVec& a, const GroupVec& b) const {
  if (a.size() != base_rank || b.size() != base_rank)
    throw Error(ErrorCode::Dimension, "wedge arguments have wrong rank");
  GroupVec out(group.rank());
  for (std::size_t i = 0; i < base_rank; ++i)
    for (std::size_t j = i + 1; j < base_rank; ++j) out[pair_index(i, j)] = a[i] * b[j] - a[j] * b[i];
  return group.reduce(std::move(out));
}

ExteriorSquare exterior_square(const AbelianPGroup& v) {
  if (!v.is_homocyclic()) throw Error(ErrorCode::Param, "exterior square needs a homocyclic group");
  const std::size_t d = v.rank();
  const int s = d ? v.exps().front() : 0;
  return {AbelianPGroup(v.prime(), std::vector<int>(d * (d - (d ? 1 : 0)) / 2, s)), d};
}

}  // namespace schurmult
