#include "core/presentation.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace schurmult {

ClassTwoPresentation ClassTwoPresentation::zero(long p, int s, int d, std::vector<int> t) {
  ClassTwoPresentation P;
  P.p = p;
  P.s = s;
  P.d = d;
  P.t = std::move(t);
  P.gamma.assign(P.pair_count(), IntVec(P.k()));
  P.alpha.assign(static_cast<std::size_t>(std::max(d, 0)), IntVec(P.k()));
  return P;
}

std::size_t ClassTwoPresentation::pair_index(std::size_t i, std::size_t j) const {
  const auto n = static_cast<std::size_t>(d);
  if (i >= j || j >= n) throw Error(ErrorCode::Dimension, "pair index needs i < j < d");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

IntVec ClassTwoPresentation::w_moduli() const {
  IntVec m(k());
  for (std::size_t n = 0; n < k(); ++n) m[n] = t_modulus(n);
  return m;
}

IntVec ClassTwoPresentation::reduce_w(IntVec w) const {
  if (w.size() != k()) throw Error(ErrorCode::Dimension, "W element has wrong number of coordinates");
  for (std::size_t n = 0; n < k(); ++n) w[n] = mod_floor(w[n], t_modulus(n));
  return w;
}

IntVec ClassTwoPresentation::commutator_of(std::size_t i, std::size_t j) const {
  if (i == j) return IntVec(k());
  if (i < j) return reduce_w(gamma.at(pair_index(i, j)));
  IntVec w = gamma.at(pair_index(j, i));
  for (auto& c : w) c = -c;
  return reduce_w(std::move(w));
}

void ClassTwoPresentation::set_commutator(std::size_t i, std::size_t j, IntVec w) {
  if (i == j) throw Error(ErrorCode::Dimension, "commutator of a generator with itself is fixed");
  if (i > j) {
    for (auto& c : w) c = -c;
    std::swap(i, j);
  }
  gamma.at(pair_index(i, j)) = reduce_w(std::move(w));
}

void ClassTwoPresentation::set_power(std::size_t i, IntVec w) { alpha.at(i) = reduce_w(std::move(w)); }

std::vector<std::string> validate(const ClassTwoPresentation& P) {
  std::vector<std::string> out;
  bool arithmetic_ok = true;
  if (!is_prime(P.p)) {
    out.emplace_back("p must be prime");
    arithmetic_ok = false;
  } else if (P.p == 2) {
    out.emplace_back("p must be odd");
    arithmetic_ok = false;
  }
  if (P.s < 1) {
    out.emplace_back("s must be positive");
    arithmetic_ok = false;
  }
  if (P.d < 1) {
    out.emplace_back("d must be positive");
    arithmetic_ok = false;
  }
  if (P.k() == 0) {
    out.emplace_back("t must list at least one central generator");
    arithmetic_ok = false;
  }
  for (std::size_t n = 0; n < P.k(); ++n)
    if (P.t[n] < 1 || P.t[n] > P.s) {
      out.push_back("t_" + std::to_string(n + 1) + " must satisfy 1 <= t <= s");
      arithmetic_ok = false;
    }
  if (P.d >= 0 && (P.gamma.size() != P.pair_count() || P.alpha.size() != static_cast<std::size_t>(P.d))) {
    out.emplace_back("structure constant tables have the wrong shape");
    return out;
  }
  for (const auto& w : P.gamma)
    if (w.size() != P.k()) {
      out.emplace_back("commutator values must have k coordinates");
      return out;
    }
  for (const auto& w : P.alpha)
    if (w.size() != P.k()) {
      out.emplace_back("power values must have k coordinates");
      return out;
    }
  if (!arithmetic_ok) return out;

  const auto reduced = [&](const IntVec& w) {
    for (std::size_t n = 0; n < P.k(); ++n)
      if (sgn(w[n]) < 0 || w[n] >= P.t_modulus(n)) return false;
    return true;
  };
  for (std::size_t i = 0; i < static_cast<std::size_t>(P.d); ++i)
    for (std::size_t j = i + 1; j < static_cast<std::size_t>(P.d); ++j)
      if (!reduced(P.gamma[P.pair_index(i, j)]))
        out.push_back("comm " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " is not reduced");
  for (std::size_t i = 0; i < P.alpha.size(); ++i)
    if (!reduced(P.alpha[i])) out.push_back("pow " + std::to_string(i + 1) + " is not reduced");

  bool any = false;
  for (const auto& w : P.gamma)
    for (const auto& c : w)
      if (sgn(c) != 0) any = true;
  if (!any) {
    out.emplace_back("abelian input");
    return out;
  }
  const AbelianPGroup W = P.W();
  std::vector<GroupVec> gens;
  for (const auto& w : P.gamma) gens.push_back(W.reduce(w));
  if (subgroup_basis(W, gens).log_order() != W.log_order())
    out.emplace_back("commutators do not generate W");
  return out;
}

void require_valid(const ClassTwoPresentation& P) {
  const auto v = validate(P);
  if (v.empty()) return;
  std::string msg = "invalid presentation: " + v.front();
  for (std::size_t i = 1; i < v.size(); ++i) msg += "; " + v[i];
  throw Error(ErrorCode::Invalid, msg);
}

int log_group_order(const ClassTwoPresentation& P) {
  int total = P.s * P.d;
  for (int e : P.t) total += e;
  return total;
}

Int group_order(const ClassTwoPresentation& P) {
  require_valid(P);
  return ipow(P.p, static_cast<unsigned long>(log_group_order(P)));
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

long parse_long(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) parse_fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

Int parse_int(const std::string& tok, std::size_t line) {
  Int v;
  const bool neg = !tok.empty() && tok[0] == '-';
  const std::string digits = neg ? tok.substr(1) : tok;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || v.set_str(digits, 10) != 0)
    parse_fail(line, "expected an integer, got '" + tok + "'");
  return neg ? Int(-v) : v;
}

IntVec parse_coords(const std::vector<std::string>& toks, std::size_t from, std::size_t k, std::size_t line) {
  if (toks.size() - from != k)
    parse_fail(line, "expected " + std::to_string(k) + " coordinates, got " + std::to_string(toks.size() - from));
  IntVec w;
  for (std::size_t i = from; i < toks.size(); ++i) w.push_back(parse_int(toks[i], line));
  return w;
}

}  // namespace

ClassTwoPresentation parse_presentation(const std::string& text) {
  ClassTwoPresentation P;
  bool have_p = false, have_s = false, have_d = false, have_t = false, tables = false;
  std::set<std::size_t> seen_comm, seen_pow;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks{std::istream_iterator<std::string>(ls), {}};
    if (toks.empty()) continue;
    const std::string& key = toks[0];

    auto scalar = [&](bool& flag) {
      if (flag) parse_fail(lineno, "duplicate '" + key + "' line");
      if (tables) parse_fail(lineno, "'" + key + "' must precede comm/pow lines");
      if (toks.size() != 2) parse_fail(lineno, "'" + key + "' takes exactly one value");
      flag = true;
      return parse_long(toks[1], lineno);
    };

    if (key == "p") {
      P.p = scalar(have_p);
    } else if (key == "s") {
      P.s = static_cast<int>(scalar(have_s));
    } else if (key == "d") {
      const long d = scalar(have_d);
      if (d < 0 || d > 64) parse_fail(lineno, "d out of range");
      P.d = static_cast<int>(d);
    } else if (key == "t") {
      if (have_t) parse_fail(lineno, "duplicate 't' line");
      if (tables) parse_fail(lineno, "'t' must precede comm/pow lines");
      have_t = true;
      for (std::size_t i = 1; i < toks.size(); ++i) P.t.push_back(static_cast<int>(parse_long(toks[i], lineno)));
    } else if (key == "comm" || key == "pow") {
      if (!(have_p && have_s && have_d && have_t)) parse_fail(lineno, "p, s, d and t must come first");
      if (!tables) {
        tables = true;
        P.gamma.assign(P.pair_count(), IntVec(P.k()));
        P.alpha.assign(static_cast<std::size_t>(P.d), IntVec(P.k()));
      }
      const bool comm = key == "comm";
      const std::size_t colon = comm ? 3 : 2;
      if (toks.size() < colon + 1 || toks[colon] != ":")
        parse_fail(lineno, "expected '" + key + (comm ? " i j : ...'" : " i : ...'"));
      const long i = parse_long(toks[1], lineno);
      if (i < 1 || i > P.d) parse_fail(lineno, "generator index out of range");
      if (comm) {
        const long j = parse_long(toks[2], lineno);
        if (j < 1 || j > P.d) parse_fail(lineno, "generator index out of range");
        if (i >= j) parse_fail(lineno, "comm needs i < j");
        const std::size_t idx = P.pair_index(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        if (!seen_comm.insert(idx).second) parse_fail(lineno, "duplicate comm line");
        P.gamma[idx] = parse_coords(toks, colon + 1, P.k(), lineno);
      } else {
        if (!seen_pow.insert(static_cast<std::size_t>(i)).second) parse_fail(lineno, "duplicate pow line");
        P.alpha[static_cast<std::size_t>(i - 1)] = parse_coords(toks, colon + 1, P.k(), lineno);
      }
    } else {
      parse_fail(lineno, "unknown key '" + key + "'");
    }
  }
  if (!(have_p && have_s && have_d && have_t)) parse_fail(lineno, "missing one of p, s, d, t");
  if (!tables) {
    P.gamma.assign(P.pair_count(), IntVec(P.k()));
    P.alpha.assign(static_cast<std::size_t>(P.d), IntVec(P.k()));
  }
  return P;
}

ClassTwoPresentation read_presentation(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string serialize(const ClassTwoPresentation& P) {
  std::ostringstream os;
  os << "p " << P.p << "\ns " << P.s << "\nd " << P.d << "\nt";
  for (int e : P.t) os << ' ' << e;
  os << '\n';
  auto nonzero = [](const IntVec& w) {
    for (const auto& c : w)
      if (sgn(c) != 0) return true;
    return false;
  };
  auto coords = [&](const IntVec& w) {
    os << " :";
    for (const auto& c : w) os << ' ' << c.get_str();
    os << '\n';
  };
  for (std::size_t i = 0; i < static_cast<std::size_t>(P.d); ++i)
    for (std::size_t j = i + 1; j < static_cast<std::size_t>(P.d); ++j) {
      const IntVec& w = P.gamma.at(P.pair_index(i, j));
      if (!nonzero(w)) continue;
      os << "comm " << i + 1 << ' ' << j + 1;
      coords(w);
    }
  for (std::size_t i = 0; i < P.alpha.size(); ++i) {
    if (!nonzero(P.alpha[i])) continue;
    os << "pow " << i + 1;
    coords(P.alpha[i]);
  }
  return os.str();
}

ClassTwoGroup::ClassTwoGroup(ClassTwoPresentation P) : P_(std::move(P)) {
  if (P_.p < 2 || P_.s < 1 || P_.d < 0) throw Error(ErrorCode::Invalid, "presentation parameters out of range");
  for (int e : P_.t)
    if (e < 1) throw Error(ErrorCode::Invalid, "central generator orders must be positive");
  if (P_.gamma.size() != P_.pair_count() || P_.alpha.size() != static_cast<std::size_t>(P_.d))
    throw Error(ErrorCode::Invalid, "structure constant tables have the wrong shape");
  q_ = P_.s_modulus();
  w_mod_ = P_.w_moduli();
  const auto d = static_cast<std::size_t>(P_.d);
  comm_.assign(d, std::vector<IntVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) comm_[i][j] = P_.commutator_of(i, j);
  for (auto& w : P_.alpha) w = P_.reduce_w(std::move(w));
}

GroupElement ClassTwoGroup::identity() const { return {IntVec(static_cast<std::size_t>(P_.d)), IntVec(P_.k())}; }

GroupElement ClassTwoGroup::a(std::size_t i) const {
  GroupElement x = identity();
  x.e.at(i) = mod_floor(1, q_);
  return x;
}

GroupElement ClassTwoGroup::b(std::size_t n) const {
  GroupElement x = identity();
  x.f.at(n) = mod_floor(1, w_mod_[n]);
  return x;
}

GroupElement ClassTwoGroup::element(IntVec e, IntVec f) const {
  GroupElement x{std::move(e), std::move(f)};
  if (x.e.size() != static_cast<std::size_t>(P_.d) || x.f.size() != P_.k())
    throw Error(ErrorCode::Dimension, "element has wrong number of coordinates");
  for (auto& c : x.e) c = mod_floor(c, q_);
  for (std::size_t n = 0; n < P_.k(); ++n) x.f[n] = mod_floor(x.f[n], w_mod_[n]);
  return x;
}

bool ClassTwoGroup::is_identity(const GroupElement& x) const { return x == identity(); }

void ClassTwoGroup::check(const GroupElement& x) const {
  if (x.e.size() != static_cast<std::size_t>(P_.d) || x.f.size() != P_.k())
    throw Error(ErrorCode::Dimension, "element does not belong to this group");
}

IntVec ClassTwoGroup::correction(const IntVec& x, const IntVec& y) const {
  IntVec w(P_.k());
  const auto d = static_cast<std::size_t>(P_.d);
  for (std::size_t i = 1; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Int c = x[i] * y[j];
      for (std::size_t n = 0; n < P_.k(); ++n) w[n] += c * comm_[i][j][n];
    }
  }
  return w;
}

GroupElement ClassTwoGroup::multiply(const GroupElement& x, const GroupElement& y) const {
  check(x);
  check(y);
  GroupElement z{IntVec(x.e.size()), correction(x.e, y.e)};
  for (std::size_t n = 0; n < P_.k(); ++n) z.f[n] += x.f[n] + y.f[n];
  for (std::size_t i = 0; i < x.e.size(); ++i) {
    z.e[i] = x.e[i] + y.e[i];
    if (z.e[i] >= q_) {
      z.e[i] -= q_;
      for (std::size_t n = 0; n < P_.k(); ++n) z.f[n] += P_.alpha[i][n];
    }
  }
  for (std::size_t n = 0; n < P_.k(); ++n) z.f[n] = mod_floor(z.f[n], w_mod_[n]);
  return z;
}

GroupElement ClassTwoGroup::inverse(const GroupElement& x) const {
  check(x);
  GroupElement y{IntVec(x.e.size()), IntVec(P_.k())};
  for (std::size_t i = 0; i < x.e.size(); ++i) y.e[i] = mod_floor(-x.e[i], q_);
  const IntVec c = correction(x.e, y.e);
  for (std::size_t n = 0; n < P_.k(); ++n) {
    Int v = -x.f[n] - c[n];
    for (std::size_t i = 0; i < x.e.size(); ++i)
      if (sgn(x.e[i]) != 0) v -= P_.alpha[i][n];
    y.f[n] = mod_floor(v, w_mod_[n]);
  }
  return y;
}

GroupElement ClassTwoGroup::power(const GroupElement& x, const Int& n) const {
  GroupElement base = sgn(n) < 0 ? inverse(x) : x;
  Int m = abs(n);
  GroupElement acc = identity();
  while (sgn(m) > 0) {
    if (mpz_odd_p(m.get_mpz_t())) acc = multiply(acc, base);
    m >>= 1;
    if (sgn(m) > 0) base = multiply(base, base);
  }
  return acc;
}

GroupElement ClassTwoGroup::commutator(const GroupElement& x, const GroupElement& y) const {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

Int ClassTwoGroup::order() const { return ipow(P_.p, static_cast<unsigned long>(log_group_order(P_))); }

std::uint64_t ClassTwoGroup::index_of(const GroupElement& x) const {
  check(x);
  Int idx = 0;
  for (const auto& c : x.e) idx = idx * q_ + c;
  for (std::size_t n = 0; n < P_.k(); ++n) idx = idx * w_mod_[n] + x.f[n];
  if (!idx.fits_ulong_p()) throw Error(ErrorCode::Bound, "element index does not fit in 64 bits");
  return idx.get_ui();
}

GroupElement ClassTwoGroup::element_at(std::uint64_t idx) const {
  GroupElement x = identity();
  Int rest = static_cast<unsigned long>(idx);
  for (std::size_t n = P_.k(); n-- > 0;) {
    x.f[n] = mod_floor(rest, w_mod_[n]);
    rest /= w_mod_[n];
  }
  for (std::size_t i = x.e.size(); i-- > 0;) {
    x.e[i] = mod_floor(rest, q_);
    rest /= q_;
  }
  if (sgn(rest) != 0) throw Error(ErrorCode::Bound, "element index out of range");
  return x;
}

std::vector<GroupElement> enumerate(const ClassTwoPresentation& P, std::uint64_t max_order) {
  const ClassTwoGroup G(P);
  const Int order = G.order();
  if (order > Int(static_cast<unsigned long>(max_order)))
    throw Error(ErrorCode::Bound, "group order " + order.get_str() + " exceeds bound " + std::to_string(max_order));
  std::vector<GroupElement> out;
  out.reserve(order.get_ui());
  for (std::uint64_t i = 0; i < order.get_ui(); ++i) out.push_back(G.element_at(i));
  return out;
}

AbelianizationData abelianization_data(const ClassTwoPresentation& P) {
  require_valid(P);
  AbelianPGroup V = P.V();
  AbelianPGroup W = P.W();
  ExteriorSquare wedge = exterior_square(V);
  IntMatrix rho(P.k(), P.pair_count());
  for (std::size_t c = 0; c < P.pair_count(); ++c)
    for (std::size_t n = 0; n < P.k(); ++n) rho(n, c) = P.gamma[c][n];
  IntMatrix f(P.k(), static_cast<std::size_t>(P.d));
  for (std::size_t i = 0; i < static_cast<std::size_t>(P.d); ++i)
    for (std::size_t n = 0; n < P.k(); ++n) f(n, i) = P.alpha[i][n];
  return {V, W, wedge, HomMap{wedge.group, W, std::move(rho)}, HomMap{V, W, std::move(f)}};
}

}  // namespace schurmult
