#include "irrcount/artin_schreier.hpp"

#include <sstream>

namespace irrcount {

namespace {

std::uint32_t power_of(std::uint32_t p, int r) {
  std::uint32_t q = 1;
  for (int i = 0; i < r; ++i) q *= p;
  return q;
}

}  // namespace

bool IntPoly::operator<(const IntPoly& o) const {
  if (c.size() != o.c.size()) return c.size() < o.c.size();
  return c < o.c;
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  int d = degree();
  bool first = true;
  for (int i = 0; i <= d; ++i) {
    const BigInt& v = c[i];
    if (v == 0) continue;
    int pw = d - i;
    BigInt mag = v < 0 ? BigInt(-v) : v;
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || pw == 0) os << mag;
    if (pw > 0) os << "X";
    if (pw > 1) os << "^" << pw;
  }
  if (first) os << "0";
  return os.str();
}

std::uint32_t ASCurve::q() const { return power_of(p, r); }
std::uint32_t ASSystem::q() const { return power_of(p, r); }

void ASSystem::validate() const {
  if (num_vars < 1 || num_vars > kMaxVars) throw DomainError("system variable count out of range");
  std::vector<bool> defined(num_vars, false);
  defined[0] = true;
  for (const auto& eq : eqs) {
    if (eq.var <= 0 || eq.var >= num_vars) throw DomainError("equation variable out of range");
    if (defined[eq.var]) throw DomainError("variable defined twice");
    for (int v = 0; v < kMaxVars; ++v)
      if (eq.rhs.uses(v) && (v >= num_vars || !defined[v]))
        throw DomainError("equation uses a variable before it is defined");
    if (eq.e != p && eq.e != q()) throw DomainError("equation exponent must be p or q");
    defined[eq.var] = true;
  }
  for (int v = 0; v < num_vars; ++v)
    if (!defined[v]) throw DomainError("variable a" + std::to_string(v) + " has no equation");
}

std::uint64_t affine_count(const ASCurve& curve, int n) {
  if (curve.e != curve.p && curve.e != curve.q()) throw DomainError("curve exponent must be p or q");
  if (curve.p == 2 && curve.r == 1 && n <= 63) return count_curve_in(GF2n(n), curve.f, curve.e);
  return count_curve_in(FieldTower(curve.p, curve.r, n), curve.f, curve.e);
}

std::uint64_t affine_count_system(const ASSystem& sys, int n) {
  if (sys.p == 2 && sys.r == 1 && n <= 63) return count_system_in(GF2n(n), sys);
  return count_system_in(FieldTower(sys.p, sys.r, n), sys);
}

std::uint64_t affine_count_system_exhaustive(const ASSystem& sys, int n) {
  sys.validate();
  FieldTower K(sys.p, sys.r, n);
  unsigned __int128 space = 1;
  for (int v = 0; v < sys.num_vars; ++v) {
    space *= K.size();
    if (space > Config::budget()) throw BudgetExceeded("exhaustive system count exceeds budget");
  }
  std::vector<MPolyEval<FieldTower>> evals;
  for (const auto& eq : sys.eqs) evals.emplace_back(K, eq.rhs);
  std::vector<FieldTower::Elem> vals(kMaxVars, K.zero());
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t j = 0; j < sys.eqs.size() && ok; ++j) {
      const auto& y = vals[sys.eqs[j].var];
      ok = K.sub(K.pow(y, sys.eqs[j].e), y) == evals[j](vals.data());
    }
    if (ok) ++count;
    int v = 0;
    while (v < sys.num_vars && !K.next(vals[v])) ++v;
    if (v == sys.num_vars) break;
  }
  return count;
}

std::vector<ASCurve> reduce_to_prime(const ASCurve& curve) {
  if (curve.r <= 1) throw DomainError("reduce_to_prime needs r > 1");
  SubField F(curve.p, curve.r);
  std::vector<ASCurve> out;
  for (std::uint32_t alpha = 1; alpha < F.q(); ++alpha) {
    ASCurve c = curve;
    c.e = curve.p;
    for (auto& v : c.f) v = F.mul(alpha, v);
    out.push_back(c);
  }
  return out;
}

bool check_extension_reduction(const ASCurve& curve, int n) {
  ASCurve base = curve;
  base.e = curve.q();
  BigInt lhs = BigInt(curve.p - 1) * affine_count(base, n);
  for (const auto& c : reduce_to_prime(base)) lhs -= affine_count(c, n);
  BigInt rhs = (BigInt(curve.p) - curve.q()) * ipow(BigInt(curve.q()), n);
  return lhs == rhs;
}

int genus_as(const ASCurve& curve) {
  if (curve.e != curve.p) throw DomainError("genus formula needs the exponent p");
  int d = poly_degree(curve.f);
  if (d < 1) throw DomainError("genus formula needs deg f >= 1");
  if (d % static_cast<int>(curve.p) == 0) throw DomainError("genus formula needs deg f coprime to p");
  return static_cast<int>((curve.p - 1) * (d - 1) / 2);
}

std::vector<BigInt> power_sums(const IntPoly& poly, unsigned nmax) {
  int d = poly.degree();
  if (d < 0 || poly.c[0] != 1) throw DomainError("power sums need a monic polynomial");
  std::vector<BigInt> s(nmax + 1, 0);
  s[0] = d;
  for (unsigned k = 1; k <= nmax; ++k) {
    BigInt acc = 0;
    unsigned top = std::min<unsigned>(k - 1, static_cast<unsigned>(d));
    for (unsigned i = 1; i <= top; ++i) acc += poly.c[i] * s[k - i];
    if (k <= static_cast<unsigned>(d)) acc += BigInt(k) * poly.c[k];
    s[k] = -acc;
  }
  return s;
}

BigInt power_sum_eval(const IntPoly& poly, unsigned n) { return power_sums(poly, n)[n]; }

FrobeniusPoly frobenius_charpoly_from_counts(std::uint32_t q, int g, const std::function<BigInt(int)>& affine) {
  FrobeniusPoly out;
  out.q = q;
  out.g = g;
  out.poly.c.assign(2 * g + 1, 0);
  out.poly.c[0] = 1;
  std::vector<BigInt> S(g + 3, 0);
  for (int k = 1; k <= g; ++k) S[k] = ipow(BigInt(q), k) - affine(k);
  for (int k = 1; k <= g; ++k) {
    BigInt acc = S[k];
    for (int i = 1; i < k; ++i) acc += out.poly.c[i] * S[k - i];
    out.poly.c[k] = -exact_div(acc, k, "frobenius_charpoly");
  }
  for (int k = 0; k < g; ++k) out.poly.c[2 * g - k] = ipow(BigInt(q), g - k) * out.poly.c[k];
  auto predicted = power_sums(out.poly, g + 2);
  for (int k = g + 1; k <= g + 2; ++k) {
    BigInt actual = ipow(BigInt(q), k) - affine(k);
    if (actual != predicted[k])
      throw ValidationFailed("zeta numerator predicts " + predicted[k].str() + " at degree " + std::to_string(k) +
                             " but the count gives " + actual.str());
  }
  return out;
}

FrobeniusPoly frobenius_charpoly(const ASCurve& curve) {
  int g = genus_as(curve);
  return frobenius_charpoly_from_counts(curve.q(), g, [&](int n) { return BigInt(affine_count(curve, n)); });
}

bool satisfies_functional_equation(const IntPoly& poly, std::uint32_t q) {
  int d = poly.degree();
  if (d % 2) return false;
  int g = d / 2;
  for (int k = 0; k <= g; ++k)
    if (poly.c[2 * g - k] != ipow(BigInt(q), g - k) * poly.c[k]) return false;
  return true;
}

bool is_supersingular(const IntPoly& poly, std::uint32_t p, int r) {
  int g = poly.degree() / 2;
  for (int k = 1; k <= g; ++k) {
    unsigned ex = static_cast<unsigned>((k * r + 1) / 2);
    if (poly.c[k] % ipow(BigInt(p), ex) != 0) return false;
  }
  return true;
}

}  // namespace irrcount
