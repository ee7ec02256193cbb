#pragma once

#include "irrcount/bigint.hpp"
#include "irrcount/config.hpp"
#include "irrcount/ff_core.hpp"
#include "irrcount/mpoly.hpp"

#include <functional>
#include <mutex>
#include <string>
#include <vector>

namespace irrcount {

// Monic integer polynomial, coefficients high degree first with the leading 1 included.
struct IntPoly {
  std::vector<BigInt> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool operator==(const IntPoly& o) const { return c == o.c; }
  bool operator<(const IntPoly& o) const;
  std::string to_string() const;
};

// Curve y^e - y = f(x) over F_q, e in {p, q}.
struct ASCurve {
  std::uint32_t p = 2;
  int r = 1;
  std::uint32_t e = 2;
  PolyQ f;

  std::uint32_t q() const;
};

// y_var^e - y_var = rhs(a0, earlier variables).
struct ASEquation {
  int var = 1;
  std::uint32_t e = 2;
  MPoly rhs;
};

// Equations over F_q sharing the free variable a0, listed in dependency order.
struct ASSystem {
  std::uint32_t p = 2;
  int r = 1;
  int num_vars = 1;
  std::vector<ASEquation> eqs;
  // Number of parameterising variables the caller divides out.
  int s = 0;
  std::string label;

  std::uint32_t q() const;
  void validate() const;
};

// Numerator of the zeta function: c_0 = 1, ..., c_{2g} = q^g.
struct FrobeniusPoly {
  std::uint32_t q = 2;
  int g = 0;
  IntPoly poly;
};

std::uint64_t affine_count(const ASCurve& curve, int n);
std::uint64_t affine_count_system(const ASSystem& sys, int n);
// Counts every tuple over F_{q^n}, ignoring the fibre structure.
std::uint64_t affine_count_system_exhaustive(const ASSystem& sys, int n);

std::vector<ASCurve> reduce_to_prime(const ASCurve& curve);
// (p-1)#C - sum over alpha #C_alpha == (p-q) q^n.
bool check_extension_reduction(const ASCurve& curve, int n);

int genus_as(const ASCurve& curve);

// Recovers the numerator from affine counts over F_{q^k}, k = 1..g, by Newton's
// identities and the functional equation, then checks k = g+1, g+2.
FrobeniusPoly frobenius_charpoly_from_counts(std::uint32_t q, int g, const std::function<BigInt(int)>& affine);
FrobeniusPoly frobenius_charpoly(const ASCurve& curve);

// Sum of n-th powers of the roots.
BigInt power_sum_eval(const IntPoly& poly, unsigned n);
// Power sums rho_0..rho_nmax.
std::vector<BigInt> power_sums(const IntPoly& poly, unsigned nmax);

bool satisfies_functional_equation(const IntPoly& poly, std::uint32_t q);
bool is_supersingular(const IntPoly& poly, std::uint32_t p, int r);

// ---------------------------------------------------------------- templates

template <class Field>
std::uint64_t count_curve_in(const Field& K, const PolyQ& f, std::uint32_t e) {
  using Elem = typename Field::Elem;
  check_budget(K.size(), "affine_count");
  std::vector<Elem> coef(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) coef[j] = K.from_sub(f[j]);
  std::uint64_t hits = 0;
  std::mutex mu;
  parallel_for_chunks(K.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    std::uint64_t local = 0;
    Elem x = K.element(lo);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      Elem v = K.zero();
      for (int j = static_cast<int>(coef.size()) - 1; j >= 0; --j) v = K.add(K.mul(v, x), coef[j]);
      std::uint32_t t = e == K.p() ? K.abs_trace(v) : K.rel_trace(v);
      if (t == 0) ++local;
      K.next(x);
    }
    std::lock_guard<std::mutex> lock(mu);
    hits += local;
  });
  return hits * e;
}

template <class Field>
class SystemCounter {
 public:
  using Elem = typename Field::Elem;

  SystemCounter(const Field& K, const ASSystem& sys) : K_(K), sys_(sys) {
    sys.validate();
    for (const auto& eq : sys.eqs) evals_.emplace_back(K, eq.rhs);
    std::size_t m = sys.eqs.size();
    branch_.assign(m, false);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        if (sys.eqs[k].rhs.uses(sys.eqs[j].var)) branch_[j] = true;
  }

  // Sum over a0 in the index range [lo, hi) of the number of completions.
  std::uint64_t count_range(std::uint64_t lo, std::uint64_t hi) const {
    std::array<Elem, kMaxVars> vals{};
    std::uint64_t total = 0;
    Elem a0 = K_.element(lo);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      vals[0] = a0;
      total += descend(0, vals);
      K_.next(a0);
    }
    return total;
  }

  std::uint64_t count_at(const Elem& a0) const {
    std::array<Elem, kMaxVars> vals{};
    vals[0] = a0;
    return descend(0, vals);
  }

 private:
  std::uint64_t descend(std::size_t j, std::array<Elem, kMaxVars>& vals) const {
    if (j == sys_.eqs.size()) return 1;
    const auto& eq = sys_.eqs[j];
    Elem c = evals_[j](vals.data()), y;
    if (!K_.solve_as(eq.e, c, y)) return 0;
    if (!branch_[j]) {
      vals[eq.var] = y;
      return eq.e * descend(j + 1, vals);
    }
    std::uint64_t s = 0;
    for (std::uint32_t k = 0; k < eq.e; ++k) {
      vals[eq.var] = K_.add(y, eq.e == K_.p() ? K_.from_int(k) : K_.from_sub(k));
      s += descend(j + 1, vals);
    }
    return s;
  }

  const Field& K_;
  const ASSystem& sys_;
  std::vector<MPolyEval<Field>> evals_;
  std::vector<bool> branch_;
};

template <class Field>
std::uint64_t count_system_in(const Field& K, const ASSystem& sys) {
  check_budget(K.size(), "affine_count_system");
  SystemCounter<Field> counter(K, sys);
  std::uint64_t total = 0;
  std::mutex mu;
  parallel_for_chunks(K.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    std::uint64_t local = counter.count_range(lo, hi);
    std::lock_guard<std::mutex> lock(mu);
    total += local;
  });
  return total;
}

}  // namespace irrcount
