#pragma once

#include "irrcount/errors.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace irrcount {

bool is_prime(std::uint64_t p);

// Prime field F_p, p certified prime by trial division, p <= 2^20.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);
  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_int(std::int64_t v) const;

 private:
  std::uint32_t p_;
};

// Polynomial over a subfield, coefficient j is the coefficient of x^j.
using PolyQ = std::vector<std::uint32_t>;

// F_q = F_p[w]/(m(w)); elements are indices whose base-p digits are the
// coefficients of 1, w, w^2, ...
class SubField {
 public:
  SubField(std::uint32_t p, int r);

  std::uint32_t p() const { return pf_.p(); }
  int r() const { return r_; }
  std::uint32_t q() const { return q_; }
  const PrimeField& prime() const { return pf_; }
  const PolyQ& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return r_ == 1 ? pf_.add(a, b) : add_[a * q_ + b];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t neg(std::uint32_t a) const { return r_ == 1 ? pf_.neg(a) : neg_[a]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return r_ == 1 ? pf_.mul(a, b) : mul_[a * q_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t from_int(std::int64_t v) const { return pf_.from_int(v); }
  // Tr_{q/p}
  std::uint32_t abs_trace(std::uint32_t a) const { return r_ == 1 ? a : trace_[a]; }
  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;

 private:
  PrimeField pf_;
  int r_;
  std::uint32_t q_;
  PolyQ modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, trace_;
};

// Polynomial arithmetic over F_q.
void poly_trim(PolyQ& a);
int poly_degree(const PolyQ& a);
PolyQ poly_mul(const SubField& F, const PolyQ& a, const PolyQ& b);
PolyQ poly_mod(const SubField& F, const PolyQ& a, const PolyQ& m);
PolyQ poly_gcd(const SubField& F, PolyQ a, PolyQ b);
PolyQ poly_powmod(const SubField& F, const PolyQ& a, std::uint64_t e, const PolyQ& m);

// True iff the monic polynomial f of degree >= 1 has no nontrivial factor.
bool is_irreducible(const SubField& F, const PolyQ& f);
// Least monic irreducible of the given degree, ordered by the integer whose
// base-q digits are the non-leading coefficients (constant term lowest).
PolyQ find_irreducible(const SubField& F, int degree);
std::uint64_t poly_rank(const SubField& F, const PolyQ& f);

// Solves the F_p-linear equation y^e - y = c over a vector space of dimension
// dim, given L applied to basis vectors. Vectors are digit arrays over F_p.
class LinearSolver {
 public:
  LinearSolver() = default;
  LinearSolver(std::uint32_t p, int dim, const std::vector<std::vector<std::uint32_t>>& images);
  bool solve(const std::vector<std::uint32_t>& c, std::vector<std::uint32_t>& y) const;

 private:
  std::uint32_t p_ = 2;
  int dim_ = 0;
  std::vector<int> pivot_col_;
  std::vector<std::vector<std::uint32_t>> rows_, pre_;
};

constexpr int kMaxExt = 24;

struct FqnElem {
  std::array<std::uint32_t, kMaxExt> c{};
  bool operator==(const FqnElem& o) const { return c == o.c; }
};

// The tower F_p < F_q < F_{q^n}, with F_{q^n} built directly over F_q.
class FieldTower {
 public:
  using Elem = FqnElem;

  FieldTower(std::uint32_t p, int r, int n);
  static FieldTower from_q(std::uint32_t q, int n);

  std::uint32_t p() const { return sub_.p(); }
  int r() const { return sub_.r(); }
  int n() const { return n_; }
  std::uint32_t q() const { return sub_.q(); }
  const SubField& sub() const { return sub_; }
  const PolyQ& modulus_qr() const { return sub_.modulus(); }
  const PolyQ& modulus_qn() const { return mod_; }
  // q^n; throws DomainError when it does not fit in 63 bits.
  std::uint64_t size() const;

  Elem zero() const { return Elem{}; }
  Elem one() const { return from_sub(1); }
  Elem gen() const;
  Elem from_sub(std::uint32_t c) const {
    Elem e;
    e.c[0] = c;
    return e;
  }
  Elem from_int(std::int64_t v) const { return from_sub(sub_.from_int(v)); }
  bool is_zero(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(std::uint32_t s, const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem sqr(const Elem& a) const { return mul(a, a); }
  Elem pow(const Elem& a, std::uint64_t e) const;
  Elem inv(const Elem& a) const;
  // a^(q^i mod n)
  Elem frobenius(const Elem& a, long long i = 1) const;
  // Tr_{q^n/q}, an F_q index
  std::uint32_t rel_trace(const Elem& a) const;
  // Tr_{q^n/p}
  std::uint32_t abs_trace(const Elem& a) const { return sub_.abs_trace(rel_trace(a)); }

  std::uint64_t index(const Elem& a) const;
  Elem element(std::uint64_t idx) const;
  // Canonical successor (odometer increment); returns false after the last element.
  bool next(Elem& a) const;

  // Solves y^e - y = c with e in {p, q}; returns false when no solution exists.
  bool solve_as(std::uint32_t e, const Elem& c, Elem& y) const;

  std::string to_string(const Elem& a) const;

 private:
  void build();
  std::vector<std::uint32_t> to_prime_digits(const Elem& a) const;
  Elem from_prime_digits(const std::vector<std::uint32_t>& d) const;

  SubField sub_;
  int n_;
  PolyQ mod_;
  std::vector<Elem> frob_;
  std::vector<std::uint32_t> tr_;
  LinearSolver solve_p_, solve_q_;
};

// F_{2^n} with n <= 63 as bit vectors over the canonical modulus.
class GF2n {
 public:
  using Elem = std::uint64_t;

  explicit GF2n(int n);

  std::uint32_t p() const { return 2; }
  int r() const { return 1; }
  int n() const { return n_; }
  std::uint32_t q() const { return 2; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  std::uint64_t modulus_bits() const { return mod_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem gen() const { return n_ == 1 ? 1 : 2; }
  Elem from_sub(std::uint32_t c) const { return c & 1u; }
  Elem from_int(std::int64_t v) const { return static_cast<Elem>(v & 1); }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem sub(Elem a, Elem b) const { return a ^ b; }
  Elem neg(Elem a) const { return a; }
  Elem scale(std::uint32_t s, Elem a) const { return (s & 1u) ? a : 0; }
  Elem mul(Elem a, Elem b) const;
  Elem sqr(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  Elem frobenius(Elem a, long long i = 1) const;
  std::uint32_t rel_trace(Elem a) const {
    return static_cast<std::uint32_t>(__builtin_parityll(a & trmask_));
  }
  std::uint32_t abs_trace(Elem a) const { return rel_trace(a); }

  std::uint64_t index(Elem a) const { return a; }
  Elem element(std::uint64_t idx) const { return idx; }
  bool next(Elem& a) const {
    ++a;
    return a < size();
  }

  bool solve_as(std::uint32_t e, Elem c, Elem& y) const;

 private:
  int n_;
  std::uint64_t mod_;
  std::uint64_t trmask_ = 0;
  std::array<std::array<std::uint64_t, 256>, 8> sq_{};
  std::vector<std::uint64_t> as_rows_;
  std::vector<int> as_pivots_;
  std::vector<std::uint64_t> as_pre_;
};

// Visits every element of the tower in canonical order; BudgetExceeded when q^n is too large.
void enumerate_elements(const FieldTower& F, const std::function<void(const FieldTower::Elem&)>& visit);

}  // namespace irrcount
