#include "irrcount/ff_core.hpp"

#include "irrcount/config.hpp"

#include <algorithm>
#include <sstream>

namespace irrcount {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > (1u << 20)) throw DomainError("prime field characteristic exceeds 2^20");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<std::uint32_t>(m);
}

// ---------------------------------------------------------------- SubField

SubField::SubField(std::uint32_t p, int r) : pf_(p), r_(r), q_(p) {
  if (r < 1) throw DomainError("subfield degree must be positive");
  if (r == 1) {
    modulus_ = {0, 1};
    return;
  }
  std::uint64_t q = 1;
  for (int i = 0; i < r; ++i) q *= p;
  if (q > 1024) throw DomainError("F_q with q > 1024 and r > 1 is not supported");
  q_ = static_cast<std::uint32_t>(q);
  SubField prime(p, 1);
  modulus_ = find_irreducible(prime, r);
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  trace_.resize(q_);
  std::vector<PolyQ> polys(q_);
  for (std::uint32_t a = 0; a < q_; ++a) polys[a] = digits(a);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::vector<std::uint32_t> d(r);
    for (int k = 0; k < r; ++k) d[k] = pf_.neg(polys[a][k]);
    neg_[a] = from_digits(d);
    for (std::uint32_t b = 0; b < q_; ++b) {
      for (int k = 0; k < r; ++k) d[k] = pf_.add(polys[a][k], polys[b][k]);
      add_[a * q_ + b] = from_digits(d);
      PolyQ m = poly_mod(prime, poly_mul(prime, polys[a], polys[b]), modulus_);
      m.resize(r, 0);
      mul_[a * q_ + b] = from_digits(m);
    }
  }
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t t = 0, x = a;
    for (int i = 0; i < r; ++i) {
      t = add(t, x);
      x = pow(x, p);
    }
    trace_[a] = digits(t)[0];
  }
}

std::vector<std::uint32_t> SubField::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(r_);
  for (int k = 0; k < r_; ++k) {
    d[k] = a % p();
    a /= p();
  }
  return d;
}

std::uint32_t SubField::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t v = 0;
  for (int k = r_ - 1; k >= 0; --k) v = v * p() + (k < static_cast<int>(d.size()) ? d[k] : 0);
  return v;
}

std::uint32_t SubField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t SubField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return pow(a, q_ - 2);
}

// ---------------------------------------------------------------- polynomials

void poly_trim(PolyQ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_degree(const PolyQ& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

PolyQ poly_mul(const SubField& F, const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  poly_trim(r);
  return r;
}

PolyQ poly_mod(const SubField& F, const PolyQ& a, const PolyQ& m) {
  int dm = poly_degree(m);
  if (dm < 0) throw DomainError("polynomial division by zero");
  PolyQ r = a;
  poly_trim(r);
  std::uint32_t lead_inv = F.inv(m[dm]);
  for (int k = static_cast<int>(r.size()) - 1; k >= dm; --k) {
    std::uint32_t c = F.mul(r[k], lead_inv);
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) r[k - dm + j] = F.sub(r[k - dm + j], F.mul(c, m[j]));
  }
  if (static_cast<int>(r.size()) > dm) r.resize(dm);
  poly_trim(r);
  return r;
}

PolyQ poly_gcd(const SubField& F, PolyQ a, PolyQ b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    PolyQ r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint32_t li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

PolyQ poly_powmod(const SubField& F, const PolyQ& a, std::uint64_t e, const PolyQ& m) {
  PolyQ r{1}, b = poly_mod(F, a, m);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, b), m);
    b = poly_mod(F, poly_mul(F, b, b), m);
    e >>= 1;
  }
  return r;
}

bool is_irreducible(const SubField& F, const PolyQ& f) {
  int d = poly_degree(f);
  if (d < 1) throw DomainError("irreducibility test needs degree >= 1");
  if (d == 1) return true;
  PolyQ x{0, 1};
  PolyQ h = poly_mod(F, x, f);
  for (int i = 1; i <= d / 2; ++i) {
    h = poly_powmod(F, h, F.q(), f);
    PolyQ hx = h;
    hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
    hx[1] = F.sub(hx[1], 1);
    poly_trim(hx);
    PolyQ g = poly_gcd(F, f, hx);
    if (poly_degree(g) > 0) return false;
  }
  return true;
}

std::uint64_t poly_rank(const SubField& F, const PolyQ& f) {
  int d = poly_degree(f);
  std::uint64_t v = 0;
  for (int j = d - 1; j >= 0; --j) v = v * F.q() + f[j];
  return v;
}

PolyQ find_irreducible(const SubField& F, int degree) {
  if (degree < 1) throw DomainError("degree must be positive");
  for (std::uint64_t rank = 0;; ++rank) {
    PolyQ f(degree + 1, 0);
    std::uint64_t v = rank;
    for (int j = 0; j < degree; ++j) {
      f[j] = static_cast<std::uint32_t>(v % F.q());
      v /= F.q();
    }
    if (v != 0) throw DomainError("no irreducible found");
    f[degree] = 1;
    if (is_irreducible(F, f)) return f;
  }
}

// ---------------------------------------------------------------- LinearSolver

LinearSolver::LinearSolver(std::uint32_t p, int dim, const std::vector<std::vector<std::uint32_t>>& images)
    : p_(p), dim_(dim) {
  PrimeField pf(p);
  for (int t = 0; t < dim; ++t) {
    std::vector<std::uint32_t> v = images[t], pre(dim, 0);
    pre[t] = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::uint32_t c = v[pivot_col_[k]];
      if (c == 0) continue;
      for (int j = 0; j < dim; ++j) {
        v[j] = pf.sub(v[j], pf.mul(c, rows_[k][j]));
        pre[j] = pf.sub(pre[j], pf.mul(c, pre_[k][j]));
      }
    }
    int piv = -1;
    for (int j = 0; j < dim; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    std::uint32_t ic = pf.inv(v[piv]);
    for (int j = 0; j < dim; ++j) {
      v[j] = pf.mul(v[j], ic);
      pre[j] = pf.mul(pre[j], ic);
    }
    rows_.push_back(std::move(v));
    pre_.push_back(std::move(pre));
    pivot_col_.push_back(piv);
  }
}

bool LinearSolver::solve(const std::vector<std::uint32_t>& c, std::vector<std::uint32_t>& y) const {
  std::vector<std::uint32_t> v = c;
  y.assign(dim_, 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint32_t a = v[pivot_col_[k]];
    if (a == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(p_ - a) * rows_[k][j]) % p_);
      y[j] = static_cast<std::uint32_t>((y[j] + static_cast<std::uint64_t>(a) * pre_[k][j]) % p_);
    }
  }
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

// ---------------------------------------------------------------- FieldTower

FieldTower::FieldTower(std::uint32_t p, int r, int n) : sub_(p, r), n_(n) {
  if (n < 1 || n > kMaxExt) throw DomainError("extension degree must be in 1.." + std::to_string(kMaxExt));
  mod_ = find_irreducible(sub_, n);
  build();
}

FieldTower FieldTower::from_q(std::uint32_t q, int n) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) throw DomainError(std::to_string(q) + " is not a prime power");
    int r = 0;
    std::uint32_t v = q;
    while (v % p == 0) {
      v /= p;
      ++r;
    }
    if (v != 1) throw DomainError(std::to_string(q) + " is not a prime power");
    return FieldTower(p, r, n);
  }
  throw DomainError("q must be a prime power >= 2");
}

std::uint64_t FieldTower::size() const {
  unsigned __int128 s = 1;
  for (int i = 0; i < n_; ++i) {
    s *= q();
    if (s > (static_cast<unsigned __int128>(1) << 63)) throw DomainError("field size exceeds 2^63");
  }
  return static_cast<std::uint64_t>(s);
}

FieldTower::Elem FieldTower::gen() const {
  if (n_ == 1) {
    Elem e;
    e.c[0] = sub_.neg(mod_[0]);
    return e;
  }
  Elem e;
  e.c[1] = 1;
  return e;
}

void FieldTower::build() {
  Elem x = gen();
  Elem xq = pow(x, q());
  frob_.assign(n_, Elem{});
  Elem acc = one();
  for (int j = 0; j < n_; ++j) {
    frob_[j] = acc;
    acc = mul(acc, xq);
  }
  tr_.assign(n_, 0);
  Elem xj = one();
  for (int j = 0; j < n_; ++j) {
    Elem s = zero(), c = xj;
    for (int i = 0; i < n_; ++i) {
      s = add(s, c);
      c = frobenius(c, 1);
    }
    tr_[j] = s.c[0];
    xj = mul(xj, x);
  }
  int dim = sub_.r() * n_;
  auto make = [&](std::uint64_t e) {
    std::vector<std::vector<std::uint32_t>> images(dim);
    for (int t = 0; t < dim; ++t) {
      std::vector<std::uint32_t> d(dim, 0);
      d[t] = 1;
      Elem b = from_prime_digits(d);
      images[t] = to_prime_digits(sub(pow(b, e), b));
    }
    return LinearSolver(p(), dim, images);
  };
  solve_p_ = make(p());
  solve_q_ = sub_.r() == 1 ? solve_p_ : make(q());
}

bool FieldTower::is_zero(const Elem& a) const {
  for (int i = 0; i < n_; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

FieldTower::Elem FieldTower::add(const Elem& a, const Elem& b) const {
  Elem r;
  for (int i = 0; i < n_; ++i) r.c[i] = sub_.add(a.c[i], b.c[i]);
  return r;
}

FieldTower::Elem FieldTower::sub(const Elem& a, const Elem& b) const {
  Elem r;
  for (int i = 0; i < n_; ++i) r.c[i] = sub_.sub(a.c[i], b.c[i]);
  return r;
}

FieldTower::Elem FieldTower::neg(const Elem& a) const {
  Elem r;
  for (int i = 0; i < n_; ++i) r.c[i] = sub_.neg(a.c[i]);
  return r;
}

FieldTower::Elem FieldTower::scale(std::uint32_t s, const Elem& a) const {
  Elem r;
  for (int i = 0; i < n_; ++i) r.c[i] = sub_.mul(s, a.c[i]);
  return r;
}

FieldTower::Elem FieldTower::mul(const Elem& a, const Elem& b) const {
  Elem r;
  if (sub_.r() == 1) {
    const std::uint64_t p = sub_.p();
    std::uint64_t t[2 * kMaxExt] = {};
    for (int i = 0; i < n_; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < n_; ++j) t[i + j] += static_cast<std::uint64_t>(a.c[i]) * b.c[j];
    }
    for (int k = 2 * n_ - 2; k >= n_; --k) {
      std::uint64_t c = t[k] % p;
      if (c == 0) continue;
      std::uint64_t nc = p - c;
      for (int j = 0; j < n_; ++j) t[k - n_ + j] += nc * mod_[j];
    }
    for (int i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint32_t>(t[i] % p);
    return r;
  }
  std::uint32_t t[2 * kMaxExt] = {};
  for (int i = 0; i < n_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < n_; ++j) t[i + j] = sub_.add(t[i + j], sub_.mul(a.c[i], b.c[j]));
  }
  for (int k = 2 * n_ - 2; k >= n_; --k) {
    std::uint32_t c = t[k];
    if (c == 0) continue;
    for (int j = 0; j < n_; ++j) t[k - n_ + j] = sub_.sub(t[k - n_ + j], sub_.mul(c, mod_[j]));
  }
  for (int i = 0; i < n_; ++i) r.c[i] = t[i];
  return r;
}

FieldTower::Elem FieldTower::pow(const Elem& a, std::uint64_t e) const {
  Elem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldTower::Elem FieldTower::inv(const Elem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero");
  return pow(a, size() - 2);
}

FieldTower::Elem FieldTower::frobenius(const Elem& a, long long i) const {
  long long k = ((i % n_) + n_) % n_;
  Elem cur = a;
  for (long long s = 0; s < k; ++s) {
    Elem r;
    for (int j = 0; j < n_; ++j) {
      std::uint32_t c = cur.c[j];
      if (c == 0) continue;
      for (int m = 0; m < n_; ++m) r.c[m] = sub_.add(r.c[m], sub_.mul(c, frob_[j].c[m]));
    }
    cur = r;
  }
  return cur;
}

std::uint32_t FieldTower::rel_trace(const Elem& a) const {
  std::uint32_t s = 0;
  for (int j = 0; j < n_; ++j)
    if (a.c[j] != 0) s = sub_.add(s, sub_.mul(a.c[j], tr_[j]));
  return s;
}

std::uint64_t FieldTower::index(const Elem& a) const {
  std::uint64_t v = 0;
  for (int j = n_ - 1; j >= 0; --j) v = v * q() + a.c[j];
  return v;
}

FieldTower::Elem FieldTower::element(std::uint64_t idx) const {
  Elem e;
  for (int j = 0; j < n_; ++j) {
    e.c[j] = static_cast<std::uint32_t>(idx % q());
    idx /= q();
  }
  return e;
}

bool FieldTower::next(Elem& a) const {
  for (int j = 0; j < n_; ++j) {
    if (++a.c[j] < q()) return true;
    a.c[j] = 0;
  }
  return false;
}

std::vector<std::uint32_t> FieldTower::to_prime_digits(const Elem& a) const {
  int r = sub_.r();
  std::vector<std::uint32_t> d(r * n_);
  for (int j = 0; j < n_; ++j) {
    auto dj = sub_.digits(a.c[j]);
    for (int k = 0; k < r; ++k) d[j * r + k] = dj[k];
  }
  return d;
}

FieldTower::Elem FieldTower::from_prime_digits(const std::vector<std::uint32_t>& d) const {
  int r = sub_.r();
  Elem e;
  for (int j = 0; j < n_; ++j) {
    std::vector<std::uint32_t> dj(d.begin() + j * r, d.begin() + (j + 1) * r);
    e.c[j] = sub_.from_digits(dj);
  }
  return e;
}

bool FieldTower::solve_as(std::uint32_t e, const Elem& c, Elem& y) const {
  std::vector<std::uint32_t> yd;
  bool ok;
  if (e == p())
    ok = solve_p_.solve(to_prime_digits(c), yd);
  else if (e == q())
    ok = solve_q_.solve(to_prime_digits(c), yd);
  else
    throw DomainError("Artin-Schreier exponent must be p or q");
  if (ok) y = from_prime_digits(yd);
  return ok;
}

std::string FieldTower::to_string(const Elem& a) const {
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < n_; ++j) os << (j ? "," : "") << a.c[j];
  os << "]";
  return os.str();
}

void enumerate_elements(const FieldTower& F, const std::function<void(const FieldTower::Elem&)>& visit) {
  check_budget(F.size(), "enumerate_elements");
  FieldTower::Elem a = F.zero();
  do {
    visit(a);
  } while (F.next(a));
}

// ---------------------------------------------------------------- GF2n

GF2n::GF2n(int n) : n_(n) {
  if (n < 1 || n > 63) throw DomainError("GF2n supports 1 <= n <= 63");
  SubField f2(2, 1);
  PolyQ m = find_irreducible(f2, n);
  mod_ = 0;
  for (int j = 0; j <= n; ++j)
    if (m[j]) mod_ |= std::uint64_t{1} << j;
  for (int b = 0; b < 8; ++b)
    for (int v = 0; v < 256; ++v) {
      std::uint64_t x = static_cast<std::uint64_t>(v) << (8 * b);
      if (8 * b >= n_) x = 0;
      x &= (n_ == 64 ? ~0ull : ((std::uint64_t{1} << n_) - 1));
      sq_[b][v] = mul(x, x);
    }
  trmask_ = 0;
  for (int j = 0; j < n_; ++j) {
    Elem x = std::uint64_t{1} << j, s = 0;
    if (n_ == 1) x = 1;
    for (int i = 0; i < n_; ++i) {
      s ^= x;
      x = mul(x, x);
    }
    if (s & 1) trmask_ |= std::uint64_t{1} << j;
  }
  for (int t = 0; t < n_; ++t) {
    Elem b = std::uint64_t{1} << t;
    Elem v = mul(b, b) ^ b, pre = b;
    for (std::size_t k = 0; k < as_rows_.size(); ++k)
      if ((v >> as_pivots_[k]) & 1) {
        v ^= as_rows_[k];
        pre ^= as_pre_[k];
      }
    if (v == 0) continue;
    as_pivots_.push_back(63 - __builtin_clzll(v));
    as_rows_.push_back(v);
    as_pre_.push_back(pre);
  }
}

GF2n::Elem GF2n::mul(Elem a, Elem b) const {
  Elem r = 0;
  const Elem top = std::uint64_t{1} << n_;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= mod_;
  }
  return r;
}

GF2n::Elem GF2n::sqr(Elem a) const {
  Elem r = 0;
  for (int b = 0; a; ++b, a >>= 8) r ^= sq_[b][a & 255];
  return r;
}

GF2n::Elem GF2n::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = sqr(a);
    e >>= 1;
  }
  return r;
}

GF2n::Elem GF2n::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return pow(a, size() - 2);
}

GF2n::Elem GF2n::frobenius(Elem a, long long i) const {
  long long k = ((i % n_) + n_) % n_;
  for (long long s = 0; s < k; ++s) a = sqr(a);
  return a;
}

bool GF2n::solve_as(std::uint32_t e, Elem c, Elem& y) const {
  if (e != 2) throw DomainError("Artin-Schreier exponent must be 2 over F_2");
  Elem v = c, pre = 0;
  for (std::size_t k = 0; k < as_rows_.size(); ++k)
    if ((v >> as_pivots_[k]) & 1) {
      v ^= as_rows_[k];
      pre ^= as_pre_[k];
    }
  if (v != 0) return false;
  y = pre;
  return true;
}

}  // namespace irrcount
