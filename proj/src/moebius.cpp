#include "irrcount/moebius.hpp"

#include "irrcount/ff_core.hpp"
#include "irrcount/oracle.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace irrcount {

namespace {

// Calls visit(nu) for every nu with nu_1 + 2 nu_2 + ... + k nu_k = k.
void compositions(int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> nu(k + 1, 0);
  std::function<void(int, int)> rec = [&](int j, int rest) {
    if (j == 0) {
      if (rest == 0) visit(nu);
      return;
    }
    for (int c = 0; c * j <= rest; ++c) {
      nu[j] = c;
      rec(j - 1, rest - c * j);
    }
    nu[j] = 0;
  };
  rec(k, k);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

BigInt binom_mod2(std::uint64_t d, std::uint64_t k) { return (k & ~d) == 0 ? 1 : 0; }

}  // namespace

std::vector<std::uint32_t> theta_d(const std::vector<std::uint32_t>& t, std::uint64_t d, std::uint32_t q) {
  if (d < 1) throw DomainError("theta_d needs d >= 1");
  std::uint32_t p = 0;
  for (std::uint32_t c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  int r = 0;
  for (std::uint32_t v = q; v > 1; v /= p) ++r;
  const int l = static_cast<int>(t.size());
  if (static_cast<std::uint32_t>(l) >= p) throw DomainError("theta_d requires l < p");
  SubField F(p, r);
  for (auto v : t)
    if (v >= q) throw DomainError("trace value outside F_q");
  std::vector<std::uint32_t> u(l, 0);
  for (int k = 1; k <= l; ++k) {
    compositions(k, [&](const std::vector<int>& nu) {
      int parts = 0;
      for (int j = 1; j <= k; ++j) parts += nu[j];
      std::uint32_t coef = 1;
      for (int i = 0; i < parts; ++i) coef = F.mul(coef, F.from_int(static_cast<std::int64_t>((d + p * static_cast<std::uint64_t>(parts) - i) % p)));
      std::uint32_t term = coef;
      for (int j = 1; j <= k; ++j) {
        std::uint32_t fact = 1;
        for (int i = 2; i <= nu[j]; ++i) fact = F.mul(fact, F.from_int(i));
        term = F.mul(term, F.mul(F.pow(t[j - 1], static_cast<std::uint64_t>(nu[j])), F.inv(fact)));
      }
      u[k - 1] = F.add(u[k - 1], term);
    });
  }
  return u;
}

BigInt I_from_F(std::uint32_t q, int n, const std::vector<std::uint32_t>& t, const FProvider& F) {
  if (n < 1) throw DomainError("I_from_F needs n >= 1");
  std::uint32_t p = 0;
  for (std::uint32_t c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (n % static_cast<int>(p) == 0) throw DomainError("I_from_F needs n coprime to p");
  if (t.size() >= p) throw DomainError("I_from_F requires l < p");
  PrimeField Fp(p);
  bool zero = std::all_of(t.begin(), t.end(), [](std::uint32_t v) { return v == 0; });
  BigInt total = 0;
  for (auto d : divisors(static_cast<std::uint64_t>(n))) {
    int mu = moebius_mu(d);
    if (mu == 0 || d % p == 0) continue;
    std::uint64_t dinv = Fp.inv(static_cast<std::uint32_t>(d % p));
    BigInt term = F(static_cast<int>(n / d), theta_d(t, dinv, q));
    // unreachable while p does not divide n
    if (zero && n % (p * d) == 0) term -= ipow(BigInt(q), static_cast<unsigned>(n / (p * d)));
    total += mu * term;
  }
  return exact_div(total, n, "I_from_F");
}

std::uint32_t PowerTraceIdentity::apply(const std::vector<std::uint32_t>& t) const {
  std::uint32_t v = 0;
  for (auto m : monomials) {
    std::uint32_t prod = 1;
    for (int j = 1; j <= l; ++j)
      if ((m >> (j - 1)) & 1) prod &= (j <= static_cast<int>(t.size()) ? t[j - 1] : 0) & 1;
    v ^= prod;
  }
  return v;
}

std::string PowerTraceIdentity::to_string() const {
  std::ostringstream os;
  os << "T_" << l << "(f^" << d << ") =";
  if (monomials.empty()) return os.str() + " 0";
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    os << (i ? " + " : " ");
    if (monomials[i] == 0) os << "1";
    for (int j = 1; j <= l; ++j)
      if ((monomials[i] >> (j - 1)) & 1) os << "T_" << j;
  }
  return os.str();
}

PowerTraceIdentity trace_of_power_identities(int l, std::uint64_t d) {
  if (l < 1 || l > 5) throw DomainError("trace_of_power_identities supports 1 <= l <= 5");
  if (d < 1) throw DomainError("trace_of_power_identities needs d >= 1");
  std::map<std::uint32_t, int> parity;
  compositions(l, [&](const std::vector<int>& nu) {
    // multinomial d! / (nu_1! ... nu_l! (d - sum nu)!) mod 2 as a product of binomials
    std::uint64_t rest = d;
    BigInt c = 1;
    std::uint32_t mask = 0;
    for (int j = 1; j <= l; ++j) {
      if (nu[j] == 0) continue;
      if (static_cast<std::uint64_t>(nu[j]) > rest) {
        c = 0;
        break;
      }
      c *= binom_mod2(rest, static_cast<std::uint64_t>(nu[j]));
      rest -= static_cast<std::uint64_t>(nu[j]);
      mask |= 1u << (j - 1);
    }
    if (c % 2 != 0) parity[mask] ^= 1;
  });
  PowerTraceIdentity id;
  id.l = l;
  id.d = d;
  for (const auto& [mask, bit] : parity)
    if (bit) id.monomials.push_back(mask);
  return id;
}

namespace {

struct BinaryCase {
  std::uint32_t mod;
  std::uint32_t cls;
  std::vector<std::uint32_t> t;
};

struct BinaryPart {
  std::vector<std::uint32_t> t;
  std::vector<BinaryCase> main;
  std::vector<BinaryCase> halves;
};

// Cases of n I_2(n, t): sums of mu(d) F_2(n/d, .) over d in a class, minus mu(d) F_2(n/2d, .) over odd d with n/d even.
const std::vector<BinaryPart>& binary_parts() {
  static const std::vector<BinaryPart> parts = {
      {{1, 1, 1, 0}, {{8, 1, {1, 1, 1, 0}}, {8, 3, {1, 0, 0, 0}}, {8, 5, {1, 1, 1, 1}}, {8, 7, {1, 0, 0, 1}}}, {}},
      {{1, 0, 0, 0}, {{8, 1, {1, 0, 0, 0}}, {8, 3, {1, 1, 1, 0}}, {8, 5, {1, 0, 0, 1}}, {8, 7, {1, 1, 1, 1}}}, {}},
      {{1, 1, 1, 1}, {{8, 1, {1, 1, 1, 1}}, {8, 3, {1, 0, 0, 1}}, {8, 5, {1, 1, 1, 0}}, {8, 7, {1, 0, 0, 0}}}, {}},
      {{1, 0, 0, 1}, {{8, 1, {1, 0, 0, 1}}, {8, 3, {1, 1, 1, 1}}, {8, 5, {1, 0, 0, 0}}, {8, 7, {1, 1, 1, 0}}}, {}},
      {{1, 1, 0, 0}, {{8, 1, {1, 1, 0, 0}}, {8, 3, {1, 0, 1, 0}}, {8, 5, {1, 1, 0, 1}}, {8, 7, {1, 0, 1, 1}}}, {}},
      {{1, 0, 1, 0}, {{8, 1, {1, 0, 1, 0}}, {8, 3, {1, 1, 0, 0}}, {8, 5, {1, 0, 1, 1}}, {8, 7, {1, 1, 0, 1}}}, {}},
      {{1, 1, 0, 1}, {{8, 1, {1, 1, 0, 1}}, {8, 3, {1, 0, 1, 1}}, {8, 5, {1, 1, 0, 0}}, {8, 7, {1, 0, 1, 0}}}, {}},
      {{1, 0, 1, 1}, {{8, 1, {1, 0, 1, 1}}, {8, 3, {1, 1, 0, 1}}, {8, 5, {1, 0, 1, 0}}, {8, 7, {1, 1, 0, 0}}}, {}},
      {{0, 0, 1, 0}, {{2, 1, {0, 0, 1, 0}}}, {}},
      {{0, 0, 1, 1}, {{2, 1, {0, 0, 1, 1}}}, {}},
      {{0, 1, 1, 1}, {{4, 1, {0, 1, 1, 1}}, {4, 3, {0, 1, 1, 0}}}, {}},
      {{0, 1, 1, 0}, {{4, 1, {0, 1, 1, 0}}, {4, 3, {0, 1, 1, 1}}}, {}},
      {{0, 0, 0, 0}, {{2, 1, {0, 0, 0, 0}}}, {{2, 1, {0, 0}}}},
      {{0, 0, 0, 1}, {{2, 1, {0, 0, 0, 1}}}, {{2, 1, {0, 1}}}},
      {{0, 1, 0, 0}, {{4, 1, {0, 1, 0, 0}}, {4, 3, {0, 1, 0, 1}}}, {{4, 1, {1, 0}}, {4, 3, {1, 1}}}},
      {{0, 1, 0, 1}, {{4, 1, {0, 1, 0, 1}}, {4, 3, {0, 1, 0, 0}}}, {{4, 1, {1, 1}}, {4, 3, {1, 0}}}},
  };
  return parts;
}

}  // namespace

BigInt I2_from_F2_l4(int n, const std::vector<std::uint32_t>& t, const FProvider& F) {
  if (n < 4) throw DomainError("I2_from_F2_l4 needs n >= 4");
  if (t.size() != 4) throw DomainError("I2_from_F2_l4 needs a 4-vector");
  for (auto v : t)
    if (v > 1) throw DomainError("trace value outside F_2");
  for (const auto& part : binary_parts()) {
    if (part.t != t) continue;
    BigInt total = 0;
    for (auto d : divisors(static_cast<std::uint64_t>(n))) {
      int mu = moebius_mu(d);
      if (mu == 0) continue;
      for (const auto& c : part.main)
        if (d % c.mod == c.cls) total += mu * F(static_cast<int>(n / d), c.t);
      if ((n / d) % 2 != 0) continue;
      for (const auto& c : part.halves)
        if (d % c.mod == c.cls) total -= mu * F(static_cast<int>(n / (2 * d)), c.t);
    }
    return exact_div(total, n, "I2_from_F2_l4");
  }
  throw DomainError("no binary transform case for this vector");
}

FProvider oracle_F_provider(std::uint32_t q) {
  auto cache = std::make_shared<std::map<std::pair<int, int>, std::vector<std::uint64_t>>>();
  auto mu = std::make_shared<std::mutex>();
  return [q, cache, mu](int n, const std::vector<std::uint32_t>& t) -> BigInt {
    const int l = static_cast<int>(t.size());
    std::vector<std::uint64_t>* table;
    {
      std::lock_guard<std::mutex> lock(*mu);
      auto key = std::make_pair(n, l);
      auto it = cache->find(key);
      if (it == cache->end())
        it = cache->emplace(key, q == 2 ? count_all_F_brute_gf2(n, l) : count_all_F_brute(FieldTower::from_q(q, n), l)).first;
      table = &it->second;
    }
    return BigInt((*table)[trace_index(t, q)]);
  };
}

}  // namespace irrcount
