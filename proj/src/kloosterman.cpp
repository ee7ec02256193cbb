#include "irrcount/engine_smallchar.hpp"

#include "irrcount/config.hpp"
#include "irrcount/trace_lab.hpp"

namespace irrcount {

BigInt kloosterman(const GF2n& F, GF2n::Elem a) {
  if (a == 0) throw DomainError("Kloosterman sum is taken over a != 0");
  check_budget(F.size(), "kloosterman");
  // x = 0 gives one affine point; x != 0 gives two when z^2 + z = x + a/x^2 is solvable.
  std::uint64_t affine = 1;
  for (GF2n::Elem x = 1; x < F.size(); ++x) {
    GF2n::Elem xi = F.inv(x);
    if (F.rel_trace(x ^ F.mul(a, F.sqr(xi))) == 0) affine += 2;
  }
  return BigInt(affine + 1) - ipow(BigInt(2), F.n());
}

std::map<BigInt, std::uint64_t> kloosterman_distribution(int n) {
  GF2n F(n);
  check_budget(F.size() * static_cast<std::uint64_t>(n), "kloosterman_distribution");
  const std::uint64_t N = F.size();
  // K(a) = sum_x (-1)^{Tr(1/x + a x)}: a Walsh transform of (-1)^{Tr(1/x)} in the trace-form coordinates.
  std::vector<std::int64_t> w(N);
  for (GF2n::Elem x = 0; x < N; ++x) w[x] = F.rel_trace(x ? F.inv(x) : 0) ? -1 : 1;
  for (std::uint64_t h = 1; h < N; h <<= 1)
    for (std::uint64_t i = 0; i < N; i += 2 * h)
      for (std::uint64_t j = i; j < i + h; ++j) {
        std::int64_t u = w[j], v = w[j + h];
        w[j] = u + v;
        w[j + h] = u - v;
      }
  std::vector<std::uint64_t> coord(n);
  for (int b = 0; b < n; ++b) {
    std::uint64_t c = 0;
    for (int j = 0; j < n; ++j) c |= std::uint64_t{F.rel_trace(F.mul(GF2n::Elem{1} << b, GF2n::Elem{1} << j))} << j;
    coord[b] = c;
  }
  std::map<BigInt, std::uint64_t> dist;
  for (GF2n::Elem a = 1; a < N; ++a) {
    std::uint64_t u = 0;
    for (int b = 0; b < n; ++b)
      if ((a >> b) & 1) u ^= coord[b];
    ++dist[BigInt(w[u])];
  }
  return dist;
}

std::uint32_t kloosterman_congruence(const GF2n& F, GF2n::Elem a, std::uint32_t modulus) {
  if (modulus != 32 && modulus != 64) throw DomainError("modulus must be 32 or 64");
  if (modulus == 32 && F.n() < 5) throw DomainError("the mod 32 congruence needs n >= 5");
  if (modulus == 64 && F.n() < 6) throw DomainError("the mod 64 congruence needs n >= 6");
  std::uint32_t bits = trace_bits(F, a, 8);
  auto e = [&](int k) -> std::int64_t { return (bits >> (k - 1)) & 1; };
  std::int64_t v = 28 * e(1) + 16 * (e(1) * e(2) + e(1) * e(3) + e(4));
  if (modulus == 32) {
    v += 8 * e(2);
  } else {
    v += 40 * e(2);
    v += 32 * (e(1) * e(4) + e(1) * e(5) + e(1) * e(6) + e(1) * e(7) + e(2) * e(3) + e(2) * e(4) + e(2) * e(6) +
               e(3) * e(5) + e(1) * e(2) * e(3) + e(1) * e(2) * e(4) + e(8));
  }
  return static_cast<std::uint32_t>(v % modulus);
}

BigInt count_kloosterman_zero_mod32(int n) {
  if (n < 5) throw DomainError("the count formula needs n >= 5");
  CountFormula f;
  f.q = f.p = 2;
  f.divisor_exp = 3;
  f.validity = Validity{1, {0}, 5};
  f.terms = {{-1, named_polynomial("d2_1")}, {-2, named_polynomial("d2_2")}, {-1, named_polynomial("d8_1")}};
  return eval(f, static_cast<std::uint64_t>(n));
}

std::uint64_t count_kloosterman_zero_mod32_brute(int n) {
  std::uint64_t c = 1;
  for (const auto& [k, cnt] : kloosterman_distribution(n))
    if (k % 32 == 0) c += cnt;
  return c;
}

}  // namespace irrcount
