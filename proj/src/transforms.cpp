#include "irrcount/transforms.hpp"

namespace irrcount {

namespace {

std::uint64_t table_size(std::uint32_t q, int m) {
  if (m < 1) throw DomainError("transform dimension must be positive");
  std::uint64_t s = 1;
  for (int k = 0; k < m; ++k) s *= q;
  return s;
}

void check_size(std::size_t got, std::uint64_t want) {
  if (got != want) throw DomainError("table has " + std::to_string(got) + " entries, expected " + std::to_string(want));
}

CountTable to_integers(const std::vector<Rational>& v, const char* what) {
  CountTable out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_integer(x, what));
  return out;
}

}  // namespace

SubField subfield_for_q(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    int r = 0;
    std::uint32_t v = q;
    while (v % p == 0) {
      v /= p;
      ++r;
    }
    if (v != 1 || !is_prime(p)) throw DomainError(std::to_string(q) + " is not a prime power");
    return SubField(p, r);
  }
  throw DomainError("q must be a prime power");
}

std::vector<std::uint32_t> index_digits(std::uint64_t i, std::uint32_t q, int m) {
  std::vector<std::uint32_t> d(m);
  for (int k = 0; k < m; ++k) {
    d[k] = static_cast<std::uint32_t>(i % q);
    i /= q;
  }
  return d;
}

std::uint64_t index_from_digits(const std::vector<std::uint32_t>& d, std::uint32_t q) {
  std::uint64_t v = 0;
  for (int k = static_cast<int>(d.size()) - 1; k >= 0; --k) v = v * q + d[k];
  return v;
}

std::uint32_t index_dot(const SubField& F, std::uint64_t i, std::uint64_t j, int m) {
  std::uint32_t s = 0;
  for (int k = 0; k < m; ++k) {
    s = F.add(s, F.mul(static_cast<std::uint32_t>(i % F.q()), static_cast<std::uint32_t>(j % F.q())));
    i /= F.q();
    j /= F.q();
  }
  return s;
}

RationalMatrix matrix_S1(std::uint32_t q, int m) {
  SubField F = subfield_for_q(q);
  std::uint64_t s = table_size(q, m);
  RationalMatrix S(s, std::vector<Rational>(s, 0));
  for (std::uint64_t i = 0; i < s; ++i)
    for (std::uint64_t j = 0; j < s; ++j) S[i][j] = (i == 0 || index_dot(F, i, j, m) == 1) ? 1 : 0;
  return S;
}

RationalMatrix matrix_S1_inverse(std::uint32_t q, int m) {
  SubField F = subfield_for_q(q);
  std::uint64_t s = table_size(q, m);
  Rational w(1, BigInt(s / q));
  RationalMatrix T(s, std::vector<Rational>(s, 0));
  T[0][0] = 1;
  for (std::uint64_t i = 1; i < s; ++i) T[0][i] = -w;
  for (std::uint64_t j = 1; j < s; ++j)
    for (std::uint64_t i = 1; i < s; ++i) {
      std::uint32_t d = index_dot(F, i, j, m);
      T[j][i] = d == 1 ? w : (d == 0 ? -w : Rational(0));
    }
  return T;
}

CountTable forward_V1_from_N(const CountTable& N, std::uint32_t q, int m) {
  SubField F = subfield_for_q(q);
  std::uint64_t s = table_size(q, m);
  check_size(N.size(), s);
  CountTable V(s, 0);
  for (std::uint64_t j = 0; j < s; ++j) V[0] += N[j];
  for (std::uint64_t i = 1; i < s; ++i)
    for (std::uint64_t j = 0; j < s; ++j)
      if (index_dot(F, i, j, m) == 1) V[i] += N[j];
  return V;
}

CountTable solve_N_from_V1(const CountTable& V, std::uint32_t q, int m) {
  SubField F = subfield_for_q(q);
  std::uint64_t s = table_size(q, m);
  check_size(V.size(), s);
  BigInt den = BigInt(s / q);
  CountTable N(s, 0);
  BigInt acc0 = 0;
  for (std::uint64_t i = 1; i < s; ++i) acc0 += V[i];
  N[0] = V[0] - exact_div(acc0, den, "solve_N_from_V1");
  for (std::uint64_t j = 1; j < s; ++j) {
    BigInt acc = 0;
    for (std::uint64_t i = 1; i < s; ++i) {
      std::uint32_t d = index_dot(F, i, j, m);
      if (d == 1)
        acc += V[i];
      else if (d == 0)
        acc -= V[i];
    }
    N[j] = exact_div(acc, den, "solve_N_from_V1");
  }
  return N;
}

RationalMatrix matrix_S0(int m) {
  std::uint64_t s = table_size(2, m);
  RationalMatrix S(s, std::vector<Rational>(s, 0));
  for (std::uint64_t i = 0; i < s; ++i)
    for (std::uint64_t j = 0; j < s; ++j) S[i][j] = (i == 0 || __builtin_parityll(i & j) == 0) ? 1 : 0;
  return S;
}

RationalMatrix matrix_S0_inverse(int m) {
  std::uint64_t s = table_size(2, m);
  Rational h(1, BigInt(s / 2));
  RationalMatrix T(s, std::vector<Rational>(s, 0));
  for (std::uint64_t j = 0; j < s; ++j) {
    T[j][0] = j == 0 ? Rational(2 - static_cast<std::int64_t>(s), static_cast<std::int64_t>(s)) : Rational(1, static_cast<std::int64_t>(s / 2));
    for (std::uint64_t i = 1; i < s; ++i) T[j][i] = __builtin_parityll(i & j) ? -h : h;
  }
  return T;
}

CountTable forward_V0_from_N(const CountTable& N, int m) {
  std::uint64_t s = table_size(2, m);
  check_size(N.size(), s);
  CountTable V(s, 0);
  for (std::uint64_t i = 0; i < s; ++i)
    for (std::uint64_t j = 0; j < s; ++j)
      if (i == 0 || __builtin_parityll(i & j) == 0) V[i] += N[j];
  return V;
}

CountTable solve_restricted_domain(const CountTable& V, int m, int s) {
  std::uint64_t size = table_size(2, m);
  check_size(V.size(), size);
  if (s < 0) throw DomainError("parameterisation exponent must be nonnegative");
  auto T = matrix_S0_inverse(m);
  Rational scale(1, BigInt(1) << s);
  std::vector<Rational> out(size, 0);
  for (std::uint64_t j = 0; j < size; ++j) {
    Rational acc = 0;
    for (std::uint64_t i = 0; i < size; ++i) acc += T[j][i] * Rational(V[i]);
    out[j] = acc * scale;
  }
  return to_integers(out, "solve_restricted_domain");
}

CountTable solve_N_from_V0(const CountTable& V, int m) { return solve_restricted_domain(V, m, 0); }

RationalMatrix matrix_multiply(const RationalMatrix& a, const RationalMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RationalMatrix c(n, std::vector<Rational>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

}  // namespace irrcount
