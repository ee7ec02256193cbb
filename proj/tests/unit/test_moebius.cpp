#include "doctest.h"

#include "irrcount/moebius.hpp"
#include "irrcount/oracle.hpp"

#include <random>
#include <set>

using namespace irrcount;

TEST_CASE("theta_d") {
  CHECK(theta_d({3, 4}, 1, 5) == std::vector<std::uint32_t>{3, 4});
  CHECK(theta_d({0, 0, 0}, 3, 5) == std::vector<std::uint32_t>{0, 0, 0});
  for (std::uint32_t t1 = 0; t1 < 5; ++t1)
    for (std::uint32_t t2 = 0; t2 < 5; ++t2)
      CHECK(theta_d({t1, t2}, 2, 5) == std::vector<std::uint32_t>{2 * t1 % 5, (2 * t2 + t1 * t1) % 5});
  CHECK_THROWS_AS(theta_d({1, 1, 1}, 2, 3), DomainError);
  for (auto [q, l] : std::vector<std::pair<std::uint32_t, int>>{{3, 2}, {5, 4}, {7, 3}, {9, 2}}) {
    std::uint64_t size = 1;
    for (int k = 0; k < l; ++k) size *= q;
    std::uint32_t p = q == 9 ? 3 : q;
    for (std::uint64_t d = 1; d < 2 * p; ++d) {
      if (d % p == 0) continue;
      std::set<std::vector<std::uint32_t>> image;
      for (std::uint64_t i = 0; i < size; ++i) image.insert(theta_d(trace_from_index(i, q, l), d, q));
      CHECK(image.size() == size);
    }
  }
}

TEST_CASE("generic transform matches brute force") {
  struct Case {
    std::uint32_t q;
    int l;
    std::vector<int> ns;
  };
  for (const auto& c : std::vector<Case>{{3, 2, {1, 2, 4, 5, 7, 8}}, {5, 4, {4, 6, 7, 8}}, {7, 2, {2, 3, 4}}, {9, 2, {2, 4}}}) {
    auto F = oracle_F_provider(c.q);
    for (int n : c.ns) {
      auto I = count_all_I_brute(c.q, n, c.l);
      BigInt total = 0;
      for (std::uint64_t i = 0; i < I.size(); ++i) {
        BigInt v = I_from_F(c.q, n, trace_from_index(i, c.q, c.l), F);
        INFO("q=" << c.q << " n=" << n << " i=" << i);
        CHECK(v == I[i]);
        total += v;
      }
      CHECK(total == gauss_count(c.q, static_cast<unsigned>(n)));
    }
  }
  CHECK_THROWS_AS(I_from_F(3, 6, {0, 0}, oracle_F_provider(3)), DomainError);
  CHECK_THROWS_AS(I_from_F(3, 4, {0, 0, 0}, oracle_F_provider(3)), DomainError);
}

TEST_CASE("binary power trace identities") {
  for (std::uint64_t d = 1; d <= 40; ++d) {
    auto b = [&](std::uint64_t k) -> std::uint32_t { return (k & ~d) == 0 && k <= d ? 1 : 0; };
    std::uint32_t c = (d - 2 + 64) % 2 * b(2);
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
      std::vector<std::uint32_t> t(5);
      for (int j = 0; j < 5; ++j) t[j] = (mask >> j) & 1;
      std::uint32_t d2 = d % 2;
      CHECK(trace_of_power_identities(1, d).apply(t) == (d2 & t[0]));
      CHECK(trace_of_power_identities(2, d).apply(t) == ((b(2) & t[0]) ^ (d2 & t[1])));
      CHECK(trace_of_power_identities(3, d).apply(t) == ((b(3) & t[0]) ^ (d2 & t[2])));
      CHECK(trace_of_power_identities(4, d).apply(t) ==
            ((b(4) & t[0]) ^ (b(2) & t[1]) ^ (d2 & t[3]) ^ (c & t[0] & t[1])));
      CHECK(trace_of_power_identities(5, d).apply(t) ==
            ((b(5) & t[0]) ^ (d2 & t[4]) ^ (c & ((t[0] & t[1]) ^ (t[0] & t[2])))));
    }
  }
  CHECK(trace_of_power_identities(1, 3).to_string() == "T_1(f^3) = T_1");
  auto four = trace_of_power_identities(4, 3);
  CHECK(std::find(four.monomials.begin(), four.monomials.end(), 0b11u) != four.monomials.end());
  auto five = trace_of_power_identities(4, 5);
  CHECK(std::find(five.monomials.begin(), five.monomials.end(), 0b11u) == five.monomials.end());
  CHECK_THROWS_AS(trace_of_power_identities(6, 3), DomainError);
}

TEST_CASE("power trace identities hold on polynomial powers") {
  std::mt19937_64 rng(7);
  SubField F2(2, 1);
  for (int m = 1; m <= 6; ++m) {
    auto irr = list_irreducibles(2, m);
    for (std::uint64_t d = 1; d <= 9; ++d) {
      const PolyQ& f = irr[rng() % irr.size()];
      PolyQ g{1};
      for (std::uint64_t k = 0; k < d; ++k) g = poly_mul(F2, g, f);
      int deg = poly_degree(g);
      std::vector<std::uint32_t> tf(5, 0);
      for (int j = 1; j <= 5 && j <= m; ++j) tf[j - 1] = f[m - j];
      for (int l = 1; l <= 5; ++l) {
        std::uint32_t lhs = l <= deg ? g[deg - l] : 0;
        CHECK(trace_of_power_identities(l, d).apply(tf) == lhs);
      }
    }
  }
}

TEST_CASE("binary four-coefficient transform") {
  auto F = oracle_F_provider(2);
  CHECK(I2_from_F2_l4(4, {0, 0, 0, 0}, F) == 0);
  for (int n = 4; n <= 16; ++n) {
    auto I = count_all_I_brute(2, n, 4);
    BigInt total = 0;
    for (std::uint64_t i = 0; i < 16; ++i) {
      BigInt v = I2_from_F2_l4(n, trace_from_index(i, 2, 4), F);
      INFO("n=" << n << " i=" << i);
      CHECK(v == I[i]);
      total += v;
    }
    CHECK(total == gauss_count(2, static_cast<unsigned>(n)));
  }
  CHECK_THROWS_AS(I2_from_F2_l4(3, {0, 0, 0, 0}, F), DomainError);
}
