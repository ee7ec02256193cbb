#include "doctest.h"

#include "irrcount/trace_lab.hpp"

#include <random>

using namespace irrcount;

TEST_CASE("char_poly and trace vectors") {
  FieldTower F8(2, 1, 3);
  auto g = F8.gen();
  CHECK(char_poly(F8, g) == F8.modulus_qn());
  CHECK(char_poly(F8, F8.zero()) == PolyQ{0, 0, 0, 1});
  FieldTower F16(2, 1, 4);
  CHECK(trace_vector(F16, F16.one(), 4) == std::vector<std::uint32_t>{0, 0, 0, 1});
  enumerate_elements(F8, [&](const FieldTower::Elem& a) {
    if (!F8.is_zero(a)) CHECK(trace_vector(F8, a, 3)[2] == 1);
  });
  CHECK(power_trace(F8, g, 2) == 0);
  CHECK(power_trace(F8, g, 1) == 0);
  std::mt19937_64 rng(3);
  for (auto [p, r, n] : std::vector<std::tuple<int, int, int>>{{3, 1, 5}, {2, 2, 3}, {5, 1, 4}, {3, 2, 3}}) {
    FieldTower F(p, r, n);
    for (int s = 0; s < 30; ++s) {
      auto a = F.element(rng() % F.size());
      PolyQ cp = char_poly(F, a);
      auto t = trace_vector(F, a, n);
      for (int k = 1; k <= n; ++k) {
        std::uint32_t c = cp[n - k];
        CHECK(t[k - 1] == ((k % 2) ? F.sub().neg(c) : c));
      }
      FieldTower::Elem norm = F.one(), c = a;
      for (int i = 0; i < n; ++i) {
        norm = F.mul(norm, c);
        c = F.frobenius(c, 1);
      }
      CHECK(t[n - 1] == norm.c[0]);
      CHECK(t[0] == F.rel_trace(a));
    }
  }
}

TEST_CASE("GF2n trace bits match the generic tower") {
  for (int n = 1; n <= 9; ++n) {
    GF2n G(n);
    FieldTower F(2, 1, n);
    for (std::uint64_t a = 0; a < G.size(); ++a) CHECK(trace_vector(G, a, 7) == trace_vector(F, F.element(a), 7));
  }
}

TEST_CASE("newton change of variable") {
  SubField F5(5, 1);
  CHECK(newton_forward(F5, {2}) == std::vector<std::uint32_t>{2});
  auto p = newton_forward(F5, {1, 2, 3});
  CHECK(p[1] == F5.from_int(1 - 4));
  CHECK(p[2] == F5.from_int(9 + 1 - 6));
  CHECK(newton_inverse(F5, {0, 0, 0, 0}) == std::vector<std::uint32_t>{0, 0, 0, 0});
  auto t = newton_inverse(F5, {1, 0, 0, 0});
  CHECK(t[0] == 1);
  CHECK(t[1] == 3);
  CHECK(newton_forward(F5, t) == std::vector<std::uint32_t>{1, 0, 0, 0});
  for (int q : {3, 5, 7, 9}) {
    SubField F(q == 9 ? 3 : q, q == 9 ? 2 : 1);
    int l = static_cast<int>(F.p()) - 1;
    std::uint64_t total = 1;
    for (int k = 0; k < l; ++k) total *= F.q();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::uint32_t> v(l);
      std::uint64_t x = idx;
      for (int k = 0; k < l; ++k) {
        v[k] = x % F.q();
        x /= F.q();
      }
      CHECK(newton_inverse(F, newton_forward(F, v)) == v);
    }
  }
  CHECK_THROWS_AS(newton_forward(SubField(3, 1), {0, 0, 0}), DomainError);
}

TEST_CASE("binomials mod p") {
  CHECK(binom_period(3, 2) == 4);
  CHECK(binom_mod_p(5, 3, 3) == 1);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    std::vector<std::vector<std::uint32_t>> pascal(201);
    for (int n = 0; n <= 200; ++n) {
      pascal[n].assign(n + 1, 1);
      for (int k = 1; k < n; ++k) pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % p;
      for (int k = 0; k <= n; ++k) CHECK(binom_mod_p(n, k, p) == pascal[n][k] % p);
    }
    for (std::uint64_t j = 1; j <= 8; ++j) {
      std::uint64_t per = binom_period(j, p);
      for (std::uint64_t n = 0; n + per <= 200; ++n)
        for (std::uint64_t k = 1; k <= j; ++k) CHECK(binom_mod_p(n, k, p) == binom_mod_p(n + per, k, p));
    }
  }
  for (int n = 3; n < 200; n += 4) {
    CHECK(binom_mod_p(n, 3, 2) == 1);
    CHECK(binom_mod_p(n, 2, 2) == 1);
    CHECK(binom_mod_p(n, 1, 2) == 1);
  }
}

TEST_CASE("linearised characteristic-2 identities") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 15; n += 2) {
    GF2n G(n);
    for (bool alt : {false, true})
      for (int l = 1; l <= 7; ++l) {
        if (alt && l != 4 && l != 5) continue;
        for (int s = 0; s < 300; ++s) {
          GF2n::Elem a0 = rng() % G.size();
          std::uint32_t r0 = rng() & 1;
          LoweredAux aux;
          std::vector<std::uint32_t> rv{r0};
          int need = lowered_aux_count(l, alt);
          GF2n::Elem avals[3];
          for (int k = 1; k <= need; ++k) {
            MPoly g = lowered_aux_rhs_char2(k, {0, 0, 0, 0}, alt);
            GF2n::Elem vals[kMaxVars] = {a0};
            GF2n::Elem c = MPolyEval<GF2n>(G, g)(vals);
            std::uint32_t rk = G.rel_trace(c);
            GF2n::Elem y;
            REQUIRE(G.solve_as(2, c ^ rk, y));
            avals[k - 1] = y ^ (rng() & 1);
            if (k == 1) { aux.a1 = avals[0]; aux.r1 = rk; }
            if (k == 2) { aux.a2 = avals[1]; aux.r2 = rk; }
            if (k == 3) { aux.a3 = avals[2]; aux.r3 = rk; }
          }
          GF2n::Elem a = G.sqr(a0) ^ a0 ^ r0;
          auto t = trace_vector(G, a, l);
          INFO("n=" << n << " l=" << l << " alt=" << alt);
          CHECK(lowered_trace_char2(G, l, a0, r0, aux, alt) == t[l - 1]);
        }
      }
  }
  CHECK_THROWS_AS(lowered_trace_char2(GF2n(5), 4, 1, 0, LoweredAux{}), DomainError);
  CHECK_THROWS_AS(lowered_component_char2(8, {0}, 5), DomainError);
}

TEST_CASE("linearised characteristic-3 identities") {
  std::mt19937_64 rng(5);
  for (int n : {4, 5, 7, 8}) {
    FieldTower F(3, 1, n);
    for (int s = 0; s < 300; ++s) {
      auto a0 = F.element(rng() % F.size());
      std::uint32_t r0 = rng() % 3;
      auto a = F.add(F.sub(F.pow(a0, 3), a0), F.from_sub(r0));
      auto t = trace_vector(F, a, 3);
      for (int l = 1; l <= 3; ++l) {
        INFO("n=" << n << " l=" << l << " r0=" << r0);
        CHECK(lowered_trace_char3(F, l, a0, r0) == t[l - 1]);
      }
    }
  }
  CHECK_THROWS_AS(lowered_trace_char3(FieldTower(3, 1, 3), 2, FieldTower(3, 1, 3).one(), 1), DomainError);
  FieldTower F6(3, 1, 6);
  for (int l = 1; l <= 3; ++l) CHECK(lowered_trace_char3(F6, l, F6.zero(), 0) == 0);
}
