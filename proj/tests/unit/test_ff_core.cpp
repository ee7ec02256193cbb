#include "doctest.h"

#include "irrcount/config.hpp"
#include "irrcount/ff_core.hpp"

#include <random>
#include <set>

using namespace irrcount;

TEST_CASE("canonical moduli") {
  SubField f2(2, 1), f3(3, 1);
  CHECK(find_irreducible(f2, 1) == PolyQ{0, 1});
  CHECK(find_irreducible(f2, 2) == PolyQ{1, 1, 1});
  CHECK(find_irreducible(f3, 2) == PolyQ{1, 0, 1});
  CHECK(find_irreducible(f2, 4) == PolyQ{1, 1, 0, 0, 1});
}

TEST_CASE("irreducibility") {
  SubField f2(2, 1);
  CHECK_FALSE(is_irreducible(f2, {1, 0, 1}));
  CHECK(is_irreducible(f2, {1, 1, 1}));
  CHECK(is_irreducible(f2, {1, 1, 0, 0, 1}));
  for (int d = 1; d <= 6; ++d) {
    PolyQ m = find_irreducible(f2, d);
    CHECK(is_irreducible(f2, m));
    for (std::uint64_t rank = 0; rank < poly_rank(f2, m); ++rank) {
      PolyQ g(d + 1, 0);
      for (int j = 0; j < d; ++j) g[j] = (rank >> j) & 1;
      g[d] = 1;
      CHECK_FALSE(is_irreducible(f2, g));
    }
  }
}

TEST_CASE("frobenius in F_4") {
  FieldTower F(2, 1, 2);
  auto g = F.gen();
  auto a = F.add(F.one(), g);
  CHECK(F.frobenius(a, 1) == g);
  CHECK(F.frobenius(a, 0) == a);
  CHECK(F.frobenius(a, 2) == a);
}

TEST_CASE("tower closure and group order") {
  std::mt19937_64 rng(7);
  for (auto [p, r, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 5}, {3, 1, 4}, {2, 2, 3}, {3, 2, 2}, {5, 1, 3}, {7, 1, 3}, {2, 3, 2}}) {
    FieldTower F(p, r, n);
    CHECK(is_irreducible(F.sub(), F.modulus_qn()));
    for (int k = 0; k < 20; ++k) {
      auto a = F.element(rng() % F.size());
      CHECK(F.frobenius(a, n) == a);
      CHECK(F.pow(a, F.size()) == a);
      if (!F.is_zero(a)) {
        CHECK(F.pow(a, F.size() - 1) == F.one());
        CHECK(F.mul(a, F.inv(a)) == F.one());
      }
      auto b = F.element(rng() % F.size());
      CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
    }
  }
}

TEST_CASE("enumeration") {
  for (auto [q, n, expect] : std::vector<std::tuple<int, int, int>>{{4, 1, 4}, {2, 3, 8}, {3, 4, 81}}) {
    auto F = FieldTower::from_q(q, n);
    std::set<std::uint64_t> seen;
    bool first_zero = false;
    enumerate_elements(F, [&](const FieldTower::Elem& a) {
      if (seen.empty()) first_zero = F.is_zero(a);
      seen.insert(F.index(a));
    });
    CHECK(seen.size() == static_cast<std::size_t>(expect));
    CHECK(first_zero);
  }
  auto old = Config::budget();
  Config::set_budget(100);
  CHECK_THROWS_AS(enumerate_elements(FieldTower(2, 1, 8), [](const FieldTower::Elem&) {}), BudgetExceeded);
  Config::set_budget(old);
}

TEST_CASE("artin-schreier solving") {
  for (auto [p, r, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 6}, {3, 1, 4}, {2, 2, 3}, {3, 2, 2}}) {
    FieldTower F(p, r, n);
    for (std::uint32_t e : {F.p(), F.q()}) {
      std::uint64_t solvable = 0;
      enumerate_elements(F, [&](const FieldTower::Elem& c) {
        FieldTower::Elem y;
        bool ok = F.solve_as(e, c, y);
        std::uint32_t tr = e == F.p() ? F.abs_trace(c) : F.rel_trace(c);
        CHECK(ok == (tr == 0));
        if (ok) {
          CHECK(F.sub(F.pow(y, e), y) == c);
          ++solvable;
        }
      });
      CHECK(solvable * e == F.size());
    }
  }
  GF2n G(9);
  for (GF2n::Elem c = 0; c < G.size(); ++c) {
    GF2n::Elem y;
    bool ok = G.solve_as(2, c, y);
    CHECK(ok == (G.rel_trace(c) == 0));
    if (ok) CHECK((G.sqr(y) ^ y) == c);
  }
}

TEST_CASE("GF2n agrees with generic tower") {
  for (int n = 1; n <= 10; ++n) {
    GF2n G(n);
    FieldTower F(2, 1, n);
    for (std::uint64_t a = 0; a < G.size(); a += 3)
      for (std::uint64_t b = 1; b < G.size(); b += 5) {
        CHECK(G.mul(a, b) == F.index(F.mul(F.element(a), F.element(b))));
        CHECK(G.sqr(a) == G.mul(a, a));
      }
    for (std::uint64_t a = 0; a < G.size(); ++a) CHECK(G.rel_trace(a) == F.rel_trace(F.element(a)));
  }
}
