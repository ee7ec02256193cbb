#include "doctest.h"

#include "irrcount/engine_main.hpp"
#include "irrcount/oracle.hpp"
#include "irrcount/transforms.hpp"

using namespace irrcount;

TEST_CASE("indicator polynomial") {
  CHECK(build_indicator_poly({1, 0, 0, 0}, 1, 5) == PolyQ{4, 1});
  CHECK(build_indicator_poly({0, 0, 0, 2}, 2, 5) == PolyQ{2, 0, 0, 0, 2});
  CHECK_THROWS_AS(build_indicator_poly({0, 0}, 1, 5), DomainError);
  std::map<int, int> by_degree;
  for (std::uint64_t i = 1; i < 125; ++i) ++by_degree[poly_degree(build_indicator_poly(index_digits(i, 5, 3), 1, 5))];
  CHECK(by_degree[1] == 4);
  CHECK(by_degree[2] == 20);
  CHECK(by_degree[3] == 100);
}

TEST_CASE("main algorithm q=3 l=2") {
  CHECK(expected_root_count(3, 2) == 12);
  for (std::uint32_t nbar : {1u, 2u}) {
    const auto& d = derive_formula_set(3, 2, nbar);
    CHECK(d.root_count() == 12);
    CHECK(d.set.formulas.size() == 9);
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n : {2, 4, 5, 7, 8})
      if (n % 3 == nbar) ns.push_back(n);
    auto rep = verify_formula_set(d.set, ns);
    CHECK(rep.checked == 9 * ns.size());
    CHECK(rep.clean());
  }
}

TEST_CASE("main algorithm q=7 l=2") {
  for (std::uint32_t nbar = 1; nbar <= 3; ++nbar) {
    const auto& d = derive_formula_set(7, 2, nbar);
    CHECK(d.root_count() == expected_root_count(7, 2));
    auto rep = verify_formula_set(d.set, {nbar});
    CHECK(rep.clean());
  }
}

TEST_CASE("main algorithm over F_9") {
  const auto& d = derive_formula_set(9, 2, 1);
  auto rep = verify_formula_set(d.set, {1, 4});
  CHECK(rep.checked == 162);
  CHECK(rep.clean());
}

TEST_CASE("formula set invariants") {
  const auto& fs = derive_formula_set(5, 2, 2).set;
  for (std::uint64_t n : {2, 7, 12, 17, 22}) {
    BigInt s = 0;
    for (const auto& [t, f] : fs.formulas) s += eval(f, n);
    CHECK(s == ipow(BigInt(5), n));
  }
  SubField F(5, 1);
  for (const auto& [t, f] : fs.formulas) {
    bool zero = std::all_of(t.begin(), t.end(), [](auto v) { return v == 0; });
    int plus = 0, minus = 0;
    std::uint64_t j = index_from_digits(newton_forward(F, t), 5);
    for (std::uint64_t i = 1; i < 25; ++i) {
      auto dot = index_dot(F, i, j, 2);
      plus += dot == 0;
      minus += dot == 1;
    }
    CHECK(plus == (zero ? 24 : 4));
    CHECK(minus == (zero ? 0 : 5));
  }
  CHECK_THROWS_AS(derive_formula_set(3, 3, 1), DomainError);
  CHECK_THROWS_AS(derive_formula_set(5, 2, 0), DomainError);
}

TEST_CASE("direct method systems") {
  for (auto t : std::vector<std::vector<std::uint32_t>>{{0, 0}, {1, 2}, {2, 0}, {0, 1}})
    CHECK(direct_count(3, t, 4) == count_F_brute(FieldTower(3, 1, 4), TraceSpec::parse("1=" + std::to_string(t[0]) + ",2=" + std::to_string(t[1]))));
  auto table = oracle_F_table(7, 3, 2);
  for (std::uint64_t idx : {0, 5, 17, 48})
    CHECK(direct_count(7, index_digits(idx, 7, 2), 3) == table[idx]);
  CHECK_THROWS_AS(build_direct_system(3, 3, {0, 0, 0}, 1), DomainError);
}
