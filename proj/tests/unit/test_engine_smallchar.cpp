#include "doctest.h"

#include "irrcount/engine_main.hpp"
#include "irrcount/engine_smallchar.hpp"
#include "irrcount/oracle.hpp"
#include "irrcount/formula.hpp"

#include <random>

using namespace irrcount;

namespace {

CountTable oracle_table(std::uint32_t q, int n, int l) {
  auto t = oracle_F_table(q, n, l);
  return CountTable(t.begin(), t.end());
}

}  // namespace

TEST_CASE("char 2 systems") {
  auto ps = PositionSet::prefix(3);
  auto sys = build_system_char2(ps, 4, {1}, 5);
  REQUIRE(sys.eqs.size() == 1);
  CHECK(sys.num_vars == 2);
  CHECK(sys.eqs[0].var == 1);
  CHECK_NOTHROW(sys.validate());
  CHECK(build_system_char2(ps, 0, {}, 5).eqs.empty());
  auto alt = PositionSet::prefix(4, true);
  CHECK(build_system_char2(alt, 8, {0, 0, 0}, 7).eqs.size() == 3);
  CHECK_THROWS_AS(build_system_char2(ps, 1, {0}, 4), DomainError);
  CHECK_THROWS_AS(PositionSet::prefix(6, true), DomainError);
  CHECK(V_count_char2(ps, 1, 7) == 64);
  CHECK(V_count_char2(ps, 0, 7) == 128);
}

TEST_CASE("char 2 generic and batched V agree") {
  for (int l : {3, 4, 6}) {
    auto ps = PositionSet::prefix(l);
    auto batched = V_table_char2(ps, 5);
    for (std::uint64_t i = 0; i < batched.size(); i += (l == 6 ? 7 : 1)) CHECK(V_count_char2(ps, i, 5) == batched[i]);
  }
  auto alt = PositionSet::prefix(5, true);
  auto batched = V_table_char2(alt, 7);
  for (std::uint64_t i = 0; i < 32; i += 3) CHECK(V_count_char2(alt, i, 7) == batched[i]);
}

TEST_CASE("char 2 pipeline matches oracle") {
  for (int l = 1; l <= 7; ++l)
    for (int n : {5, 7, 9}) CHECK(F_smallchar_counts(2, l, n) == oracle_table(2, n, l));
  CHECK(F_smallchar_counts(2, 5, 9, true) == oracle_table(2, 9, 5));
  CHECK(F_smallchar_counts(2, 4, 3) == oracle_table(2, 3, 4));
}

TEST_CASE("char 3 pipeline matches oracle") {
  for (int n : {2, 4, 5}) {
    auto V = V_table_char3(n);
    for (std::uint64_t i = 1; i < 27; i += 5) CHECK(V_count_char3(i, n) == V[i]);
    CHECK(F_smallchar_counts(3, 3, n) == oracle_table(3, n, 3));
  }
  CHECK_THROWS_AS(F_smallchar_counts(3, 3, 6), DomainError);
}

TEST_CASE("polynomial dictionary checksums") {
  CHECK(named_polynomial("d8_1").c.back() == 16);
  CHECK(named_polynomial("e12_4").c.back() == 729);
  CHECK(named_polynomial("d8_2").to_string() == "X^8 + 2X^6 + 4X^5 + 2X^4 + 8X^3 + 8X^2 + 16");
  CHECK(named_polynomial("g12_15").c.back() == 15625);
  CHECK(polynomial_dictionary().size() == 9 + 8 + 38);
  for (const auto& [name, p] : polynomial_dictionary()) {
    CHECK(p.c[0] == 1);
    if (name != "g2_1") CHECK(satisfies_functional_equation(p, name[0] == 'd' ? 2 : name[0] == 'e' ? 3 : 5));
  }
  std::vector<std::string> ss;
  for (const auto& [name, p] : polynomial_dictionary())
    if (name[0] == 'g' && is_supersingular(p, 5, 1)) ss.push_back(name);
  CHECK(ss == std::vector<std::string>{"g2_1", "g2_2", "g4_1", "g4_2", "g4_3", "g8_15", "g8_2", "g8_8"});
}

TEST_CASE("built-in tables evaluate") {
  CHECK(eval_paper_formula(paper_table("thm:3traces"), {0, 0, 0}, 3) == 1);
  for (const auto& id : paper_table_ids()) {
    const auto& tab = paper_table(id);
    for (const auto& e : tab.entries) CHECK(parse_formula(serialize(e.formula)) == e.formula);
  }
  for (const char* id : {"thm:3traces", "thm:4traces", "thm:5traces"}) {
    const auto& tab = paper_table(id);
    CHECK(tab.trace_vectors().size() == (std::size_t{1} << tab.l));
    for (const auto& t : tab.trace_vectors())
      for (std::uint64_t n = 9; n <= 15; n += 2) CHECK_NOTHROW(tab.entry(t, n));
  }
  CHECK_THROWS_AS(eval_paper_formula(paper_table("thm:3traces"), {0, 0, 0}, 4), ValidityError);
  CHECK_THROWS_AS(eval_paper_formula(paper_table("thm:3traces"), {0, 0}, 5), DomainError);
  CHECK_THROWS_AS(paper_table("nope"), DomainError);
  for (std::uint64_t n = 3; n <= 13; n += 2) {
    auto table = oracle_F_table(2, static_cast<int>(n), 3);
    for (const auto& t : paper_table("thm:3traces").trace_vectors())
      CHECK(eval_paper_formula(paper_table("thm:3traces"), t, n) == table[trace_index(t, 2)]);
  }
}

TEST_CASE("char 3 root identities") {
  const auto& d = polynomial_dictionary();
  std::vector<IntPoly> five{d.at("e6"), d.at("e12_1"), d.at("e12_2"), d.at("e12_3"), d.at("e12_4")};
  CHECK(root_identity_check(five, {1, 1, 1, 1, 1}, 3, {1, 2}));
  CHECK(root_identity_check({d.at("e6"), d.at("e12_1")}, {1, 1}, 9, {2, 5, 8}));
  CHECK(root_identity_check({d.at("e12_2"), d.at("e12_3"), d.at("e12_4")}, {1, 1, 1}, 9, {2, 5, 8}));
  CHECK(root_identity_check({}, {}, 1, {0}));
  CHECK(!root_identity_check({d.at("e6")}, {1}, 1, {0}));
}

TEST_CASE("Kloosterman sums") {
  GF2n F1(1);
  CHECK(kloosterman(F1, 1) == 2);
  CHECK_THROWS_AS(kloosterman(F1, 0), DomainError);
  CHECK_THROWS_AS(kloosterman_congruence(GF2n(4), 1, 32), DomainError);
  for (int n : {5, 6, 7}) {
    GF2n F(n);
    auto dist = kloosterman_distribution(n);
    std::map<BigInt, std::uint64_t> direct;
    for (GF2n::Elem a = 1; a < F.size(); ++a) {
      BigInt k = kloosterman(F, a);
      ++direct[k];
      CHECK(k % 4 == 0);
      CHECK(((k + ipow(BigInt(2), n)) % 8 == 0) == (F.rel_trace(a) == 0));
      BigInt m = k % 32;
      if (m < 0) m += 32;
      CHECK(kloosterman_congruence(F, a, 32) == m);
    }
    CHECK(dist == direct);
  }
  std::vector<int> table{5, 12, 14, 21, 63, 125, 253, 495, 1027};
  for (int n = 5; n <= 10; ++n) {
    CHECK(count_kloosterman_zero_mod32(n) == table[n - 5] + 1);
    CHECK(count_kloosterman_zero_mod32_brute(n) == static_cast<std::uint64_t>(table[n - 5] + 1));
  }
}

TEST_CASE("every built-in table matches the oracle") {
  for (const auto& id : paper_table_ids()) {
    const auto& tab = paper_table(id);
    int nmax = tab.q == 2 ? 15 : tab.q == 3 ? 9 : 8;
    int checked = 0;
    for (int n = tab.l; n <= nmax; ++n) {
      auto table = oracle_F_table(tab.q, n, tab.l);
      for (const auto& t : tab.trace_vectors()) {
        BigInt v;
        try {
          v = eval_paper_formula(tab, t, static_cast<std::uint64_t>(n));
        } catch (const ValidityError&) {
          continue;
        }
        ++checked;
        INFO(id << " n=" << n << " t=" << format_vector(t));
        CHECK(v == table[trace_index(t, tab.q)]);
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("fluctuation periods") {
  for (const auto& e : paper_table("thm:3traces").entries) {
    CHECK(fluctuation_period_check(e.formula, 24, 500));
    CHECK(!fluctuation_period_check(e.formula, 8, 200));
  }
  const auto& g = paper_table("thm:5coeffsgeneral");
  CountFormula wild = merge(g.entry({0, 0, 0, 0, 0}, 7).formula, g.entry({0, 0, 0, 1, 0}, 7).formula);
  CHECK(fluctuation_period_check(wild, 120, 500));
  CHECK(!fluctuation_period_check(wild, 24, 200));
  for (std::uint64_t n = 5; n <= 13; ++n) {
    auto table = oracle_F_table(2, static_cast<int>(n), 5);
    CHECK(eval(wild, n) == table[trace_index({0, 0, 0, 0, 0}, 2)] + table[trace_index({0, 0, 0, 1, 0}, 2)]);
  }
}

TEST_CASE("char 3 direct system") {
  for (int n : {4, 5}) {
    auto table = oracle_F_table(3, n, 3);
    for (std::uint64_t i = 0; i < 27; ++i) {
      auto t = trace_from_index(i, 3, 3);
      CHECK(direct_count_char3(t, n) == table[i]);
    }
  }
  CHECK(build_direct_system_char3({1, 0, 2}, 4).eqs.size() == 2);
  CHECK_THROWS_AS(direct_count_char3({0, 0, 0}, 6), DomainError);
  CHECK_THROWS_AS(direct_count_char3({0, 0}, 4), DomainError);
}
