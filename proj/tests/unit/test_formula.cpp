#include "doctest.h"

#include "irrcount/engine_smallchar.hpp"
#include "irrcount/formula.hpp"

using namespace irrcount;

namespace {

CountFormula simple() {
  CountFormula f;
  f.q = f.p = 2;
  f.divisor_exp = 1;
  f.validity = Validity{2, {1}, 1};
  f.terms = {{Rational(1), named_polynomial("d2_1")}};
  f.canonicalize();
  return f;
}

}  // namespace

TEST_CASE("evaluation") {
  CountFormula f;
  f.q = f.p = 3;
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(eval(f, n) == ipow(BigInt(3), static_cast<unsigned>(n)));
  CountFormula g = simple();
  CHECK(eval(g, 1) == 0);
  CHECK(eval(g, 3) == 6);
  CHECK(eval(g, 5) == 20);
  CHECK_THROWS_AS(eval(g, 2), ValidityError);
  g.divisor_exp = 5;
  CHECK_THROWS_AS(eval(g, 5), NonIntegralResult);
  CHECK(dimension_bound(simple()) == 2);
}

TEST_CASE("canonical form and serialization") {
  CountFormula f = simple();
  f.terms.push_back({Rational(-1), named_polynomial("d2_1")});
  f.terms.push_back({Rational(1, 2), named_polynomial("d4_1")});
  f.terms.push_back({Rational(1, 2), named_polynomial("d2_2")});
  f.canonicalize();
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[0].poly == named_polynomial("d2_2"));
  CHECK(parse_formula(serialize(f)) == f);
  CHECK(serialize(parse_formula(serialize(f))) == serialize(f));
  CHECK(serialize(f).find(' ') == std::string::npos);
  for (const auto& id : paper_table_ids())
    for (const auto& e : paper_table(id).entries) CHECK(parse_formula(serialize(e.formula)) == e.formula);
  const auto& t4 = paper_table("thm:4traces");
  bool has = false;
  for (const auto& e : t4.entries)
    for (const auto& t : parse_formula(serialize(e.formula)).terms)
      has = has || t.poly.to_string() == "X^8 + 2X^6 + 4X^5 + 2X^4 + 8X^3 + 8X^2 + 16";
  CHECK(has);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_formula("{"), ParseError);
  CHECK_THROWS_AS(parse_formula("{\"q\":2}"), ParseError);
  std::string good = serialize(simple());
  std::string bad = good;
  bad.replace(bad.find("[\"1\",\"2\",\"2\"]"), 13, "[\"2\",\"2\",\"2\"]");
  CHECK_THROWS_AS(parse_formula(bad), ParseError);
  std::string bad_int = good;
  bad_int.replace(bad_int.find("\"num\":\"1\""), 9, "\"num\":\"x\"");
  CHECK_THROWS_AS(parse_formula(bad_int), ParseError);
  CHECK(parse_vector("1,0,2") == std::vector<std::uint32_t>{1, 0, 2});
  CHECK(format_vector({1, 0, 2}) == "1,0,2");
  CHECK_THROWS_AS(parse_vector("1,,2"), ParseError);
}

TEST_CASE("merge is the sum of evaluations") {
  const auto& g = paper_table("thm:4coeffsgeneral");
  auto ts = g.trace_vectors();
  REQUIRE(ts.size() >= 2);
  CountFormula a = g.entry(ts[0], 6).formula, b = g.entry(ts[1], 6).formula;
  CountFormula m = merge(a, b);
  for (std::uint64_t n = 4; n <= 40; ++n) CHECK(eval(m, n) == eval(a, n) + eval(b, n));
  CHECK(parse_formula(serialize(m)) == m);
  CountFormula odd = simple(), even = simple();
  even.validity = Validity{2, {0}, 1};
  CountFormula none = merge(odd, even);
  for (std::uint64_t n = 1; n <= 6; ++n) CHECK(!none.validity.allows(n));
  CountFormula mod3 = simple();
  mod3.validity = Validity{3, {1}, 4};
  CHECK(merge(odd, mod3).validity == Validity{6, {1}, 4});
  CountFormula other = simple();
  other.divisor_exp = 2;
  CHECK_THROWS_AS(merge(odd, other), DomainError);
}

TEST_CASE("fluctuation bound on built-in tables") {
  for (const auto& id : paper_table_ids())
    for (const auto& e : paper_table(id).entries) {
      Rational bound = dimension_bound(e.formula);
      for (std::uint64_t n = 1; n <= 60; ++n) {
        Rational fl = fluctuation(e.formula, n);
        CHECK(fl * fl <= bound * bound * ipow(BigInt(e.formula.q), static_cast<unsigned>(n)));
      }
    }
}
