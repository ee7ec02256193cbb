#include "doctest.h"

#include "irrcount/artin_schreier.hpp"

using namespace irrcount;

namespace {

IntPoly ip(std::initializer_list<long> v) {
  IntPoly p;
  for (long x : v) p.c.emplace_back(x);
  return p;
}

ASCurve curve2(PolyQ f) { return ASCurve{2, 1, 2, std::move(f)}; }

}  // namespace

TEST_CASE("zeta numerators of small binary curves") {
  CHECK(frobenius_charpoly(curve2({0, 1, 0, 1})).poly == ip({1, 2, 2}));
  CHECK(frobenius_charpoly(curve2({1, 0, 0, 1})).poly == ip({1, 0, 2}));
  CHECK(frobenius_charpoly(curve2({0, 0, 0, 1, 0, 1})).poly == ip({1, 2, 2, 4, 4}));
  CHECK(frobenius_charpoly(curve2({0, 0, 0, 0, 0, 1, 0, 0, 0, 1})).poly == ip({1, 2, 2, 0, -4, 0, 8, 16, 16}));
  CHECK(power_sum_eval(ip({1, 2, 2}), 3) == 4);
  CHECK(power_sum_eval(ip({1, 2, 2}), 1) == -2);
  CHECK(genus_as(curve2({0, 0, 0, 0, 0, 0, 0, 1})) == 3);
  CHECK_THROWS_AS(genus_as(curve2({0, 0, 1})), DomainError);
}

TEST_CASE("numerator properties") {
  for (auto f : std::vector<PolyQ>{{0, 1, 0, 1}, {1, 0, 0, 1, 0, 1}, {0, 0, 0, 1, 0, 0, 0, 1}}) {
    auto fp = frobenius_charpoly(curve2(f));
    CHECK(satisfies_functional_equation(fp.poly, 2));
    for (int n = 1; n <= 12; ++n)
      CHECK(BigInt(affine_count(curve2(f), n)) == ipow(BigInt(2), n) - power_sum_eval(fp.poly, n));
  }
  auto ss = frobenius_charpoly(curve2({0, 0, 0, 1, 0, 1})).poly;
  CHECK(is_supersingular(ss, 2, 1));
  CHECK(!is_supersingular(ip({1, 1, 2}), 2, 1));
  ASCurve c3{3, 1, 3, {0, 0, 1}};
  auto e = frobenius_charpoly(c3);
  CHECK(e.g == 1);
  CHECK(satisfies_functional_equation(e.poly, 3));
}

TEST_CASE("recovery rejects inconsistent counts") {
  CHECK_THROWS_AS(frobenius_charpoly_from_counts(2, 1, [](int n) { return ipow(BigInt(2), n) + (n == 3 ? 1 : 0); }),
                  ValidationFailed);
}

TEST_CASE("reduction of y^q - y to prime exponent") {
  CHECK(check_extension_reduction(ASCurve{2, 2, 4, {0, 0, 0, 1}}, 1));
  CHECK(check_extension_reduction(ASCurve{2, 2, 4, {0, 0, 0, 1}}, 2));
  CHECK(check_extension_reduction(ASCurve{2, 2, 4, {1, 2, 0, 1}}, 3));
  CHECK(check_extension_reduction(ASCurve{2, 3, 8, {0, 3, 0, 1}}, 2));
  CHECK(check_extension_reduction(ASCurve{3, 2, 9, {0, 0, 1}}, 1));
  CHECK(check_extension_reduction(ASCurve{3, 2, 9, {4, 0, 1}}, 2));
  CHECK_THROWS_AS(reduce_to_prime(curve2({0, 1})), DomainError);
}

TEST_CASE("system counting matches exhaustive search") {
  SubField F2(2, 1);
  ASSystem sys;
  sys.num_vars = 3;
  sys.eqs.push_back({1, 2, parse_mpoly(F2, "a0^3 + a0", {})});
  sys.eqs.push_back({2, 2, parse_mpoly(F2, "a1*a0 + a0^5", {})});
  for (int n = 1; n <= 5; ++n) CHECK(affine_count_system(sys, n) == affine_count_system_exhaustive(sys, n));
  ASSystem single;
  single.num_vars = 2;
  single.eqs.push_back({1, 2, parse_mpoly(F2, "a0^3 + a0", {})});
  for (int n = 1; n <= 6; ++n) CHECK(affine_count_system(single, n) == affine_count(curve2({0, 1, 0, 1}), n));
  SubField F3(3, 1);
  ASSystem t;
  t.p = 3;
  t.num_vars = 3;
  t.eqs.push_back({1, 3, parse_mpoly(F3, "a0^2", {})});
  t.eqs.push_back({2, 3, parse_mpoly(F3, "a0*a1 - a1^2", {})});
  for (int n = 1; n <= 3; ++n) CHECK(affine_count_system(t, n) == affine_count_system_exhaustive(t, n));
  ASSystem bad;
  bad.num_vars = 3;
  bad.eqs.push_back({1, 2, parse_mpoly(F2, "a2", {})});
  CHECK_THROWS_AS(bad.validate(), DomainError);
}
