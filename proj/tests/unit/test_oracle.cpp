#include "doctest.h"

#include "irrcount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace irrcount;

TEST_CASE("brute F counts") {
  FieldTower F8(2, 1, 3);
  CHECK(count_F_brute(F8, TraceSpec::parse("1=0,2=0,3=0")) == 1);
  for (int n = 1; n <= 8; ++n) CHECK(count_F_brute(FieldTower(2, 1, n), TraceSpec::parse("1=0")) == (1u << (n - 1)));
  CHECK(count_F_brute(FieldTower(3, 1, 4), TraceSpec{}) == 81);
  CHECK(count_all_F_brute(FieldTower(3, 1, 3), 1) == std::vector<std::uint64_t>{9, 9, 9});
  auto t = count_all_F_brute(FieldTower(2, 1, 4), 4);
  CHECK(t.size() == 16);
  CHECK(std::accumulate(t.begin(), t.end(), std::uint64_t{0}) == 16);
  CHECK(count_F_brute(FieldTower(2, 1, 4), TraceSpec::parse("2=1,4=*")) == count_F_brute(FieldTower(2, 1, 4), TraceSpec::parse("2=1")));
}

TEST_CASE("orbit scan agrees with direct enumeration") {
  for (auto [p, r, n, l] : std::vector<std::tuple<int, int, int, int>>{{2, 1, 6, 4}, {3, 1, 4, 3}, {2, 2, 3, 2}, {5, 1, 3, 3}, {3, 2, 2, 2}}) {
    FieldTower F(p, r, n);
    std::vector<std::uint64_t> direct(static_cast<std::size_t>(std::pow(F.q(), l)), 0);
    enumerate_elements(F, [&](const FieldTower::Elem& a) { ++direct[trace_index(trace_vector(F, a, l), F.q())]; });
    CHECK(count_all_F_brute(F, l) == direct);
  }
  for (int n = 1; n <= 10; ++n) CHECK(count_all_F_brute_gf2(n, 5) == count_all_F_brute(FieldTower(2, 1, n), 5));
}

TEST_CASE("irreducible enumeration") {
  CHECK(list_irreducibles(2, 2) == std::vector<PolyQ>{{1, 1, 1}});
  auto four = list_irreducibles(2, 4);
  CHECK(four.size() == 3);
  CHECK(std::find(four.begin(), four.end(), PolyQ{1, 1, 0, 0, 1}) != four.end());
  CHECK(std::find(four.begin(), four.end(), PolyQ{1, 0, 0, 1, 1}) != four.end());
  CHECK(std::find(four.begin(), four.end(), PolyQ{1, 1, 1, 1, 1}) != four.end());
  CHECK(list_irreducibles(3, 2).size() == 3);
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 8}, {2, 17}, {3, 5}, {3, 11}, {4, 4}, {4, 9}, {5, 4}, {5, 7}})
    CHECK(BigInt(list_irreducibles(q, n).size()) == gauss_count(q, n));
}

TEST_CASE("brute I counts") {
  CHECK(count_I_brute(2, 4, TraceSpec::parse("1=0,2=0,3=0,4=0")) == 0);
  CHECK(count_I_brute(2, 4, TraceSpec::parse("1=0,2=0,3=1,4=1")) == 1);
  for (auto [q, n, l] : std::vector<std::tuple<int, int, int>>{{2, 7, 4}, {3, 5, 2}, {5, 4, 3}, {4, 3, 2}}) {
    auto t = count_all_I_brute(q, n, l);
    CHECK(BigInt(std::accumulate(t.begin(), t.end(), std::uint64_t{0})) == gauss_count(q, n));
  }
}

TEST_CASE("gauss formula") {
  CHECK(gauss_count(2, 1) == 2);
  CHECK(gauss_count(2, 4) == 3);
  CHECK(gauss_count(5, 2) == 10);
}
