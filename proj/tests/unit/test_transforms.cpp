#include "doctest.h"

#include "irrcount/oracle.hpp"
#include "irrcount/transforms.hpp"

#include <random>

using namespace irrcount;

namespace {
bool is_identity(const RationalMatrix& M) {
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (M[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}
}  // namespace

TEST_CASE("evaluations-to-one transform") {
  CHECK(forward_V1_from_N({0, 0, 0, 0}, 2, 2) == CountTable{0, 0, 0, 0});
  CHECK(forward_V1_from_N({5, 7}, 2, 1) == CountTable{12, 7});
  std::mt19937_64 rng(1);
  for (std::uint32_t q : {2u, 3u, 4u, 5u})
    for (int m = 1; m <= 3; ++m) {
      CHECK(is_identity(matrix_multiply(matrix_S1(q, m), matrix_S1_inverse(q, m))));
      std::uint64_t s = 1;
      for (int k = 0; k < m; ++k) s *= q;
      for (int rep = 0; rep < 20; ++rep) {
        CountTable N(s);
        for (auto& x : N) x = rng() % 1000;
        CHECK(solve_N_from_V1(forward_V1_from_N(N, q, m), q, m) == N);
      }
      CountTable c(s, 3);
      auto V = forward_V1_from_N(c, q, m);
      CHECK(V[0] == 3 * s);
      CHECK(V[1] == 3 * (s / q));
      CHECK(solve_N_from_V1(V, q, m) == c);
    }
  CHECK_THROWS_AS(solve_N_from_V1({1, 0, 0, 0, 0, 0, 0, 0, 1}, 3, 2), NonIntegralResult);
}

TEST_CASE("binary zeros transform") {
  auto inv1 = matrix_S0_inverse(1);
  CHECK(inv1[0][0] == 0);
  CHECK(inv1[0][1] == 1);
  CHECK(inv1[1][0] == 1);
  CHECK(inv1[1][1] == -1);
  CHECK(solve_N_from_V0({32, 16}, 1) == CountTable{16, 16});
  auto inv3 = matrix_S0_inverse(3);
  CHECK(inv3[0][0] * 4 == -3);
  CHECK(inv3[0][1] * 4 == 1);
  CHECK(forward_V0_from_N({1, 0, 0, 0, 0, 0, 0, 0}, 3) == CountTable(8, 1));
  std::mt19937_64 rng(2);
  for (int m = 1; m <= 3; ++m) {
    CHECK(is_identity(matrix_multiply(matrix_S0(m), matrix_S0_inverse(m))));
    for (int rep = 0; rep < 20; ++rep) {
      CountTable N(1u << m);
      for (auto& x : N) x = rng() % 1000;
      CHECK(solve_N_from_V0(forward_V0_from_N(N, m), m) == N);
    }
  }
  CountTable V{1000, 400, 300, 200};
  CHECK(solve_restricted_domain(V, 2, 0) == solve_N_from_V0(V, 2));
  CountTable W{16, 8, 8, 0};
  auto N = solve_restricted_domain(W, 2, 3);
  CHECK(N[0] * 16 == -16 + 8 + 8 + 0);
}

TEST_CASE("transform reproduces oracle tables from power traces") {
  for (auto [q, n, l] : std::vector<std::tuple<int, int, int>>{{3, 4, 2}, {5, 3, 2}, {5, 4, 3}}) {
    FieldTower F = FieldTower::from_q(q, n);
    std::uint64_t s = 1;
    for (int k = 0; k < l; ++k) s *= q;
    CountTable N(s, 0);
    enumerate_elements(F, [&](const FieldTower::Elem& a) {
      std::vector<std::uint32_t> f(l);
      for (int k = 1; k <= l; ++k) f[k - 1] = power_trace(F, a, k);
      N[trace_index(f, q)] += 1;
    });
    CountTable V(s, 0);
    V[0] = F.size();
    SubField S = F.sub();
    for (std::uint64_t i = 1; i < s; ++i)
      for (std::uint64_t j = 0; j < s; ++j)
        if (index_dot(S, i, j, l) == 1) V[i] += N[j];
    auto rec = solve_N_from_V1(V, q, l);
    CHECK(rec == N);
    auto oracle = count_all_F_brute(F, l);
    for (std::uint64_t j = 0; j < s; ++j) {
      auto t = trace_from_index(j, q, l);
      CHECK(rec[trace_index(newton_forward(S, t), q)] == oracle[j]);
    }
  }
}
