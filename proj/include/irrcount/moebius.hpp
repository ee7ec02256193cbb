#pragma once

#include "irrcount/bigint.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace irrcount {

// F_q(n, t) for a trace vector t.
using FProvider = std::function<BigInt(int n, const std::vector<std::uint32_t>& t)>;

// u_k = sum over nu_1 + 2 nu_2 + ... + k nu_k = k of d^(nu_1+...+nu_k) prod t_j^nu_j / nu_j!, over F_q.
std::vector<std::uint32_t> theta_d(const std::vector<std::uint32_t>& t, std::uint64_t d, std::uint32_t q);

// I_q(n, t) = (1/n) sum_{d | n} mu(d) F_q(n/d, theta_{d^-1}(t)), d^-1 taken mod p.
BigInt I_from_F(std::uint32_t q, int n, const std::vector<std::uint32_t>& t, const FProvider& F);

// T_l(f^d) over F_2 as a sum of monomials in T_1(f), ..., T_l(f).
struct PowerTraceIdentity {
  int l = 1;
  std::uint64_t d = 1;
  // Bit j-1 of each mask selects T_j(f); an empty mask is the constant 1.
  std::vector<std::uint32_t> monomials;

  std::uint32_t apply(const std::vector<std::uint32_t>& t) const;
  std::string to_string() const;
};

PowerTraceIdentity trace_of_power_identities(int l, std::uint64_t d);

// I_2(n, t) for a 4-vector t from the sixteen binary transform cases.
BigInt I2_from_F2_l4(int n, const std::vector<std::uint32_t>& t, const FProvider& F);

// Memoized brute-force F_q(n, t) for any l.
FProvider oracle_F_provider(std::uint32_t q);

}  // namespace irrcount
