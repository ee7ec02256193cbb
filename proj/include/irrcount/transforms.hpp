#pragma once

#include "irrcount/bigint.hpp"
#include "irrcount/ff_core.hpp"

#include <vector>

namespace irrcount {

using CountTable = std::vector<BigInt>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Base-q digits (i_0, ..., i_{m-1}) of an index, each an F_q element.
std::vector<std::uint32_t> index_digits(std::uint64_t i, std::uint32_t q, int m);
std::uint64_t index_from_digits(const std::vector<std::uint32_t>& d, std::uint32_t q);
// i . j over F_q.
std::uint32_t index_dot(const SubField& F, std::uint64_t i, std::uint64_t j, int m);
SubField subfield_for_q(std::uint32_t q);

// Evaluations-to-one transform: V(0) = sum N, V(i) = sum over i.j = 1 of N(j).
CountTable forward_V1_from_N(const CountTable& N, std::uint32_t q, int m);
CountTable solve_N_from_V1(const CountTable& V, std::uint32_t q, int m);
RationalMatrix matrix_S1(std::uint32_t q, int m);
RationalMatrix matrix_S1_inverse(std::uint32_t q, int m);

// Binary zeros transform: V(0) = sum N, V(i) = sum over i.j = 0 of N(j).
CountTable forward_V0_from_N(const CountTable& N, int m);
CountTable solve_N_from_V0(const CountTable& V, int m);
RationalMatrix matrix_S0(int m);
RationalMatrix matrix_S0_inverse(int m);

// Binary zeros transform over a domain A with V(0) = |A| and an extra 1/2^s factor.
CountTable solve_restricted_domain(const CountTable& V, int m, int s);

RationalMatrix matrix_multiply(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace irrcount
