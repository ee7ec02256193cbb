#pragma once

#include "irrcount/bigint.hpp"
#include "irrcount/ff_core.hpp"
#include "irrcount/trace_lab.hpp"

#include <functional>
#include <vector>

namespace irrcount {

// Index of a trace vector in count tables: sum of t_k q^(k-1).
std::uint64_t trace_index(const std::vector<std::uint32_t>& t, std::uint32_t q);
std::vector<std::uint32_t> trace_from_index(std::uint64_t idx, std::uint32_t q, int l);

std::uint64_t count_F_brute(const FieldTower& F, const TraceSpec& spec);
// q^l counts indexed by trace_index.
std::vector<std::uint64_t> count_all_F_brute(const FieldTower& F, int l);
// Same over F_{2^n} using the bit-vector field; index bit k-1 is T_k.
std::vector<std::uint64_t> count_all_F_brute_gf2(int n, int l);

// Monic irreducibles of degree n over F_q, coefficient j of x^j.
void enumerate_irreducibles(std::uint32_t q, int n, const std::function<void(const PolyQ&)>& visit);
std::vector<PolyQ> list_irreducibles(std::uint32_t q, int n);

// Irreducibles whose root a has T_k(a) = t_k at the prescribed positions.
std::uint64_t count_I_brute(std::uint32_t q, int n, const TraceSpec& spec);
std::vector<std::uint64_t> count_all_I_brute(std::uint32_t q, int n, int l);

BigInt gauss_count(std::uint64_t q, unsigned n);
int moebius_mu(std::uint64_t n);

}  // namespace irrcount
