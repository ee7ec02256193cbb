#pragma once

#include "irrcount/ff_core.hpp"
#include "irrcount/mpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace irrcount {

// Prescribed traces: 1-based position -> value in F_q. Absent positions are wildcards.
struct TraceSpec {
  std::map<int, std::uint32_t> values;

  int max_position() const { return values.empty() ? 0 : values.rbegin()->first; }
  bool matches(const std::vector<std::uint32_t>& t) const;
  // Parses "1=0,2=1,4=*".
  static TraceSpec parse(const std::string& text);
};

// Product of (X - a^{q^i}) over the conjugates, coefficient j of X^j.
PolyQ char_poly(const FieldTower& F, const FieldTower::Elem& a);

// (T_1(a), ..., T_l(a)) with T_k = (-1)^k times the coefficient of X^{n-k}; T_k = 0 for k > n.
std::vector<std::uint32_t> trace_vector(const FieldTower& F, const FieldTower::Elem& a, int l);
std::vector<std::uint32_t> trace_vector(const GF2n& F, GF2n::Elem a, int l);
// Bit k-1 holds T_k(a).
std::uint32_t trace_bits(const GF2n& F, GF2n::Elem a, int l);

// T_1(a^k)
std::uint32_t power_trace(const FieldTower& F, const FieldTower::Elem& a, std::uint64_t k);

// Power-sum traces p_k(t_1..t_k) and the inverse change of variable, over F_q with l < p.
std::vector<std::uint32_t> newton_forward(const SubField& F, const std::vector<std::uint32_t>& t);
std::vector<std::uint32_t> newton_inverse(const SubField& F, const std::vector<std::uint32_t>& tp);

std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);
std::uint64_t binom_period(std::uint64_t j, std::uint32_t p);

// Auxiliary data for the linearised characteristic-2 trace identities.
struct LoweredAux {
  std::optional<std::uint64_t> a1, a2, a3;
  std::optional<std::uint32_t> r1, r2, r3;
};

// Linearised right-hand side of T_l(a0^2 + a0 + r0) as an MPoly in a0..a3 with
// r_k and binom(n, k) mod 2 substituted. alternative selects the second
// parameterisation for l = 4, 5. r holds r0..r3 (missing entries must not be referenced).
MPoly lowered_component_char2(int l, const std::vector<std::uint32_t>& r, int n, bool alternative = false);
// Number of auxiliary variables the component needs (0, 2 or 3).
int lowered_aux_count(int l, bool alternative = false);
// Right-hand sides of the auxiliary equations a_k^2 + a_k = g_k(a0) + r_k.
MPoly lowered_aux_rhs_char2(int k, const std::vector<std::uint32_t>& r, bool alternative = false);

// T_1 of the linearised expression; equals T_l(a0^2 + a0 + r0) for odd n.
std::uint32_t lowered_trace_char2(const GF2n& F, int l, GF2n::Elem a0, std::uint32_t r0, const LoweredAux& aux,
                                  bool alternative = false);

// Argument of T_1 in the characteristic-3 identities for T_l(a0^3 - a0 + r0), l <= 3.
MPoly lowered_component_char3(int l, std::uint32_t r0, std::uint64_t n);
std::uint32_t lowered_trace_char3(const FieldTower& F, int l, const FieldTower::Elem& a0, std::uint32_t r0);

}  // namespace irrcount
