#pragma once

#include "irrcount/artin_schreier.hpp"
#include "irrcount/formula.hpp"
#include "irrcount/transforms.hpp"

#include <map>
#include <string>
#include <vector>

namespace irrcount {

// ------------------------------------------------------------ char 2 systems

// Trace positions (1-based, at most 7) covered by an index vector; bit k of i selects positions[k].
struct PositionSet {
  std::vector<int> positions;
  bool alternative = false;

  static PositionSet prefix(int l, bool alternative = false);
  int size() const { return static_cast<int>(positions.size()); }
  // Auxiliary variables needed by the components selected in i.
  int aux_count(std::uint64_t i) const;
  void validate() const;
};

// Equations a_k^2 + a_k = g_k(a0) + r_k for the auxiliary variables and
// y^2 + y = sum of the selected linearised components, for a = a0^2 + a0 + r0.
// r holds r0 followed by one entry per auxiliary variable.
ASSystem build_system_char2(const PositionSet& ps, std::uint64_t i, const std::vector<std::uint32_t>& r, int n);

// #{a in F_{2^n} : i . (T_k(a))_k = 0}, averaged over all specialisations of r.
BigInt V_count_char2(const PositionSet& ps, std::uint64_t i, int n);
// All V counts at once from a single pass over (a0, r, auxiliary roots).
CountTable V_table_char2(const PositionSet& ps, int n);

// ------------------------------------------------------------ char 3 systems

// y^3 - y = sum_k i_k C_k(a0, r0) - 1/n over F_3 with a = a0^3 - a0 + r0.
ASSystem build_system_char3(std::uint64_t i, std::uint32_t r0, int n);
// #{a in F_{3^n} : i . (T_1, T_2, T_3)(a) = 1}.
BigInt V_count_char3(std::uint64_t i, int n);
CountTable V_table_char3(int n);
// a_1^3 - a_1 = C_2(a0, t1/n) - t2/n, a_2^3 - a_2 = C_3(a0, t1/n) - t3/n over F_3.
ASSystem build_direct_system_char3(const std::vector<std::uint32_t>& t, int n);
// Affine count of the direct system divided by 27; equals F_3(n, t).
BigInt direct_count_char3(const std::vector<std::uint32_t>& t, int n);

// q^l counts F_q(n, t) for q = 2 (odd n, l <= 7) or q = 3 (n coprime to 3, l = 3).
CountTable F_smallchar_counts(std::uint32_t q, int l, int n, bool alternative = false);

// ------------------------------------------------------------ formula tables

struct NamedTerm {
  Rational coef;
  std::string name;
};

struct PaperEntry {
  std::vector<std::uint32_t> t;
  std::vector<NamedTerm> named;
  CountFormula formula;
};

struct PaperFormulaTable {
  std::string id;
  std::string description;
  std::uint32_t q = 2;
  int l = 0;
  // F = q^{n-l} - (1/divisor) sum c rho_n(poly)
  std::uint64_t divisor = 1;
  std::vector<PaperEntry> entries;

  std::vector<std::vector<std::uint32_t>> trace_vectors() const;
  // Entry for t whose validity covers n; ValidityError if t is known but n is not covered.
  const PaperEntry& entry(const std::vector<std::uint32_t>& t, std::uint64_t n) const;
};

// Named polynomials: d2_1 .. d8_4, e2_1 .. e12_4 (e6), g2_1 .. g12_15.
const std::map<std::string, IntPoly>& polynomial_dictionary();
const IntPoly& named_polynomial(const std::string& name);

std::vector<std::string> paper_table_ids();
const PaperFormulaTable& paper_table(const std::string& id);
BigInt eval_paper_formula(const PaperFormulaTable& table, const std::vector<std::uint32_t>& t, std::uint64_t n);

// True iff sum_k coef_k rho_n(poly_k) = 0 for every n <= horizon with n mod modulus in classes.
bool root_identity_check(const std::vector<IntPoly>& polys, const std::vector<BigInt>& coefs, std::uint32_t modulus,
                         const std::vector<std::uint32_t>& classes, unsigned horizon = 200);

// fluct(n + period) == q^{period/2} fluct(n) for all valid n with n + period <= horizon.
bool fluctuation_period_check(const CountFormula& f, unsigned period, unsigned horizon);

// ------------------------------------------------------------ Kloosterman

// K(a) = #E(a) - 2^n with E(a): y^2 + xy = x^3 + a projective over F_{2^n}.
BigInt kloosterman(const GF2n& F, GF2n::Elem a);
// Distribution of K(a) over a != 0.
std::map<BigInt, std::uint64_t> kloosterman_distribution(int n);
// Congruence for K(a) from the characteristic polynomial coefficients of a, modulus 32 or 64.
std::uint32_t kloosterman_congruence(const GF2n& F, GF2n::Elem a, std::uint32_t modulus);
// #{a in F_{2^n} : K(a) = 0 mod 32}, a = 0 included, from the genus-7 formula.
BigInt count_kloosterman_zero_mod32(int n);
// The same count by enumeration.
std::uint64_t count_kloosterman_zero_mod32_brute(int n);

}  // namespace irrcount
