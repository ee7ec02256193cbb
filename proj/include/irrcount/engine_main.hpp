#pragma once

#include "irrcount/artin_schreier.hpp"
#include "irrcount/formula.hpp"
#include "irrcount/trace_lab.hpp"

#include <vector>

namespace irrcount {

// p-bar_{i,nbar}(a) = -1/nbar + sum_k i_k a^{k+1}, coefficient j of a^j.
PolyQ build_indicator_poly(const std::vector<std::uint32_t>& i, std::uint32_t nbar, std::uint32_t q);

// One curve y^p - y = alpha * p-bar_i(a) over F_q with its zeta numerator.
struct IndicatorCurve {
  std::uint64_t index = 0;
  std::uint32_t alpha = 1;
  ASCurve curve;
  FrobeniusPoly zeta;
};

struct MainDerivation {
  FormulaSet set;
  std::vector<IndicatorCurve> curves;

  // Sum of the degrees of all recovered numerators.
  std::uint64_t root_count() const;
};

// All q^l formulas for n = nbar mod p via the indirect method; cached per (q, l, nbar).
const MainDerivation& derive_formula_set(std::uint32_t q, int l, std::uint32_t nbar);

// p^l (pl - p - l) + p
BigInt expected_root_count(std::uint32_t p, int l);

// a_k^q - a_k = a^k - t'_k / nbar for k = 1..l, with t' = newton_forward(t).
ASSystem build_direct_system(std::uint32_t q, int l, const std::vector<std::uint32_t>& t, std::uint32_t nbar);
// Affine count of the direct system divided by q^l.
BigInt direct_count(std::uint32_t q, const std::vector<std::uint32_t>& t, int n);

struct FormulaMismatch {
  std::vector<std::uint32_t> t;
  std::uint64_t n = 0;
  BigInt expected, derived;
};

struct VerificationReport {
  std::uint64_t checked = 0;
  std::vector<FormulaMismatch> mismatches;
  // n values skipped because they fall outside the formulas' validity.
  std::vector<std::uint64_t> skipped;

  bool clean() const { return mismatches.empty(); }
};

// Brute-force F_q(n, t) table of length q^l indexed by trace_index.
std::vector<std::uint64_t> oracle_F_table(std::uint32_t q, int n, int l);

VerificationReport verify_formula_set(const FormulaSet& fs, const std::vector<std::uint64_t>& n_list);

}  // namespace irrcount
