#pragma once

#include "irrcount/artin_schreier.hpp"
#include "irrcount/bigint.hpp"

#include <map>
#include <string>
#include <vector>

namespace irrcount {

// Values of n a formula applies to: n mod modulus in classes and n >= min_n.
struct Validity {
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> classes{0};
  int min_n = 1;

  bool allows(std::uint64_t n) const;
  std::string describe() const;
  // Values of n allowed by both.
  Validity intersect(const Validity& o) const;
  bool operator==(const Validity& o) const = default;
};

struct FormulaTerm {
  Rational coef;
  IntPoly poly;
  // Set for polynomials that do not have the norm sqrt(q) symmetry.
  bool auxiliary = false;

  bool operator==(const FormulaTerm& o) const = default;
};

// (lead * q^n + sum coef * rho_n(poly)) / q^divisor_exp.
struct CountFormula {
  std::uint32_t q = 2, p = 2;
  int r = 1;
  int divisor_exp = 0;
  BigInt lead = 1;
  Validity validity;
  std::vector<FormulaTerm> terms;

  // Merges equal polynomials, drops zero terms, sorts by degree then coefficients,
  // and cancels common powers of q between lead, coefficients and divisor.
  void canonicalize();
  bool operator==(const CountFormula& o) const = default;
};

BigInt eval(const CountFormula& f, std::uint64_t n);
// q^divisor_exp * eval(f, n) - lead * q^n, without the validity or integrality check.
Rational fluctuation(const CountFormula& f, std::uint64_t n);
// Formula for the sum of two counts with equal q and divisor, valid where both are.
CountFormula merge(const CountFormula& a, const CountFormula& b);
// Sum of |coef| * deg over the terms.
Rational dimension_bound(const CountFormula& f);

// A family of formulas keyed by trace vector.
struct FormulaSet {
  std::uint32_t q = 2, p = 2;
  int r = 1, l = 0;
  std::uint32_t nbar = 1;
  std::string label;
  std::map<std::vector<std::uint32_t>, CountFormula> formulas;

  const CountFormula& at(const std::vector<std::uint32_t>& t) const;
  bool operator==(const FormulaSet& o) const = default;
};

// Canonical JSON: sorted keys, no whitespace, big integers as decimal strings.
std::string serialize(const CountFormula& f);
CountFormula parse_formula(const std::string& text);
std::string serialize(const FormulaSet& fs);
FormulaSet parse_formula_set(const std::string& text);

// Parses "1,0,2" into a trace vector.
std::vector<std::uint32_t> parse_vector(const std::string& text);
std::string format_vector(const std::vector<std::uint32_t>& v);

}  // namespace irrcount
