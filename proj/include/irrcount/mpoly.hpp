#pragma once

#include "irrcount/ff_core.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace irrcount {

constexpr int kMaxVars = 8;
using Exponents = std::array<std::uint8_t, kMaxVars>;

// Multivariate polynomial in a0..a7 with coefficients in F_q (SubField indices).
struct MPoly {
  std::map<Exponents, std::uint32_t> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  std::uint32_t constant() const;
  bool uses(int var) const;
  int degree_in(int var) const;
  int total_degree() const;
  std::string to_string() const;
};

MPoly mpoly_const(const SubField& F, std::uint32_t c);
MPoly mpoly_var(int var);
MPoly mpoly_add(const SubField& F, const MPoly& a, const MPoly& b);
MPoly mpoly_sub(const SubField& F, const MPoly& a, const MPoly& b);
MPoly mpoly_scale(const SubField& F, std::uint32_t c, const MPoly& a);
MPoly mpoly_mul(const SubField& F, const MPoly& a, const MPoly& b);
MPoly mpoly_pow(const SubField& F, const MPoly& a, unsigned e);

// Named values substituted while parsing (r0, c2, i1, n, ...), as F_q indices.
using ParamMap = std::map<std::string, std::uint32_t>;

// Grammar: sums/differences of products of powers of atoms; atoms are integer
// literals, variables a0..a7 (x is a0), parameters, or parenthesised
// expressions. Division is allowed only by expressions that reduce to a
// nonzero constant.
MPoly parse_mpoly(const SubField& F, std::string_view text, const ParamMap& params);

// Univariate view in a0, coefficient j of a0^j.
PolyQ mpoly_to_univariate(const MPoly& P);
MPoly mpoly_from_univariate(const PolyQ& f);

// Evaluates an MPoly over an extension field with cached power tables.
template <class Field>
class MPolyEval {
 public:
  using Elem = typename Field::Elem;

  MPolyEval(const Field& K, const MPoly& P) : K_(&K) {
    maxdeg_.fill(0);
    for (const auto& [ex, c] : P.terms) {
      Term t;
      t.coef = K.from_sub(c);
      t.unit = c == 1;
      t.ex = ex;
      for (int v = 0; v < kMaxVars; ++v) maxdeg_[v] = std::max<int>(maxdeg_[v], ex[v]);
      terms_.push_back(t);
    }
  }

  Elem operator()(const Elem* vals) const {
    std::array<std::array<Elem, 24>, kMaxVars> pw;
    for (int v = 0; v < kMaxVars; ++v) {
      if (maxdeg_[v] == 0) continue;
      pw[v][0] = K_->one();
      pw[v][1] = vals[v];
      for (int d = 2; d <= maxdeg_[v]; ++d) pw[v][d] = K_->mul(pw[v][d - 1], vals[v]);
    }
    Elem acc = K_->zero();
    for (const auto& t : terms_) {
      Elem m = t.coef;
      bool first = t.unit;
      for (int v = 0; v < kMaxVars; ++v) {
        if (t.ex[v] == 0) continue;
        if (first) {
          m = pw[v][t.ex[v]];
          first = false;
        } else {
          m = K_->mul(m, pw[v][t.ex[v]]);
        }
      }
      acc = K_->add(acc, m);
    }
    return acc;
  }

 private:
  struct Term {
    Elem coef;
    bool unit;
    Exponents ex;
  };
  const Field* K_;
  std::vector<Term> terms_;
  std::array<int, kMaxVars> maxdeg_;
};

}  // namespace irrcount
