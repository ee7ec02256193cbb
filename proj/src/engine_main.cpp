#include "irrcount/engine_main.hpp"

#include "irrcount/config.hpp"
#include "irrcount/oracle.hpp"
#include "irrcount/transforms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace irrcount {

namespace {

void require_main_range(std::uint32_t q, int l, std::uint32_t nbar, const SubField& F) {
  if (l < 1) throw DomainError("l must be at least 1");
  if (static_cast<std::uint32_t>(l) >= F.p()) throw DomainError("the main algorithm needs l < p");
  if (nbar == 0 || nbar >= F.p()) throw DomainError("nbar must lie in 1..p-1");
  (void)q;
}

// Histogram of (Tr(a), Tr(a^2), ..., Tr(a^l)) over F_{q^k}, indexed by trace_index.
std::vector<std::uint64_t> power_trace_histogram(const SubField& F, int l, int k) {
  FieldTower K(F.p(), F.r(), k);
  check_budget(K.size(), "power_trace_histogram");
  std::uint64_t cells = 1;
  for (int m = 0; m < l; ++m) cells *= F.q();
  std::vector<std::uint64_t> hist(cells, 0);
  std::mutex mu;
  parallel_for_chunks(K.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    std::vector<std::uint64_t> local(cells, 0);
    FieldTower::Elem a = K.element(lo);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      FieldTower::Elem pw = a;
      std::uint64_t cell = 0, scale = 1;
      for (int m = 0; m < l; ++m) {
        cell += scale * K.rel_trace(pw);
        scale *= F.q();
        if (m + 1 < l) pw = K.mul(pw, a);
      }
      ++local[cell];
      K.next(a);
    }
    std::lock_guard<std::mutex> lock(mu);
    for (std::uint64_t c = 0; c < cells; ++c) hist[c] += local[c];
  });
  return hist;
}

// Representatives of F_q^x / F_p^x.
std::vector<std::uint32_t> coset_representatives(const SubField& F) {
  std::vector<bool> seen(F.q(), false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t a = 1; a < F.q(); ++a) {
    if (seen[a]) continue;
    reps.push_back(a);
    for (std::uint32_t c = 1; c < F.p(); ++c) seen[F.mul(a, F.from_int(c))] = true;
  }
  return reps;
}

int top_digit(const std::vector<std::uint32_t>& i) {
  for (int k = static_cast<int>(i.size()) - 1; k >= 0; --k)
    if (i[k]) return k;
  return -1;
}

}  // namespace

PolyQ build_indicator_poly(const std::vector<std::uint32_t>& i, std::uint32_t nbar, std::uint32_t q) {
  SubField F = subfield_for_q(q);
  if (nbar % F.p() == 0) throw DomainError("nbar must be coprime to p");
  int top = top_digit(i);
  if (top < 0) throw DomainError("indicator polynomial needs i != 0");
  PolyQ f(top + 2, 0);
  f[0] = F.neg(F.inv(F.from_int(nbar)));
  for (int k = 0; k <= top; ++k) {
    if (i[k] >= q) throw DomainError("index digit out of range");
    f[k + 1] = i[k];
  }
  return f;
}

std::uint64_t MainDerivation::root_count() const {
  std::uint64_t s = 0;
  for (const auto& c : curves) s += static_cast<std::uint64_t>(c.zeta.poly.degree());
  return s;
}

BigInt expected_root_count(std::uint32_t p, int l) {
  BigInt pl = ipow(BigInt(p), l);
  return pl * (BigInt(p) * l - p - l) + p;
}

namespace {

MainDerivation derive_uncached(std::uint32_t q, int l, std::uint32_t nbar) {
  SubField F = subfield_for_q(q);
  require_main_range(q, l, nbar, F);
  const std::uint32_t p = F.p();
  const int gmax = static_cast<int>((p - 1) * (l - 1) / 2);
  std::vector<std::vector<std::uint64_t>> hist(gmax + 3);
  for (int k = 1; k <= gmax + 2; ++k) hist[k] = power_trace_histogram(F, l, k);
  const std::uint64_t cells = hist[1].size();
  std::vector<std::vector<std::uint32_t>> cell_traces(cells);
  for (std::uint64_t c = 0; c < cells; ++c) cell_traces[c] = index_digits(c, q, l);
  const std::uint32_t c0 = F.neg(F.inv(F.from_int(nbar)));
  const auto reps = coset_representatives(F);

  MainDerivation out;
  for (std::uint64_t idx = 1; idx < cells; ++idx) {
    auto digits = index_digits(idx, q, l);
    PolyQ f = build_indicator_poly(digits, nbar, q);
    for (std::uint32_t alpha : reps) {
      IndicatorCurve ic;
      ic.index = idx;
      ic.alpha = alpha;
      ic.curve = ASCurve{p, F.r(), p, f};
      for (auto& v : ic.curve.f) v = F.mul(alpha, v);
      int g = genus_as(ic.curve);
      auto affine = [&](int k) {
        std::uint32_t shift = F.mul(F.from_int(k), c0);
        BigInt hits = 0;
        for (std::uint64_t c = 0; c < cells; ++c) {
          if (!hist[k][c]) continue;
          std::uint32_t u = shift;
          for (int m = 0; m < l; ++m)
            if (digits[m]) u = F.add(u, F.mul(digits[m], cell_traces[c][m]));
          if (F.abs_trace(F.mul(alpha, u)) == 0) hits += hist[k][c];
        }
        return hits * p;
      };
      ic.zeta = frobenius_charpoly_from_counts(q, g, affine);
      out.curves.push_back(std::move(ic));
    }
  }

  FormulaSet& fs = out.set;
  fs.q = q;
  fs.p = p;
  fs.r = F.r();
  fs.l = l;
  fs.nbar = nbar;
  fs.label = "main:q=" + std::to_string(q) + ",l=" + std::to_string(l) + ",nbar=" + std::to_string(nbar);
  for (std::uint64_t tidx = 0; tidx < cells; ++tidx) {
    auto t = index_digits(tidx, q, l);
    std::uint64_t j = index_from_digits(newton_forward(F, t), q);
    CountFormula cf;
    cf.q = q;
    cf.p = p;
    cf.r = F.r();
    cf.divisor_exp = l;
    cf.validity = Validity{p, {nbar}, 1};
    for (const auto& c : out.curves) {
      if (c.zeta.poly.degree() == 0) continue;
      std::uint32_t dot = index_dot(F, c.index, j, l);
      if (dot > 1) continue;
      FormulaTerm term;
      term.coef = dot == 0 ? 1 : -1;
      term.poly = c.zeta.poly;
      term.auxiliary = !satisfies_functional_equation(c.zeta.poly, q);
      cf.terms.push_back(std::move(term));
    }
    cf.canonicalize();
    fs.formulas[t] = std::move(cf);
  }
  return out;
}

}  // namespace

const MainDerivation& derive_formula_set(std::uint32_t q, int l, std::uint32_t nbar) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, int, std::uint32_t>, std::unique_ptr<MainDerivation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{q, l, nbar}];
  if (!slot) slot = std::make_unique<MainDerivation>(derive_uncached(q, l, nbar));
  return *slot;
}

ASSystem build_direct_system(std::uint32_t q, int l, const std::vector<std::uint32_t>& t, std::uint32_t nbar) {
  SubField F = subfield_for_q(q);
  if (l < 1 || static_cast<std::uint32_t>(l) >= F.p()) throw DomainError("the direct method needs 1 <= l < p");
  if (static_cast<int>(t.size()) != l) throw DomainError("trace vector length must equal l");
  auto tp = newton_forward(F, t);
  bool zero = std::all_of(tp.begin(), tp.end(), [](std::uint32_t v) { return v == 0; });
  if (!zero && nbar % F.p() == 0) throw DomainError("nbar must be coprime to p");
  ASSystem sys;
  sys.p = F.p();
  sys.r = F.r();
  sys.num_vars = l + 1;
  sys.s = l;
  sys.label = "direct:t=" + format_vector(t);
  for (int k = 1; k <= l; ++k) {
    std::uint32_t shift = zero ? 0 : F.mul(tp[k - 1], F.inv(F.from_int(nbar)));
    MPoly rhs = mpoly_sub(F, mpoly_pow(F, mpoly_var(0), k), mpoly_const(F, shift));
    sys.eqs.push_back(ASEquation{k, q, rhs});
  }
  return sys;
}

BigInt direct_count(std::uint32_t q, const std::vector<std::uint32_t>& t, int n) {
  SubField F = subfield_for_q(q);
  int l = static_cast<int>(t.size());
  auto sys = build_direct_system(q, l, t, static_cast<std::uint32_t>(n % F.p()));
  BigInt total = affine_count_system(sys, n);
  return exact_div(total, ipow(BigInt(q), l), "direct_count");
}

std::vector<std::uint64_t> oracle_F_table(std::uint32_t q, int n, int l) {
  if (q == 2 && n <= 63) return count_all_F_brute_gf2(n, l);
  return count_all_F_brute(FieldTower::from_q(q, n), l);
}

VerificationReport verify_formula_set(const FormulaSet& fs, const std::vector<std::uint64_t>& n_list) {
  VerificationReport rep;
  for (std::uint64_t n : n_list) {
    bool any = std::any_of(fs.formulas.begin(), fs.formulas.end(),
                           [&](const auto& kv) { return kv.second.validity.allows(n); });
    if (!any) {
      rep.skipped.push_back(n);
      continue;
    }
    auto table = oracle_F_table(fs.q, static_cast<int>(n), fs.l);
    for (const auto& [t, f] : fs.formulas) {
      if (!f.validity.allows(n)) continue;
      BigInt expected = table[trace_index(t, fs.q)];
      BigInt derived;
      try {
        derived = eval(f, n);
      } catch (const NonIntegralResult&) {
        derived = -1;
      }
      ++rep.checked;
      if (derived != expected) rep.mismatches.push_back({t, n, expected, derived});
    }
  }
  return rep;
}

}  // namespace irrcount
