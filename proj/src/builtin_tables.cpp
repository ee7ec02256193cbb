#include "irrcount/engine_smallchar.hpp"

#include "tables/tables.hpp"

#include <memory>
#include <sstream>

namespace irrcount {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::map<std::string, IntPoly> load_polynomials() {
  std::map<std::string, IntPoly> out;
  std::istringstream is(tables::polynomial_source());
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("polynomial line needs a name: " + line, 0);
    IntPoly poly;
    std::istringstream cs(line.substr(colon + 1));
    std::string tok;
    while (cs >> tok) poly.c.push_back(BigInt(tok));
    if (poly.c.empty() || poly.c[0] != 1) throw ParseError("polynomial must be monic: " + line, 0);
    out[line.substr(0, colon)] = std::move(poly);
  }
  return out;
}

const char* const kEpsilonOrder[8] = {"e2_1", "e2_2", "e2_3", "e6", "e12_1", "e12_2", "e12_3", "e12_4"};

PaperFormulaTable build_table(const tables::TableSource& src) {
  PaperFormulaTable tab;
  tab.id = src.id;
  tab.description = src.description;
  tab.q = src.q;
  tab.l = src.l;
  tab.divisor = src.divisor;
  const Rational scale = Rational(ipow(BigInt(src.q), src.l), BigInt(src.divisor));
  std::istringstream is(src.rows);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto parts = split(line, '|');
    if (parts.size() != 3) throw ParseError("table row needs three fields: " + line, 0);
    PaperEntry e;
    for (char c : parts[0]) e.t.push_back(static_cast<std::uint32_t>(c - '0'));
    if (static_cast<int>(e.t.size()) != src.l) throw ParseError("trace vector length mismatch: " + line, 0);
    if (parts[2].rfind("v:", 0) == 0) {
      auto cs = split(parts[2].substr(2), ',');
      if (cs.size() != 8) throw ParseError("epsilon vector needs 8 entries: " + line, 0);
      for (int k = 0; k < 8; ++k) e.named.push_back({Rational(std::stol(cs[k])), kEpsilonOrder[k]});
    } else {
      std::istringstream ts(parts[2]);
      std::string tok;
      while (ts >> tok) {
        auto star = tok.find('*');
        e.named.push_back({Rational(std::stol(tok.substr(0, star))), tok.substr(star + 1)});
      }
    }
    CountFormula& f = e.formula;
    f.q = f.p = src.q;
    f.r = 1;
    f.divisor_exp = src.l;
    f.validity.min_n = src.min_n;
    for (const auto& nt : e.named) {
      if (nt.coef == 0) continue;
      const IntPoly& poly = named_polynomial(nt.name);
      f.terms.push_back({src.rho_sign * nt.coef * scale, poly, !satisfies_functional_equation(poly, src.q)});
    }
    f.canonicalize();
    if (parts[1] == "all") {
      tab.entries.push_back(std::move(e));
      continue;
    }
    // Char-3 rows printed with t1 = 2 carry t2 shifted by one when n = 2 mod 3.
    std::vector<std::uint32_t> kept, moved;
    for (const auto& c : split(parts[1], ',')) {
      auto cls = static_cast<std::uint32_t>(std::stoul(c));
      bool shift = src.q == 3 && e.t[0] == 2 && cls % 3 == 2;
      (shift ? moved : kept).push_back(cls);
    }
    if (!moved.empty()) {
      PaperEntry m = e;
      m.t[1] = (m.t[1] + 2) % 3;
      m.formula.validity.modulus = src.modulus;
      m.formula.validity.classes = moved;
      tab.entries.push_back(std::move(m));
    }
    if (!kept.empty()) {
      e.formula.validity.modulus = src.modulus;
      e.formula.validity.classes = kept;
      tab.entries.push_back(std::move(e));
    }
  }
  return tab;
}

}  // namespace

const std::map<std::string, IntPoly>& polynomial_dictionary() {
  static const std::map<std::string, IntPoly> dict = load_polynomials();
  return dict;
}

const IntPoly& named_polynomial(const std::string& name) {
  const auto& d = polynomial_dictionary();
  auto it = d.find(name);
  if (it == d.end()) throw DomainError("unknown polynomial " + name);
  return it->second;
}

std::vector<std::string> paper_table_ids() {
  std::vector<std::string> ids;
  for (const auto* s : tables::all_sources()) ids.push_back(s->id);
  return ids;
}

const PaperFormulaTable& paper_table(const std::string& id) {
  static const std::map<std::string, PaperFormulaTable> all = [] {
    std::map<std::string, PaperFormulaTable> m;
    for (const auto* s : tables::all_sources()) m[s->id] = build_table(*s);
    return m;
  }();
  auto it = all.find(id);
  if (it == all.end()) throw DomainError("unknown table " + id);
  return it->second;
}

std::vector<std::vector<std::uint32_t>> PaperFormulaTable::trace_vectors() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& e : entries)
    if (std::find(out.begin(), out.end(), e.t) == out.end()) out.push_back(e.t);
  return out;
}

const PaperEntry& PaperFormulaTable::entry(const std::vector<std::uint32_t>& t, std::uint64_t n) const {
  bool known = false;
  for (const auto& e : entries) {
    if (e.t != t) continue;
    known = true;
    if (e.formula.validity.allows(n)) return e;
  }
  if (!known) throw DomainError(id + " has no formula for t = " + format_vector(t));
  throw ValidityError(id + " does not cover n = " + std::to_string(n) + " for t = " + format_vector(t));
}

BigInt eval_paper_formula(const PaperFormulaTable& table, const std::vector<std::uint32_t>& t, std::uint64_t n) {
  return eval(table.entry(t, n).formula, n);
}

bool root_identity_check(const std::vector<IntPoly>& polys, const std::vector<BigInt>& coefs, std::uint32_t modulus,
                         const std::vector<std::uint32_t>& classes, unsigned horizon) {
  if (polys.size() != coefs.size()) throw DomainError("one coefficient per polynomial");
  std::vector<std::vector<BigInt>> sums;
  for (const auto& p : polys) sums.push_back(power_sums(p, horizon));
  Validity v{modulus, classes, 1};
  for (unsigned n = 1; n <= horizon; ++n) {
    if (!v.allows(n)) continue;
    BigInt s = 0;
    for (std::size_t k = 0; k < polys.size(); ++k) s += coefs[k] * sums[k][n];
    if (s != 0) return false;
  }
  return true;
}

bool fluctuation_period_check(const CountFormula& f, unsigned period, unsigned horizon) {
  if (period % 2) throw DomainError("period must be even");
  const Rational scale(ipow(BigInt(f.q), period / 2));
  for (unsigned n = static_cast<unsigned>(std::max(f.validity.min_n, 1)); n + period <= horizon; ++n) {
    if (!f.validity.allows(n) || !f.validity.allows(n + period)) continue;
    if (fluctuation(f, n + period) != scale * fluctuation(f, n)) return false;
  }
  return true;
}

}  // namespace irrcount
