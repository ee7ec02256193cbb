#include "irrcount/formula.hpp"

#include "irrcount/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace irrcount {

using json = nlohmann::json;

bool Validity::allows(std::uint64_t n) const {
  if (n < static_cast<std::uint64_t>(std::max(min_n, 0))) return false;
  if (modulus <= 1) return !classes.empty();
  return std::find(classes.begin(), classes.end(), n % modulus) != classes.end();
}

std::string Validity::describe() const {
  std::ostringstream os;
  os << "n >= " << min_n;
  if (modulus > 1) {
    os << ", n mod " << modulus << " in {";
    for (std::size_t i = 0; i < classes.size(); ++i) os << (i ? "," : "") << classes[i];
    os << "}";
  }
  return os.str();
}

Validity Validity::intersect(const Validity& o) const {
  Validity v;
  v.min_n = std::max(min_n, o.min_n);
  v.modulus = std::lcm(std::max(modulus, 1u), std::max(o.modulus, 1u));
  v.classes.clear();
  auto in = [](const Validity& w, std::uint32_t c) {
    return w.modulus <= 1 || std::find(w.classes.begin(), w.classes.end(), c % w.modulus) != w.classes.end();
  };
  for (std::uint32_t c = 0; c < v.modulus; ++c)
    if (in(*this, c) && in(o, c)) v.classes.push_back(c);
  return v;
}

namespace {

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

// Power sums are shared by many formulas evaluated at the same n.
const BigInt& cached_rho(const IntPoly& poly, std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::vector<BigInt>, std::vector<BigInt>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& s = cache[poly.c];
  if (s.size() <= n) s = power_sums(poly, static_cast<unsigned>(std::max<std::uint64_t>(n, 2 * s.size())));
  return s[n];
}

}  // namespace

void CountFormula::canonicalize() {
  std::vector<FormulaTerm> out;
  std::sort(terms.begin(), terms.end(), [](const FormulaTerm& a, const FormulaTerm& b) { return poly_less(a.poly, b.poly); });
  for (auto& t : terms) {
    if (!out.empty() && out.back().poly == t.poly) {
      out.back().coef += t.coef;
      out.back().auxiliary = out.back().auxiliary || t.auxiliary;
    } else {
      out.push_back(t);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const FormulaTerm& t) { return t.coef == 0; }), out.end());
  terms = std::move(out);
  while (divisor_exp > 0 && lead % q == 0) {
    lead /= q;
    --divisor_exp;
    for (auto& t : terms) t.coef /= q;
  }
}

Rational fluctuation(const CountFormula& f, std::uint64_t n) {
  Rational s = 0;
  for (const auto& t : f.terms) s += t.coef * cached_rho(t.poly, n);
  return s;
}

BigInt eval(const CountFormula& f, std::uint64_t n) {
  if (!f.validity.allows(n))
    throw ValidityError("n = " + std::to_string(n) + " outside validity (" + f.validity.describe() + ")");
  Rational total = fluctuation(f, n) + Rational(f.lead * ipow(BigInt(f.q), static_cast<unsigned>(n)));
  total /= Rational(ipow(BigInt(f.q), static_cast<unsigned>(f.divisor_exp)));
  return to_integer(total, "formula evaluation");
}

CountFormula merge(const CountFormula& a, const CountFormula& b) {
  if (a.q != b.q || a.divisor_exp != b.divisor_exp) throw DomainError("merge needs equal q and divisor");
  CountFormula out = a;
  out.lead = a.lead + b.lead;
  out.validity = a.validity.intersect(b.validity);
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out.canonicalize();
  return out;
}

Rational dimension_bound(const CountFormula& f) {
  Rational s = 0;
  for (const auto& t : f.terms) s += abs(t.coef) * t.poly.degree();
  return s;
}

const CountFormula& FormulaSet::at(const std::vector<std::uint32_t>& t) const {
  auto it = formulas.find(t);
  if (it == formulas.end()) throw DomainError("no formula for t = " + format_vector(t));
  return it->second;
}

namespace {

json formula_to_json(const CountFormula& f) {
  CountFormula c = f;
  c.canonicalize();
  json terms = json::array();
  for (const auto& t : c.terms) {
    json poly = json::array();
    for (const auto& v : t.poly.c) poly.push_back(v.str());
    json jt = {{"num", numerator(t.coef).str()}, {"den", denominator(t.coef).str()}, {"poly", poly}};
    if (t.auxiliary) jt["aux"] = true;
    terms.push_back(jt);
  }
  json out = {{"q", c.q},
          {"p", c.p},
          {"r", c.r},
          {"divisor_exp", c.divisor_exp},
          {"validity", {{"modulus", c.validity.modulus}, {"classes", c.validity.classes}, {"min_n", c.validity.min_n}}},
          {"terms", terms}};
  if (c.lead != 1) out["lead"] = c.lead.str();
  return out;
}

BigInt big_from(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a decimal string", 0);
  const std::string s = j.get<std::string>();
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw ParseError(path + ": invalid integer '" + s + "'", 0);
  return BigInt(s);
}

template <class T>
T field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(path + ": missing key '" + key + "'", 0);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(path + "." + key + ": " + e.what(), 0);
  }
}

CountFormula formula_from_json(const json& j, const std::string& path) {
  CountFormula f;
  f.q = field<std::uint32_t>(j, "q", path);
  f.p = field<std::uint32_t>(j, "p", path);
  f.r = field<int>(j, "r", path);
  f.divisor_exp = field<int>(j, "divisor_exp", path);
  json v = field<json>(j, "validity", path);
  f.validity.modulus = field<std::uint32_t>(v, "modulus", path + ".validity");
  f.validity.classes = field<std::vector<std::uint32_t>>(v, "classes", path + ".validity");
  f.validity.min_n = field<int>(v, "min_n", path + ".validity");
  if (j.contains("lead")) f.lead = big_from(j.at("lead"), path + ".lead");
  json terms = field<json>(j, "terms", path);
  if (!terms.is_array()) throw ParseError(path + ".terms: expected an array", 0);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::string tp = path + ".terms[" + std::to_string(k) + "]";
    const json& jt = terms[k];
    BigInt num = big_from(field<json>(jt, "num", tp), tp + ".num");
    BigInt den = big_from(field<json>(jt, "den", tp), tp + ".den");
    if (den == 0) throw ParseError(tp + ".den: zero denominator", 0);
    FormulaTerm t;
    t.coef = Rational(num, den);
    json poly = field<json>(jt, "poly", tp);
    if (!poly.is_array() || poly.empty()) throw ParseError(tp + ".poly: expected a nonempty array", 0);
    for (std::size_t i = 0; i < poly.size(); ++i) t.poly.c.push_back(big_from(poly[i], tp + ".poly[" + std::to_string(i) + "]"));
    if (t.poly.c[0] != 1) throw ParseError(tp + ".poly: polynomial is not monic", 0);
    if (jt.contains("aux")) t.auxiliary = field<bool>(jt, "aux", tp);
    f.terms.push_back(std::move(t));
  }
  f.canonicalize();
  return f;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

}  // namespace

std::string serialize(const CountFormula& f) { return formula_to_json(f).dump(); }

CountFormula parse_formula(const std::string& text) { return formula_from_json(parse_json(text), "formula"); }

std::string serialize(const FormulaSet& fs) {
  json list = json::array();
  for (const auto& [t, f] : fs.formulas) list.push_back({{"t", t}, {"formula", formula_to_json(f)}});
  json j = {{"q", fs.q}, {"p", fs.p}, {"r", fs.r}, {"l", fs.l}, {"nbar", fs.nbar}, {"label", fs.label}, {"formulas", list}};
  return j.dump();
}

FormulaSet parse_formula_set(const std::string& text) {
  json j = parse_json(text);
  FormulaSet fs;
  fs.q = field<std::uint32_t>(j, "q", "set");
  fs.p = field<std::uint32_t>(j, "p", "set");
  fs.r = field<int>(j, "r", "set");
  fs.l = field<int>(j, "l", "set");
  fs.nbar = field<std::uint32_t>(j, "nbar", "set");
  fs.label = field<std::string>(j, "label", "set");
  json list = field<json>(j, "formulas", "set");
  if (!list.is_array()) throw ParseError("set.formulas: expected an array", 0);
  for (std::size_t k = 0; k < list.size(); ++k) {
    std::string path = "set.formulas[" + std::to_string(k) + "]";
    auto t = field<std::vector<std::uint32_t>>(list[k], "t", path);
    fs.formulas[t] = formula_from_json(field<json>(list[k], "formula", path), path + ".formula");
  }
  return fs;
}

std::vector<std::uint32_t> parse_vector(const std::string& text) {
  std::vector<std::uint32_t> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a comma separated list of digits", pos);
    v.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    pos = end + 1;
  }
  return v;
}

std::string format_vector(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace irrcount
