#include "irrcount/trace_lab.hpp"

#include <sstream>

namespace irrcount {

bool TraceSpec::matches(const std::vector<std::uint32_t>& t) const {
  for (const auto& [pos, v] : values)
    if (pos > static_cast<int>(t.size()) || t[pos - 1] != v) return false;
  return true;
}

TraceSpec TraceSpec::parse(const std::string& text) {
  TraceSpec s;
  std::stringstream ss(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected position=value", offset);
    int pos;
    try {
      pos = std::stoi(item.substr(0, eq));
    } catch (...) {
      throw ParseError("bad position", offset);
    }
    if (pos < 1) throw ParseError("positions are 1-based", offset);
    std::string v = item.substr(eq + 1);
    if (v != "*") {
      try {
        s.values[pos] = static_cast<std::uint32_t>(std::stoul(v));
      } catch (...) {
        throw ParseError("bad value", offset + eq + 1);
      }
    }
    offset += item.size() + 1;
  }
  return s;
}

PolyQ char_poly(const FieldTower& F, const FieldTower::Elem& a) {
  int n = F.n();
  std::vector<FieldTower::Elem> e(n + 1, F.zero());
  e[0] = F.one();
  FieldTower::Elem c = a;
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k >= 1; --k) e[k] = F.add(e[k], F.mul(e[k - 1], c));
    c = F.frobenius(c, 1);
  }
  PolyQ out(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::uint32_t v = e[k].c[0];
    out[n - k] = (k % 2) ? F.sub().neg(v) : v;
  }
  return out;
}

std::vector<std::uint32_t> trace_vector(const FieldTower& F, const FieldTower::Elem& a, int l) {
  if (l < 1) throw DomainError("trace_vector needs l >= 1");
  int n = F.n(), m = std::min(l, n);
  std::vector<FieldTower::Elem> e(m + 1, F.zero());
  e[0] = F.one();
  FieldTower::Elem c = a;
  for (int i = 0; i < n; ++i) {
    for (int k = std::min(i + 1, m); k >= 1; --k) e[k] = F.add(e[k], F.mul(e[k - 1], c));
    if (i + 1 < n) c = F.frobenius(c, 1);
  }
  std::vector<std::uint32_t> t(l, 0);
  for (int k = 1; k <= m; ++k) t[k - 1] = e[k].c[0];
  return t;
}

std::uint32_t trace_bits(const GF2n& F, GF2n::Elem a, int l) {
  int n = F.n(), m = std::min(l, n);
  GF2n::Elem e[9] = {1, 0, 0, 0, 0, 0, 0, 0, 0};
  if (m > 8) throw DomainError("trace_bits supports l <= 8");
  GF2n::Elem c = a;
  for (int i = 0; i < n; ++i) {
    for (int k = std::min(i + 1, m); k >= 2; --k) e[k] ^= F.mul(e[k - 1], c);
    e[1] ^= c;
    c = F.sqr(c);
  }
  std::uint32_t bits = 0;
  for (int k = 1; k <= m; ++k) bits |= static_cast<std::uint32_t>(e[k] & 1) << (k - 1);
  return bits;
}

std::vector<std::uint32_t> trace_vector(const GF2n& F, GF2n::Elem a, int l) {
  std::vector<std::uint32_t> t(l, 0);
  int m = std::min(l, 8);
  std::uint32_t bits = trace_bits(F, a, m);
  for (int k = 0; k < m; ++k) t[k] = (bits >> k) & 1;
  return t;
}

std::uint32_t power_trace(const FieldTower& F, const FieldTower::Elem& a, std::uint64_t k) {
  if (k < 1) throw DomainError("power_trace needs k >= 1");
  return F.rel_trace(F.pow(a, k));
}

std::vector<std::uint32_t> newton_forward(const SubField& F, const std::vector<std::uint32_t>& t) {
  int l = static_cast<int>(t.size());
  if (l >= static_cast<int>(F.p())) throw DomainError("newton_forward requires l < p");
  std::vector<std::uint32_t> pk(l);
  for (int k = 1; k <= l; ++k) {
    std::uint32_t s = 0;
    for (int i = 1; i < k; ++i) {
      std::uint32_t term = F.mul(t[i - 1], pk[k - i - 1]);
      s = (i % 2) ? F.add(s, term) : F.sub(s, term);
    }
    std::uint32_t last = F.mul(F.from_int(k), t[k - 1]);
    s = (k % 2) ? F.add(s, last) : F.sub(s, last);
    pk[k - 1] = s;
  }
  return pk;
}

std::vector<std::uint32_t> newton_inverse(const SubField& F, const std::vector<std::uint32_t>& tp) {
  int l = static_cast<int>(tp.size());
  if (l >= static_cast<int>(F.p())) throw DomainError("newton_inverse requires l < p");
  std::vector<std::uint32_t> t(l);
  for (int k = 1; k <= l; ++k) {
    std::uint32_t s = tp[k - 1];
    for (int i = 1; i < k; ++i) {
      std::uint32_t term = F.mul(t[i - 1], tp[k - i - 1]);
      s = (i % 2) ? F.sub(s, term) : F.add(s, term);
    }
    std::uint32_t inv_k = F.inv(F.from_int(k));
    s = F.mul(s, inv_k);
    t[k - 1] = (k % 2) ? s : F.neg(s);
  }
  return t;
}

std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  std::uint64_t r = 1;
  while (n || k) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    std::uint64_t c = 1;
    for (std::uint64_t j = 0; j < kd; ++j) c = c * (nd - j) / (j + 1);
    r = r * (c % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint64_t binom_period(std::uint64_t j, std::uint32_t p) {
  if (j == 0) return 1;
  std::uint64_t per = p;
  while (j >= p) {
    j /= p;
    per *= p;
  }
  return per;
}

namespace {

const char* const kComponentsChar2[8] = {
    "",
    "r0",
    "a0^3 + a0 + r0*c2",
    "a0^5 + a0 + r0*(a0^3 + a0 + c3)",
    "a2^3 + a2 + a1^3 + a1 + a0^7 + a0^5 + (r0+1)*(r1+r2)*c2 + r0*r1 + r0*r2 + r1*r2 + r2 + r0*c4",
    "r0*(a2^3+a2+a1^3+a1) + a0^9 + r0*a0^7 + (r1+r2)*a0^5 + r1 + r2 + r1*r2 + r0*r1*r2"
    " + (r0*a0^5 + r0*r2)*c2 + (r0*r1+r0*r2)*c3 + r0*c5",
    "a3^3 + a3 + (r1+r2)*(a2^3+a2+a1^3+a1+a0^7) + a1^5 + a1^3 + a0^11 + a0^7 + r0*r1 + r0*r2 + r1*r2"
    " + r2*r3 + (r0*(a2^3+a2+a1^3+a1+a0^7+r1+r2+r1*r2) + r1+r2+r3)*c2 + (r0*r1+r0*r3+r1)*c3"
    " + r0*(r1+r2)*c4 + r0*c6",
    "r0*(a3^3+a3) + (r0*r1+r0*r2+r1+r3+r0*c3)*(a2^3+a2) + r0*(a1^5+a1^3)"
    " + (r0*r1+r0*r2+r1+r3+r0*c3)*(a1^3+a1) + a0^13 + (r0+1)*a0^11 + (r1+r2+1+r0*c2)*a0^9"
    " + (r0+r1+r3+r0*r1+r0*r2+r0*c3)*a0^7 + r1 + r0*r2 + r0*r3 + r1*r2 + r1*r3 + r2*r3 + r0*r1*r2"
    " + r0*r2*r3 + r1*r2*r3 + (r1+r0*r3+r1*r2+r1*r3+r2*r3+r0*r1*r2+r0*r1*r3+r0*r2*r3)*c2"
    " + (r0*r1+r0*r1*r2)*c3 + (r0*r1+r0*r2)*c2*c3 + (r0*r1+r0*r3)*c4 + (r0*r1+r0*r2)*c5 + r0*c7",
};

const char* const kComponentsChar2Alt[2] = {
    "a1^3 + a1 + a0^7 + a0^5 + a0^3 + a0 + r0*(a0^3 + a0 + (a0^3+a0)*c2 + c4) + r1*c2",
    "a1^2*a2 + a1*a2^2 + a0^9 + a0 + r0*(a1^3 + a1 + a0^7 + a0 + (a0^5 + a0 + r1)*c2 + (a0^3+a0)*c3 + c5)",
};

const char* const kAuxChar2[4] = {"", "a0 + r1", "a0^3 + r2", "a0^5 + r3"};
const char* const kAuxChar2Alt[3] = {"", "a0^3 + a0 + r1", "a0^5 + a0 + r2"};

ParamMap char2_params(const std::vector<std::uint32_t>& r, int n) {
  ParamMap pm;
  for (std::size_t k = 0; k < r.size() && k < 4; ++k) pm["r" + std::to_string(k)] = r[k] & 1u;
  for (int k = 1; k <= 7; ++k) pm["c" + std::to_string(k)] = binom_mod_p(static_cast<std::uint64_t>(n), k, 2);
  return pm;
}

}  // namespace

int lowered_aux_count(int l, bool alternative) {
  if (l < 1 || l > 7) throw DomainError("lowered identities exist for 1 <= l <= 7");
  if (alternative && (l == 4 || l == 5)) return 2;
  if (l <= 3) return 0;
  if (l <= 5) return 2;
  return 3;
}

MPoly lowered_component_char2(int l, const std::vector<std::uint32_t>& r, int n, bool alternative) {
  if (l < 1 || l > 7) throw DomainError("lowered identities exist for 1 <= l <= 7");
  SubField F2(2, 1);
  const char* text = (alternative && (l == 4 || l == 5)) ? kComponentsChar2Alt[l - 4] : kComponentsChar2[l];
  try {
    return parse_mpoly(F2, text, char2_params(r, n));
  } catch (const ParseError& e) {
    throw DomainError(std::string("missing auxiliary data for lowered identity: ") + e.what());
  }
}

MPoly lowered_aux_rhs_char2(int k, const std::vector<std::uint32_t>& r, bool alternative) {
  int limit = alternative ? 2 : 3;
  if (k < 1 || k > limit) throw DomainError("auxiliary equation index out of range");
  SubField F2(2, 1);
  try {
    return parse_mpoly(F2, alternative ? kAuxChar2Alt[k] : kAuxChar2[k], char2_params(r, 1));
  } catch (const ParseError& e) {
    throw DomainError(std::string("missing auxiliary trace: ") + e.what());
  }
}

std::uint32_t lowered_trace_char2(const GF2n& F, int l, GF2n::Elem a0, std::uint32_t r0, const LoweredAux& aux,
                                  bool alternative) {
  int need = lowered_aux_count(l, alternative);
  std::vector<std::uint32_t> r{r0};
  const std::optional<std::uint32_t>* rs[3] = {&aux.r1, &aux.r2, &aux.r3};
  const std::optional<std::uint64_t>* as[3] = {&aux.a1, &aux.a2, &aux.a3};
  for (int k = 0; k < need; ++k) {
    if (!rs[k]->has_value() || !as[k]->has_value()) throw DomainError("missing auxiliary entry for lowered identity");
    r.push_back(**rs[k]);
  }
  MPoly P = lowered_component_char2(l, r, F.n(), alternative);
  GF2n::Elem vals[kMaxVars] = {a0};
  for (int k = 0; k < need; ++k) vals[k + 1] = **as[k];
  return F.rel_trace(MPolyEval<GF2n>(F, P)(vals));
}

MPoly lowered_component_char3(int l, std::uint32_t r0, std::uint64_t n) {
  if (l < 1 || l > 3) throw DomainError("characteristic-3 identities exist for 1 <= l <= 3");
  SubField F3(3, 1);
  ParamMap pm{{"r0", r0 % 3}};
  if (n % 3 == 0) {
    if (r0 % 3 != 0) throw DomainError("characteristic-3 identities need n coprime to 3 when r0 != 0");
    pm["ninv"] = 0;
  } else {
    pm["ninv"] = F3.inv(static_cast<std::uint32_t>(n % 3));
  }
  pm["n"] = static_cast<std::uint32_t>(n % 3);
  pm["c2"] = binom_mod_p(n, 2, 3);
  pm["c3"] = binom_mod_p(n, 3, 3);
  static const char* const kText[4] = {
      "",
      "r0",
      "a0^4 - a0^2 + r0^2*c2*ninv",
      "a0^5 - a0^7 + r0*(n+1)*(a0^4 - a0^2) + r0*c3*ninv",
  };
  return parse_mpoly(F3, kText[l], pm);
}

std::uint32_t lowered_trace_char3(const FieldTower& F, int l, const FieldTower::Elem& a0, std::uint32_t r0) {
  if (F.q() != 3) throw DomainError("lowered_trace_char3 needs q = 3");
  MPoly P = lowered_component_char3(l, r0, static_cast<std::uint64_t>(F.n()));
  FieldTower::Elem vals[kMaxVars] = {a0};
  return F.rel_trace(MPolyEval<FieldTower>(F, P)(vals));
}

}  // namespace irrcount
