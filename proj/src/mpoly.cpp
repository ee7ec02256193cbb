#include "irrcount/mpoly.hpp"

#include <cctype>
#include <sstream>

namespace irrcount {

bool MPoly::is_constant() const {
  if (terms.empty()) return true;
  return terms.size() == 1 && terms.begin()->first == Exponents{};
}

std::uint32_t MPoly::constant() const {
  auto it = terms.find(Exponents{});
  return it == terms.end() ? 0 : it->second;
}

bool MPoly::uses(int var) const { return degree_in(var) > 0; }

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [ex, c] : terms) d = std::max<int>(d, ex[var]);
  return d;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [ex, c] : terms) {
    int s = 0;
    for (auto e : ex) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::string MPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    bool any = false;
    if (it->second != 1 || it->first == Exponents{}) {
      os << it->second;
      any = true;
    }
    for (int v = 0; v < kMaxVars; ++v) {
      if (it->first[v] == 0) continue;
      os << (any ? "*" : "") << "a" << v;
      if (it->first[v] > 1) os << "^" << static_cast<int>(it->first[v]);
      any = true;
    }
  }
  return os.str();
}

MPoly mpoly_const(const SubField&, std::uint32_t c) {
  MPoly r;
  if (c != 0) r.terms[Exponents{}] = c;
  return r;
}

MPoly mpoly_var(int var) {
  MPoly r;
  Exponents ex{};
  ex[var] = 1;
  r.terms[ex] = 1;
  return r;
}

MPoly mpoly_add(const SubField& F, const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [ex, c] : b.terms) {
    std::uint32_t v = F.add(r.terms[ex], c);
    if (v == 0)
      r.terms.erase(ex);
    else
      r.terms[ex] = v;
  }
  return r;
}

MPoly mpoly_scale(const SubField& F, std::uint32_t c, const MPoly& a) {
  MPoly r;
  if (c == 0) return r;
  for (const auto& [ex, v] : a.terms) r.terms[ex] = F.mul(c, v);
  return r;
}

MPoly mpoly_sub(const SubField& F, const MPoly& a, const MPoly& b) {
  return mpoly_add(F, a, mpoly_scale(F, F.neg(1), b));
}

MPoly mpoly_mul(const SubField& F, const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Exponents ex;
      for (int v = 0; v < kMaxVars; ++v) {
        int s = ea[v] + eb[v];
        if (s > 23) throw DomainError("polynomial degree per variable exceeds 23");
        ex[v] = static_cast<std::uint8_t>(s);
      }
      std::uint32_t v = F.add(r.terms[ex], F.mul(ca, cb));
      if (v == 0)
        r.terms.erase(ex);
      else
        r.terms[ex] = v;
    }
  return r;
}

MPoly mpoly_pow(const SubField& F, const MPoly& a, unsigned e) {
  MPoly r = mpoly_const(F, 1);
  for (unsigned k = 0; k < e; ++k) r = mpoly_mul(F, r, a);
  return r;
}

namespace {

class Parser {
 public:
  Parser(const SubField& F, std::string_view s, const ParamMap& params) : F_(F), s_(s), params_(params) {}

  MPoly run() {
    MPoly r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly r;
    bool neg = eat('-');
    if (!neg) eat('+');
    r = term();
    if (neg) r = mpoly_scale(F_, F_.neg(1), r);
    for (;;) {
      if (eat('+'))
        r = mpoly_add(F_, r, term());
      else if (eat('-'))
        r = mpoly_sub(F_, r, term());
      else
        return r;
    }
  }

  MPoly term() {
    MPoly r = factor();
    for (;;) {
      if (eat('*')) {
        r = mpoly_mul(F_, r, factor());
      } else if (eat('/')) {
        std::size_t at = pos_;
        MPoly d = factor();
        if (!d.is_constant() || d.constant() == 0) throw ParseError("division by a non-constant or zero", at);
        r = mpoly_scale(F_, F_.inv(d.constant()), r);
      } else {
        skip();
        if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_]))))
          r = mpoly_mul(F_, r, factor());
        else
          return r;
      }
    }
  }

  MPoly factor() {
    MPoly b = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      b = mpoly_pow(F_, b, e);
    }
    return b;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (c == '-') {
      ++pos_;
      return mpoly_scale(F_, F_.neg(1), factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string lit(s_.substr(start, pos_ - start));
      std::int64_t v = 0;
      for (char d : lit) v = (v * 10 + (d - '0')) % F_.p();
      return mpoly_const(F_, F_.from_int(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "x") return mpoly_var(0);
      if (name.size() == 2 && name[0] == 'a' && std::isdigit(static_cast<unsigned char>(name[1]))) {
        int v = name[1] - '0';
        if (v >= kMaxVars) throw ParseError("variable index out of range: " + name, start);
        return mpoly_var(v);
      }
      auto it = params_.find(name);
      if (it == params_.end()) throw ParseError("unknown identifier '" + name + "'", start);
      return mpoly_const(F_, it->second);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  const SubField& F_;
  std::string_view s_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(const SubField& F, std::string_view text, const ParamMap& params) {
  return Parser(F, text, params).run();
}

PolyQ mpoly_to_univariate(const MPoly& P) {
  PolyQ f;
  for (const auto& [ex, c] : P.terms) {
    for (int v = 1; v < kMaxVars; ++v)
      if (ex[v] != 0) throw DomainError("polynomial is not univariate in a0");
    if (f.size() <= ex[0]) f.resize(ex[0] + 1, 0);
    f[ex[0]] = c;
  }
  return f;
}

MPoly mpoly_from_univariate(const PolyQ& f) {
  MPoly r;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] == 0) continue;
    Exponents ex{};
    ex[0] = static_cast<std::uint8_t>(j);
    r.terms[ex] = f[j];
  }
  return r;
}

}  // namespace irrcount
