#include "irrcount/artin_schreier.hpp"
#include "irrcount/config.hpp"
#include "irrcount/engine_main.hpp"
#include "irrcount/engine_smallchar.hpp"
#include "irrcount/formula.hpp"
#include "irrcount/oracle.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace irrcount;

namespace {

struct Options {
  bool json_out = false;
  std::uint64_t budget = 0;
  unsigned jobs = 0;
};

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text << "\n";
}

// Loads a formula set, or a single formula keyed by t.
FormulaSet load_formulas(const std::string& path, const std::string& t_text) {
  std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (j.is_object() && j.contains("formulas")) return parse_formula_set(text);
  CountFormula f = parse_formula(text);
  if (t_text.empty()) throw DomainError("a single formula needs --t");
  FormulaSet fs;
  fs.q = f.q;
  fs.p = f.p;
  fs.r = f.r;
  auto t = parse_vector(t_text);
  fs.l = static_cast<int>(t.size());
  fs.formulas[t] = f;
  return fs;
}

std::vector<std::uint64_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  std::vector<std::uint64_t> out;
  try {
    if (dots == std::string::npos) {
      out.push_back(std::stoull(text));
      return out;
    }
    std::uint64_t lo = std::stoull(text.substr(0, dots)), hi = std::stoull(text.substr(dots + 2));
    if (lo > hi) throw DomainError("empty range " + text);
    for (std::uint64_t n = lo; n <= hi; ++n) out.push_back(n);
  } catch (const std::logic_error&) {
    throw ParseError("invalid range '" + text + "'", 0);
  }
  return out;
}

// "0,1,*" with positions 1, 2, 3.
TraceSpec positional_spec(const std::string& text) {
  TraceSpec spec;
  std::istringstream is(text);
  std::string tok;
  int pos = 0;
  while (std::getline(is, tok, ',')) {
    ++pos;
    if (tok == "*") continue;
    try {
      spec.values[pos] = static_cast<std::uint32_t>(std::stoul(tok));
    } catch (const std::logic_error&) {
      throw ParseError("invalid coefficient '" + tok + "'", static_cast<std::size_t>(pos));
    }
  }
  return spec;
}

std::uint32_t prime_of(std::uint32_t q, int& r) {
  for (std::uint32_t p = 2; p <= q; ++p)
    if (q % p == 0) {
      r = 0;
      std::uint32_t v = q;
      while (v % p == 0) {
        v /= p;
        ++r;
      }
      if (v != 1) throw DomainError("q must be a prime power");
      return p;
    }
  throw DomainError("q must be a prime power");
}

json poly_json(const IntPoly& poly) {
  json a = json::array();
  for (const auto& c : poly.c) a.push_back(c.str());
  return a;
}

std::string error_kind(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) return err->kind();
  return "Error";
}

void emit(const Options& o, const json& j, const std::string& human) {
  if (o.json_out)
    std::cout << j.dump() << "\n";
  else
    std::cout << human << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts of elements and irreducible polynomials with prescribed traces"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_out, "Machine-readable output");
  app.add_option("--budget", opt.budget, "Maximum field elements visited by one count");
  app.add_option("--jobs", opt.jobs, "Worker threads for counting");

  std::uint32_t q = 2;
  int n = 1, l = 1;
  std::uint32_t nbar = 1, e = 0;
  std::string traces, coeffs, curve, out, formula_path, t_text, range, against = "oracle", name;
  std::uint32_t zeros_mod = 0;

  auto* brute = app.add_subcommand("brute", "Brute-force counts");
  brute->require_subcommand(1);
  auto* bruteF = brute->add_subcommand("F", "Elements with prescribed traces");
  bruteF->add_option("--q", q)->required();
  bruteF->add_option("--n", n)->required();
  bruteF->add_option("--traces", traces, "e.g. 1=0,2=1,4=*")->required();
  auto* bruteI = brute->add_subcommand("I", "Irreducibles with prescribed leading coefficients");
  bruteI->add_option("--q", q)->required();
  bruteI->add_option("--n", n)->required();
  bruteI->add_option("--coeffs", coeffs, "e.g. 0,1,2 or 0,*,1")->required();

  auto* gauss = app.add_subcommand("gauss", "Number of monic irreducibles of degree n");
  gauss->add_option("--q", q)->required();
  gauss->add_option("--n", n)->required();

  auto* zeta = app.add_subcommand("zeta", "Zeta numerator of y^e - y = f(x)");
  zeta->add_option("--q", q)->required();
  zeta->add_option("--curve", curve, "coefficients of f as F_q indices, highest degree first")->required();
  zeta->add_option("--e", e, "exponent, default p");

  auto* derive = app.add_subcommand("derive", "Derive the formula set for one residue class");
  derive->add_option("--q", q)->required();
  derive->add_option("--l", l)->required();
  derive->add_option("--nbar", nbar)->required();
  derive->add_option("--out", out);

  auto* evalc = app.add_subcommand("eval", "Evaluate a formula file");
  evalc->add_option("--formula", formula_path)->required();
  evalc->add_option("--t", t_text);
  evalc->add_option("--n", n)->required();

  auto* verify = app.add_subcommand("verify", "Check a formula file against brute force");
  verify->add_option("--formula", formula_path)->required();
  verify->add_option("--t", t_text);
  verify->add_option("--n-range", range)->required();
  verify->add_option("--against", against)->check(CLI::IsMember({"oracle"}));

  auto* table = app.add_subcommand("table", "Evaluate a built-in formula table");
  table->add_option("--name", name);
  table->add_option("--t", t_text);
  table->add_option("--n", n);
  bool list = false;
  table->add_flag("--list", list, "List table ids");

  auto* kloos = app.add_subcommand("kloosterman", "Binary Kloosterman sums");
  kloos->add_option("--n", n)->required();
  kloos->add_option("--zeros-mod", zeros_mod)->check(CLI::IsMember({32u, 64u}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (opt.budget) Config::set_budget(opt.budget);
    if (opt.jobs) Config::set_jobs(opt.jobs);

    if (*bruteF) {
      TraceSpec spec = TraceSpec::parse(traces);
      std::uint64_t c = count_F_brute(FieldTower::from_q(q, n), spec);
      emit(opt, {{"count", c}, {"q", q}, {"n", n}, {"traces", traces}}, std::to_string(c));
    } else if (*bruteI) {
      std::uint64_t c = count_I_brute(q, n, positional_spec(coeffs));
      emit(opt, {{"count", c}, {"q", q}, {"n", n}, {"coeffs", coeffs}}, std::to_string(c));
    } else if (*gauss) {
      int r = 0;
      prime_of(q, r);
      if (n < 1) throw DomainError("n must be positive");
      BigInt c = gauss_count(q, static_cast<unsigned>(n));
      emit(opt, {{"count", c.str()}, {"q", q}, {"n", n}}, c.str());
    } else if (*zeta) {
      int r = 0;
      std::uint32_t p = prime_of(q, r);
      ASCurve c;
      c.p = p;
      c.r = r;
      c.e = e ? e : p;
      std::vector<std::uint32_t> high = parse_vector(curve);
      for (auto v : high)
        if (v >= q) throw DomainError("curve coefficient outside F_q");
      c.f.assign(high.rbegin(), high.rend());
      FrobeniusPoly z = frobenius_charpoly(c);
      emit(opt, {{"q", z.q}, {"g", z.g}, {"poly", poly_json(z.poly)}},
           "g = " + std::to_string(z.g) + ", L(X) = " + z.poly.to_string());
    } else if (*derive) {
      const MainDerivation& d = derive_formula_set(q, l, nbar);
      std::string text = serialize(d.set);
      if (out.empty()) {
        std::cout << text << "\n";
      } else {
        write_out(out, text);
        emit(opt, {{"out", out}, {"formulas", d.set.formulas.size()}, {"roots", d.root_count()}},
             "wrote " + std::to_string(d.set.formulas.size()) + " formulas (" + std::to_string(d.root_count()) +
                 " roots) to " + out);
      }
    } else if (*evalc) {
      FormulaSet fs = load_formulas(formula_path, t_text);
      const CountFormula& f =
          fs.formulas.size() == 1 && t_text.empty() ? fs.formulas.begin()->second : fs.at(parse_vector(t_text));
      BigInt v = eval(f, static_cast<std::uint64_t>(n));
      emit(opt, {{"count", v.str()}, {"n", n}}, v.str());
    } else if (*verify) {
      FormulaSet fs = load_formulas(formula_path, t_text);
      VerificationReport rep = verify_formula_set(fs, parse_range(range));
      json mism = json::array();
      for (const auto& m : rep.mismatches)
        mism.push_back({{"t", m.t}, {"n", m.n}, {"expected", m.expected.str()}, {"formula", m.derived.str()}});
      std::ostringstream human;
      human << "checked " << rep.checked << ", mismatches " << rep.mismatches.size() << ", skipped n "
            << rep.skipped.size();
      for (const auto& m : rep.mismatches)
        human << "\n  t=" << format_vector(m.t) << " n=" << m.n << " oracle " << m.expected << " formula " << m.derived;
      emit(opt, {{"checked", rep.checked}, {"mismatches", mism}, {"skipped", rep.skipped}}, human.str());
      if (!rep.clean()) throw Mismatch("verification found mismatches");
    } else if (*table) {
      if (list) {
        json ids = json::array();
        std::string human;
        for (const auto& id : paper_table_ids()) {
          ids.push_back(id);
          human += id + "  " + paper_table(id).description + "\n";
        }
        if (!human.empty()) human.pop_back();
        emit(opt, ids, human);
      } else {
        if (name.empty() || t_text.empty() || !table->count("--n")) throw DomainError("table needs --name, --t and --n");
        BigInt v = eval_paper_formula(paper_table(name), parse_vector(t_text), static_cast<std::uint64_t>(n));
        emit(opt, {{"count", v.str()}, {"name", name}, {"t", t_text}, {"n", n}}, v.str());
      }
    } else if (*kloos) {
      if (n < 1) throw DomainError("n must be positive");
      auto dist = kloosterman_distribution(n);
      if (zeros_mod) {
        std::uint64_t c = 1;
        for (const auto& [k, cnt] : dist)
          if (k % zeros_mod == 0) c += cnt;
        json j = {{"n", n}, {"modulus", zeros_mod}, {"count", c}};
        if (zeros_mod == 32 && n >= 5) {
          BigInt f = count_kloosterman_zero_mod32(n);
          j["formula"] = f.str();
          if (f != c) throw Mismatch("formula " + f.str() + " disagrees with the direct count " + std::to_string(c));
        }
        emit(opt, j, std::to_string(c));
      } else {
        json d = json::object();
        std::ostringstream human;
        human << "K(a)  count";
        for (const auto& [k, cnt] : dist) {
          d[k.str()] = cnt;
          human << "\n" << k << "  " << cnt;
        }
        emit(opt, {{"n", n}, {"distribution", d}}, human.str());
      }
    }
  } catch (const Mismatch& m) {
    if (opt.json_out) std::cerr << json{{"error", "mismatch"}, {"message", m.what()}}.dump() << "\n";
    else std::cerr << "mismatch: " << m.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    if (opt.json_out) std::cerr << json{{"error", error_kind(ex)}, {"message", ex.what()}}.dump() << "\n";
    else std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
