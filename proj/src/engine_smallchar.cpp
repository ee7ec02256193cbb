#include "irrcount/engine_smallchar.hpp"

#include "irrcount/config.hpp"
#include "irrcount/trace_lab.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace irrcount {

// ------------------------------------------------------------ char 2 systems

PositionSet PositionSet::prefix(int l, bool alternative) {
  PositionSet ps;
  for (int k = 1; k <= l; ++k) ps.positions.push_back(k);
  ps.alternative = alternative;
  ps.validate();
  return ps;
}

void PositionSet::validate() const {
  if (positions.empty() || positions.size() > 7) throw DomainError("position set must hold 1..7 positions");
  std::set<int> seen;
  for (int p : positions) {
    if (p < 1 || p > 7) throw DomainError("trace positions must lie in 1..7");
    if (alternative && p > 5) throw DomainError("the alternative parameterisation covers positions up to 5");
    if (!seen.insert(p).second) throw DomainError("repeated trace position");
  }
}

int PositionSet::aux_count(std::uint64_t i) const {
  int m = 0;
  for (int b = 0; b < size(); ++b)
    if ((i >> b) & 1) m = std::max(m, lowered_aux_count(positions[b], alternative));
  return m;
}

namespace {

void require_odd(int n) {
  if (n < 1 || n % 2 == 0) throw DomainError("the characteristic-2 identities need odd n");
}

void require_index(std::uint64_t i, std::uint64_t cells) {
  if (i >= cells) throw DomainError("index vector out of range");
}

}  // namespace

ASSystem build_system_char2(const PositionSet& ps, std::uint64_t i, const std::vector<std::uint32_t>& r, int n) {
  ps.validate();
  require_odd(n);
  require_index(i, std::uint64_t{1} << ps.size());
  SubField F2(2, 1);
  ASSystem sys;
  sys.p = 2;
  sys.r = 1;
  sys.label = "char2:i=" + std::to_string(i);
  if (i == 0) return sys;
  int m = ps.aux_count(i);
  if (static_cast<int>(r.size()) != m + 1) throw DomainError("r vector length must be 1 + auxiliary count");
  sys.num_vars = m + 2;
  sys.s = m + 1;
  for (int k = 1; k <= m; ++k) sys.eqs.push_back({k, 2, lowered_aux_rhs_char2(k, r, ps.alternative)});
  MPoly rhs;
  for (int b = 0; b < ps.size(); ++b)
    if ((i >> b) & 1) rhs = mpoly_add(F2, rhs, lowered_component_char2(ps.positions[b], r, n, ps.alternative));
  sys.eqs.push_back({m + 1, 2, rhs});
  return sys;
}

BigInt V_count_char2(const PositionSet& ps, std::uint64_t i, int n) {
  ps.validate();
  require_odd(n);
  require_index(i, std::uint64_t{1} << ps.size());
  if (i == 0) return ipow(BigInt(2), n);
  int m = ps.aux_count(i);
  BigInt total = 0;
  for (std::uint32_t rv = 0; rv < (1u << (m + 1)); ++rv) {
    std::vector<std::uint32_t> r(m + 1);
    for (int k = 0; k <= m; ++k) r[k] = (rv >> k) & 1;
    total += affine_count_system(build_system_char2(ps, i, r, n), n);
  }
  return exact_div(total, ipow(BigInt(2), m + 2), "V_count_char2");
}

CountTable V_table_char2(const PositionSet& ps, int n) {
  ps.validate();
  require_odd(n);
  GF2n F(n);
  check_budget(F.size(), "V_table_char2");
  const int L = ps.size();
  const std::uint64_t cells = std::uint64_t{1} << L;
  const int m = ps.aux_count(cells - 1);
  SubField F2(2, 1);
  std::vector<MPolyEval<GF2n>> aux;
  for (int k = 1; k <= m; ++k) aux.emplace_back(F, lowered_aux_rhs_char2(k, std::vector<std::uint32_t>(m + 1, 0), ps.alternative));
  // comps[rv][b]: component for position b with r = bits of rv
  std::vector<std::vector<MPolyEval<GF2n>>> comps(std::size_t{1} << (m + 1));
  for (std::uint32_t rv = 0; rv < comps.size(); ++rv) {
    std::vector<std::uint32_t> r(m + 1);
    for (int k = 0; k <= m; ++k) r[k] = (rv >> k) & 1;
    for (int b = 0; b < L; ++b) comps[rv].emplace_back(F, lowered_component_char2(ps.positions[b], r, n, ps.alternative));
  }
  std::vector<std::uint64_t> hist(cells, 0);
  std::mutex mu;
  parallel_for_chunks(F.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    std::vector<std::uint64_t> local(cells, 0);
    GF2n::Elem vals[kMaxVars] = {0};
    GF2n::Elem base[4] = {0};
    for (std::uint64_t a0 = lo; a0 < hi; ++a0) {
      vals[0] = a0;
      std::uint32_t rbits = 0;
      for (int k = 1; k <= m; ++k) {
        GF2n::Elem g = aux[k - 1](vals);
        std::uint32_t rk = F.rel_trace(g);
        F.solve_as(2, g ^ rk, base[k]);
        rbits |= rk << k;
      }
      for (std::uint32_t r0 = 0; r0 < 2; ++r0) {
        const auto& row = comps[rbits | r0];
        for (std::uint32_t flip = 0; flip < (1u << m); ++flip) {
          for (int k = 1; k <= m; ++k) vals[k] = base[k] ^ ((flip >> (k - 1)) & 1);
          std::uint64_t b = 0;
          for (int pos = 0; pos < L; ++pos) b |= std::uint64_t{F.rel_trace(row[pos](vals))} << pos;
          ++local[b];
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    for (std::uint64_t c = 0; c < cells; ++c) hist[c] += local[c];
  });
  CountTable V(cells, 0);
  const BigInt den = ipow(BigInt(2), m + 1);
  for (std::uint64_t i = 0; i < cells; ++i) {
    BigInt s = 0;
    for (std::uint64_t b = 0; b < cells; ++b)
      if (__builtin_popcountll(i & b) % 2 == 0) s += hist[b];
    V[i] = exact_div(s, den, "V_table_char2");
  }
  return V;
}

// ------------------------------------------------------------ char 3 systems

namespace {

void require_coprime3(int n) {
  if (n < 1 || n % 3 == 0) throw DomainError("the characteristic-3 pipeline needs n coprime to 3");
}

}  // namespace

ASSystem build_system_char3(std::uint64_t i, std::uint32_t r0, int n) {
  require_coprime3(n);
  require_index(i, 27);
  if (r0 > 2) throw DomainError("r0 must lie in F_3");
  SubField F3(3, 1);
  ASSystem sys;
  sys.p = 3;
  sys.r = 1;
  sys.label = "char3:i=" + std::to_string(i) + ",r0=" + std::to_string(r0);
  if (i == 0) throw DomainError("the curve family starts at i = 1");
  auto digits = index_digits(i, 3, 3);
  MPoly rhs = mpoly_const(F3, F3.neg(F3.inv(static_cast<std::uint32_t>(n % 3))));
  for (int k = 0; k < 3; ++k)
    if (digits[k]) rhs = mpoly_add(F3, rhs, mpoly_scale(F3, digits[k], lowered_component_char3(k + 1, r0, n)));
  sys.num_vars = 2;
  sys.s = 1;
  sys.eqs.push_back({1, 3, rhs});
  return sys;
}

BigInt V_count_char3(std::uint64_t i, int n) {
  require_coprime3(n);
  require_index(i, 27);
  if (i == 0) return ipow(BigInt(3), n);
  BigInt total = 0;
  for (std::uint32_t r0 = 0; r0 < 3; ++r0) total += affine_count_system(build_system_char3(i, r0, n), n);
  return exact_div(total, 9, "V_count_char3");
}

ASSystem build_direct_system_char3(const std::vector<std::uint32_t>& t, int n) {
  require_coprime3(n);
  if (t.size() != 3) throw DomainError("the characteristic-3 direct system needs a 3-vector");
  for (auto v : t)
    if (v > 2) throw DomainError("trace values must lie in F_3");
  SubField F3(3, 1);
  std::uint32_t ninv = F3.inv(static_cast<std::uint32_t>(n % 3));
  std::uint32_t r0 = F3.mul(t[0], ninv);
  ASSystem sys;
  sys.p = 3;
  sys.r = 1;
  sys.num_vars = 3;
  sys.s = 1;
  sys.label = "char3-direct:t=" + format_vector(t);
  for (int k = 2; k <= 3; ++k) {
    MPoly shift = mpoly_const(F3, F3.neg(F3.mul(t[k - 1], ninv)));
    sys.eqs.push_back({k - 1, 3, mpoly_add(F3, lowered_component_char3(k, r0, n), shift)});
  }
  return sys;
}

BigInt direct_count_char3(const std::vector<std::uint32_t>& t, int n) {
  return exact_div(BigInt(affine_count_system(build_direct_system_char3(t, n), n)), 27, "direct_count_char3");
}

CountTable V_table_char3(int n) {
  require_coprime3(n);
  FieldTower F(3, 1, n);
  check_budget(F.size(), "V_table_char3");
  std::vector<std::vector<MPolyEval<FieldTower>>> comps(3);
  for (std::uint32_t r0 = 0; r0 < 3; ++r0)
    for (int l = 1; l <= 3; ++l) comps[r0].emplace_back(F, lowered_component_char3(l, r0, n));
  std::vector<std::uint64_t> hist(27, 0);
  std::mutex mu;
  parallel_for_chunks(F.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    std::vector<std::uint64_t> local(27, 0);
    FieldTower::Elem vals[kMaxVars];
    vals[0] = F.element(lo);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      for (std::uint32_t r0 = 0; r0 < 3; ++r0) {
        std::uint64_t cell = 0, scale = 1;
        for (int l = 0; l < 3; ++l, scale *= 3) cell += scale * F.rel_trace(comps[r0][l](vals));
        ++local[cell];
      }
      F.next(vals[0]);
    }
    std::lock_guard<std::mutex> lock(mu);
    for (int c = 0; c < 27; ++c) hist[c] += local[c];
  });
  SubField F3(3, 1);
  CountTable V(27, 0);
  V[0] = ipow(BigInt(3), n);
  for (std::uint64_t i = 1; i < 27; ++i) {
    BigInt s = 0;
    for (std::uint64_t t = 0; t < 27; ++t)
      if (index_dot(F3, i, t, 3) == 1) s += hist[t];
    V[i] = exact_div(s, 3, "V_table_char3");
  }
  return V;
}

CountTable F_smallchar_counts(std::uint32_t q, int l, int n, bool alternative) {
  if (q == 2) return solve_N_from_V0(V_table_char2(PositionSet::prefix(l, alternative), n), l);
  if (q == 3) {
    if (l != 3) throw DomainError("the characteristic-3 pipeline covers l = 3");
    return solve_N_from_V1(V_table_char3(n), 3, 3);
  }
  throw DomainError("small-characteristic counts need q in {2, 3}");
}

}  // namespace irrcount
