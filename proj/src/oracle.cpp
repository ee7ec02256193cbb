#include "irrcount/oracle.hpp"

#include "irrcount/config.hpp"

#include <mutex>

namespace irrcount {

std::uint64_t trace_index(const std::vector<std::uint32_t>& t, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (int k = static_cast<int>(t.size()) - 1; k >= 0; --k) idx = idx * q + t[k];
  return idx;
}

std::vector<std::uint32_t> trace_from_index(std::uint64_t idx, std::uint32_t q, int l) {
  std::vector<std::uint32_t> t(l);
  for (int k = 0; k < l; ++k) {
    t[k] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
  return t;
}

namespace {

// Visits the least element of every Frobenius orbit with its conjugates
// (length n, cyclically repeated) and the orbit size.
template <class Field, class Visit>
void orbit_scan(const Field& K, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  using Elem = typename Field::Elem;
  const int n = K.n();
  std::vector<Elem> conj(n);
  Elem a = K.element(lo);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    conj[0] = a;
    int period = n;
    bool least = true;
    for (int i = 1; i < n; ++i) {
      conj[i] = K.frobenius(conj[i - 1], 1);
      if (conj[i] == a) {
        period = i;
        break;
      }
      if (K.index(conj[i]) < idx) {
        least = false;
        break;
      }
    }
    if (least) {
      for (int i = period; i < n; ++i) conj[i] = conj[i - period];
      visit(conj, period);
    }
    K.next(a);
  }
}

template <class Field>
std::vector<std::uint32_t> elementary(const Field& K, const std::vector<typename Field::Elem>& conj, int l) {
  using Elem = typename Field::Elem;
  const int n = K.n(), m = std::min(l, n);
  std::vector<Elem> e(m + 1, K.zero());
  e[0] = K.one();
  for (int i = 0; i < n; ++i)
    for (int k = std::min(i + 1, m); k >= 1; --k) e[k] = K.add(e[k], K.mul(e[k - 1], conj[i]));
  std::vector<std::uint32_t> t(l, 0);
  for (int k = 1; k <= m; ++k) {
    if constexpr (std::is_same_v<Field, GF2n>)
      t[k - 1] = static_cast<std::uint32_t>(e[k] & 1);
    else
      t[k - 1] = e[k].c[0];
  }
  return t;
}

template <class Field>
std::vector<std::uint64_t> scan_tables(const Field& K, int l, bool irreducible_only, const char* what) {
  check_budget(K.size(), what);
  std::uint64_t cells = 1;
  for (int k = 0; k < l; ++k) cells *= K.q();
  std::vector<std::uint64_t> total(cells, 0);
  std::mutex mu;
  parallel_for_chunks(K.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    std::vector<std::uint64_t> local(cells, 0);
    orbit_scan(K, lo, hi, [&](const std::vector<typename Field::Elem>& conj, int period) {
      if (irreducible_only && period != K.n()) return;
      auto t = elementary(K, conj, l);
      local[trace_index(t, K.q())] += irreducible_only ? 1 : period;
    });
    std::lock_guard<std::mutex> lock(mu);
    for (std::uint64_t c = 0; c < cells; ++c) total[c] += local[c];
  });
  return total;
}

}  // namespace

std::vector<std::uint64_t> count_all_F_brute(const FieldTower& F, int l) {
  if (l < 0) throw DomainError("l must be nonnegative");
  return scan_tables(F, l, false, "count_all_F_brute");
}

std::vector<std::uint64_t> count_all_F_brute_gf2(int n, int l) {
  GF2n G(n);
  return scan_tables(G, l, false, "count_all_F_brute");
}

std::uint64_t count_F_brute(const FieldTower& F, const TraceSpec& spec) {
  int l = spec.max_position();
  if (l > F.n()) {
    for (const auto& [pos, v] : spec.values)
      if (pos > F.n() && v != 0) return 0;
  }
  auto table = count_all_F_brute(F, l);
  std::uint64_t s = 0;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx)
    if (spec.matches(trace_from_index(idx, F.q(), l))) s += table[idx];
  return s;
}

void enumerate_irreducibles(std::uint32_t q, int n, const std::function<void(const PolyQ&)>& visit) {
  FieldTower F = FieldTower::from_q(q, n);
  check_budget(F.size(), "enumerate_irreducibles");
  if (F.size() <= (1u << 16)) {
    const SubField& S = F.sub();
    PolyQ f(n + 1, 0);
    f[n] = 1;
    for (std::uint64_t rank = 0; rank < F.size(); ++rank) {
      std::uint64_t v = rank;
      for (int j = 0; j < n; ++j) {
        f[j] = static_cast<std::uint32_t>(v % q);
        v /= q;
      }
      if (is_irreducible(S, f)) visit(f);
    }
    return;
  }
  orbit_scan(F, 0, F.size(), [&](const std::vector<FieldTower::Elem>& conj, int period) {
    if (period != n) return;
    auto t = elementary(F, conj, n);
    PolyQ f(n + 1, 0);
    f[n] = 1;
    for (int k = 1; k <= n; ++k) f[n - k] = (k % 2) ? F.sub().neg(t[k - 1]) : t[k - 1];
    visit(f);
  });
}

std::vector<PolyQ> list_irreducibles(std::uint32_t q, int n) {
  std::vector<PolyQ> out;
  enumerate_irreducibles(q, n, [&](const PolyQ& f) { out.push_back(f); });
  return out;
}

std::vector<std::uint64_t> count_all_I_brute(std::uint32_t q, int n, int l) {
  if (q == 2 && n <= 63) return scan_tables(GF2n(n), l, true, "count_all_I_brute");
  return scan_tables(FieldTower::from_q(q, n), l, true, "count_all_I_brute");
}

std::uint64_t count_I_brute(std::uint32_t q, int n, const TraceSpec& spec) {
  int l = spec.max_position();
  auto table = count_all_I_brute(q, n, l);
  std::uint64_t s = 0;
  for (std::uint64_t idx = 0; idx < table.size(); ++idx)
    if (spec.matches(trace_from_index(idx, q, l))) s += table[idx];
  return s;
}

int moebius_mu(std::uint64_t n) {
  if (n == 0) throw DomainError("mu(0) undefined");
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

BigInt gauss_count(std::uint64_t q, unsigned n) {
  if (n < 1) throw DomainError("gauss_count needs n >= 1");
  BigInt s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) s += moebius_mu(d) * ipow(BigInt(q), n / d);
  return exact_div(s, n, "gauss_count");
}

}  // namespace irrcount
