#include "irrcount/config.hpp"

#include "irrcount/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace irrcount {

namespace {

std::uint64_t initial_budget() {
  if (const char* env = std::getenv("IRRCOUNT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return std::uint64_t{1} << 28;
}

std::atomic<std::uint64_t>& budget_ref() {
  static std::atomic<std::uint64_t> b{initial_budget()};
  return b;
}

std::atomic<unsigned>& jobs_ref() {
  static std::atomic<unsigned> j{1};
  return j;
}

}  // namespace

std::uint64_t Config::budget() { return budget_ref().load(); }
void Config::set_budget(std::uint64_t visits) { budget_ref().store(visits); }
unsigned Config::jobs() { return jobs_ref().load(); }
void Config::set_jobs(unsigned j) { jobs_ref().store(j == 0 ? 1 : j); }

void check_budget(std::uint64_t size, const char* what) {
  if (size > Config::budget())
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(size) +
                         " visits exceed budget " + std::to_string(Config::budget()));
}

void parallel_for_chunks(std::uint64_t total,
                         const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body) {
  unsigned jobs = Config::jobs();
  if (jobs <= 1 || total < 4096) {
    body(0, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::uint64_t step = (total + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    std::uint64_t lo = w * step, hi = std::min(total, lo + step);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi, w] { body(lo, hi, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace irrcount
