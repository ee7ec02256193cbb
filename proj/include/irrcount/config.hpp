#pragma once

#include <cstdint>
#include <functional>

namespace irrcount {

// Process-wide knobs for enumeration size and worker count.
struct Config {
  static std::uint64_t budget();
  static void set_budget(std::uint64_t visits);
  static unsigned jobs();
  static void set_jobs(unsigned j);
};

// Throws BudgetExceeded if size exceeds the current budget.
void check_budget(std::uint64_t size, const char* what);

// Splits [0, total) into contiguous chunks run on Config::jobs() workers.
void parallel_for_chunks(std::uint64_t total,
                         const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body);

}  // namespace irrcount
