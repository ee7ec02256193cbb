#pragma once

#include <cstdint>
#include <vector>

namespace irrcount::tables {

struct TableSource {
  const char* id;
  const char* description;
  std::uint32_t q;
  int l;
  std::uint64_t divisor;
  std::uint32_t modulus;
  int min_n;
  const char* rows;
  // sign of the root-power sum; -1 for F = q^(n-l) - (1/divisor) sum c rho_n
  int rho_sign = -1;
};

const char* polynomial_source();
const TableSource& thm_3traces();
const TableSource& thm_4traces();
const TableSource& thm_5traces();
const TableSource& thm_4coeffsgeneral();
const TableSource& thm_5coeffsgeneral();
const TableSource& thm_char3_3traces();
const TableSource& thm_char3_3traces_new();
const TableSource& thm_q5l4();

inline std::vector<const TableSource*> all_sources() {
  return {&thm_3traces(), &thm_4traces(), &thm_5traces(), &thm_4coeffsgeneral(), &thm_5coeffsgeneral(), &thm_char3_3traces(), &thm_char3_3traces_new(), &thm_q5l4()};
}

}  // namespace irrcount::tables
