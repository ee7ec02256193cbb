#include "tables.hpp"

namespace irrcount::tables {

// F = q^(n-l) - (1/divisor) sum c rho_n(poly); rows are t|classes|terms, "v:" lists epsilon coefficients
const TableSource& thm_5coeffsgeneral() {
  static const TableSource s{"thm:5coeffsgeneral", "F_2(n,0,0,0,t4,t5) for all n >= 5", 2, 5, 32, 1, 5, R"(
00000|all|7*d2_1 4*d2_2 2*d2_3 5*d4_1 3*d4_2 2*d8_1 1*d8_2 1*d8_3 1*d8_4
00010|all|3*d2_1 2*d2_3 1*d4_1 -1*d4_2 -2*d8_1 -1*d8_2 1*d8_3 -1*d8_4
00001|all|1*d2_1 2*d2_2 -2*d2_3 -3*d4_1 -3*d4_2 1*d8_2 -1*d8_3 -1*d8_4
00011|all|-3*d2_1 -2*d2_2 -2*d2_3 1*d4_1 1*d4_2 -1*d8_2 -1*d8_3 1*d8_4
)"};
  return s;
}

}  // namespace irrcount::tables
