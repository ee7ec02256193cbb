#include "tables.hpp"

namespace irrcount::tables {

// F = q^(n-l) - (1/divisor) sum c rho_n(poly); rows are t|classes|terms, "v:" lists epsilon coefficients
const TableSource& thm_4coeffsgeneral() {
  static const TableSource s{"thm:4coeffsgeneral", "F_2(n,0,0,t3,t4) for all n >= 4", 2, 4, 16, 1, 4, R"(
0000|all|4*d2_1 3*d2_2 1*d4_1 1*d8_1 1*d8_2
0001|all|-1*d2_2 1*d4_1 -1*d8_1 -1*d8_2
0010|all|-2*d2_1 1*d2_2 -1*d4_1 1*d8_1 -1*d8_2
0011|all|2*d2_1 -3*d2_2 -1*d4_1 -1*d8_1 1*d8_2
)"};
  return s;
}

}  // namespace irrcount::tables
