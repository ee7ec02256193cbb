#include "tables.hpp"

namespace irrcount::tables {

// F = q^(n-l) - (1/divisor) sum c rho_n(poly); rows are t|classes|terms, "v:" lists epsilon coefficients
const TableSource& thm_3traces() {
  static const TableSource s{"thm:3traces", "F_2(n,t1,t2,t3) for odd n >= 3", 2, 3, 8, 4, 3, R"(
000|1,3|2*d2_1 1*d4_1
100|1|2*d2_1 1*d4_1
100|3|-1*d4_1
010|1,3|-1*d4_1
110|1|-2*d2_1 1*d4_1
110|3|-1*d4_1
001|1,3|-1*d4_1
101|1|-1*d4_1
101|3|-2*d2_1 1*d4_1
011|1,3|-2*d2_1 1*d4_1
111|1|-1*d4_1
111|3|2*d2_1 1*d4_1
)"};
  return s;
}

}  // namespace irrcount::tables
