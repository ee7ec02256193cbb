#include "tables.hpp"

namespace irrcount::tables {

// F = q^(n-l) - (1/divisor) sum c rho_n(poly); rows are t|classes|terms, "v:" lists epsilon coefficients
const TableSource& thm_4traces() {
  static const TableSource s{"thm:4traces", "F_2(n,t1,..,t4) for odd n >= 4", 2, 4, 16, 8, 4, R"(
0000|1,3,5,7|4*d2_1 1*d4_1 1*d8_1 1*d8_2
1000|1|4*d2_1 1*d4_1 1*d8_1 1*d8_2
1000|3|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
1000|5|1*d4_1 -1*d8_1 -1*d8_2
1000|7|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
0100|1,5|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
0100|3,7|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
1100|1|-4*d2_1 1*d4_1 1*d8_1 1*d8_2
1100|3|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
1100|5|1*d4_1 -1*d8_1 -1*d8_2
1100|7|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
0010|1,3,5,7|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
1010|1|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
1010|3|-4*d2_1 1*d4_1 1*d8_1 1*d8_2
1010|5|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
1010|7|1*d4_1 -1*d8_1 -1*d8_2
0110|1,5|1*d4_1 -1*d8_1 -1*d8_2
0110|3,7|-4*d2_1 1*d4_1 1*d8_1 1*d8_2
1110|1|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
1110|3|4*d2_1 1*d4_1 1*d8_1 1*d8_2
1110|5|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
1110|7|1*d4_1 -1*d8_1 -1*d8_2
0001|1,3,5,7|1*d4_1 -1*d8_1 -1*d8_2
1001|1|1*d4_1 -1*d8_1 -1*d8_2
1001|3|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
1001|5|4*d2_1 1*d4_1 1*d8_1 1*d8_2
1001|7|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
0101|1,5|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
0101|3,7|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
1101|1|1*d4_1 -1*d8_1 -1*d8_2
1101|3|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
1101|5|-4*d2_1 1*d4_1 1*d8_1 1*d8_2
1101|7|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
0011|1,3,5,7|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
1011|1|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
1011|3|1*d4_1 -1*d8_1 -1*d8_2
1011|5|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
1011|7|-4*d2_1 1*d4_1 1*d8_1 1*d8_2
0111|1,5|-4*d2_1 1*d4_1 1*d8_1 1*d8_2
0111|3,7|1*d4_1 -1*d8_1 -1*d8_2
1111|1|-2*d2_1 -1*d4_1 1*d8_1 -1*d8_2
1111|3|1*d4_1 -1*d8_1 -1*d8_2
1111|5|2*d2_1 -1*d4_1 -1*d8_1 1*d8_2
1111|7|4*d2_1 1*d4_1 1*d8_1 1*d8_2
)"};
  return s;
}

}  // namespace irrcount::tables
