#include "tables.hpp"

namespace irrcount::tables {

// F = q^(n-l) - (1/divisor) sum c rho_n(poly); rows are t|classes|terms, "v:" lists epsilon coefficients
const TableSource& thm_5traces() {
  static const TableSource s{"thm:5traces", "F_2(n,t1,..,t5) for odd n >= 5", 2, 5, 32, 8, 5, R"(
00000|1,3,5,7|5*d2_1 5*d4_1 2*d8_1 1*d8_3
10000|1|5*d2_1 5*d4_1 2*d8_1 1*d8_3
10000|3|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
10000|5|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
10000|7|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
01000|1,5|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
01000|3,7|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
11000|1|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
11000|3|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
11000|5|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
11000|7|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
00100|1,3,5,7|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
10100|1|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
10100|3|-5*d2_1 5*d4_1 2*d8_2 -1*d8_3
10100|5|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
10100|7|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
01100|1,5|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
01100|3,7|-5*d2_1 5*d4_1 2*d8_2 -1*d8_3
11100|1|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
11100|3|5*d2_1 5*d4_1 2*d8_1 1*d8_3
11100|5|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
11100|7|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
00010|1,3,5,7|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
10010|1|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
10010|3|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
10010|5|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
10010|7|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
01010|1,5|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
01010|3,7|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
11010|1|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
11010|3|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
11010|5|-5*d2_1 5*d4_1 2*d8_2 -1*d8_3
11010|7|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
00110|1,3,5,7|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
10110|1|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
10110|3|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
10110|5|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
10110|7|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
01110|1,5|-5*d2_1 5*d4_1 2*d8_2 -1*d8_3
01110|3,7|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
11110|1|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
11110|3|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
11110|5|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
11110|7|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
00001|1,3,5,7|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
10001|1|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
10001|3|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
10001|5|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
10001|7|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
01001|1,5|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
01001|3,7|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
11001|1|-5*d2_1 5*d4_1 2*d8_2 -1*d8_3
11001|3|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
11001|5|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
11001|7|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
00101|1,3,5,7|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
10101|1|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
10101|3|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
10101|5|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
10101|7|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
01101|1,5|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
01101|3,7|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
11101|1|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
11101|3|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
11101|5|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
11101|7|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
00011|1,3,5,7|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
10011|1|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
10011|3|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
10011|5|5*d2_1 5*d4_1 2*d8_1 1*d8_3
10011|7|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
01011|1,5|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
01011|3,7|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
11011|1|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
11011|3|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
11011|5|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
11011|7|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
00111|1,3,5,7|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
10111|1|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
10111|3|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
10111|5|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
10111|7|-5*d2_1 5*d4_1 2*d8_2 -1*d8_3
01111|1,5|-3*d2_1 -3*d4_1 2*d8_1 1*d8_3
01111|3,7|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
11111|1|-1*d2_1 1*d4_1 -2*d8_2 -1*d8_3
11111|3|1*d2_1 1*d4_1 -2*d8_1 1*d8_3
11111|5|3*d2_1 -3*d4_1 2*d8_2 -1*d8_3
11111|7|5*d2_1 5*d4_1 2*d8_1 1*d8_3
)"};
  return s;
}

}  // namespace irrcount::tables
