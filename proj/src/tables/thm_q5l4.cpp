#include "tables.hpp"

namespace irrcount::tables {

// F = q^(n-l) + (1/divisor) sum c rho_n(poly); here the sign of the sum is +1, as direct counts require; rows are t|classes|terms, "v:" lists epsilon coefficients
const TableSource& thm_q5l4() {
  static const TableSource s{"thm:q5l4", "F_5(n,0,0,0,0) for n >= 4 coprime to 5", 5, 4, 625, 5, 4, R"(
0000|1,2,3,4|160*g2_1 16*g2_2 164*g4_1 16*g4_2 116*g4_3 25*g8_1 20*g8_2 16*g8_3 18*g8_4 20*g8_5 20*g8_6 20*g8_7 16*g8_8 24*g8_9 16*g8_10 21*g8_11 17*g8_12 16*g8_13 16*g8_14 12*g8_15 10*g8_16 8*g8_17 13*g8_18 20*g12_1 20*g12_2 20*g12_3 16*g12_4 16*g12_5 16*g12_6 16*g12_7 16*g12_8 16*g12_9 16*g12_10 16*g12_11 16*g12_12 12*g12_13 12*g12_14 12*g12_15
)", 1};
  return s;
}

}  // namespace irrcount::tables
