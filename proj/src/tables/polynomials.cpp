#include "tables.hpp"

namespace irrcount::tables {

// name: integer coefficients, highest degree first
const char* polynomial_source() {
  return R"(d2_1: 1 2 2
d2_2: 1 0 2
d2_3: 1 -2 2
d4_1: 1 2 2 4 4
d4_2: 1 0 2 0 4
d8_1: 1 4 6 4 2 8 24 32 16
d8_2: 1 0 2 4 2 8 8 0 16
d8_3: 1 2 2 0 -4 0 8 16 16
d8_4: 1 0 2 -4 2 -8 8 0 16
e2_1: 1 -3 3
e2_2: 1 3 3
e2_3: 1 0 3
e6: 1 3 9 15 27 27 27
e12_1: 1 -3 0 3 9 0 -45 0 81 81 0 -729 729
e12_2: 1 -3 0 12 -18 -27 117 -81 -162 324 0 -729 729
e12_3: 1 -3 9 -15 36 -54 117 -162 324 -405 729 -729 729
e12_4: 1 6 18 39 63 81 117 243 567 1053 1458 1458 729
g2_1: 1 0 -5
g2_2: 1 0 5
g4_1: 1 -5 15 -25 25
g4_2: 1 0 5 0 25
g4_3: 1 5 15 25 25
g8_1: 1 -10 45 -130 305 -650 1125 -1250 625
g8_2: 1 -5 10 -25 75 -125 250 -625 625
g8_3: 1 -5 10 5 -45 25 250 -625 625
g8_4: 1 -5 15 -35 80 -175 375 -625 625
g8_5: 1 -5 20 -65 155 -325 500 -625 625
g8_6: 1 0 -15 0 105 0 -375 0 625
g8_7: 1 0 -10 0 55 0 -250 0 625
g8_8: 1 0 -5 0 25 0 -125 0 625
g8_9: 1 0 0 0 30 0 0 0 625
g8_10: 1 0 5 -20 5 -100 125 0 625
g8_11: 1 0 5 -10 5 -50 125 0 625
g8_12: 1 0 5 10 5 50 125 0 625
g8_13: 1 0 5 20 5 100 125 0 625
g8_14: 1 5 10 -5 -45 -25 250 625 625
g8_15: 1 5 10 25 75 125 250 625 625
g8_16: 1 5 15 35 80 175 375 625 625
g8_17: 1 5 20 65 155 325 500 625 625
g8_18: 1 10 45 130 305 650 1125 1250 625
g12_1: 1 -5 5 5 5 75 -425 375 125 625 3125 -15625 15625
g12_2: 1 -5 10 5 -20 -125 575 -625 -500 625 6250 -15625 15625
g12_3: 1 -5 15 -45 80 -125 325 -625 2000 -5625 9375 -15625 15625
g12_4: 1 0 -10 -5 80 0 -425 0 2000 -625 -6250 0 15625
g12_5: 1 0 -10 10 55 -25 -175 -125 1375 1250 -6250 0 15625
g12_6: 1 0 -5 -15 5 50 75 250 125 -1875 -3125 0 15625
g12_7: 1 0 -5 -10 -20 25 325 125 -500 -1250 -3125 0 15625
g12_8: 1 0 0 -15 30 -50 75 -250 750 -1875 0 0 15625
g12_9: 1 0 0 15 -20 -50 75 -250 -500 1875 0 0 15625
g12_10: 1 0 5 -5 5 50 75 250 125 -625 3125 0 15625
g12_11: 1 0 10 20 55 175 325 875 1375 2500 6250 0 15625
g12_12: 1 0 15 -10 130 -75 825 -375 3250 -1250 9375 0 15625
g12_13: 1 5 10 25 80 225 575 1125 2000 3125 6250 15625 15625
g12_14: 1 5 15 25 5 -125 -425 -625 125 3125 9375 15625 15625
g12_15: 1 5 20 75 230 600 1450 3000 5750 9375 12500 15625 15625
)";
}

}  // namespace irrcount::tables
