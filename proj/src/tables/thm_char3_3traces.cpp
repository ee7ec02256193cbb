#include "tables.hpp"

namespace irrcount::tables {

// F = q^(n-l) - (1/divisor) sum c rho_n(poly); rows are t|classes|terms, "v:" lists epsilon coefficients
const TableSource& thm_char3_3traces() {
  static const TableSource s{"thm:char3_3traces", "F_3(n,t1,t2,t3) for n >= 3 coprime to 3, indirect method", 3, 3, 81, 9, 3, R"(
000|1,2,4,5,7,8|v:-21,-15,-18,-8,-14,-14,-14,-8
100|1|v:-3,3,0,4,-2,-2,-2,4
100|2|v:3,0,-3,4,-2,4,-2,-2
100|4,7|v:-3,3,0,-2,1,1,1,-2
100|5,8|v:3,0,-3,-2,1,-2,1,1
200|1|v:-3,3,0,4,-2,-2,-2,4
200|2|v:0,-3,3,4,-2,-2,4,-2
200|4,7|v:-3,3,0,-2,1,1,1,-2
200|5,8|v:0,-3,3,-2,1,1,-2,1
010|1,4,7|v:12,9,6,4,-2,4,-2,-2
010|2,5,8|v:9,6,12,-8,-14,4,10,4
110|1,7|v:3,0,-3,-2,1,-2,1,1
110|2|v:-3,3,0,4,-2,-2,-2,4
110|4|v:3,0,-3,4,-2,4,-2,-2
110|5,8|v:-3,3,0,-2,1,1,1,-2
210|1,5,7,8|v:3,0,-3,-2,1,-2,1,1
210|2,4|v:3,0,-3,4,-2,4,-2,-2
020|1,4,7|v:9,6,12,4,-2,-2,4,-2
020|2,5,8|v:12,9,6,-8,-14,10,4,4
120|1,4,5,8|v:0,-3,3,-2,1,1,-2,1
120|2,7|v:0,-3,3,4,-2,-2,4,-2
220|1,4|v:0,-3,3,-2,1,1,-2,1
220|2|v:-3,3,0,4,-2,-2,-2,4
220|5,8|v:-3,3,0,-2,1,1,1,-2
220|7|v:0,-3,3,4,-2,-2,4,-2
001|1,2,4,5,7,8|v:-21,-15,-18,4,7,7,7,4
101|1,7|v:-3,3,0,-2,1,1,1,-2
101|2,5|v:3,0,-3,-2,1,-2,1,1
101|4|v:-3,3,0,4,-2,-2,-2,4
101|8|v:3,0,-3,4,-2,4,-2,-2
201|1,4|v:-3,3,0,-2,1,1,1,-2
201|2,8|v:0,-3,3,-2,1,1,-2,1
201|5|v:0,-3,3,4,-2,-2,4,-2
201|7|v:-3,3,0,4,-2,-2,-2,4
011|1,4,7|v:12,9,6,-2,1,-2,1,1
011|2,5,8|v:9,6,12,4,7,-2,-5,-2
111|1,4|v:3,0,-3,-2,1,-2,1,1
111|2,5|v:-3,3,0,-2,1,1,1,-2
111|7|v:3,0,-3,4,-2,4,-2,-2
111|8|v:-3,3,0,4,-2,-2,-2,4
211|1,5|v:3,0,-3,4,-2,4,-2,-2
211|2,4,7,8|v:3,0,-3,-2,1,-2,1,1
021|1,4,7|v:9,6,12,-2,1,1,-2,1
021|2,5,8|v:12,9,6,4,7,-5,-2,-2
121|1,8|v:0,-3,3,4,-2,-2,4,-2
121|2,4,5,7|v:0,-3,3,-2,1,1,-2,1
221|1,7|v:0,-3,3,-2,1,1,-2,1
221|2,8|v:-3,3,0,-2,1,1,1,-2
221|4|v:0,-3,3,4,-2,-2,4,-2
221|5|v:-3,3,0,4,-2,-2,-2,4
002|1,2,4,5,7,8|v:-21,-15,-18,4,7,7,7,4
102|1,4|v:-3,3,0,-2,1,1,1,-2
102|2,8|v:3,0,-3,-2,1,-2,1,1
102|5|v:3,0,-3,4,-2,4,-2,-2
102|7|v:-3,3,0,4,-2,-2,-2,4
202|1,7|v:-3,3,0,-2,1,1,1,-2
202|2,5|v:0,-3,3,-2,1,1,-2,1
202|4|v:-3,3,0,4,-2,-2,-2,4
202|8|v:0,-3,3,4,-2,-2,4,-2
012|1,4,7|v:12,9,6,-2,1,-2,1,1
012|2,5,8|v:9,6,12,4,7,-2,-5,-2
112|1|v:3,0,-3,4,-2,4,-2,-2
112|2,8|v:-3,3,0,-2,1,1,1,-2
112|4,7|v:3,0,-3,-2,1,-2,1,1
112|5|v:-3,3,0,4,-2,-2,-2,4
212|1,2,4,5|v:3,0,-3,-2,1,-2,1,1
212|7,8|v:3,0,-3,4,-2,4,-2,-2
022|1,4,7|v:9,6,12,-2,1,1,-2,1
022|2,5,8|v:12,9,6,4,7,-5,-2,-2
122|1,2,7,8|v:0,-3,3,-2,1,1,-2,1
122|4,5|v:0,-3,3,4,-2,-2,4,-2
222|1|v:0,-3,3,4,-2,-2,4,-2
222|2,5|v:-3,3,0,-2,1,1,1,-2
222|4,7|v:0,-3,3,-2,1,1,-2,1
222|8|v:-3,3,0,4,-2,-2,-2,4
)"};
  return s;
}

}  // namespace irrcount::tables
