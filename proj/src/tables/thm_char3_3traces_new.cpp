#include "tables.hpp"

namespace irrcount::tables {

// F = q^(n-l) - (1/divisor) sum c rho_n(poly); rows are t|classes|terms, "v:" lists epsilon coefficients
const TableSource& thm_char3_3traces_new() {
  static const TableSource s{"thm:char3_3traces_new", "F_3(n,t1,t2,t3) for n >= 3 coprime to 3, direct method; t = 0 for all n >= 3", 3, 3, 27, 9, 3, R"(
000|all|v:0,2,1,2,0,0,0,2
100|1|v:0,2,1,2,0,0,0,2
100|2|v:2,1,0,2,0,2,0,0
100|4,7|v:0,2,1,0,1,1,1,0
100|5,8|v:2,1,0,0,1,0,1,1
200|1|v:0,2,1,2,0,0,0,2
200|2|v:1,0,2,2,0,0,2,0
200|4,7|v:0,2,1,0,1,1,1,0
200|5,8|v:1,0,2,0,1,1,0,1
010|1,4,7|v:2,1,0,2,0,2,0,0
010|2,5,8|v:1,0,2,2,0,0,2,0
110|1,7|v:2,1,0,0,1,0,1,1
110|2|v:0,2,1,2,0,0,0,2
110|4|v:2,1,0,2,0,2,0,0
110|5,8|v:0,2,1,0,1,1,1,0
210|1,5,7,8|v:2,1,0,0,1,0,1,1
210|2,4|v:2,1,0,2,0,2,0,0
020|1,4,7|v:1,0,2,2,0,0,2,0
020|2,5,8|v:2,1,0,2,0,2,0,0
120|1,4,5,8|v:1,0,2,0,1,1,0,1
120|2,7|v:1,0,2,2,0,0,2,0
220|1,4|v:1,0,2,0,1,1,0,1
220|2|v:0,2,1,2,0,0,0,2
220|5,8|v:0,2,1,0,1,1,1,0
220|7|v:1,0,2,2,0,0,2,0
001|1,2,4,5,7,8|v:0,2,1,0,1,1,1,0
101|1,7|v:0,2,1,0,1,1,1,0
101|2,5|v:2,1,0,0,1,0,1,1
101|4|v:0,2,1,2,0,0,0,2
101|8|v:2,1,0,2,0,2,0,0
201|1,4|v:0,2,1,0,1,1,1,0
201|2,8|v:1,0,2,0,1,1,0,1
201|5|v:1,0,2,2,0,0,2,0
201|7|v:0,2,1,2,0,0,0,2
011|1,4,7|v:2,1,0,0,1,0,1,1
011|2,5,8|v:1,0,2,0,1,1,0,1
111|1,4|v:2,1,0,0,1,0,1,1
111|2,5|v:0,2,1,0,1,1,1,0
111|7|v:2,1,0,2,0,2,0,0
111|8|v:0,2,1,2,0,0,0,2
211|1,5|v:2,1,0,2,0,2,0,0
211|2,4,7,8|v:2,1,0,0,1,0,1,1
021|1,4,7|v:1,0,2,0,1,1,0,1
021|2,5,8|v:2,1,0,0,1,0,1,1
121|1,8|v:1,0,2,2,0,0,2,0
121|2,4,5,7|v:1,0,2,0,1,1,0,1
221|1,7|v:1,0,2,0,1,1,0,1
221|2,8|v:0,2,1,0,1,1,1,0
221|4|v:1,0,2,2,0,0,2,0
221|5|v:0,2,1,2,0,0,0,2
002|1,2,4,5,7,8|v:0,2,1,0,1,1,1,0
102|1,4|v:0,2,1,0,1,1,1,0
102|2,8|v:2,1,0,0,1,0,1,1
102|5|v:2,1,0,2,0,2,0,0
102|7|v:0,2,1,2,0,0,0,2
202|1,7|v:0,2,1,0,1,1,1,0
202|2,5|v:1,0,2,0,1,1,0,1
202|4|v:0,2,1,2,0,0,0,2
202|8|v:1,0,2,2,0,0,2,0
012|1,4,7|v:2,1,0,0,1,0,1,1
012|2,5,8|v:1,0,2,0,1,1,0,1
112|1|v:2,1,0,2,0,2,0,0
112|2,8|v:0,2,1,0,1,1,1,0
112|4,7|v:2,1,0,0,1,0,1,1
112|5|v:0,2,1,2,0,0,0,2
212|1,2,4,5|v:2,1,0,0,1,0,1,1
212|7,8|v:2,1,0,2,0,2,0,0
022|1,4,7|v:1,0,2,0,1,1,0,1
022|2,5,8|v:2,1,0,0,1,0,1,1
122|1,2,7,8|v:1,0,2,0,1,1,0,1
122|4,5|v:1,0,2,2,0,0,2,0
222|1|v:1,0,2,2,0,0,2,0
222|2,5|v:0,2,1,0,1,1,1,0
222|4,7|v:1,0,2,0,1,1,0,1
222|8|v:0,2,1,2,0,0,0,2
)"};
  return s;
}

}  // namespace irrcount::tables
