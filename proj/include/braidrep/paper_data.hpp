// Published tables of type II shift cycles and K_4 extension data,
// transcribed verbatim. Source files live in data/ and must stay identical
// to these strings (checked by the test suite).

#ifndef BRAIDREP_PAPER_DATA_HPP_
#define BRAIDREP_PAPER_DATA_HPP_

#include <string_view>

namespace braidrep::fixtures {

  inline constexpr std::string_view kHomK3S3TypeII = R"fixture(B[2, 3] = [5, 6, 2, 5, 3, 6, 5, 2, 3]
9
B[2, 4] = [6, 3, 4, 2, 6, 4, 3, 2, 4]
9
B[4, 5] = [4, 5]
2
)fixture";

  inline constexpr std::string_view kHomK3S4TypeII = R"fixture(B[2, 3] = [5, 6, 2, 5, 3, 6, 5, 2, 3]
9
B[2, 4] = [6, 3, 4, 2, 6, 4, 3, 2, 4]
9
B[2, 7] = [8, 2, 7]
3
B[2, 8] = [7, 2, 8]
3
B[2, 9] = [11, 6, 16, 18, 3, 20, 19, 2, 9]
9
B[2, 10] = [12, 3, 23, 21, 6, 14, 13, 2, 10]
9
B[2, 11] = [9, 6, 18, 16, 3, 19, 20, 2, 11]
9
B[2, 12] = [10, 3, 21, 23, 6, 13, 14, 2, 12]
9
B[2, 13] = [19, 22, 4, 23, 15, 12, 11, 2, 13]
9
B[2, 14] = [20, 15, 18, 5, 22, 10, 9, 2, 14]
9
B[2, 15] = [21, 22, 2, 21, 15, 22, 21, 2, 15]
9
B[2, 16] = [22, 15, 16, 2, 22, 16, 15, 2, 16]
9
B[2, 17] = [23, 7, 24, 23, 2, 17]
6
B[2, 18] = [24, 7, 18, 17, 2, 18]
6
B[2, 19] = [13, 22, 23, 4, 15, 11, 12, 2, 19]
9
B[2, 20] = [14, 15, 5, 18, 22, 9, 10, 2, 20]
9
B[2, 23] = [17, 7, 23, 24, 2, 23]
6
B[2, 24] = [18, 7, 17, 18, 2, 24]
6
B[3, 7] = [13, 15, 3, 13, 7, 15, 13, 3, 7]
9
B[3, 8] = [14, 22, 17, 14, 3, 8]
6
B[3, 9] = [15, 7, 9, 3, 15, 9, 7, 3, 9]
9
B[3, 10] = [16, 7, 11, 5, 15, 23, 20, 3, 10]
9
B[3, 11] = [17, 22, 11, 8, 3, 11]
6
B[3, 12] = [18, 15, 4, 14, 7, 21, 19, 3, 12]
9
B[3, 14] = [8, 22, 14, 17, 3, 14]
6
B[3, 16] = [10, 7, 5, 11, 15, 20, 23, 3, 16]
9
B[3, 17] = [11, 22, 8, 11, 3, 17]
6
B[3, 18] = [12, 15, 14, 4, 7, 19, 21, 3, 18]
9
B[3, 22] = [24, 3, 22]
3
B[3, 24] = [22, 3, 24]
3
B[4, 5] = [4, 5]
2
B[4, 8] = [20, 16, 17, 4, 13, 8, 16, 20, 17, 13, 4, 8]
12
B[4, 9] = [21, 20, 4, 9]
4
B[4, 10] = [22, 13, 18, 6, 21, 11, 7, 4, 10]
9
B[4, 11] = [23, 12, 19, 11, 13, 23, 19, 4, 11]
9
B[4, 12] = [24, 9, 16, 8, 12, 4, 24, 16, 9, 8, 4, 12]
12
B[4, 16] = [12, 9, 4, 16]
4
B[4, 17] = [9, 20, 24, 4, 21, 17, 20, 9, 24, 21, 4, 17]
12
B[4, 18] = [10, 13, 11, 18, 21, 10, 11, 4, 18]
9
B[4, 19] = [14, 21, 18, 19, 12, 14, 18, 4, 19]
9
B[4, 20] = [13, 16, 4, 20]
4
B[4, 22] = [18, 13, 6, 11, 21, 7, 10, 4, 22]
9
B[5, 7] = [14, 16, 6, 23, 9, 22, 19, 5, 7]
9
B[5, 8] = [13, 21, 24, 5, 20, 8, 21, 13, 24, 20, 5, 8]
12
B[5, 9] = [17, 12, 21, 8, 9, 5, 17, 21, 12, 8, 5, 9]
12
B[5, 10] = [18, 9, 14, 10, 20, 18, 14, 5, 10]
9
B[5, 12] = [16, 13, 5, 12]
4
B[5, 13] = [20, 21, 5, 13]
4
B[5, 14] = [19, 16, 23, 14, 9, 19, 23, 5, 14]
9
B[5, 16] = [24, 13, 12, 17, 16, 5, 24, 12, 13, 17, 5, 16]
12
B[5, 19] = [7, 16, 14, 6, 9, 23, 22, 5, 19]
9
B[5, 21] = [9, 12, 5, 21]
4
B[5, 23] = [11, 20, 10, 23, 16, 11, 10, 5, 23]
9
B[6, 7] = [20, 22, 6, 20, 7, 22, 20, 6, 7]
9
B[6, 8] = [19, 15, 24, 19, 6, 8]
6
B[6, 10] = [24, 15, 10, 8, 6, 10]
6
B[6, 12] = [22, 7, 12, 6, 22, 12, 7, 6, 12]
9
B[6, 15] = [17, 6, 15]
3
B[6, 17] = [15, 6, 17]
3
B[6, 19] = [8, 15, 19, 24, 6, 19]
6
B[6, 24] = [10, 15, 8, 10, 6, 24]
6
B[8, 17] = [24, 8, 17]
3
B[8, 18] = [23, 8, 23, 18, 8, 18]
6
B[8, 24] = [17, 8, 24]
3
B[9, 13] = [9, 13]
2
B[9, 18] = [11, 16, 19, 18, 20, 11, 19, 9, 18]
9
B[10, 14] = [12, 23, 10, 21, 14, 23, 13, 10, 14]
9
B[10, 17] = [10, 19, 17, 19, 10, 17]
6
B[11, 14] = [24, 14, 11, 24, 11, 14]
6
B[12, 20] = [12, 20]
2
B[16, 21] = [16, 21]
2
)fixture";

  inline constexpr std::string_view kHomK4S4Extension = R"fixture([8, [4, 5], [4, 9], [4, 16], [4, 20], [5, 12], [5, 13], [5, 21], [9, 13], [12, 20], [16, 21]]
[17, [4, 5], [4, 9], [4, 16], [4, 20], [5, 12], [5, 13], [5, 21], [9, 13], [12, 20], [16, 21]]
[24, [4, 5], [4, 9], [4, 16], [4, 20], [5, 12], [5, 13], [5, 21], [9, 13], [12, 20], [16, 21]]
)fixture";

}  // namespace braidrep::fixtures

#endif  // BRAIDREP_PAPER_DATA_HPP_
