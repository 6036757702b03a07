#pragma once

#include <string>
#include <vector>

namespace golden {

struct Row {
  std::vector<std::string> forbidden;
  std::vector<long long> terms;
};

// B(2,3) minus the listed words, n_0..n_7.
inline const std::vector<Row>& b23_rows() {
  static const std::vector<Row> rows{
      {{"000", "010", "011"}, {5, 5, 5, 5, 5, 5, 5, 5}},
      {{"000", "001", "101"}, {5, 6, 6, 6, 6, 6, 6, 6}},
      {{"001", "010", "011"}, {5, 6, 7, 8, 9, 10, 11, 12}},
      {{"000", "010", "111"}, {5, 6, 7, 9, 11, 13, 16, 20}},
      {{"000", "011", "110"}, {5, 6, 8, 10, 13, 17, 22, 29}},
      {{"000", "010", "101"}, {5, 7, 10, 14, 19, 26, 36, 50}},
      {{"001", "010", "100"}, {5, 7, 10, 14, 20, 29, 42, 61}},
      {{"000", "001", "010"}, {5, 7, 11, 16, 23, 34, 50, 73}},
      {{"000", "001", "011"}, {5, 7, 8, 10, 11, 13, 14, 16}},
      {{"001", "010", "101"}, {5, 7, 9, 11, 13, 15, 17, 19}},
      {{"000", "001", "111"}, {5, 7, 9, 12, 16, 21, 28, 37}},
      {{"000", "001", "100"}, {5, 8, 13, 21, 34, 55, 89, 144}},
  };
  return rows;
}

// B(2,4) minus the listed words.
inline const std::vector<Row>& b24_rows_a() {
  static const std::vector<Row> rows{
      {{"000", "1001", "1011", "1101"}, {10, 13, 13, 14, 13, 14, 13, 14, 13, 14, 13, 14, 13}},
      {{"0001", "0010", "0110", "111"}, {10, 13, 14, 16, 17, 19, 20, 22, 23, 25, 26, 28, 29}},
      {{"0010", "0101", "0110", "111"}, {10, 13, 15, 17, 18, 18, 18, 18, 18, 18, 18, 18, 18}},
      {{"0000", "0101", "0110", "111"}, {10, 13, 15, 19, 23, 28, 34, 42, 51, 62, 76, 93, 113}},
      {{"000", "0111", "1010", "1011"}, {10, 13, 16, 21, 27, 33, 41, 52, 64, 78, 97, 120, 146}},
      {{"000", "0111", "1100", "1101"}, {10, 13, 16, 21, 27, 35, 46, 60, 79, 104, 137, 181}},
      {{"0000", "0100", "0101", "111"}, {10, 13, 16, 22, 30, 39, 51, 68, 91, 120, 158, 210}},
      {{"0010", "0101", "110", "1101"}, {10, 13, 17, 21, 25, 29, 33, 37, 41, 45, 49, 53}},
      {{"000", "0110", "1001", "1101"}, {10, 13, 17, 22, 26, 31, 35, 40, 44, 49, 53, 58}},
      {{"000", "0101", "110", "1101"}, {10, 13, 17, 22, 28, 35, 44, 55, 68, 84, 104, 128}},
      {{"000", "0100", "0111", "1101"}, {10, 13, 17, 22, 29, 37, 48, 61, 79, 100, 129, 163}},
      {{"000", "0101", "0111", "1100"}, {10, 13, 17, 23, 29, 37, 49, 61, 77, 101, 125, 157}},
      {{"000", "0111", "1010", "1101"}, {10, 13, 17, 23, 31, 41, 54, 71, 93, 122, 160, 209}},
      {{"000", "0100", "0101", "0111"}, {10, 13, 18, 24, 30, 38, 49, 61, 75, 94, 117, 143}},
      {{"0001", "0100", "0111", "100"}, {10, 13, 18, 24, 32, 43, 57, 76, 101, 134, 178, 236}},
      {{"000", "0100", "0101", "1101"}, {10, 13, 18, 25, 35, 48, 66, 91, 126, 174, 240, 331}},
      {{"0011", "0101", "100"}, {10, 13, 18, 25, 35, 50, 72, 104, 151, 220, 321, 469}},
      {{"0101", "1001", "110", "1101"}, {10, 13, 18, 26, 37, 51, 70, 97, 135, 187, 258, 356}},
      {{"000", "0101", "0110", "1101"}, {10, 13, 19, 27, 37, 53, 74, 103, 146, 204, 286, 403}},
      {{"0001", "0101", "100"}, {10, 13, 19, 28, 40, 58, 85, 124, 181, 265, 388, 568}},
      {{"000", "0100", "0101", "0110"}, {10, 13, 19, 30, 47, 70, 102, 151, 228, 345, 517, 770}},
  };
  return rows;
}

// B(2,4) minus the listed words.
inline const std::vector<Row>& b24_rows_b() {
  static const std::vector<Row> rows{
      {{"0010", "011"}, {11, 16, 22, 30, 41, 55, 74, 99, 132, 176}},
      {{"0111", "100"}, {11, 16, 23, 32, 44, 60, 81, 109, 146, 195}},
      {{"001", "0101", "100"}, {11, 16, 23, 33, 47, 66, 93, 131, 183, 256}},
      {{"000", "0100", "0111"}, {11, 16, 24, 35, 49, 70, 100, 139, 195, 276}},
      {{"000", "0110", "1001"}, {11, 16, 24, 37, 56, 85, 128, 194, 293, 444}},
      {{"000", "0101", "0110"}, {11, 16, 25, 40, 63, 99, 155, 243, 382, 600}},
      {{"000", "0011", "1011"}, {11, 17, 24, 34, 47, 64, 87, 117, 157, 210}},
      {{"0001", "011"}, {11, 17, 25, 36, 51, 71, 98, 134, 182, 246}},
      {{"000", "0100", "1011"}, {11, 17, 25, 36, 51, 72, 101, 141, 196, 272}},
      {{"000", "1011", "1100"}, {11, 17, 25, 37, 55, 82, 123, 185, 278, 418}},
      {{"00", "0111", "1011"}, {11, 17, 25, 38, 56, 83, 122, 180, 264, 388}},
      {{"000", "1011", "1101"}, {11, 17, 25, 39, 60, 92, 141, 216, 332, 509}},
      {{"000", "0010", "1011"}, {11, 17, 26, 39, 59, 89, 135, 204, 309, 467}},
      {{"001", "0110"}, {11, 17, 26, 40, 61, 93, 141, 214, 324, 491}},
      {{"000", "0111", "1100"}, {11, 17, 26, 40, 61, 93, 142, 216, 329, 501}},
      {{"000", "0101", "1011"}, {11, 17, 26, 40, 61, 94, 145, 223, 343, 528}},
      {{"0000", "0101", "111"}, {11, 17, 26, 41, 63, 97, 151, 234, 361, 559}},
      {{"000", "0011", "1010"}, {11, 17, 26, 41, 64, 99, 155, 242, 376, 587}},
      {{"000", "0110", "1011"}, {11, 17, 27, 42, 65, 101, 156, 242, 375, 581}},
      {{"000", "0100", "0101"}, {11, 17, 28, 46, 74, 119, 193, 313, 506, 818}},
      {{"000", "0011", "0111"}, {11, 18, 28, 43, 67, 102, 156, 239, 363, 554}},
      {{"000", "0011", "1001"}, {11, 18, 28, 46, 74, 120, 194, 314, 508, 822}},
      {{"000", "0010", "1001"}, {11, 18, 30, 48, 78, 126, 204, 330, 534, 864}},
      {{"0001", "010"}, {11, 18, 30, 49, 79, 128, 208, 337, 545, 882}},
      {{"000", "0100", "100", "1010"}, {11, 18, 30, 50, 83, 138, 229, 380, 631}},
      {{"000", "0011", "1100"}, {11, 18, 30, 50, 83, 138, 230, 383, 638, 1063}},
      {{"000", "0011", "0100"}, {11, 18, 30, 50, 84, 141, 236, 395, 661}},
      {{"010", "1001"}, {11, 19, 32, 53, 89, 149, 249, 417, 698, 1168}},
  };
  return rows;
}

// SF(2,4) minus the listed words.
inline const std::vector<Row>& sf24_rows() {
  static const std::vector<Row> rows{
      {{"0120", "0121", "0210"}, {15, 19, 21, 25, 31, 38, 45, 55}},
      {{"0102", "0120", "0210"}, {15, 19, 22, 27, 35, 43, 52, 65}},
      {{"0102", "0120", "0121"}, {15, 20, 24, 29, 37, 44, 53, 65}},
      {{"0120", "0121", "0212"}, {15, 20, 24, 29, 37, 45, 54, 66}},
      {{"0120", "0201", "0212"}, {15, 20, 25, 31, 39, 46, 56, 69}},
      {{"0121", "0201", "0210"}, {15, 20, 25, 31, 42, 56, 72, 94}},
      {{"0102", "0210", "0212"}, {15, 20, 26, 33, 44, 57, 73, 96}},
      {{"0102", "0120", "0201"}, {15, 20, 27, 37, 50, 67, 91, 124}},
      {{"0102", "0121", "0212"}, {15, 21, 28, 35, 48, 63, 79, 108}},
      {{"020", "1021"}, {15, 21, 28, 40, 55, 76, 104, 144}},
      {{"010", "0202", "0210"}, {15, 21, 29, 41, 57, 80, 111, 155}},
      {{"0102", "0121", "0201"}, {15, 21, 30, 41, 57, 81, 112, 155}},
      {{"020", "2101"}, {15, 22, 31, 44, 62, 88, 125, 178}},
      {{"0121", "212"}, {15, 22, 31, 45, 64, 92, 132, 189}},
      {{"1021", "212"}, {15, 22, 31, 45, 65, 94, 135, 194}},
      {{"1202", "212"}, {15, 23, 34, 51, 76, 114, 170, 254}},
      {{"1201", "2102"}, {16, 22, 28, 36, 46, 58, 72, 90}},
      {{"2012", "2102"}, {16, 22, 28, 38, 52, 70, 92, 124}},
      {{"0120", "2120"}, {16, 23, 31, 43, 60, 82, 112, 155}},
      {{"0120", "0212"}, {16, 23, 31, 43, 60, 83, 114, 157}},
      {{"2101", "2120"}, {16, 23, 31, 43, 61, 85, 118, 165}},
      {{"1021", "1210"}, {16, 23, 32, 45, 63, 87, 121, 170}},
      {{"0102", "1201"}, {16, 23, 32, 46, 67, 97, 139, 200}},
      {{"0210", "1021"}, {16, 23, 33, 48, 68, 96, 137, 196}},
      {{"1202", "2010"}, {16, 24, 34, 48, 68, 96, 136, 194}},
      {{"0102", "0121"}, {16, 24, 34, 48, 69, 97, 137, 196}},
      {{"1020", "1202"}, {16, 24, 34, 48, 70, 100, 142, 206}},
      {{"0201", "1202"}, {16, 24, 34, 49, 70, 100, 144, 207}},
      {{"1201", "2010"}, {16, 24, 34, 49, 71, 102, 146, 211}},
      {{"0121", "1020"}, {16, 24, 34, 50, 74, 108, 158, 232}},
      {{"0102", "0212"}, {16, 24, 35, 50, 74, 109, 158, 233}},
      {{"1012", "1210"}, {16, 24, 36, 54, 80, 120, 180, 268}},
      {{"0212", "2021"}, {16, 25, 36, 54, 81, 120, 180, 269}},
      {{"0201", "1020"}, {16, 25, 38, 59, 90, 139, 214, 329}},
  };
  return rows;
}

// Identifiers listed next to b23_rows(), same order.
inline const std::vector<std::string>& b23_oeis() {
  static const std::vector<std::string> ids{"A010716", "A101101", "A000027", "A164317", "A052954", "A003269",
                                            "A020711", "A164316", "A001651", "A005408", "A000931", "A000045"};
  return ids;
}

}  // namespace golden
