#pragma once

#include <array>
#include <string>
#include <string_view>

// Frozen expected values. Derived independently (hand transcription plus a
// brute-force enumeration script) before the implementation existed; tests
// must never regenerate them from library output.
namespace fixtures {

struct GrayRow {
  long long z;
  std::string_view d;
  std::string_view g;
};

// Full (3,3) code: rank, digits, codeword.
inline constexpr std::array<GrayRow, 27> kGray33{{
    {0, "000", "000"},  {1, "001", "001"},  {2, "002", "002"},
    {3, "010", "012"},  {4, "011", "011"},  {5, "012", "010"},
    {6, "020", "020"},  {7, "021", "021"},  {8, "022", "022"},
    {9, "100", "122"},  {10, "101", "121"}, {11, "102", "120"},
    {12, "110", "110"}, {13, "111", "111"}, {14, "112", "112"},
    {15, "120", "102"}, {16, "121", "101"}, {17, "122", "100"},
    {18, "200", "200"}, {19, "201", "201"}, {20, "202", "202"},
    {21, "210", "212"}, {22, "211", "211"}, {23, "212", "210"},
    {24, "220", "220"}, {25, "221", "221"}, {26, "222", "222"},
}};

// Full (2,4) code in rank order.
inline constexpr std::array<std::string_view, 16> kGray24{
    "00", "01", "02", "03", "13", "12", "11", "10",
    "20", "21", "22", "23", "33", "32", "31", "30",
};

struct CandidateRow {
  long long z;
  std::string_view b;
  std::string_view y;
  long long w;
};

// Payload balancing of x = 2101 over q = 3: all twelve candidates.
inline constexpr std::array<CandidateRow, 12> kCandidates2101{{
    {0, "0000", "2101", 4},
    {1, "1000", "0101", 2},
    {2, "1100", "0201", 3},
    {3, "1110", "0211", 4},
    {4, "1111", "0212", 5},
    {5, "2111", "1212", 6},
    {6, "2211", "1012", 4},
    {7, "2221", "1022", 5},
    {8, "2222", "1020", 3},
    {9, "0222", "2020", 4},
    {10, "0022", "2120", 5},
    {11, "0002", "2100", 3},
}};

struct EncodingRowFx {
  long long z;
  long long zPrime;
  std::string_view b;
  std::string_view y;
  std::string_view c;  // u | g | y
  long long w;
  bool balanced;
};

// q = 3, k = 3, x = 201.
inline constexpr std::array<EncodingRowFx, 9> kTable33x201{{
    {0, 0, "000", "201", "000201", 3, false},
    {1, 1, "100", "001", "001001", 2, false},
    {2, 2, "110", "011", "202011", 6, true},
    {3, 3, "111", "012", "012012", 6, true},
    {4, 4, "211", "112", "011112", 6, true},
    {5, 5, "221", "122", "010122", 6, true},
    {6, 6, "222", "120", "120120", 6, true},
    {7, 7, "022", "220", "021220", 7, false},
    {8, 8, "002", "200", "022200", 6, true},
}};

// q = 3, k = 5, x = 21120.
inline constexpr std::array<EncodingRowFx, 15> kTable35x21120{{
    {0, 5, "00000", "21120", "201021120", 9, true},
    {1, 6, "10000", "01120", "002001120", 6, false},
    {2, 7, "11000", "02120", "102102120", 9, true},
    {3, 8, "11100", "02220", "002202220", 10, false},
    {4, 9, "11110", "02200", "012202200", 9, true},
    {5, 10, "11111", "02201", "012102201", 9, true},
    {6, 11, "21111", "12201", "012012201", 9, true},
    {7, 12, "22111", "10201", "011010201", 6, false},
    {8, 13, "22211", "10001", "011110001", 5, false},
    {9, 14, "22221", "10011", "211210011", 9, true},
    {10, 15, "22222", "10012", "210210012", 9, true},
    {11, 16, "02222", "20012", "210120012", 9, true},
    {12, 17, "00222", "21012", "210021012", 9, true},
    {13, 18, "00022", "21112", "020021112", 9, true},
    {14, 19, "00002", "21122", "020121122", 11, false},
}};

// q = 4, k = 3, x = 312.
inline constexpr std::array<EncodingRowFx, 12> kTable43x312{{
    {0, 1, "000", "312", "201312", 9, true},
    {1, 2, "100", "012", "002012", 5, false},
    {2, 3, "110", "022", "203022", 9, true},
    {3, 4, "111", "023", "013023", 9, true},
    {4, 5, "211", "123", "012123", 9, true},
    {5, 6, "221", "133", "011133", 9, true},
    {6, 7, "222", "130", "010130", 5, false},
    {7, 8, "322", "230", "220230", 9, true},
    {8, 9, "332", "200", "021200", 5, false},
    {9, 10, "333", "201", "222201", 9, true},
    {10, 11, "033", "301", "023301", 9, true},
    {11, 12, "003", "311", "033311", 11, false},
}};

struct PrefixRowFx {
  std::string_view g;
  std::string_view d;
  long long zPrime;
  long long z;
  long long s;
  long long p;
  std::string_view b;
};

// q = 3, k = 6: every in-window prefix and its balancing data.
inline constexpr std::array<PrefixRowFx, 18> kPrefixMap36{{
    {"011", "011", 4, 0, 0, 0, "000000"},
    {"010", "012", 5, 1, 0, 1, "100000"},
    {"020", "020", 6, 2, 0, 2, "110000"},
    {"021", "021", 7, 3, 0, 3, "111000"},
    {"022", "022", 8, 4, 0, 4, "111100"},
    {"122", "100", 9, 5, 0, 5, "111110"},
    {"121", "101", 10, 6, 1, 0, "111111"},
    {"120", "102", 11, 7, 1, 1, "211111"},
    {"110", "110", 12, 8, 1, 2, "221111"},
    {"111", "111", 13, 9, 1, 3, "222111"},
    {"112", "112", 14, 10, 1, 4, "222211"},
    {"102", "120", 15, 11, 1, 5, "222221"},
    {"101", "121", 16, 12, 2, 0, "222222"},
    {"100", "122", 17, 13, 2, 1, "022222"},
    {"200", "200", 18, 14, 2, 2, "002222"},
    {"201", "201", 19, 15, 2, 3, "000222"},
    {"202", "202", 20, 16, 2, 4, "000022"},
    {"212", "210", 21, 17, 2, 5, "000002"},
}};

// Ranks of the nine (3,3) prefixes outside the k = 6 window [4, 21].
inline constexpr std::array<long long, 9> kOutsideWindow36{0, 1, 2,  3, 22,
                                                           23, 24, 25, 26};

inline std::string gray_table_tsv() {
  std::string out = "z\td\tg\n";
  for (const GrayRow& row : kGray33) {
    out += std::to_string(row.z);
    out += '\t';
    out += row.d;
    out += '\t';
    out += row.g;
    out += '\n';
  }
  return out;
}

template <std::size_t N>
std::string encoding_table_tsv(const std::array<EncodingRowFx, N>& rows) {
  std::string out = "z\tzprime\tb\ty\tc\tw\tbalanced\n";
  for (const EncodingRowFx& row : rows) {
    out += std::to_string(row.z);
    out += '\t';
    out += std::to_string(row.zPrime);
    out += '\t';
    out += row.b;
    out += '\t';
    out += row.y;
    out += '\t';
    out += row.c;
    out += '\t';
    out += std::to_string(row.w);
    out += '\t';
    out += row.balanced ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace fixtures
