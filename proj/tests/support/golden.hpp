#pragma once

// Worked examples and printed tables used as golden data. Pair lists
// use the "x,y;x,y" literal syntax; table rows are listed special row first.

#include <string>
#include <vector>

namespace golden {

// Example 4.1
inline constexpr const char* kT7 = "2,3;4,6;5,1";
inline constexpr const char* kTemplate41 = "3,3;2,3;5,6;0,1;4,6;0,2;4,6;5,1;1,4;2,5";

// Example 4.10 (key 3)
inline constexpr const char* kEpic7_2 = "1,2;2,4;3,6";
inline constexpr const char* kEpic7_2Conjugate = "5,6;3,5;1,4";
inline constexpr const char* kTemplate410 = "3,3;2,3;4,5;1,2;4,6;5,0;6,1;5,1;6,2;4,0";

// Table 4 headers
struct EpicHeader {
  int mu;
  const char* pairs;
};
inline const std::vector<EpicHeader> kEpic7 = {
    {2, "1,2;2,4;3,6"}, {3, "4,5;1,3;5,1"}, {4, "5,6;3,5;1,4"}, {5, "2,3;4,6;6,2"}};

// Example 6.2
inline constexpr const char* kT62 = "2,3;4,6;1,5";
inline constexpr const char* kSigma62 = "1,1;2,3;3,4;5,6;4,6;5,0;2,4;1,5;2,6;3,0";
inline const std::vector<int> kDelta62 = {1, 2, 3, 4, 6, 7, 8};
// among the weak pairs 1, 2, 4, 5, 6, 7, 9
inline const std::vector<int> kSigmaCarry62 = {2, 4};
inline constexpr const char* kStrongPairs62 = "1,1;5,6;2,6";
inline constexpr const char* kSolution62 = "0,1;2,0;2,2;2,1;1,2;1,2;1,0;2,0;0,0;1,1";
inline constexpr const char* kStarter62 = "1,8;16,3;17,18;19,13;11,20;12,14;9,4;15,5;2,6;10,7";
// M_c as (pair, side) lists, side 0 = U, 1 = V
struct Mono {
  int color;
  std::vector<std::pair<int, int>> cells;
};
inline const std::vector<Mono> kMono62 = {
    {0, {{5, 1}, {9, 1}}},         {1, {{0, 0}, {0, 1}, {7, 0}}}, {2, {{1, 0}, {6, 0}, {8, 0}}},
    {3, {{1, 1}, {2, 0}, {9, 0}}}, {4, {{2, 1}, {4, 0}, {6, 1}}}, {5, {{3, 0}, {5, 0}, {7, 1}}},
    {6, {{3, 1}, {4, 1}, {8, 1}}}};

// Example 5.1 and Table 1
inline constexpr const char* kT15 = "3,4;12,14;7,10;2,6;8,13;5,11;9,1";
inline constexpr const char* kSigma15 =
    "4,4;3,4;7,8;0,1;12,14;1,3;5,7;7,10;11,14;9,12;2,6;6,10;13,2;8,13;12,2;6,11;5,11;9,0;8,14;9,1;13,5;3,10";
struct Weak {
  int sum;
  std::vector<int> indices;
};
inline const std::vector<Weak> kWeak15 = {{0, {2, 12}},  {1, {3, 11, 16}}, {2, {7, 15}}, {6, {9, 13}},
                                          {7, {1, 18}},  {8, {0, 10}},     {10, {8, 19}}};
inline const std::vector<Mono> kMono15 = {
    {0, {{3, 0}, {17, 1}}},           {1, {{3, 1}, {5, 0}, {19, 1}}},   {2, {{10, 0}, {12, 1}, {14, 1}}},
    {3, {{1, 0}, {5, 1}, {21, 0}}},   {4, {{0, 0}, {0, 1}, {1, 1}}},    {5, {{6, 0}, {16, 0}, {20, 1}}},
    {6, {{10, 1}, {11, 0}, {15, 0}}}, {7, {{2, 0}, {6, 1}, {7, 0}}},    {8, {{2, 1}, {13, 0}, {18, 0}}},
    {9, {{9, 0}, {17, 0}, {19, 0}}},  {10, {{7, 1}, {11, 1}, {21, 1}}}, {11, {{8, 0}, {15, 1}, {16, 1}}},
    {12, {{4, 0}, {9, 1}, {14, 0}}},  {13, {{12, 0}, {13, 1}, {20, 0}}}, {14, {{4, 1}, {8, 1}, {18, 1}}}};
inline constexpr const char* kResidues15 =
    "1,1;0,1;1,2;0,1;0,2;1,0;2,1;1,1;2,2;0,0;2,0;0,1;1,2;2,1;0,2;0,2;2,2;0,0;2,2;0,1;1,2;0,1";
inline constexpr const char* kTable1Left =
    "1,7;3,4;1,5;6,4;3,5;1,0;8,4;7,1;5,2;6,6;8,3;0,7;1,2;8,7;0,5;6,8;2,2;0,3;2,8;3,7;4,5;6,4";
inline constexpr const char* kTable1Right =
    "19,34;3,4;37,23;15,31;12,14;1,18;35,22;7,10;41,29;24,42;17,21;36,25;28,2;8,43;27,32;6,26;20,11;9,30;"
    "38,44;39,16;13,5;33,40";

// Example 5.2 and Table 2
inline constexpr const char* kT9 = "5,6;2,4;7,1;8,3";
inline const std::vector<int> kKeys9 = {1, 3, 4, 5, 7};
struct KeyedStarter {
  int key;
  const char* pairs;
};
inline const std::vector<KeyedStarter> kTable2 = {
    {1, "19,1;23,15;6,16;4,5;20,13;3,14;24,26;10,25;2,8;21,18;12,17;22,9;11,7"},
    {3, "21,12;5,6;17,9;15,25;20,4;14,7;8,10;1,16;22,19;23,2;3,26;24,11;13,18"},
    {4, "4,13;14,24;18,19;7,26;2,22;6,8;9,20;1,25;23,11;15,21;3,17;16,12;5,10"},
    {5, "23,14;5,24;10,20;8,9;2,22;7,18;1,3;19,16;6,12;25,13;21,26;17,4;15,11"},
    {7, "7,25;14,24;12,4;10,11;20,13;18,2;21,23;19,16;17,5;9,15;3,26;1,6;8,22"}};

// Table 4 (m = 7, T0 = kT7)
struct EpicStarter {
  int mu;
  int key;
  const char* pairs;
};
inline const std::vector<EpicStarter> kTable4 = {
    {2, 3, "10,3;9,17;4,19;15,16;11,13;5,14;6,1;12,8;20,2;18,7"},
    {2, 5, "19,12;16,17;13,7;3,11;18,6;14,9;8,10;5,1;15,4;20,2"},
    {2, 6, "20,6;2,10;14,15;18,12;11,13;1,17;16,4;5,8;9,19;7,3"},
    {3, 1, "15,8;16,17;12,6;10,18;11,13;9,4;19,7;5,1;20,2;14,3"},
    {3, 2, "16,2;9,3;20,7;18,19;4,13;10,5;6,8;12,1;14,17;15,11"},
    {3, 4, "4,11;2,3;15,9;20,7;18,13;5,14;8,10;19,1;16,12;17,6"},
    {4, 3, "3,17;9,10;15,2;11,5;4,20;6,8;19,7;12,1;18,14;13,16"},
    {4, 5, "5,19;9,17;10,4;6,7;18,13;15,3;14,16;12,8;20,2;1,11"},
    {4, 6, "6,13;9,3;11,12;7,15;18,20;16,4;1,17;19,8;14,10;2,5"},
    {5, 1, "1,8;9,3;17,18;12,20;4,6;5,14;16,11;19,15;7,10;13,2"},
    {5, 2, "16,2;9,10;11,19;13,7;18,6;20,15;3,5;12,1;8,4;14,17"},
    {5, 4, "4,18;16,17;20,14;1,9;11,13;15,3;12,7;19,8;10,6;2,5"}};
inline constexpr const char* kTable4LeftSolution = "1,0;0,2;1,1;0,1;2,1;2,2;0,1;0,2;2,2;0,1";

// Example 7.4, Tables 5 and 6 (Mod scenario, r = 3)
inline constexpr const char* kStarter74 = "13,12;19,17;7,4;10,14;15,20;3,9;1,8;5,18;11,2;16,6";
inline constexpr const char* kTable5Left = "1,1;5,6;2,3;4,5;3,5;2,4;6,1;6,2;4,0;0,3";
inline constexpr const char* kTable5Middle = "1,2;0,1;0,0;0,2;2,1;2,2;2,0;0,1;1,1;2,1";
inline constexpr const char* kTable5Right = "1,8;12,13;9,3;18,5;17,19;2,11;20,15;6,16;4,7;14,10";
inline constexpr const char* kTable6Middle = "2,0;0,0;2,1;0,1;0,2;0,1;1,1;2,1;2,2;1,2";
inline constexpr const char* kTable6Right = "8,15;12,6;2,10;18,19;3,5;9,4;13,1;20,16;11,14;7,17";

// Example 7.2 (order 11)
inline const std::vector<const char*> kR11 = {"1,2;7,9;3,6;4,8;5,10", "2,3;5,7;6,9;8,1;10,4",
                                              "9,10;2,4;5,8;3,7;1,6", "8,9;4,6;2,5;10,3;7,1"};

// Order 13 triple S, R, T
inline constexpr const char* kR13 = "3,4;6,8;9,12;10,1;2,7;5,11";
inline constexpr const char* kS13 = "3,4;5,7;9,12;10,1;6,11;2,8";
inline constexpr const char* kT13 = "9,10;5,7;1,4;12,3;6,11;2,8";
inline const std::vector<int> kKeysSRT = {1, 2, 3, 5, 6, 9};
inline const std::vector<int> kKeysEpic13 = {4, 10, 12};

// Example 7.3 and Table 3 (order 19): K(S_i, S_j, S_k) read off the crosses,
// with the printed |K| column.
inline const std::vector<const char*> kS19 = {
    "15,16;4,6;10,13;8,12;2,7;14,1;17,5;3,11;9,18", "2,3;16,18;14,17;5,9;6,11;7,13;8,15;4,12;1,10",
    "13,14;8,10;2,5;16,1;4,9;11,17;18,6;7,15;3,12", "11,12;4,6;17,1;9,13;3,8;10,16;14,2;18,7;15,5"};
struct Table3Row {
  int i, j, k;
  std::vector<int> keys;
  int printed_count;
};
inline const std::vector<Table3Row> kTable3 = {
    {1, 1, 2, {1, 2, 4, 5, 6, 10, 11, 12, 14, 16, 17}, 11},
    {1, 1, 3, {1, 4, 5, 7, 9, 10, 12, 13, 14, 16}, 10},
    {1, 1, 4, {}, 0},
    {2, 2, 1, {2, 3, 5, 7, 8, 9, 13, 14, 15, 17, 18}, 10},
    {2, 2, 3, {1, 3, 4, 5, 6, 7, 10, 11, 13, 14, 18}, 11},
    {2, 2, 4, {1, 2, 4, 6, 7, 8, 9, 11, 14, 17, 18}, 11},
    {3, 3, 1, {3, 5, 6, 7, 9, 10, 12, 14, 15, 18}, 10},
    {3, 3, 2, {1, 5, 6, 8, 9, 12, 13, 14, 15, 16, 18}, 11},
    {3, 3, 4, {3, 5, 6, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18}, 13},
    {4, 4, 1, {}, 0},
    {4, 4, 2, {1, 2, 5, 8, 10, 11, 12, 13, 15, 17, 18}, 11},
    {4, 4, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13, 14, 16}, 13},
    {1, 2, 3, {1, 4, 5, 10, 12, 14, 16}, 7},
    {1, 2, 4, {1, 2, 5, 6, 10, 11, 14, 16, 17}, 9},
    {1, 3, 4, {1, 5, 7, 9, 10, 14, 16}, 7},
    {2, 1, 3, {3, 5, 7, 13, 14, 18}, 6},
    {2, 1, 4, {}, 0},
    {2, 3, 4, {1, 4, 6, 7, 11, 14, 18}, 7},
    {3, 1, 2, {5, 6, 9, 12, 14, 15, 18}, 7},
    {3, 1, 4, {}, 0},
    {3, 2, 4, {5, 6, 9, 12, 13, 14, 15, 16, 18}, 9},
    {4, 1, 2, {2, 5, 8, 10, 11, 12, 13, 17, 18}, 9},
    {4, 1, 3, {2, 3, 4, 5, 8, 9, 10, 13, 14}, 9},
    {4, 2, 3, {1, 2, 5, 8, 10, 13}, 6}};

// Table 7: tables whose problems have no solution
inline constexpr const char* kTable7Left = "7,7;1,2;10,0;7,8;4,6;3,5;1,3;6,9;1,4;10,2;6,10;5,9;4,8;0,5;8,2;9,3";
inline constexpr const char* kTable7Right =
    "10,10;3,4;10,11;4,5;9,11;3,5;12,1;1,4;8,11;5,8;2,6;9,0;3,7;2,7;9,1;7,12;2,8;6,12;0,6";

// Table 8 (full scale): N_empty out of N
struct Table8Column {
  int m, n, empty;
};
inline const std::vector<Table8Column> kTable8 = {{5, 4000, 0}, {7, 4000, 0}, {9, 1000, 27}, {11, 3000, 2}};

// Generalized CRT worked example
inline constexpr long long kCrtU = 22, kCrtM = 45, kCrtV = 13, kCrtH = 27, kCrtX = 67;

}  // namespace golden
