// The 21 six-vertex dc-obstruction rows: minimal non-face circuits, the
// facets of the independence complex, and the homology sphere of the pure
// top skeleton, in compact notation.
#pragma once

#include <array>
#include <string>

namespace table_data {

struct Row {
  const char* circuits;
  const char* facets;
  int sphere;  // dimension of the homology sphere of the top skeleton
};

inline constexpr std::array<Row, 21> kRows = {{
    {"12, 13, 24, 35, 46, 56", "145, 16, 236, 25, 34", 0},
    {"12, 13, 14, 235, 236, 245, 246, 256, 345, 346, 356, 456",
     "156, 234, 25, 26, 35, 36, 45, 46", 0},
    {"12, 13, 14, 235, 236, 245, 256, 345, 356, 46",
     "156, 234, 25, 26, 35, 36, 45", 0},
    {"12, 13, 14, 235, 236, 256, 356, 45, 46", "156, 234, 25, 26, 35, 36", 0},
    {"12, 13, 14, 235, 246, 256, 36, 45", "156, 234, 25, 26, 35, 46", 0},
    {"12, 13, 145, 146, 235, 236, 245, 246, 256, 345, 346, 356, 456",
     "14, 156, 234, 25, 26, 35, 36, 45, 46", 0},
    {"12, 13, 145, 146, 235, 245, 246, 256, 345, 36, 456",
     "14, 156, 234, 25, 26, 35, 45, 46", 0},
    {"12, 13, 145, 146, 245, 26, 346, 35, 456", "14, 156, 234, 25, 36, 45, 46",
     0},
    {"12, 13, 145, 234, 236, 245, 246, 345, 346, 56",
     "146, 15, 235, 24, 26, 34, 36, 45", 0},
    {"12, 13, 145, 236, 24, 345, 346, 56", "146, 15, 235, 26, 34, 36, 45", 0},
    {"12, 13, 145, 24, 345, 36, 56", "146, 15, 235, 26, 34, 45", 0},
    {"12, 13, 234, 235, 245, 345, 46, 56", "145, 16, 236, 24, 25, 34, 35", 0},
    {"12, 134, 135, 136, 145, 146, 235, 236, 245, 246, 256, 345, 346, 356, "
     "456",
     "13, 14, 156, 234, 25, 26, 35, 36, 45, 46", 0},
    {"12, 134, 135, 136, 145, 234, 236, 245, 246, 345, 346, 56",
     "13, 146, 15, 235, 24, 26, 34, 36, 45", 0},
    {"12, 134, 135, 146, 235, 246, 256, 36, 45",
     "13, 14, 156, 234, 25, 26, 35, 46", 0},
    {"123, 124, 125, 126, 134, 135, 136, 145, 146, 235, 236, 245, 246, 256, "
     "345, 346, 356, 456",
     "12, 13, 14, 156, 234, 25, 26, 35, 36, 45, 46", 0},
    {"12, 134, 135, 146, 235, 246, 256, 345, 346, 356, 456",
     "136, 145, 156, 234, 236, 245, 35, 46", 1},
    {"12, 134, 135, 234, 246, 345, 346, 56", "136, 145, 146, 235, 236, 245, 34",
     1},
    {"12, 134, 256, 35, 46", "136, 145, 156, 234, 236, 245", 1},
    {"123, 124, 125, 126, 134, 135, 146, 235, 246, 256, 345, 346, 356, 456",
     "12, 136, 145, 156, 234, 236, 245, 35, 46", 1},
    {"1234, 1235, 1246, 1356, 2456, 3456",
     "1236, 1245, 1256, 1345, 1346, 1456, 2345, 2346, 2356", 2},
}};

}  // namespace table_data
