#pragma once

#include <array>

namespace h4::reference {

// Reference incidence tables of the H4 configuration, embedded so that the
// computed structures can be checked without external files.
extern const std::array<std::array<int, 15>, 60> kPlaneTable;
extern const std::array<std::array<int, 5>, 72> kLineTable;
extern const std::array<std::array<int, 12>, 84> kCoveringTable;

/// First (5,5)-grid: L = l1, l25, l32, l37, l44 and M = l2, l26, l31, l38, l43.
inline constexpr std::array<int, 5> kGrid1L{1, 25, 32, 37, 44};
inline constexpr std::array<int, 5> kGrid1M{2, 26, 31, 38, 43};
/// Second (5,5)-grid, on the complementary half.
inline constexpr std::array<int, 5> kGrid2L{7, 51, 60, 65, 70};
inline constexpr std::array<int, 5> kGrid2M{8, 54, 58, 63, 71};

/// Points of the first grid.
inline constexpr std::array<int, 25> kGrid1Points{1,  5,  6,  7,  8,  13, 14, 15, 16, 29, 30, 31, 32,
                                                  33, 34, 35, 36, 37, 38, 41, 42, 51, 52, 57, 58};

/// Line external to each grid's quadric, carrying its five special points.
inline constexpr int kGrid1ExternalLine = 24;
inline constexpr int kGrid2ExternalLine = 17;
inline constexpr std::array<int, 5> kGrid1SpecialPoints{4, 39, 40, 47, 48};

/// Pairs of grid-1 points collinear with P4.
inline constexpr std::array<std::array<int, 2>, 10> kP4Pairs{{{5, 6},
                                                              {7, 8},
                                                              {13, 14},
                                                              {15, 16},
                                                              {29, 30},
                                                              {31, 32},
                                                              {33, 34},
                                                              {35, 36},
                                                              {37, 38},
                                                              {41, 42}}};

/// Half Z1 = grid-1 points plus l24; Z2 is its complement.
inline constexpr std::array<int, 30> kZ1{1,  4,  5,  6,  7,  8,  13, 14, 15, 16, 29, 30, 31, 32, 33,
                                         34, 35, 36, 37, 38, 39, 40, 41, 42, 47, 48, 51, 52, 57, 58};

/// Six pairwise skew lines covering Z1, resp. Z2.
inline constexpr std::array<int, 6> kZ1Cover{1, 24, 25, 32, 37, 44};
inline constexpr std::array<int, 6> kZ2Cover{7, 17, 51, 60, 65, 70};

}  // namespace h4::reference
