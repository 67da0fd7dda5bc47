#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "h4/h4config.hpp"

namespace h4 {

/// Line indices (1-based, ascending) whose point sets partition the universe.
struct CoverCertificate {
  std::vector<int> lines;
  friend bool operator==(const CoverCertificate&, const CoverCertificate&) = default;
  friend auto operator<=>(const CoverCertificate&, const CoverCertificate&) = default;
};

/// All exact covers of {1..universe} by the given point sets (universe <= 64),
/// by backtracking on the uncovered point with the fewest candidate lines.
/// Output sorted lexicographically.
std::vector<CoverCertificate> enumerate_coverings(std::span<const PointSet> lines, int universe);
std::vector<CoverCertificate> enumerate_coverings(const H4Configuration& cfg);

/// True iff the chosen lines are pairwise disjoint and cover {1..universe}.
bool verify_covering(std::span<const PointSet> lines, std::span<const int> chosen, int universe);
bool verify_covering(const H4Configuration& cfg, std::span<const int> chosen);

/// Comma-separated rows, one covering per line.
std::string format_covering_table(std::span<const CoverCertificate> covers);

/// Line indices of an (a,b)-grid candidate, each family ascending.
struct GridLines {
  std::vector<int> l;
  std::vector<int> m;
  friend bool operator==(const GridLines&, const GridLines&) = default;
  friend auto operator<=>(const GridLines&, const GridLines&) = default;
};

/// All grids formed by five-reach lines: a pairwise skew lines and b pairwise
/// skew lines such that every cross pair meets in a configuration point. For
/// a == b each unordered pair {L, M} is reported once, with L holding the
/// smaller first index. Sorted.
std::vector<GridLines> enumerate_grids(const H4Configuration& cfg, int a = 5, int b = 5);

}  // namespace h4
