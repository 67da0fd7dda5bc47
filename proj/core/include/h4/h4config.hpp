#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "h4/projective.hpp"

namespace h4 {

/// Sorted set of distinct 1-based point indices.
class PointSet {
 public:
  PointSet() = default;
  /// Sorts; throws std::invalid_argument on duplicates or indices < 1.
  explicit PointSet(std::vector<int> indices);
  template <std::size_t N>
  explicit PointSet(const std::array<int, N>& a) : PointSet(std::vector<int>(a.begin(), a.end())) {}

  const std::vector<int>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  bool contains(int i) const;
  bool intersects(const PointSet& o) const;

  friend PointSet set_union(const PointSet& a, const PointSet& b);
  friend PointSet set_difference(const PointSet& a, const PointSet& b);
  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet&, const PointSet&) = default;

  std::string to_string() const;

 private:
  std::vector<int> idx_;
};

/// A line together with the configuration points it carries.
struct ConfigLine {
  ProjLine line;
  PointSet points;
};

/// The 60 points of H4 in P^3 with their dual planes, five-reach lines and
/// incidence maps. Every index is 1-based, matching the standard numbering.
class H4Configuration {
 public:
  static constexpr int kPoints = 60;

  int point_count() const { return static_cast<int>(points_.size()); }
  int line_count() const { return static_cast<int>(lines_.size()); }

  const ProjPoint& point(int i) const { return points_.at(i - 1); }
  /// Coordinates exactly as listed (not canonicalized).
  const Vec4& printed_coordinates(int i) const { return printed_.at(i - 1); }
  const ProjPlane& plane(int i) const { return planes_.at(i - 1); }
  const ConfigLine& line(int i) const { return lines_.at(i - 1); }

  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<ProjPlane>& planes() const { return planes_; }
  const std::vector<ConfigLine>& lines() const { return lines_; }

  const PointSet& points_on_plane(int i) const { return plane_points_.at(i - 1); }
  const std::vector<int>& planes_through_point(int i) const { return point_planes_.at(i - 1); }
  const std::vector<int>& lines_through_point(int i) const { return point_lines_.at(i - 1); }
  const std::vector<int>& planes_containing_line(int i) const { return line_planes_.at(i - 1); }
  const std::vector<int>& lines_in_plane(int i) const { return plane_lines_.at(i - 1); }

  /// Index of the configuration point equal to p, or 0.
  int find_point(const ProjPoint& p) const;
  /// Index of the five-reach line with this point set, or 0.
  int find_line(const PointSet& s) const;

  std::vector<ProjPoint> subset(const PointSet& s) const;

 private:
  friend H4Configuration build_h4();

  std::vector<Vec4> printed_;
  std::vector<ProjPoint> points_;
  std::vector<ProjPlane> planes_;
  std::vector<ConfigLine> lines_;
  std::vector<PointSet> plane_points_;
  std::vector<std::vector<int>> point_planes_;
  std::vector<std::vector<int>> point_lines_;
  std::vector<std::vector<int>> line_planes_;
  std::vector<std::vector<int>> plane_lines_;
};

/// The 60 coordinate vectors as printed, phi^2 written as 1 + phi.
std::vector<Vec4> h4_coordinates();

/// Builds the configuration and checks all of its counting invariants;
/// throws ConsistencyError with a diagnostic if one fails.
H4Configuration build_h4();

/// Maximal collinear subsets with at least `min_size` members, each sorted,
/// listed in lexicographic order of their point sets. Indices are 1-based
/// positions in `points`.
std::vector<ConfigLine> collinear_subsets(std::span<const ProjPoint> points, std::size_t min_size = 3);

/// The lines with exactly five configuration points in lexicographic order,
/// which is the standard numbering. Throws ConsistencyError if any line
/// carries six or more points.
std::vector<ConfigLine> compute_five_reach_lines(std::span<const ProjPoint> points);

/// Row i: the points on plane V_i.
std::vector<PointSet> incidence_table_planes(const H4Configuration& cfg);

/// Largest number of collinear points (the point count when below 3).
int max_collinear(std::span<const ProjPoint> points);

struct SpecialPoint {
  int index = 0;
  std::vector<std::array<int, 2>> pairs;  ///< grid points collinear with `index`
};

/// Configuration points X outside the 25-point grid for which exactly ten
/// pairs {A, B} of grid points are collinear with X, covering 20 distinct
/// grid points.
std::vector<SpecialPoint> special_points_for_grid(const H4Configuration& cfg, const PointSet& grid);

/// "V_1: 2, 3, 4, ..." rows.
std::string format_plane_table(std::span<const PointSet> rows);
/// "l_1: 1, 29, 32, 33, 36" rows.
std::string format_line_table(std::span<const PointSet> rows);

}  // namespace h4
