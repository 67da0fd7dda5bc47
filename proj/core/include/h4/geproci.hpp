#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "h4/h4config.hpp"
#include "h4/homform.hpp"
#include "h4/smoothness.hpp"

namespace h4 {

/// A named pass/fail entry in a certificate ledger.
struct Check {
  std::string name;
  std::string claim;
  bool passed = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

bool all_passed(std::span<const Check> checks);

/// Outcome of the genericity gate for one candidate vertex.
struct GenericityChecklist {
  std::vector<Check> items;
  std::string reason;  ///< first failed condition, empty on success
  bool passed() const { return reason.empty(); }
  friend bool operator==(const GenericityChecklist&, const GenericityChecklist&) = default;
};

/// Projection from a vertex P: the coordinate change sends P to [0:0:0:1]
/// and the image of a point is its first three new coordinates.
struct Projection {
  ProjPoint vertex;
  ProjMatrix change;
  GenericityChecklist checklist;
  int draws = 0;  ///< candidates drawn from the generator, including this one

  PlanePoint image(const ProjPoint& p) const;
  std::vector<PlanePoint> images(std::span<const ProjPoint> pts) const;
};

/// The two quadrics carrying the (5,5)-grids, in x, y, z, w.
HomForm quadric_q1();  ///< 2xy - y^2 + (phi-1) z^2 - phi w^2
HomForm quadric_q2();  ///< x^2 + 2xy + phi z^2 - (phi-1) w^2

/// Deterministic source of candidate vertices with integer coordinates in
/// [-100, 100].
class VertexSampler {
 public:
  explicit VertexSampler(std::uint64_t seed) : rng_(seed) {}
  ProjPoint draw();
  int draws() const { return draws_; }

 private:
  std::mt19937_64 rng_;
  int draws_ = 0;
};

inline constexpr int kRejectionBudget = 1000;

/// Full gate for the configuration: the vertex must avoid every point, every
/// plane V_i, every five-reach line, both quadrics, and no two images may
/// coincide.
Projection make_projection(const H4Configuration& cfg, const ProjPoint& vertex);
/// Gate for an arbitrary point set: vertex off the set, images distinct.
Projection make_projection(std::span<const ProjPoint> points, const ProjPoint& vertex);

/// Next passing vertex from the sampler. Throws RejectionBudgetExhausted
/// after kRejectionBudget consecutive rejections.
Projection next_generic_vertex(const H4Configuration& cfg, VertexSampler& sampler);
Projection next_generic_vertex(std::span<const ProjPoint> points, VertexSampler& sampler);

Projection sample_generic_vertex(const H4Configuration& cfg, std::uint64_t seed);
Projection sample_generic_vertex(std::span<const ProjPoint> points, std::uint64_t seed);

struct GridCertificate {
  std::vector<int> l;
  std::vector<int> m;
  PointSet points;  ///< the a*b intersection points
  HomForm quadric{4, 2};
  std::string quadric_name;  ///< "Q1", "Q2" or empty
  friend bool operator==(const GridCertificate&, const GridCertificate&) = default;
};

/// Throws NotAGrid naming the first failed condition.
GridCertificate verify_grid(const H4Configuration& cfg, std::span<const int> l, std::span<const int> m);

/// Member of the pencil spanned by the two grid cones, pinned at an anchor.
struct QuinticCone {
  int anchor = 0;
  int external_line = 0;
  HomForm g{3, 5};  ///< product of the projected L-lines
  HomForm h{3, 5};  ///< product of the projected M-lines
  FieldElement lambda;
  FieldElement mu;
  HomForm form{3, 5};   ///< lambda*g + mu*h, canonical
  PointSet base_locus;  ///< configuration points whose images kill both g and h
  PointSet zeros;       ///< configuration points whose images kill `form`
  friend bool operator==(const QuinticCone&, const QuinticCone&) = default;
};

/// Builds the quintic through the grid, the anchor and the rest of the
/// external line. Throws PencilDegenerate when g and h both vanish at the
/// anchor image, ConsistencyError when a required zero is missing, and
/// std::invalid_argument when the anchor is not a special point on the line.
QuinticCone build_quintic_cone(const H4Configuration& cfg, const Projection& proj, const GridCertificate& grid,
                               int anchor, int external_line);

/// Five-reach lines made up entirely of special points of the grid.
std::vector<int> special_lines(const H4Configuration& cfg, const GridCertificate& grid);

struct GridAnchor {
  int anchor = 0;
  int external_line = 0;
};
/// Least special point on `external_line`. Throws std::invalid_argument
/// unless the line is one of special_lines(cfg, grid).
GridAnchor grid_anchor(const H4Configuration& cfg, const GridCertificate& grid, int external_line);

struct GeprociCertificate {
  std::uint64_t seed = 0;
  std::optional<Projection> projection;
  int resamples = 0;  ///< vertices discarded after an indeterminate smoothness run
  std::vector<int> dimension_table;  ///< d = 1..6
  std::optional<HomForm> c6;
  std::optional<SmoothnessResult> c6_smoothness;
  std::optional<GridCertificate> grid1;
  std::optional<GridCertificate> grid2;
  std::optional<QuinticCone> c5;
  std::optional<QuinticCone> c5_prime;
  PointSet z1;
  PointSet z2;
  bool c6_divides_product = true;
  int bezout_count = 0;
  std::vector<Check> checks;

  bool passed() const { return !checks.empty() && all_passed(checks); }
};

/// Whole pipeline for one seed. Failures are recorded in `checks`; the
/// function only throws on internal inconsistencies.
GeprociCertificate verify_geproci(const H4Configuration& cfg, std::uint64_t seed, int max_resamples = 4);

enum class Half { z1, z2 };
std::string to_string(Half h);
/// The reference half and its six covering lines.
PointSet half_points(Half h);
std::vector<int> half_cover(Half h);

struct HalfGridCertificate {
  Half half = Half::z1;
  std::uint64_t seed = 0;
  PointSet subset;
  std::vector<int> lines;
  std::optional<Projection> projection;
  std::optional<HomForm> line_product;  ///< degree 6
  std::optional<QuinticCone> gamma;
  std::vector<int> restriction_degrees;  ///< degree of gamma on each line, -1 if identically zero
  std::optional<SmoothStatus> gamma_smooth;
  std::vector<Check> checks;

  bool passed() const { return !checks.empty() && all_passed(checks); }
};

/// Checks that the half is covered by six skew lines whose projected union
/// and the quintic cone cut it out as a (5,6) complete intersection.
/// `lines` overrides the reference cover.
HalfGridCertificate verify_half_grid(const H4Configuration& cfg, std::uint64_t seed, Half half,
                                     std::optional<std::vector<int>> lines = std::nullopt,
                                     bool check_gamma_smooth = false);

struct HalfGridType {
  int a = 0;  ///< number of skew lines
  int b = 0;  ///< points required on each of them
  bool excluded = false;
  friend bool operator==(const HalfGridType&, const HalfGridType&) = default;
};

struct RefutationReport {
  std::uint64_t seed = 0;
  int point_count = 0;
  int max_collinear = 0;
  std::optional<Projection> projection;
  std::vector<int> dimension_table;  ///< d = 1..min_degree
  int min_degree = 0;                ///< least degree of a curve through the images
  std::vector<HalfGridType> types;
  bool refuted = false;
  std::string summary;
};

/// Shows that the set is not a half-grid: every complete-intersection type
/// allowed by the interpolation degrees needs lines carrying more points than
/// any line does. `refuted` is false when some type cannot be excluded.
RefutationReport verify_not_half_grid(std::span<const ProjPoint> points, std::uint64_t seed);

/// Recomputes the images from the stored vertex and re-evaluates every form
/// in the certificate. Returns the list of failures (empty when consistent).
std::vector<std::string> recheck(const H4Configuration& cfg, const GeprociCertificate& cert);
std::vector<std::string> recheck(const H4Configuration& cfg, const HalfGridCertificate& cert);

}  // namespace h4
