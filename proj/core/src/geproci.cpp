#include "h4/geproci.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "h4/errors.hpp"
#include "h4/reference_data.hpp"

namespace h4 {

bool all_passed(std::span<const Check> checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

PlanePoint Projection::image(const ProjPoint& p) const {
  Vec4 q = change.apply(p.coords());
  return PlanePoint(Vec3{q[0], q[1], q[2]});
}

std::vector<PlanePoint> Projection::images(std::span<const ProjPoint> pts) const {
  std::vector<PlanePoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(image(p));
  return out;
}

namespace {

Poly term4(int x, int y, int z, int w, const FieldElement& c) { return Poly::monomial(4, {x, y, z, w}, c); }

const FieldElement kPhi = FieldElement::phi();
const FieldElement kPhiMinusOne = FieldElement(-1, 1);

PointSet all_points(const H4Configuration& cfg) {
  std::vector<int> all(cfg.point_count());
  std::iota(all.begin(), all.end(), 1);
  return PointSet(all);
}

std::string line_name(int i) { return "l_" + std::to_string(i); }
std::string point_name(int i) { return "P" + std::to_string(i); }

}  // namespace

HomForm quadric_q1() {
  Poly p = term4(1, 1, 0, 0, 2) + term4(0, 2, 0, 0, -1) + term4(0, 0, 2, 0, kPhiMinusOne) + term4(0, 0, 0, 2, -kPhi);
  return HomForm(p, 2);
}

HomForm quadric_q2() {
  Poly p = term4(2, 0, 0, 0, 1) + term4(1, 1, 0, 0, 2) + term4(0, 0, 2, 0, kPhi) + term4(0, 0, 0, 2, -kPhiMinusOne);
  return HomForm(p, 2);
}

ProjPoint VertexSampler::draw() {
  for (;;) {
    Vec4 v;
    for (auto& c : v) c = FieldElement(static_cast<long>(rng_() % 201) - 100);
    ++draws_;
    if (std::any_of(v.begin(), v.end(), [](const FieldElement& c) { return !c.is_zero(); })) return ProjPoint(v);
  }
}

namespace {

// Appends the outcome of one gate condition; the first failure becomes the reason.
void gate(GenericityChecklist& cl, const std::string& name, std::optional<std::string> failure) {
  cl.items.push_back({name, "", !failure.has_value(), failure.value_or("")});
  if (failure && cl.reason.empty()) cl.reason = *failure;
}

std::optional<std::string> off_points(std::span<const ProjPoint> points, const ProjPoint& v) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == v) return "coincides with " + point_name(static_cast<int>(i) + 1);
  }
  return std::nullopt;
}

std::optional<std::string> distinct_images(std::span<const ProjPoint> points, const Projection& proj) {
  auto imgs = proj.images(points);
  std::vector<std::size_t> order(imgs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return imgs[a] < imgs[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (imgs[order[k]] == imgs[order[k - 1]]) {
      auto [a, b] = std::minmax(order[k - 1], order[k]);
      return "images of " + point_name(static_cast<int>(a) + 1) + " and " + point_name(static_cast<int>(b) + 1) +
             " coincide";
    }
  }
  return std::nullopt;
}

Projection bare_projection(const ProjPoint& vertex) { return Projection{vertex, vertex_to_origin(vertex), {}, 0}; }

}  // namespace

Projection make_projection(const H4Configuration& cfg, const ProjPoint& vertex) {
  Projection proj = bare_projection(vertex);
  auto& cl = proj.checklist;
  auto on_point = off_points(cfg.points(), vertex);
  gate(cl, "off_points", on_point);

  std::optional<std::string> failure;
  for (int i = 1; i <= static_cast<int>(cfg.planes().size()) && !failure; ++i) {
    if (point_on_plane(vertex, cfg.plane(i))) failure = "on plane V_" + std::to_string(i);
  }
  gate(cl, "off_planes", failure);

  failure.reset();
  for (int i = 1; i <= cfg.line_count() && !failure; ++i) {
    if (point_on_line(vertex, cfg.line(i).line)) failure = "on line " + line_name(i);
  }
  gate(cl, "off_lines", failure);

  gate(cl, "off_q1", quadric_q1().evaluate(vertex).is_zero() ? std::optional<std::string>("on quadric Q1")
                                                             : std::nullopt);
  gate(cl, "off_q2", quadric_q2().evaluate(vertex).is_zero() ? std::optional<std::string>("on quadric Q2")
                                                             : std::nullopt);
  gate(cl, "distinct_images",
       on_point ? std::optional<std::string>("not evaluated: vertex is a configuration point")
                : distinct_images(cfg.points(), proj));
  return proj;
}

Projection make_projection(std::span<const ProjPoint> points, const ProjPoint& vertex) {
  Projection proj = bare_projection(vertex);
  auto& cl = proj.checklist;
  auto on_point = off_points(points, vertex);
  gate(cl, "off_points", on_point);
  gate(cl, "distinct_images",
       on_point ? std::optional<std::string>("not evaluated: vertex is an input point")
                : distinct_images(points, proj));
  return proj;
}

namespace {

Projection next_passing(VertexSampler& sampler, const std::function<Projection(const ProjPoint&)>& make) {
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    Projection p = make(sampler.draw());
    if (p.checklist.passed()) {
      p.draws = sampler.draws();
      return p;
    }
  }
  throw RejectionBudgetExhausted("no generic vertex after " + std::to_string(kRejectionBudget) + " draws");
}

}  // namespace

Projection next_generic_vertex(const H4Configuration& cfg, VertexSampler& sampler) {
  return next_passing(sampler, [&](const ProjPoint& v) { return make_projection(cfg, v); });
}

Projection next_generic_vertex(std::span<const ProjPoint> points, VertexSampler& sampler) {
  return next_passing(sampler, [&](const ProjPoint& v) { return make_projection(points, v); });
}

Projection sample_generic_vertex(const H4Configuration& cfg, std::uint64_t seed) {
  VertexSampler s(seed);
  return next_generic_vertex(cfg, s);
}

Projection sample_generic_vertex(std::span<const ProjPoint> points, std::uint64_t seed) {
  VertexSampler s(seed);
  return next_generic_vertex(points, s);
}

GridCertificate verify_grid(const H4Configuration& cfg, std::span<const int> l, std::span<const int> m) {
  for (auto fam : {l, m}) {
    for (int i : fam) {
      if (i < 1 || i > cfg.line_count()) throw NotAGrid("line index out of range: " + std::to_string(i));
    }
  }
  if (l.size() < 3 || m.size() < 3) throw NotAGrid("each family needs at least three lines");

  auto check_skew = [&](std::span<const int> fam, const char* label) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        if (fam[i] == fam[j]) throw NotAGrid(std::string(label) + "-lines repeat " + line_name(fam[i]));
        if (lines_meet(cfg.line(fam[i]).line, cfg.line(fam[j]).line)) {
          throw NotAGrid(std::string(label) + "-lines " + line_name(fam[i]) + " and " + line_name(fam[j]) +
                         " are not skew");
        }
      }
    }
  };
  check_skew(l, "L");
  check_skew(m, "M");

  std::vector<int> pts;
  for (int a : l) {
    for (int b : m) {
      if (a == b) throw NotAGrid("cross pair " + line_name(a) + ", " + line_name(b) + " is a single line");
      std::vector<int> common;
      const auto& pa = cfg.line(a).points;
      const auto& pb = cfg.line(b).points;
      std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(common));
      if (common.size() != 1) {
        throw NotAGrid(line_name(a) + " and " + line_name(b) + " do not meet in a configuration point");
      }
      pts.push_back(common.front());
    }
  }
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw NotAGrid("intersection points are not distinct");

  GridCertificate cert;
  cert.l.assign(l.begin(), l.end());
  cert.m.assign(m.begin(), m.end());
  cert.points = PointSet(pts);
  auto gp = cfg.subset(cert.points);
  auto quadrics = vanishing_space(gp, 2);
  if (quadrics.size() != 1) {
    throw NotAGrid("grid points lie on " + std::to_string(quadrics.size()) + " independent quadrics");
  }
  cert.quadric = quadrics.front();
  if (cert.quadric == quadric_q1().canonical()) {
    cert.quadric_name = "Q1";
  } else if (cert.quadric == quadric_q2().canonical()) {
    cert.quadric_name = "Q2";
  }
  return cert;
}

namespace {

// Product of the cones over the given lines with apex at the vertex, written
// in the projected coordinates.
HomForm cone_product(const H4Configuration& cfg, const Projection& proj, std::span<const int> lines) {
  HomForm prod(Poly::constant(3, 1), 0);
  for (int li : lines) {
    ProjPlane through = plane_through(cfg.line(li).line, proj.vertex);
    ProjPlane moved = change_of_coords(proj.change, through);
    if (!moved[3].is_zero()) throw ConsistencyError("plane through the vertex does not pass through the new origin");
    const auto& c = moved.coeffs();
    prod = multiply(prod, HomForm::linear(std::span<const FieldElement>(c.data(), 3)));
  }
  return prod;
}

std::vector<int> zero_indices(const HomForm& f, std::span<const PlanePoint> imgs) {
  std::vector<int> out;
  for (std::size_t i = 0; i < imgs.size(); ++i) {
    if (f.evaluate(imgs[i]).is_zero()) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

}  // namespace

QuinticCone build_quintic_cone(const H4Configuration& cfg, const Projection& proj, const GridCertificate& grid,
                               int anchor, int external_line) {
  if (external_line < 1 || external_line > cfg.line_count()) throw std::invalid_argument("external line out of range");
  if (!cfg.line(external_line).points.contains(anchor)) {
    throw std::invalid_argument(point_name(anchor) + " is not on " + line_name(external_line));
  }
  auto special = special_points_for_grid(cfg, grid.points);
  if (std::none_of(special.begin(), special.end(), [&](const SpecialPoint& s) { return s.index == anchor; })) {
    throw std::invalid_argument(point_name(anchor) + " is not a special point of the grid");
  }

  QuinticCone cone;
  cone.anchor = anchor;
  cone.external_line = external_line;
  cone.g = cone_product(cfg, proj, grid.l);
  cone.h = cone_product(cfg, proj, grid.m);

  auto imgs = proj.images(cfg.points());
  const PlanePoint& a = imgs.at(anchor - 1);
  FieldElement ga = cone.g.evaluate(a);
  FieldElement ha = cone.h.evaluate(a);
  if (ga.is_zero() && ha.is_zero()) throw PencilDegenerate("both grid cones vanish at the anchor image");
  cone.lambda = ha;
  cone.mu = -ga;
  Poly combo = cone.g.poly() * cone.lambda + cone.h.poly() * cone.mu;
  if (combo.is_zero()) throw PencilDegenerate("the grid cones are proportional");
  cone.form = HomForm(combo, cone.g.degree()).canonical();

  auto zg = zero_indices(cone.g, imgs);
  auto zh = zero_indices(cone.h, imgs);
  std::vector<int> base;
  std::set_intersection(zg.begin(), zg.end(), zh.begin(), zh.end(), std::back_inserter(base));
  if (!base.empty()) cone.base_locus = PointSet(base);
  auto zf = zero_indices(cone.form, imgs);
  if (!zf.empty()) cone.zeros = PointSet(zf);

  PointSet required = set_union(grid.points, cfg.line(external_line).points);
  auto missing = set_difference(required, cone.zeros);
  if (!missing.empty()) {
    throw ConsistencyError("quintic misses the images of points " + missing.to_string());
  }
  return cone;
}

std::vector<int> special_lines(const H4Configuration& cfg, const GridCertificate& grid) {
  std::vector<int> idx;
  for (const auto& sp : special_points_for_grid(cfg, grid.points)) idx.push_back(sp.index);
  PointSet special(idx);
  std::vector<int> out;
  for (int i = 1; i <= cfg.line_count(); ++i) {
    if (set_difference(cfg.line(i).points, special).empty()) out.push_back(i);
  }
  return out;
}

GridAnchor grid_anchor(const H4Configuration& cfg, const GridCertificate& grid, int external_line) {
  auto lines = special_lines(cfg, grid);
  if (std::find(lines.begin(), lines.end(), external_line) == lines.end()) {
    throw std::invalid_argument(line_name(external_line) + " does not consist of special points of the grid");
  }
  return {cfg.line(external_line).points.indices().front(), external_line};
}

std::string to_string(Half h) { return h == Half::z1 ? "z1" : "z2"; }

PointSet half_points(Half h) {
  PointSet z1(reference::kZ1);
  if (h == Half::z1) return z1;
  std::vector<int> all(H4Configuration::kPoints);
  std::iota(all.begin(), all.end(), 1);
  return set_difference(PointSet(all), z1);
}

std::vector<int> half_cover(Half h) {
  const auto& c = h == Half::z1 ? reference::kZ1Cover : reference::kZ2Cover;
  return {c.begin(), c.end()};
}

namespace {

void record(std::vector<Check>& checks, std::string name, std::string claim, bool passed, std::string detail = "") {
  checks.push_back({std::move(name), std::move(claim), passed, std::move(detail)});
}

std::string join(std::span<const int> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

bool vanishes_on(const HomForm& f, std::span<const PlanePoint> imgs, const PointSet& s, std::string& detail) {
  std::vector<int> bad;
  for (int i : s) {
    if (!f.evaluate(imgs[i - 1]).is_zero()) bad.push_back(i);
  }
  if (!bad.empty()) detail = "nonzero at " + join(bad);
  return bad.empty();
}

HomForm product_form(const GeprociCertificate& cert) { return multiply(cert.c5->form, cert.c5_prime->form); }

enum class Attempt { done, resample };

struct GridSpec {
  const char* name;
  std::span<const int> l;
  std::span<const int> m;
  const char* quadric;
  int external_line;
};

constexpr std::array<int, 6> kExpectedDims{0, 0, 0, 0, 0, 1};

Attempt geproci_attempt(const H4Configuration& cfg, GeprociCertificate& cert, bool may_resample) {
  auto& checks = cert.checks;
  checks.clear();
  const auto& proj = *cert.projection;
  record(checks, "genericity_gate", "the vertex is a general point", proj.checklist.passed(), proj.checklist.reason);

  auto imgs = proj.images(cfg.points());
  cert.dimension_table.clear();
  cert.c6.reset();
  for (int d = 1; d <= 6; ++d) {
    auto basis = vanishing_space(imgs, d);
    cert.dimension_table.push_back(static_cast<int>(basis.size()));
    if (d == 6 && basis.size() == 1) cert.c6 = basis.front();
  }
  bool dims_ok = std::equal(cert.dimension_table.begin(), cert.dimension_table.end(), kExpectedDims.begin());
  record(checks, "dimension_table", "no curve of degree at most 5 and a unique sextic pass through the images",
         dims_ok, join(cert.dimension_table));
  if (!cert.c6) {
    record(checks, "c6_present", "a sextic through the images exists", false);
    return Attempt::done;
  }

  std::string detail;
  bool c6_vanishes = vanishes_on(*cert.c6, imgs, all_points(cfg), detail);
  record(checks, "c6_vanishes", "the sextic vanishes at all 60 images", c6_vanishes, detail);

  cert.c6_smoothness = plane_curve_is_smooth(*cert.c6);
  if (cert.c6_smoothness->status == SmoothStatus::indeterminate && may_resample) return Attempt::resample;
  record(checks, "c6_smooth", "the sextic is smooth, hence irreducible", cert.c6_smoothness->smooth(),
         to_string(cert.c6_smoothness->status));

  const GridSpec specs[2] = {{"grid1", reference::kGrid1L, reference::kGrid1M, "Q1", reference::kGrid1ExternalLine},
                             {"grid2", reference::kGrid2L, reference::kGrid2M, "Q2", reference::kGrid2ExternalLine}};
  std::optional<GridCertificate>* grids[2] = {&cert.grid1, &cert.grid2};
  std::optional<QuinticCone>* cones[2] = {&cert.c5, &cert.c5_prime};
  const PointSet* halves[2] = {&cert.z1, &cert.z2};
  const char* cone_names[2] = {"c5", "c5_prime"};
  for (int k = 0; k < 2; ++k) {
    const auto& spec = specs[k];
    try {
      *grids[k] = verify_grid(cfg, spec.l, spec.m);
      bool on_q = (*grids[k])->quadric_name == spec.quadric;
      record(checks, spec.name, std::string("the grid is a (5,5)-grid on the quadric ") + spec.quadric, on_q,
             on_q ? "" : "quadric is " + (*grids[k])->quadric.to_string());
    } catch (const NotAGrid& e) {
      record(checks, spec.name, std::string("the grid is a (5,5)-grid on the quadric ") + spec.quadric, false,
             e.what());
      continue;
    }
    try {
      auto anchor = grid_anchor(cfg, **grids[k], spec.external_line);
      *cones[k] = build_quintic_cone(cfg, proj, **grids[k], anchor.anchor, anchor.external_line);
    } catch (const PencilDegenerate&) {
      if (may_resample) return Attempt::resample;
      record(checks, std::string(cone_names[k]) + "_pencil", "the pencil member through the anchor is unique", false,
             "degenerate pencil");
      continue;
    } catch (const Error& e) {
      record(checks, std::string(cone_names[k]) + "_pencil", "the pencil member through the anchor is unique", false,
             e.what());
      continue;
    }
    const auto& cone = **cones[k];
    record(checks, std::string(cone_names[k]) + "_base_locus",
           "the pencil has no base points among the images outside the grid", cone.base_locus == (*grids[k])->points,
           "base locus " + cone.base_locus.to_string());
    std::string vd;
    bool on_half = vanishes_on(cone.form, imgs, *halves[k], vd);
    record(checks, std::string(cone_names[k]) + "_vanishes_on_" + (k == 0 ? "z1" : "z2"),
           "the quintic vanishes on the projected half", on_half, vd);
  }
  if (!cert.c5 || !cert.c5_prime) return Attempt::done;

  HomForm prod = product_form(cert);
  std::string pd;
  bool prod_vanishes = vanishes_on(prod, imgs, all_points(cfg), pd);
  record(checks, "product_vanishes", "the product of the quintics vanishes at all 60 images", prod_vanishes, pd);

  cert.c6_divides_product = divides(*cert.c6, prod).divides;
  bool no_common = cert.c6_smoothness->smooth() && !cert.c6_divides_product;
  record(checks, "no_common_component", "the sextic and the product of the quintics share no component", no_common,
         cert.c6_divides_product ? "sextic divides the product" : "");

  cert.bezout_count = cert.c6->degree() * prod.degree();
  bool count_ok = cert.bezout_count == static_cast<int>(imgs.size()) && c6_vanishes && prod_vanishes;
  record(checks, "bezout_count", "6 * 10 = 60 images, so the two curves cut out exactly the projected set", count_ok,
         std::to_string(cert.c6->degree()) + " * " + std::to_string(prod.degree()) + " = " +
             std::to_string(cert.bezout_count));
  return Attempt::done;
}

}  // namespace

GeprociCertificate verify_geproci(const H4Configuration& cfg, std::uint64_t seed, int max_resamples) {
  GeprociCertificate cert;
  cert.seed = seed;
  cert.z1 = half_points(Half::z1);
  cert.z2 = half_points(Half::z2);
  VertexSampler sampler(seed);
  for (;;) {
    cert.projection = next_generic_vertex(cfg, sampler);
    if (geproci_attempt(cfg, cert, cert.resamples < max_resamples) == Attempt::done) break;
    ++cert.resamples;
  }
  return cert;
}

HalfGridCertificate verify_half_grid(const H4Configuration& cfg, std::uint64_t seed, Half half,
                                     std::optional<std::vector<int>> lines, bool check_gamma_smooth) {
  HalfGridCertificate cert;
  cert.half = half;
  cert.seed = seed;
  cert.subset = half_points(half);
  cert.lines = lines ? *lines : half_cover(half);
  auto& checks = cert.checks;

  bool valid = cert.lines.size() == 6 && std::all_of(cert.lines.begin(), cert.lines.end(), [&](int i) {
                 return i >= 1 && i <= cfg.line_count();
               });
  record(checks, "lines_valid", "six five-reach lines are given", valid, join(cert.lines));
  if (!valid) return cert;

  std::string skew_detail;
  for (std::size_t i = 0; i < cert.lines.size() && skew_detail.empty(); ++i) {
    for (std::size_t j = i + 1; j < cert.lines.size() && skew_detail.empty(); ++j) {
      int a = cert.lines[i];
      int b = cert.lines[j];
      if (a == b || lines_meet(cfg.line(a).line, cfg.line(b).line)) {
        skew_detail = line_name(a) + " and " + line_name(b) + " meet";
      }
    }
  }
  record(checks, "lines_skew", "the covering lines are pairwise skew", skew_detail.empty(), skew_detail);

  PointSet covered;
  for (int li : cert.lines) covered = set_union(covered, cfg.line(li).points);
  bool covers = covered == cert.subset;
  record(checks, "lines_cover", "the union of the lines carries exactly the half", covers,
         covers ? "" : "lines carry " + covered.to_string());
  if (!skew_detail.empty() || !covers) return cert;

  cert.projection = sample_generic_vertex(cfg, seed);
  const auto& proj = *cert.projection;
  auto imgs = proj.images(cfg.points());

  HomForm prod(Poly::constant(3, 1), 0);
  for (int li : cert.lines) {
    const auto& pts = cfg.line(li).points.indices();
    prod = multiply(prod, line_form(imgs[pts[0] - 1], imgs[pts[1] - 1]));
  }
  cert.line_product = prod.canonical();
  std::string pd;
  bool prod_ok = vanishes_on(*cert.line_product, imgs, cert.subset, pd);
  record(checks, "line_product_vanishes", "the six projected lines pass through the projected half", prod_ok, pd);

  auto l = half == Half::z1 ? reference::kGrid1L : reference::kGrid2L;
  auto m = half == Half::z1 ? reference::kGrid1M : reference::kGrid2M;
  try {
    auto grid = verify_grid(cfg, l, m);
    auto anchor =
        grid_anchor(cfg, grid, half == Half::z1 ? reference::kGrid1ExternalLine : reference::kGrid2ExternalLine);
    cert.gamma = build_quintic_cone(cfg, proj, grid, anchor.anchor, anchor.external_line);
  } catch (const Error& e) {
    record(checks, "gamma", "a quintic through the projected half exists", false, e.what());
    return cert;
  } catch (const std::invalid_argument& e) {
    record(checks, "gamma", "a quintic through the projected half exists", false, e.what());
    return cert;
  }
  std::string gd;
  bool gamma_ok = vanishes_on(cert.gamma->form, imgs, cert.subset, gd);
  record(checks, "gamma_vanishes", "the quintic vanishes on the projected half", gamma_ok, gd);

  std::vector<int> dead;
  for (int li : cert.lines) {
    const auto& pts = cfg.line(li).points.indices();
    Poly r = restrict_to_line(cert.gamma->form, imgs[pts[0] - 1], imgs[pts[1] - 1]);
    cert.restriction_degrees.push_back(r.total_degree());
    if (r.is_zero()) dead.push_back(li);
  }
  record(checks, "no_common_component", "the quintic contains none of the projected lines", dead.empty(),
         dead.empty() ? "" : "contains lines " + join(dead));

  int count = cert.gamma->form.degree() * cert.line_product->degree();
  record(checks, "ci_count", "5 * 6 = 30 images, so the quintic and the lines cut out exactly the projected half",
         count == static_cast<int>(cert.subset.size()) && gamma_ok && prod_ok,
         std::to_string(cert.gamma->form.degree()) + " * " + std::to_string(cert.line_product->degree()) + " = " +
             std::to_string(count));

  if (check_gamma_smooth) cert.gamma_smooth = plane_curve_is_smooth(cert.gamma->form).status;
  return cert;
}

RefutationReport verify_not_half_grid(std::span<const ProjPoint> points, std::uint64_t seed) {
  RefutationReport rep;
  rep.seed = seed;
  rep.point_count = static_cast<int>(points.size());
  rep.max_collinear = max_collinear(points);
  rep.projection = sample_generic_vertex(points, seed);
  auto imgs = rep.projection->images(points);
  for (int d = 1;; ++d) {
    int dim = static_cast<int>(vanishing_space(imgs, d).size());
    rep.dimension_table.push_back(dim);
    if (dim > 0) {
      rep.min_degree = d;
      break;
    }
  }

  const int n = rep.point_count;
  std::ostringstream needed;
  std::optional<HalfGridType> open;
  for (int a = rep.min_degree; a <= n; ++a) {
    if (n % a != 0) continue;
    int b = n / a;
    if (b < rep.min_degree) continue;
    HalfGridType t{a, b, b > rep.max_collinear};
    if (!t.excluded && !open) open = t;
    rep.types.push_back(t);
  }
  rep.refuted = !open.has_value();

  std::ostringstream os;
  os << "no curve of degree below " << rep.min_degree << " passes through the " << n
     << " images; lines carry at most " << rep.max_collinear << " points; ";
  if (rep.refuted) {
    os << "every admissible type needs more points per line, so the set is not a half-grid";
  } else {
    os << "type (" << open->a << "," << open->b << ") needs " << open->a << " skew lines with " << open->b
       << " points each, which is not excluded";
  }
  rep.summary = os.str();
  return rep;
}

std::vector<std::string> recheck(const H4Configuration& cfg, const GeprociCertificate& cert) {
  std::vector<std::string> fails;
  if (!cert.projection) return {"missing projection"};
  Projection proj = make_projection(cfg, cert.projection->vertex);
  if (!proj.checklist.passed()) fails.push_back("vertex fails the gate: " + proj.checklist.reason);
  if (!(proj.change == cert.projection->change)) fails.push_back("coordinate change differs");
  auto imgs = proj.images(cfg.points());
  PointSet all = all_points(cfg);
  std::string d;
  if (!cert.c6 || !vanishes_on(*cert.c6, imgs, all, d)) fails.push_back("sextic: " + d);
  for (int deg = 1; deg <= static_cast<int>(cert.dimension_table.size()); ++deg) {
    if (static_cast<int>(vanishing_space(imgs, deg).size()) != cert.dimension_table[deg - 1]) {
      fails.push_back("dimension table differs at degree " + std::to_string(deg));
    }
  }
  if (!cert.c5 || !cert.c5_prime) {
    fails.push_back("missing quintic");
    return fails;
  }
  for (const auto* cone : {&*cert.c5, &*cert.c5_prime}) {
    Poly combo = cone->g.poly() * cone->lambda + cone->h.poly() * cone->mu;
    if (!(HomForm(combo, 5).canonical() == cone->form)) fails.push_back("quintic is not the stated pencil member");
  }
  if (!vanishes_on(cert.c5->form, imgs, cert.z1, d)) fails.push_back("quintic on z1: " + d);
  if (!vanishes_on(cert.c5_prime->form, imgs, cert.z2, d)) fails.push_back("quintic on z2: " + d);
  HomForm prod = product_form(cert);
  if (!vanishes_on(prod, imgs, all, d)) fails.push_back("product: " + d);
  if (cert.c6 && divides(*cert.c6, prod).divides != cert.c6_divides_product) fails.push_back("divisibility differs");
  return fails;
}

std::vector<std::string> recheck(const H4Configuration& cfg, const HalfGridCertificate& cert) {
  std::vector<std::string> fails;
  if (!cert.projection || !cert.gamma || !cert.line_product) return {"incomplete certificate"};
  Projection proj = make_projection(cfg, cert.projection->vertex);
  if (!proj.checklist.passed()) fails.push_back("vertex fails the gate: " + proj.checklist.reason);
  auto imgs = proj.images(cfg.points());
  std::string d;
  if (!vanishes_on(cert.gamma->form, imgs, cert.subset, d)) fails.push_back("quintic: " + d);
  if (!vanishes_on(*cert.line_product, imgs, cert.subset, d)) fails.push_back("line product: " + d);
  HomForm prod(Poly::constant(3, 1), 0);
  for (int li : cert.lines) {
    const auto& pts = cfg.line(li).points.indices();
    prod = multiply(prod, line_form(imgs[pts[0] - 1], imgs[pts[1] - 1]));
    if (restrict_to_line(cert.gamma->form, imgs[pts[0] - 1], imgs[pts[1] - 1]).is_zero()) {
      fails.push_back("quintic contains " + line_name(li));
    }
  }
  if (!(prod.canonical() == *cert.line_product)) fails.push_back("line product differs");
  return fails;
}

}  // namespace h4
