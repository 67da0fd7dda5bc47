#include "h4/serialize.hpp"

#include "h4/errors.hpp"

namespace h4 {

namespace {

const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return at(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

const Json& array_of(const Json& j, std::size_t n) {
  if (!j.is_array() || (n != 0 && j.size() != n)) {
    throw ParseError("expected an array" + (n ? " of length " + std::to_string(n) : std::string()));
  }
  return j;
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected a rational number");
}

template <std::size_t N>
std::array<FieldElement, N> parse_vec(const Json& j) {
  array_of(j, N);
  std::array<FieldElement, N> v;
  for (std::size_t i = 0; i < N; ++i) v[i] = parse_field(j[i]);
  return v;
}

template <typename Range>
Json vec_json(const Range& r) {
  Json a = Json::array();
  for (const auto& x : r) a.push_back(to_json(x));
  return a;
}

std::vector<int> int_list(const Json& j) {
  try {
    return array_of(j, 0).get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

template <typename T>
std::optional<T> opt(const Json& j, const char* key, T (*parse)(const Json&)) {
  const Json& v = at(j, key);
  if (v.is_null()) return std::nullopt;
  return parse(v);
}

template <typename T>
Json opt_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

std::vector<Check> parse_checks(const Json& j) {
  std::vector<Check> out;
  for (const auto& c : array_of(j, 0)) out.push_back(parse_check(c));
  return out;
}

SmoothStatus parse_status(const std::string& s) {
  if (s == "smooth") return SmoothStatus::smooth;
  if (s == "singular") return SmoothStatus::singular;
  if (s == "indeterminate") return SmoothStatus::indeterminate;
  throw ParseError("unknown smoothness status \"" + s + "\"");
}

Half parse_half(const std::string& s) {
  if (s == "z1") return Half::z1;
  if (s == "z2") return Half::z2;
  throw ParseError("unknown half \"" + s + "\"");
}

}  // namespace

ConfigDocument make_config_document(const H4Configuration& cfg) {
  ConfigDocument d{cfg.points(), cfg.planes(), incidence_table_planes(cfg), cfg.lines()};
  return d;
}

Json to_json(const FieldElement& x) { return Json{{"a", x.a().to_string()}, {"b", x.b().to_string()}}; }

FieldElement parse_field(const Json& j) { return {parse_rational(at(j, "a")), parse_rational(at(j, "b"))}; }

Json to_json(const ProjPoint& p) { return vec_json(p.coords()); }
Json to_json(const ProjPlane& v) { return vec_json(v.coeffs()); }
Json to_json(const PlanePoint& p) { return vec_json(p.coords()); }
ProjPoint parse_point(const Json& j) { return ProjPoint(parse_vec<4>(j)); }
ProjPlane parse_plane(const Json& j) { return ProjPlane(parse_vec<4>(j)); }
PlanePoint parse_plane_point(const Json& j) { return PlanePoint(parse_vec<3>(j)); }

Json to_json(const ProjMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m.rows()) a.push_back(vec_json(row));
  return a;
}

ProjMatrix parse_matrix(const Json& j) {
  array_of(j, 4);
  ProjMatrix::Rows rows;
  for (std::size_t i = 0; i < 4; ++i) rows[i] = parse_vec<4>(j[i]);
  return ProjMatrix(rows);
}

Json to_json(const PointSet& s) { return Json(s.indices()); }

PointSet parse_point_set(const Json& j) {
  try {
    return PointSet(int_list(j));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const ConfigLine& l) {
  return Json{{"points", to_json(l.points)},
              {"pluecker", vec_json(l.line.pluecker())},
              {"span", Json::array({to_json(l.line.first()), to_json(l.line.second())})}};
}

ConfigLine parse_config_line(const Json& j) {
  const Json& span = array_of(at(j, "span"), 2);
  ConfigLine l{ProjLine(parse_point(span[0]), parse_point(span[1])), parse_point_set(at(j, "points"))};
  if (!(l.line.pluecker() == parse_vec<6>(at(j, "pluecker")))) {
    throw ParseError("Pluecker coordinates do not match the spanning points");
  }
  return l;
}

Json to_json(const HomForm& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.poly().terms()) {
    terms.push_back(Json{{"exponents", std::vector<int>(e.begin(), e.begin() + f.nvars())}, {"coeff", to_json(c)}});
  }
  return Json{{"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", terms}};
}

HomForm parse_form(const Json& j) {
  int nvars = get<int>(j, "nvars");
  int degree = get<int>(j, "degree");
  if (nvars < 1 || nvars > kMaxVars || degree < 0) throw ParseError("bad form shape");
  Poly p(nvars);
  for (const auto& t : array_of(at(j, "terms"), 0)) {
    auto ex = int_list(at(t, "exponents"));
    if (static_cast<int>(ex.size()) != nvars) throw ParseError("exponent vector has the wrong length");
    Exponents e{};
    std::copy(ex.begin(), ex.end(), e.begin());
    p.add_term(e, parse_field(at(t, "coeff")));
  }
  try {
    return HomForm(p, degree);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Check& c) {
  return Json{{"name", c.name}, {"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}};
}

Check parse_check(const Json& j) {
  return {get<std::string>(j, "name"), get<std::string>(j, "claim"), get<bool>(j, "passed"),
          get<std::string>(j, "detail")};
}

Json to_json(const GenericityChecklist& c) {
  return Json{{"passed", c.passed()}, {"reason", c.reason}, {"items", vec_json(c.items)}};
}

GenericityChecklist parse_checklist(const Json& j) {
  GenericityChecklist c{parse_checks(at(j, "items")), get<std::string>(j, "reason")};
  if (c.passed() != get<bool>(j, "passed")) throw ParseError("checklist flag disagrees with its reason");
  return c;
}

Json to_json(const Projection& p) {
  return Json{{"vertex", to_json(p.vertex)},
              {"change", to_json(p.change)},
              {"draws", p.draws},
              {"checklist", to_json(p.checklist)}};
}

Projection parse_projection(const Json& j) {
  return Projection{parse_point(at(j, "vertex")), parse_matrix(at(j, "change")), parse_checklist(at(j, "checklist")),
                    get<int>(j, "draws")};
}

Json to_json(const SmoothnessResult& r) {
  Json trail = Json::array();
  for (const auto& t : r.trail) {
    trail.push_back(Json{{"attempt", t.attempt},
                         {"chart_var", t.chart_var},
                         {"eliminated_var", t.eliminated_var},
                         {"resultant_degrees", t.resultant_degrees},
                         {"gcd_degree", t.gcd_degree},
                         {"outcome", t.outcome}});
  }
  return Json{{"status", to_string(r.status)},
              {"squarefree", r.squarefree},
              {"attempts", r.attempts},
              {"coordinate_change", r.coordinate_change},
              {"singular_point", opt_json(r.singular_point)},
              {"note", r.note},
              {"trail", trail}};
}

SmoothnessResult parse_smoothness(const Json& j) {
  SmoothnessResult r;
  r.status = parse_status(get<std::string>(j, "status"));
  r.squarefree = get<bool>(j, "squarefree");
  r.attempts = get<int>(j, "attempts");
  r.coordinate_change = get<std::vector<std::vector<long>>>(j, "coordinate_change");
  r.singular_point = opt(j, "singular_point", parse_plane_point);
  r.note = get<std::string>(j, "note");
  for (const auto& t : array_of(at(j, "trail"), 0)) {
    r.trail.push_back(ChartTrail{get<int>(t, "attempt"), get<int>(t, "chart_var"), get<int>(t, "eliminated_var"),
                                 get<std::vector<int>>(t, "resultant_degrees"), get<int>(t, "gcd_degree"),
                                 get<std::string>(t, "outcome")});
  }
  return r;
}

Json to_json(const GridCertificate& g) {
  return Json{{"l", g.l},
              {"m", g.m},
              {"points", to_json(g.points)},
              {"quadric", to_json(g.quadric)},
              {"quadric_name", g.quadric_name}};
}

GridCertificate parse_grid(const Json& j) {
  return GridCertificate{int_list(at(j, "l")), int_list(at(j, "m")), parse_point_set(at(j, "points")),
                         parse_form(at(j, "quadric")), get<std::string>(j, "quadric_name")};
}

Json to_json(const QuinticCone& q) {
  return Json{{"anchor", q.anchor},
              {"external_line", q.external_line},
              {"lambda", to_json(q.lambda)},
              {"mu", to_json(q.mu)},
              {"g", to_json(q.g)},
              {"h", to_json(q.h)},
              {"form", to_json(q.form)},
              {"base_locus", to_json(q.base_locus)},
              {"zeros", to_json(q.zeros)}};
}

QuinticCone parse_quintic(const Json& j) {
  QuinticCone q;
  q.anchor = get<int>(j, "anchor");
  q.external_line = get<int>(j, "external_line");
  q.lambda = parse_field(at(j, "lambda"));
  q.mu = parse_field(at(j, "mu"));
  q.g = parse_form(at(j, "g"));
  q.h = parse_form(at(j, "h"));
  q.form = parse_form(at(j, "form"));
  q.base_locus = parse_point_set(at(j, "base_locus"));
  q.zeros = parse_point_set(at(j, "zeros"));
  return q;
}

Json to_json(const GeprociCertificate& c) {
  return Json{{"kind", "geproci"},
              {"seed", c.seed},
              {"passed", c.passed()},
              {"resamples", c.resamples},
              {"projection", opt_json(c.projection)},
              {"dimension_table", c.dimension_table},
              {"c6", opt_json(c.c6)},
              {"c6_smoothness", opt_json(c.c6_smoothness)},
              {"grid1", opt_json(c.grid1)},
              {"grid2", opt_json(c.grid2)},
              {"c5", opt_json(c.c5)},
              {"c5_prime", opt_json(c.c5_prime)},
              {"z1", to_json(c.z1)},
              {"z2", to_json(c.z2)},
              {"c6_divides_product", c.c6_divides_product},
              {"bezout_count", c.bezout_count},
              {"checks", vec_json(c.checks)}};
}

GeprociCertificate parse_geproci_certificate(const Json& j) {
  if (get<std::string>(j, "kind") != "geproci") throw ParseError("not a geproci certificate");
  GeprociCertificate c;
  c.seed = get<std::uint64_t>(j, "seed");
  c.resamples = get<int>(j, "resamples");
  c.projection = opt(j, "projection", parse_projection);
  c.dimension_table = int_list(at(j, "dimension_table"));
  c.c6 = opt(j, "c6", parse_form);
  c.c6_smoothness = opt(j, "c6_smoothness", parse_smoothness);
  c.grid1 = opt(j, "grid1", parse_grid);
  c.grid2 = opt(j, "grid2", parse_grid);
  c.c5 = opt(j, "c5", parse_quintic);
  c.c5_prime = opt(j, "c5_prime", parse_quintic);
  c.z1 = parse_point_set(at(j, "z1"));
  c.z2 = parse_point_set(at(j, "z2"));
  c.c6_divides_product = get<bool>(j, "c6_divides_product");
  c.bezout_count = get<int>(j, "bezout_count");
  c.checks = parse_checks(at(j, "checks"));
  if (c.passed() != get<bool>(j, "passed")) throw ParseError("passed flag disagrees with the checks");
  return c;
}

Json to_json(const HalfGridCertificate& c) {
  return Json{{"kind", "halfgrid"},
              {"half", to_string(c.half)},
              {"seed", c.seed},
              {"passed", c.passed()},
              {"subset", to_json(c.subset)},
              {"lines", c.lines},
              {"projection", opt_json(c.projection)},
              {"line_product", opt_json(c.line_product)},
              {"gamma", opt_json(c.gamma)},
              {"restriction_degrees", c.restriction_degrees},
              {"gamma_smooth", c.gamma_smooth ? Json(to_string(*c.gamma_smooth)) : Json(nullptr)},
              {"checks", vec_json(c.checks)}};
}

HalfGridCertificate parse_halfgrid_certificate(const Json& j) {
  if (get<std::string>(j, "kind") != "halfgrid") throw ParseError("not a half-grid certificate");
  HalfGridCertificate c;
  c.half = parse_half(get<std::string>(j, "half"));
  c.seed = get<std::uint64_t>(j, "seed");
  c.subset = parse_point_set(at(j, "subset"));
  c.lines = int_list(at(j, "lines"));
  c.projection = opt(j, "projection", parse_projection);
  c.line_product = opt(j, "line_product", parse_form);
  c.gamma = opt(j, "gamma", parse_quintic);
  c.restriction_degrees = int_list(at(j, "restriction_degrees"));
  if (!at(j, "gamma_smooth").is_null()) c.gamma_smooth = parse_status(get<std::string>(j, "gamma_smooth"));
  c.checks = parse_checks(at(j, "checks"));
  if (c.passed() != get<bool>(j, "passed")) throw ParseError("passed flag disagrees with the checks");
  return c;
}

Json to_json(const RefutationReport& r) {
  Json types = Json::array();
  for (const auto& t : r.types) types.push_back(Json{{"a", t.a}, {"b", t.b}, {"excluded", t.excluded}});
  return Json{{"kind", "refutation"},
              {"seed", r.seed},
              {"point_count", r.point_count},
              {"max_collinear", r.max_collinear},
              {"projection", opt_json(r.projection)},
              {"dimension_table", r.dimension_table},
              {"min_degree", r.min_degree},
              {"types", types},
              {"refuted", r.refuted},
              {"summary", r.summary}};
}

RefutationReport parse_refutation(const Json& j) {
  if (get<std::string>(j, "kind") != "refutation") throw ParseError("not a refutation report");
  RefutationReport r;
  r.seed = get<std::uint64_t>(j, "seed");
  r.point_count = get<int>(j, "point_count");
  r.max_collinear = get<int>(j, "max_collinear");
  r.projection = opt(j, "projection", parse_projection);
  r.dimension_table = int_list(at(j, "dimension_table"));
  r.min_degree = get<int>(j, "min_degree");
  for (const auto& t : array_of(at(j, "types"), 0)) {
    r.types.push_back({get<int>(t, "a"), get<int>(t, "b"), get<bool>(t, "excluded")});
  }
  r.refuted = get<bool>(j, "refuted");
  r.summary = get<std::string>(j, "summary");
  return r;
}

Json to_json(const ConfigDocument& d) {
  return Json{{"kind", "config"},
              {"points", vec_json(d.points)},
              {"planes", vec_json(d.planes)},
              {"plane_points", vec_json(d.plane_points)},
              {"lines", vec_json(d.lines)}};
}

ConfigDocument parse_config(const Json& j) {
  if (get<std::string>(j, "kind") != "config") throw ParseError("not a configuration document");
  ConfigDocument d;
  for (const auto& p : array_of(at(j, "points"), 0)) d.points.push_back(parse_point(p));
  for (const auto& v : array_of(at(j, "planes"), 0)) d.planes.push_back(parse_plane(v));
  for (const auto& s : array_of(at(j, "plane_points"), 0)) d.plane_points.push_back(parse_point_set(s));
  for (const auto& l : array_of(at(j, "lines"), 0)) d.lines.push_back(parse_config_line(l));
  return d;
}

Json to_json(const std::vector<CoverCertificate>& covers) {
  Json a = Json::array();
  for (const auto& c : covers) a.push_back(c.lines);
  return a;
}

std::vector<CoverCertificate> parse_coverings(const Json& j) {
  std::vector<CoverCertificate> out;
  for (const auto& c : array_of(j, 0)) out.push_back({int_list(c)});
  return out;
}

Json to_json(const std::vector<GridLines>& grids) {
  Json a = Json::array();
  for (const auto& g : grids) a.push_back(Json{{"l", g.l}, {"m", g.m}});
  return a;
}

std::vector<GridLines> parse_grids(const Json& j) {
  std::vector<GridLines> out;
  for (const auto& g : array_of(j, 0)) out.push_back({int_list(at(g, "l")), int_list(at(g, "m"))});
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace h4
