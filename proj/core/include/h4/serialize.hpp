#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "h4/coverings.hpp"
#include "h4/geproci.hpp"

namespace h4 {

/// Keys keep insertion order so emitted files are stable.
using Json = nlohmann::ordered_json;

/// Flat view of a configuration as written to config.json.
struct ConfigDocument {
  std::vector<ProjPoint> points;
  std::vector<ProjPlane> planes;
  std::vector<PointSet> plane_points;
  std::vector<ConfigLine> lines;
};

ConfigDocument make_config_document(const H4Configuration& cfg);

// Field elements are {"a": "p/q", "b": "r/s"}; integers are written without
// a denominator and bare JSON integers are accepted on input.
Json to_json(const FieldElement& x);
Json to_json(const ProjPoint& p);
Json to_json(const ProjPlane& v);
Json to_json(const PlanePoint& p);
Json to_json(const ProjMatrix& m);
Json to_json(const PointSet& s);
Json to_json(const ConfigLine& l);
Json to_json(const HomForm& f);
Json to_json(const Check& c);
Json to_json(const GenericityChecklist& c);
Json to_json(const Projection& p);
Json to_json(const SmoothnessResult& r);
Json to_json(const GridCertificate& g);
Json to_json(const QuinticCone& q);
Json to_json(const GeprociCertificate& c);
Json to_json(const HalfGridCertificate& c);
Json to_json(const RefutationReport& r);
Json to_json(const ConfigDocument& d);
Json to_json(const std::vector<CoverCertificate>& covers);
Json to_json(const std::vector<GridLines>& grids);

// Parsers throw ParseError on malformed input.
FieldElement parse_field(const Json& j);
ProjPoint parse_point(const Json& j);
ProjPlane parse_plane(const Json& j);
PlanePoint parse_plane_point(const Json& j);
ProjMatrix parse_matrix(const Json& j);
PointSet parse_point_set(const Json& j);
ConfigLine parse_config_line(const Json& j);
HomForm parse_form(const Json& j);
Check parse_check(const Json& j);
GenericityChecklist parse_checklist(const Json& j);
Projection parse_projection(const Json& j);
SmoothnessResult parse_smoothness(const Json& j);
GridCertificate parse_grid(const Json& j);
QuinticCone parse_quintic(const Json& j);
GeprociCertificate parse_geproci_certificate(const Json& j);
HalfGridCertificate parse_halfgrid_certificate(const Json& j);
RefutationReport parse_refutation(const Json& j);
ConfigDocument parse_config(const Json& j);
std::vector<CoverCertificate> parse_coverings(const Json& j);
std::vector<GridLines> parse_grids(const Json& j);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace h4
