#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h4/coverings.hpp"
#include "h4/errors.hpp"
#include "h4/geproci.hpp"
#include "h4/h4config.hpp"
#include "h4/reference_data.hpp"
#include "h4/serialize.hpp"

namespace {

using namespace h4;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

template <typename Table>
std::vector<PointSet> to_sets(const Table& t) {
  std::vector<PointSet> out;
  for (const auto& row : t) out.emplace_back(std::vector<int>(row.begin(), row.end()));
  return out;
}

// Reads rows written as "V_1: 2, 3, 4" (any prefix before the colon).
std::vector<PointSet> parse_table(const std::string& text) {
  std::vector<PointSet> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string body = colon == std::string::npos ? line : line.substr(colon + 1);
    for (char& c : body) {
      if (c == ',') c = ' ';
    }
    std::istringstream nums(body);
    std::vector<int> v;
    int x;
    while (nums >> x) v.push_back(x);
    rows.emplace_back(v);
  }
  return rows;
}

// Prints differing rows; returns true when the tables agree.
bool diff_tables(const std::vector<PointSet>& expected, const std::vector<PointSet>& computed, const char* prefix) {
  bool same = expected.size() == computed.size();
  if (!same) std::cerr << "row count: expected " << expected.size() << ", computed " << computed.size() << "\n";
  for (std::size_t i = 0; i < std::min(expected.size(), computed.size()); ++i) {
    if (expected[i] == computed[i]) continue;
    same = false;
    std::cerr << "- " << prefix << (i + 1) << ": " << expected[i].to_string() << "\n"
              << "+ " << prefix << (i + 1) << ": " << computed[i].to_string() << "\n";
  }
  return same;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

std::vector<std::uint64_t> parse_seeds(const std::string& s) {
  std::vector<std::uint64_t> seeds;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != tok.size() || tok[0] == '-') {
      throw CLI::ValidationError("--seeds", "not a non-negative integer: " + tok);
    }
    seeds.push_back(v);
  }
  if (seeds.empty()) throw CLI::ValidationError("--seeds", "no seeds given");
  return seeds;
}

std::vector<CoverCertificate> reference_coverings() {
  std::vector<CoverCertificate> ref;
  for (const auto& row : reference::kCoveringTable) ref.push_back({std::vector<int>(row.begin(), row.end())});
  std::sort(ref.begin(), ref.end());
  return ref;
}

void print_checks(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    std::cout << (c.passed ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
}

// Subcommand handlers -------------------------------------------------------

int cmd_build(const std::string& out) {
  auto cfg = build_h4();
  write_file(out, dump(to_json(make_config_document(cfg))));
  std::cout << "wrote " << out << ": " << cfg.point_count() << " points, " << cfg.planes().size() << " planes, "
            << cfg.line_count() << " lines\n";
  return kPass;
}

int cmd_incidences(const std::string& kind, const std::string& emit_as, const std::string& reference_path,
                   const std::string& out) {
  auto cfg = build_h4();
  bool planes = kind == "planes";
  std::vector<PointSet> computed;
  if (planes) {
    computed = incidence_table_planes(cfg);
  } else {
    for (const auto& l : cfg.lines()) computed.push_back(l.points);
  }
  std::vector<PointSet> expected;
  if (!reference_path.empty()) {
    expected = parse_table(read_file(reference_path));
  } else {
    expected = planes ? to_sets(reference::kPlaneTable) : to_sets(reference::kLineTable);
  }

  if (emit_as == "json") {
    Json rows = Json::array();
    for (const auto& r : computed) rows.push_back(to_json(r));
    emit(dump(rows), out);
  } else {
    emit(planes ? format_plane_table(computed) : format_line_table(computed), out);
  }
  bool same = diff_tables(expected, computed, planes ? "V_" : "l_");
  if (!same) std::cerr << kind << " table differs from the reference\n";
  return same ? kPass : kFail;
}

int cmd_coverings(bool count_only, const std::string& emit_as, const std::string& lines_file, const std::string& out) {
  std::vector<CoverCertificate> covers;
  if (lines_file.empty()) {
    covers = enumerate_coverings(build_h4());
  } else {
    Json j = read_json(lines_file);
    std::vector<PointSet> sets;
    for (const auto& row : j) sets.push_back(parse_point_set(row));
    covers = enumerate_coverings(sets, H4Configuration::kPoints);
  }
  if (count_only) {
    std::cout << covers.size() << "\n";
  } else if (emit_as == "json") {
    emit(dump(to_json(covers)), out);
  } else {
    emit(format_covering_table(covers), out);
  }
  bool same = covers == reference_coverings();
  if (!same) std::cerr << "coverings differ from the reference (" << covers.size() << " found)\n";
  return same ? kPass : kFail;
}

int cmd_grids(bool count_only, const std::string& emit_as, const std::string& out) {
  auto cfg = build_h4();
  auto grids = enumerate_grids(cfg);
  if (count_only) {
    std::cout << grids.size() << "\n";
  } else if (emit_as == "json") {
    emit(dump(to_json(grids)), out);
  } else {
    std::ostringstream os;
    for (const auto& g : grids) {
      os << "L: " << PointSet(g.l).to_string() << " | M: " << PointSet(g.m).to_string() << "\n";
    }
    emit(os.str(), out);
  }
  bool ok = true;
  for (const auto& [l, m] : {std::pair{reference::kGrid1L, reference::kGrid1M},
                             std::pair{reference::kGrid2L, reference::kGrid2M}}) {
    GridLines g{{l.begin(), l.end()}, {m.begin(), m.end()}};
    if (std::find(grids.begin(), grids.end(), g) == grids.end()) {
      std::cerr << "reference grid " << PointSet(g.l).to_string() << " missing\n";
      ok = false;
    }
  }
  return ok ? kPass : kFail;
}

int cmd_verify_geproci(std::uint64_t seed, int trials, const std::string& out) {
  auto cfg = build_h4();
  Json certs = Json::array();
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    auto cert = verify_geproci(cfg, seed + t);
    std::cout << "seed " << cert.seed << ": " << (cert.passed() ? "pass" : "FAIL") << "\n";
    print_checks(cert.checks);
    ok = ok && cert.passed();
    certs.push_back(to_json(cert));
  }
  write_file(out, dump(trials == 1 ? certs[0] : certs));
  return ok ? kPass : kFail;
}

int cmd_verify_halfgrid(const std::string& subset, std::uint64_t seed, const std::vector<int>& lines,
                        const std::string& out) {
  auto cfg = build_h4();
  Half h = subset == "z1" ? Half::z1 : Half::z2;
  std::optional<std::vector<int>> override_lines;
  if (!lines.empty()) override_lines = lines;
  auto cert = verify_half_grid(cfg, seed, h, override_lines, true);
  std::cout << subset << " seed " << seed << ": " << (cert.passed() ? "pass" : "FAIL") << "\n";
  print_checks(cert.checks);
  write_file(out, dump(to_json(cert)));
  return cert.passed() ? kPass : kFail;
}

int cmd_verify_not_halfgrid(const std::string& subset, std::uint64_t seed, const std::string& out) {
  auto cfg = build_h4();
  std::vector<ProjPoint> pts = cfg.points();
  if (subset != "all") pts = cfg.subset(half_points(subset == "z1" ? Half::z1 : Half::z2));
  auto rep = verify_not_half_grid(pts, seed);
  std::cout << "max_collinear = " << rep.max_collinear << "\n" << rep.summary << "\n";
  write_file(out, dump(to_json(rep)));
  return rep.refuted ? kPass : kFail;
}

int cmd_report(const std::string& out, const std::string& seeds_text) {
  auto seeds = parse_seeds(seeds_text);
  auto t0 = std::chrono::steady_clock::now();
  auto cfg = build_h4();
  std::vector<Check> checks;
  auto add = [&](std::string name, std::string claim, bool passed, std::string detail = "") {
    std::cout << (passed ? "pass  " : "FAIL  ") << name << "\n";
    checks.push_back({std::move(name), std::move(claim), passed, std::move(detail)});
  };

  add("plane_table", "computed plane incidences equal the reference plane table",
      incidence_table_planes(cfg) == to_sets(reference::kPlaneTable));
  std::vector<PointSet> line_rows;
  for (const auto& l : cfg.lines()) line_rows.push_back(l.points);
  add("line_table", "the 72 five-reach lines equal the reference line table",
      line_rows == to_sets(reference::kLineTable));
  int mc = max_collinear(cfg.points());
  add("max_collinear", "no line carries six or more points", mc == 5, std::to_string(mc));
  auto covers = enumerate_coverings(cfg);
  add("coverings", "there are 84 coverings by 12 disjoint lines, equal to the reference list",
      covers == reference_coverings(), std::to_string(covers.size()));
  auto grids = enumerate_grids(cfg);
  add("grid_count", "there are 72 (5,5)-grids formed by five-reach lines", grids.size() == 72,
      std::to_string(grids.size()));

  Json geproci = Json::array();
  Json halves = Json::array();
  for (auto seed : seeds) {
    auto cert = verify_geproci(cfg, seed);
    add("geproci_seed_" + std::to_string(seed), "a general projection is a (6,10) complete intersection",
        cert.passed());
    geproci.push_back(to_json(cert));
    for (Half h : {Half::z1, Half::z2}) {
      auto hg = verify_half_grid(cfg, seed, h);
      add("halfgrid_" + to_string(h) + "_seed_" + std::to_string(seed),
          "the half is a (5,6) complete intersection covered by six skew lines", hg.passed());
      halves.push_back(to_json(hg));
    }
  }
  auto refutation = verify_not_half_grid(cfg.points(), seeds.front());
  add("not_halfgrid", "the configuration is not a half-grid", refutation.refuted, refutation.summary);
  auto z1_refutation = verify_not_half_grid(cfg.subset(half_points(Half::z1)), seeds.front());
  add("z1_refutation_fails", "the same refutation does not apply to Z1", !z1_refutation.refuted,
      z1_refutation.summary);

  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Json ledger = Json::array();
  for (const auto& c : checks) ledger.push_back(to_json(c));
  bool ok = all_passed(checks);
  Json report{{"kind", "report"},
              {"command", "report"},
              {"seeds", seeds},
              {"wall_time_seconds", wall},
              {"passed", ok},
              {"checks", ledger},
              {"artifacts", Json::array({out})},
              {"geproci", geproci},
              {"halfgrid", halves},
              {"refutation", to_json(refutation)},
              {"z1_refutation", to_json(z1_refutation)}};
  write_file(out, dump(report));
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the H4 configuration of 60 points in P^3"};
  app.require_subcommand(1);

  std::string out;
  auto* build = app.add_subcommand("build", "write config.json");
  build->add_option("--out", out, "output path")->default_val("config.json");

  std::string kind = "planes";
  std::string emit_as = "table";
  std::string reference_path;
  std::string table_out;
  auto* inc = app.add_subcommand("incidences", "emit and check the plane or line incidence table");
  inc->add_option("--kind", kind)->check(CLI::IsMember({"planes", "lines"}));
  inc->add_option("--emit", emit_as)->check(CLI::IsMember({"table", "json"}));
  inc->add_option("--reference", reference_path, "compare against this text table instead of the embedded one");
  inc->add_option("--out", table_out, "write the table here instead of stdout");

  bool count_only = false;
  std::string cover_emit = "table";
  std::string lines_file;
  std::string cover_out;
  auto* cov = app.add_subcommand("coverings", "enumerate coverings by 12 disjoint five-reach lines");
  cov->add_flag("--count-only", count_only);
  cov->add_option("--emit", cover_emit)->check(CLI::IsMember({"table", "json"}));
  cov->add_option("--lines-file", lines_file, "JSON array of line point sets replacing the computed lines");
  cov->add_option("--out", cover_out);

  bool grids_count_only = false;
  std::string grids_emit = "table";
  std::string grids_out;
  auto* grd = app.add_subcommand("grids", "enumerate (5,5)-grids formed by five-reach lines");
  grd->add_flag("--count-only", grids_count_only);
  grd->add_option("--emit", grids_emit)->check(CLI::IsMember({"table", "json"}));
  grd->add_option("--out", grids_out);

  auto* verify = app.add_subcommand("verify", "run a verification pipeline");
  verify->require_subcommand(1);
  std::uint64_t seed = 1;
  int trials = 1;
  std::string geproci_out = "geproci-cert.json";
  auto* vg = verify->add_subcommand("geproci", "general projection is a (6,10) complete intersection");
  vg->add_option("--seed", seed);
  vg->add_option("--trials", trials)->check(CLI::PositiveNumber);
  vg->add_option("--out", geproci_out);

  std::string subset = "z1";
  std::vector<int> lines;
  std::string halfgrid_out = "halfgrid-cert.json";
  auto* vh = verify->add_subcommand("halfgrid", "the half is a (5,6) complete intersection");
  vh->add_option("--subset", subset)->check(CLI::IsMember({"z1", "z2"}));
  vh->add_option("--seed", seed);
  vh->add_option("--lines", lines, "replace the six covering lines")->delimiter(',');
  vh->add_option("--out", halfgrid_out);

  std::string refute_subset = "all";
  std::string refutation_out = "refutation.json";
  auto* vn = verify->add_subcommand("not-halfgrid", "the configuration is not a half-grid");
  vn->add_option("--seed", seed);
  vn->add_option("--subset", refute_subset, "run on a half instead")->check(CLI::IsMember({"all", "z1", "z2"}));
  vn->add_option("--out", refutation_out);

  std::string report_out = "report.json";
  std::string seeds = "1,2,3,4,5";
  auto* rep = app.add_subcommand("report", "run everything and write report.json");
  rep->add_option("--out", report_out);
  rep->add_option("--seeds", seeds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*build) return cmd_build(out);
    if (*inc) return cmd_incidences(kind, emit_as, reference_path, table_out);
    if (*cov) return cmd_coverings(count_only, cover_emit, lines_file, cover_out);
    if (*grd) return cmd_grids(grids_count_only, grids_emit, grids_out);
    if (*vg) return cmd_verify_geproci(seed, trials, geproci_out);
    if (*vh) return cmd_verify_halfgrid(subset, seed, lines, halfgrid_out);
    if (*vn) return cmd_verify_not_halfgrid(refute_subset, seed, refutation_out);
    if (*rep) return cmd_report(report_out, seeds);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
