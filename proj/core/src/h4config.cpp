#include "h4/h4config.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "h4/errors.hpp"

namespace h4 {

PointSet::PointSet(std::vector<int> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end()) {
    throw std::invalid_argument("PointSet: duplicate index");
  }
  if (!idx_.empty() && idx_.front() < 1) throw std::invalid_argument("PointSet: index below 1");
}

bool PointSet::contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

bool PointSet::intersects(const PointSet& o) const {
  auto a = idx_.begin();
  auto b = o.idx_.begin();
  while (a != idx_.end() && b != o.idx_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.idx_));
  return r;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  PointSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.idx_));
  return r;
}

std::string PointSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx_.size(); ++i) os << (i ? ", " : "") << idx_[i];
  return os.str();
}

namespace {

// Coordinates as printed; "p" is phi and "p2" is phi^2.
constexpr std::array<std::array<std::string_view, 4>, 60> kPrinted = {{
      {"1", "0", "0", "0"},  // P1
      {"0", "1", "0", "0"},  // P2
      {"0", "0", "1", "0"},  // P3
      {"0", "0", "0", "1"},  // P4
      {"1", "1", "1", "1"},  // P5
      {"1", "1", "1", "-1"},  // P6
      {"1", "1", "-1", "1"},  // P7
      {"1", "1", "-1", "-1"},  // P8
      {"1", "-1", "1", "1"},  // P9
      {"1", "-1", "1", "-1"},  // P10
      {"1", "-1", "-1", "1"},  // P11
      {"1", "-1", "-1", "-1"},  // P12
      {"0", "p", "p2", "1"},  // P13
      {"0", "p", "p2", "-1"},  // P14
      {"0", "p", "-p2", "1"},  // P15
      {"0", "p", "-p2", "-1"},  // P16
      {"0", "p2", "1", "p"},  // P17
      {"0", "p2", "1", "-p"},  // P18
      {"0", "p2", "-1", "p"},  // P19
      {"0", "p2", "-1", "-p"},  // P20
      {"0", "1", "p", "p2"},  // P21
      {"0", "1", "p", "-p2"},  // P22
      {"0", "1", "-p", "p2"},  // P23
      {"0", "1", "-p", "-p2"},  // P24
      {"p", "0", "1", "p2"},  // P25
      {"p", "0", "1", "-p2"},  // P26
      {"p", "0", "-1", "p2"},  // P27
      {"p", "0", "-1", "-p2"},  // P28
      {"p2", "0", "p", "1"},  // P29
      {"p2", "0", "p", "-1"},  // P30
      {"p2", "0", "-p", "1"},  // P31
      {"p2", "0", "-p", "-1"},  // P32
      {"1", "0", "p2", "p"},  // P33
      {"1", "0", "p2", "-p"},  // P34
      {"1", "0", "-p2", "p"},  // P35
      {"1", "0", "-p2", "-p"},  // P36
      {"p", "p2", "0", "1"},  // P37
      {"p", "p2", "0", "-1"},  // P38
      {"p", "-p2", "0", "1"},  // P39
      {"p", "-p2", "0", "-1"},  // P40
      {"p2", "1", "0", "p"},  // P41
      {"p2", "1", "0", "-p"},  // P42
      {"p2", "-1", "0", "p"},  // P43
      {"p2", "-1", "0", "-p"},  // P44
      {"1", "p", "0", "p2"},  // P45
      {"1", "p", "0", "-p2"},  // P46
      {"1", "-p", "0", "p2"},  // P47
      {"1", "-p", "0", "-p2"},  // P48
      {"p", "1", "p2", "0"},  // P49
      {"p", "1", "-p2", "0"},  // P50
      {"p", "-1", "p2", "0"},  // P51
      {"p", "-1", "-p2", "0"},  // P52
      {"p2", "p", "1", "0"},  // P53
      {"p2", "p", "-1", "0"},  // P54
      {"p2", "-p", "1", "0"},  // P55
      {"p2", "-p", "-1", "0"},  // P56
      {"1", "p2", "p", "0"},  // P57
      {"1", "p2", "-p", "0"},  // P58
      {"1", "-p2", "p", "0"},  // P59
      {"1", "-p2", "-p", "0"},  // P60
}};

FieldElement parse_token(std::string_view t) {
  bool neg = !t.empty() && t.front() == '-';
  if (neg) t.remove_prefix(1);
  FieldElement v;
  if (t == "0") {
    v = FieldElement(0);
  } else if (t == "1") {
    v = FieldElement(1);
  } else if (t == "p") {
    v = FieldElement::phi();
  } else if (t == "p2") {
    v = FieldElement(Rational(1), Rational(1));
  } else {
    throw ConsistencyError("bad coordinate token");
  }
  return neg ? -v : v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError("H4 configuration invariant violated: " + what);
}

}  // namespace

std::vector<Vec4> h4_coordinates() {
  std::vector<Vec4> out;
  out.reserve(kPrinted.size());
  for (const auto& row : kPrinted) {
    Vec4 v;
    for (std::size_t k = 0; k < 4; ++k) v[k] = parse_token(row[k]);
    out.push_back(v);
  }
  return out;
}

int H4Configuration::find_point(const ProjPoint& p) const {
  auto it = std::find(points_.begin(), points_.end(), p);
  return it == points_.end() ? 0 : static_cast<int>(it - points_.begin()) + 1;
}

int H4Configuration::find_line(const PointSet& s) const {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (lines_[i].points == s) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::vector<ProjPoint> H4Configuration::subset(const PointSet& s) const {
  std::vector<ProjPoint> out;
  out.reserve(s.size());
  for (int i : s) out.push_back(point(i));
  return out;
}

std::vector<ConfigLine> collinear_subsets(std::span<const ProjPoint> points, std::size_t min_size) {
  const std::size_t n = points.size();
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
  std::vector<ConfigLine> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[i][j]) continue;
      ProjLine l(points[i], points[j]);
      std::vector<int> members;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || point_on_line(points[k], l)) members.push_back(static_cast<int>(k) + 1);
      }
      for (int a : members) {
        for (int b : members) covered[a - 1][b - 1] = true;
      }
      if (members.size() >= min_size) out.push_back({l, PointSet(std::move(members))});
    }
  }
  std::sort(out.begin(), out.end(), [](const ConfigLine& a, const ConfigLine& b) { return a.points < b.points; });
  return out;
}

std::vector<ConfigLine> compute_five_reach_lines(std::span<const ProjPoint> points) {
  std::vector<ConfigLine> five;
  for (auto& cl : collinear_subsets(points, 3)) {
    if (cl.points.size() >= 6) {
      throw ConsistencyError("line with " + std::to_string(cl.points.size()) + " collinear points: " +
                             cl.points.to_string());
    }
    if (cl.points.size() == 5) five.push_back(std::move(cl));
  }
  return five;
}

int max_collinear(std::span<const ProjPoint> points) {
  if (points.size() < 3) return static_cast<int>(points.size());
  int best = 2;
  for (const auto& cl : collinear_subsets(points, 3)) best = std::max(best, static_cast<int>(cl.points.size()));
  return best;
}

H4Configuration build_h4() {
  H4Configuration cfg;
  cfg.printed_ = h4_coordinates();
  for (const auto& v : cfg.printed_) {
    cfg.points_.emplace_back(v);
    cfg.planes_.emplace_back(v);
  }
  const int n = H4Configuration::kPoints;
  {
    auto sorted = cfg.points_;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "points pairwise distinct");
  }

  cfg.point_planes_.assign(n, {});
  int incidences = 0;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> on;
    for (int j = 1; j <= n; ++j) {
      if (point_on_plane(cfg.point(j), cfg.plane(i))) {
        on.push_back(j);
        cfg.point_planes_[j - 1].push_back(i);
        ++incidences;
      }
    }
    require(on.size() == 15, "plane V" + std::to_string(i) + " carries 15 points");
    cfg.plane_points_.emplace_back(std::move(on));
  }
  require(incidences == 900, "900 point-plane incidences");
  for (int i = 1; i <= n; ++i) {
    require(cfg.point_planes_[i - 1].size() == 15, "15 planes through P" + std::to_string(i));
    for (int j = 1; j <= n; ++j) {
      require(cfg.plane_points_[i - 1].contains(j) == cfg.plane_points_[j - 1].contains(i), "duality symmetry");
    }
  }

  cfg.lines_ = compute_five_reach_lines(cfg.points_);
  require(cfg.lines_.size() == 72, "72 five-reach lines");

  cfg.point_lines_.assign(n, {});
  cfg.plane_lines_.assign(n, {});
  for (int l = 1; l <= cfg.line_count(); ++l) {
    for (int p : cfg.line(l).points) cfg.point_lines_[p - 1].push_back(l);
    std::vector<int> planes;
    for (int v = 1; v <= n; ++v) {
      if (line_in_plane(cfg.line(l).line, cfg.plane(v))) {
        planes.push_back(v);
        cfg.plane_lines_[v - 1].push_back(l);
      }
    }
    require(planes.size() == 5, "five planes through l" + std::to_string(l));
    cfg.line_planes_.push_back(std::move(planes));
  }
  for (int i = 1; i <= n; ++i) {
    require(cfg.point_lines_[i - 1].size() == 6, "six lines through P" + std::to_string(i));
    require(cfg.plane_lines_[i - 1].size() == 6, "six lines in V" + std::to_string(i));
  }
  return cfg;
}

std::vector<PointSet> incidence_table_planes(const H4Configuration& cfg) {
  std::vector<PointSet> rows;
  for (int i = 1; i <= cfg.point_count(); ++i) {
    std::vector<int> on;
    for (int j = 1; j <= cfg.point_count(); ++j) {
      if (point_on_plane(cfg.point(j), cfg.plane(i))) on.push_back(j);
    }
    rows.emplace_back(std::move(on));
  }
  return rows;
}

std::vector<SpecialPoint> special_points_for_grid(const H4Configuration& cfg, const PointSet& grid) {
  if (grid.size() != 25) throw std::invalid_argument("special_points_for_grid: grid must have 25 points");
  std::vector<SpecialPoint> out;
  const auto& g = grid.indices();
  for (int x = 1; x <= cfg.point_count(); ++x) {
    if (grid.contains(x)) continue;
    SpecialPoint sp{x, {}};
    for (std::size_t a = 0; a < g.size(); ++a) {
      ProjLine l(cfg.point(x), cfg.point(g[a]));
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        if (point_on_line(cfg.point(g[b]), l)) sp.pairs.push_back({g[a], g[b]});
      }
    }
    if (sp.pairs.size() != 10) continue;
    std::vector<int> touched;
    for (const auto& [a, b] : sp.pairs) {
      touched.push_back(a);
      touched.push_back(b);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    if (touched.size() == 20) out.push_back(std::move(sp));
  }
  return out;
}

namespace {

std::string format_rows(std::span<const PointSet> rows, const char* prefix) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) os << prefix << (i + 1) << ": " << rows[i].to_string() << '\n';
  return os.str();
}

}  // namespace

std::string format_plane_table(std::span<const PointSet> rows) { return format_rows(rows, "V_"); }
std::string format_line_table(std::span<const PointSet> rows) { return format_rows(rows, "l_"); }

}  // namespace h4
