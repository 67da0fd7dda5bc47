#include "h4/coverings.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace h4 {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const PointSet& s, int universe) {
  Mask m = 0;
  for (int i : s) {
    if (i > universe) throw std::invalid_argument("point index outside the universe");
    m |= Mask{1} << (i - 1);
  }
  return m;
}

struct CoverSearch {
  std::vector<Mask> line_masks;
  std::vector<std::vector<int>> lines_at;  // point -> lines containing it
  Mask full = 0;
  int universe = 0;
  std::vector<int> chosen;
  std::vector<CoverCertificate> found;

  void run(Mask covered) {
    if (covered == full) {
      CoverCertificate c{chosen};
      std::sort(c.lines.begin(), c.lines.end());
      found.push_back(std::move(c));
      return;
    }
    int best_point = -1;
    std::size_t best_count = SIZE_MAX;
    for (int p = 0; p < universe; ++p) {
      if (covered & (Mask{1} << p)) continue;
      std::size_t count = 0;
      for (int l : lines_at[p]) {
        if ((line_masks[l] & covered) == 0) ++count;
      }
      if (count < best_count) {
        best_count = count;
        best_point = p;
        if (count == 0) return;
      }
    }
    for (int l : lines_at[best_point]) {
      if (line_masks[l] & covered) continue;
      chosen.push_back(l + 1);
      run(covered | line_masks[l]);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<CoverCertificate> enumerate_coverings(std::span<const PointSet> lines, int universe) {
  if (universe < 1 || universe > 64) throw std::invalid_argument("universe must be in 1..64");
  CoverSearch s;
  s.universe = universe;
  s.full = universe == 64 ? ~Mask{0} : (Mask{1} << universe) - 1;
  s.lines_at.assign(universe, {});
  for (std::size_t l = 0; l < lines.size(); ++l) {
    s.line_masks.push_back(to_mask(lines[l], universe));
    for (int p : lines[l]) s.lines_at[p - 1].push_back(static_cast<int>(l));
  }
  s.run(0);
  std::sort(s.found.begin(), s.found.end());
  s.found.erase(std::unique(s.found.begin(), s.found.end()), s.found.end());
  return s.found;
}

namespace {

std::vector<PointSet> line_sets(const H4Configuration& cfg) {
  std::vector<PointSet> sets;
  for (const auto& l : cfg.lines()) sets.push_back(l.points);
  return sets;
}

}  // namespace

std::vector<CoverCertificate> enumerate_coverings(const H4Configuration& cfg) {
  auto sets = line_sets(cfg);
  return enumerate_coverings(sets, cfg.point_count());
}

bool verify_covering(std::span<const PointSet> lines, std::span<const int> chosen, int universe) {
  if (universe < 1 || universe > 64) return false;
  Mask covered = 0;
  for (int l : chosen) {
    if (l < 1 || l > static_cast<int>(lines.size())) return false;
    Mask m = to_mask(lines[l - 1], universe);
    if (m & covered) return false;
    covered |= m;
  }
  Mask full = universe == 64 ? ~Mask{0} : (Mask{1} << universe) - 1;
  return covered == full;
}

bool verify_covering(const H4Configuration& cfg, std::span<const int> chosen) {
  auto sets = line_sets(cfg);
  return verify_covering(sets, chosen, cfg.point_count());
}

std::string format_covering_table(std::span<const CoverCertificate> covers) {
  std::ostringstream os;
  for (const auto& c : covers) {
    for (std::size_t i = 0; i < c.lines.size(); ++i) os << (i ? ", " : "") << c.lines[i];
    os << '\n';
  }
  return os.str();
}

namespace {

constexpr std::size_t kMaxLines = 128;
using LineMask = std::bitset<kMaxLines>;

// Enumerates size-k cliques of the skew graph inside `allowed`, ascending.
template <typename Visit>
void skew_cliques(const std::vector<LineMask>& skew, const LineMask& allowed, int k, std::vector<int>& current,
                  const Visit& visit, int start, std::size_t n) {
  if (static_cast<int>(current.size()) == k) {
    visit(current);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    if (!allowed[i]) continue;
    bool ok = std::all_of(current.begin(), current.end(), [&](int c) { return skew[c][i]; });
    if (!ok) continue;
    current.push_back(static_cast<int>(i));
    skew_cliques(skew, allowed, k, current, visit, static_cast<int>(i) + 1, n);
    current.pop_back();
  }
}

}  // namespace

std::vector<GridLines> enumerate_grids(const H4Configuration& cfg, int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("grid sizes must be positive");
  const std::size_t n = cfg.lines().size();
  if (n > kMaxLines) throw std::invalid_argument("too many lines");
  std::vector<LineMask> skew(n);
  std::vector<LineMask> shares(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      skew[i][j] = !lines_meet(cfg.lines()[i].line, cfg.lines()[j].line);
      shares[i][j] = cfg.lines()[i].points.intersects(cfg.lines()[j].points);
    }
  }
  LineMask all;
  for (std::size_t i = 0; i < n; ++i) all[i] = true;

  std::vector<GridLines> out;
  std::vector<int> lset;
  // Choose L incrementally so the common partner set can prune early.
  auto grow = [&](auto&& self, int start, const LineMask& partners) -> void {
    if (static_cast<int>(lset.size()) == a) {
      std::vector<int> mset;
      skew_cliques(
          skew, partners, b, mset,
          [&](const std::vector<int>& m) {
            if (a == b && m.front() < lset.front()) return;
            GridLines g;
            for (int x : lset) g.l.push_back(x + 1);
            for (int x : m) g.m.push_back(x + 1);
            out.push_back(std::move(g));
          },
          0, n);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      bool ok = std::all_of(lset.begin(), lset.end(), [&](int c) { return skew[c][i]; });
      if (!ok) continue;
      LineMask next = partners & shares[i];
      if (static_cast<int>(next.count()) < b) continue;
      lset.push_back(static_cast<int>(i));
      self(self, static_cast<int>(i) + 1, next);
      lset.pop_back();
    }
  };
  grow(grow, 0, all);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace h4
