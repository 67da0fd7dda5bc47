#include "h4/projective.hpp"

#include <algorithm>
#include <sstream>

#include "h4/errors.hpp"

namespace h4 {

void canonicalize(std::span<FieldElement> v) {
  auto first = std::find_if(v.begin(), v.end(), [](const FieldElement& x) { return !x.is_zero(); });
  if (first == v.end()) throw DegenerateSpan("zero homogeneous vector");
  FieldElement lead_inv = first->inv();
  for (auto& x : v) x *= lead_inv;
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    den_lcm = lcm(den_lcm, x.a().den());
    den_lcm = lcm(den_lcm, x.b().den());
  }
  mpz_class content = 0;
  for (const auto& x : v) {
    content = gcd(content, (x.a() * Rational(den_lcm)).num());
    content = gcd(content, (x.b() * Rational(den_lcm)).num());
  }
  Rational scale(den_lcm, content);
  for (auto& x : v) x *= FieldElement(scale);
}

namespace {

template <std::size_t N>
std::string join(const std::array<FieldElement, N>& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < N; ++i) os << (i ? " : " : "") << c[i].to_string();
  os << ']';
  return os.str();
}

constexpr std::size_t pl_index(std::size_t i, std::size_t j) {
  // (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  constexpr std::size_t table[4][4] = {{9, 0, 1, 2}, {0, 9, 3, 4}, {1, 3, 9, 5}, {2, 4, 5, 9}};
  return table[i][j];
}

Pluecker pluecker_of(const Vec4& p, const Vec4& q) {
  Pluecker out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) out[pl_index(i, j)] = p[i] * q[j] - p[j] * q[i];
  }
  return out;
}

// Components of l ^ x; all four vanish iff x lies on l.
std::array<FieldElement, 4> wedge(const Pluecker& l, const Vec4& x) {
  std::array<FieldElement, 4> out;
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (std::size_t k = j + 1; k < 4; ++k) {
        out[n++] = l[pl_index(j, k)] * x[i] - l[pl_index(i, k)] * x[j] + l[pl_index(i, j)] * x[k];
      }
    }
  }
  return out;
}

FieldElement det3(const Vec4& a, const Vec4& b, const Vec4& c, std::size_t skip) {
  std::array<std::size_t, 3> cols{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != skip) cols[n++] = i;
  }
  auto [i, j, k] = cols;
  return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
         a[k] * (b[i] * c[j] - b[j] * c[i]);
}

}  // namespace

ProjPoint::ProjPoint(Vec4 coords) : c_(std::move(coords)) { canonicalize(c_); }
std::string ProjPoint::to_string() const { return join(c_); }

ProjPlane::ProjPlane(Vec4 coeffs) : c_(std::move(coeffs)) { canonicalize(c_); }
std::string ProjPlane::to_string() const { return join(c_); }

PlanePoint::PlanePoint(Vec3 coords) : c_(std::move(coords)) { canonicalize(c_); }
std::string PlanePoint::to_string() const { return join(c_); }

ProjLine::ProjLine(const ProjPoint& p, const ProjPoint& q)
    : pl_(pluecker_of(p.coords(), q.coords())), p_(p), q_(q) {
  if (std::all_of(pl_.begin(), pl_.end(), [](const FieldElement& x) { return x.is_zero(); })) {
    throw DegenerateSpan("line through coincident points " + p.to_string());
  }
  canonicalize(pl_);
}

ProjMatrix ProjMatrix::identity() {
  Rows r{};
  for (std::size_t i = 0; i < 4; ++i) r[i][i] = FieldElement(1);
  return ProjMatrix(r);
}

FieldElement ProjMatrix::determinant() const {
  FieldElement det(0);
  for (std::size_t c = 0; c < 4; ++c) {
    if (m_[0][c].is_zero()) continue;
    FieldElement minor = det3(m_[1], m_[2], m_[3], c);
    det += (c % 2 == 0 ? m_[0][c] : -m_[0][c]) * minor;
  }
  return det;
}

ProjMatrix ProjMatrix::inverse() const {
  Rows a = m_;
  Rows inv = identity().m_;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    while (piv < 4 && a[piv][col].is_zero()) ++piv;
    if (piv == 4) throw SingularMatrix();
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    FieldElement s = a[col][col].inv();
    for (std::size_t j = 0; j < 4; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      FieldElement f = a[r][col];
      for (std::size_t j = 0; j < 4; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return ProjMatrix(inv);
}

ProjMatrix ProjMatrix::transpose() const {
  Rows t{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = m_[j][i];
  }
  return ProjMatrix(t);
}

Vec4 ProjMatrix::apply(const Vec4& v) const {
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = dot(m_[i], v);
  return out;
}

ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b) {
  ProjMatrix::Rows r{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) r[i][j] += a.m_[i][k] * b.m_[k][j];
    }
  }
  return ProjMatrix(r);
}

FieldElement dot(const Vec4& a, const Vec4& b) {
  FieldElement s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

bool point_on_plane(const ProjPoint& p, const ProjPlane& v) { return dot(p.coords(), v.coeffs()).is_zero(); }

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) { return ProjLine(p, q); }

bool point_on_line(const ProjPoint& p, const ProjLine& l) {
  auto w = wedge(l.pluecker(), p.coords());
  return std::all_of(w.begin(), w.end(), [](const FieldElement& x) { return x.is_zero(); });
}

FieldElement pluecker_pairing(const Pluecker& l, const Pluecker& m) {
  return l[0] * m[5] - l[1] * m[4] + l[2] * m[3] + l[5] * m[0] - l[4] * m[1] + l[3] * m[2];
}

bool lines_meet(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw IdenticalLines();
  return pluecker_pairing(l1.pluecker(), l2.pluecker()).is_zero();
}

bool line_in_plane(const ProjLine& l, const ProjPlane& v) {
  return point_on_plane(l.first(), v) && point_on_plane(l.second(), v);
}

ProjPoint intersection_point(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw IdenticalLines();
  if (!lines_meet(l1, l2)) throw DegenerateSpan("lines are skew");
  // X = s*A + t*B on l1; each wedge component with l2 is linear in (s, t).
  const Vec4& a = l1.first().coords();
  const Vec4& b = l1.second().coords();
  auto wa = wedge(l2.pluecker(), a);
  auto wb = wedge(l2.pluecker(), b);
  for (std::size_t i = 0; i < 4; ++i) {
    if (wa[i].is_zero() && wb[i].is_zero()) continue;
    // wa*s + wb*t = 0  =>  (s, t) = (wb, -wa)
    Vec4 x;
    for (std::size_t k = 0; k < 4; ++k) x[k] = wb[i] * a[k] - wa[i] * b[k];
    return ProjPoint(x);
  }
  throw ConsistencyError("intersection_point: no constraint although lines differ");
}

ProjPlane plane_through(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  Vec4 c;
  for (std::size_t l = 0; l < 4; ++l) {
    FieldElement m = det3(p.coords(), q.coords(), r.coords(), l);
    c[l] = (l % 2 == 0) ? m : -m;
  }
  if (std::all_of(c.begin(), c.end(), [](const FieldElement& x) { return x.is_zero(); })) {
    throw DegenerateSpan("plane through collinear points");
  }
  return ProjPlane(c);
}

ProjPlane plane_through(const ProjLine& l, const ProjPoint& p) { return plane_through(l.first(), l.second(), p); }

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (p == q || p == r || q == r) return true;
  return point_on_line(r, ProjLine(p, q));
}

ProjPoint change_of_coords(const ProjMatrix& m, const ProjPoint& p) {
  if (m.determinant().is_zero()) throw SingularMatrix();
  return ProjPoint(m.apply(p.coords()));
}

ProjPlane change_of_coords(const ProjMatrix& m, const ProjPlane& v) {
  // v(x) = 0 with x = m^{-1} y  <=>  (m^{-T} v)(y) = 0
  ProjMatrix inv_t = m.inverse().transpose();
  return ProjPlane(inv_t.apply(v.coeffs()));
}

ProjLine change_of_coords(const ProjMatrix& m, const ProjLine& l) {
  return ProjLine(change_of_coords(m, l.first()), change_of_coords(m, l.second()));
}

ProjMatrix vertex_to_origin(const ProjPoint& vertex) {
  const Vec4& p = vertex.coords();
  std::size_t k = 3;
  while (p[k].is_zero()) --k;  // canonical points are nonzero
  ProjMatrix::Rows rows{};
  std::size_t r = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == k) continue;
    rows[r][i] = p[k];
    rows[r][k] = -p[i];
    ++r;
  }
  rows[3][k] = FieldElement(1);
  return ProjMatrix(rows);
}

}  // namespace h4
