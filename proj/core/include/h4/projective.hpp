#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>

#include "h4/field.hpp"

namespace h4 {

using Vec3 = std::array<FieldElement, 3>;
using Vec4 = std::array<FieldElement, 4>;
using Pluecker = std::array<FieldElement, 6>;

/// Canonical representative of a homogeneous vector: scaled so that the
/// first nonzero entry is a positive integer and all entries lie in Z[phi]
/// with integer content 1. Scalar multiples (by any nonzero field element)
/// map to the same representative. Throws DegenerateSpan on the zero vector.
void canonicalize(std::span<FieldElement> v);

/// Point of P^3.
class ProjPoint {
 public:
  explicit ProjPoint(Vec4 coords);
  ProjPoint(long x, long y, long z, long w) : ProjPoint(Vec4{x, y, z, w}) {}
  const Vec4& coords() const { return c_; }
  const FieldElement& operator[](std::size_t i) const { return c_[i]; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
  std::string to_string() const;

 private:
  Vec4 c_;
};

/// Plane of P^3, the zero set of c0 x + c1 y + c2 z + c3 w.
class ProjPlane {
 public:
  explicit ProjPlane(Vec4 coeffs);
  const Vec4& coeffs() const { return c_; }
  const FieldElement& operator[](std::size_t i) const { return c_[i]; }
  friend bool operator==(const ProjPlane&, const ProjPlane&) = default;
  friend auto operator<=>(const ProjPlane&, const ProjPlane&) = default;
  std::string to_string() const;

 private:
  Vec4 c_;
};

/// Point of the projective plane P^2 (image of a projection).
class PlanePoint {
 public:
  explicit PlanePoint(Vec3 coords);
  const Vec3& coords() const { return c_; }
  const FieldElement& operator[](std::size_t i) const { return c_[i]; }
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
  std::string to_string() const;

 private:
  Vec3 c_;
};

/// Line of P^3. Plücker coordinates (p01, p02, p03, p12, p13, p23) are
/// canonical and define equality; two spanning points are kept for rank and
/// containment tests.
class ProjLine {
 public:
  /// Throws DegenerateSpan when p == q.
  ProjLine(const ProjPoint& p, const ProjPoint& q);

  const Pluecker& pluecker() const { return pl_; }
  const ProjPoint& first() const { return p_; }
  const ProjPoint& second() const { return q_; }

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.pl_ == b.pl_; }
  friend auto operator<=>(const ProjLine& a, const ProjLine& b) { return a.pl_ <=> b.pl_; }

 private:
  Pluecker pl_;
  ProjPoint p_;
  ProjPoint q_;
};

/// 4x4 matrix acting on column vectors of point coordinates.
class ProjMatrix {
 public:
  using Rows = std::array<Vec4, 4>;
  ProjMatrix() = default;
  explicit ProjMatrix(Rows rows) : m_(std::move(rows)) {}
  static ProjMatrix identity();

  const FieldElement& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }
  const Rows& rows() const { return m_; }

  FieldElement determinant() const;
  /// Throws SingularMatrix.
  ProjMatrix inverse() const;
  ProjMatrix transpose() const;
  Vec4 apply(const Vec4& v) const;

  friend ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b);
  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;

 private:
  Rows m_{};
};

FieldElement dot(const Vec4& a, const Vec4& b);

bool point_on_plane(const ProjPoint& p, const ProjPlane& v);

/// Throws DegenerateSpan when p == q.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

bool point_on_line(const ProjPoint& p, const ProjLine& l);

/// Plücker pairing of the two lines; zero iff they meet.
FieldElement pluecker_pairing(const Pluecker& l, const Pluecker& m);

/// True iff the lines meet; false means skew. Throws IdenticalLines.
bool lines_meet(const ProjLine& l1, const ProjLine& l2);

bool line_in_plane(const ProjLine& l, const ProjPlane& v);

/// Common point of two distinct meeting lines. Throws IdenticalLines, or
/// DegenerateSpan when the lines are skew.
ProjPoint intersection_point(const ProjLine& l1, const ProjLine& l2);

/// Plane spanned by three points. Throws DegenerateSpan if they are collinear.
ProjPlane plane_through(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Plane spanned by a line and a point off it.
ProjPlane plane_through(const ProjLine& l, const ProjPoint& p);

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

// Coordinate changes. Points map by m, planes by m^{-T}, lines through their
// spanning points. All throw SingularMatrix when m is not invertible.
ProjPoint change_of_coords(const ProjMatrix& m, const ProjPoint& p);
ProjPlane change_of_coords(const ProjMatrix& m, const ProjPlane& v);
ProjLine change_of_coords(const ProjMatrix& m, const ProjLine& l);

/// Invertible matrix whose first three output coordinates vanish at `vertex`,
/// i.e. it sends the vertex to [0:0:0:1].
ProjMatrix vertex_to_origin(const ProjPoint& vertex);

}  // namespace h4
