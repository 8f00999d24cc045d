// Elliptic curves in generalized Weierstrass form over small finite fields:
// exact group law, exhaustive rational-point enumeration, and the abelian
// group structure Z_n1 x Z_n2 computed by brute force.  Also carries plane
// projective curves (for quartics such as Klein's) with point enumeration.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "agss/gf.hpp"

namespace agss::curve {

using gf::Field;
using gf::FieldElement;

class Point {
 public:
  static Point infinity(const Field& f);
  Point(const FieldElement& x, const FieldElement& y);

  bool is_infinity() const { return inf_; }
  const FieldElement& x() const;
  const FieldElement& y() const;

  bool operator==(const Point& o) const;
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const;  // infinity first, then (x, y) index order
  std::string to_string() const;

 private:
  bool inf_;
  FieldElement x_, y_;
};

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
class EllipticCurve {
 public:
  EllipticCurve(const Field& f, const FieldElement& a1, const FieldElement& a3,
                const FieldElement& a2, const FieldElement& a4, const FieldElement& a6);

  const Field& field() const { return f_; }
  const FieldElement& a1() const { return a1_; }
  const FieldElement& a3() const { return a3_; }
  const FieldElement& a2() const { return a2_; }
  const FieldElement& a4() const { return a4_; }
  const FieldElement& a6() const { return a6_; }
  FieldElement discriminant() const;

  bool contains(const Point& p) const;
  Point negate(const Point& p) const;
  Point add(const Point& p, const Point& q) const;
  Point scalar_mul(long n, const Point& p) const;

  bool operator==(const EllipticCurve& o) const;
  std::string to_string() const;

 private:
  Field f_;
  FieldElement a1_, a3_, a2_, a4_, a6_;
};

// All rational points, infinity first, affine points by (x, y) index order.
std::vector<Point> rational_points(const EllipticCurve& e);

// E(GF(q)) as Z_n1 x Z_n2 with n1 | n2 (n1 = 1 for cyclic groups).  Every
// rational point gets coordinates (i, j) meaning i*g1 + j*g2.
class GroupStructure {
 public:
  GroupStructure(const EllipticCurve& e, long n1, long n2, const Point& g1,
                 const Point& g2, std::vector<Point> points,
                 std::map<Point, std::pair<long, long>> coords);

  const EllipticCurve& curve() const { return curve_; }
  long n1() const { return n1_; }
  long n2() const { return n2_; }
  const Point& g1() const { return g1_; }
  const Point& g2() const { return g2_; }
  long size() const { return static_cast<long>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }

  std::pair<long, long> coordinates(const Point& p) const;
  Point at_coordinates(long i, long j) const;
  long point_order(const Point& p) const;

  // Componentwise sum of the coordinates mod (n1, n2); empty list gives (0,0).
  std::pair<long, long> sum(const std::vector<Point>& pts) const;

 private:
  EllipticCurve curve_;
  long n1_, n2_;
  Point g1_, g2_;
  std::vector<Point> points_;
  std::map<Point, std::pair<long, long>> coords_;
};

GroupStructure group_structure(const EllipticCurve& e);

// ----- plane projective curves -----

// Normalized so the first nonzero coordinate (x, then y, then z) equals 1.
class ProjectivePoint {
 public:
  ProjectivePoint(const FieldElement& x, const FieldElement& y, const FieldElement& z);
  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  const FieldElement& z() const { return z_; }
  bool operator==(const ProjectivePoint& o) const;
  bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }
  bool operator<(const ProjectivePoint& o) const;
  std::string to_string() const;  // "(x:y:z)"

 private:
  FieldElement x_, y_, z_;
};

struct PlaneMonomial {
  int dx = 0, dy = 0, dz = 0;
  FieldElement coeff;
};

// A homogeneous polynomial F(x, y, z); rejects inhomogeneous input.
class PlaneCurve {
 public:
  PlaneCurve(const Field& f, std::vector<PlaneMonomial> terms);
  const Field& field() const { return f_; }
  int degree() const { return degree_; }
  FieldElement evaluate(const ProjectivePoint& p) const;
  bool contains(const ProjectivePoint& p) const { return evaluate(p).is_zero(); }

 private:
  Field f_;
  int degree_;
  std::vector<PlaneMonomial> terms_;
};

// x^3 y + y^3 z + z^3 x
PlaneCurve klein_quartic(const Field& f);

// All q^2 + q + 1 points of the projective plane: (1:y:z) in (y, z) index
// order, then (0:1:z), then (0:0:1).
std::vector<ProjectivePoint> projective_plane_points(const Field& f);

std::vector<ProjectivePoint> rational_points(const PlaneCurve& c);

}  // namespace agss::curve
