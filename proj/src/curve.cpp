#include "agss/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agss::curve {

Point Point::infinity(const Field& f) {
  Point p(f.zero(), f.zero());
  p.inf_ = true;
  return p;
}

Point::Point(const FieldElement& x, const FieldElement& y) : inf_(false), x_(x), y_(y) {
  if (x.field() != y.field())
    throw std::invalid_argument("point coordinates from different fields");
}

const FieldElement& Point::x() const {
  if (inf_) throw std::logic_error("point at infinity has no affine coordinates");
  return x_;
}

const FieldElement& Point::y() const {
  if (inf_) throw std::logic_error("point at infinity has no affine coordinates");
  return y_;
}

bool Point::operator==(const Point& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return x_ == o.x_ && y_ == o.y_;
}

bool Point::operator<(const Point& o) const {
  if (inf_ != o.inf_) return inf_;
  if (inf_) return false;
  if (x_.index() != o.x_.index()) return x_.index() < o.x_.index();
  return y_.index() < o.y_.index();
}

std::string Point::to_string() const {
  if (inf_) return "O";
  return "(" + x_.to_string() + "," + y_.to_string() + ")";
}

EllipticCurve::EllipticCurve(const Field& f, const FieldElement& a1,
                             const FieldElement& a3, const FieldElement& a2,
                             const FieldElement& a4, const FieldElement& a6)
    : f_(f), a1_(a1), a3_(a3), a2_(a2), a4_(a4), a6_(a6) {
  for (const FieldElement* c : {&a1, &a3, &a2, &a4, &a6})
    if (c->field() != f) throw std::invalid_argument("curve coefficient field mismatch");
  if (discriminant().is_zero())
    throw std::invalid_argument("singular curve: discriminant is zero");
}

FieldElement EllipticCurve::discriminant() const {
  auto n = [&](long v) { return f_.from_integer(v); };
  FieldElement b2 = a1_ * a1_ + n(4) * a2_;
  FieldElement b4 = n(2) * a4_ + a1_ * a3_;
  FieldElement b6 = a3_ * a3_ + n(4) * a6_;
  FieldElement b8 = a1_ * a1_ * a6_ + n(4) * a2_ * a6_ - a1_ * a3_ * a4_ +
                    a2_ * a3_ * a3_ - a4_ * a4_;
  return -(b2 * b2 * b8) - n(8) * b4 * b4 * b4 - n(27) * b6 * b6 +
         n(9) * b2 * b4 * b6;
}

bool EllipticCurve::contains(const Point& p) const {
  if (p.is_infinity()) return true;
  const FieldElement &x = p.x(), &y = p.y();
  FieldElement lhs = y * y + a1_ * x * y + a3_ * y;
  FieldElement rhs = x * x * x + a2_ * x * x + a4_ * x + a6_;
  return lhs == rhs;
}

Point EllipticCurve::negate(const Point& p) const {
  if (p.is_infinity()) return p;
  return Point(p.x(), -p.y() - a1_ * p.x() - a3_);
}

Point EllipticCurve::add(const Point& p, const Point& q) const {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const FieldElement &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  FieldElement lambda = f_.zero();
  if (x1 == x2) {
    if (q == negate(p)) return Point::infinity(f_);
    // doubling; the denominator is nonzero because p is not 2-torsion here
    FieldElement den = f_.from_integer(2) * y1 + a1_ * x1 + a3_;
    lambda = (f_.from_integer(3) * x1 * x1 + f_.from_integer(2) * a2_ * x1 + a4_ -
              a1_ * y1) / den;
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  FieldElement x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
  FieldElement y3 = lambda * (x1 - x3) - y1 - a1_ * x3 - a3_;
  return Point(x3, y3);
}

Point EllipticCurve::scalar_mul(long n, const Point& p) const {
  Point base = n < 0 ? negate(p) : p;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Point acc = Point::infinity(f_);
  while (e > 0) {
    if (e & 1) acc = add(acc, base);
    base = add(base, base);
    e >>= 1;
  }
  return acc;
}

bool EllipticCurve::operator==(const EllipticCurve& o) const {
  return f_ == o.f_ && a1_ == o.a1_ && a3_ == o.a3_ && a2_ == o.a2_ &&
         a4_ == o.a4_ && a6_ == o.a6_;
}

std::string EllipticCurve::to_string() const {
  std::ostringstream os;
  os << "y^2";
  if (!a1_.is_zero()) os << " + " << a1_.to_string() << "*x*y";
  if (!a3_.is_zero()) os << " + " << a3_.to_string() << "*y";
  os << " = x^3";
  if (!a2_.is_zero()) os << " + " << a2_.to_string() << "*x^2";
  if (!a4_.is_zero()) os << " + " << a4_.to_string() << "*x";
  if (!a6_.is_zero()) os << " + " << a6_.to_string();
  os << " over " << f_.to_string();
  return os.str();
}

std::vector<Point> rational_points(const EllipticCurve& e) {
  std::vector<Point> pts = {Point::infinity(e.field())};
  for (const auto& x : e.field().elements())
    for (const auto& y : e.field().elements()) {
      Point p(x, y);
      if (e.contains(p)) pts.push_back(p);
    }
  return pts;
}

GroupStructure::GroupStructure(const EllipticCurve& e, long n1, long n2,
                               const Point& g1, const Point& g2,
                               std::vector<Point> points,
                               std::map<Point, std::pair<long, long>> coords)
    : curve_(e), n1_(n1), n2_(n2), g1_(g1), g2_(g2),
      points_(std::move(points)), coords_(std::move(coords)) {}

std::pair<long, long> GroupStructure::coordinates(const Point& p) const {
  auto it = coords_.find(p);
  if (it == coords_.end()) throw std::invalid_argument("point not on the curve");
  return it->second;
}

Point GroupStructure::at_coordinates(long i, long j) const {
  i = ((i % n1_) + n1_) % n1_;
  j = ((j % n2_) + n2_) % n2_;
  return curve_.add(curve_.scalar_mul(i, g1_), curve_.scalar_mul(j, g2_));
}

long GroupStructure::point_order(const Point& p) const {
  Point acc = p;
  long o = 1;
  while (!acc.is_infinity()) {
    acc = curve_.add(acc, p);
    ++o;
    if (o > size()) throw std::logic_error("point order exceeds group size");
  }
  return o;
}

std::pair<long, long> GroupStructure::sum(const std::vector<Point>& pts) const {
  long i = 0, j = 0;
  for (const auto& p : pts) {
    auto c = coordinates(p);
    i = (i + c.first) % n1_;
    j = (j + c.second) % n2_;
  }
  return {i, j};
}

GroupStructure group_structure(const EllipticCurve& e) {
  std::vector<Point> pts = rational_points(e);
  long n = static_cast<long>(pts.size());

  auto order_of = [&](const Point& p) {
    Point acc = p;
    long o = 1;
    while (!acc.is_infinity()) {
      acc = e.add(acc, p);
      ++o;
    }
    return o;
  };

  long n2 = 1;
  Point g2 = Point::infinity(e.field());
  for (const auto& p : pts) {
    long o = order_of(p);
    if (o > n2) {
      n2 = o;
      g2 = p;
    }
  }
  long n1 = n / n2;
  if (n1 * n2 != n) throw std::logic_error("group size not divisible by max order");

  std::map<Point, std::pair<long, long>> coords;
  Point g1 = Point::infinity(e.field());
  if (n1 == 1) {
    Point acc = Point::infinity(e.field());
    for (long j = 0; j < n2; ++j) {
      coords[acc] = {0, j};
      acc = e.add(acc, g2);
    }
  } else {
    // Second generator: first point of order n1 meeting <g2> only at O.
    std::map<Point, long> in_g2;
    {
      Point acc = Point::infinity(e.field());
      for (long j = 0; j < n2; ++j) {
        in_g2[acc] = j;
        acc = e.add(acc, g2);
      }
    }
    bool found = false;
    for (const auto& p : pts) {
      if (p.is_infinity() || order_of(p) != n1) continue;
      bool indep = true;
      Point acc = p;
      for (long i = 1; i < n1 && indep; ++i) {
        if (in_g2.count(acc)) indep = false;
        acc = e.add(acc, p);
      }
      if (!indep) continue;
      g1 = p;
      found = true;
      break;
    }
    if (!found) throw std::logic_error("no independent generator of order n1 found");
    Point row = Point::infinity(e.field());
    for (long i = 0; i < n1; ++i) {
      Point acc = row;
      for (long j = 0; j < n2; ++j) {
        if (!coords.emplace(acc, std::make_pair(i, j)).second)
          throw std::logic_error("generator pair does not span the group");
        acc = e.add(acc, g2);
      }
      row = e.add(row, g1);
    }
  }
  if (static_cast<long>(coords.size()) != n)
    throw std::logic_error("coordinate table does not cover the group");
  if (n2 % n1 != 0) throw std::logic_error("invariant factors out of order");
  if ((e.field().order() - 1) % n1 != 0)
    throw std::logic_error("n1 does not divide q-1");
  return GroupStructure(e, n1, n2, g1, g2, std::move(pts), std::move(coords));
}

// ----- plane projective curves -----

ProjectivePoint::ProjectivePoint(const FieldElement& x, const FieldElement& y,
                                 const FieldElement& z)
    : x_(x), y_(y), z_(z) {
  if (x.field() != y.field() || y.field() != z.field())
    throw std::invalid_argument("projective coordinates from different fields");
  if (x_.is_zero() && y_.is_zero() && z_.is_zero())
    throw std::invalid_argument("(0:0:0) is not a projective point");
  FieldElement lead = !x_.is_zero() ? x_ : (!y_.is_zero() ? y_ : z_);
  FieldElement inv = lead.inverse();
  x_ = x_ * inv;
  y_ = y_ * inv;
  z_ = z_ * inv;
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
  return x_ == o.x_ && y_ == o.y_ && z_ == o.z_;
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
  if (x_.index() != o.x_.index()) return x_.index() < o.x_.index();
  if (y_.index() != o.y_.index()) return y_.index() < o.y_.index();
  return z_.index() < o.z_.index();
}

std::string ProjectivePoint::to_string() const {
  return "(" + x_.to_string() + ":" + y_.to_string() + ":" + z_.to_string() + ")";
}

PlaneCurve::PlaneCurve(const Field& f, std::vector<PlaneMonomial> terms)
    : f_(f), degree_(0), terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("empty polynomial");
  degree_ = terms_[0].dx + terms_[0].dy + terms_[0].dz;
  for (const auto& t : terms_) {
    if (t.dx < 0 || t.dy < 0 || t.dz < 0)
      throw std::invalid_argument("negative exponent");
    if (t.coeff.field() != f) throw std::invalid_argument("coefficient field mismatch");
    if (t.dx + t.dy + t.dz != degree_)
      throw std::invalid_argument("polynomial is not homogeneous");
  }
}

FieldElement PlaneCurve::evaluate(const ProjectivePoint& p) const {
  FieldElement acc = f_.zero();
  for (const auto& t : terms_)
    acc += t.coeff * p.x().pow(t.dx) * p.y().pow(t.dy) * p.z().pow(t.dz);
  return acc;
}

PlaneCurve klein_quartic(const Field& f) {
  return PlaneCurve(f, {{3, 1, 0, f.one()}, {0, 3, 1, f.one()}, {1, 0, 3, f.one()}});
}

std::vector<ProjectivePoint> projective_plane_points(const Field& f) {
  std::vector<ProjectivePoint> pts;
  auto els = f.elements();
  for (const auto& y : els)
    for (const auto& z : els) pts.emplace_back(f.one(), y, z);
  for (const auto& z : els) pts.emplace_back(f.zero(), f.one(), z);
  pts.emplace_back(f.zero(), f.zero(), f.one());
  return pts;
}

std::vector<ProjectivePoint> rational_points(const PlaneCurve& c) {
  std::vector<ProjectivePoint> pts;
  for (const auto& p : projective_plane_points(c.field()))
    if (c.contains(p)) pts.push_back(p);
  return pts;
}

}  // namespace agss::curve
