// Bases of spaces of rational functions with bounded poles on the supported
// curve families, plus evaluation of those bases at lists of rational points.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agss/curve.hpp"
#include "agss/gf.hpp"
#include "agss/linalg.hpp"

namespace agss::funcspace {

using gf::Field;
using gf::FieldElement;

enum class CurveFamily { rational, elliptic, klein };

// A point at which basis functions can be evaluated. The alternative must
// match the curve family: field elements for the affine line, affine curve
// points for elliptic curves, projective points for the plane quartic.
using EvalPoint = std::variant<FieldElement, curve::Point, curve::ProjectivePoint>;

std::string to_string(const EvalPoint& p);
bool same_point(const EvalPoint& a, const EvalPoint& b);

// One basis function in a tagged representation: t^i on the line, x^i*y^j on
// an elliptic curve, (a*x + b*y + c*z)/y on the quartic.
class RationalFunction {
 public:
  static RationalFunction line_monomial(const Field& f, long i);
  static RationalFunction curve_monomial(const Field& f, long i, long j);
  static RationalFunction coordinate_ratio(const Field& f, const FieldElement& a,
                                           const FieldElement& b,
                                           const FieldElement& c);

  CurveFamily family() const { return family_; }
  const Field& field() const { return f_; }
  FieldElement evaluate(const EvalPoint& p) const;
  std::string to_string() const;

 private:
  RationalFunction(CurveFamily fam, const Field& f) : family_(fam), f_(f) {}

  CurveFamily family_;
  Field f_;
  long i_ = 0;
  long j_ = 0;
  FieldElement a_, b_, c_;
};

// An ordered basis of L(G) for one of the supported divisors G, together
// with the divisor data needed downstream (degree and curve genus).
class RRBasis {
 public:
  RRBasis(CurveFamily family, const Field& f, long degree, long genus,
          std::vector<RationalFunction> functions, std::string divisor,
          std::optional<curve::EllipticCurve> ec = std::nullopt);

  CurveFamily family() const { return family_; }
  const Field& field() const { return f_; }
  long degree() const { return degree_; }
  long genus() const { return genus_; }
  size_t dimension() const { return functions_.size(); }
  const std::vector<RationalFunction>& functions() const { return functions_; }
  const std::string& divisor() const { return divisor_; }
  const std::optional<curve::EllipticCurve>& elliptic_curve() const { return ec_; }
  std::vector<std::string> function_names() const;

 private:
  CurveFamily family_;
  Field f_;
  long degree_;
  long genus_;
  std::vector<RationalFunction> functions_;
  std::string divisor_;
  std::optional<curve::EllipticCurve> ec_;
};

// {1, t, ..., t^m}: functions on the line with poles only at infinity.
RRBasis basis_genus0(const Field& f, long m);

// {x^i y^j : 2i + 3j <= m, j in {0,1}} ordered by pole order at O.
RRBasis basis_elliptic_mO(const curve::EllipticCurve& e, long m);

// {x/y, 1, z/y}: the three-dimensional space attached to the divisor
// 3*Q1 + Q3 on the plane quartic over GF(8).
RRBasis basis_klein(const Field& f);

// Entry (i, j) = value of basis function i at point j. Points must be
// distinct, lie on the basis's curve, and avoid all poles.
linalg::Matrix evaluate_matrix(const RRBasis& basis,
                               const std::vector<EvalPoint>& points);

}  // namespace agss::funcspace
