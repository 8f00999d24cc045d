#include "agss/funcspace.hpp"

#include <stdexcept>

namespace agss::funcspace {

namespace {

std::string power_string(const std::string& var, long e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const EvalPoint& p) {
  if (std::holds_alternative<FieldElement>(p))
    return std::get<FieldElement>(p).to_string();
  if (std::holds_alternative<curve::Point>(p))
    return std::get<curve::Point>(p).to_string();
  return std::get<curve::ProjectivePoint>(p).to_string();
}

bool same_point(const EvalPoint& a, const EvalPoint& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<FieldElement>(a))
    return std::get<FieldElement>(a) == std::get<FieldElement>(b);
  if (std::holds_alternative<curve::Point>(a))
    return std::get<curve::Point>(a) == std::get<curve::Point>(b);
  return std::get<curve::ProjectivePoint>(a) == std::get<curve::ProjectivePoint>(b);
}

RationalFunction RationalFunction::line_monomial(const Field& f, long i) {
  if (i < 0) throw std::invalid_argument("negative exponent");
  RationalFunction r(CurveFamily::rational, f);
  r.i_ = i;
  return r;
}

RationalFunction RationalFunction::curve_monomial(const Field& f, long i, long j) {
  if (i < 0 || j < 0 || j > 1) throw std::invalid_argument("bad exponent pair");
  RationalFunction r(CurveFamily::elliptic, f);
  r.i_ = i;
  r.j_ = j;
  return r;
}

RationalFunction RationalFunction::coordinate_ratio(const Field& f,
                                                    const FieldElement& a,
                                                    const FieldElement& b,
                                                    const FieldElement& c) {
  if (a.field() != f || b.field() != f || c.field() != f)
    throw std::invalid_argument("coefficient field mismatch");
  RationalFunction r(CurveFamily::klein, f);
  r.a_ = a;
  r.b_ = b;
  r.c_ = c;
  return r;
}

FieldElement RationalFunction::evaluate(const EvalPoint& p) const {
  switch (family_) {
    case CurveFamily::rational: {
      if (!std::holds_alternative<FieldElement>(p))
        throw std::invalid_argument("expected a field element");
      const auto& t = std::get<FieldElement>(p);
      if (t.field() != f_) throw std::invalid_argument("point field mismatch");
      return t.pow(i_);
    }
    case CurveFamily::elliptic: {
      if (!std::holds_alternative<curve::Point>(p))
        throw std::invalid_argument("expected an affine curve point");
      const auto& pt = std::get<curve::Point>(p);
      if (pt.is_infinity())
        throw std::domain_error("pole at the point at infinity");
      if (pt.x().field() != f_) throw std::invalid_argument("point field mismatch");
      return pt.x().pow(i_) * pt.y().pow(j_);
    }
    case CurveFamily::klein: {
      if (!std::holds_alternative<curve::ProjectivePoint>(p))
        throw std::invalid_argument("expected a projective point");
      const auto& pt = std::get<curve::ProjectivePoint>(p);
      if (pt.x().field() != f_) throw std::invalid_argument("point field mismatch");
      if (pt.y().is_zero())
        throw std::domain_error("pole at a point with y = 0");
      return (a_ * pt.x() + b_ * pt.y() + c_ * pt.z()) / pt.y();
    }
  }
  throw std::logic_error("unreachable");
}

std::string RationalFunction::to_string() const {
  switch (family_) {
    case CurveFamily::rational:
      return power_string("t", i_);
    case CurveFamily::elliptic: {
      if (i_ == 0 && j_ == 0) return "1";
      if (i_ == 0) return "y";
      if (j_ == 0) return power_string("x", i_);
      return power_string("x", i_) + "*y";
    }
    case CurveFamily::klein: {
      if (b_.is_zero() && c_.is_zero() && a_.is_one()) return "x/y";
      if (a_.is_zero() && c_.is_zero() && b_.is_one()) return "1";
      if (a_.is_zero() && b_.is_zero() && c_.is_one()) return "z/y";
      return "(" + a_.to_string() + "*x+" + b_.to_string() + "*y+" +
             c_.to_string() + "*z)/y";
    }
  }
  throw std::logic_error("unreachable");
}

RRBasis::RRBasis(CurveFamily family, const Field& f, long degree, long genus,
                 std::vector<RationalFunction> functions, std::string divisor,
                 std::optional<curve::EllipticCurve> ec)
    : family_(family), f_(f), degree_(degree), genus_(genus),
      functions_(std::move(functions)), divisor_(std::move(divisor)),
      ec_(std::move(ec)) {
  if (functions_.empty()) throw std::invalid_argument("empty basis");
  for (const auto& fn : functions_)
    if (fn.family() != family_ || fn.field() != f_)
      throw std::invalid_argument("basis function family or field mismatch");
}

std::vector<std::string> RRBasis::function_names() const {
  std::vector<std::string> names;
  names.reserve(functions_.size());
  for (const auto& fn : functions_) names.push_back(fn.to_string());
  return names;
}

RRBasis basis_genus0(const Field& f, long m) {
  if (m < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<RationalFunction> fns;
  for (long i = 0; i <= m; ++i) fns.push_back(RationalFunction::line_monomial(f, i));
  return RRBasis(CurveFamily::rational, f, m, 0, std::move(fns),
                 std::to_string(m) + "*Pinf");
}

RRBasis basis_elliptic_mO(const curve::EllipticCurve& e, long m) {
  if (m < 1) throw std::invalid_argument("degree must be at least 1");
  const Field& f = e.field();
  std::vector<RationalFunction> fns;
  for (long order = 0; order <= m; ++order) {
    if (order == 1) continue;
    long j = order % 2;
    long i = (order - 3 * j) / 2;
    fns.push_back(RationalFunction::curve_monomial(f, i, j));
  }
  if (static_cast<long>(fns.size()) != m)
    throw std::logic_error("basis size disagrees with divisor degree");
  return RRBasis(CurveFamily::elliptic, f, m, 1, std::move(fns),
                 std::to_string(m) + "*O", e);
}

RRBasis basis_klein(const Field& f) {
  if (f.characteristic() != 2 || f.extension_degree() != 3)
    throw std::invalid_argument("the quartic basis is defined over GF(8)");
  std::vector<RationalFunction> fns = {
      RationalFunction::coordinate_ratio(f, f.one(), f.zero(), f.zero()),
      RationalFunction::coordinate_ratio(f, f.zero(), f.one(), f.zero()),
      RationalFunction::coordinate_ratio(f, f.zero(), f.zero(), f.one()),
  };
  return RRBasis(CurveFamily::klein, f, 4, 3, std::move(fns), "3*Q1+Q3");
}

linalg::Matrix evaluate_matrix(const RRBasis& basis,
                               const std::vector<EvalPoint>& points) {
  const Field& f = basis.field();
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (same_point(points[i], points[j]))
        throw std::invalid_argument("duplicate evaluation point " +
                                    to_string(points[i]));

  if (basis.family() == CurveFamily::elliptic) {
    const auto& e = *basis.elliptic_curve();
    for (const auto& p : points) {
      if (!std::holds_alternative<curve::Point>(p))
        throw std::invalid_argument("expected affine curve points");
      if (!e.contains(std::get<curve::Point>(p)))
        throw std::invalid_argument("point " + to_string(p) +
                                    " is not on the curve");
    }
  } else if (basis.family() == CurveFamily::klein) {
    curve::PlaneCurve q = curve::klein_quartic(f);
    for (const auto& p : points) {
      if (!std::holds_alternative<curve::ProjectivePoint>(p))
        throw std::invalid_argument("expected projective points");
      if (!q.contains(std::get<curve::ProjectivePoint>(p)))
        throw std::invalid_argument("point " + to_string(p) +
                                    " is not on the curve");
    }
  }

  linalg::Matrix m(f, basis.dimension(), points.size());
  for (size_t i = 0; i < basis.dimension(); ++i)
    for (size_t j = 0; j < points.size(); ++j)
      m.at(i, j) = basis.functions()[i].evaluate(points[j]);
  return m;
}

}  // namespace agss::funcspace
