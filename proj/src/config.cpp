#include "agss/config.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace agss::config {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using gf::Field;
using gf::FieldElement;

json parsed(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ConfigError(std::string("missing key: ") + key);
  return j.at(key);
}

long integer(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer())
    throw ConfigError(std::string(key) + " must be an integer");
  return v.get<long>();
}

std::string text_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_string())
    throw ConfigError(std::string(key) + " must be a string");
  return v.get<std::string>();
}

std::vector<long> long_list(const json& v, const char* what) {
  if (!v.is_array())
    throw ConfigError(std::string(what) + " must be an array of integers");
  std::vector<long> out;
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw ConfigError(std::string(what) + " must be an array of integers");
    out.push_back(e.get<long>());
  }
  return out;
}

FieldElement element_at(const Field& f, long index, const char* what) {
  if (index < 0 || index >= f.order())
    throw ConfigError(std::string(what) + " index " + std::to_string(index) +
                      " outside GF(" + std::to_string(f.order()) + ")");
  return f.element(index);
}

curve::Point affine_point(const Field& f, const std::vector<long>& xy,
                          const char* what) {
  if (xy.size() != 2)
    throw ConfigError(std::string(what) + " must be an [x, y] pair");
  return curve::Point(element_at(f, xy[0], what), element_at(f, xy[1], what));
}

std::string group_name(const curve::GroupStructure& g) {
  if (g.n1() == 1) return "Z" + std::to_string(g.n2());
  if (g.n2() == 1) return "Z" + std::to_string(g.n1());
  return "Z" + std::to_string(g.n1()) + " x Z" + std::to_string(g.n2());
}

std::vector<curve::Point> elliptic_points(const curve::EllipticCurve& e,
                                          const curve::GroupStructure& g,
                                          const PointRule& r) {
  const Field& f = e.field();
  std::vector<curve::Point> pts;
  if (r.rule == "explicit") {
    if (r.list.size() < 2)
      throw ConfigError("explicit point list needs a secret plus participants");
    for (const auto& xy : r.list) {
      auto p = affine_point(f, xy, "point");
      if (!e.contains(p))
        throw ConfigError("point " + p.to_string() + " is not on the curve");
      pts.push_back(p);
    }
  } else if (r.rule == "subgroup") {
    auto gen = affine_point(f, r.generator, "generator");
    if (!e.contains(gen))
      throw ConfigError("generator " + gen.to_string() + " is not on the curve");
    if (r.order < 3) throw ConfigError("subgroup order must be at least 3");
    for (long v = 1; v < r.order; ++v) {
      auto p = e.scalar_mul(v, gen);
      if (p.is_infinity())
        throw ConfigError("generator order is smaller than stated");
      pts.push_back(p);
    }
    if (!e.scalar_mul(r.order, gen).is_infinity())
      throw ConfigError("stated order does not annihilate the generator");
  } else if (r.rule == "all-minus-zero") {
    if (r.secret_label.size() != 2)
      throw ConfigError("secret_label must be a group label [i, j]");
    const long i = r.secret_label[0], j = r.secret_label[1];
    if (i < 0 || i >= g.n1() || j < 0 || j >= g.n2() || (i == 0 && j == 0))
      throw ConfigError("secret_label must name a nonzero group element");
    pts.push_back(g.at_coordinates(i, j));
    for (long a = 0; a < g.n1(); ++a)
      for (long b = 0; b < g.n2(); ++b) {
        if ((a == 0 && b == 0) || (a == i && b == j)) continue;
        pts.push_back(g.at_coordinates(a, b));
      }
  } else {
    throw ConfigError("point rule " + r.rule +
                      " does not apply to the elliptic family");
  }
  return pts;
}

std::vector<funcspace::EvalPoint> klein_points(const Field& f,
                                               const PointRule& r) {
  std::vector<funcspace::EvalPoint> pts;
  if (r.rule == "klein-standard") {
    curve::ProjectivePoint q2(f.zero(), f.one(), f.zero());
    pts.emplace_back(q2);
    for (const auto& p : rational_points(curve::klein_quartic(f)))
      if (!p.y().is_zero() && !(p == q2)) pts.emplace_back(p);
  } else if (r.rule == "explicit") {
    auto quartic = curve::klein_quartic(f);
    for (const auto& xyz : r.list) {
      if (xyz.size() != 3)
        throw ConfigError("klein points must be [x, y, z] triples");
      curve::ProjectivePoint p(element_at(f, xyz[0], "point"),
                               element_at(f, xyz[1], "point"),
                               element_at(f, xyz[2], "point"));
      if (!quartic.contains(p))
        throw ConfigError("point " + p.to_string() + " is not on the quartic");
      pts.emplace_back(p);
    }
  } else {
    throw ConfigError("point rule " + r.rule +
                      " does not apply to the klein family");
  }
  return pts;
}

}  // namespace

SchemeConfig parse_config(const std::string& text) {
  json j = parsed(text);
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  SchemeConfig c;

  const json& fj = member(j, "field");
  c.field.p = integer(fj, "p");
  c.field.k = fj.contains("k") ? integer(fj, "k") : 1;
  if (c.field.p < 2) throw ConfigError("field characteristic must be at least 2");
  if (c.field.k < 1) throw ConfigError("field degree must be at least 1");

  const json& cj = member(j, "curve");
  c.family = text_member(cj, "family");
  if (c.family == "elliptic") {
    c.coefficients = long_list(member(cj, "coefficients"), "coefficients");
    if (c.coefficients.size() != 5)
      throw ConfigError("elliptic coefficients must be [a1, a3, a2, a4, a6]");
  } else if (c.family == "genus0" || c.family == "klein") {
    if (cj.contains("coefficients"))
      throw ConfigError("coefficients apply only to the elliptic family");
  } else {
    throw ConfigError("unknown curve family: " + c.family);
  }

  const json& pj = member(j, "points");
  c.points.rule = text_member(pj, "rule");
  const std::string& r = c.points.rule;
  if (r == "explicit") {
    const json& lj = member(pj, "list");
    if (!lj.is_array() || lj.empty())
      throw ConfigError("explicit rule needs a nonempty point list");
    for (const json& e : lj) c.points.list.push_back(long_list(e, "point"));
  } else if (r == "subgroup") {
    c.points.generator = long_list(member(pj, "generator"), "generator");
    c.points.order = integer(pj, "order");
  } else if (r == "all-minus-zero") {
    c.points.secret_label = long_list(member(pj, "secret_label"), "secret_label");
  } else if (r == "affine-line") {
    c.points.count = integer(pj, "count");
    if (c.points.count < 2)
      throw ConfigError("affine-line needs at least 2 points");
  } else if (r == "klein-standard") {
  } else {
    throw ConfigError("unknown point rule: " + r);
  }

  c.m = integer(j, "m");
  if (c.m < 1) throw ConfigError("m must be at least 1");
  if (c.family == "klein" && c.m != 4)
    throw ConfigError("the klein family fixes m = 4");

  const std::string v = text_member(j, "variant");
  if (v == "omega")
    c.variant = lsss::Variant::omega;
  else if (v == "functional")
    c.variant = lsss::Variant::functional;
  else
    throw ConfigError("variant must be omega or functional");

  if (j.contains("seed")) {
    const json& sj = j.at("seed");
    if (!sj.is_number_integer() || sj.get<long long>() < 0)
      throw ConfigError("seed must be a non-negative integer");
    c.seed = sj.get<uint64_t>();
  }

  if (j.contains("budgets")) {
    const json& bj = j.at("budgets");
    if (bj.contains("subsets")) c.subset_budget = integer(bj, "subsets");
    if (bj.contains("codewords")) c.codeword_budget = integer(bj, "codewords");
    if (bj.contains("randomness")) c.randomness_budget = integer(bj, "randomness");
    if (c.subset_budget < 1 || c.codeword_budget < 1 || c.randomness_budget < 1)
      throw ConfigError("budgets must be positive");
  }
  return c;
}

SchemeConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const SchemeConfig& c) {
  ordered_json j;
  j["field"]["p"] = c.field.p;
  j["field"]["k"] = c.field.k;
  j["curve"]["family"] = c.family;
  if (c.family == "elliptic") j["curve"]["coefficients"] = c.coefficients;
  ordered_json pj;
  pj["rule"] = c.points.rule;
  if (c.points.rule == "explicit") pj["list"] = c.points.list;
  if (c.points.rule == "subgroup") {
    pj["generator"] = c.points.generator;
    pj["order"] = c.points.order;
  }
  if (c.points.rule == "all-minus-zero")
    pj["secret_label"] = c.points.secret_label;
  if (c.points.rule == "affine-line") pj["count"] = c.points.count;
  j["points"] = pj;
  j["m"] = c.m;
  j["variant"] = lsss::to_string(c.variant);
  j["seed"] = c.seed;
  j["budgets"]["subsets"] = c.subset_budget;
  j["budgets"]["codewords"] = c.codeword_budget;
  j["budgets"]["randomness"] = c.randomness_budget;
  return j.dump(2) + "\n";
}

BuiltScheme build_scheme(const SchemeConfig& c) {
  Field f = c.field.k == 1 ? Field(c.field.p) : Field(c.field.p, c.field.k);

  if (c.family == "genus0") {
    std::vector<funcspace::EvalPoint> pts;
    if (c.points.rule == "affine-line") {
      if (c.points.count > f.order())
        throw ConfigError("affine-line count exceeds the field size");
      for (long x = 0; x < c.points.count; ++x) pts.emplace_back(f.element(x));
    } else if (c.points.rule == "explicit") {
      for (const auto& enc : c.points.list) {
        if (enc.size() != 1)
          throw ConfigError("genus0 points must be single coordinates [x]");
        pts.emplace_back(element_at(f, enc[0], "point"));
      }
    } else {
      throw ConfigError("point rule " + c.points.rule +
                        " does not apply to the genus0 family");
    }
    auto basis = funcspace::basis_genus0(f, c.m);
    try {
      auto scheme = lsss::scheme_from_ag(basis, pts, c.variant, c.seed);
      return BuiltScheme{std::move(scheme), std::move(pts), c.family,
                         c.m,               basis.genus(),  f.order(),
                         "",                std::nullopt};
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  if (c.family == "elliptic") {
    for (long idx : c.coefficients) element_at(f, idx, "coefficient");
    curve::EllipticCurve e(f, f.element(c.coefficients[0]),
                           f.element(c.coefficients[1]),
                           f.element(c.coefficients[2]),
                           f.element(c.coefficients[3]),
                           f.element(c.coefficients[4]));
    auto g = curve::group_structure(e);
    auto curve_pts = elliptic_points(e, g, c.points);
    std::vector<funcspace::EvalPoint> pts(curve_pts.begin(), curve_pts.end());
    auto basis = funcspace::basis_elliptic_mO(e, c.m);
    try {
      auto scheme = lsss::scheme_from_ag(basis, pts, c.variant, c.seed);
      return BuiltScheme{std::move(scheme), std::move(pts), c.family,
                         c.m,               basis.genus(),  g.size(),
                         group_name(g),     std::move(g)};
    } catch (const std::invalid_argument& e2) {
      throw ConfigError(e2.what());
    }
  }

  auto pts = klein_points(f, c.points);
  auto basis = funcspace::basis_klein(f);
  const long count =
      static_cast<long>(rational_points(curve::klein_quartic(f)).size());
  try {
    auto scheme = lsss::scheme_from_ag(basis, pts, c.variant, c.seed);
    return BuiltScheme{std::move(scheme), std::move(pts), c.family,
                       c.m,               basis.genus(),  count,
                       "",                std::nullopt};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

DemoSpec parse_demo(const std::string& text, const Field& f) {
  json j = parsed(text);
  const json& gj = member(j, "gates");
  if (!gj.is_array() || gj.empty())
    throw ConfigError("gates must be a nonempty array");
  std::vector<mpc::Gate> gates;
  for (const json& g : gj) {
    const std::string op = text_member(g, "op");
    if (op == "input") {
      long owner = integer(g, "owner");
      if (owner < 1) throw ConfigError("input owner must be at least 1");
      gates.push_back(mpc::input_gate(static_cast<size_t>(owner)));
    } else if (op == "add" || op == "mul") {
      long a = integer(g, "a"), b = integer(g, "b");
      if (a < 0 || b < 0) throw ConfigError("gate operands must be non-negative");
      gates.push_back(op == "add"
                          ? mpc::add_gate(static_cast<size_t>(a),
                                          static_cast<size_t>(b))
                          : mpc::mul_gate(static_cast<size_t>(a),
                                          static_cast<size_t>(b)));
    } else if (op == "scale") {
      long a = integer(g, "a");
      if (a < 0) throw ConfigError("gate operands must be non-negative");
      gates.push_back(mpc::scale_gate(
          element_at(f, integer(g, "constant"), "constant"),
          static_cast<size_t>(a)));
    } else if (op == "output") {
      long a = integer(g, "a");
      if (a < 0) throw ConfigError("gate operands must be non-negative");
      gates.push_back(mpc::output_gate(static_cast<size_t>(a)));
    } else {
      throw ConfigError("unknown gate op: " + op);
    }
  }

  std::map<size_t, FieldElement> inputs;
  const json& ij = member(j, "inputs");
  if (!ij.is_object()) throw ConfigError("inputs must be an object");
  for (auto it = ij.begin(); it != ij.end(); ++it) {
    size_t owner = 0;
    try {
      owner = std::stoul(it.key());
    } catch (const std::exception&) {
      throw ConfigError("input keys must be party numbers: " + it.key());
    }
    if (owner < 1) throw ConfigError("input keys must be at least 1");
    if (!it.value().is_number_integer())
      throw ConfigError("input values must be field element indices");
    inputs.emplace(owner, element_at(f, it.value().get<long>(), "input"));
  }

  try {
    return DemoSpec{mpc::Circuit(std::move(gates)), std::move(inputs)};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

DemoSpec load_demo(const std::string& path, const Field& f) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read circuit file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_demo(buf.str(), f);
}

}  // namespace agss::config
