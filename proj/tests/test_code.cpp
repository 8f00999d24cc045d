#include "doctest.h"

#include <set>
#include <vector>

#include "agss/code.hpp"
#include "agss/curve.hpp"
#include "agss/funcspace.hpp"

using agss::gf::Field;
using agss::gf::FieldElement;
using agss::curve::EllipticCurve;
using agss::curve::Point;
using agss::curve::ProjectivePoint;
using namespace agss::code;
namespace fs = agss::funcspace;
namespace linalg = agss::linalg;

namespace {

EllipticCurve order10_curve() {
  Field f(7);
  return EllipticCurve(f, f.zero(), f.zero(), f.zero(), f.from_integer(5),
                       f.from_integer(4));
}

EllipticCurve z3z3_curve() {
  Field f(2, 2);
  return EllipticCurve(f, f.zero(), f.one(), f.zero(), f.zero(), f.zero());
}

std::vector<fs::EvalPoint> line_points(const Field& f, long count) {
  std::vector<fs::EvalPoint> pts;
  for (long x = 0; x < count; ++x) pts.emplace_back(f.from_integer(x));
  return pts;
}

// P0 multiples on the order-10 curve, skipping the listed group values
std::vector<fs::EvalPoint> chain_points(const EllipticCurve& e,
                                        const std::set<long>& skip = {}) {
  const Field& f = e.field();
  Point p0(f.from_integer(3), f.from_integer(2));
  std::vector<fs::EvalPoint> pts;
  for (long v = 1; v <= 9; ++v)
    if (!skip.count(v)) pts.emplace_back(e.scalar_mul(v, p0));
  return pts;
}

LinearCode example1_code() {
  auto e = order10_curve();
  return eval_code(fs::basis_elliptic_mO(e, 3), chain_points(e));
}

LinearCode example3_code() {
  auto e = order10_curve();
  return eval_code(fs::basis_elliptic_mO(e, 4), chain_points(e, {5}));
}

LinearCode example4_code() {
  auto e = z3z3_curve();
  std::vector<fs::EvalPoint> d;
  for (const auto& p : rational_points(e))
    if (!p.is_infinity()) d.emplace_back(p);
  return eval_code(fs::basis_elliptic_mO(e, 4), d);
}

std::vector<fs::EvalPoint> klein_d(const Field& f) {
  ProjectivePoint q2(f.zero(), f.one(), f.zero());
  std::vector<fs::EvalPoint> d = {fs::EvalPoint(q2)};
  for (const auto& p : rational_points(agss::curve::klein_quartic(f)))
    if (!p.y().is_zero() && !(p == q2)) d.emplace_back(p);
  return d;
}

LinearCode klein_code() {
  Field f(2, 3);
  return eval_code(fs::basis_klein(f), klein_d(f));
}

}  // namespace

TEST_SUITE("code") {

TEST_CASE("evaluation codes have the designed parameters") {
  Field f(7);
  auto rs = eval_code(fs::basis_genus0(f, 1), line_points(f, 5));
  CHECK(rs.length() == 5);
  CHECK(rs.dimension() == 2);

  auto c1 = example1_code();
  CHECK(c1.length() == 9);
  CHECK(c1.dimension() == 3);
  REQUIRE(c1.origin().has_value());
  CHECK(c1.origin()->m == 3);
  CHECK(c1.origin()->genus == 1);
  CHECK_FALSE(c1.origin()->dualized);

  auto kl = klein_code();
  CHECK(kl.length() == 22);
  CHECK(kl.dimension() == 3);
}

TEST_CASE("degree window is enforced") {
  Field f(7);
  CHECK_THROWS_AS(eval_code(fs::basis_genus0(f, 5), line_points(f, 5)),
                  std::invalid_argument);
  auto e = order10_curve();
  CHECK_THROWS_AS(eval_code(fs::basis_elliptic_mO(e, 9), chain_points(e)),
                  std::invalid_argument);
  // the quartic divisor sits exactly at m = 2g-2 and is allowed
  CHECK_NOTHROW(klein_code());
}

TEST_CASE("generator construction validates rank and shape") {
  Field f(7);
  linalg::Matrix bad(f, 2, 3);
  bad.at(0, 0) = f.one();
  bad.at(1, 0) = f.from_integer(2);
  CHECK_THROWS_AS(LinearCode{bad}, std::invalid_argument);
  auto reduced = LinearCode::from_row_space(bad);
  CHECK(reduced.dimension() == 1);
  CHECK(reduced.length() == 3);
  linalg::Matrix zero(f, 2, 3);
  CHECK_THROWS_AS(LinearCode::from_row_space(zero), std::invalid_argument);
}

TEST_CASE("dual codes annihilate and complement the original") {
  std::vector<LinearCode> corpus = {example1_code(), example3_code(),
                                    example4_code(), klein_code()};
  Field f7(7);
  corpus.push_back(eval_code(fs::basis_genus0(f7, 2), line_points(f7, 5)));
  for (const auto& c : corpus) {
    auto d = dual_code(c);
    CHECK(d.length() == c.length());
    CHECK(d.dimension() + c.dimension() == c.length());
    CHECK((c.generator() * d.generator().transpose()).is_zero());
    CHECK(dual_code(d).generator().same_row_space(c.generator()));
    if (c.origin()) {
      CHECK(d.origin()->dualized);
      CHECK(d.origin()->m == c.origin()->m);
    }
  }
  auto c1 = example1_code();
  CHECK(dual_code(c1).dimension() == 6);
  CHECK(dual_code(klein_code()).dimension() == 19);
}

TEST_CASE("codeword iteration is complete and lexicographic") {
  Field f2(2);
  linalg::Matrix rep(f2, 1, 2);
  rep.at(0, 0) = f2.one();
  rep.at(0, 1) = f2.one();
  LinearCode r(rep);
  CodewordIterator it(r);
  auto first = it.next();
  REQUIRE(first.has_value());
  CHECK(first->first[0].is_zero());
  CHECK(first->second[0].is_zero());
  auto second = it.next();
  REQUIRE(second.has_value());
  CHECK(second->first[0].is_one());
  CHECK(second->second[1].is_one());
  CHECK_FALSE(it.next().has_value());

  long count = 0;
  CodewordIterator all(example1_code());
  while (all.next()) ++count;
  CHECK(count == 343);

  count = 0;
  CodewordIterator kit(klein_code());
  while (kit.next()) ++count;
  CHECK(count == 512);

  CHECK_THROWS_AS(CodewordIterator(dual_code(klein_code())), BudgetExceeded);
}

TEST_CASE("minimum distances match exhaustive oracles") {
  Field f(7);
  CHECK(min_distance(eval_code(fs::basis_genus0(f, 1), line_points(f, 5))) == 4);
  CHECK(min_distance(example1_code()) == 6);
  CHECK(min_distance(example3_code()) == 4);
  CHECK(min_distance(example4_code()) == 4);
  CHECK(min_distance(klein_code()) == 18);

  Field f2(2);
  linalg::Matrix rep(f2, 1, 6);
  for (size_t j = 0; j < 6; ++j) rep.at(0, j) = f2.one();
  CHECK(min_distance(LinearCode(rep)) == 6);
}

TEST_CASE("the column route agrees with enumeration and handles big duals") {
  // force the parity-check route with a tiny codeword budget
  CHECK(min_distance(example1_code(), 2, kDefaultSubsetBudget) == 6);
  CHECK(min_distance(example3_code(), 2, kDefaultSubsetBudget) == 4);
  CHECK(min_distance(dual_code(klein_code())) == 3);
  CHECK_THROWS_AS(min_distance(dual_code(klein_code()), 2, 10), BudgetExceeded);
}

TEST_CASE("genus-0 codes meet the singleton bound") {
  Field f(7);
  for (long n = 4; n <= 7; ++n)
    for (long m = 1; m < n - 1; ++m) {
      auto c = eval_code(fs::basis_genus0(f, m), line_points(f, n));
      CHECK(min_distance(c) == n - static_cast<long>(c.dimension()) + 1);
    }
}

TEST_CASE("distance bounds floor at one") {
  CHECK(ag_distance_bounds(9, 3, 1) == std::make_pair(6L, 3L));
  CHECK(ag_distance_bounds(22, 4, 3) == std::make_pair(18L, 1L));
  CHECK(ag_distance_bounds(8, 3, 0) == std::make_pair(5L, 5L));
  CHECK(ag_distance_bounds(4, 6, 0) == std::make_pair(1L, 8L));
}

TEST_CASE("distances dominate the designed bounds across the corpus") {
  struct Row {
    LinearCode c;
    long n, m, g;
  };
  std::vector<Row> rows = {{example1_code(), 9, 3, 1},
                           {example3_code(), 8, 4, 1},
                           {example4_code(), 8, 4, 1},
                           {klein_code(), 22, 4, 3}};
  for (const auto& r : rows) {
    auto bounds = ag_distance_bounds(r.n, r.m, r.g);
    CHECK(min_distance(r.c) >= bounds.first);
    CHECK(min_distance(dual_code(r.c)) >= bounds.second);
  }
}

TEST_CASE("containment and encoding") {
  auto c = example1_code();
  const Field& f = c.field();
  std::vector<FieldElement> msg = {f.from_integer(1), f.from_integer(2),
                                   f.from_integer(3)};
  auto w = c.encode(msg);
  CHECK(w.size() == 9);
  CHECK(c.contains(w));
  w[0] += f.one();
  CHECK_FALSE(c.contains(w));
  CHECK_THROWS_AS(c.contains({f.one()}), std::invalid_argument);
}

TEST_CASE("puncturing drops one coordinate") {
  auto c = example1_code();
  auto p = punctured(c, 0);
  CHECK(p.length() == 8);
  CHECK(p.dimension() == 3);
  CHECK_THROWS_AS(punctured(c, 9), std::invalid_argument);
}

TEST_CASE("coordinatewise products") {
  Field f(7);
  std::vector<FieldElement> a = {f.from_integer(2), f.from_integer(3)};
  std::vector<FieldElement> b = {f.from_integer(4), f.from_integer(5)};
  auto p = schur_product(a, b);
  CHECK(p[0] == f.one());
  CHECK(p[1] == f.one());
  CHECK_THROWS_AS(schur_product(a, {f.one()}), std::invalid_argument);
}

TEST_CASE("span membership with explicit coefficients") {
  Field f(7);
  std::vector<FieldElement> e1 = {f.one(), f.zero()};
  std::vector<FieldElement> e2 = {f.zero(), f.one()};
  auto sol = schur_span_contains({e1, e2}, e1);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0].is_one());
  CHECK((*sol)[1].is_zero());

  CHECK_FALSE(schur_span_contains({}, e1).has_value());
  auto empty = schur_span_contains({}, {f.zero(), f.zero()});
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
}

TEST_CASE("tensor-squared secret column membership per variant") {
  Field f(7);
  auto cl = eval_code(fs::basis_genus0(f, 2), line_points(f, 5));

  auto tensor_columns = [](const LinearCode& c) {
    std::vector<std::vector<FieldElement>> cols;
    size_t k = c.dimension();
    for (size_t j = 0; j < c.length(); ++j) {
      auto col = c.generator().col(j);
      std::vector<FieldElement> t;
      t.reserve(k * k);
      for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) t.push_back(col[a] * col[b]);
      cols.push_back(t);
    }
    return cols;
  };

  // the dual (sharing) code admits a recombination of the secret column
  auto om = tensor_columns(dual_code(cl));
  auto sol = schur_span_contains({om.begin() + 1, om.end()}, om[0]);
  REQUIRE(sol.has_value());
  // verify the witness
  const auto& target = om[0];
  std::vector<FieldElement> acc(target.size(), f.zero());
  for (size_t i = 0; i < sol->size(); ++i)
    for (size_t r = 0; r < target.size(); ++r) acc[r] += (*sol)[i] * om[i + 1][r];
  for (size_t r = 0; r < target.size(); ++r) CHECK(acc[r] == target[r]);

  // the functional code does not: five independent tensor squares
  auto fn = tensor_columns(cl);
  CHECK_FALSE(schur_span_contains({fn.begin() + 1, fn.end()}, fn[0]).has_value());
}

TEST_CASE("self-duality classification") {
  // [8,4] from the degree-4 divisor on the order-10 curve: monomial witness
  auto ex3 = example3_code();
  auto r3 = self_duality(ex3);
  CHECK(r3.kind == SelfDualityKind::monomial);
  REQUIRE(r3.diagonal.has_value());
  {
    const auto& m = ex3.generator();
    const auto& d = *r3.diagonal;
    for (const auto& x : d) CHECK_FALSE(x.is_zero());
    for (size_t a = 0; a < 4; ++a)
      for (size_t b = 0; b < 4; ++b) {
        FieldElement acc = m.field().zero();
        for (size_t j = 0; j < 8; ++j) acc += m.at(a, j) * d[j] * m.at(b, j);
        CHECK(acc.is_zero());
      }
  }

  // [8,4] on the GF(4) curve: exactly self-dual
  auto ex4 = example4_code();
  auto r4 = self_duality(ex4);
  CHECK(r4.kind == SelfDualityKind::exact);
  REQUIRE(r4.diagonal.has_value());
  for (const auto& x : *r4.diagonal) CHECK(x.is_one());
  CHECK(dual_code(ex4).generator().same_row_space(ex4.generator()));

  // binary repetition [2,1] is exactly self-dual
  Field f2(2);
  linalg::Matrix rep(f2, 1, 2);
  rep.at(0, 0) = f2.one();
  rep.at(0, 1) = f2.one();
  CHECK(self_duality(LinearCode(rep)).kind == SelfDualityKind::exact);

  // wrong dimension
  CHECK(self_duality(example1_code()).kind == SelfDualityKind::none);

  // right dimension, no witness: generator picks out fixed coordinates
  linalg::Matrix pick(f2, 2, 4);
  pick.at(0, 0) = f2.one();
  pick.at(1, 1) = f2.one();
  CHECK(self_duality(LinearCode(pick)).kind == SelfDualityKind::none);
}

}  // TEST_SUITE
