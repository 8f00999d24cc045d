#include "doctest.h"

#include "agss/gf.hpp"
#include "agss/linalg.hpp"

using agss::gf::Field;
using agss::gf::FieldElement;
using agss::linalg::Matrix;

namespace {

Matrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<FieldElement>> r;
  for (const auto& row : rows) {
    std::vector<FieldElement> out;
    for (long v : row) out.push_back(f.element(v % f.order()));
    r.push_back(out);
  }
  return Matrix::from_rows(f, r);
}

// Vandermonde rows (1, x, x^2, ...) evaluated at the given nodes.
Matrix vandermonde(const Field& f, const std::vector<long>& nodes, size_t rows) {
  Matrix m(f, rows, nodes.size());
  for (size_t j = 0; j < nodes.size(); ++j) {
    FieldElement x = f.element(nodes[j]);
    for (size_t i = 0; i < rows; ++i) m.at(i, j) = x.pow(static_cast<long>(i));
  }
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank of a Vandermonde block matches the determinant oracle") {
  Field f(7);
  // det of the square 3x3 block at nodes {1,2,3} is prod (x_j - x_i) = 2.
  Matrix v3 = vandermonde(f, {1, 2, 3}, 3);
  FieldElement det =
      v3.at(0, 0) * (v3.at(1, 1) * v3.at(2, 2) - v3.at(1, 2) * v3.at(2, 1)) -
      v3.at(0, 1) * (v3.at(1, 0) * v3.at(2, 2) - v3.at(1, 2) * v3.at(2, 0)) +
      v3.at(0, 2) * (v3.at(1, 0) * v3.at(2, 1) - v3.at(1, 1) * v3.at(2, 0));
  CHECK(det == f.element(2));
  CHECK(v3.rank() == 3);
  // Distinct nodes keep full row rank even with more columns.
  CHECK(vandermonde(f, {0, 1, 2, 3, 4}, 3).rank() == 3);
  // Repeated nodes drop it.
  CHECK(vandermonde(f, {1, 1, 2}, 3).rank() == 2);
}

TEST_CASE("rref produces a row-reduced identity block") {
  Field f(7);
  Matrix m = from_ints(f, {{1, 2, 0}, {0, 1, 3}, {2, 0, 1}});
  std::vector<size_t> piv;
  Matrix r = m.rref(&piv);
  REQUIRE(piv.size() == 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      CHECK(r.at(i, j) == (i == j ? f.one() : f.zero()));
}

TEST_CASE("kernel basis annihilates and has the right dimension") {
  Field f(7);
  Matrix m = from_ints(f, {{1, 2, 3, 4}, {2, 4, 6, 1}});
  Matrix k = m.kernel_basis();
  CHECK(m.rank() + k.rows() == m.cols());
  for (size_t i = 0; i < k.rows(); ++i) {
    auto mv = m.apply(k.row(i));
    for (const auto& x : mv) CHECK(x.is_zero());
  }
  // Full-rank square matrix has a trivial kernel.
  CHECK(from_ints(f, {{1, 2, 0}, {0, 1, 3}, {2, 0, 1}}).kernel_basis().rows() == 0);
}

TEST_CASE("solve finds witnesses and detects inconsistency") {
  Field f(7);
  Matrix m = from_ints(f, {{1, 2}, {3, 4}});
  auto x = m.solve({f.element(5), f.element(6)});
  REQUIRE(x.has_value());
  auto mx = m.apply(*x);
  CHECK(mx[0] == f.element(5));
  CHECK(mx[1] == f.element(6));

  Matrix sing = from_ints(f, {{1, 0}, {1, 0}});
  CHECK(!sing.solve({f.one(), f.element(2)}).has_value());
  auto y = sing.solve({f.one(), f.one()});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == f.one());
}

TEST_CASE("apply_left agrees with transpose-apply") {
  Field f(2, 2);
  Matrix m = from_ints(f, {{1, 2, 3}, {0, 1, 2}});
  std::vector<FieldElement> u = {f.element(2), f.element(3)};
  CHECK(m.apply_left(u) == m.transpose().apply(u));
}

TEST_CASE("row space comparison ignores basis choice") {
  Field f(7);
  Matrix a = from_ints(f, {{1, 2, 3}, {0, 1, 1}});
  Matrix b = from_ints(f, {{2, 4, 6}, {1, 3, 4}});  // scaled row + row sum
  Matrix c = from_ints(f, {{1, 0, 0}, {0, 1, 1}});
  CHECK(a.same_row_space(b));
  CHECK(!a.same_row_space(c));
}

TEST_CASE("product against hand-computed entries over GF(4)") {
  Field f(2, 2);
  Matrix a = from_ints(f, {{2, 1}, {0, 3}});   // [[w,1],[0,w+1]]
  Matrix b = from_ints(f, {{1, 2}, {3, 0}});
  Matrix p = a * b;
  // w*1 + 1*(w+1) = 1, w*w + 1*0 = w+1, (w+1)^2 = w
  CHECK(p.at(0, 0) == f.one());
  CHECK(p.at(0, 1) == f.element(3));
  CHECK(p.at(1, 0) == f.element(3) * f.element(3));
  CHECK(p.at(1, 0) == f.element(2));
  CHECK(p.at(1, 1).is_zero());
}

TEST_CASE("selected_columns keeps order and duplicates") {
  Field f(7);
  Matrix m = from_ints(f, {{1, 2, 3}, {4, 5, 6}});
  Matrix s = m.selected_columns({2, 0, 2});
  CHECK(s.cols() == 3);
  CHECK(s.at(0, 0) == f.element(3));
  CHECK(s.at(1, 1) == f.element(4));
  CHECK(s.at(0, 2) == f.element(3));
}

}  // TEST_SUITE
