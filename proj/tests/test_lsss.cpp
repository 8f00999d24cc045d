#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "agss/code.hpp"
#include "agss/curve.hpp"
#include "agss/funcspace.hpp"
#include "agss/lsss.hpp"
#include "agss/rng.hpp"

using agss::gf::Field;
using agss::gf::FieldElement;
using agss::curve::EllipticCurve;
using agss::curve::Point;
using agss::curve::ProjectivePoint;
using namespace agss::lsss;
namespace code = agss::code;
namespace fs = agss::funcspace;
namespace rng = agss::rng;

namespace {

EllipticCurve order10_curve() {
  Field f(7);
  return EllipticCurve(f, f.zero(), f.zero(), f.zero(), f.from_integer(5),
                       f.from_integer(4));
}

std::vector<fs::EvalPoint> chain_points(const EllipticCurve& e) {
  const Field& f = e.field();
  Point p0(f.from_integer(3), f.from_integer(2));
  std::vector<fs::EvalPoint> pts;
  for (long v = 1; v <= 9; ++v) pts.emplace_back(e.scalar_mul(v, p0));
  return pts;
}

std::vector<fs::EvalPoint> line_points(const Field& f, long count) {
  std::vector<fs::EvalPoint> pts;
  for (long x = 0; x < count; ++x) pts.emplace_back(f.from_integer(x));
  return pts;
}

Scheme ex1_scheme(Variant v, long m = 3, uint64_t seed = 7) {
  auto e = order10_curve();
  return scheme_from_ag(fs::basis_elliptic_mO(e, m), chain_points(e), v, seed);
}

Scheme shamir_scheme(long nodes, long m, Variant v, uint64_t seed = 7) {
  Field f(7);
  return scheme_from_ag(fs::basis_genus0(f, m), line_points(f, nodes), v,
                        seed);
}

std::vector<fs::EvalPoint> klein_d(const Field& f) {
  ProjectivePoint q2(f.zero(), f.one(), f.zero());
  std::vector<fs::EvalPoint> d = {fs::EvalPoint(q2)};
  for (const auto& p : rational_points(agss::curve::klein_quartic(f)))
    if (!p.y().is_zero() && !(p == q2)) d.emplace_back(p);
  return d;
}

Scheme klein_scheme(uint64_t seed = 7) {
  Field f(2, 3);
  return scheme_from_ag(fs::basis_klein(f), klein_d(f), Variant::omega, seed);
}

std::vector<size_t> subset_of(uint64_t mask, size_t n) {
  std::vector<size_t> out;
  for (size_t i = 1; i <= n; ++i)
    if (mask >> (i - 1) & 1) out.push_back(i);
  return out;
}

std::map<size_t, size_t> size_histogram(
    const std::vector<std::vector<size_t>>& sets) {
  std::map<size_t, size_t> h;
  for (const auto& s : sets) ++h[s.size()];
  return h;
}

std::vector<FieldElement> shares_for(const ShareVector& sv,
                                     const std::vector<size_t>& a) {
  std::vector<FieldElement> out;
  for (size_t i : a) out.push_back(sv.shares[i - 1]);
  return out;
}

const std::vector<std::vector<size_t>> kExample1Minimal = {
    {1, 2, 3, 5, 8},          {1, 2, 3, 6, 7},          {1, 2, 4, 5, 7},
    {1, 3, 4, 5, 6},          {3, 5, 6, 7, 8},          {1, 2, 3, 4, 6, 8},
    {1, 2, 3, 4, 7, 8},       {1, 2, 4, 5, 6, 8},       {1, 2, 4, 6, 7, 8},
    {1, 3, 4, 5, 7, 8},       {1, 4, 5, 6, 7, 8},       {2, 3, 4, 5, 6, 7},
    {2, 3, 4, 5, 6, 8},       {2, 3, 4, 6, 7, 8},       {2, 4, 5, 6, 7, 8}};

}  // namespace

TEST_SUITE("lsss") {

TEST_CASE("schemes carry the expected code parameters") {
  auto omega = ex1_scheme(Variant::omega);
  CHECK(omega.participants() == 8);
  CHECK(omega.sharing_code().length() == 9);
  CHECK(omega.sharing_code().dimension() == 6);
  CHECK(omega.variant() == Variant::omega);
  CHECK(omega.field().order() == 7);
  CHECK(omega.participant_label(3) == "P3");
  CHECK_THROWS_AS(omega.participant_label(9), std::invalid_argument);

  auto functional = ex1_scheme(Variant::functional);
  CHECK(functional.sharing_code().dimension() == 3);

  auto sh = shamir_scheme(5, 2, Variant::omega);
  CHECK(sh.participants() == 4);
  CHECK(sh.sharing_code().dimension() == 2);

  auto klein = klein_scheme();
  CHECK(klein.participants() == 21);
  CHECK(klein.sharing_code().dimension() == 19);
  CHECK(klein.field().order() == 8);
}

TEST_CASE("degenerate sharing codes are rejected") {
  Field f(7);
  auto one = f.one();
  auto zero = f.zero();

  auto rows1 = agss::linalg::Matrix::from_rows(f, {{one, one}});
  CHECK_THROWS_AS(Scheme{code::LinearCode(rows1)}, std::invalid_argument);

  auto rows2 = agss::linalg::Matrix::from_rows(f, {{zero, one, one}});
  CHECK_THROWS_WITH_AS(Scheme{code::LinearCode(rows2)},
                       "secret column of the sharing code is zero",
                       std::invalid_argument);

  auto rows3 = agss::linalg::Matrix::from_rows(f, {{one, zero, one}});
  CHECK_THROWS_WITH_AS(Scheme{code::LinearCode(rows3)},
                       "dual of the sharing code has a weight-1 codeword",
                       std::invalid_argument);

  auto rows4 = agss::linalg::Matrix::from_rows(
      f, {{one, zero, zero}, {zero, one, one}});
  CHECK_THROWS_WITH_AS(Scheme{code::LinearCode(rows4)},
                       "full participant set cannot determine the secret",
                       std::invalid_argument);
}

TEST_CASE("sharing is seeded, reproducible, and codeword-valid") {
  auto s1 = ex1_scheme(Variant::omega, 3, 42);
  auto s2 = ex1_scheme(Variant::omega, 3, 42);
  const Field& f = s1.field();

  std::vector<ShareVector> first;
  for (long v = 0; v < 5; ++v) first.push_back(s1.share(f.from_integer(v)));
  for (long v = 0; v < 5; ++v) {
    auto sv = s2.share(f.from_integer(v));
    CHECK(sv.secret == first[v].secret);
    CHECK(sv.shares == first[v].shares);
  }
  s1.reseed(42);
  for (long v = 0; v < 5; ++v) {
    auto sv = s1.share(f.from_integer(v));
    CHECK(sv.shares == first[v].shares);
  }

  for (const auto& sv : first) {
    CHECK(sv.shares.size() == 8);
    std::vector<FieldElement> word = {sv.secret};
    word.insert(word.end(), sv.shares.begin(), sv.shares.end());
    CHECK(s1.sharing_code().contains(word));
  }

  rng::TapeSource zeros(std::vector<uint32_t>(5, 0));
  auto sv = s1.share_with(f.zero(), zeros);
  CHECK(sv.secret == f.zero());
  for (const auto& c : sv.shares) CHECK(c.is_zero());

  rng::SeededSource src(99);
  for (int t = 0; t < 20; ++t) {
    auto secret = f.element(src.next_digit(7));
    auto v = s1.share(secret);
    CHECK(v.secret == secret);
  }
}

TEST_CASE("every share coordinate is equidistributed over the randomness") {
  auto scheme = ex1_scheme(Variant::omega);
  const Field& f = scheme.field();
  auto secret = f.from_integer(3);

  std::vector<std::vector<long>> counts(8, std::vector<long>(7, 0));
  std::vector<uint32_t> digits(5, 0);
  long total = 0;
  for (;;) {
    rng::TapeSource tape(digits);
    auto sv = scheme.share_with(secret, tape);
    ++total;
    for (size_t i = 0; i < 8; ++i) ++counts[i][sv.shares[i].index()];
    size_t pos = digits.size();
    while (pos > 0 && digits[pos - 1] + 1 == 7) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  CHECK(total == 16807);
  for (const auto& row : counts)
    for (long c : row) CHECK(c == 2401);
}

TEST_CASE("qualified sets reconstruct the shared secret") {
  struct Case {
    Scheme scheme;
    size_t rounds;
  };
  std::vector<Case> cases;
  cases.push_back({ex1_scheme(Variant::omega), 1000});
  cases.push_back({ex1_scheme(Variant::functional), 1000});
  cases.push_back({ex1_scheme(Variant::omega, 6), 1000});
  cases.push_back({shamir_scheme(5, 2, Variant::omega), 1000});
  cases.push_back({shamir_scheme(5, 2, Variant::functional), 1000});

  for (auto& c : cases) {
    auto as = c.scheme.minimal_access_structure();
    const Field& f = c.scheme.field();
    rng::SeededSource secrets(11);
    std::vector<size_t> everyone(c.scheme.participants());
    std::iota(everyone.begin(), everyone.end(), size_t{1});
    for (size_t round = 0; round < c.rounds; ++round) {
      auto secret =
          f.element(secrets.next_digit(static_cast<uint32_t>(f.order())));
      auto sv = c.scheme.share(secret);
      for (const auto& a : as.minimal_qualified())
        REQUIRE(c.scheme.reconstruct(a, shares_for(sv, a)) == secret);
      REQUIRE(c.scheme.reconstruct(everyone, shares_for(sv, everyone)) ==
              secret);
    }
  }
}

TEST_CASE("quartic scheme reconstructs through every minimal set") {
  auto scheme = klein_scheme();
  auto as = scheme.minimal_access_structure();
  const Field& f = scheme.field();
  rng::SeededSource secrets(13);
  for (size_t round = 0; round < 100; ++round) {
    auto secret = f.element(secrets.next_digit(8));
    auto sv = scheme.share(secret);
    for (const auto& a : as.minimal_qualified())
      REQUIRE(scheme.reconstruct(a, shares_for(sv, a)) == secret);
  }
}

TEST_CASE("published qualified set recovers and unqualified sets error") {
  auto scheme = ex1_scheme(Variant::omega);
  const Field& f = scheme.field();
  auto secret = f.from_integer(5);
  auto sv = scheme.share(secret);

  std::vector<size_t> complement_of_1_3 = {2, 4, 5, 6, 7, 8};
  CHECK(scheme.reconstruct(complement_of_1_3,
                           shares_for(sv, complement_of_1_3)) == secret);

  CHECK_THROWS_AS(scheme.reconstruct({1}, shares_for(sv, {1})),
                  UnqualifiedError);
  std::vector<size_t> complement_of_1_6 = {2, 3, 4, 5, 7, 8};
  CHECK(!scheme.is_qualified(complement_of_1_6));
  CHECK_THROWS_AS(
      scheme.reconstruct(complement_of_1_6, shares_for(sv, complement_of_1_6)),
      UnqualifiedError);

  CHECK_THROWS_AS(scheme.reconstruct({2, 4}, {sv.shares[1]}),
                  std::invalid_argument);
  CHECK_THROWS_AS(scheme.reconstruction_vector({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(scheme.reconstruction_vector({0}), std::invalid_argument);
}

TEST_CASE("reconstruction vectors are unit-secret dual codewords") {
  auto check_vectors = [](const Scheme& scheme,
                          const std::vector<size_t>& a) {
    auto v = scheme.reconstruction_vector(a);
    REQUIRE(v.has_value());
    const Field& f = scheme.field();
    CHECK((*v)[0] == f.one());
    std::set<size_t> allowed(a.begin(), a.end());
    allowed.insert(0);
    for (size_t j = 0; j < v->size(); ++j)
      if (!allowed.count(j)) CHECK((*v)[j].is_zero());
    for (const auto& e : scheme.sharing_code().generator().apply(*v))
      CHECK(e.is_zero());
  };

  check_vectors(ex1_scheme(Variant::omega), {1, 2, 3, 5, 8});
  check_vectors(ex1_scheme(Variant::functional), {1, 2, 3});
  auto klein = klein_scheme();
  auto minimal = klein.minimal_access_structure().minimal_qualified();
  check_vectors(klein, minimal.front());
  check_vectors(klein, minimal.back());
}

TEST_CASE("rank and dual-codeword qualification tests agree everywhere") {
  for (auto variant : {Variant::omega, Variant::functional}) {
    auto scheme = ex1_scheme(variant);
    auto as = scheme.minimal_access_structure();
    for (uint64_t mask = 0; mask < 256; ++mask) {
      auto a = subset_of(mask, 8);
      bool by_rank = scheme.is_qualified(a);
      bool by_dual_word = scheme.reconstruction_vector(a).has_value();
      bool by_structure = as.is_qualified(a);
      CHECK(by_rank == by_dual_word);
      CHECK(by_rank == by_structure);
    }
  }
}

TEST_CASE("size bounds on qualification hold exhaustively") {
  auto scheme = ex1_scheme(Variant::omega);
  for (uint64_t mask = 0; mask < 256; ++mask) {
    auto a = subset_of(mask, 8);
    if (a.size() < 5) CHECK(!scheme.is_qualified(a));
    if (a.size() >= 7) CHECK(scheme.is_qualified(a));
  }
  auto sh = shamir_scheme(7, 4, Variant::omega);
  for (uint64_t mask = 0; mask < 64; ++mask) {
    auto a = subset_of(mask, 6);
    CHECK(sh.is_qualified(a) == (a.size() >= 2));
  }
}

TEST_CASE("example elliptic scheme matches the published minimal sets") {
  auto scheme = ex1_scheme(Variant::omega);
  auto dual_route = scheme.minimal_qualified_dual();
  auto scan_route = scheme.minimal_qualified_scan();
  CHECK(dual_route == kExample1Minimal);
  CHECK(scan_route == kExample1Minimal);
  CHECK(scheme.minimal_access_structure().minimal_qualified() ==
        kExample1Minimal);
}

TEST_CASE("minimal qualified families across the corpus") {
  auto func = ex1_scheme(Variant::functional);
  auto func_sets = func.minimal_qualified_dual();
  CHECK(func.minimal_qualified_scan() == func_sets);
  CHECK(func_sets.size() == 36);
  CHECK(size_histogram(func_sets) ==
        std::map<size_t, size_t>{{2, 3}, {3, 33}});

  auto m6 = ex1_scheme(Variant::omega, 6);
  auto m6_sets = m6.minimal_qualified_dual();
  CHECK(m6.minimal_qualified_scan() == m6_sets);
  CHECK(m6_sets.size() == 40);
  CHECK(size_histogram(m6_sets) == std::map<size_t, size_t>{{2, 2}, {3, 38}});

  auto sh = shamir_scheme(5, 2, Variant::omega);
  std::vector<std::vector<size_t>> pairs = {{1, 2}, {1, 3}, {1, 4},
                                            {2, 3}, {2, 4}, {3, 4}};
  CHECK(sh.minimal_qualified_dual() == pairs);
  CHECK(sh.minimal_qualified_scan() == pairs);
}

TEST_CASE("quartic scheme access structure") {
  auto scheme = klein_scheme();
  auto as = scheme.minimal_access_structure();
  const auto& minimal = as.minimal_qualified();
  CHECK(minimal.size() == 56);
  CHECK(size_histogram(minimal) ==
        std::map<size_t, size_t>{{17, 21}, {18, 14}, {19, 21}});

  for (size_t i = 0; i < 7; ++i) {
    std::vector<size_t> line_triple = {3 * i + 1, 3 * i + 2, 3 * i + 3};
    std::vector<size_t> complement;
    for (size_t p = 1; p <= 21; ++p)
      if (std::find(line_triple.begin(), line_triple.end(), p) ==
          line_triple.end())
        complement.push_back(p);
    CHECK(std::find(minimal.begin(), minimal.end(), complement) !=
          minimal.end());
  }

  CHECK(as.max_unqualified_size() == 19);
  CHECK(as.maximal_unqualified().size() == 868);
  CHECK(size_histogram(as.maximal_unqualified()) ==
        std::map<size_t, size_t>{{18, 847}, {19, 21}});
  CHECK(!as.threshold_value().has_value());
}

TEST_CASE("threshold detection") {
  CHECK(shamir_scheme(5, 2, Variant::omega)
            .minimal_access_structure()
            .threshold_value() == 2);
  CHECK(shamir_scheme(7, 4, Variant::omega)
            .minimal_access_structure()
            .threshold_value() == 2);
  CHECK(shamir_scheme(4, 1, Variant::omega)
            .minimal_access_structure()
            .threshold_value() == 2);
  CHECK(shamir_scheme(5, 2, Variant::functional)
            .minimal_access_structure()
            .threshold_value() == 3);
  CHECK(!ex1_scheme(Variant::omega)
             .minimal_access_structure()
             .threshold_value()
             .has_value());
  CHECK(!ex1_scheme(Variant::functional)
             .minimal_access_structure()
             .threshold_value()
             .has_value());
}

TEST_CASE("maximal unqualified sets match a direct lattice search") {
  auto brute = [](const AccessStructure& as) {
    size_t n = as.participants();
    std::vector<std::vector<size_t>> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      auto b = subset_of(mask, n);
      if (as.is_qualified(b)) continue;
      bool maximal = true;
      for (size_t x = 1; x <= n && maximal; ++x) {
        if (mask >> (x - 1) & 1) continue;
        auto bigger = subset_of(mask | uint64_t{1} << (x - 1), n);
        if (!as.is_qualified(bigger)) maximal = false;
      }
      if (maximal) out.push_back(b);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  };

  for (auto variant : {Variant::omega, Variant::functional}) {
    auto as = ex1_scheme(variant).minimal_access_structure();
    CHECK(as.maximal_unqualified() == brute(as));
  }
  auto sh = shamir_scheme(5, 2, Variant::omega).minimal_access_structure();
  CHECK(sh.maximal_unqualified() == brute(sh));

  auto ex1 = ex1_scheme(Variant::omega).minimal_access_structure();
  CHECK(ex1.maximal_unqualified().size() == 36);
  CHECK(size_histogram(ex1.maximal_unqualified()) ==
        std::map<size_t, size_t>{{5, 33}, {6, 3}});
  std::vector<std::vector<size_t>> six_sets = {
      {1, 2, 5, 6, 7, 8}, {1, 3, 4, 6, 7, 8}, {2, 3, 4, 5, 7, 8}};
  for (const auto& s : six_sets) {
    const auto& mu = ex1.maximal_unqualified();
    CHECK(std::find(mu.begin(), mu.end(), s) != mu.end());
  }

  auto func = ex1_scheme(Variant::functional).minimal_access_structure();
  CHECK(func.maximal_unqualified().size() == 15);
  CHECK(size_histogram(func.maximal_unqualified()) ==
        std::map<size_t, size_t>{{2, 10}, {3, 5}});
}

TEST_CASE("access structure construction validates its input") {
  CHECK_THROWS_AS(AccessStructure(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(AccessStructure(64, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(AccessStructure(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(AccessStructure(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(AccessStructure(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(AccessStructure(3, {{1}, {1, 2}}), std::invalid_argument);

  AccessStructure as(3, {{2, 1}, {3}});
  CHECK(as.minimal_qualified() ==
        std::vector<std::vector<size_t>>{{3}, {1, 2}});
  CHECK(as.is_qualified({1, 2, 3}));
  CHECK(as.is_qualified({3}));
  CHECK(!as.is_qualified({1}));
  CHECK(as.maximal_unqualified() ==
        std::vector<std::vector<size_t>>{{1}, {2}});
}

TEST_CASE("Q2 and Q3 verdicts across the corpus") {
  auto q = [](const Scheme& s) {
    auto as = s.minimal_access_structure();
    return std::make_pair(as.is_Q2(), as.is_Q3());
  };

  CHECK(q(ex1_scheme(Variant::omega)) == std::make_pair(false, false));
  CHECK(q(ex1_scheme(Variant::functional)) == std::make_pair(true, false));
  CHECK(q(ex1_scheme(Variant::omega, 6)) == std::make_pair(true, true));
  CHECK(q(shamir_scheme(5, 2, Variant::omega)) == std::make_pair(true, true));
  CHECK(q(shamir_scheme(7, 4, Variant::omega)) == std::make_pair(true, true));
  CHECK(q(shamir_scheme(4, 1, Variant::omega)) == std::make_pair(true, false));
  CHECK(q(klein_scheme()) == std::make_pair(false, false));

  AccessStructure lone(1, {{1}});
  CHECK(!lone.is_Q2());
  CHECK(!lone.is_Q3());
}

TEST_CASE("cheat parameters across the corpus") {
  auto r1 = ex1_scheme(Variant::omega).cheat_parameters();
  CHECK(r1.d_min == 2);
  CHECK(r1.d_cheat == 2);
  CHECK(r1.max_unqualified_size == 6);
  REQUIRE(r1.window.has_value());
  CHECK(*r1.window == std::make_pair(5L, 7L));
  CHECK(r1.window_ok == false);

  auto rf = ex1_scheme(Variant::functional).cheat_parameters();
  CHECK(rf.d_min == 5);
  CHECK(rf.d_cheat == 5);
  CHECK(rf.max_unqualified_size == 3);
  CHECK(*rf.window == std::make_pair(5L, 7L));
  CHECK(rf.window_ok == true);

  auto r6 = ex1_scheme(Variant::omega, 6).cheat_parameters();
  CHECK(r6.d_min == 5);
  CHECK(r6.d_cheat == 5);
  CHECK(*r6.window == std::make_pair(2L, 4L));
  CHECK(r6.window_ok == false);

  auto rs = shamir_scheme(5, 2, Variant::omega).cheat_parameters();
  CHECK(rs.d_min == 3);
  CHECK(rs.d_cheat == 3);
  CHECK(rs.max_unqualified_size == 1);
  CHECK(*rs.window == std::make_pair(2L, 2L));
  CHECK(rs.window_ok == false);

  auto rsf = shamir_scheme(5, 2, Variant::functional).cheat_parameters();
  CHECK(rsf.d_min == 2);
  CHECK(rsf.d_cheat == 2);
  CHECK(*rsf.window == std::make_pair(2L, 2L));
  CHECK(rsf.window_ok == true);

  auto rs6 = shamir_scheme(7, 4, Variant::functional).cheat_parameters();
  CHECK(rs6.d_min == 2);
  CHECK(rs6.d_cheat == 2);
  CHECK(rs6.window_ok == true);

  auto rk = klein_scheme().cheat_parameters();
  CHECK(rk.d_min == 2);
  CHECK(rk.d_cheat == 2);
  CHECK(rk.max_unqualified_size == 19);
  CHECK(*rk.window == std::make_pair(17L, 23L));
  CHECK(rk.window_ok == false);

  Scheme raw(code::LinearCode(ex1_scheme(Variant::omega).sharing_code()
                                  .generator()));
  auto rr = raw.cheat_parameters();
  CHECK(rr.d_min == 2);
  CHECK(rr.d_cheat == 2);
  CHECK(!rr.window.has_value());
  CHECK(!rr.window_ok.has_value());
}

TEST_CASE("multiplicative schemes expose valid recombination vectors") {
  struct Case {
    Scheme scheme;
    bool expect;
  };
  std::vector<Case> cases;
  cases.push_back({shamir_scheme(5, 2, Variant::omega), true});
  cases.push_back({shamir_scheme(7, 4, Variant::omega), true});
  cases.push_back({ex1_scheme(Variant::omega, 6), true});
  cases.push_back({ex1_scheme(Variant::functional), true});
  cases.push_back({ex1_scheme(Variant::omega), false});
  cases.push_back({klein_scheme(), false});

  for (auto& c : cases) {
    auto witness = c.scheme.multiplicativity();
    REQUIRE(witness.has_value() == c.expect);
    if (!witness) continue;
    const Field& f = c.scheme.field();
    const size_t n = c.scheme.participants();
    REQUIRE(witness->size() == n);
    rng::SeededSource secrets(3);
    for (int round = 0; round < 100; ++round) {
      auto s = f.element(secrets.next_digit(static_cast<uint32_t>(f.order())));
      auto t = f.element(secrets.next_digit(static_cast<uint32_t>(f.order())));
      auto sa = c.scheme.share(s);
      auto sb = c.scheme.share(t);
      FieldElement acc = f.zero();
      for (size_t i = 0; i < n; ++i)
        acc += (*witness)[i] * sa.shares[i] * sb.shares[i];
      REQUIRE(acc == s * t);
    }
  }
}

TEST_CASE("strong multiplicativity restricts to honest complements") {
  auto check_strong = [](const Scheme& scheme) {
    auto witness = scheme.strong_multiplicativity();
    REQUIRE(witness.has_value());
    auto as = scheme.minimal_access_structure();
    REQUIRE(witness->size() == as.maximal_unqualified().size());
    const Field& f = scheme.field();
    rng::SeededSource secrets(5);
    for (const auto& [complement, coeffs] : *witness) {
      REQUIRE(coeffs.size() == complement.size());
      auto s = f.element(secrets.next_digit(static_cast<uint32_t>(f.order())));
      auto t = f.element(secrets.next_digit(static_cast<uint32_t>(f.order())));
      auto sa = scheme.share(s);
      auto sb = scheme.share(t);
      FieldElement acc = f.zero();
      for (size_t j = 0; j < complement.size(); ++j)
        acc += coeffs[j] * sa.shares[complement[j] - 1] *
               sb.shares[complement[j] - 1];
      REQUIRE(acc == s * t);
    }
  };

  check_strong(shamir_scheme(5, 2, Variant::omega));
  check_strong(shamir_scheme(7, 4, Variant::omega));
  check_strong(ex1_scheme(Variant::omega, 6));

  CHECK(!ex1_scheme(Variant::functional).strong_multiplicativity().has_value());
  CHECK(!ex1_scheme(Variant::omega).strong_multiplicativity().has_value());
}

TEST_CASE("privacy audits separate qualified from unqualified views") {
  auto scheme = ex1_scheme(Variant::omega);
  const Field& f = scheme.field();
  auto s1 = f.from_integer(2);
  auto s2 = f.from_integer(6);

  auto small = scheme.privacy_audit({2, 4, 6, 8}, s1, s2);
  CHECK(!small.qualified);
  CHECK(small.distributions_match);
  CHECK(small.consistent);

  auto big = scheme.privacy_audit({2, 4, 5, 6, 7, 8}, s1, s2);
  CHECK(big.qualified);
  CHECK(!big.distributions_match);
  CHECK(big.consistent);

  auto empty = scheme.privacy_audit({}, s1, s2);
  CHECK(!empty.qualified);
  CHECK(empty.distributions_match);
  CHECK(empty.consistent);

  auto sh = shamir_scheme(5, 2, Variant::omega);
  auto g1 = sh.field().from_integer(1);
  auto g2 = sh.field().from_integer(4);
  auto lone = sh.privacy_audit({3}, g1, g2);
  CHECK(lone.distributions_match);
  CHECK(lone.consistent);
  auto pair = sh.privacy_audit({1, 3}, g1, g2);
  CHECK(pair.qualified);
  CHECK(!pair.distributions_match);
  CHECK(pair.consistent);
}

TEST_CASE("budget limits raise distinct errors") {
  auto klein = klein_scheme();
  const Field& f8 = klein.field();
  CHECK_THROWS_AS(klein.privacy_audit({1, 2}, f8.zero(), f8.one()),
                  code::BudgetExceeded);

  auto scheme = ex1_scheme(Variant::omega);
  CHECK_THROWS_AS(scheme.minimal_qualified_scan(10), code::BudgetExceeded);
  CHECK_THROWS_AS(scheme.minimal_qualified_dual(10), code::BudgetExceeded);
  CHECK_THROWS_AS(scheme.minimal_access_structure(10, 10),
                  code::BudgetExceeded);
}

}  // TEST_SUITE
