#include "agss/reference.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "agss/curve.hpp"
#include "agss/matroid.hpp"

namespace agss::reference {

namespace {

using config::SchemeConfig;
using gf::Field;
using curve::ProjectivePoint;

// published minimal qualified sets of the order-10 instance, given as the
// complements' index sets within participants 1..8
const std::vector<std::vector<int>> kExample1Pairs = {
    {1, 3}, {1, 5}, {1, 7}, {1, 8}, {2, 3},
    {2, 6}, {3, 5}, {3, 7}, {5, 6}, {5, 7}};
const std::vector<std::vector<int>> kExample1Triples = {
    {1, 2, 4}, {2, 7, 8}, {3, 6, 8}, {4, 5, 8}, {4, 6, 7}};

// published complement sets of the nine-point instance
const std::vector<std::vector<std::string>> kExample2Triples = {
    {"P20", "P21", "P02"}, {"P01", "P20", "P22"}, {"P11", "P12", "P20"}};
const std::vector<std::vector<std::string>> kExample2Pairs = {
    {"P01", "P02"}, {"P11", "P22"}, {"P12", "P21"}};

// published circuit complements of the order-10 self-dual instance
const std::vector<std::vector<std::string>> kExample3Quads = {
    {"P0", "P1", "P2", "P4"}, {"P0", "P1", "P7", "P8"},
    {"P0", "P2", "P6", "P8"}, {"P0", "P3", "P5", "P8"},
    {"P0", "P3", "P6", "P7"}, {"P1", "P2", "P6", "P7"},
    {"P1", "P3", "P5", "P7"}, {"P2", "P3", "P5", "P6"}};
const std::vector<std::vector<std::string>> kExample3Triples = {
    {"P0", "P1", "P6"}, {"P0", "P2", "P5"}, {"P2", "P7", "P8"},
    {"P3", "P6", "P8"}, {"P0", "P5", "P7"}, {"P1", "P5", "P6"},
    {"P1", "P3", "P8"}, {"P2", "P3", "P7"}, {"P0", "P1", "P5"},
    {"P0", "P5", "P6"}, {"P0", "P2", "P7"}, {"P1", "P6", "P8"},
    {"P1", "P3", "P6"}, {"P2", "P5", "P7"}, {"P3", "P7", "P8"}};

// published circuit complements of the nine-point self-dual instance; the
// five-element list is kept exactly as printed, duplicate included
const std::vector<std::vector<std::string>> kExample4Quads = {
    {"P01", "P02", "P10", "P20"}, {"P01", "P02", "P11", "P22"},
    {"P01", "P02", "P12", "P21"}, {"P10", "P20", "P11", "P22"},
    {"P10", "P20", "P12", "P21"}, {"P12", "P21", "P11", "P22"}};
const std::vector<std::vector<std::string>> kExample4Triples = {
    {"P01", "P10", "P22"}, {"P01", "P11", "P21"}, {"P01", "P12", "P20"},
    {"P02", "P10", "P21"}, {"P02", "P11", "P20"}, {"P02", "P12", "P22"},
    {"P10", "P11", "P12"}, {"P20", "P21", "P22"}, {"P02", "P10", "P22"},
    {"P01", "P20", "P22"}, {"P01", "P10", "P11"}, {"P02", "P11", "P21"},
    {"P01", "P22", "P21"}, {"P01", "P11", "P12"}, {"P02", "P12", "P20"},
    {"P01", "P21", "P20"}, {"P01", "P12", "P10"}, {"P01", "P10", "P21"},
    {"P02", "P20", "P21"}, {"P02", "P10", "P12"}, {"P01", "P11", "P20"},
    {"P02", "P22", "P20"}, {"P02", "P11", "P10"}, {"P01", "P12", "P22"},
    {"P02", "P12", "P22"}, {"P02", "P11", "P12"}, {"P20", "P12", "P11"},
    {"P10", "P22", "P12"}, {"P10", "P11", "P21"}, {"P10", "P21", "P22"},
    {"P20", "P12", "P22"}, {"P20", "P21", "P11"}};

// (length, lexicographic) gets P2 before P10
bool label_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool set_less(const std::vector<std::string>& a,
              const std::vector<std::string>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return label_less(a[i], b[i]);
  return false;
}

std::vector<std::vector<std::string>> normalized(
    std::vector<std::vector<std::string>> fam) {
  for (auto& s : fam) std::sort(s.begin(), s.end(), label_less);
  std::sort(fam.begin(), fam.end(), set_less);
  return fam;
}

Comparison compare(std::string instance, std::string quantity,
                   std::vector<std::vector<std::string>> paper,
                   std::vector<std::vector<std::string>> derived,
                   std::vector<std::string> notes) {
  paper = normalized(std::move(paper));
  const size_t printed = paper.size();
  paper.erase(std::unique(paper.begin(), paper.end()), paper.end());
  if (paper.size() != printed)
    notes.push_back(std::to_string(printed - paper.size()) +
                    " duplicate printed entry removed");
  derived = normalized(std::move(derived));
  derived.erase(std::unique(derived.begin(), derived.end()), derived.end());

  Comparison out;
  out.instance = std::move(instance);
  out.quantity = std::move(quantity);
  out.notes = std::move(notes);
  out.paper_total = paper.size();
  out.derived_total = derived.size();
  std::set_intersection(paper.begin(), paper.end(), derived.begin(),
                        derived.end(), std::back_inserter(out.matched),
                        set_less);
  std::set_difference(paper.begin(), paper.end(), derived.begin(),
                      derived.end(), std::back_inserter(out.paper_only),
                      set_less);
  std::set_difference(derived.begin(), derived.end(), paper.begin(),
                      paper.end(), std::back_inserter(out.derived_only),
                      set_less);
  return out;
}

std::vector<std::string> complement_labels(
    const std::vector<std::string>& universe,
    const std::vector<std::string>& a) {
  std::vector<std::string> out;
  for (const auto& u : universe)
    if (std::find(a.begin(), a.end(), u) == a.end()) out.push_back(u);
  return out;
}

std::vector<std::vector<std::string>> complements_in(
    const std::vector<std::string>& universe,
    const std::vector<std::vector<std::string>>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(complement_labels(universe, s));
  return out;
}

// labels of the nonzero group elements in scheme coordinate order, secret
// label first
std::vector<std::string> z33_labels(long si, long sj) {
  std::vector<std::string> out = {"P" + std::to_string(si) +
                                  std::to_string(sj)};
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) {
      if ((a == 0 && b == 0) || (a == si && b == sj)) continue;
      out.push_back("P" + std::to_string(a) + std::to_string(b));
    }
  return out;
}

// participant index sets to label sets; coord_labels[i] names coordinate i
// and participants start at coordinate 1
std::vector<std::vector<std::string>> labeled_sets(
    const std::vector<std::vector<size_t>>& fam,
    const std::vector<std::string>& coord_labels) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : fam) {
    std::vector<std::string> labels;
    for (size_t i : s) labels.push_back(coord_labels.at(i));
    out.push_back(std::move(labels));
  }
  return out;
}

std::vector<std::vector<std::string>> derived_circuit_complements(
    const std::string& name, const std::vector<std::string>& coord_labels) {
  auto built = config::build_scheme(example_config(name));
  auto circuits = matroid::circuits_from_code(built.scheme.sharing_code());
  std::vector<std::vector<std::string>> out;
  for (const auto& c : circuits.circuits) {
    std::vector<std::string> a;
    for (size_t i = 0; i < coord_labels.size(); ++i)
      if (std::find(c.begin(), c.end(), i) == c.end())
        a.push_back(coord_labels[i]);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<ProjectivePoint> klein_participant_points(const Field& f) {
  ProjectivePoint q2(f.zero(), f.one(), f.zero());
  std::vector<ProjectivePoint> out;
  for (const auto& p : rational_points(curve::klein_quartic(f)))
    if (!p.y().is_zero() && !(p == q2)) out.push_back(p);
  return out;
}

bool incident(const ProjectivePoint& line, const ProjectivePoint& p) {
  return (line.x() * p.x() + line.y() * p.y() + line.z() * p.z()).is_zero();
}

// complements of the maximal collinear participant subsets on lines avoiding
// the secret point; printed_only keeps just the 4-point lines and the
// 3-point lines through (0:0:1)
std::vector<std::vector<size_t>> collinear_complements(bool printed_only) {
  Field f(2, 3);
  auto participants = klein_participant_points(f);
  ProjectivePoint q2(f.zero(), f.one(), f.zero());
  ProjectivePoint q3(f.zero(), f.zero(), f.one());
  std::set<std::vector<size_t>> fam;
  for (const auto& line : curve::projective_plane_points(f)) {
    if (incident(line, q2)) continue;
    std::vector<size_t> hit;
    for (size_t i = 0; i < participants.size(); ++i)
      if (incident(line, participants[i])) hit.push_back(i + 1);
    const bool keep = printed_only
                          ? hit.size() == 4 ||
                                (hit.size() == 3 && incident(line, q3))
                          : hit.size() >= 2;
    if (!keep) continue;
    std::vector<size_t> complement;
    for (size_t i = 1; i <= participants.size(); ++i)
      if (std::find(hit.begin(), hit.end(), i) == hit.end())
        complement.push_back(i);
    fam.insert(std::move(complement));
  }
  std::vector<std::vector<size_t>> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::string> numbered_labels(size_t count) {
  std::vector<std::string> out = {"P0"};
  for (size_t i = 1; i <= count; ++i) out.push_back("P" + std::to_string(i));
  return out;
}

}  // namespace

config::SchemeConfig example_config(const std::string& name) {
  SchemeConfig c;
  c.variant = lsss::Variant::omega;
  c.seed = 7;
  if (name == "example1" || name == "example1-m6" || name == "example3") {
    c.field = {7, 1};
    c.family = "elliptic";
    c.coefficients = {0, 0, 0, 5, 4};
    if (name == "example3") {
      c.points.rule = "explicit";
      c.points.list = {{3, 2}, {2, 6}, {4, 2}, {0, 5},
                       {0, 2}, {4, 5}, {2, 1}, {3, 5}};
      c.m = 4;
    } else {
      c.points.rule = "subgroup";
      c.points.generator = {3, 2};
      c.points.order = 10;
      c.m = name == "example1" ? 3 : 6;
    }
  } else if (name == "example2" || name == "example4") {
    c.field = {2, 2};
    c.family = "elliptic";
    c.coefficients = {0, 1, 0, 0, 0};
    c.points.rule = "all-minus-zero";
    if (name == "example2") {
      c.points.secret_label = {1, 0};
      c.m = 3;
    } else {
      c.points.secret_label = {0, 1};
      c.m = 4;
    }
  } else if (name == "klein") {
    c.field = {2, 3};
    c.family = "klein";
    c.points.rule = "klein-standard";
    c.m = 4;
  } else if (name == "shamir") {
    c.field = {7, 1};
    c.family = "genus0";
    c.points.rule = "affine-line";
    c.points.count = 5;
    c.m = 2;
  } else if (name == "mpc-audit") {
    c.field = {5, 1};
    c.family = "genus0";
    c.points.rule = "affine-line";
    c.points.count = 5;
    c.m = 2;
  } else {
    throw std::invalid_argument("unknown instance: " + name);
  }
  return c;
}

Comparison verify_example1() {
  auto built = config::build_scheme(example_config("example1"));
  auto labels = numbered_labels(8);
  auto derived = labeled_sets(
      built.scheme.minimal_access_structure().minimal_qualified(), labels);

  std::vector<std::string> universe(labels.begin() + 1, labels.end());
  std::vector<std::vector<std::string>> paper;
  for (const auto& src : {kExample1Pairs, kExample1Triples})
    for (const auto& a : src) {
      std::vector<std::string> named;
      for (int i : a) named.push_back("P" + std::to_string(i));
      paper.push_back(complement_labels(universe, named));
    }
  return compare("example1", "minimal qualified sets", paper, derived, {});
}

Comparison verify_example2() {
  auto built = config::build_scheme(example_config("example2"));
  auto labels = z33_labels(1, 0);
  auto derived = labeled_sets(
      built.scheme.minimal_access_structure().minimal_qualified(), labels);

  std::vector<std::string> universe(labels.begin() + 1, labels.end());
  std::vector<std::vector<std::string>> paper =
      complements_in(universe, kExample2Triples);
  for (const auto& s : complements_in(universe, kExample2Pairs))
    paper.push_back(s);
  return compare(
      "example2", "minimal qualified sets", paper, derived,
      {"the three printed 4-element sets are complements of label triples "
       "with group sum (1,0), not zero"});
}

Comparison verify_example3() {
  std::vector<std::string> labels = {"P0", "P1", "P2", "P3",
                                     "P5", "P6", "P7", "P8"};
  auto derived = derived_circuit_complements("example3", labels);
  std::vector<std::vector<std::string>> paper = kExample3Quads;
  for (const auto& s : kExample3Triples) paper.push_back(s);
  return compare("example3", "circuit complements", paper, derived,
                 {"the printed quad list includes P4, which is outside the "
                  "point set"});
}

Comparison verify_example4() {
  auto labels = z33_labels(0, 1);
  auto derived = derived_circuit_complements("example4", labels);
  std::vector<std::vector<std::string>> paper = kExample4Quads;
  for (const auto& s : kExample4Triples) paper.push_back(s);
  return compare("example4", "circuit complements", paper, derived, {});
}

Comparison verify_klein() {
  auto built = config::build_scheme(example_config("klein"));
  auto labels = numbered_labels(21);
  auto derived = labeled_sets(
      built.scheme.minimal_access_structure().minimal_qualified(), labels);
  auto paper = labeled_sets(klein_printed_minimal_qualified(), labels);
  return compare(
      "klein", "minimal qualified sets", paper, derived,
      {"printed family generated from its line description: complements of "
       "the seven 3-point lines through (0:0:1) and of the 4-point lines",
       "the derived family additionally contains complements of 2-point "
       "lines and of the seven 3-point lines through (1:0:0)"});
}

std::vector<Comparison> verify_all() {
  return {verify_example1(), verify_example2(), verify_example3(),
          verify_example4(), verify_klein()};
}

std::vector<std::vector<size_t>> klein_line_minimal_qualified() {
  return collinear_complements(false);
}

std::vector<std::vector<size_t>> klein_printed_minimal_qualified() {
  return collinear_complements(true);
}

}  // namespace agss::reference
