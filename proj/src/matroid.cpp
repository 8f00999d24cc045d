#include "agss/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <utility>

namespace agss::matroid {

namespace {

bool size_lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::pair<long, long> reduce(const curve::GroupStructure& g, long i, long j) {
  long a = ((i % g.n1()) + g.n1()) % g.n1();
  long b = ((j % g.n2()) + g.n2()) % g.n2();
  return {a, b};
}

std::pair<long, long> coordinate_sum(const OracleSpec& spec,
                                     const std::vector<std::size_t>& a) {
  std::vector<curve::Point> pts;
  pts.reserve(a.size());
  for (std::size_t i : a) pts.push_back(spec.d[i]);
  return spec.group.sum(pts);
}

void check_subset(const OracleSpec& spec, const std::vector<std::size_t>& a) {
  if (spec.m < 1) throw std::invalid_argument("divisor degree must be positive");
  auto m = static_cast<std::size_t>(spec.m);
  if (a.size() != m && a.size() + 1 != m)
    throw std::invalid_argument("subset size must be m or m-1");
  std::set<std::size_t> seen;
  for (std::size_t i : a) {
    if (i >= spec.d.size()) throw std::invalid_argument("subset index out of range");
    if (spec.secret && i == *spec.secret)
      throw std::invalid_argument("subset contains the secret position");
    if (!seen.insert(i).second) throw std::invalid_argument("subset has duplicate indices");
  }
}

}  // namespace

CircuitSet circuits_from_code(const code::LinearCode& c, long codeword_budget) {
  if (c.length() > 64)
    throw std::invalid_argument("ground set larger than 64 coordinates");
  code::CodewordIterator it(c, codeword_budget);
  std::set<std::uint64_t> supports;
  while (auto w = it.next()) {
    std::uint64_t mask = 0;
    const auto& cw = w->second;
    for (std::size_t j = 0; j < cw.size(); ++j)
      if (!cw[j].is_zero()) mask |= std::uint64_t{1} << j;
    if (mask != 0) supports.insert(mask);
  }
  std::vector<std::uint64_t> by_weight(supports.begin(), supports.end());
  std::stable_sort(by_weight.begin(), by_weight.end(),
                   [](std::uint64_t x, std::uint64_t y) {
                     return std::popcount(x) < std::popcount(y);
                   });
  std::vector<std::uint64_t> kept;
  for (std::uint64_t mask : by_weight) {
    bool minimal = std::none_of(kept.begin(), kept.end(), [mask](std::uint64_t k) {
      return (k & mask) == k;
    });
    if (minimal) kept.push_back(mask);
  }
  CircuitSet out;
  out.ground = c.length();
  out.provenance = "code";
  for (std::uint64_t mask : kept) {
    std::vector<std::size_t> circuit;
    for (std::size_t j = 0; j < c.length(); ++j)
      if (mask & (std::uint64_t{1} << j)) circuit.push_back(j);
    out.circuits.push_back(std::move(circuit));
  }
  std::sort(out.circuits.begin(), out.circuits.end(), size_lex_less);
  return out;
}

bool is_complement_minimal_qualified(const OracleSpec& spec,
                                     const std::vector<std::size_t>& a) {
  if (!spec.secret) throw std::invalid_argument("spec has no secret position");
  if (*spec.secret >= spec.d.size())
    throw std::invalid_argument("secret position out of range");
  check_subset(spec, a);
  auto s = coordinate_sum(spec, a);
  if (a.size() == static_cast<std::size_t>(spec.m)) return s == std::pair<long, long>{0, 0};
  if (s == std::pair<long, long>{0, 0}) return true;
  for (std::size_t i : a) {
    auto c = spec.group.coordinates(spec.d[i]);
    if (reduce(spec.group, s.first + c.first, s.second + c.second) ==
        std::pair<long, long>{0, 0})
      return true;
  }
  return false;
}

bool is_complement_circuit(const OracleSpec& spec, const std::vector<std::size_t>& a) {
  if (spec.secret)
    throw std::invalid_argument("circuit oracle takes a spec without a secret position");
  if (spec.d.size() % 2 != 0 || spec.m * 2 != static_cast<long>(spec.d.size()))
    throw std::domain_error("point count must be even and twice the divisor degree");
  std::set<curve::Point> dset(spec.d.begin(), spec.d.end());
  if (dset.size() != spec.d.size())
    throw std::invalid_argument("point list has duplicates");
  if (spec.group.sum(spec.d) != std::pair<long, long>{0, 0})
    throw std::domain_error("group sum of the point list must be zero");
  check_subset(spec, a);
  auto s = coordinate_sum(spec, a);
  if (a.size() == static_cast<std::size_t>(spec.m)) return s == std::pair<long, long>{0, 0};
  if (s == std::pair<long, long>{0, 0}) return true;
  auto target = reduce(spec.group, -s.first, -s.second);
  std::set<std::pair<long, long>> candidates;
  for (const auto& p : spec.group.points())
    if (!dset.count(p)) candidates.insert(spec.group.coordinates(p));
  for (std::size_t i : a) candidates.insert(spec.group.coordinates(spec.d[i]));
  return candidates.count(target) > 0;
}

SelfDualityWitness matroid_self_dual(const code::LinearCode& c, long codeword_budget) {
  SelfDualityWitness w;
  w.circuits = circuits_from_code(c, codeword_budget);
  w.dual_circuits = circuits_from_code(code::dual_code(c), codeword_budget);
  w.self_dual = w.circuits.circuits == w.dual_circuits.circuits;
  return w;
}

std::vector<std::vector<std::size_t>> minimal_qualified_from_circuits(
    const CircuitSet& circuits) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : circuits.circuits) {
    auto hit = std::find(c.begin(), c.end(), std::size_t{0});
    if (hit == c.end()) continue;
    std::vector<std::size_t> qualified;
    for (std::size_t i : c)
      if (i != 0) qualified.push_back(i);
    out.push_back(std::move(qualified));
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

}  // namespace agss::matroid
