// Matroid circuits of linear codes (inclusion-minimal codeword supports),
// self-duality of the induced matroid, group-sum membership oracles for
// schemes built on elliptic curves, and the circuit/access-structure bridge.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agss/code.hpp"
#include "agss/curve.hpp"

namespace agss::matroid {

struct CircuitSet {
  std::size_t ground = 0;
  // each circuit ascending, the list sorted by size then lexicographically
  std::vector<std::vector<std::size_t>> circuits;
  std::string provenance;
};

// Inputs for the group-sum oracles: an ordered point list d on an elliptic
// curve with its group structure and a divisor degree m. Access tests
// (secret set) take subsets of the non-secret positions and decide whether
// the complement is a minimal qualified set; circuit tests (no secret) take
// subsets of all positions and decide whether the complement is a circuit.
struct OracleSpec {
  curve::GroupStructure group;
  std::vector<curve::Point> d;
  long m = 0;
  std::optional<std::size_t> secret;
};

// Supports of all q^k nonzero codewords, reduced to the inclusion-minimal
// ones. Ground sets are limited to 64 coordinates.
CircuitSet circuits_from_code(const code::LinearCode& c,
                              long codeword_budget = code::kDefaultCodewordBudget);

// Whether the complement of a (within the non-secret positions of spec.d)
// is a minimal qualified set of the degree-m scheme on those points:
// for |a| = m the group sum of a must vanish, for |a| = m-1 it must vanish
// outright or after adding one repeated element of a.
bool is_complement_minimal_qualified(const OracleSpec& spec,
                                     const std::vector<std::size_t>& a);

// Whether the complement of a (within spec.d) is a circuit of the matroid
// of the self-dual evaluation code on spec.d: for |a| = m the group sum of
// a must vanish, for |a| = m-1 it must vanish outright or after adding a
// nonzero element drawn from a itself or from the rational points outside
// spec.d. Requires |d| even, m = |d|/2, and total group sum zero.
bool is_complement_circuit(const OracleSpec& spec,
                           const std::vector<std::size_t>& a);

struct SelfDualityWitness {
  bool self_dual = false;
  CircuitSet circuits;
  CircuitSet dual_circuits;
};

// Compares the circuits of a code with those of its dual.
SelfDualityWitness matroid_self_dual(const code::LinearCode& c,
                                     long codeword_budget = code::kDefaultCodewordBudget);

// Secret coordinate 0: every circuit containing 0 yields the minimal
// qualified set circuit-minus-{0}.
std::vector<std::vector<std::size_t>> minimal_qualified_from_circuits(
    const CircuitSet& circuits);

}  // namespace agss::matroid
