// Worked-example reference lists embedded as data, the same families derived
// from scratch by the library, and their comparison. Mismatches are reported,
// never asserted, so list-level errata in the source material fail no build.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "agss/config.hpp"

namespace agss::reference {

// Set-by-set comparison of a published family against the derived one.
// Sets are point-label vectors. Totals count distinct sets; duplicate
// published entries are recorded in notes.
struct Comparison {
  std::string instance;
  std::string quantity;
  std::vector<std::vector<std::string>> matched;
  std::vector<std::vector<std::string>> paper_only;
  std::vector<std::vector<std::string>> derived_only;
  std::vector<std::string> notes;
  std::size_t paper_total = 0;
  std::size_t derived_total = 0;
};

// Named configurations for every embedded instance: example1, example1-m6,
// example2, example3, example4, klein, shamir, mpc-audit.
config::SchemeConfig example_config(const std::string& name);

Comparison verify_example1();
Comparison verify_example2();
Comparison verify_example3();
Comparison verify_example4();
Comparison verify_klein();
std::vector<Comparison> verify_all();

// Independent projective line enumeration over GF(8): participant index sets
// (1-based) whose complements are maximal collinear subsets on lines
// avoiding the secret point (0:1:0).
std::vector<std::vector<std::size_t>> klein_line_minimal_qualified();
// The narrower printed family: complements of the seven three-point lines
// through (0:0:1) and of the 4-point lines only.
std::vector<std::vector<std::size_t>> klein_printed_minimal_qualified();

}  // namespace agss::reference
