// Scheme descriptions as JSON documents: field, curve family, point
// selection rule, divisor degree, variant, seed and budgets. Parsing is
// strict and serialization is canonical so a parse/serialize round trip is
// byte-stable. Also builds schemes and MPC demo circuits from the parsed
// form.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "agss/code.hpp"
#include "agss/curve.hpp"
#include "agss/funcspace.hpp"
#include "agss/gf.hpp"
#include "agss/lsss.hpp"
#include "agss/mpc.hpp"

namespace agss::config {

inline constexpr long kDefaultRandomnessBudget = 1'000'000;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  long p = 0;
  long k = 1;
};

// How the divisor points are chosen. The secret point always ends up first.
//   explicit    : encoded point list, first entry is the secret
//   subgroup    : multiples 1..order-1 of a generator point
//   all-minus-zero : every nonzero group element in label order, with the
//                    secret label hoisted to the front
//   affine-line : x = 0..count-1 on the line (genus 0)
//   klein-standard : the infinity-like point (0:1:0) plus the 21 rational
//                    points with y != 0
struct PointRule {
  std::string rule;
  std::vector<std::vector<long>> list;  // explicit: [x] line, [x,y] curve, [x,y,z] plane
  std::vector<long> generator;          // subgroup: [x, y], element indices
  long order = 0;                       // subgroup: group order of the generator
  std::vector<long> secret_label;       // all-minus-zero: [i, j]
  long count = 0;                       // affine-line
};

struct SchemeConfig {
  FieldSpec field;
  std::string family;              // "genus0" | "elliptic" | "klein"
  std::vector<long> coefficients;  // elliptic: [a1, a3, a2, a4, a6] element indices
  PointRule points;
  long m = 0;
  lsss::Variant variant = lsss::Variant::omega;
  uint64_t seed = 0;
  long subset_budget = code::kDefaultSubsetBudget;
  long codeword_budget = code::kDefaultCodewordBudget;
  long randomness_budget = kDefaultRandomnessBudget;
};

SchemeConfig parse_config(const std::string& text);
SchemeConfig load_config(const std::string& path);
// Canonical JSON with fixed key order, two-space indent, trailing newline.
std::string serialize_config(const SchemeConfig& c);

// The scheme plus the construction facts reports need.
struct BuiltScheme {
  lsss::Scheme scheme;
  std::vector<funcspace::EvalPoint> points;  // secret first
  std::string family;
  long m = 0;
  long genus = 0;
  long rational_point_count = 0;
  std::string group_description;  // "Z10", "Z3 x Z3", empty off the elliptic family
  std::optional<curve::GroupStructure> group;
};

BuiltScheme build_scheme(const SchemeConfig& c);

// MPC demo description: gate list plus owner-indexed inputs, elements given
// by field index.
struct DemoSpec {
  mpc::Circuit circuit;
  std::map<size_t, gf::FieldElement> inputs;
};

DemoSpec parse_demo(const std::string& text, const gf::Field& f);
DemoSpec load_demo(const std::string& path, const gf::Field& f);

}  // namespace agss::config
