// Linear codes over finite fields: evaluation codes on curves, duals,
// distances, coordinatewise products, and self-duality certificates.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "agss/funcspace.hpp"
#include "agss/gf.hpp"
#include "agss/linalg.hpp"

namespace agss::code {

using gf::Field;
using gf::FieldElement;

inline constexpr long kDefaultCodewordBudget = 10'000'000;
inline constexpr long kDefaultSubsetBudget = 1L << 22;

// Thrown when an enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// true when q^k <= cap, computed without overflow
bool power_within(long q, long k, long cap);

// Where an evaluation code came from: enough to pick distance bounds and
// to label reports.
struct CodeOrigin {
  funcspace::CurveFamily family;
  long m;
  long genus;
  std::string divisor;
  std::vector<funcspace::EvalPoint> points;
  bool dualized = false;
};

class LinearCode {
 public:
  explicit LinearCode(linalg::Matrix generator,
                      std::optional<CodeOrigin> origin = std::nullopt);
  // reduces the rows to a basis first, so rank-deficient inputs are accepted
  static LinearCode from_row_space(const linalg::Matrix& rows,
                                   std::optional<CodeOrigin> origin = std::nullopt);

  const Field& field() const { return gen_.field(); }
  size_t length() const { return gen_.cols(); }
  size_t dimension() const { return gen_.rows(); }
  const linalg::Matrix& generator() const { return gen_; }
  const std::optional<CodeOrigin>& origin() const { return origin_; }

  bool contains(const std::vector<FieldElement>& word) const;
  std::vector<FieldElement> encode(const std::vector<FieldElement>& message) const;

 private:
  linalg::Matrix gen_;
  std::optional<CodeOrigin> origin_;
};

// Evaluations of the basis functions at the points of d. The divisor degree
// must satisfy 2g - 2 < m < |d|; the quartic basis, which sits exactly at
// m = 2g - 2, is admitted.
LinearCode eval_code(const funcspace::RRBasis& basis,
                     const std::vector<funcspace::EvalPoint>& d);

// Null-space dual with the origin's dualized flag toggled.
LinearCode dual_code(const LinearCode& c);

// Generator with one coordinate dropped; the row space is re-reduced.
LinearCode punctured(const LinearCode& c, size_t coord);

// Exact minimum weight. Enumerates all q^k codewords when that fits the
// codeword budget; otherwise finds the smallest dependent column set of the
// dual's generator within the subset budget.
long min_distance(const LinearCode& c,
                  long codeword_budget = kDefaultCodewordBudget,
                  long subset_budget = kDefaultSubsetBudget);

// Designed lower bounds (evaluation code, dual code), each floored at 1.
std::pair<long, long> ag_distance_bounds(long n, long m, long g);

std::vector<FieldElement> schur_product(const std::vector<FieldElement>& a,
                                        const std::vector<FieldElement>& b);

// Coefficients c with sum c_i * columns_i = target, if target lies in the
// span of the given vectors.
std::optional<std::vector<FieldElement>> schur_span_contains(
    const std::vector<std::vector<FieldElement>>& columns,
    const std::vector<FieldElement>& target);

enum class SelfDualityKind { exact, monomial, none };

struct SelfDualityResult {
  SelfDualityKind kind = SelfDualityKind::none;
  // column scalings delta with dual = delta * C; all ones in the exact case
  std::optional<std::vector<FieldElement>> diagonal;
};

SelfDualityResult self_duality(const LinearCode& c,
                               long witness_budget = kDefaultCodewordBudget);

// All q^k codewords, message vectors in lexicographic order with the last
// coordinate moving fastest.
class CodewordIterator {
 public:
  explicit CodewordIterator(const LinearCode& c,
                            long budget = kDefaultCodewordBudget);
  // (message, codeword), or nothing once exhausted
  std::optional<std::pair<std::vector<FieldElement>, std::vector<FieldElement>>>
  next();

 private:
  LinearCode code_;
  std::vector<uint32_t> odometer_;
  bool done_ = false;
};

}  // namespace agss::code
