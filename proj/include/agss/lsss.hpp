#ifndef AGSS_LSSS_HPP
#define AGSS_LSSS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "agss/code.hpp"
#include "agss/funcspace.hpp"
#include "agss/gf.hpp"
#include "agss/linalg.hpp"
#include "agss/rng.hpp"

namespace agss {
namespace lsss {

using code::LinearCode;
using gf::Field;
using gf::FieldElement;

// Raised when a reconstruction is attempted for a set that cannot determine
// the secret.
class UnqualifiedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Which of the dual pair of evaluation codes the shares come from.
enum class Variant { omega, functional };

std::string to_string(Variant v);

// Secret plus one share per participant; (secret, shares...) is always a
// codeword of the sharing code.
struct ShareVector {
  FieldElement secret;
  std::vector<FieldElement> shares;
};

// Monotone access structure given by its inclusion-minimal qualified sets.
// Participants are 1-based indices. Analyses (maximal unqualified sets,
// threshold detection, Q2/Q3) are computed eagerly at construction and
// require at most 63 participants.
class AccessStructure {
 public:
  AccessStructure(size_t participants,
                  std::vector<std::vector<size_t>> minimal_qualified);

  size_t participants() const { return n_; }
  const std::vector<std::vector<size_t>>& minimal_qualified() const {
    return minimal_;
  }
  // Complements of the minimal hitting sets of the qualified family, sorted
  // by (size, lexicographic).
  const std::vector<std::vector<size_t>>& maximal_unqualified() const {
    return maximal_unqualified_;
  }

  bool is_qualified(const std::vector<size_t>& a) const;
  size_t max_unqualified_size() const;
  // t when the minimal sets are exactly all t-subsets, otherwise nothing
  std::optional<size_t> threshold_value() const;
  // no two (resp. three) unqualified sets cover all participants
  bool is_Q2() const;
  bool is_Q3() const;

 private:
  size_t n_;
  std::vector<std::vector<size_t>> minimal_;
  std::vector<uint64_t> minimal_masks_;
  std::vector<std::vector<size_t>> maximal_unqualified_;
  std::vector<uint64_t> maximal_masks_;
};

// d_cheat is always n minus the largest unqualified size. The window is the
// pair (n - m, n - m + 2g) when the sharing code records its construction
// parameters, and window_ok says whether n - m <= d_min <= d_cheat <= n - m
// + 2g held; it is reported, never assumed.
struct CheatReport {
  long d_min = 0;
  long d_cheat = 0;
  size_t max_unqualified_size = 0;
  std::optional<std::pair<long, long>> window;
  std::optional<bool> window_ok;
};

struct PrivacyAudit {
  bool qualified = false;
  bool distributions_match = false;
  // share distributions restricted to the set match exactly when the set is
  // unqualified
  bool consistent = false;
};

// recombination coefficients per complement of a maximal unqualified set
using StrongMultWitness =
    std::vector<std::pair<std::vector<size_t>, std::vector<FieldElement>>>;

// Linear scheme with the secret at coordinate 0 of the sharing code and one
// field element per participant.
class Scheme {
 public:
  explicit Scheme(LinearCode sharing,
                  std::optional<Variant> variant = std::nullopt,
                  uint64_t seed = 0);

  const LinearCode& sharing_code() const { return sharing_; }
  size_t participants() const { return sharing_.length() - 1; }
  const Field& field() const { return sharing_.field(); }
  std::optional<Variant> variant() const { return variant_; }
  uint64_t seed() const { return seed_; }
  std::string participant_label(size_t i) const;

  // Draws the message vector uniformly from {u : u * m_0 = secret} and
  // returns the resulting codeword split into secret and shares.
  ShareVector share(FieldElement secret) const;
  ShareVector share_with(FieldElement secret, rng::DigitSource& source) const;
  void reseed(uint64_t seed) const;

  // m_0 lies in the span of the selected columns
  bool is_qualified(const std::vector<size_t>& a) const;

  // Dual codeword v with v_0 = 1 and support inside {0} union a, found by a
  // linear solve; the secret equals -sum v_i c_i over a.
  std::optional<std::vector<FieldElement>> reconstruction_vector(
      const std::vector<size_t>& a) const;
  FieldElement reconstruct(const std::vector<size_t>& a,
                           const std::vector<FieldElement>& shares) const;

  // Inclusion-minimal qualified sets, via dual-codeword supports when the
  // dual is small enough to enumerate, otherwise an ascending subset scan.
  AccessStructure minimal_access_structure(
      long codeword_budget = code::kDefaultCodewordBudget,
      long subset_budget = code::kDefaultSubsetBudget) const;
  std::vector<std::vector<size_t>> minimal_qualified_scan(
      long subset_budget = code::kDefaultSubsetBudget) const;
  std::vector<std::vector<size_t>> minimal_qualified_dual(
      long codeword_budget = code::kDefaultCodewordBudget) const;

  CheatReport cheat_parameters(
      long codeword_budget = code::kDefaultCodewordBudget,
      long subset_budget = code::kDefaultSubsetBudget) const;

  // Coefficients c with sum c_i (a_i b_i) = s s' for any two sharings, if the
  // tensor square of m_0 lies in the span of the participant tensor squares.
  std::optional<std::vector<FieldElement>> multiplicativity() const;
  // The same restricted to every complement of a maximal unqualified set.
  std::optional<StrongMultWitness> strong_multiplicativity(
      long codeword_budget = code::kDefaultCodewordBudget,
      long subset_budget = code::kDefaultSubsetBudget) const;

  // Exhausts every admissible message vector for both secrets and compares
  // the share tuples seen by the set.
  PrivacyAudit privacy_audit(const std::vector<size_t>& a, FieldElement s1,
                             FieldElement s2,
                             long enumeration_budget =
                                 code::kDefaultCodewordBudget) const;

 private:
  std::vector<size_t> checked_indices(const std::vector<size_t>& a) const;
  std::vector<FieldElement> column(size_t j) const;
  std::vector<FieldElement> complete_message(FieldElement secret,
                                             rng::DigitSource& source) const;

  LinearCode sharing_;
  std::optional<Variant> variant_;
  uint64_t seed_;
  mutable rng::SeededSource source_;
  size_t pivot_row_;
};

// Evaluation-code scheme on the given points, secret point first; omega
// takes the dual of the evaluation code.
Scheme scheme_from_ag(const funcspace::RRBasis& basis,
                      const std::vector<funcspace::EvalPoint>& d,
                      Variant variant, uint64_t seed = 0);

}  // namespace lsss
}  // namespace agss

#endif
