#include "agss/lsss.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace agss {
namespace lsss {

namespace {

uint64_t mask_of(const std::vector<size_t>& a) {
  uint64_t m = 0;
  for (size_t i : a) m |= uint64_t{1} << (i - 1);
  return m;
}

std::vector<size_t> set_of(uint64_t mask, size_t n) {
  std::vector<size_t> out;
  for (size_t i = 1; i <= n; ++i)
    if (mask >> (i - 1) & 1) out.push_back(i);
  return out;
}

bool size_lex_less(const std::vector<size_t>& a, const std::vector<size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool hits_all(const std::vector<uint64_t>& family, uint64_t picked) {
  for (uint64_t s : family)
    if (!(s & picked)) return false;
  return true;
}

// Branches on the first family set missed by the current pick; alternatives
// already passed over at an earlier branch stay excluded below it, so no
// hitting set is produced twice. Leaves that a later forced pick made
// redundant are dropped by the explicit minimality test.
void hitting_sets(const std::vector<uint64_t>& family, uint64_t picked,
                  uint64_t excluded, std::set<uint64_t>* out) {
  uint64_t miss = 0;
  bool found = false;
  for (uint64_t s : family) {
    if (!(s & picked)) {
      miss = s;
      found = true;
      break;
    }
  }
  if (!found) {
    uint64_t p = picked;
    while (p) {
      uint64_t bit = p & (~p + 1);
      p ^= bit;
      if (hits_all(family, picked ^ bit)) return;
    }
    out->insert(picked);
    return;
  }
  uint64_t candidates = miss & ~excluded;
  uint64_t used = 0;
  while (candidates) {
    uint64_t bit = candidates & (~candidates + 1);
    candidates ^= bit;
    hitting_sets(family, picked | bit, excluded | used, out);
    used |= bit;
  }
}

uint64_t binomial(size_t n, size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  if (r > UINT64_MAX) return UINT64_MAX;
  return static_cast<uint64_t>(r);
}

bool next_subset(std::vector<size_t>& idx, size_t n) {
  size_t w = idx.size();
  size_t i = w;
  while (i > 0) {
    --i;
    if (idx[i] + (w - i) <= n) {
      ++idx[i];
      for (size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::string to_string(Variant v) {
  return v == Variant::omega ? "omega" : "functional";
}

AccessStructure::AccessStructure(
    size_t participants, std::vector<std::vector<size_t>> minimal_qualified)
    : n_(participants) {
  if (n_ == 0)
    throw std::invalid_argument("access structure needs a participant");
  if (n_ > 63)
    throw std::invalid_argument(
        "access-structure analyses support at most 63 participants");
  std::set<uint64_t> masks;
  for (auto& s : minimal_qualified) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (size_t i : s)
      if (i < 1 || i > n_)
        throw std::invalid_argument("participant index out of range");
    if (!masks.insert(mask_of(s)).second)
      throw std::invalid_argument("duplicate minimal qualified set");
  }
  for (uint64_t a : masks)
    for (uint64_t b : masks)
      if (a != b && (a & b) == a)
        throw std::invalid_argument(
            "minimal qualified sets must form an antichain");

  minimal_ = std::move(minimal_qualified);
  std::sort(minimal_.begin(), minimal_.end(), size_lex_less);
  minimal_masks_.reserve(minimal_.size());
  for (const auto& s : minimal_) minimal_masks_.push_back(mask_of(s));

  std::vector<uint64_t> family = minimal_masks_;
  std::sort(family.begin(), family.end(), [](uint64_t a, uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  std::set<uint64_t> hitters;
  hitting_sets(family, 0, 0, &hitters);

  const uint64_t full = (uint64_t{1} << n_) - 1;
  for (uint64_t h : hitters) {
    maximal_unqualified_.push_back(set_of(full & ~h, n_));
  }
  std::sort(maximal_unqualified_.begin(), maximal_unqualified_.end(),
            size_lex_less);
  maximal_masks_.reserve(maximal_unqualified_.size());
  for (const auto& s : maximal_unqualified_)
    maximal_masks_.push_back(mask_of(s));
}

bool AccessStructure::is_qualified(const std::vector<size_t>& a) const {
  for (size_t i : a)
    if (i < 1 || i > n_)
      throw std::invalid_argument("participant index out of range");
  uint64_t m = mask_of(a);
  for (uint64_t q : minimal_masks_)
    if ((q & m) == q) return true;
  return false;
}

size_t AccessStructure::max_unqualified_size() const {
  if (maximal_unqualified_.empty()) return 0;
  return maximal_unqualified_.back().size();
}

std::optional<size_t> AccessStructure::threshold_value() const {
  if (minimal_.empty()) return std::nullopt;
  size_t t = minimal_.front().size();
  if (minimal_.back().size() != t) return std::nullopt;
  if (minimal_.size() != binomial(n_, t)) return std::nullopt;
  return t;
}

bool AccessStructure::is_Q2() const {
  if (n_ == 1) return false;
  const uint64_t full = (uint64_t{1} << n_) - 1;
  for (size_t i = 0; i < maximal_masks_.size(); ++i)
    for (size_t j = i; j < maximal_masks_.size(); ++j)
      if ((maximal_masks_[i] | maximal_masks_[j]) == full) return false;
  return true;
}

bool AccessStructure::is_Q3() const {
  if (n_ == 1) return false;
  if (!is_Q2()) return false;
  const uint64_t full = (uint64_t{1} << n_) - 1;
  for (size_t i = 0; i < maximal_masks_.size(); ++i) {
    for (size_t j = i; j < maximal_masks_.size(); ++j) {
      uint64_t rest = full & ~(maximal_masks_[i] | maximal_masks_[j]);
      bool qualified = false;
      for (uint64_t q : minimal_masks_)
        if ((q & rest) == q) {
          qualified = true;
          break;
        }
      if (!qualified) return false;
    }
  }
  return true;
}

Scheme::Scheme(LinearCode sharing, std::optional<Variant> variant,
               uint64_t seed)
    : sharing_(std::move(sharing)),
      variant_(variant),
      seed_(seed),
      source_(seed),
      pivot_row_(0) {
  if (sharing_.length() < 3)
    throw std::invalid_argument("scheme needs at least two participants");
  const auto& m = sharing_.generator();
  for (size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (size_t r = 0; r < m.rows(); ++r)
      if (!m.at(r, j).is_zero()) {
        zero = false;
        break;
      }
    if (zero)
      throw std::invalid_argument(
          j == 0 ? "secret column of the sharing code is zero"
                 : "dual of the sharing code has a weight-1 codeword");
  }
  while (m.at(pivot_row_, 0).is_zero()) ++pivot_row_;
  std::vector<size_t> everyone(participants());
  std::iota(everyone.begin(), everyone.end(), size_t{1});
  if (!is_qualified(everyone))
    throw std::invalid_argument(
        "full participant set cannot determine the secret");
}

std::string Scheme::participant_label(size_t i) const {
  if (i < 1 || i > participants())
    throw std::invalid_argument("participant index out of range");
  return "P" + std::to_string(i);
}

std::vector<size_t> Scheme::checked_indices(
    const std::vector<size_t>& a) const {
  for (size_t i : a)
    if (i < 1 || i > participants())
      throw std::invalid_argument("participant index out of range");
  std::vector<size_t> out = a;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FieldElement> Scheme::column(size_t j) const {
  const auto& m = sharing_.generator();
  std::vector<FieldElement> col;
  col.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) col.push_back(m.at(r, j));
  return col;
}

std::vector<FieldElement> Scheme::complete_message(
    FieldElement secret, rng::DigitSource& source) const {
  const auto& m = sharing_.generator();
  const Field& f = field();
  const size_t k = m.rows();
  const auto q = static_cast<uint32_t>(f.order());
  std::vector<FieldElement> u(k, f.zero());
  for (size_t r = 0; r < k; ++r)
    if (r != pivot_row_) u[r] = f.element(source.next_digit(q));
  FieldElement acc = f.zero();
  for (size_t r = 0; r < k; ++r)
    if (r != pivot_row_) acc += u[r] * m.at(r, 0);
  u[pivot_row_] = (secret - acc) / m.at(pivot_row_, 0);
  return u;
}

ShareVector Scheme::share(FieldElement secret) const {
  return share_with(secret, source_);
}

ShareVector Scheme::share_with(FieldElement secret,
                               rng::DigitSource& source) const {
  auto word = sharing_.encode(complete_message(secret, source));
  ShareVector sv{word[0], {}};
  sv.shares.assign(word.begin() + 1, word.end());
  return sv;
}

void Scheme::reseed(uint64_t seed) const {
  source_ = rng::SeededSource(seed);
}

bool Scheme::is_qualified(const std::vector<size_t>& a) const {
  auto idx = checked_indices(a);
  auto cols = sharing_.generator().selected_columns(idx);
  size_t r = cols.rank();
  idx.insert(idx.begin(), 0);
  return sharing_.generator().selected_columns(idx).rank() == r;
}

std::optional<std::vector<FieldElement>> Scheme::reconstruction_vector(
    const std::vector<size_t>& a) const {
  std::set<size_t> seen;
  for (size_t i : a) {
    if (i < 1 || i > participants())
      throw std::invalid_argument("participant index out of range");
    if (!seen.insert(i).second)
      throw std::invalid_argument("duplicate participant index");
  }
  auto sol = sharing_.generator().selected_columns(a).solve(column(0));
  if (!sol) return std::nullopt;
  const Field& f = field();
  std::vector<FieldElement> v(sharing_.length(), f.zero());
  v[0] = f.one();
  for (size_t j = 0; j < a.size(); ++j) v[a[j]] = -(*sol)[j];
  return v;
}

FieldElement Scheme::reconstruct(const std::vector<size_t>& a,
                                 const std::vector<FieldElement>& shares) const {
  if (shares.size() != a.size())
    throw std::invalid_argument("one share per listed participant required");
  auto v = reconstruction_vector(a);
  if (!v)
    throw UnqualifiedError("set cannot reconstruct the secret");
  FieldElement acc = field().zero();
  for (size_t j = 0; j < a.size(); ++j) acc += (*v)[a[j]] * shares[j];
  return -acc;
}

std::vector<std::vector<size_t>> Scheme::minimal_qualified_dual(
    long codeword_budget) const {
  const size_t n = participants();
  if (n > 63)
    throw std::invalid_argument(
        "access-structure analyses support at most 63 participants");
  auto dual = code::dual_code(sharing_);
  std::set<uint64_t> supports;
  code::CodewordIterator words(dual, codeword_budget);
  while (auto w = words.next()) {
    const auto& v = w->second;
    if (v[0].is_zero()) continue;
    uint64_t mask = 0;
    for (size_t i = 1; i < v.size(); ++i)
      if (!v[i].is_zero()) mask |= uint64_t{1} << (i - 1);
    supports.insert(mask);
  }
  std::vector<std::vector<size_t>> out;
  for (uint64_t s : supports) {
    bool minimal = true;
    for (uint64_t t : supports)
      if (t != s && (t & s) == t) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(set_of(s, n));
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

std::vector<std::vector<size_t>> Scheme::minimal_qualified_scan(
    long subset_budget) const {
  const size_t n = participants();
  if (n >= 63 || (uint64_t{1} << n) > static_cast<uint64_t>(subset_budget))
    throw code::BudgetExceeded("subset scan exceeds the budget");
  std::vector<std::vector<size_t>> out;
  std::vector<uint64_t> found;
  for (size_t s = 1; s <= n; ++s) {
    std::vector<size_t> idx(s);
    std::iota(idx.begin(), idx.end(), size_t{1});
    do {
      uint64_t mask = mask_of(idx);
      bool covered = false;
      for (uint64_t f : found)
        if ((f & mask) == f) {
          covered = true;
          break;
        }
      if (covered) continue;
      if (is_qualified(idx)) {
        found.push_back(mask);
        out.push_back(idx);
      }
    } while (next_subset(idx, n));
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

AccessStructure Scheme::minimal_access_structure(long codeword_budget,
                                                 long subset_budget) const {
  const size_t dual_dim = sharing_.length() - sharing_.dimension();
  if (code::power_within(field().order(), static_cast<long>(dual_dim),
                         codeword_budget))
    return AccessStructure(participants(),
                           minimal_qualified_dual(codeword_budget));
  return AccessStructure(participants(), minimal_qualified_scan(subset_budget));
}

CheatReport Scheme::cheat_parameters(long codeword_budget,
                                     long subset_budget) const {
  auto as = minimal_access_structure(codeword_budget, subset_budget);
  CheatReport r;
  r.max_unqualified_size = as.max_unqualified_size();
  r.d_cheat = static_cast<long>(participants()) -
              static_cast<long>(r.max_unqualified_size);
  r.d_min = code::min_distance(code::punctured(sharing_, 0), codeword_budget,
                               subset_budget);
  if (sharing_.origin()) {
    const auto& o = *sharing_.origin();
    const long n = static_cast<long>(participants());
    r.window = std::make_pair(n - o.m, n - o.m + 2 * o.genus);
    r.window_ok = r.window->first <= r.d_min && r.d_min <= r.d_cheat &&
                  r.d_cheat <= r.window->second;
  }
  return r;
}

namespace {

std::vector<FieldElement> tensor_square(const std::vector<FieldElement>& col) {
  std::vector<FieldElement> out;
  out.reserve(col.size() * col.size());
  for (const auto& a : col)
    for (const auto& b : col) out.push_back(a * b);
  return out;
}

}  // namespace

std::optional<std::vector<FieldElement>> Scheme::multiplicativity() const {
  std::vector<std::vector<FieldElement>> columns;
  columns.reserve(participants());
  for (size_t i = 1; i <= participants(); ++i)
    columns.push_back(tensor_square(column(i)));
  return code::schur_span_contains(columns, tensor_square(column(0)));
}

std::optional<StrongMultWitness> Scheme::strong_multiplicativity(
    long codeword_budget, long subset_budget) const {
  auto as = minimal_access_structure(codeword_budget, subset_budget);
  const auto target = tensor_square(column(0));
  StrongMultWitness witness;
  for (const auto& b : as.maximal_unqualified()) {
    std::vector<size_t> a;
    std::set<size_t> blocked(b.begin(), b.end());
    for (size_t i = 1; i <= participants(); ++i)
      if (!blocked.count(i)) a.push_back(i);
    std::vector<std::vector<FieldElement>> columns;
    columns.reserve(a.size());
    for (size_t i : a) columns.push_back(tensor_square(column(i)));
    auto sol = code::schur_span_contains(columns, target);
    if (!sol) return std::nullopt;
    witness.emplace_back(std::move(a), std::move(*sol));
  }
  return witness;
}

PrivacyAudit Scheme::privacy_audit(const std::vector<size_t>& a,
                                   FieldElement s1, FieldElement s2,
                                   long enumeration_budget) const {
  auto idx = checked_indices(a);
  const Field& f = field();
  const size_t k = sharing_.dimension();
  const auto q = static_cast<uint32_t>(f.order());
  if (!code::power_within(f.order(), static_cast<long>(k) - 1,
                          enumeration_budget))
    throw code::BudgetExceeded("randomness enumeration exceeds the budget");

  auto observed = [&](FieldElement secret) {
    std::vector<std::vector<uint32_t>> tuples;
    std::vector<uint32_t> digits(k - 1, 0);
    for (;;) {
      rng::TapeSource tape(digits);
      auto u = complete_message(secret, tape);
      std::vector<uint32_t> tuple;
      tuple.reserve(idx.size());
      for (size_t i : idx) {
        FieldElement acc = f.zero();
        for (size_t r = 0; r < k; ++r)
          acc += u[r] * sharing_.generator().at(r, i);
        tuple.push_back(static_cast<uint32_t>(acc.index()));
      }
      tuples.push_back(std::move(tuple));
      size_t pos = digits.size();
      while (pos > 0 && digits[pos - 1] + 1 == q) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
    std::sort(tuples.begin(), tuples.end());
    return tuples;
  };

  PrivacyAudit verdict;
  verdict.qualified = is_qualified(idx);
  verdict.distributions_match = observed(s1) == observed(s2);
  verdict.consistent = verdict.distributions_match == !verdict.qualified;
  return verdict;
}

Scheme scheme_from_ag(const funcspace::RRBasis& basis,
                      const std::vector<funcspace::EvalPoint>& d,
                      Variant variant, uint64_t seed) {
  auto ev = code::eval_code(basis, d);
  if (variant == Variant::omega)
    return Scheme(code::dual_code(ev), variant, seed);
  return Scheme(std::move(ev), variant, seed);
}

}  // namespace lsss
}  // namespace agss
