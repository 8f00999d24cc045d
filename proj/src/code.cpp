#include "agss/code.hpp"

#include <algorithm>

namespace agss::code {

bool power_within(long q, long k, long cap) {
  long v = 1;
  for (long i = 0; i < k; ++i) {
    if (v > cap / q) return false;
    v *= q;
  }
  return v <= cap;
}

namespace {

// advances a w-subset of {0..n-1} in lexicographic order
bool next_combination(std::vector<size_t>& idx, size_t n) {
  size_t w = idx.size();
  size_t i = w;
  while (i > 0) {
    --i;
    if (idx[i] + (w - i) < n) {
      ++idx[i];
      for (size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

size_t weight(const std::vector<FieldElement>& v) {
  size_t w = 0;
  for (const auto& x : v)
    if (!x.is_zero()) ++w;
  return w;
}

}  // namespace

LinearCode::LinearCode(linalg::Matrix generator, std::optional<CodeOrigin> origin)
    : gen_(std::move(generator)), origin_(std::move(origin)) {
  if (gen_.rows() == 0 || gen_.rows() > gen_.cols())
    throw std::invalid_argument("generator must have 0 < k <= N");
  if (gen_.rank() != gen_.rows())
    throw std::invalid_argument("generator rows are linearly dependent");
}

LinearCode LinearCode::from_row_space(const linalg::Matrix& rows,
                                      std::optional<CodeOrigin> origin) {
  std::vector<size_t> pivots;
  linalg::Matrix r = rows.rref(&pivots);
  if (pivots.empty()) throw std::invalid_argument("row space is zero");
  std::vector<std::vector<FieldElement>> basis;
  for (size_t i = 0; i < pivots.size(); ++i) basis.push_back(r.row(i));
  return LinearCode(linalg::Matrix::from_rows(rows.field(), basis),
                    std::move(origin));
}

bool LinearCode::contains(const std::vector<FieldElement>& word) const {
  if (word.size() != length()) throw std::invalid_argument("word length mismatch");
  std::vector<std::vector<FieldElement>> rows;
  for (size_t i = 0; i < gen_.rows(); ++i) rows.push_back(gen_.row(i));
  rows.push_back(word);
  return linalg::Matrix::from_rows(field(), rows).rank() == dimension();
}

std::vector<FieldElement> LinearCode::encode(
    const std::vector<FieldElement>& message) const {
  return gen_.apply_left(message);
}

LinearCode eval_code(const funcspace::RRBasis& basis,
                     const std::vector<funcspace::EvalPoint>& d) {
  long m = basis.degree();
  long g = basis.genus();
  if (basis.family() != funcspace::CurveFamily::klein && m <= 2 * g - 2)
    throw std::invalid_argument("divisor degree must exceed 2g-2");
  if (m >= static_cast<long>(d.size()))
    throw std::invalid_argument("divisor degree must be below the point count");
  linalg::Matrix gen = funcspace::evaluate_matrix(basis, d);
  if (gen.rank() != basis.dimension())
    throw std::invalid_argument("evaluation matrix is rank deficient");
  CodeOrigin origin{basis.family(), m, g, basis.divisor(), d, false};
  return LinearCode(std::move(gen), std::move(origin));
}

LinearCode dual_code(const LinearCode& c) {
  if (c.dimension() == c.length())
    throw std::invalid_argument("dual of the full space is the zero code");
  linalg::Matrix k = c.generator().kernel_basis();
  std::optional<CodeOrigin> origin = c.origin();
  if (origin) origin->dualized = !origin->dualized;
  return LinearCode(std::move(k), std::move(origin));
}

LinearCode punctured(const LinearCode& c, size_t coord) {
  if (coord >= c.length()) throw std::invalid_argument("coordinate out of range");
  std::vector<size_t> keep;
  for (size_t j = 0; j < c.length(); ++j)
    if (j != coord) keep.push_back(j);
  return LinearCode::from_row_space(c.generator().selected_columns(keep));
}

long min_distance(const LinearCode& c, long codeword_budget, long subset_budget) {
  long q = c.field().order();
  long k = static_cast<long>(c.dimension());
  long n = static_cast<long>(c.length());
  if (k == n) return 1;

  if (power_within(q, k, codeword_budget)) {
    CodewordIterator it(c, codeword_budget);
    size_t best = c.length() + 1;
    while (auto item = it.next()) {
      size_t w = weight(item->second);
      if (w > 0 && w < best) best = w;
      if (best == 1) break;
    }
    return static_cast<long>(best);
  }

  // smallest dependent column set of the dual's generator
  linalg::Matrix h = dual_code(c).generator();
  long examined = 0;
  for (long w = 1; w <= n - k + 1; ++w) {
    std::vector<size_t> idx(w);
    for (long i = 0; i < w; ++i) idx[i] = static_cast<size_t>(i);
    do {
      if (++examined > subset_budget)
        throw BudgetExceeded("column dependency search exceeded subset budget");
      if (h.selected_columns(idx).rank() < static_cast<size_t>(w))
        return w;
    } while (next_combination(idx, static_cast<size_t>(n)));
  }
  throw std::logic_error("no dependent column set found");
}

std::pair<long, long> ag_distance_bounds(long n, long m, long g) {
  return {std::max(n - m, 1L), std::max(m - 2 * g + 2, 1L)};
}

std::vector<FieldElement> schur_product(const std::vector<FieldElement>& a,
                                        const std::vector<FieldElement>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  std::vector<FieldElement> out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

std::optional<std::vector<FieldElement>> schur_span_contains(
    const std::vector<std::vector<FieldElement>>& columns,
    const std::vector<FieldElement>& target) {
  if (target.empty()) throw std::invalid_argument("empty target vector");
  const Field& f = target[0].field();
  for (const auto& c : columns)
    if (c.size() != target.size())
      throw std::invalid_argument("column dimension mismatch");
  if (columns.empty()) {
    for (const auto& x : target)
      if (!x.is_zero()) return std::nullopt;
    return std::vector<FieldElement>{};
  }
  linalg::Matrix a(f, target.size(), columns.size());
  for (size_t j = 0; j < columns.size(); ++j)
    for (size_t i = 0; i < target.size(); ++i) a.at(i, j) = columns[j][i];
  return a.solve(target);
}

SelfDualityResult self_duality(const LinearCode& c, long witness_budget) {
  size_t n = c.length();
  size_t k = c.dimension();
  if (2 * k != n) return {SelfDualityKind::none, std::nullopt};
  const Field& f = c.field();
  const linalg::Matrix& m = c.generator();

  if ((m * m.transpose()).is_zero()) {
    std::vector<FieldElement> ones(n, f.one());
    return {SelfDualityKind::exact, ones};
  }

  // unknown column scalings d: for every row pair (a,b), sum_j M(a,j)M(b,j)d_j = 0
  linalg::Matrix sys(f, k * (k + 1) / 2, n);
  size_t r = 0;
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a; b < k; ++b) {
      for (size_t j = 0; j < n; ++j) sys.at(r, j) = m.at(a, j) * m.at(b, j);
      ++r;
    }
  linalg::Matrix ker = sys.kernel_basis();
  size_t s = ker.rows();
  if (s == 0) return {SelfDualityKind::none, std::nullopt};

  long q = f.order();
  if (!power_within(q, static_cast<long>(s), witness_budget))
    throw BudgetExceeded("diagonal witness search space too large");

  std::vector<uint32_t> od(s, 0);
  while (true) {
    // advance odometer (skip the all-zero combination)
    size_t i = s;
    bool carried = true;
    while (i > 0 && carried) {
      --i;
      if (od[i] + 1 < static_cast<uint32_t>(q)) {
        ++od[i];
        carried = false;
      } else {
        od[i] = 0;
      }
    }
    if (carried) break;

    std::vector<FieldElement> d(n, f.zero());
    for (size_t t = 0; t < s; ++t) {
      if (od[t] == 0) continue;
      FieldElement coeff = f.element(od[t]);
      for (size_t j = 0; j < n; ++j) d[j] += coeff * ker.at(t, j);
    }
    bool all_nonzero = true;
    for (const auto& x : d)
      if (x.is_zero()) {
        all_nonzero = false;
        break;
      }
    if (all_nonzero) return {SelfDualityKind::monomial, d};
  }
  return {SelfDualityKind::none, std::nullopt};
}

CodewordIterator::CodewordIterator(const LinearCode& c, long budget)
    : code_(c), odometer_(c.dimension(), 0) {
  if (!power_within(c.field().order(), static_cast<long>(c.dimension()), budget))
    throw BudgetExceeded("codeword enumeration exceeds budget");
}

std::optional<std::pair<std::vector<FieldElement>, std::vector<FieldElement>>>
CodewordIterator::next() {
  if (done_) return std::nullopt;
  const Field& f = code_.field();
  std::vector<FieldElement> message;
  message.reserve(odometer_.size());
  for (uint32_t v : odometer_) message.push_back(f.element(v));
  auto out = std::make_pair(message, code_.encode(message));

  size_t i = odometer_.size();
  bool carried = true;
  while (i > 0 && carried) {
    --i;
    if (odometer_[i] + 1 < static_cast<uint32_t>(f.order())) {
      ++odometer_[i];
      carried = false;
    } else {
      odometer_[i] = 0;
    }
  }
  if (carried) done_ = true;
  return out;
}

}  // namespace agss::code
