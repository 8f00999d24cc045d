#include "agss/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace agss::gf {

namespace {

constexpr long kMaxOrder = 1L << 20;    // field order cap
constexpr long kTableLimit = 256;       // tabulate Cayley tables up to this q

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

// Dense polynomial over Z_p, constant term first, no trailing-zero guarantee.
using Poly = std::vector<long>;

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = mod(r[i + j] + a[i] * b[j], p);
  }
  return r;
}

// Remainder of a by monic b.
Poly poly_rem(Poly a, const Poly& b, long p) {
  int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) {
    long c = a[da];
    if (c != 0) {
      for (int i = 0; i <= db; ++i)
        a[da - db + i] = mod(a[da - db + i] - c * b[i], p);
    }
    a.resize(da);  // leading coefficient is now zero
    if (static_cast<int>(a.size()) <= db) break;
  }
  return a;
}

bool is_zero_poly(const Poly& a) { return degree(a) < 0; }

// Trial division by monic polynomials of degree 1..k/2; any factorization
// of a degree-k polynomial has a factor in that range.
bool is_irreducible(const Poly& m, long p, int k) {
  for (int d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly div(d + 1, 0);
      long t = idx;
      for (int i = 0; i < d; ++i) {
        div[i] = t % p;
        t /= p;
      }
      div[d] = 1;
      if (is_zero_poly(poly_rem(m, div, p))) return false;
    }
  }
  return true;
}

// Candidates ordered by coefficient tuples read from the highest degree
// down, which is the integer order of sum a_i p^i with a_{k-1} most
// significant.
Poly least_irreducible(long p, int k) {
  if (k == 1) return {0, 1};
  long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    Poly m(k + 1, 0);
    long t = idx;
    for (int i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p, k)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

long encode(const Poly& c, long p, int k) {
  long v = 0;
  for (int i = k - 1; i >= 0; --i)
    v = v * p + (i < static_cast<int>(c.size()) ? mod(c[i], p) : 0);
  return v;
}

Poly decode(long v, long p, int k) {
  Poly c(k, 0);
  for (int i = 0; i < k; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

std::string field_name(long p, int k, const Poly& m) {
  std::ostringstream os;
  if (k == 1) {
    os << "GF(" << p << ")";
  } else {
    os << "GF(" << p << "^" << k << "; modulus=[";
    for (int i = 0; i <= k; ++i) os << (i ? "," : "") << m[i];
    os << "])";
  }
  return os.str();
}

std::map<std::tuple<long, int, Poly>, std::unique_ptr<FieldData>>& registry() {
  static auto* r = new std::map<std::tuple<long, int, Poly>, std::unique_ptr<FieldData>>();
  return *r;
}

std::mutex& registry_mutex() {
  static auto* m = new std::mutex();
  return *m;
}

const FieldData* intern(long p, int k, Poly m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order above 2^20 not supported");
  }
  if (m.size() != static_cast<size_t>(k) + 1)
    throw std::invalid_argument("modulus must list k+1 coefficients");
  for (long& c : m) c = mod(c, p);
  if (m[k] != 1) throw std::invalid_argument("modulus must be monic");
  if (k > 1 && !is_irreducible(m, p, k))
    throw std::invalid_argument("modulus is reducible over GF(p)");

  std::lock_guard<std::mutex> lock(registry_mutex());
  auto key = std::make_tuple(p, k, m);
  auto it = registry().find(key);
  if (it != registry().end()) return it->second.get();

  auto data = std::make_unique<FieldData>();
  data->p = p;
  data->k = k;
  data->q = q;
  data->modulus = m;
  data->name = field_name(p, k, m);
  if (q <= kTableLimit) {
    data->tabulated = true;
    data->add_tab.resize(q * q);
    data->mul_tab.resize(q * q);
    data->neg_tab.resize(q);
    data->inv_tab.resize(q);
    for (long a = 0; a < q; ++a) {
      for (long b = 0; b < q; ++b) {
        data->add_tab[a * q + b] = static_cast<uint16_t>(data->add_slow(a, b));
        data->mul_tab[a * q + b] = static_cast<uint16_t>(data->mul_slow(a, b));
      }
    }
    for (long a = 0; a < q; ++a) {
      Poly c = decode(a, p, k);
      for (long& x : c) x = mod(-x, p);
      data->neg_tab[a] = static_cast<uint16_t>(encode(c, p, k));
    }
    // Invert by scanning the multiplication table once.
    for (long a = 1; a < q; ++a)
      for (long b = 1; b < q; ++b)
        if (data->mul_tab[a * q + b] == 1) {
          data->inv_tab[a] = static_cast<uint16_t>(b);
          break;
        }
  }
  const FieldData* raw = data.get();
  registry().emplace(std::move(key), std::move(data));
  return raw;
}

}  // namespace

long FieldData::add_slow(long a, long b) const {
  Poly ca = decode(a, p, k), cb = decode(b, p, k);
  for (int i = 0; i < k; ++i) ca[i] = mod(ca[i] + cb[i], p);
  return encode(ca, p, k);
}

long FieldData::mul_slow(long a, long b) const {
  Poly r = poly_rem(poly_mul(decode(a, p, k), decode(b, p, k), p), modulus, p);
  return encode(r, p, k);
}

long FieldData::add(long a, long b) const {
  return tabulated ? add_tab[a * q + b] : add_slow(a, b);
}

long FieldData::neg(long a) const {
  if (tabulated) return neg_tab[a];
  Poly c = decode(a, p, k);
  for (long& x : c) x = mod(-x, p);
  return encode(c, p, k);
}

long FieldData::mul(long a, long b) const {
  return tabulated ? mul_tab[a * q + b] : mul_slow(a, b);
}

long FieldData::inv(long a) const {
  if (tabulated) return inv_tab[a];
  // q is small enough that Fermat exponentiation stays cheap.
  long e = q - 2, base = a, r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

namespace {
const FieldData* intern_default(long p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order above 2^20 not supported");
  }
  return intern(p, k, least_irreducible(p, k));
}
}  // namespace

Field::Field(long p, int k) : data_(intern_default(p, k)) {}

Field::Field(long p, int k, const std::vector<long>& modulus) : data_(intern(p, k, modulus)) {}

long Field::characteristic() const { return data_->p; }
int Field::extension_degree() const { return data_->k; }
long Field::order() const { return data_->q; }
const std::vector<long>& Field::modulus() const { return data_->modulus; }

FieldElement Field::zero() const { return FieldElement(data_, 0); }
FieldElement Field::one() const { return FieldElement(data_, 1); }

FieldElement Field::element(long index) const {
  if (index < 0 || index >= data_->q)
    throw std::invalid_argument("element index out of range for " + data_->name);
  return FieldElement(data_, index);
}

FieldElement Field::from_coefficients(const std::vector<long>& coeffs) const {
  if (coeffs.size() != static_cast<size_t>(data_->k))
    throw std::invalid_argument("expected k coefficients");
  Poly c(coeffs);
  for (long& x : c) x = mod(x, data_->p);
  return FieldElement(data_, encode(c, data_->p, data_->k));
}

FieldElement Field::from_integer(long v) const {
  return FieldElement(data_, mod(v, data_->p));
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> r;
  r.reserve(data_->q);
  for (long i = 0; i < data_->q; ++i) r.emplace_back(data_, i);
  return r;
}

const std::string& Field::to_string() const { return data_->name; }

const FieldData* FieldElement::checked() const {
  if (!f_) throw std::logic_error("use of detached field element");
  return f_;
}

const FieldData* FieldElement::same_field(const FieldElement& o) const {
  checked();
  o.checked();
  if (f_ != o.f_)
    throw std::invalid_argument("mixed-field operation: " + f_->name + " vs " + o.f_->name);
  return f_;
}

long FieldElement::index() const { return checked(), static_cast<long>(v_); }

std::vector<long> FieldElement::coefficients() const {
  const FieldData* f = checked();
  return decode(v_, f->p, f->k);
}

Field FieldElement::field() const {
  const FieldData* f = checked();
  return Field(f->p, f->k, f->modulus);
}

bool FieldElement::is_zero() const { return checked(), v_ == 0; }
bool FieldElement::is_one() const { return checked(), v_ == 1; }

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const FieldData* f = same_field(o);
  return FieldElement(f, f->add(v_, o.v_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const FieldData* f = same_field(o);
  return FieldElement(f, f->add(v_, f->neg(o.v_)));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FieldData* f = same_field(o);
  return FieldElement(f, f->mul(v_, o.v_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  const FieldData* f = same_field(o);
  if (o.v_ == 0) throw std::domain_error("division by zero in " + f->name);
  return FieldElement(f, f->mul(v_, f->inv(o.v_)));
}

FieldElement FieldElement::operator-() const {
  const FieldData* f = checked();
  return FieldElement(f, f->neg(v_));
}

FieldElement FieldElement::inverse() const {
  const FieldData* f = checked();
  if (v_ == 0) throw std::domain_error("zero has no inverse in " + f->name);
  return FieldElement(f, f->inv(v_));
}

FieldElement FieldElement::pow(long e) const {
  const FieldData* f = checked();
  if (e < 0) return inverse().pow(-e);
  long base = v_, r = 1;
  while (e > 0) {
    if (e & 1) r = f->mul(r, base);
    base = f->mul(base, base);
    e >>= 1;
  }
  return FieldElement(f, r);
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!f_ && !o.f_) return true;
  same_field(o);
  return v_ == o.v_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  if (f_ != o.f_) return f_ < o.f_;
  return v_ < o.v_;
}

std::string FieldElement::to_string() const {
  const FieldData* f = checked();
  if (f->k == 1) return std::to_string(v_);
  Poly c = decode(v_, f->p, f->k);
  std::ostringstream os;
  bool first = true;
  for (int i = f->k - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i > 0) {
      if (c[i] != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace agss::gf
