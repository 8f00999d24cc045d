// Exact arithmetic in small finite fields GF(p^k).
//
// Elements are stored as an index into the enumeration order of the field:
// the index of an element with polynomial coefficients (c_0, ..., c_{k-1})
// is sum c_i * p^i, so 0 and 1 always have indices 0 and 1 and the prime
// subfield occupies indices 0..p-1.  Extension fields are represented with
// a polynomial basis modulo an explicit monic irreducible modulus.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace agss::gf {

class FieldElement;

// Interned per (p, k, modulus); instances live for the whole process so
// elements can hold plain pointers.
struct FieldData {
  long p = 0;
  int k = 0;
  long q = 0;                  // p^k
  std::vector<long> modulus;   // k+1 coefficients, constant term first, monic
  std::string name;

  // Cayley tables, filled only when q is small enough to tabulate.
  bool tabulated = false;
  std::vector<uint16_t> add_tab, mul_tab;  // q*q entries each
  std::vector<uint16_t> neg_tab, inv_tab;  // q entries each

  long add(long a, long b) const;
  long neg(long a) const;
  long mul(long a, long b) const;
  long inv(long a) const;  // a must be nonzero

  long add_slow(long a, long b) const;
  long mul_slow(long a, long b) const;
};

class Field {
 public:
  // Default modulus: the lexicographically least monic irreducible of
  // degree k, comparing coefficient tuples from the highest degree down.
  explicit Field(long p, int k = 1);
  // Explicit modulus (k+1 coefficients, constant term first).  The modulus
  // is reduced mod p, must be monic, and is verified irreducible.
  Field(long p, int k, const std::vector<long>& modulus);

  long characteristic() const;
  int extension_degree() const;
  long order() const;
  const std::vector<long>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(long index) const;
  FieldElement from_coefficients(const std::vector<long>& coeffs) const;
  FieldElement from_integer(long v) const;  // v mod p in the prime subfield

  // All q elements, zero first, in index order.
  std::vector<FieldElement> elements() const;

  // "GF(7)" or "GF(2^3; modulus=[1,1,0,1])"; used verbatim in reports.
  const std::string& to_string() const;

  bool operator==(const Field& o) const { return data_ == o.data_; }
  bool operator!=(const Field& o) const { return data_ != o.data_; }

  const FieldData* data() const { return data_; }

 private:
  const FieldData* data_;
};

class FieldElement {
 public:
  FieldElement() : f_(nullptr), v_(0) {}  // detached; any use throws
  FieldElement(const FieldData* f, long v) : f_(f), v_(static_cast<uint32_t>(v)) {}

  long index() const;
  std::vector<long> coefficients() const;  // length k, constant term first
  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const;       // throws std::domain_error on zero
  FieldElement pow(long e) const;     // square-and-multiply; e < 0 via inverse

  // Mixing elements of different fields is a hard error.
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Ordering by (field identity, index); usable as a map key.
  bool operator<(const FieldElement& o) const;

  std::string to_string() const;  // polynomial form, e.g. "t^2+t+1"

 private:
  const FieldData* checked() const;
  const FieldData* same_field(const FieldElement& o) const;

  const FieldData* f_;
  uint32_t v_;
};

}  // namespace agss::gf
