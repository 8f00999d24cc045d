#ifndef AGSS_RNG_HPP
#define AGSS_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace agss {
namespace rng {

// Supplier of uniform digits in [0, bound). Sharing and the MPC simulation
// draw all their randomness through this interface so runs can be replayed
// from a seed or driven from a fixed tape.
class DigitSource {
 public:
  virtual ~DigitSource() = default;
  virtual uint32_t next_digit(uint32_t bound) = 0;
};

// mt19937_64 with rejection sampling. std::uniform_int_distribution is not
// pinned down across standard libraries, so the mapping from raw engine
// output to digits is done by hand.
class SeededSource final : public DigitSource {
 public:
  explicit SeededSource(uint64_t seed) : gen_(seed) {}

  uint32_t next_digit(uint32_t bound) override {
    if (bound == 0) throw std::invalid_argument("digit bound must be positive");
    const uint64_t span = UINT64_MAX / bound * bound;
    for (;;) {
      uint64_t x = gen_();
      if (x < span) return static_cast<uint32_t>(x % bound);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Replays a fixed digit sequence; used by exhaustive enumerations and tests.
class TapeSource final : public DigitSource {
 public:
  explicit TapeSource(std::vector<uint32_t> digits)
      : digits_(std::move(digits)) {}

  uint32_t next_digit(uint32_t bound) override {
    if (bound == 0) throw std::invalid_argument("digit bound must be positive");
    if (pos_ >= digits_.size()) throw std::out_of_range("digit tape exhausted");
    uint32_t d = digits_[pos_++];
    if (d >= bound) throw std::out_of_range("tape digit exceeds bound");
    return d;
  }

  size_t consumed() const { return pos_; }

 private:
  std::vector<uint32_t> digits_;
  size_t pos_ = 0;
};

}  // namespace rng
}  // namespace agss

#endif
