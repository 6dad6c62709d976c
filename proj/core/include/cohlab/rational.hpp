#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "cohlab/error.hpp"

namespace cohlab {

// Exact rational with int64 numerator/denominator, always reduced, den > 0.
// Label arithmetic here is tame (midpoints and half-offsets of small values),
// but every operation still goes through 128-bit intermediates and throws
// Errc::Overflow rather than wrapping.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d);

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rat operator-() const { return Rat(-num_, den_); }
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept;

  std::string str() const;  // "p" or "p/q", reduced

 private:
  long long num_ = 0;
  long long den_ = 1;
};

inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / Rat(2); }

// Accepts an optionally signed integer or "p/q" with q > 0 after reduction.
Rat parse_rational(const std::string& text);

}  // namespace cohlab
