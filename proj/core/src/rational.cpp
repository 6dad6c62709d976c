#include "cohlab/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace cohlab {

namespace {

using i128 = __int128;

long long narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail(Errc::Overflow, std::string("rational ") + what + " exceeds 64 bits");
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces in 128-bit space, then narrows; the ctor re-reduction is a no-op.
Rat make(i128 n, i128 d, const char* what) {
  if (d == 0) fail(Errc::Overflow, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rat(narrow(n, what), narrow(d, what));
}

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) fail(Errc::Overflow, "zero denominator");
  if (d < 0) {
    if (n == std::numeric_limits<long long>::min() || d == std::numeric_limits<long long>::min())
      fail(Errc::Overflow, "rational value exceeds 64 bits");
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

Rat operator+(const Rat& a, const Rat& b) {
  return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_, "sum");
}

Rat operator-(const Rat& a, const Rat& b) {
  return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_, "difference");
}

Rat operator*(const Rat& a, const Rat& b) {
  return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_, "product");
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0) fail(Errc::Overflow, "division by zero");
  return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_, "quotient");
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) fail(Errc::SchemaError, "empty rational literal");
  auto parse_int = [](const std::string& s) -> long long {
    if (s.empty()) fail(Errc::SchemaError, "empty integer in rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail(Errc::SchemaError, "sign without digits in rational literal");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        fail(Errc::SchemaError, "bad character in rational literal: " + s);
    errno = 0;
    long long v = std::strtoll(s.c_str(), nullptr, 10);
    if (errno == ERANGE) fail(Errc::Overflow, "rational literal exceeds 64 bits: " + s);
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  long long p = parse_int(text.substr(0, slash));
  long long q = parse_int(text.substr(slash + 1));
  if (q == 0) fail(Errc::SchemaError, "zero denominator in rational literal: " + text);
  return Rat(p, q);
}

}  // namespace cohlab
