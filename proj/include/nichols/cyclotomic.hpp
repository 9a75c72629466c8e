#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nichols {

using Integer = mpz_class;
using Rational = mpq_class;  // RationalScalar: always kept canonical

std::string to_string(const Rational& r);

// Overflow-checked int64 helpers; overflow raises LikelyInfinite, since it only
// happens when root coordinates grow without bound.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
int64_t mod64(int64_t a, int64_t m);

// e^{2πi a/m}, stored with 0 <= a < m and gcd(a, m) = 1 (the unit is 0/1).
class RootOfUnity {
 public:
  RootOfUnity() = default;

  int64_t numerator() const { return a_; }
  int64_t order() const { return m_; }
  bool is_one() const { return m_ == 1; }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }
  RootOfUnity inverse() const;
  RootOfUnity pow(int64_t k) const;

  // "a/m"
  std::string str() const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity& x, const RootOfUnity& y) {
    if (auto c = x.m_ <=> y.m_; c != 0) return c;
    return x.a_ <=> y.a_;
  }

 private:
  friend RootOfUnity make_root(int64_t a, int64_t m);
  int64_t a_ = 0;
  int64_t m_ = 1;
};

// Normalized e^{2πi a/m}; m = 0 raises InvalidOrder.
RootOfUnity make_root(int64_t a, int64_t m);

// Parses "a/m" (or a bare integer, read as a/1); raises ParseError or InvalidOrder.
RootOfUnity parse_root(std::string_view text);

inline RootOfUnity minus_one() { return make_root(1, 2); }

// (n)_q = 1 + q + ... + q^{n-1} vanishes. Convention: (0)_q = 0, so n = 0 gives true.
bool q_number_is_zero(int64_t n, const RootOfUnity& q);

}  // namespace nichols
