#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>
#include "nichols/cyclotomic.hpp"

namespace nichols {

// Finite sums of terms c·ξ^a·∏_r D_r^{e_r} with rational c. The D_r are
// independent formal units standing for (q_ββ − 1)^{N_β}.
class FormalScalar {
 public:
  // [ξ power, D_0 power, D_1 power, ...] with trailing zeros trimmed.
  using Exponents = std::vector<int64_t>;

  FormalScalar() = default;
  FormalScalar(const Rational& c);
  FormalScalar(int c) : FormalScalar(Rational(c)) {}

  static FormalScalar xi_power(int64_t a, const Rational& c = 1);
  static FormalScalar symbol(size_t r, int64_t e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  // Monomials only; anything else raises InternalInvariantViolation.
  FormalScalar inverse() const;

  FormalScalar operator-() const;
  FormalScalar& operator+=(const FormalScalar& o);
  FormalScalar& operator-=(const FormalScalar& o);
  friend FormalScalar operator+(FormalScalar a, const FormalScalar& b) { return a += b; }
  friend FormalScalar operator-(FormalScalar a, const FormalScalar& b) { return a -= b; }
  friend FormalScalar operator*(const FormalScalar& a, const FormalScalar& b);
  friend FormalScalar operator/(const FormalScalar& a, const FormalScalar& b) { return a * b.inverse(); }
  friend bool operator==(const FormalScalar&, const FormalScalar&) = default;

  // "3/2*xi^-1*D2^-1 + 1", or "0".
  std::string str() const;

 private:
  void add_term(Exponents e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

}  // namespace nichols
