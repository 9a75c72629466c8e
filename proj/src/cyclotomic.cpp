#include "nichols/cyclotomic.hpp"

#include <charconv>
#include <numeric>

#include "nichols/errors.hpp"

namespace nichols {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::LikelyInfinite, "integer overflow in root arithmetic");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::LikelyInfinite, "integer overflow in root arithmetic");
  return r;
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd64(a, b), b < 0 ? -b : b);
}

int64_t mod64(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

RootOfUnity make_root(int64_t a, int64_t m) {
  if (m == 0) fail(ErrorKind::InvalidOrder, "root of unity with denominator 0");
  if (m < 0) {
    a = -a;
    m = -m;
  }
  a = mod64(a, m);
  int64_t g = std::gcd(a, m);
  RootOfUnity r;
  r.a_ = a / g;
  r.m_ = m / g;
  return r;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  int64_t l = lcm64(m_, o.m_);
  __int128 num = static_cast<__int128>(a_) * (l / m_) + static_cast<__int128>(o.a_) * (l / o.m_);
  return make_root(static_cast<int64_t>(num % l), l);
}

RootOfUnity RootOfUnity::inverse() const { return make_root(-a_, m_); }

RootOfUnity RootOfUnity::pow(int64_t k) const {
  __int128 num = static_cast<__int128>(a_) * k;
  num %= m_;
  return make_root(static_cast<int64_t>(num), m_);
}

std::string RootOfUnity::str() const { return std::to_string(a_) + "/" + std::to_string(m_); }

RootOfUnity parse_root(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int64_t v = 0;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
      fail(ErrorKind::ParseError, "malformed root of unity \"" + std::string(text) + "\"");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_root(parse_int(text), 1);
  return make_root(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

bool q_number_is_zero(int64_t n, const RootOfUnity& q) {
  if (n == 0) return true;
  if (n < 0) n = -n;  // (−n)_q = −q^{−n}(n)_q
  return !q.is_one() && n % q.order() == 0;
}

}  // namespace nichols
