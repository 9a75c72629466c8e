#include "nichols/formal.hpp"

#include <algorithm>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

void trim(FormalScalar::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

FormalScalar::FormalScalar(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

FormalScalar FormalScalar::xi_power(int64_t a, const Rational& c) {
  FormalScalar s;
  s.add_term({a}, c);
  return s;
}

FormalScalar FormalScalar::symbol(size_t r, int64_t e) {
  Exponents ex(r + 2, 0);
  ex[r + 1] = e;
  FormalScalar s;
  s.add_term(std::move(ex), 1);
  return s;
}

void FormalScalar::add_term(Exponents e, const Rational& c) {
  if (c == 0) return;
  trim(e);
  auto [it, fresh] = terms_.emplace(std::move(e), c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FormalScalar FormalScalar::inverse() const {
  if (!is_monomial()) fail(ErrorKind::InternalInvariantViolation, "inverse of a non-monomial formal scalar");
  const auto& [e, c] = *terms_.begin();
  Exponents ne(e.size());
  std::transform(e.begin(), e.end(), ne.begin(), [](int64_t x) { return -x; });
  FormalScalar s;
  s.add_term(std::move(ne), 1 / c);
  return s;
}

FormalScalar FormalScalar::operator-() const {
  FormalScalar s = *this;
  for (auto& [e, c] : s.terms_) c = -c;
  return s;
}

FormalScalar& FormalScalar::operator+=(const FormalScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FormalScalar& FormalScalar::operator-=(const FormalScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

FormalScalar operator*(const FormalScalar& a, const FormalScalar& b) {
  FormalScalar p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      FormalScalar::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] = checked_add(e[i], eb[i]);
      p.add_term(std::move(e), ca * cb);
    }
  return p;
}

std::string FormalScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += i == 0 ? "*xi" : "*D" + std::to_string(i - 1);
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

}  // namespace nichols
