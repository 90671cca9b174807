#include "shlie/rational.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace shlie {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  // Grammar: '-'? digits ('/' digits)?  — no spaces, no '+', no exponents.
  size_t i = 0;
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  };
  if (i < s.size() && s[i] == '-') ++i;
  size_t num_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == num_start) return fail();
  std::string den;
  if (i < s.size()) {
    if (s[i] != '/') return fail();
    ++i;
    size_t den_start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == den_start || i != s.size()) return fail();
    den = s.substr(den_start);
    bool all_zero = den.find_first_not_of('0') == std::string::npos;
    if (all_zero) throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  mpq_class v(s, 10);
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const { return v_.get_str(); }

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  return Rat(mpq_class(v_ / o.v_));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rat& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rat max_abs(const Vec& v) {
  Rat m(0);
  for (const auto& x : v) {
    Rat a = x.abs();
    if (a > m) m = a;
  }
  return m;
}

}  // namespace shlie
