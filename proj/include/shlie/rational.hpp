#pragma once
#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace shlie {

/// Exact rational number. Invariants: lowest terms, denominator > 0.
/// Backed by GMP; every constructor canonicalizes, and GMP arithmetic
/// preserves canonical form.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(int n) : v_(n) {}
  Rat(long num, long den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with an optional leading '-'. Throws
  /// std::invalid_argument on anything else (including q = 0).
  static Rat parse(const std::string& s);

  /// Canonical serialization: "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

using Vec = std::vector<Rat>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
/// Largest absolute value of any entry ("0" for the empty vector).
Rat max_abs(const Vec& v);

}  // namespace shlie
