#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace upair {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws InputError.
Rational parse_rational(const std::string& text);

/// Always "p/q" with q > 0, in lowest terms (integers print as "n/1").
std::string format_rational(const Rational& q);

/// Exact Gaussian rational re + im*i.
///
/// Both parts are kept canonical (gcd 1, positive denominator) after every
/// operation, so structural equality is numeric equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT: integers promote implicitly
  Scalar(Rational re, Rational im = 0);

  static Scalar i() { return Scalar(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |s|^2 = s * conj(s); always real and nonnegative.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  /// Exact division; throws std::domain_error on a zero divisor.
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

Scalar conj(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

void to_json(nlohmann::json& j, const Scalar& s);
void from_json(const nlohmann::json& j, Scalar& s);

}  // namespace upair
