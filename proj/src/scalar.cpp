#include "upair/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "upair/error.hpp"

namespace upair {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') return false;
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero scalar");
  Rational n = b.norm();
  Scalar num = a * conj(b);
  return Scalar(num.re() / n, num.im() / n);
}

Scalar conj(const Scalar& s) { return Scalar(s.re(), -s.im()); }

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string im = sgn(im_) < 0 ? "-" + Rational(-im_).get_str() : "+" + im_.get_str();
  return re_.get_str() + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

void to_json(nlohmann::json& j, const Scalar& s) {
  j = nlohmann::json{{"re", format_rational(s.re())}, {"im", format_rational(s.im())}};
}

void from_json(const nlohmann::json& j, Scalar& s) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j.at("re").is_string() ||
      !j.at("im").is_string())
    throw InputError("scalar must be {\"re\":\"p/q\",\"im\":\"r/s\"}, got " + j.dump());
  s = Scalar(parse_rational(j.at("re").get<std::string>()),
             parse_rational(j.at("im").get<std::string>()));
}

}  // namespace upair
