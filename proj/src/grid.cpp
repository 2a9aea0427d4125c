#include "upair/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "upair/error.hpp"

namespace upair {

CoeffGrid::CoeffGrid(std::vector<Scalar> values, std::string description)
    : values_(std::move(values)), description_(std::move(description)) {
  auto find = [&](const Scalar& s) {
    return std::find(values_.begin(), values_.end(), s);
  };
  bool has_zero = false, has_nonzero = false;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (std::find(values_.begin(), values_.begin() + static_cast<long>(k), values_[k]) !=
        values_.begin() + static_cast<long>(k))
      throw InputError("coefficient grid has repeated values");
    (values_[k].is_zero() ? has_zero : has_nonzero) = true;
  }
  if (!has_zero || !has_nonzero) throw InputError("coefficient grid needs 0 and a nonzero value");

  std::vector<Scalar> units;
  for (const Scalar& u : {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()}) {
    bool closed = std::all_of(values_.begin(), values_.end(),
                              [&](const Scalar& v) { return find(u * v) != values_.end(); });
    if (closed) units.push_back(u);
  }
  auto key = [](const Scalar& s) { return std::make_tuple(s.re(), s.im()); };
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k].is_zero()) continue;
    bool is_rep = std::all_of(units.begin(), units.end(),
                              [&](const Scalar& u) { return !(key(values_[k]) < key(u * values_[k])); });
    if (is_rep) leading_.push_back(k);
  }
}

CoeffGrid CoeffGrid::parse(const std::string& grid_name) {
  if (grid_name == "pm1") return CoeffGrid({Scalar(0), Scalar(1), Scalar(-1)}, "pm1: {0, 1, -1}");
  if (grid_name.rfind("gauss", 0) == 0 && grid_name.size() > 5) {
    std::string digits = grid_name.substr(5);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 3)
      throw InputError("bad coefficient grid '" + grid_name + "'");
    long k = std::stol(digits);
    if (k < 1) throw InputError("gauss grid needs modulus >= 1");
    std::vector<std::tuple<long, long, long>> pts;  // (norm, -re, -im)
    for (long a = -k; a <= k; ++a)
      for (long b = -k; b <= k; ++b)
        if (a * a + b * b <= k * k) pts.emplace_back(a * a + b * b, -a, -b);
    std::sort(pts.begin(), pts.end());
    std::vector<Scalar> values;
    for (const auto& [n, a, b] : pts) values.emplace_back(Rational(-a), Rational(-b));
    return CoeffGrid(std::move(values),
                     grid_name + ": Gaussian integers a+bi with a^2+b^2 <= " + std::to_string(k * k));
  }
  throw InputError("unknown coefficient grid '" + grid_name + "' (expected pm1 or gauss<k>)");
}

}  // namespace upair
