#pragma once

#include <string>
#include <vector>

#include "upair/scalar.hpp"

namespace upair {

/// Finite coefficient grid for bounded null-vector searches.
///
/// `leading()` holds one representative of each orbit of the grid under the
/// unit scalars (among 1, -1, i, -i) that map the grid onto itself; the
/// representative is the orbit member with the largest (re, im). A vector and
/// its unit multiples pair to multiples of each other, so fixing the first
/// nonzero coefficient to a representative loses no null vector of the grid.
class CoeffGrid {
 public:
  /// Throws InputError unless `values` are distinct, contain 0 and a nonzero value.
  CoeffGrid(std::vector<Scalar> values, std::string description);

  /// "pm1" -> {0, 1, -1}; "gauss<k>" -> Gaussian integers of modulus <= k.
  static CoeffGrid parse(const std::string& grid_name);

  const std::vector<Scalar>& values() const { return values_; }
  const std::vector<std::size_t>& leading() const { return leading_; }
  const std::string& description() const { return description_; }

 private:
  std::vector<Scalar> values_;
  std::vector<std::size_t> leading_;  // indices into values_
  std::string description_;
};

}  // namespace upair
