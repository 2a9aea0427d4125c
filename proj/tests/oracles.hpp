#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "upair/dim1.hpp"
#include "upair/monomial.hpp"
#include "upair/scalar.hpp"

namespace upair::oracle {

/// Counts components of m U -n by walking arcs endpoint to endpoint: boundary
/// points 0..j-1 are positive, j..2j-1 negative; every point has one m-arc and
/// one n-arc.
inline std::uint64_t walk_circles(const dim1::Bounded1Manifold& m, const dim1::Bounded1Manifold& n) {
  const std::size_t j = m.arcs();
  std::vector<std::size_t> via_m(2 * j), via_n(2 * j);
  for (std::size_t k = 0; k < j; ++k) {
    via_m[k] = j + m.match()[k];
    via_m[j + m.match()[k]] = k;
    via_n[k] = j + n.match()[k];
    via_n[j + n.match()[k]] = k;
  }
  std::vector<bool> seen(2 * j, false);
  std::uint64_t circles = 0;
  for (std::size_t start = 0; start < 2 * j; ++start) {
    if (seen[start]) continue;
    ++circles;
    std::size_t p = start;
    bool use_m = true;
    do {
      seen[p] = true;
      p = use_m ? via_m[p] : via_n[p];
      seen[p] = true;
      use_m = !use_m;
    } while (p != start);
  }
  return circles + m.closed_circles() + n.closed_circles();
}

/// Dense polynomial: exponent vector over a fixed alphabet -> coefficient.
using Dense = std::map<std::vector<std::uint32_t>, Scalar>;

inline Dense to_dense(const monomial::Polynomial& p, const std::vector<std::string>& alphabet) {
  Dense out;
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(alphabet.size());
    for (std::size_t k = 0; k < alphabet.size(); ++k) e[k] = t.basis.exponent(alphabet[k]);
    out[e] += t.coeff;
  }
  return out;
}

/// x * conj(y) by term-by-term convolution of exponent vectors; `image[k]`
/// is the alphabet index of the involution image of letter k.
inline Dense convolve_conj(const Dense& x, const Dense& y, const std::vector<std::size_t>& image) {
  Dense out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      std::vector<std::uint32_t> e = ex;
      for (std::size_t k = 0; k < ey.size(); ++k) e[image[k]] += ey[k];
      out[e] += cx * conj(cy);
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// Brute force over every assignment of grid values (no scaling
/// normalization): does any nonzero x have <x,x> = 0?
template <class T>
bool any_null_on_grid(const std::vector<typename T::Basis>& basis, const std::vector<Scalar>& grid, const T& theory) {
  const std::size_t n = basis.size();
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::size_t k = 0;
    while (k < n && digit[k] + 1 == grid.size()) digit[k++] = 0;
    if (k == n) return false;
    ++digit[k];
    bool nonzero = false;
    std::map<std::string, Scalar> value;
    for (std::size_t a = 0; a < n; ++a) {
      if (grid[digit[a]].is_zero()) continue;
      nonzero = true;
      for (std::size_t b = 0; b < n; ++b) {
        if (grid[digit[b]].is_zero()) continue;
        nlohmann::json key;
        to_json(key, theory.glue(basis[a], basis[b]));
        value[key.dump()] += grid[digit[a]] * conj(grid[digit[b]]);
      }
    }
    if (!nonzero) continue;
    bool null = true;
    for (const auto& [c, v] : value) null = null && v.is_zero();
    if (null) return true;
  }
}

}  // namespace upair::oracle
