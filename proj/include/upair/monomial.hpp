#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "upair/formal_sum.hpp"

/// Polynomial rings whose indeterminates are permuted by an order-two
/// involution, with the sesquilinear pairing a (x) b -> a * conj(b).
///
/// Indeterminates are opaque prime names: prime 3-manifolds under connected
/// sum, prime long knots under concatenation, or oriented points.
namespace upair::monomial {

class Involution {
 public:
  Involution() = default;
  /// `alphabet` must hold distinct names; each swap pairs two distinct letters
  /// of the alphabet and no letter is swapped twice. Unswapped letters are fixed.
  Involution(std::vector<std::string> alphabet,
             const std::vector<std::pair<std::string, std::string>>& swaps);

  static Involution identity(std::vector<std::string> alphabet) { return {std::move(alphabet), {}}; }

  /// Sorted alphabet.
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  bool contains(const std::string& prime) const;
  /// Throws InputError for an unknown prime.
  const std::string& image(const std::string& prime) const;

  std::vector<std::pair<std::string, std::string>> swaps() const;
  std::vector<std::string> fixed() const;

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  std::size_t index_of(const std::string& prime) const;

  std::vector<std::string> alphabet_;
  std::vector<std::size_t> partner_;
};

class Monomial {
 public:
  Monomial() = default;
  /// Zero exponents are dropped.
  explicit Monomial(const std::map<std::string, std::uint32_t>& exponents);

  const std::map<std::string, std::uint32_t>& exponents() const { return exponents_; }
  std::uint32_t exponent(const std::string& prime) const;
  std::uint64_t degree() const;
  bool is_unit() const { return exponents_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::map<std::string, std::uint32_t> exponents_;
};

inline std::string universe(const Monomial&) { return {}; }
void to_json(nlohmann::json& j, const Monomial& m);
void from_json(const nlohmann::json& j, Monomial& m);

using Polynomial = FormalSum<Monomial>;

/// Ordered list of (orbit exponent sum, smaller exponent) pairs, largest
/// first. Comparison is lexicographic with (0,0) padding.
struct MonomialComplexity {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

  friend std::strong_ordering operator<=>(const MonomialComplexity& a, const MonomialComplexity& b);
  friend bool operator==(const MonomialComplexity& a, const MonomialComplexity& b) {
    return (a <=> b) == 0;
  }
};

/// Renames every prime p to sigma(p). Throws InputError on unknown primes.
Monomial mono_conj(const Monomial& m, const Involution& sigma);

/// x * conj(y), conjugating both coefficients and monomials of y.
Polynomial pair_poly(const Polynomial& x, const Polynomial& y, const Involution& sigma);

MonomialComplexity complexity_mono(const Monomial& m, const Involution& sigma);

/// The connected-sum word over prime names as a monomial; the empty word
/// (S^3, or the unknot) is the unit. Throws InputError on unknown primes.
Monomial connected_sum_monomial(const std::vector<std::string>& primes, const Involution& sigma);

/// All monomials over sigma's alphabet of total degree <= max_degree, in
/// graded lexicographic order of exponent vectors.
std::vector<Monomial> enumerate_monomials(const Involution& sigma, std::uint32_t max_degree);

std::string to_string(const Monomial& m);

void to_json(nlohmann::json& j, const Involution& s);
void from_json(const nlohmann::json& j, Involution& s);
void to_json(nlohmann::json& j, const MonomialComplexity& c);

/// Monomials as a gluing theory: glue(a, b) = a * conj(b), reversal = conj.
struct Theory {
  using Basis = Monomial;
  using Closed = Monomial;
  using Complexity = MonomialComplexity;

  Involution sigma;

  Closed glue(const Basis& a, const Basis& b) const;
  Closed reverse(const Closed& c) const { return mono_conj(c, sigma); }
  Complexity complexity(const Closed& c) const { return complexity_mono(c, sigma); }
};

}  // namespace upair::monomial
