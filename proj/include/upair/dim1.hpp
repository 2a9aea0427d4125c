#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "upair/monomial.hpp"

/// Oriented 0- and 1-manifolds: bounded 1-manifolds are perfect matchings of
/// boundary points plus a count of closed circles.
namespace upair::dim1 {

struct Boundary0 {
  std::vector<std::string> pos;
  std::vector<std::string> neg;

  /// Throws InputError on repeated labels.
  void validate() const;
  /// pos = {"p1".."pj"}, neg = {"n1".."nj"}.
  static Boundary0 standard(std::size_t j);

  friend bool operator==(const Boundary0&, const Boundary0&) = default;
};

/// Canonical form of a compact oriented 1-manifold with boundary `boundary`.
/// Arc k joins pos[k] to neg[match[k]].
class Bounded1Manifold {
 public:
  Bounded1Manifold() = default;
  /// Throws InputError unless `match` is a permutation of 0..j-1 and |pos| = |neg|.
  Bounded1Manifold(Boundary0 boundary, std::vector<std::size_t> match,
                   std::uint64_t closed_circles = 0);

  const Boundary0& boundary() const { return boundary_; }
  const std::vector<std::size_t>& match() const { return match_; }
  std::uint64_t closed_circles() const { return closed_circles_; }
  std::size_t arcs() const { return match_.size(); }

  friend bool operator==(const Bounded1Manifold&, const Bounded1Manifold&) = default;

 private:
  Boundary0 boundary_;
  std::vector<std::size_t> match_;
  std::uint64_t closed_circles_ = 0;
};

struct Closed1Manifold {
  std::uint64_t circles = 0;
  friend bool operator==(const Closed1Manifold&, const Closed1Manifold&) = default;
};

/// Cycle count of the arc-gluing permutation plus both closed-circle counts.
/// Throws InputError if the boundaries differ.
Closed1Manifold glue1(const Bounded1Manifold& m, const Bounded1Manifold& n);

inline std::uint64_t complexity1(const Closed1Manifold& c) { return c.circles; }

/// Every matching of `boundary` (lexicographic permutation order) times
/// closed-circle counts 0..max_closed. Empty if |pos| != |neg|.
std::vector<Bounded1Manifold> enumerate1(const Boundary0& boundary, std::uint64_t max_closed);

/// Closed 0-manifold with p positive and q negative points as u^p v^q.
monomial::Monomial points_to_monomial0(std::uint64_t p, std::uint64_t q);
/// Alphabet {u, v} with u <-> v (orientation reversal of points).
monomial::Involution point_involution();

std::string universe(const Bounded1Manifold& m);
inline std::string universe(const Closed1Manifold&) { return {}; }

void to_json(nlohmann::json& j, const Boundary0& b);
void from_json(const nlohmann::json& j, Boundary0& b);
void to_json(nlohmann::json& j, const Bounded1Manifold& m);
void from_json(const nlohmann::json& j, Bounded1Manifold& m);
void to_json(nlohmann::json& j, const Closed1Manifold& c);
void from_json(const nlohmann::json& j, Closed1Manifold& c);

/// Gluing theory of bounded 1-manifolds; orientation reversal fixes every
/// closed 1-manifold.
struct Theory {
  using Basis = Bounded1Manifold;
  using Closed = Closed1Manifold;
  using Complexity = std::uint64_t;

  Closed glue(const Basis& a, const Basis& b) const { return glue1(a, b); }
  Closed reverse(const Closed& c) const { return c; }
  Complexity complexity(const Closed& c) const { return complexity1(c); }
};

}  // namespace upair::dim1
