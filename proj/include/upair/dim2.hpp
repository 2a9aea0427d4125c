#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

/// Compact oriented surfaces whose boundary is j labelled circles.
///
/// A bounded surface is recorded up to diffeomorphism rel boundary by the
/// partition of its boundary circles among connected components, the genus of
/// each such component, and the genera of its closed components.
namespace upair::dim2 {

struct Part {
  std::vector<std::uint32_t> circles;  // sorted, nonempty
  std::uint32_t genus = 0;
  friend bool operator==(const Part&, const Part&) = default;
};

class Bounded2Manifold {
 public:
  Bounded2Manifold() = default;
  /// Canonicalizes (circles sorted within parts, parts by smallest circle,
  /// closed genera ascending). Throws InputError unless the parts partition
  /// {0..boundary_circles-1} into nonempty sets.
  Bounded2Manifold(std::uint32_t boundary_circles, std::vector<Part> parts,
                   std::vector<std::uint32_t> closed_genera = {});

  std::uint32_t boundary_circles() const { return boundary_circles_; }
  const std::vector<Part>& parts() const { return parts_; }
  const std::vector<std::uint32_t>& closed_genera() const { return closed_genera_; }

  /// Sum over parts of 2 - 2g - b, plus 2 - 2g per closed component.
  std::int64_t euler_characteristic() const;

  friend bool operator==(const Bounded2Manifold&, const Bounded2Manifold&) = default;

 private:
  std::uint32_t boundary_circles_ = 0;
  std::vector<Part> parts_;
  std::vector<std::uint32_t> closed_genera_;
};

/// Closed oriented surface as the ascending multiset of component genera.
struct ClosedSurface {
  std::vector<std::uint32_t> genera;

  ClosedSurface() = default;
  explicit ClosedSurface(std::vector<std::uint32_t> g);

  std::int64_t euler_characteristic() const;
  friend bool operator==(const ClosedSurface&, const ClosedSurface&) = default;
};

/// (n, -chi, -chi_1, ..., -chi_n) with chi_1 <= ... <= chi_n. Compared
/// lexicographically as if both were extended by an infinite run of -3.
struct ComplexityTuple {
  std::vector<std::int64_t> entries;

  friend std::strong_ordering operator<=>(const ComplexityTuple& a, const ComplexityTuple& b);
  friend bool operator==(const ComplexityTuple& a, const ComplexityTuple& b) {
    return (a <=> b) == 0;
  }
};

inline constexpr std::int64_t kComplexityPad = -3;

/// Glues m to the reverse of n along the identity of the boundary circles.
/// Throws InputError on a boundary mismatch and std::logic_error if the
/// gluing produces an impossible Euler characteristic.
ClosedSurface glue2(const Bounded2Manifold& m, const Bounded2Manifold& n);

ComplexityTuple complexity2(const ClosedSurface& c);

inline std::strong_ordering compare_complexity(const ComplexityTuple& a, const ComplexityTuple& b) {
  return a <=> b;
}

/// All canonical forms with j boundary circles, part genera <= g_max and a
/// closed collection whose cost sum(1 + genus) is at most closed_budget.
/// Order: set partitions (restricted growth strings), then part genera, then
/// closed collections, each lexicographic.
std::vector<Bounded2Manifold> enumerate2(std::uint32_t j, std::uint32_t g_max,
                                         std::uint32_t closed_budget);

/// Euler characteristic of the glued surface m U -n computed by counting the
/// cells of an explicit CW structure after identifying boundary circles.
std::int64_t euler_oracle(const Bounded2Manifold& m, const Bounded2Manifold& n);

std::string universe(const Bounded2Manifold& m);
inline std::string universe(const ClosedSurface&) { return {}; }

void to_json(nlohmann::json& j, const Bounded2Manifold& m);
void from_json(const nlohmann::json& j, Bounded2Manifold& m);
void to_json(nlohmann::json& j, const ClosedSurface& c);
void from_json(const nlohmann::json& j, ClosedSurface& c);
void to_json(nlohmann::json& j, const ComplexityTuple& c);

struct Theory {
  using Basis = Bounded2Manifold;
  using Closed = ClosedSurface;
  using Complexity = ComplexityTuple;

  Closed glue(const Basis& a, const Basis& b) const { return glue2(a, b); }
  Closed reverse(const Closed& c) const { return c; }
  Complexity complexity(const Closed& c) const { return complexity2(c); }
};

}  // namespace upair::dim2
