#pragma once

#include <concepts>
#include <initializer_list>
#include <map>
#include <optional>
#include <ranges>
#include <string>
#include <utility>

#include <json.hpp>

#include "upair/error.hpp"
#include "upair/scalar.hpp"

namespace upair {

/// A basis descriptor serializes to JSON and names the "universe" it lives in
/// (e.g. the boundary it is attached to). Terms from different universes never
/// mix in one sum.
template <class T>
concept Descriptor = std::equality_comparable<T> && requires(const T& t, nlohmann::json& j) {
  { universe(t) } -> std::convertible_to<std::string>;
  to_json(j, t);
};

/// Canonical ordering key of a descriptor: its compact JSON serialization.
template <Descriptor Key>
std::string canonical_key(const Key& k) {
  nlohmann::json j;
  to_json(j, k);
  return j.dump();
}

/// Finite linear combination of descriptors with Scalar coefficients.
///
/// Zero coefficients are never stored; iteration is in canonical key order.
template <Descriptor Key>
class FormalSum {
 public:
  struct Term {
    Key basis;
    Scalar coeff;
  };

  FormalSum() = default;
  FormalSum(std::initializer_list<std::pair<Key, Scalar>> terms) {
    for (const auto& [k, c] : terms) add(k, c);
  }

  static FormalSum single(const Key& k, const Scalar& c = Scalar(1)) {
    FormalSum s;
    s.add(k, c);
    return s;
  }

  void add(const Key& k, const Scalar& c) { add_keyed(canonical_key(k), k, c); }

  /// Variant of add() for callers that already hold the canonical key.
  void add_keyed(const std::string& key, const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    std::string u = universe(k);
    if (universe_ && *universe_ != u)
      throw InputError("descriptor universe mismatch: '" + *universe_ + "' vs '" + u + "'");
    universe_ = std::move(u);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, Term{k, c});
      return;
    }
    it->second.coeff += c;
    if (it->second.coeff.is_zero()) {
      terms_.erase(it);
      if (terms_.empty()) universe_.reset();
    }
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::optional<std::string>& universe_name() const { return universe_; }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(canonical_key(k));
    return it == terms_.end() ? Scalar() : it->second.coeff;
  }

  auto terms() const { return std::views::values(terms_); }

  FormalSum scaled(const Scalar& a) const {
    FormalSum out;
    for (const auto& [key, t] : terms_) out.add_keyed(key, t.basis, a * t.coeff);
    return out;
  }

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [key, t] : a.terms_) {
      if (key != it->first || !(t.coeff == it->second.coeff)) return false;
      ++it;
    }
    return true;
  }

 private:
  std::map<std::string, Term> terms_;
  std::optional<std::string> universe_;
};

/// alpha*x + beta*y. Throws InputError when x and y live in different universes.
template <Descriptor Key>
FormalSum<Key> sum_combine(const FormalSum<Key>& x, const FormalSum<Key>& y, const Scalar& alpha,
                           const Scalar& beta) {
  if (x.universe_name() && y.universe_name() && *x.universe_name() != *y.universe_name())
    throw InputError("cannot combine sums over '" + *x.universe_name() + "' and '" +
                     *y.universe_name() + "'");
  FormalSum<Key> out;
  for (const auto& t : x.terms()) out.add(t.basis, alpha * t.coeff);
  for (const auto& t : y.terms()) out.add(t.basis, beta * t.coeff);
  return out;
}

template <Descriptor Key>
void to_json(nlohmann::json& j, const FormalSum<Key>& s) {
  j = nlohmann::json::array();
  for (const auto& t : s.terms()) {
    nlohmann::json basis;
    to_json(basis, t.basis);
    j.push_back({{"basis", std::move(basis)}, {"coeff", t.coeff}});
  }
}

/// Parses a term list. `parse_key` turns one "basis" value into a Key and may
/// throw InputError; the message is prefixed with the offending term index.
template <Descriptor Key, class Parse>
FormalSum<Key> formal_sum_from_json(const nlohmann::json& j, Parse&& parse_key) {
  if (!j.is_array()) throw InputError("formal sum must be a JSON array of terms");
  FormalSum<Key> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const auto& term = j[n];
    try {
      if (!term.is_object() || !term.contains("basis") || !term.contains("coeff"))
        throw InputError("expected {\"basis\":...,\"coeff\":...}");
      out.add(parse_key(term.at("basis")), term.at("coeff").get<Scalar>());
    } catch (const InputError& e) {
      throw InputError("term " + std::to_string(n) + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw InputError("term " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace upair

namespace upair {

template <Descriptor Key>
FormalSum<Key> formal_sum_from_json(const nlohmann::json& j) {
  return formal_sum_from_json<Key>(j, [](const nlohmann::json& b) { return b.get<Key>(); });
}

}  // namespace upair
