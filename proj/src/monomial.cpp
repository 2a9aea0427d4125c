#include "upair/monomial.hpp"

#include <algorithm>
#include <set>

#include "upair/error.hpp"

namespace upair::monomial {

Involution::Involution(std::vector<std::string> alphabet,
                       const std::vector<std::pair<std::string, std::string>>& swaps)
    : alphabet_(std::move(alphabet)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  if (std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end())
    throw InputError("involution alphabet has repeated prime names");
  partner_.resize(alphabet_.size());
  for (std::size_t k = 0; k < partner_.size(); ++k) partner_[k] = k;
  for (const auto& [a, b] : swaps) {
    std::size_t ia = index_of(a), ib = index_of(b);
    if (ia == ib) throw InputError("prime '" + a + "' swapped with itself");
    if (partner_[ia] != ia || partner_[ib] != ib)
      throw InputError("prime swapped twice in involution: '" + a + "' / '" + b + "'");
    partner_[ia] = ib;
    partner_[ib] = ia;
  }
}

std::size_t Involution::index_of(const std::string& prime) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), prime);
  if (it == alphabet_.end() || *it != prime) throw InputError("unknown prime '" + prime + "'");
  return static_cast<std::size_t>(it - alphabet_.begin());
}

bool Involution::contains(const std::string& prime) const {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), prime);
}

const std::string& Involution::image(const std::string& prime) const {
  return alphabet_[partner_[index_of(prime)]];
}

std::vector<std::pair<std::string, std::string>> Involution::swaps() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t k = 0; k < alphabet_.size(); ++k)
    if (partner_[k] > k) out.emplace_back(alphabet_[k], alphabet_[partner_[k]]);
  return out;
}

std::vector<std::string> Involution::fixed() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < alphabet_.size(); ++k)
    if (partner_[k] == k) out.push_back(alphabet_[k]);
  return out;
}

Monomial::Monomial(const std::map<std::string, std::uint32_t>& exponents) {
  for (const auto& [p, e] : exponents)
    if (e != 0) exponents_.emplace(p, e);
}

std::uint32_t Monomial::exponent(const std::string& prime) const {
  auto it = exponents_.find(prime);
  return it == exponents_.end() ? 0 : it->second;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [p, e] : exponents_) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [p, e] : b.exponents_) out.exponents_[p] += e;
  return out;
}

std::strong_ordering operator<=>(const MonomialComplexity& a, const MonomialComplexity& b) {
  const std::pair<std::uint64_t, std::uint64_t> pad{0, 0};
  std::size_t n = std::max(a.pairs.size(), b.pairs.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& x = k < a.pairs.size() ? a.pairs[k] : pad;
    const auto& y = k < b.pairs.size() ? b.pairs[k] : pad;
    if (auto c = x <=> y; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Monomial mono_conj(const Monomial& m, const Involution& sigma) {
  std::map<std::string, std::uint32_t> out;
  for (const auto& [p, e] : m.exponents()) out[sigma.image(p)] = e;
  return Monomial(out);
}

Polynomial pair_poly(const Polynomial& x, const Polynomial& y, const Involution& sigma) {
  std::vector<std::pair<Monomial, Scalar>> conj_y;
  for (const auto& t : y.terms()) conj_y.emplace_back(mono_conj(t.basis, sigma), conj(t.coeff));
  Polynomial out;
  for (const auto& a : x.terms()) {
    for (const auto& p : a.basis.exponents())
      if (!sigma.contains(p.first)) throw InputError("unknown prime '" + p.first + "'");
    for (const auto& [mono, c] : conj_y) out.add(a.basis * mono, a.coeff * c);
  }
  return out;
}

MonomialComplexity complexity_mono(const Monomial& m, const Involution& sigma) {
  MonomialComplexity out;
  for (const auto& [p, e] : m.exponents()) {
    const std::string& q = sigma.image(p);
    if (q == p) {
      out.pairs.emplace_back(e, 0);
      continue;
    }
    std::uint32_t f = m.exponent(q);
    // Each swapped orbit is visited once, from its smaller name, or from
    // whichever side is present.
    if (f != 0 && q < p) continue;
    out.pairs.emplace_back(std::uint64_t{e} + f, std::min(e, f));
  }
  std::sort(out.pairs.begin(), out.pairs.end(), std::greater<>());
  return out;
}

Monomial connected_sum_monomial(const std::vector<std::string>& primes, const Involution& sigma) {
  std::map<std::string, std::uint32_t> exps;
  for (const auto& p : primes) {
    if (!sigma.contains(p)) throw InputError("unknown prime '" + p + "'");
    ++exps[p];
  }
  return Monomial(exps);
}

namespace {

void extend(const std::vector<std::string>& alphabet, std::size_t k, std::uint32_t budget,
            std::map<std::string, std::uint32_t>& cur, std::vector<Monomial>& out) {
  if (k == alphabet.size()) {
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e <= budget; ++e) {
    cur[alphabet[k]] = e;
    extend(alphabet, k + 1, budget - e, cur, out);
  }
  cur.erase(alphabet[k]);
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const Involution& sigma, std::uint32_t max_degree) {
  std::vector<Monomial> out;
  std::map<std::string, std::uint32_t> cur;
  extend(sigma.alphabet(), 0, max_degree, cur, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (const auto& [p, e] : m.exponents()) {
    if (!s.empty()) s += "*";
    s += p;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

void to_json(nlohmann::json& j, const Monomial& m) {
  j = nlohmann::json{{"exponents", nlohmann::json::object()}};
  for (const auto& [p, e] : m.exponents()) j["exponents"][p] = e;
}

void from_json(const nlohmann::json& j, Monomial& m) {
  if (!j.is_object() || !j.contains("exponents") || !j.at("exponents").is_object())
    throw InputError("monomial must be {\"exponents\":{...}}");
  std::map<std::string, std::uint32_t> exps;
  for (const auto& [p, e] : j.at("exponents").items()) {
    if (!e.is_number_unsigned()) throw InputError("exponent of '" + p + "' must be a nonnegative integer");
    exps[p] = e.get<std::uint32_t>();
  }
  m = Monomial(exps);
}

void to_json(nlohmann::json& j, const Involution& s) {
  j = nlohmann::json{{"swaps", nlohmann::json::array()}, {"fixed", s.fixed()}};
  for (const auto& [a, b] : s.swaps()) j["swaps"].push_back({a, b});
}

void from_json(const nlohmann::json& j, Involution& s) {
  if (!j.is_object()) throw InputError("involution must be {\"swaps\":[...],\"fixed\":[...]}");
  std::vector<std::string> alphabet;
  std::vector<std::pair<std::string, std::string>> swaps;
  if (j.contains("swaps")) {
    for (const auto& pr : j.at("swaps")) {
      if (!pr.is_array() || pr.size() != 2) throw InputError("each swap must be a pair of names");
      swaps.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
      alphabet.push_back(swaps.back().first);
      alphabet.push_back(swaps.back().second);
    }
  }
  if (j.contains("fixed"))
    for (const auto& p : j.at("fixed")) alphabet.push_back(p.get<std::string>());
  s = Involution(std::move(alphabet), swaps);
}

void to_json(nlohmann::json& j, const MonomialComplexity& c) {
  j = nlohmann::json::array();
  for (const auto& [sum, min] : c.pairs) j.push_back({sum, min});
}

Monomial Theory::glue(const Basis& a, const Basis& b) const {
  for (const auto& p : a.exponents())
    if (!sigma.contains(p.first)) throw InputError("unknown prime '" + p.first + "'");
  return a * mono_conj(b, sigma);
}

}  // namespace upair::monomial
