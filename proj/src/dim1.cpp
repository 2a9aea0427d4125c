#include "upair/dim1.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "upair/error.hpp"

namespace upair::dim1 {

void Boundary0::validate() const {
  std::set<std::string> seen;
  for (const auto* side : {&pos, &neg})
    for (const auto& label : *side)
      if (!seen.insert(label).second) throw InputError("repeated boundary label '" + label + "'");
}

Boundary0 Boundary0::standard(std::size_t j) {
  Boundary0 b;
  for (std::size_t k = 1; k <= j; ++k) {
    b.pos.push_back("p" + std::to_string(k));
    b.neg.push_back("n" + std::to_string(k));
  }
  return b;
}

Bounded1Manifold::Bounded1Manifold(Boundary0 boundary, std::vector<std::size_t> match,
                                   std::uint64_t closed_circles)
    : boundary_(std::move(boundary)), match_(std::move(match)), closed_circles_(closed_circles) {
  boundary_.validate();
  if (boundary_.pos.size() != boundary_.neg.size())
    throw InputError("a bounded 1-manifold needs as many positive as negative boundary points");
  if (match_.size() != boundary_.pos.size())
    throw InputError("matching must cover every positive boundary point");
  std::vector<bool> hit(match_.size(), false);
  for (auto t : match_) {
    if (t >= match_.size() || hit[t]) throw InputError("matching is not a bijection pos -> neg");
    hit[t] = true;
  }
}

Closed1Manifold glue1(const Bounded1Manifold& m, const Bounded1Manifold& n) {
  if (!(m.boundary() == n.boundary())) throw InputError("glue1: boundary mismatch");
  // Follow pos -> neg along m, then back neg -> pos along n.
  const std::size_t j = m.arcs();
  std::vector<std::size_t> n_inv(j);
  for (std::size_t k = 0; k < j; ++k) n_inv[n.match()[k]] = k;
  std::vector<bool> visited(j, false);
  std::uint64_t cycles = 0;
  for (std::size_t start = 0; start < j; ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t k = start; !visited[k]; k = n_inv[m.match()[k]]) visited[k] = true;
  }
  return {cycles + m.closed_circles() + n.closed_circles()};
}

std::vector<Bounded1Manifold> enumerate1(const Boundary0& boundary, std::uint64_t max_closed) {
  boundary.validate();
  std::vector<Bounded1Manifold> out;
  if (boundary.pos.size() != boundary.neg.size()) return out;
  std::vector<std::size_t> perm(boundary.pos.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint64_t c = 0; c <= max_closed; ++c) out.emplace_back(boundary, perm, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

monomial::Monomial points_to_monomial0(std::uint64_t p, std::uint64_t q) {
  return monomial::Monomial({{"u", static_cast<std::uint32_t>(p)}, {"v", static_cast<std::uint32_t>(q)}});
}

monomial::Involution point_involution() { return monomial::Involution({"u", "v"}, {{"u", "v"}}); }

std::string universe(const Bounded1Manifold& m) {
  nlohmann::json j;
  to_json(j, m.boundary());
  return "dim1:" + j.dump();
}

void to_json(nlohmann::json& j, const Boundary0& b) { j = nlohmann::json{{"pos", b.pos}, {"neg", b.neg}}; }

void from_json(const nlohmann::json& j, Boundary0& b) {
  if (!j.is_object() || !j.contains("pos") || !j.contains("neg"))
    throw InputError("boundary must be {\"pos\":[...],\"neg\":[...]}");
  b.pos = j.at("pos").get<std::vector<std::string>>();
  b.neg = j.at("neg").get<std::vector<std::string>>();
  b.validate();
}

void to_json(nlohmann::json& j, const Bounded1Manifold& m) {
  nlohmann::json matching = nlohmann::json::object();
  for (std::size_t k = 0; k < m.arcs(); ++k)
    matching[m.boundary().pos[k]] = m.boundary().neg[m.match()[k]];
  j = nlohmann::json{{"dim", 1},
                     {"boundary", m.boundary()},
                     {"matching", std::move(matching)},
                     {"closed_circles", m.closed_circles()}};
}

void from_json(const nlohmann::json& j, Bounded1Manifold& m) {
  if (!j.is_object() || j.value("dim", 0) != 1 || !j.contains("boundary") || !j.contains("matching"))
    throw InputError("expected a dim-1 bounded descriptor, got " + j.dump());
  auto boundary = j.at("boundary").get<Boundary0>();
  const auto& matching = j.at("matching");
  if (!matching.is_object() || matching.size() != boundary.pos.size())
    throw InputError("matching must map every positive point to a negative point");
  std::vector<std::size_t> match;
  for (const auto& p : boundary.pos) {
    if (!matching.contains(p)) throw InputError("positive point '" + p + "' is unmatched");
    auto target = matching.at(p).get<std::string>();
    auto it = std::find(boundary.neg.begin(), boundary.neg.end(), target);
    if (it == boundary.neg.end()) throw InputError("'" + target + "' is not a negative boundary point");
    match.push_back(static_cast<std::size_t>(it - boundary.neg.begin()));
  }
  auto closed = j.value("closed_circles", std::uint64_t{0});
  m = Bounded1Manifold(std::move(boundary), std::move(match), closed);
}

void to_json(nlohmann::json& j, const Closed1Manifold& c) {
  j = nlohmann::json{{"dim", 1}, {"circles", c.circles}};
}

void from_json(const nlohmann::json& j, Closed1Manifold& c) {
  if (!j.is_object() || j.value("dim", 0) != 1 || !j.contains("circles"))
    throw InputError("expected a closed dim-1 descriptor, got " + j.dump());
  c.circles = j.at("circles").get<std::uint64_t>();
}

}  // namespace upair::dim1
