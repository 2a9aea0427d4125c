#include "upair/dim2.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "upair/error.hpp"

namespace upair::dim2 {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }

  std::vector<std::size_t> parent;
};

std::int64_t part_euler(const Part& p) {
  return 2 - 2 * static_cast<std::int64_t>(p.genus) - static_cast<std::int64_t>(p.circles.size());
}

}  // namespace

Bounded2Manifold::Bounded2Manifold(std::uint32_t boundary_circles, std::vector<Part> parts,
                                   std::vector<std::uint32_t> closed_genera)
    : boundary_circles_(boundary_circles), parts_(std::move(parts)), closed_genera_(std::move(closed_genera)) {
  std::vector<bool> seen(boundary_circles_, false);
  for (auto& p : parts_) {
    if (p.circles.empty()) throw InputError("surface part without boundary circles");
    std::sort(p.circles.begin(), p.circles.end());
    for (auto c : p.circles) {
      if (c >= boundary_circles_) throw InputError("circle label " + std::to_string(c) + " out of range");
      if (seen[c]) throw InputError("circle " + std::to_string(c) + " lies in two parts");
      seen[c] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InputError("parts do not cover every boundary circle");
  std::sort(parts_.begin(), parts_.end(),
            [](const Part& a, const Part& b) { return a.circles.front() < b.circles.front(); });
  std::sort(closed_genera_.begin(), closed_genera_.end());
}

std::int64_t Bounded2Manifold::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& p : parts_) chi += part_euler(p);
  for (auto g : closed_genera_) chi += 2 - 2 * static_cast<std::int64_t>(g);
  return chi;
}

ClosedSurface::ClosedSurface(std::vector<std::uint32_t> g) : genera(std::move(g)) {
  std::sort(genera.begin(), genera.end());
}

std::int64_t ClosedSurface::euler_characteristic() const {
  std::int64_t chi = 0;
  for (auto g : genera) chi += 2 - 2 * static_cast<std::int64_t>(g);
  return chi;
}

std::strong_ordering operator<=>(const ComplexityTuple& a, const ComplexityTuple& b) {
  std::size_t n = std::max(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto x = k < a.entries.size() ? a.entries[k] : kComplexityPad;
    auto y = k < b.entries.size() ? b.entries[k] : kComplexityPad;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

ClosedSurface glue2(const Bounded2Manifold& m, const Bounded2Manifold& n) {
  if (m.boundary_circles() != n.boundary_circles()) throw InputError("glue2: boundary mismatch");
  const auto& mp = m.parts();
  const auto& np = n.parts();
  const std::size_t offset = mp.size();
  std::vector<std::size_t> part_of_m(m.boundary_circles()), part_of_n(n.boundary_circles());
  for (std::size_t k = 0; k < mp.size(); ++k)
    for (auto c : mp[k].circles) part_of_m[c] = k;
  for (std::size_t k = 0; k < np.size(); ++k)
    for (auto c : np[k].circles) part_of_n[c] = offset + k;

  DisjointSets graph(mp.size() + np.size());
  for (std::uint32_t c = 0; c < m.boundary_circles(); ++c) graph.unite(part_of_m[c], part_of_n[c]);

  std::vector<std::int64_t> chi(mp.size() + np.size(), 0);
  for (std::size_t k = 0; k < mp.size(); ++k) chi[graph.find(k)] += part_euler(mp[k]);
  for (std::size_t k = 0; k < np.size(); ++k) chi[graph.find(offset + k)] += part_euler(np[k]);

  std::vector<std::uint32_t> genera;
  genera.reserve(mp.size() + m.closed_genera().size() + n.closed_genera().size());
  for (std::size_t v = 0; v < chi.size(); ++v) {
    if (graph.find(v) != v) continue;
    if (chi[v] % 2 != 0 || chi[v] > 2)
      throw std::logic_error("glue2: glued component has Euler characteristic " + std::to_string(chi[v]));
    genera.push_back(static_cast<std::uint32_t>((2 - chi[v]) / 2));
  }
  genera.insert(genera.end(), m.closed_genera().begin(), m.closed_genera().end());
  genera.insert(genera.end(), n.closed_genera().begin(), n.closed_genera().end());
  return ClosedSurface(std::move(genera));
}

ComplexityTuple complexity2(const ClosedSurface& c) {
  ComplexityTuple t;
  t.entries.reserve(c.genera.size() + 2);
  t.entries.push_back(static_cast<std::int64_t>(c.genera.size()));
  t.entries.push_back(-c.euler_characteristic());
  // chi increasing <=> genus decreasing
  for (auto it = c.genera.rbegin(); it != c.genera.rend(); ++it)
    t.entries.push_back(2 * static_cast<std::int64_t>(*it) - 2);
  return t;
}

namespace {

void set_partitions(std::uint32_t j, std::vector<std::uint32_t>& rgs, std::uint32_t blocks,
                    const std::function<void(std::uint32_t)>& emit) {
  if (rgs.size() == j) {
    emit(blocks);
    return;
  }
  for (std::uint32_t b = 0; b <= blocks; ++b) {
    rgs.push_back(b);
    set_partitions(j, rgs, std::max(blocks, b + 1), emit);
    rgs.pop_back();
  }
}

void closed_collections(std::uint32_t budget, std::uint32_t min_genus, std::vector<std::uint32_t>& cur,
                        std::vector<std::vector<std::uint32_t>>& out) {
  out.push_back(cur);
  for (std::uint32_t g = min_genus; g + 1 <= budget; ++g) {
    cur.push_back(g);
    closed_collections(budget - (g + 1), g, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Bounded2Manifold> enumerate2(std::uint32_t j, std::uint32_t g_max, std::uint32_t closed_budget) {
  std::vector<std::vector<std::uint32_t>> closed;
  std::vector<std::uint32_t> cur;
  closed_collections(closed_budget, 0, cur, closed);
  std::sort(closed.begin(), closed.end());

  std::vector<Bounded2Manifold> out;
  std::vector<std::uint32_t> rgs;
  set_partitions(j, rgs, 0, [&](std::uint32_t blocks) {
    std::vector<Part> parts(blocks);
    for (std::uint32_t c = 0; c < j; ++c) parts[rgs[c]].circles.push_back(c);
    while (true) {
      for (const auto& cg : closed) out.emplace_back(j, parts, cg);
      std::size_t k = blocks;
      while (k > 0 && parts[k - 1].genus == g_max) parts[--k].genus = 0;
      if (k == 0) break;
      ++parts[k - 1].genus;
    }
  });
  return out;
}

std::int64_t euler_oracle(const Bounded2Manifold& m, const Bounded2Manifold& n) {
  if (m.boundary_circles() != n.boundary_circles()) throw InputError("euler_oracle: boundary mismatch");
  const std::uint32_t j = m.boundary_circles();

  // Cell ids are allocated per side. A part of genus g with b circles is one
  // polygon: base vertex, 2g handle loops, and per circle a spoke edge to a
  // circle vertex carrying the circle as a loop edge.
  std::size_t vertices = 0, edges = 0, faces = 0;
  std::vector<std::size_t> circle_vertex[2], circle_edge[2];
  const Bounded2Manifold* side[2] = {&m, &n};
  for (int s = 0; s < 2; ++s) {
    circle_vertex[s].assign(j, 0);
    circle_edge[s].assign(j, 0);
    for (const auto& p : side[s]->parts()) {
      ++vertices;                 // base
      edges += 2 * p.genus;       // handle loops
      for (auto c : p.circles) {
        circle_vertex[s][c] = vertices++;
        ++edges;                  // spoke
        circle_edge[s][c] = edges++;
      }
      ++faces;
    }
    for (auto g : side[s]->closed_genera()) {
      ++vertices;
      edges += 2 * g;
      ++faces;
    }
  }

  DisjointSets vclass(vertices), eclass(edges);
  std::size_t vmerged = 0, emerged = 0;
  for (std::uint32_t c = 0; c < j; ++c) {
    vmerged += vclass.unite(circle_vertex[0][c], circle_vertex[1][c]);
    emerged += eclass.unite(circle_edge[0][c], circle_edge[1][c]);
  }
  return static_cast<std::int64_t>(vertices - vmerged) - static_cast<std::int64_t>(edges - emerged) +
         static_cast<std::int64_t>(faces);
}

std::string universe(const Bounded2Manifold& m) { return "dim2:" + std::to_string(m.boundary_circles()); }

void to_json(nlohmann::json& j, const Bounded2Manifold& m) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : m.parts()) parts.push_back({{"circles", p.circles}, {"genus", p.genus}});
  j = nlohmann::json{{"dim", 2},
                     {"boundary_circles", m.boundary_circles()},
                     {"parts", std::move(parts)},
                     {"closed", m.closed_genera()}};
}

void from_json(const nlohmann::json& j, Bounded2Manifold& m) {
  if (!j.is_object() || j.value("dim", 0) != 2 || !j.contains("boundary_circles") || !j.contains("parts"))
    throw InputError("expected a dim-2 bounded descriptor, got " + j.dump());
  std::vector<Part> parts;
  for (const auto& p : j.at("parts")) {
    if (!p.is_object() || !p.contains("circles")) throw InputError("part must be {\"circles\":[...],\"genus\":g}");
    parts.push_back({p.at("circles").get<std::vector<std::uint32_t>>(), p.value("genus", std::uint32_t{0})});
  }
  auto closed = j.contains("closed") ? j.at("closed").get<std::vector<std::uint32_t>>() : std::vector<std::uint32_t>{};
  m = Bounded2Manifold(j.at("boundary_circles").get<std::uint32_t>(), std::move(parts), std::move(closed));
}

void to_json(nlohmann::json& j, const ClosedSurface& c) { j = nlohmann::json{{"dim", 2}, {"genera", c.genera}}; }

void from_json(const nlohmann::json& j, ClosedSurface& c) {
  if (!j.is_object() || j.value("dim", 0) != 2 || !j.contains("genera"))
    throw InputError("expected a closed dim-2 descriptor, got " + j.dump());
  c = ClosedSurface(j.at("genera").get<std::vector<std::uint32_t>>());
}

void to_json(nlohmann::json& j, const ComplexityTuple& c) { j = c.entries; }

}  // namespace upair::dim2
