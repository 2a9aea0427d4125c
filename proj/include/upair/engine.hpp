#pragma once

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "upair/error.hpp"
#include "upair/formal_sum.hpp"
#include "upair/grid.hpp"
#include "upair/scalar.hpp"

/// The universal pairing over an arbitrary gluing theory, with the
/// complexity-function positivity test, certificates, Gram tensors and a
/// bounded null-vector search.
namespace upair::engine {

/// A gluing theory supplies glue(a, b) = a U -b, orientation reversal of
/// closed results, and a totally ordered complexity of closed results.
template <class T>
concept GluingTheory = Descriptor<typename T::Basis> && Descriptor<typename T::Closed> &&
    std::totally_ordered<typename T::Complexity> &&
    requires(const T& t, const typename T::Basis& b, const typename T::Closed& c) {
  { t.glue(b, b) } -> std::convertible_to<typename T::Closed>;
  { t.reverse(c) } -> std::convertible_to<typename T::Closed>;
  { t.complexity(c) } -> std::convertible_to<typename T::Complexity>;
};

template <GluingTheory T>
using BasisSum = FormalSum<typename T::Basis>;
template <GluingTheory T>
using ClosedSum = FormalSum<typename T::Closed>;

/// <x, y> = sum_{i,j} a_i conj(b_j) [glue(M_i, N_j)].
template <GluingTheory T>
ClosedSum<T> pair(const BasisSum<T>& x, const BasisSum<T>& y, const T& theory) {
  if (x.universe_name() && y.universe_name() && *x.universe_name() != *y.universe_name())
    throw InputError("pairing vectors with incompatible boundaries: '" + *x.universe_name() + "' vs '" +
                     *y.universe_name() + "'");
  ClosedSum<T> out;
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) out.add(theory.glue(a.basis, b.basis), a.coeff * conj(b.coeff));
  return out;
}

/// A pair M != N with C(M U -N) >= max(C(M U -M), C(N U -N)).
template <GluingTheory T>
struct Violation {
  std::size_t first_index = 0;
  std::size_t second_index = 0;
  typename T::Basis first;
  typename T::Basis second;
  typename T::Closed off_diagonal;
  typename T::Complexity off_complexity;
  typename T::Closed first_diagonal;
  typename T::Complexity first_complexity;
  typename T::Closed second_diagonal;
  typename T::Complexity second_complexity;
};

template <GluingTheory T>
struct LemmaReport {
  std::size_t basis_size = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<Violation<T>> violations;

  bool passed() const { return violations.empty(); }
};

namespace detail {

template <GluingTheory T>
struct Diagonal {
  typename T::Closed closed;
  typename T::Complexity complexity;
};

template <GluingTheory T>
std::optional<Violation<T>> check_pair(std::span<const typename T::Basis> basis,
                                       std::span<const Diagonal<T>> diag, std::size_t i, std::size_t j,
                                       const T& theory) {
  auto off = theory.glue(basis[i], basis[j]);
  auto c = theory.complexity(off);
  const auto& top = diag[i].complexity < diag[j].complexity ? diag[j].complexity : diag[i].complexity;
  if (c < top) return std::nullopt;
  return Violation<T>{i,           j, basis[i], basis[j], std::move(off), std::move(c), diag[i].closed,
                      diag[i].complexity, diag[j].closed, diag[j].complexity};
}

template <GluingTheory T>
std::vector<Diagonal<T>> diagonals(std::span<const typename T::Basis> basis, const T& theory) {
  std::vector<Diagonal<T>> diag;
  diag.reserve(basis.size());
  for (const auto& b : basis) {
    auto c = theory.glue(b, b);
    auto k = theory.complexity(c);
    diag.push_back({std::move(c), std::move(k)});
  }
  return diag;
}

inline unsigned clamp_jobs(unsigned jobs) { return std::max(1u, jobs); }

}  // namespace detail

/// Checks C(M U -N) < max(C(M U -M), C(N U -N)) for every unordered pair of
/// distinct basis elements. Rows are striped across `jobs` threads; the
/// violation list is in (first, second) index order regardless of `jobs`.
template <GluingTheory T>
LemmaReport<T> verify_lemma(std::span<const typename T::Basis> basis, const T& theory, unsigned jobs = 1) {
  jobs = detail::clamp_jobs(jobs);
  const auto diag = detail::diagonals(basis, theory);
  std::vector<std::vector<Violation<T>>> found(jobs);
  std::vector<std::uint64_t> checked(jobs, 0);
  auto worker = [&](unsigned w) {
    for (std::size_t i = w; i < basis.size(); i += jobs)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        if (basis[i] == basis[j]) continue;
        ++checked[w];
        if (auto v = detail::check_pair<T>(basis, diag, i, j, theory)) found[w].push_back(std::move(*v));
      }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  }
  LemmaReport<T> report;
  report.basis_size = basis.size();
  for (unsigned w = 0; w < jobs; ++w) {
    report.pairs_checked += checked[w];
    for (auto& v : found[w]) report.violations.push_back(std::move(v));
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first_index, a.second_index) < std::tie(b.first_index, b.second_index);
  });
  return report;
}

/// One closed form of maximal complexity among the diagonal gluings.
template <GluingTheory T>
struct DiagonalForm {
  typename T::Closed closed;
  Rational mass;                               // sum of |a_i|^2 over witnesses
  std::vector<typename T::Basis> witnesses;    // basis elements whose double is `closed`
};

template <GluingTheory T>
struct PositivityCertificate {
  typename T::Complexity max_complexity;
  std::vector<DiagonalForm<T>> forms;  // canonical order of `closed`
  ClosedSum<T> pairing;                // <x, x>
};

template <GluingTheory T>
struct CertificateFailure {
  Violation<T> violation;
};

template <GluingTheory T>
using CertifyResult = std::variant<PositivityCertificate<T>, CertificateFailure<T>>;

/// Certifies <x, x> != 0: checks the complexity hypothesis on the support of
/// x, then shows the maximal-complexity terms of <x, x> are exactly the
/// diagonal doubles with coefficient sum |a_i|^2 > 0. Throws InputError for
/// x = 0 and std::logic_error if the computed pairing disagrees with the
/// certificate.
template <GluingTheory T>
CertifyResult<T> certify_positive(const BasisSum<T>& x, const T& theory) {
  if (x.empty()) throw InputError("certify_positive: zero vector");
  std::vector<typename T::Basis> support;
  std::vector<Rational> norms;
  for (const auto& t : x.terms()) {
    support.push_back(t.basis);
    norms.push_back(t.coeff.norm());
  }
  const std::span<const typename T::Basis> span(support);
  const auto diag = detail::diagonals(span, theory);
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if (auto v = detail::check_pair<T>(span, diag, i, j, theory)) return CertificateFailure<T>{std::move(*v)};

  auto top = diag.front().complexity;
  for (const auto& d : diag)
    if (top < d.complexity) top = d.complexity;

  std::map<std::string, DiagonalForm<T>> forms;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (diag[i].complexity < top || top < diag[i].complexity) continue;
    auto [it, fresh] = forms.try_emplace(canonical_key(diag[i].closed), DiagonalForm<T>{diag[i].closed, 0, {}});
    it->second.mass += norms[i];
    it->second.witnesses.push_back(support[i]);
  }

  PositivityCertificate<T> cert{top, {}, pair(x, x, theory)};
  for (auto& [key, form] : forms) {
    if (!(cert.pairing.coeff(form.closed) == Scalar(form.mass)))
      throw std::logic_error("certificate mass disagrees with <x,x> at " + key);
    cert.forms.push_back(std::move(form));
  }
  return cert;
}

/// Coordinates of the pairing: slice c is the 0/1 matrix with entry (i, j)
/// set iff glue(b_i, b_j) = c.
template <GluingTheory T>
struct GramTensor {
  struct Slice {
    typename T::Closed closed;
    std::vector<std::vector<std::uint8_t>> matrix;
  };
  std::size_t dimension = 0;
  std::vector<Slice> slices;  // canonical order of `closed`

  /// sum_{i,j} a_i conj(a_j) T^c[i][j] for every slice, in slice order.
  std::vector<Scalar> hermitian_values(std::span<const Scalar> coeffs) const {
    std::vector<Scalar> out;
    for (const auto& s : slices) {
      Scalar v;
      for (std::size_t i = 0; i < dimension; ++i)
        for (std::size_t j = 0; j < dimension; ++j)
          if (s.matrix[i][j]) v += coeffs[i] * conj(coeffs[j]);
      out.push_back(v);
    }
    return out;
  }
};

template <GluingTheory T>
GramTensor<T> gram_tensor(std::span<const typename T::Basis> basis, const T& theory) {
  const std::size_t n = basis.size();
  std::map<std::string, typename GramTensor<T>::Slice> slices;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = theory.glue(basis[i], basis[j]);
      auto key = canonical_key(c);
      auto it = slices.find(key);
      if (it == slices.end())
        it = slices.emplace(key, typename GramTensor<T>::Slice{std::move(c), std::vector(n, std::vector<std::uint8_t>(n, 0))})
                 .first;
      it->second.matrix[i][j] = 1;
    }
  GramTensor<T> out;
  out.dimension = n;
  for (auto& [key, s] : slices) out.slices.push_back(std::move(s));
  return out;
}

template <GluingTheory T>
struct NullSearchResult {
  std::optional<BasisSum<T>> vector;
  std::uint64_t grid_size = 0;    // assignments in the canonical search space
  std::uint64_t searched = 0;     // assignments evaluated before stopping
};

namespace detail {

/// Canonical assignments: coefficients before `lead` are 0, the coefficient
/// at `lead` is a unit-orbit representative, the rest range over the grid
/// with lower positions more significant.
struct AssignmentSpace {
  std::size_t n = 0;
  std::size_t radix = 0;
  std::size_t reps = 0;
  std::vector<std::uint64_t> segment_start;  // per lead position, plus total

  AssignmentSpace(std::size_t dim, std::size_t grid, std::size_t leading) : n(dim), radix(grid), reps(leading) {
    segment_start.push_back(0);
    for (std::size_t lead = 0; lead < n; ++lead) {
      std::uint64_t count = reps;
      for (std::size_t k = lead + 1; k < n; ++k) {
        if (count > std::numeric_limits<std::uint64_t>::max() / 4 / radix)
          throw InputError("null_search: coefficient grid too large for this basis");
        count *= radix;
      }
      segment_start.push_back(segment_start.back() + count);
    }
  }

  std::uint64_t total() const { return segment_start.back(); }

  /// Grid indices per position; `leading` maps a representative ordinal to its grid index.
  void decode(std::uint64_t index, std::span<const std::size_t> leading, std::size_t zero,
              std::vector<std::size_t>& digits) const {
    std::size_t lead = static_cast<std::size_t>(
        std::upper_bound(segment_start.begin(), segment_start.end(), index) - segment_start.begin() - 1);
    std::uint64_t rest = index - segment_start[lead];
    digits.assign(n, zero);
    for (std::size_t k = n; k-- > lead + 1;) {
      digits[k] = static_cast<std::size_t>(rest % radix);
      rest /= radix;
    }
    digits[lead] = leading[static_cast<std::size_t>(rest)];
  }
};

}  // namespace detail

/// Exhaustive search over grid assignments (first nonzero coefficient fixed to
/// a unit-orbit representative) for x != 0 with <x, x> = 0. Returns the first
/// hit in assignment order; absence only means no null vector on this grid.
template <GluingTheory T>
NullSearchResult<T> null_search(std::span<const typename T::Basis> basis, const CoeffGrid& grid, const T& theory,
                                unsigned jobs = 1) {
  NullSearchResult<T> result;
  if (basis.empty()) return result;
  jobs = detail::clamp_jobs(jobs);

  const auto gram = gram_tensor(basis, theory);
  const auto& values = grid.values();
  const std::size_t g = values.size();
  std::size_t zero = 0;
  while (!values[zero].is_zero()) ++zero;

  // products[u][v] = values[u] * conj(values[v])
  std::vector<std::vector<Scalar>> products(g, std::vector<Scalar>(g));
  for (std::size_t u = 0; u < g; ++u)
    for (std::size_t v = 0; v < g; ++v) products[u][v] = values[u] * conj(values[v]);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> support;
  for (const auto& s : gram.slices) {
    auto& cells = support.emplace_back();
    for (std::size_t i = 0; i < gram.dimension; ++i)
      for (std::size_t j = 0; j < gram.dimension; ++j)
        if (s.matrix[i][j]) cells.emplace_back(i, j);
  }

  const detail::AssignmentSpace space(basis.size(), g, grid.leading().size());
  result.grid_size = space.total();
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{none};
  std::vector<std::uint64_t> searched(jobs, 0);

  auto worker = [&](unsigned w) {
    const std::uint64_t lo = space.total() / jobs * w;
    const std::uint64_t hi = w + 1 == jobs ? space.total() : space.total() / jobs * (w + 1);
    std::vector<std::size_t> digits;
    for (std::uint64_t idx = lo; idx < hi && idx < best.load(); ++idx) {
      ++searched[w];
      space.decode(idx, grid.leading(), zero, digits);
      bool null = true;
      for (const auto& cells : support) {
        Scalar v;
        for (const auto& [i, j] : cells) v += products[digits[i]][digits[j]];
        if (!v.is_zero()) {
          null = false;
          break;
        }
      }
      if (null) {
        std::uint64_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  }
  for (auto s : searched) result.searched += s;

  if (best.load() != none) {
    std::vector<std::size_t> digits;
    space.decode(best.load(), grid.leading(), zero, digits);
    BasisSum<T> x;
    for (std::size_t k = 0; k < basis.size(); ++k) x.add(basis[k], values[digits[k]]);
    result.vector = std::move(x);
  }
  return result;
}

/// Random nonzero vector over `basis`: support size uniform in
/// [1, min(max_support, |basis|)], Gaussian-integer coefficients with both
/// parts in [-bound, bound], never zero.
template <GluingTheory T>
BasisSum<T> random_vector(std::span<const typename T::Basis> basis, std::mt19937_64& rng, std::size_t max_support,
                          long bound) {
  if (basis.empty()) throw InputError("random_vector: empty basis");
  auto below = [&rng](std::uint64_t n) { return static_cast<std::size_t>(rng() % n); };
  const std::size_t cap = std::min(max_support, basis.size());
  const std::size_t size = 1 + below(cap);
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  for (std::size_t k = 0; k < size; ++k) std::swap(idx[k], idx[k + below(idx.size() - k)]);
  BasisSum<T> x;
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (std::size_t k = 0; k < size; ++k) {
    long re = 0, im = 0;
    while (re == 0 && im == 0) {
      re = static_cast<long>(below(span)) - bound;
      im = static_cast<long>(below(span)) - bound;
    }
    x.add(basis[idx[k]], Scalar(Rational(re), Rational(im)));
  }
  return x;
}

template <GluingTheory T>
void to_json(nlohmann::json& j, const Violation<T>& v) {
  j = nlohmann::json{{"first", v.first},
                     {"second", v.second},
                     {"off_diagonal", {{"closed", v.off_diagonal}, {"complexity", v.off_complexity}}},
                     {"first_diagonal", {{"closed", v.first_diagonal}, {"complexity", v.first_complexity}}},
                     {"second_diagonal", {{"closed", v.second_diagonal}, {"complexity", v.second_complexity}}}};
}

template <GluingTheory T>
void to_json(nlohmann::json& j, const LemmaReport<T>& r) {
  j = nlohmann::json{{"status", r.passed() ? "pass" : "violation"},
                     {"basis_size", r.basis_size},
                     {"pairs_checked", r.pairs_checked},
                     {"violations", nlohmann::json::array()}};
  for (const auto& v : r.violations) {
    nlohmann::json e = v;
    e["first_index"] = v.first_index;
    e["second_index"] = v.second_index;
    j["violations"].push_back(std::move(e));
  }
}

template <GluingTheory T>
void to_json(nlohmann::json& j, const CertifyResult<T>& r) {
  if (const auto* f = std::get_if<CertificateFailure<T>>(&r)) {
    j = nlohmann::json{{"status", "failed"}, {"violation", f->violation}};
    return;
  }
  const auto& c = std::get<PositivityCertificate<T>>(r);
  j = nlohmann::json{{"status", "certified"}, {"max_complexity", c.max_complexity}, {"forms", nlohmann::json::array()},
                     {"pairing", c.pairing}};
  for (const auto& f : c.forms) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : f.witnesses) witnesses.push_back(w);
    j["forms"].push_back({{"closed", f.closed}, {"mass", Scalar(f.mass)}, {"witnesses", std::move(witnesses)}});
  }
}

template <GluingTheory T>
void to_json(nlohmann::json& j, const GramTensor<T>& g) {
  j = nlohmann::json{{"dimension", g.dimension}, {"slices", nlohmann::json::array()}};
  for (const auto& s : g.slices) j["slices"].push_back({{"closed", s.closed}, {"matrix", s.matrix}});
}

}  // namespace upair::engine
