#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "upair/dim1.hpp"
#include "upair/dim2.hpp"
#include "upair/engine.hpp"
#include "upair/error.hpp"
#include "upair/fourdim.hpp"
#include "upair/grid.hpp"
#include "upair/monomial.hpp"

namespace upair::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string command;
  std::string theory = "dim1";
  std::uint32_t j = 2;
  std::uint32_t gmax = 1;
  std::uint32_t closed_budget = 0;
  std::uint64_t max_closed = 0;
  std::uint32_t degree = 2;
  std::string alphabet;
  std::vector<std::string> swaps;
  std::string coeff_grid = "pm1";
  unsigned long long seed = kDefaultSeed;
  unsigned jobs = 1;
  std::size_t samples = 0;
  std::size_t max_support = 8;
  std::string x_path, y_path, in_path, out_path, table_path;
  std::optional<unsigned> scob;
};

json read_json(const std::string& path) {
  if (path.empty()) throw InputError("missing input file");
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

monomial::Involution involution_from(const RunConfig& cfg) {
  if (cfg.alphabet.empty()) throw InputError("--theory monomial needs --alphabet");
  std::vector<std::pair<std::string, std::string>> swaps;
  for (const auto& s : cfg.swaps) {
    auto parts = split(s, ':');
    if (parts.size() != 2) throw InputError("--swaps entries must be a:b, got '" + s + "'");
    swaps.emplace_back(parts[0], parts[1]);
  }
  return monomial::Involution(split(cfg.alphabet, ','), swaps);
}

fourdim::GluingTable table_from(const RunConfig& cfg) {
  if (!cfg.table_path.empty()) {
    try {
      return read_json(cfg.table_path).get<fourdim::GluingTable>();
    } catch (const json::exception& e) {
      throw InputError(cfg.table_path + ": " + e.what());
    }
  }
  if (cfg.scob) return fourdim::build_scob_table(*cfg.scob);
  return fourdim::build_mazur_table();
}

/// Calls f(theory, basis, params) for the configured theory.
template <class F>
int with_theory(const RunConfig& cfg, F&& f) {
  if (cfg.theory == "dim1") {
    json params{{"j", cfg.j}, {"max_closed", cfg.max_closed}};
    return f(dim1::Theory{}, dim1::enumerate1(dim1::Boundary0::standard(cfg.j), cfg.max_closed), params);
  }
  if (cfg.theory == "dim2") {
    json params{{"j", cfg.j}, {"gmax", cfg.gmax}, {"closed_budget", cfg.closed_budget}};
    return f(dim2::Theory{}, dim2::enumerate2(cfg.j, cfg.gmax, cfg.closed_budget), params);
  }
  if (cfg.theory == "monomial") {
    auto sigma = involution_from(cfg);
    json params{{"involution", sigma}, {"degree", cfg.degree}};
    auto basis = monomial::enumerate_monomials(sigma, cfg.degree);
    return f(monomial::Theory{sigma}, std::move(basis), params);
  }
  if (cfg.theory == "fourdim") {
    auto table = table_from(cfg);
    json params{{"table", table}};
    auto basis = fourdim::basis_of(table);
    return f(fourdim::Theory{std::move(table)}, std::move(basis), params);
  }
  throw InputError("unknown theory '" + cfg.theory + "' (dim1 | dim2 | monomial | fourdim)");
}

template <engine::GluingTheory T>
engine::BasisSum<T> read_vector(const std::string& path) {
  auto j = read_json(path);
  try {
    return formal_sum_from_json<typename T::Basis>(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const RunConfig& cfg, const json& result, std::ostream& out) {
  std::string text = result.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw InputError(cfg.out_path + ": cannot write");
  file << text;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  return with_theory(cfg, [&](const auto& theory, const auto& basis, const json& params) {
    (void)theory;
    emit(cfg, json{{"theory", cfg.theory}, {"params", params}, {"basis", basis}}, out);
    return kOk;
  });
}

int cmd_pair(const RunConfig& cfg, std::ostream& out) {
  return with_theory(cfg, [&](const auto& theory, const auto&, const json&) {
    using T = std::decay_t<decltype(theory)>;
    auto x = read_vector<T>(cfg.x_path);
    auto y = read_vector<T>(cfg.y_path.empty() ? cfg.x_path : cfg.y_path);
    emit(cfg, json{{"theory", cfg.theory}, {"pairing", engine::pair(x, y, theory)}}, out);
    return kOk;
  });
}

int cmd_verify_lemma(const RunConfig& cfg, std::ostream& out) {
  return with_theory(cfg, [&](const auto& theory, const auto& basis, const json& params) {
    using T = std::decay_t<decltype(theory)>;
    auto report = engine::verify_lemma<T>(basis, theory, cfg.jobs);
    json result{{"theory", cfg.theory}, {"params", params}, {"lemma", report}};
    bool ok = report.passed();
    if (cfg.samples > 0) {
      std::mt19937_64 rng(cfg.seed);
      std::size_t certified = 0;
      json failures = json::array();
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        auto x = engine::random_vector<T>(basis, rng, cfg.max_support, 3);
        auto cert = engine::certify_positive(x, theory);
        bool good = std::holds_alternative<engine::PositivityCertificate<T>>(cert) &&
                    !engine::pair(x, x, theory).empty();
        if (good)
          ++certified;
        else
          failures.push_back({{"sample", s}, {"vector", x}, {"certificate", cert}});
      }
      ok = ok && failures.empty();
      result["samples"] = {{"seed", cfg.seed}, {"count", cfg.samples}, {"certified", certified}, {"failures", failures}};
    }
    emit(cfg, result, out);
    return ok ? kOk : kNegative;
  });
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  return with_theory(cfg, [&](const auto& theory, const auto&, const json&) {
    using T = std::decay_t<decltype(theory)>;
    auto x = read_vector<T>(cfg.x_path.empty() ? cfg.in_path : cfg.x_path);
    auto cert = engine::certify_positive(x, theory);
    emit(cfg, json{{"theory", cfg.theory}, {"vector", x}, {"certificate", cert}}, out);
    return std::holds_alternative<engine::PositivityCertificate<T>>(cert) ? kOk : kNegative;
  });
}

int cmd_null_search(const RunConfig& cfg, std::ostream& out) {
  auto grid = CoeffGrid::parse(cfg.coeff_grid);
  return with_theory(cfg, [&](const auto& theory, const auto& basis, const json& params) {
    using T = std::decay_t<decltype(theory)>;
    auto found = engine::null_search<T>(basis, grid, theory, cfg.jobs);
    json result{{"theory", cfg.theory},
                {"params", params},
                {"basis_size", basis.size()},
                {"grid", grid.description()},
                {"assignments", found.grid_size}};
    if (found.vector)
      result["result"] = {{"status", "null vector found"}, {"vector", *found.vector}};
    else
      result["result"] = {{"status", "none on grid"}};
    emit(cfg, result, out);
    return kOk;
  });
}

int cmd_gram(const RunConfig& cfg, std::ostream& out) {
  return with_theory(cfg, [&](const auto& theory, const auto& basis, const json& params) {
    using T = std::decay_t<decltype(theory)>;
    emit(cfg, json{{"theory", cfg.theory}, {"params", params}, {"basis", basis},
                   {"gram", engine::gram_tensor<T>(basis, theory)}},
         out);
    return kOk;
  });
}

int cmd_fourdim_demo(const RunConfig& cfg, std::ostream& out) {
  auto table = table_from(cfg);
  auto demo = fourdim::demo_null(table);
  json result{{"table", table}};
  if (const auto* d = std::get_if<fourdim::NullDemo>(&demo)) {
    result["demo"] = *d;
    emit(cfg, result, out);
    return kOk;
  }
  result["diagnostic"] = std::get<fourdim::Diagnostic>(demo).message;
  emit(cfg, result, out);
  return kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal manifold pairings: exact pairing, positivity certificates, null searches"};
  app.name("upair-cli");
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--theory", cfg.theory, "dim1 | dim2 | monomial | fourdim")
      ->check(CLI::IsMember({"dim1", "dim2", "monomial", "fourdim"}));
  app.add_option("--j", cfg.j, "boundary size: matched point pairs (dim1) or circles (dim2)");
  app.add_option("--gmax", cfg.gmax, "dim2: genus bound per part");
  app.add_option("--closed-budget", cfg.closed_budget, "dim2: bound on sum(1 + genus) over closed components");
  app.add_option("--max-closed", cfg.max_closed, "dim1: bound on closed circles");
  app.add_option("--degree", cfg.degree, "monomial: total degree bound");
  app.add_option("--alphabet", cfg.alphabet, "monomial: comma-separated prime names");
  app.add_option("--swaps", cfg.swaps, "monomial: swapped primes a:b (repeatable)");
  app.add_option("--coeff-grid", cfg.coeff_grid, "pm1 | gauss<k>");
  app.add_option("--seed", cfg.seed, "seed for random sampling");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--samples", cfg.samples, "verify-lemma: random vectors to certify");
  app.add_option("--max-support", cfg.max_support, "verify-lemma: support bound of random vectors")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  app.add_option("--x", cfg.x_path, "first vector (JSON term list)");
  app.add_option("--y", cfg.y_path, "second vector (JSON term list)");
  app.add_option("--in", cfg.in_path, "input vector for certify");
  app.add_option("--out", cfg.out_path, "output file (default stdout)");
  app.add_option("--table", cfg.table_path, "fourdim: gluing table JSON");
  app.add_option("--scob", cfg.scob, "fourdim: s-cobordism table with k copies of S1xS3");

  const std::pair<const char*, const char*> commands[] = {
      {"enumerate", "list the basis of bounded manifolds"},
      {"pair", "pairing <x, y> of two vectors"},
      {"verify-lemma", "check strict diagonal dominance over the basis"},
      {"certify", "positivity certificate for one vector"},
      {"null-search", "search a coefficient grid for x with <x, x> = 0"},
      {"gram", "pairing tensor of the basis"},
      {"fourdim-demo", "null vector from coinciding gluing-table rows"}};
  for (const auto& [name, help] : commands)
    app.add_subcommand(name, help)->callback([&cfg, name] { cfg.command = name; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, out);
    if (cfg.command == "pair") return cmd_pair(cfg, out);
    if (cfg.command == "verify-lemma") return cmd_verify_lemma(cfg, out);
    if (cfg.command == "certify") return cmd_certify(cfg, out);
    if (cfg.command == "null-search") return cmd_null_search(cfg, out);
    if (cfg.command == "gram") return cmd_gram(cfg, out);
    if (cfg.command == "fourdim-demo") return cmd_fourdim_demo(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace upair::cli
