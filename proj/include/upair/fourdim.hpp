#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "upair/engine.hpp"
#include "upair/formal_sum.hpp"

/// Finite symbolic gluing theories given by a table of closed results.
///
/// Closed 4-manifolds are opaque names; the tables record published
/// diffeomorphism results rather than computing any smooth topology.
namespace upair::fourdim {

struct Label {
  std::string name;
  friend bool operator==(const Label&, const Label&) = default;
};

struct ClosedName {
  std::string name;
  friend bool operator==(const ClosedName&, const ClosedName&) = default;
};

inline std::string universe(const Label&) { return "table"; }
inline std::string universe(const ClosedName&) { return {}; }

void to_json(nlohmann::json& j, const Label& l);
void from_json(const nlohmann::json& j, Label& l);
void to_json(nlohmann::json& j, const ClosedName& c);
void from_json(const nlohmann::json& j, ClosedName& c);

class GluingTable {
 public:
  GluingTable() = default;
  /// Throws InputError unless every (label, label) entry is present, labels
  /// are distinct and comma-free, `reverse` is an involution covering every
  /// closed name, and table(a,b) = reverse(table(b,a)).
  GluingTable(std::vector<std::string> labels, std::map<std::pair<std::string, std::string>, std::string> table,
              std::map<std::string, std::string> reverse);

  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws InputError for unknown labels.
  const std::string& at(const std::string& a, const std::string& b) const;
  const std::string& reverse(const std::string& closed) const;

  const std::map<std::pair<std::string, std::string>, std::string>& entries() const { return table_; }
  const std::map<std::string, std::string>& reverse_map() const { return reverse_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::pair<std::string, std::string>, std::string> table_;
  std::map<std::string, std::string> reverse_;
};

/// Name of the closed result of the s-cobordism gluings: "S4" for k = 0,
/// otherwise "#k(S1xS3)".
std::string scob_closed_name(unsigned k);

/// Labels {M, M'}: the Mazur manifold attached by the identity and by the
/// twist; every gluing is the 4-sphere.
GluingTable build_mazur_table();
/// Labels {M, M'}: every gluing is the k-fold connected sum of S1xS3.
GluingTable build_scob_table(unsigned k);

void to_json(nlohmann::json& j, const GluingTable& t);
void from_json(const nlohmann::json& j, GluingTable& t);

/// Constant complexity: every closed name is equally complex.
struct Theory {
  using Basis = Label;
  using Closed = ClosedName;
  using Complexity = int;

  GluingTable table;

  Closed glue(const Basis& a, const Basis& b) const { return {table.at(a.name, b.name)}; }
  Closed reverse(const Closed& c) const { return {table.reverse(c.name)}; }
  Complexity complexity(const Closed&) const { return 0; }
};

std::vector<Label> basis_of(const GluingTable& t);

struct NullDemo {
  FormalSum<Label> vector;
  FormalSum<ClosedName> pairing;
  engine::CertificateFailure<Theory> failure;
};

struct Diagnostic {
  std::string message;
};

/// For the first two labels (in table order) with identical rows, returns
/// x = a - b together with <x,x> (empty) and the failed positivity certificate.
std::variant<NullDemo, Diagnostic> demo_null(const GluingTable& t);

void to_json(nlohmann::json& j, const NullDemo& d);

}  // namespace upair::fourdim
