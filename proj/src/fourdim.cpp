#include "upair/fourdim.hpp"

#include <algorithm>
#include <set>

#include "upair/error.hpp"

namespace upair::fourdim {

void to_json(nlohmann::json& j, const Label& l) { j = l.name; }
void from_json(const nlohmann::json& j, Label& l) {
  if (!j.is_string()) throw InputError("table label must be a string, got " + j.dump());
  l.name = j.get<std::string>();
}
void to_json(nlohmann::json& j, const ClosedName& c) { j = c.name; }
void from_json(const nlohmann::json& j, ClosedName& c) {
  if (!j.is_string()) throw InputError("closed name must be a string, got " + j.dump());
  c.name = j.get<std::string>();
}

GluingTable::GluingTable(std::vector<std::string> labels,
                         std::map<std::pair<std::string, std::string>, std::string> table,
                         std::map<std::string, std::string> reverse)
    : labels_(std::move(labels)), table_(std::move(table)), reverse_(std::move(reverse)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty() || l.find(',') != std::string::npos) throw InputError("bad table label '" + l + "'");
    if (!seen.insert(l).second) throw InputError("repeated table label '" + l + "'");
  }
  if (table_.size() != labels_.size() * labels_.size())
    throw InputError("gluing table must have exactly one entry per ordered label pair");
  for (const auto& [r, c] : reverse_) {
    auto it = reverse_.find(c);
    if (it == reverse_.end() || it->second != r) throw InputError("reverse map is not an involution at '" + r + "'");
  }
  for (const auto& [ab, closed] : table_) {
    if (!seen.count(ab.first) || !seen.count(ab.second))
      throw InputError("table entry for unknown label pair '" + ab.first + "," + ab.second + "'");
    if (!reverse_.count(closed)) throw InputError("closed name '" + closed + "' has no reverse");
  }
  for (const auto& [ab, closed] : table_) {
    if (at(ab.second, ab.first) != reverse_.at(closed))
      throw InputError("table(" + ab.first + "," + ab.second + ") is not the reverse of table(" + ab.second + "," +
                       ab.first + ")");
  }
}

const std::string& GluingTable::at(const std::string& a, const std::string& b) const {
  auto it = table_.find({a, b});
  if (it == table_.end()) throw InputError("no table entry for '" + a + "," + b + "'");
  return it->second;
}

const std::string& GluingTable::reverse(const std::string& closed) const {
  auto it = reverse_.find(closed);
  if (it == reverse_.end()) throw InputError("unknown closed name '" + closed + "'");
  return it->second;
}

std::string scob_closed_name(unsigned k) { return k == 0 ? "S4" : "#" + std::to_string(k) + "(S1xS3)"; }

namespace {

GluingTable constant_table(const std::string& closed) {
  std::vector<std::string> labels{"M", "M'"};
  std::map<std::pair<std::string, std::string>, std::string> table;
  for (const auto& a : labels)
    for (const auto& b : labels) table[{a, b}] = closed;
  return GluingTable(labels, table, {{closed, closed}});
}

}  // namespace

GluingTable build_mazur_table() { return constant_table("S4"); }

GluingTable build_scob_table(unsigned k) { return constant_table(scob_closed_name(k)); }

void to_json(nlohmann::json& j, const GluingTable& t) {
  nlohmann::json table = nlohmann::json::object();
  for (const auto& [ab, closed] : t.entries()) table[ab.first + "," + ab.second] = closed;
  j = nlohmann::json{{"labels", t.labels()}, {"table", std::move(table)}, {"reverse", t.reverse_map()}};
}

void from_json(const nlohmann::json& j, GluingTable& t) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("table") || !j.contains("reverse"))
    throw InputError("gluing table must be {\"labels\":[...],\"table\":{...},\"reverse\":{...}}");
  auto labels = j.at("labels").get<std::vector<std::string>>();
  std::map<std::pair<std::string, std::string>, std::string> table;
  for (const auto& [key, closed] : j.at("table").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
      throw InputError("table key '" + key + "' must be \"a,b\"");
    table[{key.substr(0, comma), key.substr(comma + 1)}] = closed.get<std::string>();
  }
  auto reverse = j.at("reverse").get<std::map<std::string, std::string>>();
  t = GluingTable(std::move(labels), std::move(table), std::move(reverse));
}

std::vector<Label> basis_of(const GluingTable& t) {
  std::vector<Label> out;
  for (const auto& l : t.labels()) out.push_back({l});
  return out;
}

std::variant<NullDemo, Diagnostic> demo_null(const GluingTable& t) {
  const auto& labels = t.labels();
  auto same_row = [&](const std::string& a, const std::string& b) {
    return std::all_of(labels.begin(), labels.end(), [&](const std::string& c) { return t.at(a, c) == t.at(b, c); });
  };
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (!same_row(labels[a], labels[b])) continue;
      Theory theory{t};
      FormalSum<Label> x{{Label{labels[a]}, Scalar(1)}, {Label{labels[b]}, Scalar(-1)}};
      auto pairing = engine::pair(x, x, theory);
      auto cert = engine::certify_positive(x, theory);
      auto* failure = std::get_if<engine::CertificateFailure<Theory>>(&cert);
      if (!pairing.empty() || failure == nullptr)
        throw std::logic_error("identical table rows must give a null vector");
      return NullDemo{std::move(x), std::move(pairing), std::move(*failure)};
    }
  return Diagnostic{"no coinciding rows: the table admits no null vector of the form a - b"};
}

void to_json(nlohmann::json& j, const NullDemo& d) {
  j = nlohmann::json{{"vector", d.vector}, {"pairing", d.pairing}, {"certificate", nlohmann::json{{"status", "failed"}, {"violation", d.failure.violation}}}};
}

}  // namespace upair::fourdim
