#include "noether/transcript.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace noether {

using nlohmann::json;

std::string kind_str(ClaimKind k) {
  switch (k) {
    case ClaimKind::ActionTable: return "action-table";
    case ClaimKind::SemiInvariance: return "semi-invariance";
    case ClaimKind::Invariance: return "invariance";
    case ClaimKind::FieldEquality: return "field-equality";
    case ClaimKind::Relation: return "relation";
    case ClaimKind::LatticeWitness: return "lattice-witness";
    case ClaimKind::Identity: return "identity";
  }
  throw std::domain_error("unknown claim kind");
}

ClaimKind kind_parse(const std::string& s) {
  for (ClaimKind k : {ClaimKind::ActionTable, ClaimKind::SemiInvariance, ClaimKind::Invariance,
                      ClaimKind::FieldEquality, ClaimKind::Relation, ClaimKind::LatticeWitness,
                      ClaimKind::Identity})
    if (kind_str(k) == s) return k;
  throw std::domain_error("unknown claim kind: " + s);
}

void Transcript::add(std::string label, ClaimKind kind, std::string inputs, bool pass, std::string witness) {
  records.push_back({std::move(label), kind, std::move(inputs), pass, std::move(witness)});
}

size_t Transcript::pass_count() const {
  size_t n = 0;
  for (const auto& r : records) n += r.pass ? 1 : 0;
  return n;
}

size_t Transcript::fail_count() const { return records.size() - pass_count(); }

std::vector<std::string> Transcript::labels() const {
  std::vector<std::string> ls;
  for (const auto& r : records) ls.push_back(r.label);
  return ls;
}

std::string Transcript::to_text() const {
  std::ostringstream out;
  out << "target " << target << " engine " << engine_version << " seed " << seed << " bound " << bound
      << " ansatz-cap " << ansatz_cap << "\n";
  for (const auto& r : records) {
    out << (r.pass ? "PASS" : "FAIL") << " [" << kind_str(r.kind) << "] " << r.label << ": " << r.inputs;
    if (!r.witness.empty()) out << "  |  " << r.witness;
    out << "\n";
  }
  out << "summary " << (all_pass() ? "pass" : "fail") << " " << pass_count() << "/" << records.size()
      << " claims\n";
  return out.str();
}

std::string Transcript::to_jsonl() const {
  std::ostringstream out;
  for (const auto& r : records) {
    json j{{"label", r.label}, {"kind", kind_str(r.kind)}, {"inputs", r.inputs}, {"pass", r.pass}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    out << j.dump() << "\n";
  }
  json summary{{"summary", all_pass() ? "pass" : "fail"},
               {"target", target},
               {"engine", engine_version},
               {"seed", seed},
               {"bound", bound},
               {"ansatz_cap", ansatz_cap},
               {"pass_count", pass_count()},
               {"record_count", records.size()}};
  out << summary.dump() << "\n";
  return out.str();
}

Transcript Transcript::from_jsonl(const std::string& s) {
  Transcript t;
  std::istringstream in(s);
  std::string line;
  bool saw_summary = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (j.contains("summary")) {
      saw_summary = true;
      t.target = j.at("target").get<std::string>();
      t.engine_version = j.at("engine").get<std::string>();
      t.seed = j.at("seed").get<std::uint64_t>();
      t.bound = j.at("bound").get<int>();
      t.ansatz_cap = j.at("ansatz_cap").get<int>();
      if (j.at("record_count").get<size_t>() != t.records.size())
        throw std::domain_error("transcript summary count mismatch");
      if (j.at("pass_count").get<size_t>() != t.pass_count())
        throw std::domain_error("transcript summary count mismatch");
    } else {
      StepRecord r;
      r.label = j.at("label").get<std::string>();
      r.kind = kind_parse(j.at("kind").get<std::string>());
      r.inputs = j.at("inputs").get<std::string>();
      r.pass = j.at("pass").get<bool>();
      if (j.contains("witness")) r.witness = j.at("witness").get<std::string>();
      t.records.push_back(std::move(r));
    }
  }
  if (!saw_summary) throw std::domain_error("transcript missing summary line");
  return t;
}

}  // namespace noether
