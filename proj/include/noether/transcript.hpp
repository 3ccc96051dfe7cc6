#ifndef NOETHER_TRANSCRIPT_HPP
#define NOETHER_TRANSCRIPT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace noether {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class ClaimKind {
  ActionTable,
  SemiInvariance,
  Invariance,
  FieldEquality,
  Relation,
  LatticeWitness,
  Identity,
};

std::string kind_str(ClaimKind k);
ClaimKind kind_parse(const std::string& s);

// One verified (or failed) claim; `inputs` renders both sides of the claim so
// the record can be re-checked without rerunning the search that produced it.
struct StepRecord {
  std::string label;  // e.g. "d9/step5"
  ClaimKind kind = ClaimKind::ActionTable;
  std::string inputs;
  bool pass = false;
  std::string witness;  // optional

  bool operator==(const StepRecord& o) const = default;
};

struct Transcript {
  std::string target;  // d6 | d9 | d10 | core
  std::string engine_version = kEngineVersion;
  std::uint64_t seed = 0;
  int bound = 3;
  int ansatz_cap = 32;
  std::vector<StepRecord> records;

  void add(std::string label, ClaimKind kind, std::string inputs, bool pass, std::string witness = "");
  size_t pass_count() const;
  size_t fail_count() const;
  bool all_pass() const { return fail_count() == 0; }

  // Ordered labels, for checking a replay against its claim manifest.
  std::vector<std::string> labels() const;

  std::string to_text() const;
  std::string to_jsonl() const;  // one record per line plus a summary line
  static Transcript from_jsonl(const std::string& s);

  bool operator==(const Transcript& o) const = default;
};

}  // namespace noether

#endif
