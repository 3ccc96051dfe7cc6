#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <vector>

#include "CLI11.hpp"
#include "noether/replay.hpp"

using namespace noether;

namespace {

constexpr const char* kTargets[] = {"d6", "d9", "d10", "core"};

Transcript run_target(const std::string& target, const ReplayConfig& cfg) {
  if (target == "d6") return replay_d6(cfg);
  if (target == "d9") return replay_d9(cfg);
  if (target == "d10") return replay_d10(cfg);
  return replay_core(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify the rationality-proof replays and emit claim transcripts"};
  app.name("verify");

  std::vector<std::string> targets;
  ReplayConfig cfg;
  std::string format = "text";
  std::string out_dir;

  app.add_option("targets", targets, "targets to verify: d6 | d9 | d10 | core | all")->required();
  app.add_option("--seed", cfg.seed, "seed for the randomized constructions")
      ->envname("VERIFY_SEED")
      ->capture_default_str();
  app.add_option("--bound", cfg.bound, "exponent bound for lattice / monomial searches")
      ->envname("VERIFY_BOUND")
      ->capture_default_str();
  app.add_option("--ansatz-cap", cfg.ansatz_cap, "degree cap for membership solving")
      ->envname("VERIFY_ANSATZ_CAP")
      ->capture_default_str();
  app.add_option("--format", format, "transcript format: text | json-lines")
      ->envname("VERIFY_FORMAT")
      ->capture_default_str();
  app.add_option("--out", out_dir, "directory for per-target transcript files")->envname("VERIFY_OUT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits 0, any parse problem is a config error
  }

  if (cfg.bound < 1 || cfg.ansatz_cap < 1) {
    std::cerr << "error: --bound and --ansatz-cap must be positive\n";
    return 2;
  }
  if (format != "text" && format != "json-lines") {
    std::cerr << "error: unknown format '" << format << "'\n";
    return 2;
  }
  std::vector<std::string> selected;
  std::set<std::string> seen;
  for (const auto& t : targets) {
    if (t == "all") {
      for (const char* k : kTargets)
        if (seen.insert(k).second) selected.push_back(k);
      continue;
    }
    bool known = false;
    for (const char* k : kTargets) known = known || t == k;
    if (!known) {
      std::cerr << "error: unknown target '" << t << "'\n";
      return 2;
    }
    if (seen.insert(t).second) selected.push_back(t);
  }
  if (selected.empty()) {
    std::cerr << "error: no targets selected\n";
    return 2;
  }
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create output directory '" << out_dir << "': " << ec.message() << "\n";
      return 2;
    }
  }

  bool all_pass = true;
  try {
    for (const auto& target : selected) {
      Transcript t = run_target(target, cfg);
      std::string rendered = format == "text" ? t.to_text() : t.to_jsonl();
      std::cout << rendered;
      if (!out_dir.empty()) {
        std::string ext = format == "text" ? ".txt" : ".jsonl";
        std::filesystem::path path = std::filesystem::path(out_dir) / (target + ext);
        std::ofstream file(path, std::ios::binary);
        if (!file) {
          std::cerr << "error: cannot write '" << path.string() << "'\n";
          return 2;
        }
        file << rendered;
      }
      all_pass = all_pass && t.all_pass();
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return all_pass ? 0 : 1;
}
