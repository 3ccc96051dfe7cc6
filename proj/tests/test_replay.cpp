#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "noether/replay.hpp"

using namespace noether;

TEST_CASE("transcript serialization roundtrips losslessly") {
  Transcript t;
  t.target = "core";
  t.seed = 42;
  t.bound = 2;
  t.ansatz_cap = 16;
  t.add("a/one", ClaimKind::Identity, "lhs=1 rhs=1", true, "w");
  t.add("a/two", ClaimKind::Relation, "relation sigma^2", false);
  t.add("b/three", ClaimKind::LatticeWitness, "index=9", true, "det=-1");
  CHECK(t.pass_count() == 2);
  CHECK(t.fail_count() == 1);
  CHECK_FALSE(t.all_pass());
  Transcript back = Transcript::from_jsonl(t.to_jsonl());
  CHECK(back == t);
  CHECK(back.to_text() == t.to_text());
  // text form carries every record
  std::string text = t.to_text();
  CHECK(text.find("FAIL [relation] a/two") != std::string::npos);
  CHECK(text.find("summary fail 2/3 claims") != std::string::npos);
}

TEST_CASE("transcript parser rejects tampered summaries") {
  Transcript t;
  t.target = "core";
  t.add("x", ClaimKind::Identity, "i", true);
  std::string good = t.to_jsonl();
  CHECK_THROWS(Transcript::from_jsonl(""));
  std::string bad = good;
  bad.replace(bad.find("\"record_count\":1"), 16, "\"record_count\":2");
  CHECK_THROWS(Transcript::from_jsonl(bad));
}

TEST_CASE("regular representation reduction for the three group sizes") {
  for (int n : {6, 9, 10}) {
    Transcript t = regular_reduction(n);
    CHECK(t.all_pass());
    auto ls = t.labels();
    bool has_y = std::find(ls.begin(), ls.end(), "reg/y/sigma") != ls.end();
    CHECK(has_y == (n % 2 == 0));  // the y/y' split exists only for even n
  }
  CHECK_THROWS(regular_reduction(2));
}

TEST_CASE("every replay passes and matches its manifest") {
  ReplayConfig cfg;
  for (const std::string& target : {std::string("d6"), std::string("d9"), std::string("d10"), std::string("core")}) {
    Transcript t = target == "d6"    ? replay_d6(cfg)
                   : target == "d9"  ? replay_d9(cfg)
                   : target == "d10" ? replay_d10(cfg)
                                     : replay_core(cfg);
    INFO(target);
    CHECK(t.all_pass());
    CHECK(t.labels() == manifest(target));
    CHECK(t.target == target);
  }
  CHECK_THROWS(manifest("d7"));
}

TEST_CASE("replays are deterministic under a fixed seed") {
  ReplayConfig cfg;
  cfg.seed = 7;
  CHECK(replay_d6(cfg).to_jsonl() == replay_d6(cfg).to_jsonl());
  CHECK(replay_core(cfg).to_jsonl() == replay_core(cfg).to_jsonl());
}
