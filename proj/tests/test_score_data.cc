// tests/test_score_data.cc
//
// Copyright 2026  The tdcf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>

#include "error.h"
#include "score_data.h"

using namespace tdcf;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<ScoreRecord> MakeAsvRecords(const std::vector<double>& targets,
                                        const std::vector<double>& nontargets,
                                        const std::vector<double>& spoofs) {
  std::vector<ScoreRecord> records;
  int i = 0;
  for (double s : targets) records.push_back({"t" + std::to_string(i++), TrialClass::kTarget, s, ""});
  for (double s : nontargets) records.push_back({"n" + std::to_string(i++), TrialClass::kNontarget, s, ""});
  for (double s : spoofs) records.push_back({"s" + std::to_string(i++), TrialClass::kSpoof, s, "A01"});
  return records;
}

AsvScoreSet MakeAsvSet(const std::vector<double>& targets,
                       const std::vector<double>& nontargets,
                       const std::vector<double>& spoofs) {
  return AsvScoreSet(MakeAsvRecords(targets, nontargets, spoofs));
}

CmScoreSet MakeCmSet(const std::vector<double>& bona,
                     const std::vector<double>& spoofs) {
  std::vector<ScoreRecord> records;
  int i = 0;
  for (double s : bona) records.push_back({"b" + std::to_string(i++), TrialClass::kBonafide, s, ""});
  for (double s : spoofs) records.push_back({"s" + std::to_string(i++), TrialClass::kSpoof, s, ""});
  return CmScoreSet(std::move(records));
}

// Independent slow oracle: recount per threshold with explicit loops.
int64_t SlowCountAtOrBelow(const std::vector<double>& v, double tau) {
  int64_t n = 0;
  for (double x : v) n += (x <= tau) ? 1 : 0;
  return n;
}
int64_t SlowCountAbove(const std::vector<double>& v, double tau) {
  int64_t n = 0;
  for (double x : v) n += (x > tau) ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("parse: asv example counts classes") {
  const auto set = ParseAsvScores("t1 target 2.0\nt2 nontarget -1.0\nt3 spoof 0.5 A01\n");
  CHECK(set.num_target() == 1);
  CHECK(set.num_nontarget() == 1);
  CHECK(set.num_spoof() == 1);
  CHECK(set.records()[2].attack_id == "A01");
}

TEST_CASE("parse: cm pools target and bonafide labels") {
  const auto set = ParseCmScores("t1 bonafide 1.0\nt2 target 0.5\nt3 spoof -2.0\n");
  CHECK(set.num_bonafide() == 2);
  CHECK(set.num_spoof() == 1);
  CHECK(set.bona_target_fraction() == doctest::Approx(0.5));
}

TEST_CASE("parse: non-finite score is rejected with the line number") {
  CHECK_THROWS_WITH_AS(ParseAsvScores("t1 target NaN\n"),
                       doctest::Contains("line 1"), Error);
  CHECK_THROWS_WITH_AS(ParseAsvScores("t1 target inf\n"),
                       doctest::Contains("non-finite"), Error);
}

TEST_CASE("parse: comments, blank lines, case-insensitive labels") {
  const auto set = ParseAsvScores(
      "# header comment\n"
      "\n"
      "t1 Target 1.25\n"
      "n1 NONTARGET -0.5\n"
      "  \n"
      "s1 Spoof 0.0 rep2\n");
  CHECK(set.num_target() == 1);
  CHECK(set.num_nontarget() == 1);
  CHECK(set.records()[0].score == 1.25);
}

TEST_CASE("parse: malformed lines carry their line number") {
  CHECK_THROWS_WITH_AS(ParseAsvScores("t1 target 1.0\nt2 target\n"),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(ParseAsvScores("t1 target 1.0 A01 extra\n"),
                       doctest::Contains("line 1"), Error);
  CHECK_THROWS_WITH_AS(ParseAsvScores("t1 badclass 1.0\n"),
                       doctest::Contains("unknown class"), Error);
  CHECK_THROWS_WITH_AS(ParseAsvScores("t1 target 1.0x\n"),
                       doctest::Contains("malformed score"), Error);
}

TEST_CASE("parse: bonafide label is CM-only") {
  CHECK_THROWS_AS(ParseAsvScores("t1 bonafide 1.0\n"), Error);
  CHECK_NOTHROW(ParseCmScores("t1 bonafide 1.0\nt2 spoof 0.0\n"));
}

TEST_CASE("parse: attack_id on a non-spoof record is rejected") {
  CHECK_THROWS_WITH_AS(ParseAsvScores("t1 target 1.0 A01\n"),
                       doctest::Contains("attack_id"), Error);
}

TEST_CASE("parse: empty required classes are rejected") {
  CHECK_THROWS_AS(ParseAsvScores("t1 target 1.0\n"), Error);       // no nontarget
  CHECK_THROWS_AS(ParseAsvScores("n1 nontarget 1.0\n"), Error);    // no target
  CHECK_THROWS_AS(ParseCmScores("b1 bonafide 1.0\n"), Error);      // no spoof
  CHECK_THROWS_AS(ParseCmScores("s1 spoof 1.0\n"), Error);         // no bona fide
  CHECK_THROWS_AS(ParseAsvScores("# only a comment\n"), Error);
}

TEST_CASE("parse: duplicate trial ids warn but load") {
  const auto set = ParseAsvScores("t1 target 1.0\nt1 target 2.0\nn1 nontarget 0.0\n");
  CHECK(set.num_target() == 2);
  REQUIRE(set.warnings().size() == 1);
  CHECK(set.warnings()[0].find("duplicate") != std::string::npos);
}

TEST_CASE("asv rates: hand-counted example under the strict > rule") {
  const auto set = MakeAsvSet({2.0, 0.5}, {-1.0, 0.2}, {1.0});
  const auto r = set.ErrorRates(0.0);
  CHECK(r.p_miss == 0.0);       // both targets above 0
  CHECK(r.p_fa == 0.5);         // only 0.2 accepted
  CHECK(r.p_fa_spoof == 1.0);   // 1.0 accepted
  CHECK_FALSE(r.spoof_free);
}

TEST_CASE("asv rates: infinite thresholds hit the accept/reject-all limits") {
  const auto set = MakeAsvSet({2.0, 0.5}, {-1.0, 0.2}, {1.0});
  const auto lo = set.ErrorRates(-kInf);
  CHECK(lo.p_miss == 0.0);
  CHECK(lo.p_fa == 1.0);
  CHECK(lo.p_fa_spoof == 1.0);
  const auto hi = set.ErrorRates(kInf);
  CHECK(hi.p_miss == 1.0);
  CHECK(hi.p_fa == 0.0);
  CHECK(hi.p_fa_spoof == 0.0);
}

TEST_CASE("asv rates: score equal to the threshold is rejected") {
  const auto set = MakeAsvSet({1.0}, {0.0}, {});
  CHECK(set.ErrorRates(1.0).p_miss == 1.0);
}

TEST_CASE("asv rates: spoof-free set pins SFAR to zero and flags it") {
  const auto set = MakeAsvSet({1.0}, {0.0}, {});
  const auto r = set.ErrorRates(0.5);
  CHECK(r.p_fa_spoof == 0.0);
  CHECK(r.spoof_free);
}

TEST_CASE("cm rates: hand-counted examples") {
  const auto set = MakeCmSet({1.0, 3.0}, {0.0});
  const auto r = set.ErrorRates(0.5);
  CHECK(r.p_miss == 0.0);
  CHECK(r.p_fa == 0.0);
  const auto hi = set.ErrorRates(kInf);
  CHECK(hi.p_miss == 1.0);
  CHECK(hi.p_fa == 0.0);
}

TEST_CASE("cm rates: pooled miss equals the labeled mixture") {
  // bona = target {1.0} + nontarget {3.0}: at tau=2 the pooled miss rate is
  // 0.5*1 + 0.5*0 by direct counting.
  std::vector<ScoreRecord> records = {
      {"t1", TrialClass::kTarget, 1.0, ""},
      {"n1", TrialClass::kNontarget, 3.0, ""},
      {"s1", TrialClass::kSpoof, 0.0, ""},
  };
  const CmScoreSet set(std::move(records));
  CHECK(set.bona_target_fraction() == 0.5);
  CHECK(set.ErrorRates(2.0).p_miss == 0.5);
}

TEST_CASE("candidate thresholds: construction examples") {
  CHECK(CandidateThresholds({0.0, 1.0}) == std::vector<double>{-kInf, 0.5, 2.0, kInf});
  CHECK(CandidateThresholds({1.0, 1.0, 1.0}) == std::vector<double>{-kInf, 2.0, kInf});
  CHECK(CandidateThresholds({-3.0}) == std::vector<double>{-kInf, -2.0, kInf});
  CHECK_THROWS_AS(CandidateThresholds({}), Error);
}

TEST_CASE("sweep: hand enumeration and limits") {
  const auto set = MakeAsvSet({1.0}, {0.0}, {});
  const auto sweep = set.Sweep();
  REQUIRE(sweep.size() == 4);  // -inf, 0.5, 2, +inf
  std::vector<int64_t> miss, fa;
  for (const auto& c : sweep) {
    miss.push_back(c.miss);
    fa.push_back(c.fa);
  }
  CHECK(miss == std::vector<int64_t>{0, 0, 1, 1});
  CHECK(fa == std::vector<int64_t>{1, 0, 0, 0});
  // Reject-all tail.
  CHECK(sweep.back().miss == set.num_target());
  CHECK(sweep.back().fa == 0);
}

TEST_CASE("sweep: constant scores collapse to three candidates") {
  const auto set = MakeAsvSet({0.5}, {0.5}, {0.5});
  CHECK(set.candidate_thresholds().size() == 3);
}

TEST_CASE("eer: exhaustive-sweep example with the lowest-threshold tie-break") {
  const auto r = EmpiricalEer({1.0, 2.0, 3.0}, {0.0, 2.5});
  CHECK(r.threshold == 1.5);
  CHECK(r.eer == doctest::Approx(5.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("eer: separable classes give zero at the midpoint") {
  const auto r = EmpiricalEer({2.0}, {0.0});
  CHECK(r.eer == 0.0);
  CHECK(r.threshold == 1.0);
}

TEST_CASE("eer: identical class distributions sit at chance") {
  const auto r = EmpiricalEer({0.0, 1.0}, {0.0, 1.0});
  CHECK(r.eer == 0.5);
}

TEST_CASE("eer: empty classes are rejected") {
  CHECK_THROWS_AS(EmpiricalEer({}, {1.0}), Error);
  CHECK_THROWS_AS(EmpiricalEer({1.0}, {}), Error);
}

TEST_CASE("per-attack: filters spoofs, keeps the rest, rejects unknown ids") {
  std::vector<ScoreRecord> records = MakeAsvRecords({2.0}, {0.0}, {});
  records.push_back({"s1", TrialClass::kSpoof, 0.1, "A01"});
  records.push_back({"s2", TrialClass::kSpoof, 0.9, "A02"});
  const AsvScoreSet set(std::move(records));

  const auto a01 = set.PerAttack("A01");
  CHECK(a01.num_spoof() == 1);
  CHECK(a01.spoof_scores() == std::vector<double>{0.1});
  CHECK(a01.num_target() == set.num_target());
  CHECK(a01.num_nontarget() == set.num_nontarget());
  CHECK(set.AttackIds() == std::vector<std::string>{"A01", "A02"});
  CHECK_THROWS_AS(set.PerAttack("A99"), Error);
}

TEST_CASE("per-attack: CM sets filter the same way") {
  std::vector<ScoreRecord> records = {
      {"b1", TrialClass::kBonafide, 1.0, ""},
      {"b2", TrialClass::kTarget, 2.0, ""},
      {"s1", TrialClass::kSpoof, -0.5, "A01"},
      {"s2", TrialClass::kSpoof, 0.3, "A02"},
  };
  const CmScoreSet set(std::move(records));
  const auto a02 = set.PerAttack("A02");
  CHECK(a02.num_bonafide() == 2);
  CHECK(a02.num_spoof() == 1);
  CHECK(a02.spoof_scores() == std::vector<double>{0.3});
  CHECK_THROWS_AS(set.PerAttack("missing"), Error);
}

TEST_CASE("property: monotone error counts along the candidate list") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> count(1, 40);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int rep = 0; rep < 50; ++rep) {
    const bool quantized = rep % 2 == 0;
    auto draw = [&](int n) {
      std::vector<double> v(n);
      for (auto& x : v) {
        x = uni(rng);
        if (quantized) x = std::round(x * 2.0) / 2.0;
      }
      return v;
    };
    const auto set = MakeAsvSet(draw(count(rng)), draw(count(rng)), draw(count(rng)));
    const auto sweep = set.Sweep();
    for (size_t i = 1; i < sweep.size(); ++i) {
      CHECK(sweep[i - 1].miss <= sweep[i].miss);
      CHECK(sweep[i - 1].fa >= sweep[i].fa);
      CHECK(sweep[i - 1].fa_spoof >= sweep[i].fa_spoof);
    }
  }
}

TEST_CASE("property: pooled CM misses split exactly into labeled classes") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> count(1, 30);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<ScoreRecord> records;
    std::vector<double> tar, non;
    int id = 0;
    for (int i = 0, n = count(rng); i < n; ++i) {
      tar.push_back(uni(rng));
      records.push_back({"t" + std::to_string(id++), TrialClass::kTarget, tar.back(), ""});
    }
    for (int i = 0, n = count(rng); i < n; ++i) {
      non.push_back(uni(rng));
      records.push_back({"n" + std::to_string(id++), TrialClass::kNontarget, non.back(), ""});
    }
    records.push_back({"s0", TrialClass::kSpoof, uni(rng), ""});
    const CmScoreSet set(std::move(records));
    for (double tau : set.candidate_thresholds()) {
      const auto c = set.ErrorCounts(tau);
      CHECK(c.miss == SlowCountAtOrBelow(tar, tau) + SlowCountAtOrBelow(non, tau));
    }
  }
}

TEST_CASE("property: sweep equals per-threshold calls bit for bit") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> count(1, 25);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int rep = 0; rep < 20; ++rep) {
    auto draw = [&](int n) {
      std::vector<double> v(n);
      for (auto& x : v) x = std::round(uni(rng) * 4.0) / 4.0;
      return v;
    };
    const auto set = MakeAsvSet(draw(count(rng)), draw(count(rng)), draw(count(rng)));
    const auto sweep = set.Sweep();
    const auto& taus = set.candidate_thresholds();
    REQUIRE(sweep.size() == taus.size());
    for (size_t i = 0; i < taus.size(); ++i) {
      const auto direct = set.ErrorCounts(taus[i]);
      CHECK(sweep[i].miss == direct.miss);
      CHECK(sweep[i].fa == direct.fa);
      CHECK(sweep[i].fa_spoof == direct.fa_spoof);
      CHECK(sweep[i].threshold == direct.threshold);
      // And against the slow recount.
      CHECK(sweep[i].miss == SlowCountAtOrBelow(set.target_scores(), taus[i]));
      CHECK(sweep[i].fa == SlowCountAbove(set.nontarget_scores(), taus[i]));
    }
  }
}

TEST_CASE("property: empirical EER matches a quadratic-time oracle") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> count(1, 25);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<double> pos(count(rng)), neg(count(rng));
    for (auto& x : pos) x = std::round(uni(rng) * 2.0) / 2.0;
    for (auto& x : neg) x = std::round(uni(rng) * 2.0) / 2.0;

    std::vector<double> pooled(pos);
    pooled.insert(pooled.end(), neg.begin(), neg.end());
    const auto taus = CandidateThresholds(pooled);
    const int64_t np = pos.size(), nn = neg.size();
    int64_t best_gap = std::numeric_limits<int64_t>::max();
    double best_tau = 0.0, best_eer = 0.0;
    for (double tau : taus) {
      const int64_t miss = SlowCountAtOrBelow(pos, tau);
      const int64_t fa = SlowCountAbove(neg, tau);
      const int64_t gap = std::llabs(miss * nn - fa * np);
      if (gap < best_gap) {
        best_gap = gap;
        best_tau = tau;
        best_eer = 0.5 * (double(miss) / np + double(fa) / nn);
      }
    }
    const auto got = EmpiricalEer(pos, neg);
    CHECK(got.threshold == best_tau);
    CHECK(got.eer == best_eer);
  }
}

TEST_CASE("property: parse -> write -> parse is bit-exact and order-preserving") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  std::vector<ScoreRecord> records;
  for (int i = 0; i < 200; ++i) {
    const int cls = i % 3;
    ScoreRecord r;
    r.trial_id = "trial-" + std::to_string(i);
    r.trial_class = cls == 0   ? TrialClass::kTarget
                    : cls == 1 ? TrialClass::kNontarget
                               : TrialClass::kSpoof;
    r.score = uni(rng) * std::pow(10.0, (i % 7) - 3);
    if (cls == 2) r.attack_id = "A0" + std::to_string(i % 4);
    records.push_back(r);
  }
  const AsvScoreSet set(records);

  std::ostringstream out;
  WriteScores(set.records(), out);
  const auto reparsed = ParseAsvScores(out.str());
  REQUIRE(reparsed.records().size() == records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    CHECK(reparsed.records()[i].trial_id == records[i].trial_id);
    CHECK(reparsed.records()[i].trial_class == records[i].trial_class);
    CHECK(reparsed.records()[i].score == records[i].score);  // bit-exact
    CHECK(reparsed.records()[i].attack_id == records[i].attack_id);
  }
}

TEST_CASE("thresholds must not be NaN") {
  const auto set = MakeAsvSet({1.0}, {0.0}, {});
  CHECK_THROWS_AS(set.ErrorRates(std::nan("")), Error);
}
