// src/score_data.h
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

#ifndef TDCF_SRC_SCORE_DATA_H_
#define TDCF_SRC_SCORE_DATA_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace tdcf {

// Trial classes. ASV trials use {target, nontarget, spoof}; CM trials pool
// target and nontarget into the bona fide class. kBonafide marks CM records
// whose file label was the generic 'bonafide' (no target/nontarget split).
enum class TrialClass { kTarget, kNontarget, kSpoof, kBonafide };

const char* TrialClassName(TrialClass c);

struct ScoreRecord {
  std::string trial_id;
  TrialClass trial_class;
  double score;             // finite; validated at parse time
  std::string attack_id;    // non-empty only on spoof records
};

enum class ScoreKind { kAsv, kCm };

// Error rates at a fixed threshold. The decision rule is ACCEPT iff
// score > threshold, so a score equal to the threshold is rejected.
struct AsvErrorRates {
  double p_miss = 0.0;
  double p_fa = 0.0;
  double p_fa_spoof = 0.0;  // SFAR; 0 with spoof_free set when N_spoof == 0
  double threshold = 0.0;   // may be +-inf
  bool spoof_free = false;
};

struct CmErrorRates {
  double p_miss = 0.0;
  double p_fa = 0.0;
  double threshold = 0.0;
};

// Exact integer form of the rates: rates are rationals with the class count
// as denominator. Kept exact so invariant tests and sweep/point agreement
// hold bit-for-bit; divided into doubles only at the API boundary.
struct AsvErrorCounts {
  int64_t miss = 0, fa = 0, fa_spoof = 0;
  int64_t n_target = 0, n_nontarget = 0, n_spoof = 0;
  double threshold = 0.0;
  AsvErrorRates ToRates() const;
};

struct CmErrorCounts {
  int64_t miss = 0, fa = 0;
  int64_t n_bonafide = 0, n_spoof = 0;
  double threshold = 0.0;
  CmErrorRates ToRates() const;
};

struct EerResult {
  double eer = 0.0;
  double threshold = 0.0;
};

/**
   Candidate decision thresholds for a pooled score collection:
   {-inf} + midpoints between consecutive distinct scores + {max + 1} + {+inf},
   strictly increasing. Under the strict `>` accept rule the list realizes
   every empirical operating point of the collection.
*/
std::vector<double> CandidateThresholds(const std::vector<double>& scores);

/**
   Empirical EER over positive/negative score collections: among candidate
   thresholds of the pooled scores, picks the one minimizing |p_miss - p_fa|
   (compared exactly in integer arithmetic), lowest threshold on ties, and
   returns the average of the two rates there.
*/
EerResult EmpiricalEer(std::vector<double> positive, std::vector<double> negative);

// Immutable ASV score collection with per-class sorted caches.
// N_tar >= 1 and N_non >= 1 are required; spoof-free sets are allowed so
// NIST-DCF style data loads cleanly (SFAR then reads 0, flagged).
class AsvScoreSet {
 public:
  explicit AsvScoreSet(std::vector<ScoreRecord> records,
                       std::vector<std::string> warnings = {});

  const std::vector<ScoreRecord>& records() const { return records_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  int64_t num_target() const { return static_cast<int64_t>(target_.size()); }
  int64_t num_nontarget() const { return static_cast<int64_t>(nontarget_.size()); }
  int64_t num_spoof() const { return static_cast<int64_t>(spoof_.size()); }

  const std::vector<double>& target_scores() const { return target_; }
  const std::vector<double>& nontarget_scores() const { return nontarget_; }
  const std::vector<double>& spoof_scores() const { return spoof_; }

  // Candidates over the pooled scores of all classes.
  const std::vector<double>& candidate_thresholds() const { return candidates_; }

  AsvErrorCounts ErrorCounts(double tau) const;
  AsvErrorRates ErrorRates(double tau) const;

  // One entry per candidate threshold, identical to per-threshold calls.
  std::vector<AsvErrorCounts> Sweep() const;

  // Target-vs-nontarget EER.
  EerResult Eer() const;

  // Distinct attack ids over spoof records, sorted.
  std::vector<std::string> AttackIds() const;

  // Same set with spoof records filtered to one attack.
  AsvScoreSet PerAttack(const std::string& attack_id) const;

 private:
  std::vector<ScoreRecord> records_;
  std::vector<std::string> warnings_;
  std::vector<double> target_, nontarget_, spoof_;  // sorted ascending
  std::vector<double> candidates_;
};

// Immutable CM score collection. Bona fide pools target, nontarget and
// generic 'bonafide' labels; N_bona >= 1 and N_spoof >= 1 are required.
class CmScoreSet {
 public:
  explicit CmScoreSet(std::vector<ScoreRecord> records,
                      std::vector<std::string> warnings = {});

  const std::vector<ScoreRecord>& records() const { return records_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  int64_t num_bonafide() const { return static_cast<int64_t>(bonafide_.size()); }
  int64_t num_spoof() const { return static_cast<int64_t>(spoof_.size()); }
  int64_t num_target_labeled() const { return n_target_labeled_; }
  int64_t num_nontarget_labeled() const { return n_nontarget_labeled_; }

  // Proportion of explicitly 'target'-labeled records within the bona fide
  // class (pi~_tar of the bona fide mixture).
  double bona_target_fraction() const {
    return static_cast<double>(n_target_labeled_) /
           static_cast<double>(bonafide_.size());
  }

  const std::vector<double>& bonafide_scores() const { return bonafide_; }
  const std::vector<double>& spoof_scores() const { return spoof_; }

  const std::vector<double>& candidate_thresholds() const { return candidates_; }

  CmErrorCounts ErrorCounts(double tau) const;
  CmErrorRates ErrorRates(double tau) const;
  std::vector<CmErrorCounts> Sweep() const;

  // Bonafide-vs-spoof EER.
  EerResult Eer() const;

  std::vector<std::string> AttackIds() const;
  CmScoreSet PerAttack(const std::string& attack_id) const;

 private:
  std::vector<ScoreRecord> records_;
  std::vector<std::string> warnings_;
  std::vector<double> bonafide_, spoof_;  // sorted ascending
  int64_t n_target_labeled_ = 0, n_nontarget_labeled_ = 0;
  std::vector<double> candidates_;
};

/**
   Parses the text score-file format: one record per non-empty line,
   whitespace-separated `trial_id class score [attack_id]`, class in
   {target, nontarget, spoof, bonafide} case-insensitive ('bonafide' is CM
   only), '#' comment lines and blank lines ignored. Malformed input throws
   Error(kParse) with the line number.
*/
AsvScoreSet ParseAsvScores(std::string_view text);
CmScoreSet ParseCmScores(std::string_view text);

// Serializes records in order; scores printed with shortest round-trip
// representation so parse -> write -> parse is bit-exact.
void WriteScores(const std::vector<ScoreRecord>& records, std::ostream& out);

// Shortest round-trip decimal form of a double ("inf"/"-inf"/"nan" spelled
// out). Shared by score serialization and the CLI's CSV output.
std::string FormatDouble(double value);

}  // namespace tdcf

#endif  // TDCF_SRC_SCORE_DATA_H_
