// src/score_data.cc
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

#include "score_data.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "error.h"

namespace tdcf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxDuplicateWarnings = 100;

// #scores <= tau in a sorted ascending vector.
int64_t CountAtOrBelow(const std::vector<double>& sorted, double tau) {
  return std::upper_bound(sorted.begin(), sorted.end(), tau) - sorted.begin();
}

// #scores > tau (the accepted ones under the strict `>` rule).
int64_t CountAbove(const std::vector<double>& sorted, double tau) {
  return static_cast<int64_t>(sorted.size()) - CountAtOrBelow(sorted, tau);
}

void CheckThreshold(double tau) {
  if (std::isnan(tau)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must not be NaN");
  }
}

std::vector<double> SortedScores(const std::vector<ScoreRecord>& records,
                                 bool (*pred)(TrialClass)) {
  std::vector<double> out;
  for (const auto& r : records) {
    if (pred(r.trial_class)) out.push_back(r.score);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> PooledCandidates(const std::vector<ScoreRecord>& records) {
  std::vector<double> pooled;
  pooled.reserve(records.size());
  for (const auto& r : records) pooled.push_back(r.score);
  return CandidateThresholds(pooled);
}

std::vector<std::string> DistinctAttacks(const std::vector<ScoreRecord>& records) {
  std::vector<std::string> ids;
  std::unordered_set<std::string_view> seen;
  for (const auto& r : records) {
    if (r.trial_class == TrialClass::kSpoof && !r.attack_id.empty() &&
        seen.insert(r.attack_id).second) {
      ids.push_back(r.attack_id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<ScoreRecord> FilterAttack(const std::vector<ScoreRecord>& records,
                                      const std::string& attack_id) {
  bool found = false;
  for (const auto& r : records) {
    if (r.trial_class == TrialClass::kSpoof && r.attack_id == attack_id) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown attack_id '" + attack_id + "'");
  }
  std::vector<ScoreRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (r.trial_class != TrialClass::kSpoof || r.attack_id == attack_id) {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace

const char* TrialClassName(TrialClass c) {
  switch (c) {
    case TrialClass::kTarget: return "target";
    case TrialClass::kNontarget: return "nontarget";
    case TrialClass::kSpoof: return "spoof";
    case TrialClass::kBonafide: return "bonafide";
  }
  return "?";
}

AsvErrorRates AsvErrorCounts::ToRates() const {
  AsvErrorRates r;
  r.p_miss = static_cast<double>(miss) / static_cast<double>(n_target);
  r.p_fa = static_cast<double>(fa) / static_cast<double>(n_nontarget);
  if (n_spoof > 0) {
    r.p_fa_spoof = static_cast<double>(fa_spoof) / static_cast<double>(n_spoof);
  } else {
    r.p_fa_spoof = 0.0;
    r.spoof_free = true;
  }
  r.threshold = threshold;
  return r;
}

CmErrorRates CmErrorCounts::ToRates() const {
  CmErrorRates r;
  r.p_miss = static_cast<double>(miss) / static_cast<double>(n_bonafide);
  r.p_fa = static_cast<double>(fa) / static_cast<double>(n_spoof);
  r.threshold = threshold;
  return r;
}

std::vector<double> CandidateThresholds(const std::vector<double>& scores) {
  if (scores.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "candidate thresholds require at least one score");
  }
  std::vector<double> distinct(scores);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<double> out;
  out.reserve(distinct.size() + 3);
  out.push_back(-kInf);
  for (size_t i = 0; i + 1 < distinct.size(); ++i) {
    out.push_back(distinct[i] / 2 + distinct[i + 1] / 2);
  }
  out.push_back(distinct.back() + 1.0);
  out.push_back(kInf);
  return out;
}

EerResult EmpiricalEer(std::vector<double> positive, std::vector<double> negative) {
  if (positive.empty() || negative.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "EER requires non-empty positive and negative classes");
  }
  std::sort(positive.begin(), positive.end());
  std::sort(negative.begin(), negative.end());
  std::vector<double> pooled(positive);
  pooled.insert(pooled.end(), negative.begin(), negative.end());
  const std::vector<double> taus = CandidateThresholds(pooled);

  const int64_t n_pos = positive.size(), n_neg = negative.size();
  int64_t best_gap = std::numeric_limits<int64_t>::max();
  int64_t best_miss = 0, best_fa = 0;
  double best_tau = -kInf;
  for (double tau : taus) {
    const int64_t miss = CountAtOrBelow(positive, tau);
    const int64_t fa = CountAbove(negative, tau);
    // |p_miss - p_fa| compared exactly over the common denominator.
    const int64_t gap = std::llabs(miss * n_neg - fa * n_pos);
    if (gap < best_gap) {
      best_gap = gap;
      best_miss = miss;
      best_fa = fa;
      best_tau = tau;
    }
  }
  EerResult r;
  r.threshold = best_tau;
  r.eer = 0.5 * (static_cast<double>(best_miss) / static_cast<double>(n_pos) +
                 static_cast<double>(best_fa) / static_cast<double>(n_neg));
  return r;
}

AsvScoreSet::AsvScoreSet(std::vector<ScoreRecord> records,
                         std::vector<std::string> warnings)
    : records_(std::move(records)), warnings_(std::move(warnings)) {
  for (const auto& r : records_) {
    if (r.trial_class == TrialClass::kBonafide) {
      throw Error(ErrorCode::kInvalidArgument,
                  "class 'bonafide' is not valid in an ASV score set");
    }
    if (!std::isfinite(r.score)) {
      throw Error(ErrorCode::kInvalidArgument, "scores must be finite");
    }
    if (r.trial_class != TrialClass::kSpoof && !r.attack_id.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "attack_id is only valid on spoof records");
    }
  }
  target_ = SortedScores(records_, [](TrialClass c) { return c == TrialClass::kTarget; });
  nontarget_ = SortedScores(records_, [](TrialClass c) { return c == TrialClass::kNontarget; });
  spoof_ = SortedScores(records_, [](TrialClass c) { return c == TrialClass::kSpoof; });
  if (target_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ASV score set has no target trials");
  }
  if (nontarget_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ASV score set has no nontarget trials");
  }
  candidates_ = PooledCandidates(records_);
}

AsvErrorCounts AsvScoreSet::ErrorCounts(double tau) const {
  CheckThreshold(tau);
  AsvErrorCounts c;
  c.miss = CountAtOrBelow(target_, tau);
  c.fa = CountAbove(nontarget_, tau);
  c.fa_spoof = CountAbove(spoof_, tau);
  c.n_target = num_target();
  c.n_nontarget = num_nontarget();
  c.n_spoof = num_spoof();
  c.threshold = tau;
  return c;
}

AsvErrorRates AsvScoreSet::ErrorRates(double tau) const {
  return ErrorCounts(tau).ToRates();
}

std::vector<AsvErrorCounts> AsvScoreSet::Sweep() const {
  std::vector<AsvErrorCounts> out;
  out.reserve(candidates_.size());
  for (double tau : candidates_) out.push_back(ErrorCounts(tau));
  return out;
}

EerResult AsvScoreSet::Eer() const { return EmpiricalEer(target_, nontarget_); }

std::vector<std::string> AsvScoreSet::AttackIds() const {
  return DistinctAttacks(records_);
}

AsvScoreSet AsvScoreSet::PerAttack(const std::string& attack_id) const {
  return AsvScoreSet(FilterAttack(records_, attack_id));
}

CmScoreSet::CmScoreSet(std::vector<ScoreRecord> records,
                       std::vector<std::string> warnings)
    : records_(std::move(records)), warnings_(std::move(warnings)) {
  std::vector<double> bona;
  for (const auto& r : records_) {
    if (!std::isfinite(r.score)) {
      throw Error(ErrorCode::kInvalidArgument, "scores must be finite");
    }
    switch (r.trial_class) {
      case TrialClass::kTarget:
        ++n_target_labeled_;
        bona.push_back(r.score);
        break;
      case TrialClass::kNontarget:
        ++n_nontarget_labeled_;
        bona.push_back(r.score);
        break;
      case TrialClass::kBonafide:
        bona.push_back(r.score);
        break;
      case TrialClass::kSpoof:
        break;
    }
    if (r.trial_class != TrialClass::kSpoof && !r.attack_id.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "attack_id is only valid on spoof records");
    }
  }
  bonafide_ = std::move(bona);
  std::sort(bonafide_.begin(), bonafide_.end());
  spoof_ = SortedScores(records_, [](TrialClass c) { return c == TrialClass::kSpoof; });
  if (bonafide_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "CM score set has no bona fide trials");
  }
  if (spoof_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "CM score set has no spoof trials");
  }
  candidates_ = PooledCandidates(records_);
}

CmErrorCounts CmScoreSet::ErrorCounts(double tau) const {
  CheckThreshold(tau);
  CmErrorCounts c;
  c.miss = CountAtOrBelow(bonafide_, tau);
  c.fa = CountAbove(spoof_, tau);
  c.n_bonafide = num_bonafide();
  c.n_spoof = num_spoof();
  c.threshold = tau;
  return c;
}

CmErrorRates CmScoreSet::ErrorRates(double tau) const {
  return ErrorCounts(tau).ToRates();
}

std::vector<CmErrorCounts> CmScoreSet::Sweep() const {
  std::vector<CmErrorCounts> out;
  out.reserve(candidates_.size());
  for (double tau : candidates_) out.push_back(ErrorCounts(tau));
  return out;
}

EerResult CmScoreSet::Eer() const { return EmpiricalEer(bonafide_, spoof_); }

std::vector<std::string> CmScoreSet::AttackIds() const {
  return DistinctAttacks(records_);
}

CmScoreSet CmScoreSet::PerAttack(const std::string& attack_id) const {
  return CmScoreSet(FilterAttack(records_, attack_id));
}

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::string Lowered(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Error ParseError(size_t line_no, const std::string& what) {
  return Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<ScoreRecord> ParseRecords(std::string_view text, ScoreKind kind,
                                      std::vector<std::string>* warnings) {
  std::vector<ScoreRecord> records;
  std::unordered_set<std::string> seen_ids;
  int duplicate_warnings = 0;

  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto fields = SplitFields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() < 3) {
      throw ParseError(line_no, "expected `trial_id class score [attack_id]`");
    }
    if (fields.size() > 4) {
      throw ParseError(line_no, "too many fields");
    }

    ScoreRecord rec;
    rec.trial_id = std::string(fields[0]);

    const std::string label = Lowered(fields[1]);
    if (label == "target") {
      rec.trial_class = TrialClass::kTarget;
    } else if (label == "nontarget") {
      rec.trial_class = TrialClass::kNontarget;
    } else if (label == "spoof") {
      rec.trial_class = TrialClass::kSpoof;
    } else if (label == "bonafide") {
      if (kind == ScoreKind::kAsv) {
        throw ParseError(line_no, "class 'bonafide' is not valid in an ASV score file");
      }
      rec.trial_class = TrialClass::kBonafide;
    } else {
      throw ParseError(line_no, "unknown class label '" + std::string(fields[1]) + "'");
    }

    const std::string_view num = fields[2];
    auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), rec.score);
    if (ec != std::errc() || end != num.data() + num.size()) {
      throw ParseError(line_no, "malformed score '" + std::string(num) + "'");
    }
    if (!std::isfinite(rec.score)) {
      throw ParseError(line_no, "non-finite score '" + std::string(num) + "'");
    }

    if (fields.size() == 4) {
      if (rec.trial_class != TrialClass::kSpoof) {
        throw ParseError(line_no, "attack_id is only valid on spoof records");
      }
      rec.attack_id = std::string(fields[3]);
    }

    if (warnings && !seen_ids.insert(rec.trial_id).second) {
      if (duplicate_warnings < kMaxDuplicateWarnings) {
        warnings->push_back("line " + std::to_string(line_no) +
                            ": duplicate trial_id '" + rec.trial_id + "'");
      } else if (duplicate_warnings == kMaxDuplicateWarnings) {
        warnings->push_back("further duplicate trial_id warnings suppressed");
      }
      ++duplicate_warnings;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace

AsvScoreSet ParseAsvScores(std::string_view text) {
  std::vector<std::string> warnings;
  auto records = ParseRecords(text, ScoreKind::kAsv, &warnings);
  if (records.empty()) {
    throw Error(ErrorCode::kParse, "score file contains no records");
  }
  return AsvScoreSet(std::move(records), std::move(warnings));
}

CmScoreSet ParseCmScores(std::string_view text) {
  std::vector<std::string> warnings;
  auto records = ParseRecords(text, ScoreKind::kCm, &warnings);
  if (records.empty()) {
    throw Error(ErrorCode::kParse, "score file contains no records");
  }
  return CmScoreSet(std::move(records), std::move(warnings));
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, end);
}

void WriteScores(const std::vector<ScoreRecord>& records, std::ostream& out) {
  for (const auto& r : records) {
    out << r.trial_id << ' ' << TrialClassName(r.trial_class) << ' '
        << FormatDouble(r.score);
    if (!r.attack_id.empty()) out << ' ' << r.attack_id;
    out << '\n';
  }
}

}  // namespace tdcf
