// Copyright 2026 The vsplit Authors
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

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace vsplit {

using Json = nlohmann::ordered_json;

enum class Status { kPassed, kFailed, kSkipped, kUndecided };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kPassed: return "passed";
    case Status::kFailed: return "failed";
    case Status::kSkipped: return "skipped";
    case Status::kUndecided: return "undecided";
  }
  return "?";
}

/// Outcome of checking one statement on one instance.
///
/// Hypotheses are kept apart from the conclusion so that an instance whose
/// hypotheses fail is reported as skipped, never as passed. The conclusion
/// is evaluated whenever it is computable, even for skipped instances.
struct VerificationRecord {
  std::string lemma;
  std::string instance_id;
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool conclusion = false;
  Json witness;  // null when absent
  bool undecided = false;

  VerificationRecord& hypothesis(std::string name, bool value) {
    hypotheses.emplace_back(std::move(name), value);
    return *this;
  }

  [[nodiscard]] bool hypotheses_hold() const {
    for (const auto& [name, value] : hypotheses)
      if (!value) return false;
    return true;
  }

  [[nodiscard]] Status status() const {
    if (undecided) return Status::kUndecided;
    if (!hypotheses_hold()) return Status::kSkipped;
    return conclusion ? Status::kPassed : Status::kFailed;
  }

  [[nodiscard]] bool failed() const { return status() == Status::kFailed; }

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

/// {lemma, instance_id, hypotheses, conclusion, witness, status}; key order
/// is fixed so output is byte-stable.
inline Json to_json(const VerificationRecord& r) {
  Json hyp = Json::object();
  for (const auto& [name, value] : r.hypotheses) hyp[name] = value;
  Json j;
  j["lemma"] = r.lemma;
  j["instance_id"] = r.instance_id;
  j["hypotheses"] = std::move(hyp);
  j["conclusion"] = r.conclusion;
  j["witness"] = r.witness;
  j["status"] = to_string(r.status());
  return j;
}

inline std::string to_json_line(const VerificationRecord& r) { return to_json(r).dump(); }

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline VerificationRecord record_from_json(const Json& j) {
  try {
    VerificationRecord r;
    r.lemma = j.at("lemma").get<std::string>();
    r.instance_id = j.at("instance_id").get<std::string>();
    for (const auto& [name, value] : j.at("hypotheses").items()) r.hypotheses.emplace_back(name, value.get<bool>());
    r.conclusion = j.at("conclusion").get<bool>();
    r.witness = j.at("witness");
    const std::string status = j.at("status").get<std::string>();
    r.undecided = status == "undecided";
    if (status != to_string(r.status())) throw RecordError("status field disagrees with record contents");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw RecordError(std::string("malformed verification record: ") + e.what());
  }
}

inline VerificationRecord parse_record_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw RecordError(std::string("invalid JSON: ") + e.what());
  }
  return record_from_json(j);
}

struct RecordTally {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int undecided = 0;

  void add(const VerificationRecord& r) {
    switch (r.status()) {
      case Status::kPassed: ++passed; break;
      case Status::kFailed: ++failed; break;
      case Status::kSkipped: ++skipped; break;
      case Status::kUndecided: ++undecided; break;
    }
  }
  [[nodiscard]] int total() const { return passed + failed + skipped + undecided; }
};

/// Tally per lemma name, ordered by name.
inline std::map<std::string, RecordTally> tally_by_lemma(const std::vector<VerificationRecord>& records) {
  std::map<std::string, RecordTally> out;
  for (const auto& r : records) out[r.lemma].add(r);
  return out;
}

}  // namespace vsplit
