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

// JSON-lines record logs: one VerificationRecord per line, flushed per
// record so that an interrupted run leaves at most one partial line.

#pragma once

#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsplit/record.hpp"

namespace vsplit {

/// A log that cannot be resumed from. `line` is 1-based.
class LogError : public std::runtime_error {
 public:
  LogError(int line, const std::string& what)
      : std::runtime_error("log line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// Every record in the stream. A final line without a newline terminator is
/// treated as truncated, even if it happens to parse.
inline std::vector<VerificationRecord> read_log(std::istream& in) {
  std::vector<VerificationRecord> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (in.eof()) throw LogError(number, "truncated record (missing newline)");
    if (line.empty()) throw LogError(number, "empty line");
    try {
      out.push_back(parse_record_line(line));
    } catch (const RecordError& e) {
      throw LogError(number, e.what());
    }
  }
  return out;
}

/// Missing file reads as an empty log.
inline std::vector<VerificationRecord> read_log_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  return read_log(in);
}

inline std::set<std::string> completed_instances(const std::vector<VerificationRecord>& records) {
  std::set<std::string> out;
  for (const auto& r : records) out.insert(r.instance_id);
  return out;
}

class LogWriter {
 public:
  /// Truncates unless `append`.
  LogWriter(const std::string& path, bool append)
      : out_(path, std::ios::binary | (append ? std::ios::app : std::ios::trunc)) {
    if (!out_) throw std::runtime_error("cannot open log " + path);
  }

  void write(const VerificationRecord& r) {
    out_ << to_json_line(r) << '\n';
    out_.flush();
  }

 private:
  std::ofstream out_;
};

}  // namespace vsplit
