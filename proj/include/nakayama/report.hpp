#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nakayama/check.hpp"
#include "nakayama/linalg.hpp"

namespace nakayama {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Error };

std::string status_name(Status s);

// Outcome of one session command. Key order in to_json is fixed so reports
// can be compared byte for byte.
struct Report {
  std::string command;
  std::string target;
  Status status = Status::Pass;
  std::vector<Check> details;
  Json result = Json::object();
  std::string error;  // message when status is Error
  int exit_code = 0;
  std::optional<double> seconds;

  void add(const Check& c) { details.push_back(c); }
  void add(const CheckList& cl) {
    for (const auto& c : cl.checks) details.push_back(c);
  }
  // Pass unless some detail failed.
  void settle();

  Json to_json() const;
  std::string to_text() const;
};

Json matrix_json(const linalg::Matrix& m);

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitInternal = 4;

}  // namespace nakayama
