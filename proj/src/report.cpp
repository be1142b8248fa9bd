#include "nakayama/report.hpp"

namespace nakayama {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

void Report::settle() {
  if (status == Status::Error) return;
  status = Status::Pass;
  for (const auto& c : details)
    if (!c.pass) status = Status::Fail;
  exit_code = status == Status::Pass ? kExitPass : kExitFail;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["target"] = target;
  j["status"] = status_name(status);
  Json det = Json::array();
  for (const auto& c : details) {
    Json d;
    d["identity"] = c.identity;
    d["status"] = c.pass ? "pass" : "fail";
    d["lhs"] = c.lhs;
    d["rhs"] = c.rhs;
    d["witness"] = c.witness;
    det.push_back(std::move(d));
  }
  j["details"] = std::move(det);
  j["result"] = result;
  if (status == Status::Error) j["error"] = error;
  if (seconds) j["seconds"] = *seconds;
  return j;
}

std::string Report::to_text() const {
  std::string out = "[" + status_name(status) + "] " + command + " " + target + "\n";
  if (status == Status::Error) out += "  error: " + error + "\n";
  for (const auto& c : details) {
    out += "  " + std::string(c.pass ? "pass " : "FAIL ") + c.identity;
    if (!c.witness.empty()) out += "  at " + c.witness;
    if (!c.pass && (!c.lhs.empty() || !c.rhs.empty())) out += "  lhs: " + c.lhs + "  rhs: " + c.rhs;
    out += "\n";
  }
  if (!result.empty()) out += "  result: " + result.dump() + "\n";
  return out;
}

Json matrix_json(const linalg::Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m.to_strings()) out.push_back(row);
  return out;
}

}  // namespace nakayama
