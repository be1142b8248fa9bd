#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nakayama/session.hpp"

namespace fs = std::filesystem;
using namespace nakayama;

namespace {

std::string report_file_name(std::size_t index, const Report& r) {
  std::ostringstream name;
  name << std::setw(2) << std::setfill('0') << index + 1 << "-" << r.command << "-" << r.target << ".json";
  return name.str();
}

int run(const std::string& path, const std::string& out_dir, std::optional<int> max_deg, bool json, bool timing) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << path << ": cannot read file\n";
    return kExitParse;
  }
  std::stringstream text;
  text << in.rdbuf();

  Session s;
  try {
    s = parse_session(text.str(), fs::path(path).parent_path().empty() ? fs::path(".") : fs::path(path).parent_path());
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << path << ": internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  RunOptions opt;
  opt.max_deg = max_deg;
  opt.timing = timing;
  SessionResult res = run_session(s, opt);

  if (!out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    for (std::size_t i = 0; i < res.reports.size(); ++i) {
      fs::path p = fs::path(out_dir) / report_file_name(i, res.reports[i]);
      std::ofstream out(p);
      if (!out) {
        std::cerr << p.string() << ": cannot write\n";
        return kExitInternal;
      }
      out << res.reports[i].to_json().dump(2) << "\n";
    }
  }

  if (json) {
    Json all = Json::array();
    for (const auto& r : res.reports) all.push_back(r.to_json());
    Json doc;
    doc["session"] = fs::path(path).filename().string();
    doc["exit_code"] = res.exit_code;
    doc["reports"] = all;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : res.reports) std::cout << r.to_text() << "\n";
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nakayama-lab: Koszul duals, Nakayama automorphisms and Hopf coactions on quadratic algebras"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "run every command of a session file");
  std::string path, out_dir;
  std::optional<int> max_deg;
  bool json = false, timing = false;
  run_cmd->add_option("session", path, "session file")->required();
  run_cmd->add_option("--out", out_dir, "directory for per-command JSON reports");
  run_cmd->add_option("--max-deg", max_deg, "default degree bound for hilbert, koszul-check and consequence")
      ->check(CLI::Range(0, 64));
  run_cmd->add_flag("--json", json, "print reports as one JSON document");
  run_cmd->add_flag("--timing", timing, "record wall-clock seconds per command");

  auto* list_cmd = app.add_subcommand("commands", "list the commands accepted by `run` lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (*list_cmd) {
    for (const auto& c : command_names()) std::cout << c << "\n";
    return 0;
  }
  return run(path, out_dir, max_deg, json, timing);
}
