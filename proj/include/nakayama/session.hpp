#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/coaction.hpp"
#include "nakayama/hopf.hpp"
#include "nakayama/presentation.hpp"
#include "nakayama/report.hpp"

namespace nakayama {

struct AlgebraDecl {
  std::string name;
  GradedPresentation P;
  std::optional<linalg::Matrix> skew_p;  // set for `skew` declarations
};

struct HopfDecl {
  std::string name;
  HopfAlgebra K;
};

struct CoactionDecl {
  std::string name, algebra, hopf;
  HMatrix Y;
};

struct CommandDecl {
  std::string name, target;
  std::map<std::string, std::string> flags;
  int line = 0, column = 0;
};

// Declarations and commands of one session file, all over a single field.
struct Session {
  Field field = Field::rationals();
  std::vector<AlgebraDecl> algebras;
  std::vector<HopfDecl> hopfs;
  std::vector<CoactionDecl> coactions;
  std::vector<CommandDecl> commands;
  std::filesystem::path base_dir = ".";

  const AlgebraDecl* algebra(const std::string& name) const;
  const HopfDecl* hopf(const std::string& name) const;
  const CoactionDecl* coaction(const std::string& name) const;
};

// Grammar:
//   field (Q | Qt | cyclotomic N | cyclotomic_t N)
//   algebra A { generators: x1, x2  relations: x2*x1 - t*x1*x2; ... }
//   algebra S = skew N { p12: t; p13: t^2 }          (unlisted p_ij are 1)
//   hopf K = group_cyclic N | group_abelian N N ... | dual_group N
//          | taft N SCALAR | sweedler | from_file "path"
//   coaction C on A by K { y: [[g, x], [0, 1]] }
//   run COMMAND NAME [--flag value | --flag]...
// '#' starts a comment. Throws ParseError with the source location on any
// syntax, name or field error.
Session parse_session(std::string_view text, const std::filesystem::path& base_dir = ".");

// Names of the commands accepted by `run`.
const std::vector<std::string>& command_names();

struct RunOptions {
  std::optional<int> max_deg;  // default degree bound for hilbert / koszul-check
  bool timing = false;
};

Report run_command(const Session& s, const CommandDecl& cmd, const RunOptions& opt = {});

struct SessionResult {
  std::vector<Report> reports;
  int exit_code = kExitPass;
};
SessionResult run_session(const Session& s, const RunOptions& opt = {});

// Worst of two exit codes; internal > parse > unsupported > fail > pass.
int combine_exit(int a, int b);

}  // namespace nakayama
