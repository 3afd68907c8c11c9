#pragma once

#include "sumsym/oracle.hpp"
#include "sumsym/ordered_group.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace sumsym::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kCapExceeded = 3,
};

enum class Command { kDecompose, kBirkhoff, kAllocate, kScore, kVerify };

struct CommandRequest {
  Command command = Command::kDecompose;
  std::string matrix_path;          // decompose, birkhoff, verify
  std::string decomposition_path;   // verify
  std::string scenario_path;        // allocate, score, verify
  std::string allocation_path;      // score, verify
  std::optional<Domain> domain;
  std::optional<std::string> output_path;  // stdout when empty
  OracleCaps caps;
  bool sort_treatments = false;
  bool approximate = false;
};

// Either a request to run, or the exit code the parser already settled on
// (help text printed, or a usage error reported on `err`).
using ParseOutcome = std::variant<CommandRequest, int>;

ParseOutcome parse_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const CommandRequest& req, std::ostream& out, std::ostream& err);

// parse_command_line followed by run. args excludes the program name.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumsym::cli
