#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grossone::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one grosscalc invocation (argv without the program name). The REPL
/// reads `in`; `prompt` prints "> " before each line.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
                bool prompt = false);

/// Captures both streams; `input` feeds the REPL.
CommandResult run_command(const std::vector<std::string>& args, const std::string& input = "");

/// Whitespace split honouring single and double quotes.
std::vector<std::string> split_line(const std::string& line);

}  // namespace grossone::cli
