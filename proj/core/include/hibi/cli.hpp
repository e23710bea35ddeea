#pragma once
// Command execution behind the command-line tool: named builtin inputs,
// dispatch, report assembly, exit-code policy.

#include <cstdint>
#include <string>
#include <vector>

namespace hibi {

struct Invocation {
  std::string command;     // reg | hvector | verify | export | sweep
  std::string input_path;  // poset file, or "-" for stdin
  std::string builtin;     // named input, e.g. "boolean 4"
  std::uint64_t budget = 10'000'000;  // enumeration cap
  std::string format = "text";        // text | records
  std::string dialect = "generic";    // export dialect
  std::string out_dir = ".";          // export target directory
  int size = 5;                       // sweep corpus size
};

struct CmdResult {
  int exit_code = 0;  // 0 ok, 1 theorem-check failure, 2 usage/parse error
  std::string out;
  std::vector<std::string> files_written;
};

// Poset text for "chain N", "antichain N", "boolean N", "grid AxB",
// "cyclic R", "example-strict-bounds". Throws ParseError on unknown names.
std::string builtin_poset_text(const std::string& name);

// Runs one invocation; stdin_text backs input_path == "-".
CmdResult run_command(const Invocation& inv,
                      const std::string& stdin_text = "");

}  // namespace hibi
