// Command-line front end: regularity of the ideal lattice of a finite poset.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hibi/cli.hpp"

namespace {

void add_input_flags(CLI::App* cmd, hibi::Invocation& inv) {
  cmd->add_option("-i,--input", inv.input_path,
                  "poset file (\"-\" reads standard input)");
  cmd->add_option("-b,--builtin", inv.builtin,
                  "named input: chain N, antichain N, boolean N, grid AxB, "
                  "cyclic R, example-strict-bounds");
}

void add_common_flags(CLI::App* cmd, hibi::Invocation& inv) {
  cmd->add_option("--budget", inv.budget,
                  "enumeration cap for extensions and chains");
  cmd->add_option("--format", inv.format, "output format: text or records")
      ->check(CLI::IsMember({"text", "records"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of the ideal lattice of a finite poset"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hibireg 0.1.0");

  hibi::Invocation inv;

  CLI::App* reg = app.add_subcommand(
      "reg", "exact regularity with bounds and certificates");
  add_input_flags(reg, inv);
  add_common_flags(reg, inv);

  CLI::App* hvec = app.add_subcommand(
      "hvector", "h-vector from two independent computation paths");
  add_input_flags(hvec, inv);
  add_common_flags(hvec, inv);

  CLI::App* verify = app.add_subcommand(
      "verify", "planarity, edge-labeling, and three-way equality checks");
  add_input_flags(verify, inv);
  add_common_flags(verify, inv);

  CLI::App* exp = app.add_subcommand(
      "export", "write a computer-algebra script and a Hasse graph file");
  add_input_flags(exp, inv);
  add_common_flags(exp, inv);
  exp->add_option("--dialect", inv.dialect, "script dialect: generic or macaulay2");
  exp->add_option("-o,--out", inv.out_dir, "output directory");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "cross-check every method over all posets up to a given size");
  add_common_flags(sweep, inv);
  sweep->add_option("-n,--size", inv.size, "largest poset size (1..7)");

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* cmd : {reg, hvec, verify, exp, sweep})
    if (cmd->parsed()) inv.command = cmd->get_name();

  std::string stdin_text;
  if (inv.input_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    stdin_text = buf.str();
  }

  hibi::CmdResult res = hibi::run_command(inv, stdin_text);
  std::cout << res.out;
  return res.exit_code;
}
