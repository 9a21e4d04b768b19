// softtop: command-line front end over the soft topology library.
//
//   softtop <command> [--file PATH] [--json] [flags]
//
// Exit status is 0 whenever a verdict was computed (including "invalid" or
// "false") and nonzero only for errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

#ifndef SOFTTOP_FIXTURE_DIR
#define SOFTTOP_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace softtop;
using namespace softtop::cli;

struct Options {
  std::string file;
  bool json = false;
  std::string topology = "tau";
  std::string def = "cs";
  std::string set;
  std::string candidate;
  std::string fn = "f";
  std::string from;
  std::string to;
  std::string criterion = "all";
  std::string positive;
  std::string negative;
  std::size_t n = 2;
  std::size_t m = 2;
  std::optional<std::size_t> max_size;
  bool isomorph = false;
  std::size_t threads = 0;
  std::string out;
  std::string dir = SOFTTOP_FIXTURE_DIR;
};

void print_report(const Report& report, bool as_json) {
  if (as_json) {
    std::cout << report.json.dump(2) << "\n";
  } else {
    std::cout << report.text;
  }
}

CLI::App* with_output(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "Print the machine-readable report");
  return cmd;
}

CLI::App* with_file(CLI::App* cmd, Options& o) {
  cmd->add_option("--file", o.file, "Instance file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--topology", o.topology, "Topology name")->capture_default_str();
  return with_output(cmd, o);
}

Predicate predicate_arg(const std::string& name) {
  auto p = parse_predicate(name);
  if (!p) throw Error(ErrorCode::kInvalidArgument, "unknown predicate '" + name + "'");
  return *p;
}

Report dispatch(const std::string& command, const Options& o) {
  if (command == "mine") {
    MinerGoal goal;
    goal.positive = predicate_arg(o.positive);
    goal.negative = predicate_arg(o.negative);
    goal.n = o.n;
    goal.m = o.m;
    goal.max_family_size = o.max_size;
    goal.isomorph_rejection = o.isomorph;
    goal.threads = o.threads;
    return mine_command(goal, EnumerationCaps::from_env());
  }
  if (command == "corpus") return corpus_command(o.dir);

  const ResolvedInstance ri(load_instance(o.file));
  if (command == "validate") return validate_command(ri, o.topology, parse_flavor(o.def));
  if (command == "closed") return closed_command(ri, o.topology);
  if (command == "closure") return set_operator_command(ri, o.topology, o.set, SetOperator::kClosure);
  if (command == "interior") {
    return set_operator_command(ri, o.topology, o.set, SetOperator::kInterior);
  }
  if (command == "derived") return set_operator_command(ri, o.topology, o.set, SetOperator::kDerived);
  if (command == "base") return base_command(ri, o.topology, o.candidate);
  if (command == "subbase") return subbase_command(ri, o.topology, o.candidate);
  if (command == "axioms") return axioms_command(ri, o.topology);
  if (command == "continuity") {
    std::optional<ContinuityCriterion> criterion;
    if (o.criterion != "all") {
      criterion = parse_criterion(o.criterion);
      if (!criterion) {
        throw Error(ErrorCode::kInvalidArgument, "unknown criterion '" + o.criterion + "'");
      }
    }
    return continuity_command(ri, o.fn, o.from, o.to, criterion);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft topology checker, operator calculator and counterexample miner"};
  app.require_subcommand(1);
  Options o;

  auto* validate = with_file(app.add_subcommand("validate", "Check a family against a definition"), o);
  validate->add_option("--def", o.def, "cs | sn | hazra")->capture_default_str();
  with_file(app.add_subcommand("closed", "List the soft closed sets"), o);
  for (const char* name : {"closure", "interior", "derived"}) {
    auto* cmd = with_file(app.add_subcommand(name, std::string("Soft ") + name + " of a set"), o);
    cmd->add_option("--set", o.set, "Soft set name")->required();
  }
  auto* base = with_file(app.add_subcommand("base", "Check an open base candidate"), o);
  base->add_option("--candidate", o.candidate, "Family name")->required();
  auto* subbase = with_file(app.add_subcommand("subbase", "Check a sub-base candidate"), o);
  subbase->add_option("--candidate", o.candidate, "Family name")->required();
  with_file(app.add_subcommand("axioms", "Separation axioms and interpolation conditions"), o);

  auto* continuity = with_output(app.add_subcommand("continuity", "Continuity of a soft function"), o);
  continuity->add_option("--file", o.file, "Instance file (JSON)")->required()->check(CLI::ExistingFile);
  continuity->add_option("--fn", o.fn, "Function name")->capture_default_str();
  continuity->add_option("--from", o.from, "Source topology")->required();
  continuity->add_option("--to", o.to, "Target topology")->required();
  continuity->add_option("--criterion", o.criterion,
                         "pointwise | preimage-open | subbase | closed-preimage | all")
      ->capture_default_str();

  auto* mine = with_output(app.add_subcommand("mine", "Search for positive-and-not-negative witnesses"), o);
  mine->add_option("--positive", o.positive, "Predicate that must hold")->required();
  mine->add_option("--negative", o.negative, "Predicate that must fail")->required();
  mine->add_option("--n", o.n, "Universe size")->capture_default_str();
  mine->add_option("--m", o.m, "Parameter count")->capture_default_str();
  mine->add_option("--max-size", o.max_size, "Largest family size");
  mine->add_flag("--isomorph-rejection", o.isomorph, "Skip relabelings of the universe");
  mine->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
  mine->add_option("--out", o.out, "Also write the witness instance to this path");

  auto* corpus = with_output(app.add_subcommand("corpus", "Verify the fixture catalog"), o);
  corpus->add_option("--dir", o.dir, "Fixture directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const Report report = dispatch(command, o);
    print_report(report, o.json);
    if (command == "mine" && !o.out.empty() && report.json.contains("universe")) {
      std::ofstream out(o.out, std::ios::binary);
      out << report.json.dump(2) << "\n";
      if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + o.out + "'");
    }
    return kVerdictStatus;
  } catch (const InstanceError& e) {
    for (const auto& issue : e.issues()) {
      std::cerr << "error: " << issue_code_name(issue.code) << ": " << issue.message;
      if (issue.line != 0) std::cerr << " (line " << issue.line << ")";
      std::cerr << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kErrorStatus;
}
