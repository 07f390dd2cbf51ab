#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "cstar/cli.hpp"

namespace {

struct CommonArgs {
  std::string input_path;
  bool use_stdin = false;
  bool json = false;
};

void add_common(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--input", args.input_path, "input JSON file");
  sub->add_flag("--stdin", args.use_stdin, "read the input JSON from stdin");
  sub->add_flag("--json", args.json, "emit JSON instead of text");
}

std::string read_input(const CommonArgs& args) {
  if (args.use_stdin) {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(args.input_path);
  if (!f) throw cstar::UsageError("cannot open \"" + args.input_path + "\"");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact combinatorics of weighted star resolutions: continued "
      "fractions, intersection forms, blow-up calculus and moduli validity"};
  app.require_subcommand(1);

  CommonArgs args;
  cstar::RunOptions opt;

  // input-consuming subcommands share --input/--stdin/--json
  for (const auto& [name, desc] :
       std::initializer_list<std::pair<const char*, const char*>>{
           {"validate", "check the validity inequality of moduli data"},
           {"matrix", "intersection matrix (star, or model via --part)"},
           {"diag", "exact diagonal form of the star and definiteness"},
           {"dual", "dual chain of every resolution chain"},
           {"trace", "blow-up history (moduli) or contraction run (bamboo)"},
           {"model", "compactified linear model summary"},
           {"cs-check", "index bookkeeping across every model bamboo"},
           {"ample", "construct or refute an ample certificate"},
           {"equiv", "all four validity conditions side by side"},
           {"dot", "Graphviz output (star or model)"}}) {
    auto* sub = app.add_subcommand(name, desc);
    add_common(sub, args);
    if (std::string(name) == "matrix")
      sub->add_option("--part", opt.part, "full, D0 or Dinf")
          ->capture_default_str();
    if (std::string(name) == "ample" || std::string(name) == "equiv")
      sub->add_option("--bound", opt.bound,
                      "bounded-search ceiling for refutations")
          ->capture_default_str();
  }

  auto* en = app.add_subcommand(
      "enumerate", "cross-check every instance in a bounded family");
  en->add_flag("--json", args.json, "emit JSON instead of text");
  en->add_option("--kmax", opt.enum_bounds.k_max, "largest center multiplicity")
      ->capture_default_str();
  en->add_option("--smax", opt.enum_bounds.s_max, "largest chain count")
      ->capture_default_str();
  en->add_option("--nmax", opt.enum_bounds.n_max, "largest chain length")
      ->capture_default_str();
  en->add_option("--wmax", opt.enum_bounds.w_max, "largest chain entry")
      ->capture_default_str();
  en->add_option("--bound", opt.bound, "bounded-search ceiling")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  opt.json = args.json;

  try {
    if (cmd == "enumerate") {
      const cstar::RunResult r = cstar::run_subcommand(cmd, nullptr, opt);
      std::cout << r.output;
      return r.exit_code;
    }
    if (!args.use_stdin && args.input_path.empty())
      throw cstar::UsageError("no input: pass --input <file> or --stdin");
    const cstar::InputDocument doc = cstar::parse_input(read_input(args));
    const cstar::RunResult r = cstar::run_subcommand(cmd, &doc, opt);
    std::cout << r.output;
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
