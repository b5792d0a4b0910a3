#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cyclrc/cli.hpp"

using namespace cyclrc;

namespace {

struct ParamFlags {
  std::uint64_t q = 0;
  int n = 0;
  int k = 0;
  int r = 0;
  int delta = 2;
  int b = 0;
  std::string family = "qminus1";
  bool alternate = false;
  std::vector<long long> offsets;

  void add_to(CLI::App& app) {
    app.add_option("--family", family, "qminus1 | qplus1-rlocal | qplus1-rdelta | mds")->required();
    app.add_option("--q", q, "field size")->required();
    app.add_option("--n", n, "code length")->required();
    app.add_option("--k", k, "dimension")->required();
    app.add_option("--r", r, "locality");
    app.add_option("--delta", delta, "local distance")->capture_default_str();
    app.add_option("--b", b, "step; 0 picks the recipe default")->capture_default_str();
    app.add_flag("--alternate", alternate, "n/2-centered run, or the shifted MDS run");
    app.add_option("--offsets", offsets, "locality coset offsets (qminus1)")->delimiter(',');
  }

  LrcParams params() const {
    LrcParams p;
    p.q = q;
    p.n = n;
    p.k = k;
    p.r = r;
    p.delta = delta;
    p.b = b;
    p.family = parse_family(family);
    p.alternate = alternate;
    if (!offsets.empty()) p.offsets = offsets;
    if (p.family == Family::MdsQPlus1) {
      p.r = k;
      p.delta = n - k + 1;
    }
    return p;
  }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParamDomain, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to `path` when given, else stdout.
template <typename F>
int with_output(const std::string& path, F&& body) {
  if (path.empty()) return body(std::cout);
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return cli::kParamError;
  }
  return body(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal cyclic locally repairable codes: construction, certification and repair"};
  app.require_subcommand(1);
  const std::uint64_t env_cap = cli::default_search_cap();

  std::string out_path;
  unsigned jobs = 1;
  std::uint64_t cap = env_cap;
  std::uint64_t locality_cap = env_cap;

  auto* construct = app.add_subcommand("construct", "build and certify one code, print its descriptor");
  ParamFlags construct_flags;
  construct_flags.add_to(*construct);
  bool human = false, no_exhaustive = false;
  construct->add_flag("--human", human, "signed exponent summary instead of JSON");
  construct->add_flag("--no-exhaustive", no_exhaustive, "skip the exhaustive distance scan");
  bool strict = false;
  construct->add_flag("--strict", strict, "exhaustive scans only; exit 4 when beyond the caps");
  construct->add_option("--cap", cap, "largest q^k scanned exhaustively")->capture_default_str();
  construct->add_option("--locality-cap", locality_cap, "largest q^k_S scanned per group")->capture_default_str();
  construct->add_option("--jobs", jobs)->capture_default_str();
  construct->add_option("--out", out_path, "descriptor file");

  auto* certify_cmd = app.add_subcommand("certify", "re-certify a stored descriptor");
  std::string descriptor_path;
  certify_cmd->add_option("descriptor", descriptor_path, "descriptor JSON file, - for stdin")->required();
  certify_cmd->add_option("--cap", cap)->capture_default_str();
  certify_cmd->add_option("--locality-cap", locality_cap)->capture_default_str();
  certify_cmd->add_option("--jobs", jobs)->capture_default_str();

  app.add_subcommand("examples", "reproduce the worked examples and spot instances");

  auto* sweep = app.add_subcommand("sweep", "construct and certify every feasible tuple, CSV output");
  cli::SweepArgs sweep_args;
  sweep->add_option("--q", sweep_args.q)->required();
  sweep->add_option("--max-n", sweep_args.max_n)->required();
  sweep->add_option("--jobs", sweep_args.jobs)->capture_default_str();
  sweep->add_option("--cap", sweep_args.cap, "largest q^k scanned exhaustively, 0 disables")->capture_default_str();
  sweep->add_option("--locality-cap", sweep_args.locality_cap)->capture_default_str();
  sweep->add_option("--out", out_path, "CSV file");

  auto* demo = app.add_subcommand("repair-demo", "encode, erase, repair; prints a transcript");
  ParamFlags demo_flags;
  demo_flags.add_to(*demo);
  cli::RepairDemoArgs demo_args;
  demo->add_option("--erase", demo_args.erasures, "erased coordinates")->delimiter(',')->required();
  demo->add_option("--seed", demo_args.seed)->capture_default_str();
  std::string message;
  demo->add_option("--message", message, "hex symbols separated by spaces");

  auto* params = app.add_subcommand("params", "list feasible parameter tuples");
  std::uint64_t params_q = 0;
  int params_max_n = 0;
  params->add_option("--q", params_q)->required();
  params->add_option("--max-n", params_max_n)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      cli::ConstructArgs args;
      args.params = construct_flags.params();
      args.exhaustive = !no_exhaustive;
      args.cap = cap;
      args.locality_cap = locality_cap;
      args.jobs = jobs;
      args.human = human;
      args.strict = strict;
      return with_output(out_path, [&](std::ostream& os) { return cli::cmd_construct(args, os, std::cerr); });
    }
    if (certify_cmd->parsed()) {
      cli::CertifyArgs args;
      args.descriptor_json = read_file(descriptor_path);
      args.cap = cap;
      args.locality_cap = locality_cap;
      args.jobs = jobs;
      return cli::cmd_certify(args, std::cout, std::cerr);
    }
    if (app.got_subcommand("examples")) return cli::cmd_examples(std::cout);
    if (sweep->parsed()) {
      return with_output(out_path, [&](std::ostream& os) { return cli::cmd_sweep(sweep_args, os, std::cerr); });
    }
    if (demo->parsed()) {
      demo_args.params = demo_flags.params();
      if (!message.empty()) demo_args.message = message;
      return cli::cmd_repair_demo(demo_args, std::cout, std::cerr);
    }
    if (params->parsed()) return cli::cmd_params(params_q, params_max_n, std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e.code());
  }
  return 0;
}
