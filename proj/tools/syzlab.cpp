#include <CLI11.hpp>

#include <iostream>

#include "syzlab/harness.hpp"

namespace {

struct Common {
  std::string spec;
  std::uint64_t seed = 0;
  std::string cache_dir;
  bool no_cache = false;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("spec", c.spec, "experiment spec file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--seed", c.seed, "seed for superficial element sampling");
  cmd->add_option("--cache-dir", c.cache_dir, "Gröbner cache directory (default $SYZLAB_CACHE or .syzlab-cache)");
  cmd->add_flag("--no-cache", c.no_cache, "disable the Gröbner cache");
  cmd->add_option("--out", c.out, "output directory for CSV, report.txt and run.log");
}

int execute(const Common& c, bool verify) {
  using namespace syzlab;
  ExperimentSpec spec = load_spec(c.spec);
  RunOptions opts;
  opts.seed = c.seed;
  if (!c.no_cache)
    opts.cache = std::make_shared<FileCache>(c.cache_dir.empty() ? default_cache_dir(".syzlab-cache") : std::filesystem::path(c.cache_dir));
  std::vector<CommandSpec> commands = spec.commands;
  if (verify || commands.empty()) commands = {CommandSpec{"verify-all", {}, 0}};
  RunArtifact art = run(spec, commands, opts);
  std::cout << art.report_text();
  std::filesystem::path out = c.out;
  if (out.empty()) out = std::filesystem::path("syzlab-out") / std::filesystem::path(c.spec).stem();
  art.write(out);
  for (const auto& w : art.warnings) std::cerr << "warning: " << w << '\n';
  std::cerr << "outputs written to " << out.string() << '\n';
  return art.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syzlab: Hilbert-Samuel coefficients of syzygies over complete intersections"};
  app.require_subcommand(1);
  Common run_opts, verify_opts;
  auto* run_cmd = app.add_subcommand("run", "run the commands listed in a spec");
  add_common(run_cmd, run_opts);
  auto* verify_cmd = app.add_subcommand("verify", "run the full verification battery on a spec");
  add_common(verify_cmd, verify_opts);
  CLI11_PARSE(app, argc, argv);
  try {
    if (run_cmd->parsed()) return execute(run_opts, false);
    return execute(verify_opts, true);
  } catch (const syzlab::SpecError& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
