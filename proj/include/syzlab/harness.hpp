#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/asymptotics.hpp"

namespace syzlab {

struct CommandSpec {
  std::string name;
  std::map<std::string, std::string> params;
  std::size_t line = 0;

  int get_int(const std::string& key, int fallback) const;
  std::string to_text() const;
  /// Line numbers are not compared.
  bool operator==(const CommandSpec& o) const;
};

/// One experiment instance plus the commands to run on it. Text form is flat
/// key=value lines, '#' comments:
///   char=101  vars=x,y  rel=x^2  module=quot:x  ideal=x,y  dimA=1  dimM=1
///   base_syz=1            (optional: replace M by Syz_1(M))
///   cmd=betti j_max=8     (repeatable)
/// module= accepts quot:<polys>, pres:[shifts];[col|col|...], residue, ring.
struct ExperimentSpec {
  std::uint32_t characteristic = 0;
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  std::string module;
  int base_syzygy = 0;
  std::vector<std::string> ideal;
  int dim_ring = 0;
  int dim_module = 0;
  std::vector<CommandSpec> commands;

  std::string to_text() const;
  bool operator==(const ExperimentSpec&) const = default;
};

/// Raises SpecError (with the offending line) on syntax or semantic errors.
ExperimentSpec parse_spec(const std::string& text);
ExperimentSpec load_spec(const std::filesystem::path& path);

struct Instance {
  RingPtr base;
  QuotientPtr ring;
  PresentedModule module;
  Submodule ideal;
};

Instance build_instance(const ExperimentSpec& spec);

/// Content-addressed Gröbner basis cache. Keys are SHA-256 digests of the
/// canonical input; entries carry the input so collisions are detected.
class FileCache : public GroebnerStore {
 public:
  explicit FileCache(std::filesystem::path dir);

  std::optional<std::string> load(const std::string& canonical_input) override;
  void store(const std::string& canonical_input, const std::string& payload) override;
  void report_corrupt(const std::string& canonical_input) override;

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path entry_path(const std::string& canonical_input) const;

  struct Stats {
    std::size_t hits = 0, misses = 0, stores = 0, corrupt = 0;
  };
  Stats stats() const;
  std::vector<std::string> warnings() const;

 private:
  std::filesystem::path dir_;
  std::atomic<std::size_t> hits_{0}, misses_{0}, stores_{0}, corrupt_{0};
  mutable std::mutex warn_mutex_;
  std::vector<std::string> warnings_;
};

std::string sha256_hex(const std::string& data);
/// $SYZLAB_CACHE, else the given fallback.
std::filesystem::path default_cache_dir(const std::filesystem::path& fallback);

struct RunOptions {
  std::uint64_t seed = 0;
  std::shared_ptr<FileCache> cache;
};

struct CommandResult {
  CommandSpec command;
  std::vector<VerdictReport> reports;
  double seconds = 0;
};

struct RunArtifact {
  std::vector<CommandResult> results;
  std::uint64_t seed = 0;
  std::optional<FileCache::Stats> cache_stats;
  std::vector<std::string> warnings;

  bool all_passed() const;
  std::string report_text() const;
  std::string log_text() const;
  /// <dir>/NN-<command>[-k].csv, report.txt, run.log.
  void write(const std::filesystem::path& dir) const;
};

/// Known command names.
const std::vector<std::string>& command_names();

/// Runs the commands in order. Engine errors become failed reports naming the
/// command; the remaining commands still run.
RunArtifact run(const ExperimentSpec& spec, const std::vector<CommandSpec>& commands, const RunOptions& options);
RunArtifact run(const ExperimentSpec& spec, const RunOptions& options);

}  // namespace syzlab
