#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "syzlab/harness.hpp"

using namespace syzlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("syzlab-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

std::string error_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

std::map<std::string, std::string> csv_files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".csv") {
      std::ifstream in(e.path());
      std::stringstream s;
      s << in.rdbuf();
      out[e.path().filename().string()] = s.str();
    }
  return out;
}

const char* kMinimal = "char=101\nvars=x,y\nrel=x^2\nmodule=quot:x\nideal=x,y\n";

}  // namespace

TEST_CASE("spec parsing") {
  ExperimentSpec s = parse_spec(kMinimal);
  CHECK(s.characteristic == 101);
  CHECK(s.dim_ring == 1);
  CHECK(s.dim_module == 1);
  CHECK(parse_spec(s.to_text()) == s);

  CHECK(error_of("char=101\nvars=x,y\nrel=x^2\nmodule=quot:x\n").find("missing required key 'ideal'") !=
        std::string::npos);
  std::string nh = error_of("char=101\nvars=x,y\nrel=x^2+y\nmodule=quot:x\nideal=x,y\n");
  CHECK(nh.find("line 3") != std::string::npos);
  CHECK(nh.find("not homogeneous") != std::string::npos);
  CHECK(error_of("char=100\nvars=x\nmodule=ring\nideal=x\n").find("line 1") != std::string::npos);
  CHECK(error_of("char=101\nvars=x,y\nmodule=quot:x\nideal=x,y\ncmd=frobnicate\n").find("line 5") != std::string::npos);
  CHECK(error_of("char=101\nvars=x,y\nmodule=pres:[0,0];[x|y,x]\nideal=x,y\n").find("entries") != std::string::npos);
  CHECK(error_of("char=101\nvars=x,y\nmodule=quot:x\nideal=x,y\ndimA=1\n").find("dimA") != std::string::npos);
  CHECK(error_of("char=101\nvars=x,x\nmodule=ring\nideal=x\n").find("repeated") != std::string::npos);

  ExperimentSpec full = parse_spec(
      "# comment\nchar=101\nvars=x,y\nrel=x^2\nmodule=pres:[0,1];[x,0|y^2,x]\nbase_syz=1\nideal=x,y\n"
      "cmd=betti j_max=4\ncmd=coeffs\n");
  CHECK(full.commands.size() == 2);
  CHECK(full.commands[0].get_int("j_max", 0) == 4);
  CHECK(parse_spec(full.to_text()) == full);
  Instance inst = build_instance(full);
  CHECK(inst.module.rank() >= 1);
}

TEST_CASE("file cache round trip, misses, collisions and corruption") {
  fs::path dir = scratch("cache");
  auto cache = std::make_shared<FileCache>(dir);
  auto R = make_ring(101, {"x", "y"});
  auto I = make_ideal(R, {parse_polynomial(R, "x^2"), parse_polynomial(R, "x*y")});
  auto J = make_ideal(R, {parse_polynomial(R, "x^2"), parse_polynomial(R, "y^2")});
  CHECK(cache->entry_path(canonical_input(I)) != cache->entry_path(canonical_input(J)));
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

  set_groebner_store(cache);
  GroebnerBasis cold = buchberger(I);
  CHECK(cache->stats().misses == 1);
  CHECK(cache->stats().stores == 1);
  GroebnerBasis warm = buchberger(I);
  CHECK(cache->stats().hits == 1);
  CHECK(serialize_basis(cold) == serialize_basis(warm));
  CHECK(*cache->load(canonical_input(I)) == serialize_basis(cold));

  // Overwrite the entry with garbage: recomputed, rewritten, warned about.
  {
    std::ofstream out(cache->entry_path(canonical_input(I)), std::ios::trunc);
    out << "not a cache entry";
  }
  GroebnerBasis again = buchberger(I);
  CHECK(serialize_basis(again) == serialize_basis(cold));
  CHECK(cache->stats().corrupt == 1);
  CHECK_FALSE(cache->warnings().empty());
  CHECK(cache->load(canonical_input(I)).has_value());

  // Well-formed entry whose payload is not a basis of the input.
  cache->store(canonical_input(I), serialize_basis(buchberger(J)));
  CHECK(serialize_basis(buchberger(I)) == serialize_basis(cold));
  CHECK(cache->stats().corrupt == 2);
  set_groebner_store(nullptr);
  fs::remove_all(dir);
}

TEST_CASE("runs are deterministic and cache-transparent") {
  ExperimentSpec spec = load_spec(fs::path(SYZLAB_SPEC_DIR) / "hypersurface_x2_cyclic.spec");
  fs::path cdir = scratch("run-cache"), a = scratch("out-a"), b = scratch("out-b"), c = scratch("out-c");
  RunOptions cold{7, std::make_shared<FileCache>(cdir)};
  RunArtifact r1 = run(spec, cold);
  r1.write(a);
  RunOptions warm{7, std::make_shared<FileCache>(cdir)};
  RunArtifact r2 = run(spec, warm);
  r2.write(b);
  CHECK(r2.cache_stats->hits > 0);
  RunArtifact r3 = run(spec, RunOptions{7, nullptr});
  r3.write(c);
  CHECK(r1.all_passed());
  CHECK(csv_files(a) == csv_files(b));
  CHECK(csv_files(a) == csv_files(c));
  CHECK(csv_files(a).size() >= spec.commands.size());
  CHECK(fs::exists(a / "report.txt"));
  CHECK(fs::exists(a / "run.log"));
  for (const auto& p : {cdir, a, b, c}) fs::remove_all(p);
}

TEST_CASE("failed commands are reported, not fatal") {
  ExperimentSpec spec = parse_spec(std::string(kMinimal) + "dimM=1\ncmd=e1-check j_max=3 n_lo=1 n_hi=1\ncmd=betti\n");
  std::vector<CommandSpec> cmds = spec.commands;
  cmds.insert(cmds.begin(), CommandSpec{"syz-coeffs", {{"i", "5"}}, 0});
  RunArtifact art = run(spec, cmds, RunOptions{});
  REQUIRE(art.results.size() == 3);
  CHECK_FALSE(art.results[0].reports[0].passed);
  CHECK(art.results[0].reports[0].notes[0].find("syz-coeffs") != std::string::npos);
  CHECK(art.results[1].reports[0].passed);
  CHECK_FALSE(art.all_passed());
  CHECK(art.report_text().find("overall: FAIL") != std::string::npos);

  ExperimentSpec bad_dim = parse_spec("char=101\nvars=x,y\nrel=x^2\nmodule=residue\nideal=x,y\n");
  CHECK_THROWS_AS(run(bad_dim, {}, RunOptions{}), SpecError);
}
