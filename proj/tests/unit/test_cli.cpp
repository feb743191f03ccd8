#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support.hpp"
#include "hopfforge/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  std::string transcript() const {
    return "exit: " + std::to_string(code) + "\n--- stdout\n" + out
           + "--- stderr\n" + err;
  }
};

// Runs from the data directory so relative references resolve and outputs
// contain no absolute paths.
Outcome run(std::vector<std::string> args) {
  fs::path saved = fs::current_path();
  fs::current_path(test_support::data_dir());
  std::ostringstream out, err;
  int code = hopfforge::cli::run(args, out, err);
  fs::current_path(saved);
  return {code, out.str(), err.str()};
}

void golden(const std::string& name, std::vector<std::string> args) {
  CAPTURE(name);
  Outcome o = run(args);
  fs::path file = fs::path(HOPFFORGE_GOLDEN_DIR) / (name + ".txt");
  if (std::getenv("HOPFFORGE_UPDATE_GOLDEN")) {
    std::ofstream(file, std::ios::binary) << o.transcript();
  }
  CHECK(o.transcript() == test_support::read_text(file));
  // Byte-identical on a second run.
  CHECK(run(args).transcript() == o.transcript());
}

// Relative to the data directory, which sits next to tests/.
std::string inputs(const std::string& name) {
  return "../tests/golden/inputs/" + name;
}

}  // namespace

TEST_CASE("golden: validate") {
  golden("validate_sweedler", {"validate", "sweedler.hopf"});
  golden("validate_sweedler_machine",
         {"validate", "sweedler.hopf", "--format", "machine"});
  golden("validate_grouplike_x", {"validate", "grouplike-x.hopf"});
  golden("validate_broken_counit",
         {"--format", "machine", "validate", "broken-counit.hopf"});
  golden("validate_sweedler_f5",
         {"validate", "sweedler.hopf", "--field", "F5", "--format", "machine"});
  golden("validate_example_ref", {"validate", "example:z3"});
}

TEST_CASE("golden: rewriting queries") {
  golden("nf_sweedler", {"nf", "sweedler.hopf", "x*g*x*g + g*g*g + x*g"});
  golden("rules_sweedler", {"rules", "sweedler.hopf"});
  golden("rules_braid_truncated", {"rules", inputs("braid.hopf")});
  golden("basis_sweedler", {"basis", "sweedler.hopf", "-d", "3"});
  golden("grouplikes_z", {"grouplikes", "z.hopf", "-d", "3"});
}

TEST_CASE("golden: colimits") {
  golden("coproduct_z2_z2",
         {"coproduct", "z2.hopf", "z2.hopf", "--format", "machine"});
  golden("coproduct_sweedler_z2", {"coproduct", "sweedler.hopf", "z2.hopf"});
  golden("coequalizer_z_times4", {"coequalizer", "z_times4.map"});
  golden("coequalizer_z2_collapse",
         {"coequalizer", "z2_collapse.map", "--format", "machine"});
  golden("induce_coeq", {"induce", "coeq", "z_times4.map", "z_to_z3.map"});
  golden("induce_coeq_not_factoring",
         {"induce", "coeq", "z_times4.map", "z_identity.map"});
  golden("induce_cocone", {"induce", "cocone", "z2_id.map", "z2_id.map"});
  golden("induce_cocone_mixed",
         {"--format", "machine", "induce", "cocone", "h4_id.map", "z2_to_h4.map"});
  golden("induce_cocone_not_hopf", {"induce", "cocone", "z2_to_z3.map"});
}

TEST_CASE("golden: finite-dimensional") {
  golden("compile_sweedler", {"compile", "sweedler.hopf", "-d", "3"});
  golden("compile_primitive", {"compile", "primitive.hopf", "-d", "1"});
  golden("antipode_h4", {"antipode", "h4.table"});
  golden("antipode_idempotent", {"antipode", "idempotent.table"});
  golden("antipode_broken", {"antipode", "broken-compat.table"});
  golden("probe_idempotent", {"probe", "idempotent.table", "--format", "machine"});
  golden("probe_h4", {"probe", "h4.table"});
}

TEST_CASE("golden: examples and errors") {
  golden("example_sweedler", {"example", "sweedler"});
  golden("error_missing_file", {"validate", "missing.hopf"});
  golden("error_syntax", {"validate", inputs("bad-syntax.hopf")});
  golden("error_degree_overflow", {"validate", "sweedler.hopf", "-D", "3"});
  golden("error_bad_field", {"validate", "sweedler.hopf", "--field", "F4"});
  golden("error_bad_poly", {"nf", "sweedler.hopf", "g + y"});
  golden("error_unknown_example", {"example", "nope"});
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"--format", "json", "validate", "z2.hopf"}).code == 2);
  CHECK(run({"validate", "z2.hopf"}).code == 0);
  CHECK(run({"validate", "broken-counit.hopf"}).code == 1);
  CHECK(run({"antipode", "idempotent.table"}).code == 1);
  CHECK(run({"compile", "primitive.hopf", "-d", "2"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("coequalizer output feeds basis") {
  fs::path out = fs::temp_directory_path() / "hopfforge_cli_quotient.hopf";
  Outcome q = run({"coequalizer", "z_times4.map", "-o", out.string()});
  CHECK(q.code == 0);
  Outcome b = run({"basis", out.string(), "-d", "4", "--format", "machine"});
  CHECK(b.code == 0);
  CHECK(b.out.find("VALUE count 3\n") != std::string::npos);
  fs::remove(out);

  // Without -o the artifact and the commented report parse as a presentation.
  Outcome inline_out = run({"coequalizer", "z_times4.map"});
  auto P = hopfforge::parse_presentation(inline_out.out);
  CHECK(P->rewrite().basis_up_to_degree(4).size() == 3);
}

TEST_CASE("environment degree bound") {
  setenv("HOPFFORGE_DEGREE_BOUND", "12", 1);
  Outcome with_env = run({"basis", "z2.hopf", "-d", "0"});
  Outcome flagged = run({"basis", "z2.hopf", "-d", "0", "-D", "12"});
  setenv("HOPFFORGE_DEGREE_BOUND", "3", 1);
  // The file's own degree_bound wins over the environment.
  Outcome file_wins = run({"validate", "z2.hopf"});
  unsetenv("HOPFFORGE_DEGREE_BOUND");
  CHECK(with_env.code == 0);
  CHECK(file_wins.code == 0);
  Outcome no_bound = run({"validate", "example:z2"});
  CHECK(no_bound.code == 0);
  setenv("HOPFFORGE_DEGREE_BOUND", "3", 1);
  Outcome env_used = run({"validate", "example:z2"});
  unsetenv("HOPFFORGE_DEGREE_BOUND");
  CHECK(env_used.code == 2);
  CHECK(env_used.err.find("--degree-bound 4") != std::string::npos);
}
