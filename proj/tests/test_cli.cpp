#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

// ctest runs from the build directory, next to the binary and one level
// below the shipped domain specs; both locations can be overridden.
std::string binary() {
  const char* env = std::getenv("PCLAB_BIN");
  return env ? env : "./pclab";
}

std::string spec(const std::string& name) {
  const char* env = std::getenv("PCLAB_DATA");
  return (env ? std::string(env) : std::string("../data")) + "/" + name;
}

int run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json slurp_json(const std::string& path) { return json::parse(slurp(path)); }

int line_count(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("classify writes the sampled table and echoes its parameters") {
  const std::string csv = "/tmp/pclab_cli_classify.csv";
  const std::string js = "/tmp/pclab_cli_classify.json";
  const int code = run("classify --domain " + spec("egg2.json") + " --seed 7 --res 16 --csv " +
                       csv + " --json " + js);
  CHECK(code == 0);

  const std::string table = slurp(csv);
  CHECK(table.rfind("index,re1,im1,re2,im2,levi_det,weak\n", 0) == 0);
  CHECK(line_count(table) == 1 + 16 * 16);

  const json rep = slurp_json(js);
  CHECK(rep["meta"]["version"] == "0.1.0");
  CHECK(rep["meta"]["seed"] == 7);
  CHECK(rep["total_sampled"] == 256);
  CHECK(rep["weak_count"].get<int>() > 0);
}

TEST_CASE("same seed reproduces reports byte for byte") {
  const std::string a = "/tmp/pclab_cli_rep_a", b = "/tmp/pclab_cli_rep_b";
  const std::string args = "classify --domain " + spec("egg2.json") + " --seed 42 --res 12";
  CHECK(run(args + " --csv " + a + ".csv --json " + a + ".json") == 0);
  CHECK(run(args + " --csv " + b + ".csv --json " + b + ".json") == 0);
  CHECK(slurp(a + ".csv") == slurp(b + ".csv"));
  CHECK(slurp(a + ".json") == slurp(b + ".json"));
}

TEST_CASE("bad invocations exit 2") {
  std::ofstream("/tmp/pclab_cli_bad.json") << "not json";
  CHECK(run("classify --domain /tmp/pclab_cli_bad.json --seed 1") == 2);
  CHECK(run("classify --domain /tmp/pclab_cli_missing.json --seed 1") == 2);
  CHECK(run("classify --domain " + spec("ball2.json")) == 2);  // no seed
  CHECK(run("classify --domain " + spec("ball2.json") + " --seed 1 --bogus 3") == 2);
  CHECK(run("") == 2);  // no subcommand
  CHECK(run("multitype --domain " + spec("ball2.json") + " --seed 1 --point 1,0,0") == 2);
  CHECK(run("multitype --domain " + spec("egg2.json") + " --seed 1 --point 0.5,0") == 2);
  CHECK(run("convex --domain " + spec("ball2.json") + " --check nonsense") == 2);
}

TEST_CASE("multitype reports the weight at a degenerate point") {
  const std::string js = "/tmp/pclab_cli_mt.json";
  CHECK(run("multitype --domain " + spec("egg2.json") + " --seed 3 --point 1,0 --json " + js) ==
        0);
  const json rep = slurp_json(js);
  CHECK(rep["weight"] == json::array({1, 4}));
  CHECK(rep["converged"] == true);
  CHECK(rep["gamma_valid"] == true);
}

TEST_CASE("family certifies the minimal field and rejects a wrong forced weight") {
  const std::string js = "/tmp/pclab_cli_fam.json";
  CHECK(run("family --domain " + spec("ball2.json") + " --seed 5 --res 8 --json " + js) == 0);
  json rep = slurp_json(js);
  CHECK(rep["delta0"].get<double>() >= 1e-3);
  CHECK(rep["weight_mismatches"] == 0);

  CHECK(run("family --domain " + spec("egg2.json") +
            " --seed 5 --res 8 --field forced --weight 1,2 --json " + js) == 1);
  rep = slurp_json(js);
  CHECK(rep["weight_mismatches"].get<int>() > 0);
}

TEST_CASE("packing emits one row per accepted point and stays disjoint") {
  const std::string csv = "/tmp/pclab_cli_pack.csv";
  const std::string js = "/tmp/pclab_cli_pack.json";
  CHECK(run("packing --domain " + spec("egg2.json") +
            " --seed 9 --delta 0.2 --target weak --res 16 --layers 6 --csv " + csv + " --json " +
            js) == 0);
  const json rep = slurp_json(js);
  CHECK(rep["disjoint"] == true);
  CHECK(rep["points"].get<int>() > 0);
  CHECK(line_count(slurp(csv)) == 1 + rep["points"].get<int>());
}

TEST_CASE("dim resolves the flat weak curve and refuses a starved ladder") {
  const std::string js = "/tmp/pclab_cli_dim.json";
  const std::string common = "dim --domain " + spec("expflat2.json") +
                             " --tol-rel 1e-30 --eps-max 0.8 --eps-min 0.2 --seed 4";
  CHECK(run(common + " --res 64") == 1);
  CHECK(run(common + " --res 128 --json " + js) == 0);
  const double d = slurp_json(js)["dimension"].get<double>();
  CHECK(d > 0.8);
  CHECK(d < 1.2);
}

TEST_CASE("slice at an isolated degenerate point gives dimension zero") {
  const std::string js = "/tmp/pclab_cli_slice.json";
  CHECK(run("slice --domain " + spec("egg2.json") +
            " --seed 2 --alpha 1,0 --res 9 --window 0.5 --json " + js) == 0);
  const json rep = slurp_json(js);
  CHECK(rep["weak_count"] == 1);
  CHECK(rep["dimension"] == 0.0);
  CHECK(rep["beta"] == 2.0);
}

TEST_CASE("divisor checks pass for a flat graph through the origin") {
  const std::string js = "/tmp/pclab_cli_div.json";
  CHECK(run("divisor --domain " + spec("ball2.json") +
            " --seed 6 --coeffs 0 --delta 0.3 --budget 400 --json " + js) == 0);
  const json rep = slurp_json(js);
  CHECK(rep["area_floor"]["equality"] == true);
  CHECK(rep["mass_check"]["ok"] == true);
  CHECK(rep["split_error"].get<double>() < 1e-4);
}

TEST_CASE("convex checks report constants and doubling verdicts") {
  const std::string js = "/tmp/pclab_cli_cx.json";
  CHECK(run("convex --domain " + spec("ball2.json") + " --check cp --p 2 --json " + js) == 0);
  CHECK(slurp_json(js)["value"].get<double>() ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  const std::string at = " --check doubling --point 1,0 --delta 0.01 --factor ";
  CHECK(run("convex --domain " + spec("ball2.json") + at + "2") == 0);
  CHECK(run("convex --domain " + spec("ball2.json") + at + "1") == 1);
  CHECK(run("convex --domain " + spec("egg2.json") + " --check sh --point 0.99:0,0") == 0);
}

TEST_CASE("verify-all runs the whole suite and reports per criterion") {
  CHECK(run("verify-all --seed 1 --domain /tmp/pclab_cli_bad.json") == 2);

  const std::string js = "/tmp/pclab_cli_va.json";
  const std::string cmd = binary() + " verify-all --seed 7 --json " + js +
                          " > /tmp/pclab_cli_va.txt 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);

  const json rep = slurp_json(js);
  CHECK(rep["all_pass"] == true);
  CHECK(rep["criteria"].size() == 12);

  const std::string lines = slurp("/tmp/pclab_cli_va.txt");
  CHECK(line_count(lines) == 12);
  CHECK(lines.find("FAIL") == std::string::npos);
}
