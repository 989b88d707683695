#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(HITCHIN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.out); }

const std::string corpus = HITCHIN_CORPUS_DIR;

}  // namespace

TEST_CASE("dims emits the envelope with exact dimensions") {
  const RunResult r = run("dims --group sp --n 2 --genus 2");
  CHECK(r.exit_code == 0);
  const auto env = parse(r);
  CHECK(env.at("schema_version") == "1");
  CHECK(env.at("command") == "dims");
  CHECK(env.at("inputs_echo").at("group") == "sp");
  const auto& result = env.at("result");
  CHECK(result.at("degrees") == nlohmann::json::array({2, 4}));
  CHECK(result.at("base_dim") == 10);
  CHECK(result.at("moduli_dim") == 20);
  CHECK(result.at("half_dim_check") == "pass");
  CHECK(env.at("warnings").empty());
}

TEST_CASE("curve reports the so(2n) desingularization chain") {
  const RunResult r = run("curve --group so_even --n 2 --genus 2");
  CHECK(r.exit_code == 0);
  const auto result = parse(r).at("result");
  CHECK(result.at("virtual_genus") == 17);
  CHECK(result.at("desing_genus") == 13);
  CHECK(result.at("quotient_genus") == 7);
  CHECK(result.at("prym_dim") == 6);
  REQUIRE(result.at("notes").is_array());
  const std::string note = result.at("notes")[0].get<std::string>();
  CHECK(note.find("n(2n-1)(g-1)") != std::string::npos);
}

TEST_CASE("pushforward of the free module is the companion matrix") {
  const RunResult r = run("pushforward --input " + corpus + "/free_module_eta2_minus_w.json");
  CHECK(r.exit_code == 0);
  const auto phi = parse(r).at("result").at("higgs").at("phi");
  const auto expected = nlohmann::json::parse(
      R"({"rows":2,"cols":2,"entries":[[],["0","1"],["1"],[]]})");
  CHECK(phi == expected);
}

TEST_CASE("eigenline then pushforward closes the loop through files") {
  const RunResult r = run("eigenline --input " + corpus + "/local_higgs_field.json");
  CHECK(r.exit_code == 0);
  const auto ideal = parse(r).at("result").at("ideal");
  CHECK(ideal.at("p").at("n") == 2);
  CHECK(ideal.at("generators").is_array());
}

TEST_CASE("realform reports a verified row") {
  const RunResult r = run("realform --name 'SU(p,q)' --params 1 1");
  CHECK(r.exit_code == 0);
  const auto result = parse(r).at("result");
  CHECK(result.at("form") == "SU(1,1)");
  CHECK(result.at("all_pass") == true);
  CHECK(result.at("compact_dim") == 1);
}

TEST_CASE("validate flags the affine-only scope as a warning") {
  const RunResult r = run("validate --input " + corpus + "/sp4_spectral_model.json");
  CHECK(r.exit_code == 0);
  const auto env = parse(r);
  CHECK(env.at("result").at("ok") == true);
  REQUIRE_FALSE(env.at("warnings").empty());
  const std::string warning = env.at("warnings")[0].get<std::string>();
  CHECK(warning.find("affine chart") != std::string::npos);
}

TEST_CASE("norm and prym-check agree on the corpus divisor") {
  const RunResult nr = run("norm --input " + corpus + "/prym_divisor.json");
  CHECK(nr.exit_code == 0);
  CHECK(parse(nr).at("result").at("norm_degree") == 0);

  const RunResult pr = run("prym-check --input " + corpus + "/prym_divisor.json");
  CHECK(pr.exit_code == 0);
  const auto env = parse(pr);
  CHECK(env.at("result").at("prym_representative") == true);
  REQUIRE_FALSE(env.at("warnings").empty());

  const RunResult off = run("prym-check --input " + corpus + "/divisor_on_split_conic.json");
  CHECK(off.exit_code == 0);
  CHECK(parse(off).at("result").at("prym_representative") == false);
}

TEST_CASE("check-fixedpoint finds the symmetric witness") {
  const RunResult r = run("check-fixedpoint --input " + corpus + "/fixedpoint_sl2_real.json");
  CHECK(r.exit_code == 0);
  const auto result = parse(r).at("result");
  CHECK(result.at("status") == "pass");
  CHECK(result.contains("witness"));
}

TEST_CASE("domain errors exit 2 with a machine-readable body") {
  const RunResult r = run("dims --group sl --n 1 --genus 2");
  CHECK(r.exit_code == 2);
  const auto env = parse(r);
  CHECK(env.at("error").at("type") == "domain");
  CHECK(env.at("command") == "dims");
}

TEST_CASE("unreadable input exits 3") {
  const RunResult r = run("norm --input /no/such/file.json");
  CHECK(r.exit_code == 3);
  CHECK(parse(r).at("error").at("type") == "parse");
}

TEST_CASE("usage errors exit 3 and help exits 0") {
  CHECK(run("dims --group sp").exit_code == 3);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("text format renders the matrix in bracket rows") {
  const RunResult r =
      run("--format text pushforward --input " + corpus + "/free_module_eta2_minus_w.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[0, w]") != std::string::npos);
  CHECK(r.out.find("[1, 0]") != std::string::npos);
}

TEST_CASE("rank-2 modules assemble block pushforwards") {
  const RunResult r = run("pushforward --input " + corpus + "/rank2_split_module.json");
  CHECK(r.exit_code == 0);
  const auto higgs = parse(r).at("result").at("higgs");
  CHECK(higgs.at("n") == 4);
}
