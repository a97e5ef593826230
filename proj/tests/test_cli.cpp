#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "hallcl/verify.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HALLCL_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("mul") {
  const RunResult r = run_cli("mul 'I[1]' 'I[1]'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"basis\":\"I\"") != std::string::npos);
  CHECK(r.out.find("\"partition\":[2]") != std::string::npos);
  CHECK(r.out.find("\"partition\":[1,1]") != std::string::npos);
}

TEST_CASE("deterministic output") {
  const std::string args = "coproduct 'I[2,1]'";
  const RunResult a = run_cli(args), b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  const RunResult c = run_cli("verify newton --max-degree 3"), d = run_cli("verify newton --max-degree 3");
  CHECK(c.exit_code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("mul 'I[1,2]' 'I[1]'").exit_code == 2);   // parse error
  CHECK(run_cli("verify bogus --max-degree 3").exit_code == 1); // unknown suite
  CHECK(run_cli("pair 'I[1]' 'I[1]'").exit_code == 0);
  CHECK(run_cli("oracle aut --lambda '[1,1,1,1,1]' --q 2").exit_code == 1); // bound
}

TEST_CASE("hallpoly with evaluation") {
  const RunResult r = run_cli("hallpoly --lambda '[1,1]' --mu '[1]' --nu '[1]' --q 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"3\"") != std::string::npos);
  const RunResult s = run_cli("hallpoly --lambda '[1,1]' --mu '[1]' --nu '[1]'");
  CHECK(s.out.find("[") != std::string::npos); // symbolic polynomial
}

TEST_CASE("oracle verbs") {
  CHECK(run_cli("oracle g --lambda '[1,1]' --mu '[1]' --nu '[1]' --q 2").out.find("3") !=
        std::string::npos);
  CHECK(run_cli("oracle aut --lambda '[2,1]' --q 2").out.find("8") != std::string::npos);
}

TEST_CASE("commutator matrix and degree filter") {
  const RunResult m = run_cli("boson -n 1 --commutator -1 --max-degree 2");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("\"entries\"") != std::string::npos);
  CHECK(m.out.find("\"rows\":[[],[1],[2],[1,1]]") != std::string::npos);

  const RunResult d = run_cli("mul 'I[1]' 'I[1]' --degree 2 --table");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("I[2]") != std::string::npos);

  const RunResult e = run_cli("mul 'I[1]' 'I[1]' --degree 3 --table");
  CHECK(e.exit_code == 0);
  CHECK(e.out == "0\n");
}

TEST_CASE("convert and table mode") {
  const RunResult r = run_cli("convert 'I[1,1]' --basis p --table");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p[1,1]") != std::string::npos);
  const RunResult j = run_cli("expand 'P[2]' --vars 2");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"exponents\"") != std::string::npos);
}

TEST_CASE("verify suite json") {
  const RunResult r = run_cli("verify pairing --max-degree 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\":true") != std::string::npos);
  CHECK(run_cli("verify heisenberg --max-degree 5").exit_code == 0);
  CHECK(run_cli("verify cauchy --max-degree 4").exit_code == 0);
  // suite report is sorted by instance key
  const hallcl::verify::Report rep = hallcl::verify::run_suite("pairing", 3);
  for (std::size_t i = 1; i < rep.instances.size(); ++i)
    CHECK(rep.instances[i - 1].key <= rep.instances[i].key);
}

TEST_SUITE_END();
