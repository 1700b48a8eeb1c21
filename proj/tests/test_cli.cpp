#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "sedseq/term.hpp"
#include "triseq/params.hpp"
#include "triseq/sequence.hpp"

#ifndef SEDSEQ_CLI_PATH
#error "SEDSEQ_CLI_PATH must point at the sedseq binary"
#endif

namespace {

using Json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + std::string(SEDSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

}  // namespace

TEST_CASE("seq emits the tribonacci row and round-trips exactly") {
  const RunResult r = run("seq --name tribonacci --from 0 --to 10 --format csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "n,value");
  const std::vector<std::string> expected = {"0",  "1",  "1",  "2",  "4",  "7",
                                             "13", "24", "44", "81", "149"};
  const auto params = triseq::named_sequence("tribonacci").params;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const std::string& line = lines[i + 1];
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    CHECK(line.substr(comma + 1) == expected[i]);
    // Round-trip: the emitted cell parses back to the exact library value.
    CHECK(triseq::parse_rational(line.substr(comma + 1)) ==
          triseq::seq_term(params, static_cast<long>(i)));
  }
}

TEST_CASE("seq handles negative ranges and explicit parameters") {
  const RunResult neg = run("seq --name tribonacci-lucas --from -10 --to -1 --format csv");
  CHECK(neg.exit_code == 0);
  CHECK(neg.out.find("-10,-41") != std::string::npos);

  const RunResult custom = run("seq --params 0,1,1,1,1,1 --from 0 --to 0");
  CHECK(custom.exit_code == 0);
  const auto lines = lines_of(custom.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == "0,0");

  // Rational parameters work end to end: V_3 = 1 + (1/3)(1/2) = 7/6,
  // V_4 = 1 + (1/3)(1) = 4/3.
  const RunResult frac = run("seq --params 1/2,1,1,0,1,1/3 --from 0 --to 4");
  CHECK(frac.exit_code == 0);
  const auto frac_lines = lines_of(frac.out);
  CHECK(frac_lines[frac_lines.size() - 2] == "3,7/6");
  CHECK(frac_lines.back() == "4,4/3");
}

TEST_CASE("seq failure modes exit nonzero") {
  CHECK(run("seq --name fibonacci").exit_code == 1);
  CHECK(run("seq --name tribonacci --params 0,1,1,1,1,1").exit_code == 1);
  CHECK(run("seq").exit_code == 1);
  // t = 0 forbids the negative extension.
  CHECK(run("seq --params 0,1,1,1,1,0 --from -3 --to 3").exit_code == 1);
  CHECK(run("seq --name tribonacci --from 5 --to 1").exit_code == 1);
}

TEST_CASE("json output carries exact strings and a summary") {
  const RunResult r = run("seq --name third-order-jacobsthal-lucas --from 100 --to 100 --format json");
  CHECK(r.exit_code == 0);
  const Json doc = Json::parse(r.out);
  REQUIRE(doc.contains("config"));
  REQUIRE(doc.contains("records"));
  REQUIRE(doc.contains("summary"));
  CHECK(doc["config"]["subcommand"] == "seq");
  REQUIRE(doc["records"].size() == 1);
  // Values travel as decimal strings, never as JSON numbers: V_100 here is
  // far beyond 53-bit precision.
  const auto& value = doc["records"][0]["value"];
  REQUIRE(value.is_string());
  const auto params = triseq::named_sequence("third-order-jacobsthal-lucas").params;
  CHECK(triseq::parse_rational(value.get<std::string>()) == triseq::seq_term(params, 100));
  CHECK(doc["summary"]["failed"] == 0);
}

TEST_CASE("sedenion rows include the norm") {
  const RunResult r = run("sedenion --name padovan --from 0 --to 0 --format csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("c15,norm_sq") != std::string::npos);
  CHECK(lines[1] == "0,1,1,1,2,2,3,4,5,7,9,12,16,21,28,37,49,5586");
}

TEST_CASE("gf coefficients match the sequence tables") {
  const RunResult r = run("gf --name tribonacci --count 8 --format json");
  CHECK(r.exit_code == 0);
  const Json doc = Json::parse(r.out);
  REQUIRE(doc["records"].size() == 8);
  const auto& last = doc["records"][7];
  CHECK(last["k"] == 7);
  CHECK(last["c0"] == "24");
  CHECK(last["c1"] == "44");
  CHECK(last["c2"] == "81");
  CHECK(last["c3"] == "149");

  CHECK(run("gf --name perrin --count 0").exit_code == 1);
}

TEST_CASE("roots reports exact delta alongside the floats") {
  const RunResult r = run("roots --name tribonacci --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("delta,11/27") != std::string::npos);
  CHECK(r.out.find("alpha,1.839") != std::string::npos);

  CHECK(run("roots --name pell-padovan").exit_code == 1);
}

TEST_CASE("multable and opcount match their documented output") {
  const RunResult level0 = run("multable --level 0");
  CHECK(level0.exit_code == 0);
  CHECK(lines_of(level0.out)[1] == "0,+e0");

  const RunResult level2 = run("multable --level 2");
  CHECK(lines_of(level2.out)[1] == "0,+e0,+e1,+e2,+e3");

  CHECK(run("multable --level 6").exit_code == 1);

  const RunResult ops = run("opcount --level 4");
  CHECK(ops.exit_code == 0);
  CHECK(lines_of(ops.out)[0] == "multiplications: 256, additions: 240");

  const RunResult ops_json = run("opcount --level 2 --format json");
  const Json doc = Json::parse(ops_json.out);
  CHECK(doc["records"][0]["multiplications"] == 16);
  CHECK(doc["records"][0]["additions"] == 12);
}

TEST_CASE("verify reports pass/fail/skip and honors exit codes") {
  const RunResult cdalg = run("verify --suite cdalg");
  CHECK(cdalg.exit_code == 0);
  CHECK(cdalg.out.find("zero-divisor (e3+e10)(e6-e15): PASS residual 0") != std::string::npos);

  const RunResult skip = run("verify --suite binet --name pell-padovan");
  CHECK(skip.exit_code == 0);  // SKIP does not fail the run
  CHECK(skip.out.find("SKIP") != std::string::npos);
  CHECK(skip.out.find("delta = -5/108 <= 0") != std::string::npos);

  const RunResult all_trib = run("verify --suite all --name tribonacci");
  CHECK(all_trib.exit_code == 0);

  CHECK(run("verify --suite bogus").exit_code == 1);

  const RunResult as_json = run("verify --suite tables --format json");
  CHECK(as_json.exit_code == 0);
  const Json doc = Json::parse(as_json.out);
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["summary"]["passed"] == 12);
  for (const auto& record : doc["records"]) {
    CHECK(record["status"] == "PASS");
    CHECK(record["residual"] == 0.0);
  }
}

TEST_CASE("verify output is deterministic") {
  const RunResult a = run("verify --suite identities --name tribonacci");
  const RunResult b = run("verify --suite identities --name tribonacci");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("SEDSEQ_TOLERANCE environment override") {
  // An impossibly tight tolerance turns float checks into failures.
  const RunResult tight =
      run("verify --suite binet --name tribonacci", "SEDSEQ_TOLERANCE=1e-30 ");
  CHECK(tight.exit_code == 1);
  CHECK(tight.out.find("FAIL") != std::string::npos);

  // The --tolerance flag has the same effect and wins over the environment.
  CHECK(run("verify --suite binet --name tribonacci --tolerance 1e-30").exit_code == 1);
  CHECK(run("verify --suite binet --name tribonacci --tolerance 0.5").exit_code == 0);
  CHECK(run("verify --suite binet --name tribonacci --tolerance 0.5",
            "SEDSEQ_TOLERANCE=1e-30 ")
            .exit_code == 0);
}
