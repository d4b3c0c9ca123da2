#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "specht/cli.hpp"
#include "specht/groebner.hpp"
#include "specht/specht.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = specht::run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::set<std::string> leading_brackets(const std::string& gb_text) {
  std::set<std::string> out;
  for (const auto& line : lines_of(gb_text))
    if (!line.empty() && line[0] == '[')
      out.insert(line.substr(0, line.find(']') + 1));
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen lists one generator per standard tableau") {
  CliRun r = cli({"gen", "--lambda", "1,1,1"});
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].find("[[1],[2],[3]]") == 0);

  CHECK(lines_of(cli({"gen", "--lambda", "2,2"}).out).size() == 2);
  CHECK(lines_of(cli({"gen", "--lambda", "2,2,1"}).out).size() == 5);

  CliRun j = cli({"gen", "--lambda", "2,2,1", "--format", "json"});
  REQUIRE(j.code == 0);
  json parsed = json::parse(j.out);
  CHECK(parsed["ambient"] == 5);
  CHECK(parsed["field"] == "q");
  CHECK(parsed["lambda"] == "2,2,1");
  CHECK(parsed["generators"].size() == 5);
  CHECK(parsed["generators"][0].contains("tableau"));
  CHECK(parsed["generators"][0].contains("polynomial"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({"gen"}).code == 2);                           // missing --lambda
  CHECK(cli({"gen", "--lambda", "2,3"}).code == 2);        // not a partition
  CHECK(cli({"gen", "--lambda", "3,2", "--n", "4"}).code == 2);
  CHECK(cli({"hilbert", "--lambda", "3,2", "--method", "bogus"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CliRun help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("gen") != std::string::npos);
}

TEST_CASE("hilbert single-method output is just the series") {
  CliRun r = cli({"hilbert", "--lambda", "3,2", "--method", "closed-form"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1+3t+t^2)/(1-t)^2\n");

  CliRun g = cli({"hilbert", "--lambda", "2,2", "--method", "groebner"});
  CHECK(g.code == 0);
  CHECK(g.out == "(1+2t+t^2)/(1-t)^2\n");
}

TEST_CASE("hilbert both compares the two routes") {
  CliRun r = cli({"hilbert", "--lambda", "3,2"});
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "closed-form: (1+3t+t^2)/(1-t)^2");
  CHECK(lines[1] == "groebner: (1+3t+t^2)/(1-t)^2");
  CHECK(lines[2] == "match: yes");

  CliRun fp = cli({"hilbert", "--lambda", "2,2,1", "--field", "fp:2"});
  CHECK(fp.code == 0);
  CHECK(fp.out.find("match: yes") != std::string::npos);

  CliRun j = cli({"hilbert", "--lambda", "2,2", "--format", "json"});
  REQUIRE(j.code == 0);
  json parsed = json::parse(j.out);
  CHECK(parsed["match"] == true);
  CHECK(parsed["n"] == 4);
  CHECK(parsed["series"]["closed-form"]["numerator"] ==
        json::parse("[1,2,1]"));
  CHECK(parsed["series"]["groebner"]["denom_exponent"] == 2);
}

TEST_CASE("hilbert refuses families without a closed form") {
  CliRun r = cli({"hilbert", "--lambda", "2,1,1", "--method", "closed-form"});
  CHECK(r.code == 3);
  CHECK(r.err.find("unsupported family") != std::string::npos);
  CHECK(cli({"hilbert", "--lambda", "2,1,1"}).code == 3);
  // The Groebner route stays available.
  CHECK(cli({"hilbert", "--lambda", "2,1,1", "--method", "groebner"}).code ==
        0);
}

TEST_CASE("gb from a shape") {
  CliRun r = cli({"gb", "--lambda", "1,1,1"});
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "order lex:x3>x2>x1");
  CHECK(lines[1].find("[x2*x3^2] ") == 0);

  // Same staircase of leading monomials over Q and F_3.
  CliRun q = cli({"gb", "--lambda", "2,2"});
  CliRun f3 = cli({"gb", "--lambda", "2,2", "--field", "fp:3"});
  CHECK(q.code == 0);
  CHECK(f3.code == 0);
  CHECK(leading_brackets(q.out) == leading_brackets(f3.out));

  CliRun j = cli({"gb", "--lambda", "2,2", "--format", "json"});
  REQUIRE(j.code == 0);
  json parsed = json::parse(j.out);
  CHECK(parsed["reduced"] == true);
  CHECK(parsed["leading_monomials"].size() == parsed["elements"].size());
}

TEST_CASE("gb from stdin") {
  CliRun r = cli({"gb"}, "(x1 - x2)\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("[x2] x2 - x1") != std::string::npos);

  // Paren list with two generators, ambient inferred from x4.
  CliRun two = cli({"gb"}, "(x1*x2, x1 + x4)");
  CHECK(two.code == 0);
  CHECK(two.out.find("order lex:x4>x3>x2>x1") != std::string::npos);

  // JSON ideals go through the same door as paren lists.
  std::string ideal_json = specht::ideal_to_json_text(specht::specht_ideal(
      specht::SpechtIdealSpec::of(specht::Partition({2, 2})),
      specht::Field::rationals()));
  CliRun via_json = cli({"gb"}, ideal_json);
  CliRun via_flag = cli({"gb", "--lambda", "2,2"});
  CHECK(via_json.code == 0);
  CHECK(via_json.out == via_flag.out);

  CHECK(cli({"gb"}, "").code == 2);
  CHECK(cli({"gb"}, "(x1 +").code == 2);
  CHECK(cli({"gb"}, "not math").code == 2);

  // Degree cap: a generator past the default cap aborts with 4.
  CliRun cap = cli({"gb"}, "(x1^31 - x2)");
  CHECK(cap.code == 4);
  CHECK(cap.err.find("resource cap") != std::string::npos);
}

TEST_CASE("verify runs suites with scoped bounds") {
  CliRun r = cli({"verify", "--suite", "recursion", "--max-n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("suite recursion: PASS") != std::string::npos);

  CliRun j = cli({"verify", "--suite", "initial-terms", "--max-n", "4",
                  "--format", "json"});
  REQUIRE(j.code == 0);
  json parsed = json::parse(j.out);
  CHECK(parsed["suite"] == "initial-terms");
  CHECK(parsed["pass"] == true);
  CHECK(parsed["cases"].size() > 0);
  CHECK(parsed["cases"][0].contains("id"));
  CHECK(parsed["cases"][0].contains("status"));

  CHECK(cli({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("syt-count") {
  CliRun r = cli({"syt-count", "--lambda", "3,3,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "21\n");

  CliRun j = cli({"syt-count", "--lambda", "3,3,1", "--format", "json"});
  REQUIRE(j.code == 0);
  json parsed = json::parse(j.out);
  CHECK(parsed["count"] == 21);
  CHECK(parsed["lambda"] == "3,3,1");
  CHECK(parsed["n"] == 7);
}

}  // TEST_SUITE
