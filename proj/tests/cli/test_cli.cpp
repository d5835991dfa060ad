#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "economy_io.hpp"

using namespace allot;
using namespace allot::cli;

namespace {

const std::filesystem::path kData = ALLOT_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("allot_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("economy files") {
  TEST_CASE("round trip is field-identical") {
    for (const char* name : {"asymmetric.json", "worked.json", "endowed.json", "plateau.json"}) {
      std::ifstream in(data(name));
      const Json doc = Json::parse(in);
      CHECK(economy_to_json(economy_from_json(doc)) == doc);
    }
  }

  TEST_CASE("rationals are exact and decimals rejected") {
    CHECK(parse_economy(R"({"omega":2,"agents":[{"peak":"2/6"},{"peak":1}]})").pref(0).peak() == rat(1, 3));
    CHECK_THROWS_AS(parse_economy(R"({"omega":0.5,"agents":[{"peak":"1"},{"peak":"1"}]})"), ParseError);
    CHECK_THROWS_AS(parse_economy(R"({"omega":"1","agents":[{"peak":"0.25"},{"peak":"1"}]})"), ParseError);
    CHECK_THROWS_AS(parse_economy(R"({"agents":[]})"), ParseError);
    CHECK_THROWS_AS(parse_economy(R"({"omega":"1","agents":[{"peak":"1","plateau_lo":"0"},{"peak":"1"}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_economy("{not json"), ParseError);
    CHECK_THROWS_AS(parse_economy(R"({"omega":"1","agents":[{"peak":"1"}]})"), DomainError);
  }
}

TEST_SUITE("allocate") {
  TEST_CASE("ced at the asymmetric economy") {
    const Result r = call({"allocate", data("asymmetric.json"), "--rule", "ced"});
    CHECK(r.code == kPass);
    CHECK(contains(r.out, "allotment: 2/3, 1/3"));
    CHECK(contains(r.out, "0.666667"));
  }

  TEST_CASE("worked example under simple:cel") {
    const Result r = call({"allocate", data("worked.json"), "-r", "simple:cel"});
    CHECK(contains(r.out, "allotment: 1/2, 1, 3/2"));
  }

  TEST_CASE("balanced economy returns the peaks under every rule") {
    const std::string file = temp_file("balanced.json", R"({"omega":"3","agents":[{"peak":"0"},{"peak":"1"},{"peak":"2"}]})");
    for (const char* rule : {"uniform", "ced", "proportional", "simple:cea", "simple:cel", "simple:pro",
                             "simple:appendix-b", "spl:cea", "gallery:star", "gallery:bar", "gallery:hat",
                             "gallery:underline"}) {
      CAPTURE(std::string(rule));
      const Result r = call({"allocate", file, "-r", rule});
      CHECK(r.code == kPass);
      CHECK(contains(r.out, "allotment: 0, 1, 2"));
    }
  }

  TEST_CASE("appendix-b parameters") {
    const Result r = call({"allocate", data("worked.json"), "-r", "simple:appendix-b", "--selector", "hi"});
    CHECK(contains(r.out, "allotment: 1/2, 3/2, 1"));
  }

  TEST_CASE("machine format") {
    const Result r = call({"--format", "machine", "allocate", data("asymmetric.json"), "-r", "ced"});
    const Json doc = Json::parse(r.out);
    CHECK(doc["allotment"] == Json::array({"2/3", "1/3"}));
  }

  TEST_CASE("errors exit with the usage code") {
    CHECK(call({"allocate", data("asymmetric.json"), "-r", "realloc:cea"}).code == kUsage);
    CHECK(call({"allocate", data("asymmetric.json"), "-r", "nonsense"}).code == kUsage);
    CHECK(call({"allocate", data("missing.json"), "-r", "ced"}).code == kUsage);
    CHECK(call({"allocate", data("asymmetric.json")}).code == kUsage);
    CHECK(call({"frobnicate"}).code == kUsage);
    const std::string dec = temp_file("decimal.json", R"({"omega":"1","agents":[{"peak":"0.5"},{"peak":"1"}]})");
    const Result r = call({"allocate", dec, "-r", "uniform"});
    CHECK(r.code == kUsage);
    CHECK(contains(r.err, "0.5"));
  }
}

TEST_SUITE("check") {
  TEST_CASE("simple:cea passes the core axioms") {
    const Result r = call({"check", "-r", "simple:cea", "-a", "efficiency,edg,symmetry,nom", "--samples", "300"});
    CHECK(r.code == kPass);
    CHECK_FALSE(contains(r.out, "FAIL"));
  }

  TEST_CASE("bar fails symmetry with its special profile") {
    const Result r = call({"check", "-r", "gallery:bar", "-a", "symmetry", "--samples", "50"});
    CHECK(r.code == kFail);
    CHECK(contains(r.out, R"({"peak":"3","left_slope":"1","right_slope":"1"},{"peak":"3")"));
  }

  TEST_CASE("expected failures invert per axiom") {
    CHECK(call({"check", "-r", "gallery:equal_division", "-a", "efficiency", "--samples", "50"}).code == kFail);
    CHECK(call({"check", "-r", "gallery:equal_division", "-a", "efficiency,symmetry", "--samples", "50",
                "--expect-fail", "efficiency"})
              .code == kPass);
    CHECK(call({"check", "-r", "uniform", "-a", "symmetry", "--samples", "50", "--expect-fail", "symmetry"}).code ==
          kFail);
  }

  TEST_CASE("unknown axiom") {
    const Result r = call({"check", "-r", "uniform", "-a", "fairness"});
    CHECK(r.code == kUsage);
    CHECK(contains(r.err, "fairness"));
  }

  TEST_CASE("explicit random sample and file input") {
    CHECK(contains(call({"check", "--random", "5", "20", "-r", "uniform", "-a", "envy-free"}).out, "random seed 5"));
    CHECK(call({"check", data("asymmetric.json"), "-r", "ced", "-a", "edlb,envy-free,betweenness", "--expect-fail",
                "edlb,envy-free,betweenness"})
              .code == kPass);
  }

  TEST_CASE("identical invocations give identical output") {
    const std::vector<std::string> args{"--seed", "9", "--format", "machine", "check", "-r", "gallery:hat",
                                        "-a", "nom,symmetry", "--samples", "100", "--nom-cases", "30"};
    CHECK(call(args).out == call(args).out);
  }

  TEST_CASE("embedded witnesses reproduce their verdicts") {
    for (const auto& [rule, axiom] : std::vector<std::pair<std::string, std::string>>{
             {"gallery:bar", "symmetry"},
             {"gallery:star", "edg"},
             {"gallery:equal_division", "efficiency"},
             {"gallery:underline", "own-peak-only"},
             {"gallery:hat", "nom"},
             {"ced", "envy-free"}}) {
      CAPTURE(rule);
      const Result first = call({"--format", "machine", "check", "-r", rule, "-a", axiom, "--samples", "200"});
      REQUIRE(first.code == kFail);
      const Json doc = Json::parse(first.out);
      const Json& witness = doc["reports"][0]["witness"];
      const std::string file = temp_file("witness.json", witness["economy"].dump());
      const Result again = call({"check", file, "-r", rule, "-a", axiom});
      CHECK(again.code == kFail);
    }
  }
}

TEST_SUITE("option-set") {
  TEST_CASE("exact interval for simple rules") {
    const std::string file = temp_file("q.json", R"({"omega":"1","agents":[{"peak":"3/4"},{"peak":"0"}]})");
    const Result r = call({"option-set", file, "-r", "simple:cea", "--agent", "1"});
    CHECK(r.code == kPass);
    CHECK(contains(r.out, "[1/2, 3/4] (exact)"));
    CHECK(contains(r.out, "contained yes, endpoints attained yes"));
  }

  TEST_CASE("peak at equal division is degenerate") {
    const std::string file = temp_file("eq.json", R"({"omega":"3","agents":[{"peak":"1"},{"peak":"0"},{"peak":"2"}]})");
    CHECK(contains(call({"option-set", file, "-r", "simple:pro", "--agent", "1"}).out, "[1, 1] (exact)"));
  }

  TEST_CASE("sampled range for ced") {
    const Result r = call({"option-set", data("asymmetric.json"), "-r", "ced", "--agent", "1", "--witnesses"});
    CHECK(contains(r.out, "sampled range [0, 2/3]"));
    CHECK(contains(r.out, "max 2/3 attained with opponents [peak=0"));
  }

  TEST_CASE("agent out of range") {
    CHECK(call({"option-set", data("asymmetric.json"), "-r", "ced", "--agent", "3"}).code == kUsage);
    CHECK(call({"option-set", data("asymmetric.json"), "-r", "ced", "--agent", "0"}).code == kUsage);
  }
}

TEST_SUITE("find-manipulation") {
  TEST_CASE("ced and proportional certificates") {
    for (const char* rule : {"ced", "proportional"}) {
      const Result r = call({"--format", "machine", "find-manipulation", data("asymmetric.json"), "-r", rule, "--agent", "1"});
      CHECK(r.code == kFail);
      const Json doc = Json::parse(r.out);
      CHECK(doc["certificate"]["misreport"]["peak"] == "0");
      CHECK(doc["certificate"]["strictly_preferred"] == true);
    }
    const Result t = call({"find-manipulation", data("asymmetric.json"), "-r", "ced", "--agent", "1"});
    CHECK(contains(t.out, "worst truthful outcome 2/3 with disutility 1"));
    CHECK(contains(t.out, "worst misreport outcome 1/2 with disutility 1/2"));
  }

  TEST_CASE("uniform has none") {
    const Result r = call({"find-manipulation", data("asymmetric.json"), "-r", "uniform", "--agent", "1"});
    CHECK(r.code == kPass);
    CHECK(contains(r.out, "no obvious manipulation found on grid"));
    CHECK(call({"find-manipulation", data("asymmetric.json"), "-r", "uniform", "--agent", "1", "--expect-fail"}).code ==
          kFail);
  }

  TEST_CASE("coarser misreport grid and slope variation") {
    const Result r = call({"find-manipulation", data("asymmetric.json"), "-r", "ced", "--agent", "1", "--misreport-grid",
                           "1/6", "--all-slopes"});
    CHECK(r.code == kFail);
  }
}
