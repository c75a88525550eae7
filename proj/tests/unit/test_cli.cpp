#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "branchlaw/error.hpp"
#include "cli.hpp"
#include "json.hpp"

namespace cli = branchlaw::cli;
using Json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "branchlaw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(BRANCHLAW_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("info") {
  const Result r = invoke({"info", "--group", "typeII", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == "branchlaw.info/1");
  CHECK(j["group"]["order"] == 60);
  CHECK(j["group"]["classes"] == 5);
  const Result text = invoke({"info", "--group", data("cyclic4.gens")});
  CHECK(text.code == cli::kExitOk);
  CHECK(text.out.find("order") != std::string::npos);
}

TEST_CASE("series document") {
  const Result r = invoke({"series", "--group", "typeII", "--format", "json", "--check-degree", "4"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == "branchlaw.series/1");
  for (const char* key : {"group", "character_table", "tensor_matrices", "series", "specializations", "multiplicities",
                          "verification"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["series"]["coordinates"].size() == 5);
  CHECK(j["tensor_matrices"]["A1"][3][0] == 1);
  CHECK(j["verification"]["passed"] == true);
  CHECK(j["verification"]["check_degree"] == 4);
  CHECK(j["multiplicities"].is_object());
}

TEST_CASE("series text output and user specialization") {
  const Result r = invoke({"series", "--group", "trivial", "--specialize", "u=0,w=0", "--check-degree", "3"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  CHECK(r.out.find("specialization u=0,w=0") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("molien") {
  const Result r = invoke({"molien", "--group", "typeII", "--format", "json", "--check-degree", "6"});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["equals_specialization"] == true);
  CHECK(j["coefficients"].size() == 7);
  CHECK(j["coefficients"][0] == "1");
  CHECK(j["coefficients"][1] == "0");
}

TEST_CASE("verify passes on the bundled data") {
  CHECK(invoke({"verify", "--group", "typeII", "--table", data("typeII.table"), "--check-degree", "4"}).code ==
        cli::kExitOk);
  CHECK(invoke({"verify", "--group", data("cyclic4.gens"), "--no-oracles"}).code == cli::kExitOk);
}

TEST_CASE("a perturbed table fails") {
  const Result v = invoke({"verify", "--group", "typeII", "--table", data("typeII_perturbed.table")});
  CHECK(v.code == cli::kExitCheckFailed);
  CHECK(v.out.find("[FAIL] character table valid") != std::string::npos);
  CHECK(v.out.find("orthogonality") != std::string::npos);
  const Result s = invoke({"series", "--group", "typeII", "--table", data("typeII_perturbed.table")});
  CHECK(s.code == static_cast<int>(branchlaw::ErrorKind::kCharacterTable));
  CHECK(s.err.find("orthogonality") != std::string::npos);
}

TEST_CASE("error exit codes") {
  CHECK(invoke({"info", "--group", data("singular.gens")}).code == static_cast<int>(branchlaw::ErrorKind::kGroup));
  CHECK(invoke({"info", "--group", "no-such-group"}).code == static_cast<int>(branchlaw::ErrorKind::kIo));
  CHECK(invoke({"info"}).code == cli::kExitUsage);
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"series", "--group", "typeII", "--format", "yaml"}).code == cli::kExitUsage);
  CHECK(invoke({"bogus"}).code == cli::kExitUsage);
  CHECK(invoke({"series", "--group", "trivial", "--specialize", "x=1"}).code ==
        static_cast<int>(branchlaw::ErrorKind::kParse));
  CHECK(invoke({"info", "--help"}).code == cli::kExitOk);
}

TEST_CASE("output does not depend on the thread count") {
  const Result one = invoke({"series", "--group", "typeII", "--format", "json", "--threads", "1", "--check-degree", "3"});
  const Result four = invoke({"series", "--group", "typeII", "--format", "json", "--threads", "4", "--check-degree", "3"});
  REQUIRE(one.code == cli::kExitOk);
  CHECK(one.out == four.out);
}

TEST_CASE("--out writes the document to a file") {
  const auto path = std::filesystem::temp_directory_path() / "branchlaw_cli_test.json";
  std::filesystem::remove(path);
  const Result r = invoke({"molien", "--group", "cyclic4", "--format", "json", "--out", path.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["schema"] == "branchlaw.molien/1");
  std::filesystem::remove(path);
  CHECK(invoke({"info", "--group", "trivial", "--out", "/nonexistent-dir/x.json"}).code ==
        static_cast<int>(branchlaw::ErrorKind::kIo));
}

}  // TEST_SUITE
