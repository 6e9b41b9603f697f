#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "branchcones/cli.hpp"
#include "branchcones/errors.hpp"

using namespace branchcones;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json result() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "branchcones_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("counting commands") {
  auto lr = run({"lr", "--rank", "2", "--lambda", "1,1", "--beta", "1,1", "--mu", "1,1"});
  REQUIRE(lr.code == kExitOk);
  auto j = lr.result();
  CHECK(j["count"] == 2);
  CHECK(j["oracle"] == 2);
  CHECK(j["agree"] == true);
  CHECK(j["word"] == json::array({1, 2, 1}));

  auto dim = run({"dim", "--rank", "2", "--lambda", "1,0"});
  REQUIRE(dim.code == kExitOk);
  CHECK(dim.result()["count"] == 3);

  auto other_word = run({"dim", "--rank", "2", "--lambda", "1,1", "--word", "2,1,2", "--threads", "2"});
  REQUIRE(other_word.code == kExitOk);
  CHECK(other_word.result()["count"] == 8);

  auto branch = run({"branch", "--rank", "2", "--lambda", "1,0", "--subset", "1"});
  REQUIRE(branch.code == kExitOk);
  CHECK(branch.result()["agree"] == true);

  auto inv = run({"invariant", "--rank", "1", "--tree", "0-4,1-4,4-5,2-5,3-5", "--weights", "2;1;1;2"});
  REQUIRE(inv.code == kExitOk);
  CHECK(inv.result()["agree"] == true);
  CHECK(inv.result()["oracle"] == 2);

  auto bz = run({"bz", "--rank", "2", "--weights", "1,1;1,1;1,1", "--list"});
  REQUIRE(bz.code == kExitOk);
  CHECK(bz.result()["count"] == 2);

  auto trails = run({"itrails", "--rank", "2", "--j", "1"});
  REQUIRE(trails.code == kExitOk);
  CHECK(trails.result().is_object());

  auto maps = run({"maps-check", "--samples", "10", "--seed", "4"});
  REQUIRE(maps.code == kExitOk);
  CHECK(maps.result()["agree"] == true);
}

TEST_CASE("output is byte-stable") {
  std::vector<std::string> args{"lr", "--rank", "3", "--lambda", "1,0,1", "--beta", "0,1,0", "--mu", "1,1,1"};
  auto a = run(args), b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out == a.result().dump(2) + "\n");
}

TEST_CASE("errors and exit codes") {
  auto unknown = run({"frobnicate"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.result().contains("error"));

  auto bad_weight = run({"dim", "--rank", "2", "--lambda", "1,x"});
  CHECK(bad_weight.code == kExitUsage);
  CHECK(bad_weight.result()["error"]["kind"].is_string());

  auto wrong_rank = run({"dim", "--rank", "2", "--lambda", "1,0,0"});
  CHECK(wrong_rank.code == kExitUsage);

  auto bad_word = run({"dim", "--rank", "2", "--lambda", "1,0", "--word", "1,2"});
  CHECK(bad_word.code == kExitUsage);

  auto bad_filling_tree = run({"invariant", "--rank", "1", "--tree", "0-4,1-4,2-4,3-4", "--weights", "1;1;1;1"});
  CHECK(bad_filling_tree.code == kExitUsage);

  auto disagree = run({"lr", "--rank", "2", "--lambda", "1,0", "--beta", "0,1", "--mu", "0,0", "--mu-sign",
                       "roots-lambda+beta", "--verify"});
  CHECK(disagree.code == kExitInternal);
  CHECK(disagree.result()["agree"] == false);

  auto no_verify = run({"lr", "--rank", "2", "--lambda", "1,0", "--beta", "0,1", "--mu", "0,0", "--mu-sign",
                        "roots-lambda+beta"});
  CHECK(no_verify.code == kExitOk);

  setenv("BRANCHCONES_POINT_CAP", "2", 1);
  auto capped = run({"dim", "--rank", "2", "--lambda", "1,1"});
  unsetenv("BRANCHCONES_POINT_CAP");
  CHECK(capped.code == kExitResource);
  CHECK(capped.result()["error"]["kind"] == "resource-limit");
}

TEST_CASE("cone export") {
  auto path = scratch("c3.ine");
  auto r = run({"cone-export", "--rank", "2", "--kind", "c3", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  auto sidecar = json::parse(slurp(path.parent_path() / "c3.json"));
  std::istringstream ine(slurp(path));
  std::size_t rows = 0, cols = 0;
  ine >> rows >> cols;
  CHECK(cols == std::size_t(sidecar["dimension"]) + 1);
  CHECK(rows == std::size_t(sidecar["inequalities"]) + 2 * std::size_t(sidecar["equalities"]));
  std::size_t read = 0;
  for (std::string line; std::getline(ine, line);)
    if (!line.empty()) {
      ++read;
      std::istringstream fields(line);
      std::int64_t first = 1;
      fields >> first;
      CHECK(first == 0);
    }
  CHECK(read == rows);
  std::vector<std::string> names;
  for (const auto& b : sidecar["blocks"]) names.push_back(b["name"]);
  CHECK(names == std::vector<std::string>{"lambda", "t", "beta", "mu"});

  CHECK(run({"cone-export", "--rank", "2", "--kind", "c3"}).code == kExitUsage);
  CHECK(run({"cone-export", "--rank", "2", "--kind", "nope", "--out", path.string()}).code == kExitUsage);
}

TEST_CASE("job files") {
  auto flags = run({"lr", "--rank", "2", "--lambda", "2,1", "--beta", "1,1", "--mu", "2,2"});
  REQUIRE(flags.code == kExitOk);

  JobSpec spec;
  spec.command = "lr";
  spec.rank = 2;
  spec.lambda = Weight{2, 1};
  spec.beta = Weight{1, 1};
  spec.mu = Weight{2, 2};
  json j = job_to_json(spec);
  JobSpec back = job_from_json(j);
  CHECK(job_to_json(back) == j);

  auto path = scratch("job.json");
  std::ofstream(path) << j.dump();
  auto from_file = run({"job", path.string()});
  REQUIRE(from_file.code == kExitOk);
  CHECK(from_file.out == flags.out);

  j["colour"] = "blue";
  CHECK_THROWS_AS(job_from_json(j), InvalidArgument);
  std::ofstream(path) << j.dump();
  CHECK(run({"job", path.string()}).code == kExitUsage);

  auto out_path = scratch("result.json");
  auto to_file = run({"lr", "--rank", "2", "--lambda", "2,1", "--beta", "1,1", "--mu", "2,2", "--out", out_path.string()});
  REQUIRE(to_file.code == kExitOk);
  CHECK(json::parse(slurp(out_path)) == flags.result());
}

TEST_CASE("installed binary") {
  auto out = scratch("binary.json");
  std::string cmd = std::string(BRANCHCONES_BIN) + " dim --rank 1 --lambda 4 > " + out.string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(json::parse(slurp(out))["count"] == 5);

  std::string bad = std::string(BRANCHCONES_BIN) + " dim --rank 1 --lambda -1,2 > " + out.string();
  int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == kExitUsage);
}
