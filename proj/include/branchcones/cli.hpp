#pragma once

// Command-line front end. Every subcommand fills a JobSpec, so the same jobs
// can be described by flags or by a JSON file (`branchcones job spec.json`).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "branchcones/cones.hpp"
#include "branchcones/rootsys.hpp"

namespace branchcones {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitResource = 3,
  kExitInternal = 4,
};

struct JobSpec {
  std::string command;
  int rank = 0;
  std::string word = "default";
  std::map<int, std::string> strings;  // per internal tree vertex
  std::optional<Weight> lambda, beta, mu, eta, from, to;
  std::vector<Weight> weights;
  std::optional<SimpleSet> subset;
  std::string levi_word = "default";
  std::string coset_word = "default";
  std::string tree;
  ConeVariant variant;
  std::string kind = "c";
  std::string model = "both";
  std::string family = "highest";
  int j = 0;
  bool list = false;
  bool verify = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  int samples = 100;
  std::vector<int> chains{2, 3, 4};
  std::string output;
};

/// Strict reader: unknown keys and ill-typed values raise InvalidArgument.
JobSpec job_from_json(const nlohmann::json& j);
nlohmann::json job_to_json(const JobSpec& spec);

/// Runs the job and returns its JSON result. Oracle disagreement is reported
/// through the "agree" field, never thrown.
nlohmann::json run_job(const JobSpec& spec);

/// Full dispatcher: args exclude the program name. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branchcones
