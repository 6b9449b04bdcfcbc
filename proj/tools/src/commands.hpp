#pragma once

// Subcommands of the openpack tool. Each returns the process exit status:
//   0 success, 1 invalid certificate or failed scan claim,
//   2 unreadable or malformed input, 3 size guard exceeded,
//   4 undefined problem or violated precondition, 5 internal error.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace openpack::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,
  kExitInput = 2,
  kExitSizeGuard = 3,
  kExitUndefined = 4,
  kExitInternal = 5,
};

struct SolveOptions {
  std::string problem;
  std::filesystem::path graph;
  std::string method = "auto";  // auto, oracle, bounded, k13free-split, i1-split, split-deg12
  std::size_t max_class_r = 4;
  std::size_t oracle_limit = 26;
  std::optional<std::size_t> bound;  // required by method "bounded"
};

struct CertifyOptions {
  std::filesystem::path instance;  // graph, multigraph, or instance JSON
  std::filesystem::path certificate;
};

struct ReduceOptions {
  int construction = 0;
  std::filesystem::path input;
  std::optional<std::filesystem::path> output_prefix;
  std::optional<std::filesystem::path> map_certificate;
};

struct GenerateOptions {
  std::string family;
  std::optional<std::filesystem::path> output;
  std::size_t n = 0;
  std::size_t r = 0;
  double p = 0.5;
  std::size_t clique = 0;
  std::size_t independent = 0;
  std::size_t min_degree = 1;
  std::size_t max_degree = 1;
  std::size_t universe = 0;
  std::size_t count = 0;
  std::size_t q = 0;
  std::uint64_t seed = 0;
};

struct ScanOptions {
  std::string claim;
  std::optional<std::string> n;      // range "a..b"
  std::optional<std::string> r;      // range "a..b"
  std::optional<std::string> random_n;
  std::vector<std::size_t> t;
  std::vector<int> constructions;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
};

/// Names accepted by `scan --claim`.
const std::vector<std::string>& scan_claim_names();

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int cmd_certify(const CertifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_reduce(const ReduceOptions& opt, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err);

/// Runs `body`, mapping exceptions to exit codes and a JSON error line on `err`.
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace openpack::cli
