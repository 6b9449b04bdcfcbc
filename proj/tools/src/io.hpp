#pragma once

// File formats.
//
// Graph text (1-based vertices):
//   c <free comment>
//   c label <v> <text>
//   p [edge] <n> <m>
//   e <u> <v>
// Multigraphs use "p multi <n> <m>" and "e <u> <v> <label>", the label being
// a 0-based integer.
//
// JSON (0-based indices):
//   certificate   {"problem": "op", "set": [0, 3], "size": 2}
//   hitting set   {"universe": 6, "r": 3, "sets": [[0, 1, 4], ...]}
//   r-DM          {"r": 4, "q": 3, "tuples": [[0, 1, 2, 2], ...]}

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "openpack/certify.hpp"
#include "openpack/graph.hpp"
#include "openpack/instances.hpp"
#include "openpack/reductions.hpp"

namespace openpack::cli {

using nlohmann::json;

/// Malformed file content. Carries the 1-based line when there is one.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file that cannot be opened for reading or writing.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
std::string write_graph(const Graph& g);

Multigraph parse_multigraph(std::istream& in);
std::string write_multigraph(const Multigraph& mg);

struct Certificate {
  std::string problem;
  std::vector<std::uint32_t> set;
};

Certificate parse_certificate(const json& j);
json certificate_json(const std::string& problem, std::span<const std::uint32_t> set);

HittingSetInstance parse_hitting_set(const json& j);
json hitting_set_json(const HittingSetInstance& inst);

RdmInstance parse_rdm(const json& j);
json rdm_json(const RdmInstance& inst);

json witness_json(const Witness& w);
json partition_json(const SplitPartition& p);
json roles_json(const ReductionInstance& inst);

std::string read_file(const std::filesystem::path& path);
json read_json_file(const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace openpack::cli
