#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "koszulforge/graph.hpp"
#include "koszulforge/group.hpp"
#include "koszulforge/koszul.hpp"
#include "koszulforge/quadratic.hpp"

namespace kf::cli {

using nlohmann::json;

/// Exit codes used by the binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

/// Common tuning knobs; every report echoes the effective values so runs are
/// reproducible from their output alone.
struct Params {
  int nmax = 8;
  std::optional<int> dmax; // defaults to max(p, 4)
  int budget = 200;
  std::uint64_t seed = 0;
  std::optional<std::vector<std::uint32_t>> order; // generators, smallest first
  bool search_orders = false;
};

struct Request {
  std::string command;
  json payload;
  Params params;
};

struct Report {
  json doc;
  std::vector<std::string> warnings;
  int exit_code = kExitOk;

  std::string text() const;
};

/// Dispatch a validated request. Throws ValidationError on schema problems;
/// budget failures inside subcomputations produce partial reports with
/// exit_code = kExitBudget where a partial result makes sense.
Report execute(const Request& request);

/// Payload (de)serialization, shared with tests.
json algebra_to_json(const QuadraticAlgebra& a);
QuadraticAlgebra algebra_from_json(const json& j);
json presentation_to_json(const GroupPresentation& g);
GroupPresentation presentation_from_json(const json& j);
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);
json request_to_json(const Request& r);
Request request_from_json(const json& j);

} // namespace kf::cli
