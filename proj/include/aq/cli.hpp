#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aq/json_io.hpp"

namespace aq::cli {

struct ToolConfig {
  int membership_x_span = 6;
  int membership_y_span = 6;
  int unit_search_bound = 4;
  int series_depth = 10;
  int escalation_steps = 2;
  long seed = 1;

  SearchConfig search() const;
  void validate() const;  // InvalidParameter on a non-positive bound
  friend bool operator==(const ToolConfig&, const ToolConfig&) = default;
};

io::Json to_json(const ToolConfig& c);
// Fields missing from j keep the values of base.
ToolConfig config_from(const io::Json& j, ToolConfig base = {});

// "x,y,u": membership spans and unit search bound.
void apply_bounds(ToolConfig& c, const std::string& spec);

struct Options {
  std::optional<Rational> q;
  std::optional<Rational> alpha;
  std::optional<Side> side;
};

struct Report {
  std::string command;
  std::string status = "ok";  // ok, not_found, error
  io::Json payload = io::Json::object();
  io::Json bounds_used;
  std::string message;

  int exit_code() const { return status == "ok" ? 0 : status == "not_found" ? 1 : 2; }
  io::Json to_json() const;
};

const std::vector<std::string>& commands();

// Inputs are file paths or inline JSON texts, in command order.
Report run(const std::string& command, const std::vector<std::string>& inputs, const Options& opts,
           const ToolConfig& config);

}  // namespace aq::cli
