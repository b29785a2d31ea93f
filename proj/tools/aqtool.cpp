#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "aq/cli.hpp"
#include "aq/errors.hpp"

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace aq;
  CLI::App app{"Exact workbench for the quantum torus and its Calogero-Moser spaces"};
  std::string command;
  std::vector<std::string> inputs;
  std::string q, alpha, side, config_path, bounds, out_path;
  long seed = 0;
  int depth = 0;
  app.add_option("command", command, "One of: " + join(cli::commands()))->required();
  app.allow_extras();  // inputs: JSON files or inline JSON, in command order
  app.add_option("--q", q, "Deformation parameter, e.g. 2 or 2/3");
  app.add_option("--alpha", alpha, "Scalar for pic-normalize");
  app.add_option("--side", side, "x_left or y_left for ideal-build");
  app.add_option("--config", config_path, "ToolConfig JSON file");
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.add_option("--depth", depth, "Series truncation depth");
  app.add_option("--bounds", bounds, "Membership spans and unit bound as x,y,u");
  app.add_option("--out", out_path, "Write the report to this file instead of standard output");
  CLI11_PARSE(app, argc, argv);
  inputs = app.remaining();

  cli::Report rep;
  rep.command = command;
  cli::Options opts;
  cli::ToolConfig cfg;
  try {
    for (const auto& a : inputs)
      if (a.rfind("--", 0) == 0) throw SchemaError("unknown option " + a);
    if (!config_path.empty()) cfg = cli::config_from(io::load(config_path), cfg);
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--depth")) cfg.series_depth = depth;
    if (!bounds.empty()) cli::apply_bounds(cfg, bounds);
    if (!q.empty()) opts.q = Rational::parse(q);
    if (!alpha.empty()) opts.alpha = Rational::parse(alpha);
    if (!side.empty()) opts.side = io::side_from(io::Json(side));
    rep = cli::run(command, inputs, opts, cfg);
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.bounds_used = cli::to_json(cfg);
    rep.payload = io::Json::object();
    rep.message = e.what();
  }
  const std::string text = rep.to_json().dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return rep.exit_code();
}
