#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gdet::cli {

struct RunConfig {
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  std::map<std::string, int> grids;
  std::string fixtures;

  double tol(const std::string& name, double fallback) const;
  int grid(const std::string& name, int fallback) const;
  void validate() const;
};

struct OpRoute {
  std::string_view module;
  std::string_view op;
  std::string_view subcommand;
};

/// Which subcommand exposes each library operation.
const std::vector<OpRoute>& op_routes();
const std::vector<std::string_view>& subcommands();

/// Runs the command line in-process. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdet::cli
