#pragma once
// Acceptance criteria, shared by the acceptance binary and `gdet selfcheck`.

#include <cstdint>
#include <string>
#include <vector>

namespace gdet::acceptance {

struct Outcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

inline constexpr int kCriterionCount = 9;

Outcome run_criterion(int id, std::uint64_t seed = 0);
std::vector<Outcome> run_all(std::uint64_t seed = 0);

/// "PASS [3] determining-set desk test (1.20 s): ..."
std::string format(const Outcome& o);

}  // namespace gdet::acceptance
