#pragma once

#include <string>
#include <vector>

#include "centrekit/centre.hpp"

namespace centrekit {

struct CheckReport {
  std::string check_name;
  std::string group_name;
  int omega = 0;  // 0 means the plain model
  std::uint64_t seed = 0;
  std::string status;  // pass | fail | error
  double max_error = 0.0;
  double runtime_ms = 0.0;
  std::string details;
};

struct ModelSpec {
  GroupPtr group;
  int omega = 0;
  std::string name;
};

/// All check names, in the order the suite runs them.
const std::vector<std::string>& check_names();

bool is_known_check(const std::string& name);

/// Whether a check runs in the given model (thm_fibrewise is plain-only,
/// thm_super needs a genuine central involution).
bool check_applicable(const std::string& name, bool is_super);

/// Run one named check on `scale` seeded instances and report the worst
/// error. Construction failures surface as status = error, never as a throw.
CheckReport run_check(const std::string& name, const ModelSpec& model, Seed seed,
                      Tolerance tol = {}, int scale = 5);

/// Every applicable check on every model; failures are recorded, not thrown.
std::vector<CheckReport> run_suite(const std::vector<ModelSpec>& models, Seed seed,
                                   Tolerance tol = {}, int scale = 5);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace centrekit
