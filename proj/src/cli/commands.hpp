#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/plot.hpp"

namespace stsc::cli {

// Exit codes: 0 success, 1 validation error, 2 runtime failure. Validation
// problems are raised as std::invalid_argument and mapped by the caller.

int cmd_sweep(const SweepSpec& spec);
int cmd_cnvd(const std::string& scheme_name, const std::string& mode_name);
int cmd_lift_check(int t_max);
int cmd_selftest();
int cmd_plot(const std::vector<std::string>& csv_paths, const PlotOptions& options);

}  // namespace stsc::cli
