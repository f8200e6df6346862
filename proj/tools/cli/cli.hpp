#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bcbvp/problem.hpp"
#include "bcbvp/verification.hpp"

namespace bcbvp::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Output grid r_i = r_max·i/(n_r − 1), θ_j = 2πj/n_θ.
struct OutputGrid {
  int n_r = 10;
  int n_theta = 16;
  double r_max = 0.9;
};

/// r,theta,re_z1,im_z1,re_z2,im_z2,re_wplus,im_wplus,re_wminus,im_wminus with %.17g values.
std::string grid_csv(const SolutionField& field, const OutputGrid& grid);

/// r,theta,P,Q,re_S,im_S with S = (1 + z)/(1 − z), z = r e^{iθ}.
std::string kernel_table_csv(const OutputGrid& grid);

/// Bundled demo problems keyed by name, taken verbatim from demos/*.json.
const std::map<std::string, std::string_view>& demos();

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcbvp::cli
