#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "report.hpp"

namespace xxzcli {

struct RunConfig {
  std::string command;
  int l = 1;
  int m = 3;
  int n = 6;
  std::vector<int> ns;  // susceptibility: chain lengths; empty means {n}
  double phi_re = 1.5707963267948966;
  double phi_im = 0.0;
  double flux = 0.0;
  double epsilon = 1.0;
  int grid = 0;
  int r_max = 0;  // 0: command default
  int m_max = 0;
  double tol = 1e-6;
  std::string backend = "lens";
  std::string normalization = "lens";
  bool skip_functional = false;
  std::string output = "-";
  std::string format = "csv";
  std::string cache;

  cplx phi() const { return {phi_re, phi_im}; }
};

nlohmann::ordered_json config_json(const RunConfig& c);

/// Checks command preconditions before any computation; throws xxz::InvalidArgument.
void validate(const RunConfig& c);

/// Returns false when some residual missed its threshold.
bool run_command(const RunConfig& c, Report& out);

}  // namespace xxzcli
