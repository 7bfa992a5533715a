#pragma once

#include <functional>
#include <string>
#include <vector>

#include "phononet/config.hpp"
#include "phononet/params.hpp"

namespace phononet::scenarios {

struct RunOptions {
  std::string out_dir = ".";
  int threads = 1;
  unsigned long long seed = 12345;
  bool full_dims = false;  // exact-model truncation (2,10,9,8) instead of (2,6,5,4)
};

// Each runner reads its scenario section from cfg (documented defaults apply
// when keys are absent), writes CSV files into opt.out_dir, and returns a
// process exit code: 0 success, 2 partial sweep failure. Fatal problems throw.
int run_triangle(const Config& cfg, const RunOptions& opt);
int run_multimode(const Config& cfg, const RunOptions& opt);
int run_depth_scan(const Config& cfg, const RunOptions& opt);
int run_compare(const Config& cfg, const RunOptions& opt);
int run_tls_spectrum(const Config& cfg, const RunOptions& opt);
int run_adjacency(const Config& cfg, const RunOptions& opt);

// n equally spaced snapshot times covering [0, t_end], t = 0 included.
std::vector<double> snapshot_times(double t_end, int n = 200);

// Work-stealing sweep over point indices; exceptions are captured per point
// (never aborting the sweep) and returned as "<index>: <message>" strings.
std::vector<std::string> run_sweep(int n_points, int threads,
                                   const std::function<void(int)>& point_fn);

}  // namespace phononet::scenarios
