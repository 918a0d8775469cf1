#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chromatic/sixpack.hpp"

namespace chromatic {

struct SuiteResult {
    std::string suite;
    bool pass = false;
    int trials = 0;
    int failures = 0;
    double max_residual = 0.0;
    std::vector<std::string> notes;

    std::string summary() const;
};

// Per-trial seeds derive from the root seed; trials run on a small pool of
// worker threads and are reported in trial order.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials);

// Individual suites (name -> implementation behind run_suite):
//   oracle     : mosaic vs LP feasibility, radius vs grid oracle,
//                reduction vs homology oracle
//   gdm        : interval partition exists; chromatic and mono-chromatic
//                critical simplices agree with equal values
//   exactness  : per-index rank identities of the three exact sequences
//   norms      : the three 1-norm identities, float and exact
//   stability  : bottleneck vs Hausdorff perturbation bound
//   mst-link   : dim-0 deaths vs MST half-lengths, exact multisets
std::vector<std::string> suite_names();

// Deterministic random instance used across validation suites.
ChromaticPointSet random_instance(std::uint64_t seed, int max_points, int dim,
                                  int n_colors);

}  // namespace chromatic
