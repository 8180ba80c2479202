#pragma once

// Scanning reducer: builds the reduced Bar-Natan complex one crossing at a
// time over the arc category of the growing tangle, delooping closed circles
// and cancelling invertible entries immediately so the complex stays small.
//
// The knot is cut open at the basepoint edge, so the reduced theory is the
// complex of the resulting 1-1 tangle; the final two-point boundary carries a
// single crossingless matching and the surviving entries specialize (dot -> H)
// to the monomial differential of a free F2[H] complex.
//
// The inner kernels (batched entry updates during Gaussian elimination) are
// OpenMP-parallel; results are schedule-independent because updates to
// distinct entries commute and are applied in a fixed order. threads = 1
// gives the serial path; build_reduced_complex is the independent serial
// reference used by the tests.

#include "bnr/complex.hpp"
#include "bnr/diagram.hpp"

#include <cstddef>

namespace bnr {

struct scan_options {
    std::size_t memory_budget_bytes = 8ull << 30;
    int threads = 0; // 0 = OpenMP default, 1 = serial
    bool verbose = false;
};

struct scan_stats {
    std::size_t peak_generators = 0;
    std::size_t peak_entry_masks = 0;
    int max_frontier = 0;
    double seconds = 0;
};

bigraded_complex scan_reduce(const planar_diagram& d, const scan_options& opt = {},
                             scan_stats* stats = nullptr);

// processing order chosen by the frontier-minimizing DFS (exposed for tests)
std::vector<int> scan_order(const planar_diagram& d);

} // namespace bnr
