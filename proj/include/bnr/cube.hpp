#pragma once

// Full cube of resolutions for the reduced Bar-Natan complex (serial
// reference implementation). Exponential in the crossing number; guarded by a
// generator budget. scan_reduce (scan.hpp) is the production path and must
// agree with this on everything small enough to cross-check.

#include "bnr/complex.hpp"
#include "bnr/diagram.hpp"
#include "bnr/errors.hpp"

#include <cstdint>
#include <vector>

namespace bnr {

struct cube_options {
    std::size_t max_generators = 1u << 22;
};

// A resolution plus a label in {1,X} per circle; the basepoint circle is
// forced to X by the reduced convention.
struct labeled_state {
    std::uint64_t resolution = 0; // bit c = 1-smoothing at crossing c
    std::uint64_t x_labels = 0;   // bit i = circle i labeled X (basepoint circle excluded)
};

struct reduced_cube {
    bigraded_complex complex;
    // generator indexing: first_gen[r] + label-rank within resolution r
    std::vector<std::size_t> first_gen;
    std::vector<int> circles_per_resolution;
    std::vector<int> basepoint_circle; // index within the resolution's circles
};

reduced_cube build_reduced_cube(const planar_diagram& d, const cube_options& opt = {});

inline bigraded_complex build_reduced_complex(const planar_diagram& d,
                                              const cube_options& opt = {}) {
    return build_reduced_cube(d, opt).complex;
}

// chain = generator indices (char 2); throws unknown_resolution if the state
// does not belong to the cube or has the basepoint circle labeled 1
struct chain_result {
    std::vector<std::uint32_t> gens;
    bool is_cycle;
};
chain_result state_to_chain(const reduced_cube& cube, const planar_diagram& d,
                            const labeled_state& s);

// circles of one resolution: returns circle index per (crossing,port), the
// number of circles, and which circle carries the basepoint
struct resolution_circles {
    std::vector<int> circle_of_port; // 4*n entries
    int count = 0;
    int basepoint = -1; // includes free loops (appended after port circles)
};
resolution_circles circles_of(const planar_diagram& d, std::uint64_t resolution);

} // namespace bnr
