#pragma once

#include <stdexcept>
#include <string>

namespace bnr {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// knot_codec
struct duplicate_label : input_error { using input_error::input_error; };
struct odd_label : input_error { using input_error::input_error; };
struct non_realizable : input_error { using input_error::input_error; };
struct multi_component : input_error { using input_error::input_error; };

// cube_builder / scan
struct capacity_exceeded : std::runtime_error { using std::runtime_error::runtime_error; };
struct unknown_resolution : input_error { using input_error::input_error; };

// bn_homology
struct not_a_knot_complex : input_error { using input_error::input_error; };
struct empty_bigrading : input_error { using input_error::input_error; };
struct bad_k : input_error { using input_error::input_error; };

// cobordism_movies
struct illegal_move : input_error { using input_error::input_error; };
struct basepoint_violation : input_error { using input_error::input_error; };
struct not_a_cycle : input_error { using input_error::input_error; };
struct basis_mismatch : input_error { using input_error::input_error; };

// laurent_forms
struct non_invertible_basis_change : input_error { using input_error::input_error; };
struct not_dual_pair : input_error { using input_error::input_error; };

} // namespace bnr
