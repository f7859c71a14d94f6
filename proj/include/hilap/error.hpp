#pragma once

#include <stdexcept>
#include <string>

namespace hilap {

// Every failure mode exposed by the library. The CLI maps these onto exit
// codes: config/validation -> 2, numeric tolerance -> 3, I/O -> 4.
enum class errc {
    // lattice-core
    non_monotone_diameter,
    non_additive_measure,
    single_child_ball,
    foreign_ball_id,
    level_out_of_range,
    non_monotone_lambda,
    zero_measure_ball,
    // metric-synthesis
    no_nondegenerate_member,
    insufficient_values,
    no_small_values,
    empty_bin,
    monotonicity_failure,
    insufficient_balls,
    invalid_target_set,
    // laplacian / semigroup
    non_monotone_whitney,
    not_padic_tree,
    leaf_has_no_lambda,
    not_parent_child,
    non_zero_mean_in_tail_mode,
    window_too_large,
    // padic
    divergent_tail,
    // perturbation
    wrong_parameters,
    not_enough_balls,
    window_too_shallow,
    degenerate_bernoulli,
    // cli
    config_parse,
    validation,
    io,
    numeric_tolerance,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// Shorthand used at every precondition check site.
[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace hilap
