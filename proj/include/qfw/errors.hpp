#pragma once

#include <stdexcept>
#include <string>

namespace qfw {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid caller input (bad d, non-prime p, zero ideal, ...).  The CLI maps
// these to exit code 1.
struct input_error : error {
    using error::error;
};

// Broken internal invariant (a computed consistency check failed).  The CLI
// maps these to exit code 2.
struct internal_error : error {
    using error::error;
};

struct not_squarefree : input_error {
    explicit not_squarefree(const std::string& msg) : input_error(msg) {}
};
struct degenerate_discriminant : input_error {
    explicit degenerate_discriminant(const std::string& msg) : input_error(msg) {}
};
struct division_by_zero : input_error {
    explicit division_by_zero(const std::string& msg) : input_error(msg) {}
};
struct field_mismatch : input_error {
    explicit field_mismatch(const std::string& msg) : input_error(msg) {}
};
struct not_integral : input_error {
    explicit not_integral(const std::string& msg) : input_error(msg) {}
};
struct unit_input : input_error {
    explicit unit_input(const std::string& msg) : input_error(msg) {}
};
struct imaginary_field : input_error {
    explicit imaginary_field(const std::string& msg) : input_error(msg) {}
};
struct zero_ideal : input_error {
    explicit zero_ideal(const std::string& msg) : input_error(msg) {}
};
struct not_module : input_error {
    explicit not_module(const std::string& msg) : input_error(msg) {}
};
struct trivial_class : input_error {
    explicit trivial_class(const std::string& msg) : input_error(msg) {}
};
struct not_prime : input_error {
    explicit not_prime(const std::string& msg) : input_error(msg) {}
};
struct not_odd_prime : input_error {
    explicit not_odd_prime(const std::string& msg) : input_error(msg) {}
};
struct empty_config : input_error {
    explicit empty_config(const std::string& msg) : input_error(msg) {}
};
struct generator_not_found : internal_error {
    explicit generator_not_found(const std::string& msg) : internal_error(msg) {}
};
struct parse_error : input_error {
    explicit parse_error(const std::string& msg) : input_error(msg) {}
};

}  // namespace qfw
