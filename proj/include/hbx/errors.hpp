#ifndef HBX_ERRORS_HPP
#define HBX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hbx {

/* Exceptions signal misuse (bad shapes, mixed fields, invalid input data).
 * Law violations in well-formed data are not exceptions; they are reported
 * through CheckReport. */

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct shape_error : error {
    using error::error;
};

struct field_error : error {
    using error::error;
};

struct braid_error : error {
    using error::error;
};

// A matrix entry that would connect basis vectors of different degree.
struct degree_error : error {
    using error::error;
};

struct overflow_error : error {
    using error::error;
};

struct div_by_zero : error {
    using error::error;
};

// Violated operation precondition; `gate` names the failed gate, e.g.
// "InvalidHopf", "NotSymmetric", "OrderTooLarge".
struct precondition_error : error {
    std::string gate;
    precondition_error(std::string gate_, const std::string& msg)
        : error(gate_ + ": " + msg), gate(std::move(gate_)) {}
};

}  // namespace hbx

#endif
