#pragma once

#include <stdexcept>
#include <string>

namespace k3inv {

enum class Errc {
    degenerate_lattice,
    group_too_large,
    unknown_name,
    dimension_mismatch,
    index_out_of_range,
    invalid_variant,
    not_involution,
    not_hyperbolic,
    not_two_elementary,
    parity,
    not_negative_definite,
    degenerate_functional,
    not_simply_laced,
    not_ade,
    type_mismatch,
    not_signed_permutation,
    orbit_overlap,
    not_admissible,
    resource_limit,
    bad_input,
};

/// Converts an error code to its stable machine-parsable name, e.g. "E_NOT_ADMISSIBLE".
const char* errc_name(Errc c);

/// Domain error carrying a stable code. The CLI prints `code_name(): what()`
/// on a single line and exits 1.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

} // namespace k3inv
