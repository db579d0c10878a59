#pragma once

#include <stdexcept>
#include <string>

namespace fd {

enum class Errc {
    invalid_params,
    dimension_mismatch,
    rank_mismatch,
    degenerate_basis,
    not_positive_system,
    not_in_normalizer,
    satake_not_stable,
    not_well_posed,
    wbarw_not_in_torus,
    zero_entry,
    unsupported_value,
    unsupported_extension,
    pi_not_stable,
    not_antidominant,
    cocycle_data_inconsistent,
    singular_matrix,
    parse_error,
    unknown_family,
};

// Single exception type for the library; `code` tells callers (and the C API)
// whether the failure is a parse problem or a mathematical precondition.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }
    bool is_parse() const { return code_ == Errc::parse_error || code_ == Errc::unknown_family; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

const char* errc_name(Errc code);

} // namespace fd
