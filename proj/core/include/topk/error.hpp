#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topk {

enum class errc {
    empty_document,
    sentinel_in_document,
    out_of_range,
    not_enough_occurrences,
    empty_pattern,
    sentinel_in_pattern,
    value_out_of_range,
    inconsistent_intervals,
    empty_tree,
    invalid_handle,
    k_star_not_precomputed,
    unknown_strategy,
    invalid_parameter,
    io_error,
    format_error,
    version_mismatch,
};

std::string_view to_string(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), m_code(code) {}

    errc code() const noexcept { return m_code; }

private:
    errc m_code;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace topk
