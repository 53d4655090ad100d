#include "topk/error.hpp"

namespace topk {

std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::empty_document: return "EmptyDocument";
        case errc::sentinel_in_document: return "SentinelInDocument";
        case errc::out_of_range: return "OutOfRange";
        case errc::not_enough_occurrences: return "NotEnoughOccurrences";
        case errc::empty_pattern: return "EmptyPattern";
        case errc::sentinel_in_pattern: return "SentinelInPattern";
        case errc::value_out_of_range: return "ValueOutOfRange";
        case errc::inconsistent_intervals: return "InconsistentIntervals";
        case errc::empty_tree: return "EmptyTree";
        case errc::invalid_handle: return "InvalidHandle";
        case errc::k_star_not_precomputed: return "KStarNotPrecomputed";
        case errc::unknown_strategy: return "UnknownStrategy";
        case errc::invalid_parameter: return "InvalidParameter";
        case errc::io_error: return "IoError";
        case errc::format_error: return "FormatError";
        case errc::version_mismatch: return "VersionMismatch";
    }
    return "Unknown";
}

}  // namespace topk
