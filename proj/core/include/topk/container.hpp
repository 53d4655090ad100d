#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "topk/engine.hpp"

namespace topk {

/// On-disk index container.
///
/// Layout (little-endian): magic "TKDI", u16 version, then the header
/// n, d, sigma, g', k_max, variant tag, rank sample step (u64 each), then
/// sections of (u64 id, u64 byte length, payload) until end of file.
/// Unknown section ids are skipped on load.
namespace container {

inline constexpr char magic[4] = {'T', 'K', 'D', 'I'};
inline constexpr std::uint16_t version = 1;

enum class section : std::uint64_t {
    corpus = 1,
    wavelet = 2,
    sgst = 3,
    suffix_array = 4,
};

struct header {
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::uint64_t sigma = 0;
    std::uint64_t g_prime = 0;
    std::uint64_t k_max = 0;
    std::uint64_t variant = 0;
    std::uint64_t rank_step = 0;

    friend bool operator==(const header&, const header&) = default;
};

std::vector<std::uint8_t> to_bytes(const topk_index& idx);
topk_index from_bytes(std::span<const std::uint8_t> bytes);
header read_header(std::span<const std::uint8_t> bytes);

void save(const topk_index& idx, const std::filesystem::path& path);
topk_index load(const std::filesystem::path& path);

}  // namespace container
}  // namespace topk
