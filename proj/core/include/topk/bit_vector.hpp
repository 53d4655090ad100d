#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topk/serialize.hpp"

namespace topk {

/// Plain bit vector B[1,N] with a sampled rank directory.
///
/// Positions are 1-based. rank(bit, i) counts occurrences of `bit` in B[1,i]
/// (rank at 0 is 0) and select(bit, j) returns the position of the j-th
/// occurrence. The rank directory stores one cumulative popcount every
/// `sample_step` bits; select binary searches those samples and finishes
/// with a word scan.
class rank_bit_vector {
public:
    static constexpr std::uint64_t default_sample_step = 64;

    rank_bit_vector() { build_directory(); }
    explicit rank_bit_vector(const std::vector<bool>& bits, std::uint64_t sample_step = default_sample_step);

    std::uint64_t size() const noexcept { return m_size; }
    std::uint64_t sample_step() const noexcept { return m_step; }
    std::uint64_t ones() const noexcept { return m_ones; }
    std::uint64_t zeros() const noexcept { return m_size - m_ones; }

    bool operator[](std::uint64_t pos) const;
    std::uint64_t rank(bool bit, std::uint64_t i) const;
    std::uint64_t rank1(std::uint64_t i) const;
    std::uint64_t rank0(std::uint64_t i) const { return i - rank1(i); }
    std::uint64_t select(bool bit, std::uint64_t j) const;

    /// Bits used by the payload plus the rank directory.
    std::uint64_t size_in_bits() const noexcept;

    void serialize(byte_writer& out) const;
    static rank_bit_vector load(byte_reader& in);

    friend bool operator==(const rank_bit_vector&, const rank_bit_vector&) = default;

private:
    void build_directory();
    std::uint64_t ones_in_word_prefix(std::uint64_t word, std::uint64_t bits) const noexcept;

    std::uint64_t m_size = 0;
    std::uint64_t m_step = default_sample_step;
    std::uint64_t m_ones = 0;
    std::vector<std::uint64_t> m_words;
    std::vector<std::uint64_t> m_samples;  // m_samples[s] = ones in B[1, s*m_step]
};

/// Fixed-width packed integer array (0-based), width chosen to fit the largest value.
class packed_array {
public:
    packed_array() = default;
    explicit packed_array(std::span<const std::uint64_t> values);

    std::uint64_t size() const noexcept { return m_size; }
    unsigned width() const noexcept { return m_width; }
    std::uint64_t operator[](std::uint64_t idx) const noexcept;
    std::vector<std::uint64_t> to_vector() const;
    std::uint64_t size_in_bits() const noexcept { return m_words.size() * 64; }

    void serialize(byte_writer& out) const;
    static packed_array load(byte_reader& in);

    friend bool operator==(const packed_array&, const packed_array&) = default;

private:
    std::uint64_t m_size = 0;
    unsigned m_width = 0;
    std::vector<std::uint64_t> m_words;
};

}  // namespace topk
