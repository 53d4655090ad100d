#include "topk/bit_vector.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace topk {

rank_bit_vector::rank_bit_vector(const std::vector<bool>& bits, std::uint64_t sample_step)
    : m_size(bits.size()), m_step(sample_step) {
    if (sample_step == 0 || sample_step % 64 != 0)
        fail(errc::invalid_parameter, "rank sample step must be a positive multiple of 64");
    m_words.assign((m_size + 63) / 64, 0);
    for (std::uint64_t p = 0; p < m_size; ++p)
        if (bits[p]) m_words[p / 64] |= std::uint64_t{1} << (p % 64);
    build_directory();
}

void rank_bit_vector::build_directory() {
    std::uint64_t samples = m_size / m_step + 1;
    m_samples.assign(samples, 0);
    std::uint64_t words_per_sample = m_step / 64;
    std::uint64_t acc = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        m_samples[s] = acc;
        for (std::uint64_t w = s * words_per_sample; w < std::min<std::uint64_t>((s + 1) * words_per_sample, m_words.size()); ++w)
            acc += std::popcount(m_words[w]);
    }
    m_ones = acc;
}

std::uint64_t rank_bit_vector::ones_in_word_prefix(std::uint64_t word, std::uint64_t bits) const noexcept {
    if (bits == 0) return 0;
    std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
    return std::popcount(word & mask);
}

bool rank_bit_vector::operator[](std::uint64_t pos) const {
    if (pos == 0 || pos > m_size) fail(errc::out_of_range, "bit position " + std::to_string(pos));
    std::uint64_t p = pos - 1;
    return (m_words[p / 64] >> (p % 64)) & 1;
}

std::uint64_t rank_bit_vector::rank1(std::uint64_t i) const {
    if (i > m_size) fail(errc::out_of_range, "rank position " + std::to_string(i));
    std::uint64_t s = i / m_step;
    std::uint64_t r = m_samples[s];
    std::uint64_t w = s * (m_step / 64);
    for (; (w + 1) * 64 <= i; ++w) r += std::popcount(m_words[w]);
    return r + (i > w * 64 ? ones_in_word_prefix(m_words[w], i - w * 64) : 0);
}

std::uint64_t rank_bit_vector::rank(bool bit, std::uint64_t i) const { return bit ? rank1(i) : rank0(i); }

std::uint64_t rank_bit_vector::select(bool bit, std::uint64_t j) const {
    std::uint64_t total = bit ? m_ones : zeros();
    if (j == 0 || j > total)
        fail(errc::not_enough_occurrences, "select(" + std::to_string(bit) + ", " + std::to_string(j) + ") with " +
                                               std::to_string(total) + " occurrences");
    auto count_before_sample = [&](std::uint64_t s) { return bit ? m_samples[s] : s * m_step - m_samples[s]; };
    // Last sample whose prefix holds fewer than j occurrences.
    std::uint64_t lo = 0, hi = m_samples.size() - 1;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * m_step <= m_size && count_before_sample(mid) < j)
            lo = mid;
        else
            hi = mid - 1;
    }
    std::uint64_t need = j - count_before_sample(lo);
    for (std::uint64_t w = lo * (m_step / 64); w < m_words.size(); ++w) {
        std::uint64_t word = bit ? m_words[w] : ~m_words[w];
        auto c = static_cast<std::uint64_t>(std::popcount(word));
        if (c < need) {
            need -= c;
            continue;
        }
        for (unsigned b = 0; b < 64; ++b) {
            if ((word >> b) & 1) {
                if (--need == 0) return w * 64 + b + 1;
            }
        }
    }
    fail(errc::not_enough_occurrences, "select ran past the end");
}

std::uint64_t rank_bit_vector::size_in_bits() const noexcept { return 64 * (m_words.size() + m_samples.size()); }

void rank_bit_vector::serialize(byte_writer& out) const {
    out.put_u64(m_size);
    out.put_u64(m_step);
    out.put_u64_array(m_words);
    out.put_u64_array(m_samples);
}

rank_bit_vector rank_bit_vector::load(byte_reader& in) {
    rank_bit_vector bv;
    bv.m_size = in.get_u64();
    bv.m_step = in.get_u64();
    bv.m_words = in.get_u64_array();
    bv.m_samples = in.get_u64_array();
    if (bv.m_step == 0 || bv.m_step % 64 != 0 || bv.m_words.size() != (bv.m_size + 63) / 64 ||
        bv.m_samples.size() != bv.m_size / bv.m_step + 1)
        fail(errc::format_error, "inconsistent bit vector header");
    if (bv.m_size % 64 != 0 && !bv.m_words.empty() && (bv.m_words.back() >> (bv.m_size % 64)) != 0)
        fail(errc::format_error, "bits set past the end of a bit vector");
    std::vector<std::uint64_t> stored = bv.m_samples;
    bv.build_directory();
    if (stored != bv.m_samples) fail(errc::format_error, "rank directory does not match bits");
    return bv;
}

packed_array::packed_array(std::span<const std::uint64_t> values) : m_size(values.size()) {
    std::uint64_t max = 0;
    for (auto v : values) max = std::max(max, v);
    m_width = std::max(1u, static_cast<unsigned>(std::bit_width(max)));
    m_words.assign((m_size * m_width + 63) / 64, 0);
    for (std::uint64_t i = 0; i < m_size; ++i) {
        std::uint64_t bit = i * m_width;
        std::uint64_t w = bit / 64, off = bit % 64;
        m_words[w] |= values[i] << off;
        if (off + m_width > 64) m_words[w + 1] |= values[i] >> (64 - off);
    }
}

std::uint64_t packed_array::operator[](std::uint64_t idx) const noexcept {
    std::uint64_t bit = idx * m_width;
    std::uint64_t w = bit / 64, off = bit % 64;
    std::uint64_t v = m_words[w] >> off;
    if (off + m_width > 64) v |= m_words[w + 1] << (64 - off);
    return m_width == 64 ? v : v & ((std::uint64_t{1} << m_width) - 1);
}

std::vector<std::uint64_t> packed_array::to_vector() const {
    std::vector<std::uint64_t> out(m_size);
    for (std::uint64_t i = 0; i < m_size; ++i) out[i] = (*this)[i];
    return out;
}

void packed_array::serialize(byte_writer& out) const {
    out.put_u64(m_size);
    out.put_u64(m_width);
    out.put_u64_array(m_words);
}

packed_array packed_array::load(byte_reader& in) {
    packed_array a;
    a.m_size = in.get_u64();
    std::uint64_t width = in.get_u64();
    if (width > 64) fail(errc::format_error, "packed width exceeds 64");
    a.m_width = static_cast<unsigned>(width);
    a.m_words = in.get_u64_array();
    if (a.m_size > 0 && a.m_width == 0) fail(errc::format_error, "zero packed width");
    if (a.m_words.size() != (a.m_size * a.m_width + 63) / 64) fail(errc::format_error, "packed array length mismatch");
    return a;
}

}  // namespace topk
