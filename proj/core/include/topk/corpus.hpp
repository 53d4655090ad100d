#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topk/bit_vector.hpp"

namespace topk {

using doc_id = std::uint32_t;

/// Reserved byte terminating every document in the concatenated text.
/// It sorts before every other byte.
inline constexpr char sentinel = '\0';

/// Ordered document collection D1..Dd concatenated as T = D1 $ D2 $ ... Dd $.
///
/// Text positions and document ids are 1-based. The boundary bit vector has
/// a 1 at the sentinel closing each document.
class corpus {
public:
    corpus() = default;

    static corpus ingest(const std::vector<std::string>& documents,
                         std::uint64_t rank_step = rank_bit_vector::default_sample_step);

    std::uint64_t size() const noexcept { return m_text.size(); }  // n
    doc_id doc_count() const noexcept { return static_cast<doc_id>(m_boundaries.ones()); }  // d
    std::uint32_t sigma() const noexcept { return m_sigma; }
    std::string_view text() const noexcept { return m_text; }
    const rank_bit_vector& boundaries() const noexcept { return m_boundaries; }

    doc_id doc_of_position(std::uint64_t pos) const;
    /// Slice document `id` (without its sentinel) back out of the text.
    std::string_view document(doc_id id) const;
    std::vector<std::string> documents() const;

    /// Text with sentinels rendered as '$', for diagnostics.
    std::string printable_text() const;

    void serialize(byte_writer& out) const;
    static corpus load(byte_reader& in);

    friend bool operator==(const corpus&, const corpus&) = default;

private:
    std::string m_text;
    rank_bit_vector m_boundaries;
    std::uint32_t m_sigma = 0;
};

}  // namespace topk
