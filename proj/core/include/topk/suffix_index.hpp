#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "topk/corpus.hpp"
#include "topk/interval.hpp"

namespace topk {

/// Suffix array A[1,n] of the corpus text and the document array D[1,n].
///
/// Stored 0-based: sa()[i-1] is A[i] (a 1-based text position) and
/// doc_array()[i-1] is D[i].
class suffix_index {
public:
    suffix_index() = default;

    static suffix_index build(const corpus& c);
    /// Adopt a previously computed suffix array (e.g. loaded from disk).
    static suffix_index from_suffix_array(const corpus& c, std::vector<std::uint64_t> sa);

    std::uint64_t size() const noexcept { return m_sa.size(); }
    const std::vector<std::uint64_t>& sa() const noexcept { return m_sa; }
    const std::vector<doc_id>& doc_array() const noexcept { return m_docs; }

    /// Suffix-array interval [sp,ep] of the suffixes prefixed by `pattern`.
    interval pattern_interval(const corpus& c, std::string_view pattern) const;

    /// Drops D once it has been handed to the wavelet tree.
    void release_doc_array() { std::vector<doc_id>().swap(m_docs); }

private:
    std::vector<std::uint64_t> m_sa;
    std::vector<doc_id> m_docs;
};

/// Prefix-doubling suffix sort of `text` (sentinel-smallest, prefix-is-smaller order).
/// Returns 1-based text positions.
std::vector<std::uint64_t> build_suffix_array(std::string_view text);

/// lcp[i] = length of the longest common prefix of suffixes A[i-1] and A[i],
/// for i in 2..n (Kasai et al.); lcp[0] and lcp[1] (1-based index 1) are 0.
/// Returned vector has n+1 entries, indexed 1-based.
std::vector<std::uint64_t> build_lcp_array(std::string_view text, const std::vector<std::uint64_t>& sa);

}  // namespace topk
