#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topk/corpus.hpp"
#include "topk/sgst.hpp"
#include "topk/suffix_index.hpp"
#include "topk/wavelet_tree.hpp"

namespace topk {

/// How the precomputed answer at the locus is corrected over the uncovered
/// suffix-array ranges.
enum class strategy { greedy, dfs, select };

strategy parse_strategy(std::string_view name);
std::string_view to_string(strategy s) noexcept;
std::string_view to_string(sgst_variant v) noexcept;
sgst_variant parse_variant(std::string_view name);

/// Smallest power of two >= k.
std::uint64_t kstar(std::uint64_t k);

struct index_params {
    sgst_params sampling;
    bool keep_suffix_array = false;  // persist A in the container
};

/// At most `capacity` (doc, freq) pairs; the top is the worst kept entry,
/// i.e. the current k-th best (lowest frequency, ties toward higher id).
class candidate_heap {
public:
    explicit candidate_heap(std::size_t capacity);

    std::size_t size() const noexcept { return m_heap.size(); }
    std::size_t capacity() const noexcept { return m_capacity; }
    bool full() const noexcept { return m_heap.size() >= m_capacity; }
    const doc_frequency& top() const;
    /// k-th best frequency once k candidates are known, 0 before that.
    std::uint64_t threshold() const noexcept { return full() ? m_heap.front().freq : 0; }
    std::uint64_t offers() const noexcept { return m_offers; }

    /// Update a present doc in place, insert below capacity, or replace the
    /// top when `freq` beats it.
    void offer(doc_id doc, std::uint64_t freq);
    void offer(const doc_frequency& c) { offer(c.doc, c.freq); }

    /// Kept candidates in ranked order.
    std::vector<doc_frequency> ranked() const;

private:
    void sift_up(std::size_t i);
    void sift_down(std::size_t i);

    std::size_t m_capacity;
    std::vector<doc_frequency> m_heap;
    std::uint64_t m_offers = 0;
};

struct query_stats {
    interval range;                    // [sp, ep]
    bool locus_found = false;
    interval locus;                    // [sp', ep'] when found
    std::uint64_t positions_scanned = 0;
    std::uint64_t docs_emitted = 0;
    std::uint64_t nodes_visited = 0;
    std::uint64_t heap_offers = 0;
    std::uint64_t threshold_decreases = 0;  // stays 0: the k-th frequency is monotone
};

struct topk_result {
    std::string pattern;
    std::uint64_t k = 0;
    strategy used = strategy::greedy;
    bool use_sgst = true;
    sgst_variant variant = sgst_variant::light;
    std::vector<doc_frequency> docs;
};

/// Brute-force correction: offer every position of `range` outside `covered`
/// with its exact frequency in `range`. An empty `covered` scans all of `range`.
void select_scan(const wavelet_tree& wt, interval range, interval covered, candidate_heap& heap,
                 query_stats* stats = nullptr);

/// The full index: corpus, suffix array, wavelet tree over D and the SGST.
class topk_index {
public:
    topk_index() = default;

    static topk_index build(const std::vector<std::string>& documents, const index_params& params = {});
    static topk_index build(corpus c, const index_params& params = {});
    /// Reassemble from persisted parts; rebuilds A when `sa` is empty.
    static topk_index assemble(corpus c, wavelet_tree wt, sgst tree, std::vector<std::uint64_t> sa,
                               bool keep_suffix_array);

    const corpus& text() const noexcept { return m_corpus; }
    const suffix_index& suffixes() const noexcept { return m_suffixes; }
    const wavelet_tree& wavelet() const noexcept { return m_wavelet; }
    const sgst& sampled_tree() const noexcept { return m_sgst; }
    const index_params& params() const noexcept { return m_params; }

    interval pattern_interval(std::string_view pattern) const { return m_suffixes.pattern_interval(m_corpus, pattern); }

    topk_result query(std::string_view pattern, std::uint64_t k, strategy s = strategy::greedy, bool use_sgst = true,
                      query_stats* stats = nullptr) const;

    /// Size of the top-k structures (boundaries, wavelet tree, SGST); the
    /// text and suffix array are not counted.
    std::uint64_t size_in_bits() const noexcept;
    double bits_per_symbol() const noexcept;

private:
    corpus m_corpus;
    suffix_index m_suffixes;
    wavelet_tree m_wavelet;
    sgst m_sgst;
    index_params m_params;
};

}  // namespace topk
