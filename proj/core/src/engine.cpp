#include "topk/engine.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace topk {

strategy parse_strategy(std::string_view name) {
    if (name == "greedy") return strategy::greedy;
    if (name == "dfs") return strategy::dfs;
    if (name == "select") return strategy::select;
    fail(errc::unknown_strategy, std::string(name));
}

std::string_view to_string(strategy s) noexcept {
    switch (s) {
        case strategy::greedy: return "greedy";
        case strategy::dfs: return "dfs";
        case strategy::select: return "select";
    }
    return "?";
}

std::string_view to_string(sgst_variant v) noexcept { return v == sgst_variant::light ? "light" : "xlight"; }

sgst_variant parse_variant(std::string_view name) {
    if (name == "light") return sgst_variant::light;
    if (name == "xlight") return sgst_variant::xlight;
    fail(errc::invalid_parameter, "unknown variant '" + std::string(name) + "'");
}

std::uint64_t kstar(std::uint64_t k) {
    if (k == 0) fail(errc::invalid_parameter, "k must be at least 1");
    return std::bit_ceil(k);
}

// ---------------------------------------------------------------------------

namespace {

// Heap order: a belongs above b when a is the worse candidate.
bool worse(const doc_frequency& a, const doc_frequency& b) { return ranks_before(b, a); }

}  // namespace

candidate_heap::candidate_heap(std::size_t capacity) : m_capacity(capacity) {
    if (capacity == 0) fail(errc::invalid_parameter, "heap capacity must be at least 1");
    m_heap.reserve(capacity);
}

const doc_frequency& candidate_heap::top() const {
    if (m_heap.empty()) fail(errc::out_of_range, "empty candidate heap");
    return m_heap.front();
}

void candidate_heap::sift_up(std::size_t i) {
    while (i > 0) {
        std::size_t p = (i - 1) / 2;
        if (!worse(m_heap[i], m_heap[p])) break;
        std::swap(m_heap[i], m_heap[p]);
        i = p;
    }
}

void candidate_heap::sift_down(std::size_t i) {
    for (;;) {
        std::size_t best = i, l = 2 * i + 1, r = l + 1;
        if (l < m_heap.size() && worse(m_heap[l], m_heap[best])) best = l;
        if (r < m_heap.size() && worse(m_heap[r], m_heap[best])) best = r;
        if (best == i) return;
        std::swap(m_heap[i], m_heap[best]);
        i = best;
    }
}

void candidate_heap::offer(doc_id doc, std::uint64_t freq) {
    ++m_offers;
    // k is small in practice; a linear scan beats maintaining slot pointers.
    for (std::size_t i = 0; i < m_heap.size(); ++i) {
        if (m_heap[i].doc != doc) continue;
        m_heap[i].freq = freq;
        sift_up(i);
        sift_down(i);
        return;
    }
    if (!full()) {
        m_heap.push_back({doc, freq});
        sift_up(m_heap.size() - 1);
    } else if (freq > m_heap.front().freq) {
        m_heap.front() = {doc, freq};
        sift_down(0);
    }
}

std::vector<doc_frequency> candidate_heap::ranked() const {
    std::vector<doc_frequency> out = m_heap;
    std::sort(out.begin(), out.end(), ranks_before);
    return out;
}

// ---------------------------------------------------------------------------

void select_scan(const wavelet_tree& wt, interval range, interval covered, candidate_heap& heap, query_stats* stats) {
    if (range.empty()) return;
    if (range.lo == 0 || range.hi > wt.size()) fail(errc::out_of_range, "select_scan range outside D");
    if (!range.contains(covered)) fail(errc::out_of_range, "covered interval must lie inside the scanned range");
    auto scan = [&](std::uint64_t from, std::uint64_t to) {
        for (std::uint64_t i = from; i <= to; ++i) {
            doc_id doc = wt.access(i);
            heap.offer(doc, wt.doc_freq(doc, range.lo, range.hi));
            if (stats) ++stats->positions_scanned;
        }
    };
    if (covered.empty()) {
        scan(range.lo, range.hi);
    } else {
        scan(range.lo, covered.lo - 1);
        scan(covered.hi + 1, range.hi);
    }
}

// ---------------------------------------------------------------------------

topk_index topk_index::build(const std::vector<std::string>& documents, const index_params& params) {
    return build(corpus::ingest(documents, params.sampling.rank_step), params);
}

topk_index topk_index::build(corpus c, const index_params& params) {
    params.sampling.validate();
    if (c.doc_count() == 0) fail(errc::invalid_parameter, "cannot index an empty collection");
    topk_index idx;
    idx.m_params = params;
    idx.m_corpus = std::move(c);
    idx.m_suffixes = suffix_index::build(idx.m_corpus);
    idx.m_wavelet = wavelet_tree::build(idx.m_suffixes.doc_array(), idx.m_corpus.doc_count(), params.sampling.rank_step);
    idx.m_suffixes.release_doc_array();
    std::vector<std::uint64_t> lcp = build_lcp_array(idx.m_corpus.text(), idx.m_suffixes.sa());
    idx.m_sgst = sgst::build(idx.m_suffixes, lcp, idx.m_wavelet, params.sampling);
    return idx;
}

topk_index topk_index::assemble(corpus c, wavelet_tree wt, sgst tree, std::vector<std::uint64_t> sa,
                                bool keep_suffix_array) {
    if (wt.size() != c.size() || wt.doc_count() != c.doc_count())
        fail(errc::format_error, "wavelet tree does not match the corpus");
    topk_index idx;
    idx.m_params.sampling = tree.params();
    idx.m_params.keep_suffix_array = keep_suffix_array;
    idx.m_corpus = std::move(c);
    idx.m_suffixes = sa.empty() ? suffix_index::build(idx.m_corpus)
                                : suffix_index::from_suffix_array(idx.m_corpus, std::move(sa));
    idx.m_suffixes.release_doc_array();
    idx.m_wavelet = std::move(wt);
    idx.m_sgst = std::move(tree);
    return idx;
}

topk_result topk_index::query(std::string_view pattern, std::uint64_t k, strategy s, bool use_sgst,
                              query_stats* stats) const {
    if (k == 0) fail(errc::invalid_parameter, "k must be at least 1");
    topk_result result{std::string(pattern), k, s, use_sgst, m_params.sampling.variant, {}};
    query_stats local;
    query_stats& st = stats ? *stats : local;
    st = query_stats{};

    const interval range = pattern_interval(pattern);
    st.range = range;
    if (range.empty()) return result;

    std::optional<marked_node> locus;
    if (use_sgst && kstar(k) <= m_params.sampling.k_max) locus = m_sgst.find_locus(kstar(k), range);

    traversal_stats ts;
    std::vector<doc_frequency> chosen;
    if (!locus && s != strategy::select) {
        chosen = m_wavelet.greedy_topk(range, k, &ts);
    } else {
        candidate_heap heap(k);
        interval covered;
        if (locus) {
            st.locus_found = true;
            st.locus = covered = locus->range;
            auto seeds = m_sgst.candidates_of(*locus, m_wavelet);
            for (std::size_t i = 0; i < seeds.size() && i < k; ++i) heap.offer(seeds[i]);
        }
        std::uint64_t last_threshold = heap.threshold();
        auto threshold = [&] {
            std::uint64_t t = heap.threshold();
            if (t < last_threshold) ++st.threshold_decreases;
            last_threshold = t;
            return t;
        };
        auto emit = [&](const doc_frequency& c) { heap.offer(c); };
        tracked_intervals t{range, {range.lo, covered.lo - 1}, {covered.hi + 1, range.hi}};
        switch (s) {
            case strategy::greedy: m_wavelet.restricted_greedy(t, threshold, emit, &ts); break;
            case strategy::dfs: m_wavelet.restricted_dfs(t, threshold, emit, &ts); break;
            case strategy::select: select_scan(m_wavelet, range, covered, heap, &st); break;
        }
        threshold();
        st.heap_offers = heap.offers();
        chosen = heap.ranked();
    }
    st.docs_emitted = ts.docs_emitted;
    st.nodes_visited = ts.nodes_visited;

    for (auto& c : chosen) c.freq = m_wavelet.doc_freq(c.doc, range.lo, range.hi);
    std::sort(chosen.begin(), chosen.end(), ranks_before);
    result.docs = std::move(chosen);
    return result;
}

std::uint64_t topk_index::size_in_bits() const noexcept {
    return m_corpus.boundaries().size_in_bits() + m_wavelet.size_in_bits() + m_sgst.size_in_bits();
}

double topk_index::bits_per_symbol() const noexcept {
    return m_corpus.size() == 0 ? 0.0 : static_cast<double>(size_in_bits()) / static_cast<double>(m_corpus.size());
}

}  // namespace topk
