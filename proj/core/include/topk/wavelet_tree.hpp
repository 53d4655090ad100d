#pragma once

#include <cstdint>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "topk/bit_vector.hpp"
#include "topk/corpus.hpp"
#include "topk/interval.hpp"

namespace topk {

struct doc_frequency {
    doc_id doc = 0;
    std::uint64_t freq = 0;

    friend bool operator==(const doc_frequency&, const doc_frequency&) = default;
};

/// Ranking order used for every reported list: higher frequency first, then lower id.
inline bool ranks_before(const doc_frequency& a, const doc_frequency& b) noexcept {
    return a.freq != b.freq ? a.freq > b.freq : a.doc < b.doc;
}

/// Query interval [l,r] plus the two uncovered subintervals [l1,r1] and [l2,r2],
/// all expressed in the local coordinates of one wavelet-tree node.
struct tracked_intervals {
    interval outer;
    interval uncovered_left;
    interval uncovered_right;

    bool has_uncovered() const noexcept { return !uncovered_left.empty() || !uncovered_right.empty(); }
};

struct traversal_stats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t docs_emitted = 0;
};

/// Balanced wavelet tree over the document array D[1,n] with symbols 1..d.
///
/// A node covering documents [a,b] splits at mid = (a+b)/2: bit 0 sends a
/// position to the left child ([a,mid]) and bit 1 to the right ((mid,b]).
/// Nodes are kept in breadth-first order; the root is node 0. Leaves hold no
/// bitmap, only the length of their subsequence.
class wavelet_tree {
public:
    using node_handle = std::uint32_t;

    struct node {
        doc_id lo = 1;
        doc_id hi = 1;
        std::uint64_t length = 0;
        node_handle left = 0;
        node_handle right = 0;
        rank_bit_vector bits;

        bool is_leaf() const noexcept { return lo == hi; }
        friend bool operator==(const node&, const node&) = default;
    };

    wavelet_tree() = default;
    static wavelet_tree build(std::span<const doc_id> docs, doc_id d,
                              std::uint64_t rank_step = rank_bit_vector::default_sample_step);

    std::uint64_t size() const noexcept { return m_nodes.empty() ? 0 : m_nodes[0].length; }
    doc_id doc_count() const noexcept { return m_docs; }
    unsigned height() const noexcept;
    node_handle root() const noexcept { return 0; }
    const node& at(node_handle h) const { return m_nodes.at(h); }
    std::size_t node_count() const noexcept { return m_nodes.size(); }

    doc_id access(std::uint64_t i) const;
    /// Occurrences of `doc` in D[1,i].
    std::uint64_t rank(doc_id doc, std::uint64_t i) const;
    /// Occurrences of `doc` in D[l,r]; 0 when r < l.
    std::uint64_t doc_freq(doc_id doc, std::uint64_t l, std::uint64_t r) const;
    /// Map a local interval of node `h` to its left and right children.
    std::pair<interval, interval> project(node_handle h, interval iv) const;

    /// Culpepper et al.'s Greedy: the k most frequent documents of D[l,r],
    /// exact frequencies, ranked by ranks_before().
    std::vector<doc_frequency> greedy_topk(interval range, std::uint64_t k, traversal_stats* stats = nullptr) const;

    /// Enumerate documents occurring in the uncovered subintervals together with
    /// their frequency in the outer interval, visiting nodes by decreasing
    /// outer length. Stops once the extracted outer length is not larger than
    /// threshold() (the current k-th best frequency, 0 while unknown).
    template <class Threshold, class Emit>
    void restricted_greedy(const tracked_intervals& at_root, Threshold&& threshold, Emit&& emit,
                           traversal_stats* stats = nullptr) const;

    /// Depth-first variant of restricted_greedy: prunes a subtree whose outer
    /// length is not larger than threshold().
    template <class Threshold, class Emit>
    void restricted_dfs(const tracked_intervals& at_root, Threshold&& threshold, Emit&& emit,
                        traversal_stats* stats = nullptr) const;

    std::uint64_t size_in_bits() const noexcept;

    void serialize(byte_writer& out) const;
    static wavelet_tree load(byte_reader& in);

    friend bool operator==(const wavelet_tree&, const wavelet_tree&) = default;

private:
    static std::vector<node> layout(doc_id d, std::uint64_t n);
    void validate_root_intervals(const tracked_intervals& t) const;
    tracked_intervals project_left(node_handle h, const tracked_intervals& t) const;
    tracked_intervals project_right(node_handle h, const tracked_intervals& t) const;

    template <class Threshold, class Emit>
    void dfs(node_handle h, const tracked_intervals& t, Threshold& threshold, Emit& emit, traversal_stats* stats) const;

    doc_id m_docs = 0;
    std::vector<node> m_nodes;
};

template <class Threshold, class Emit>
void wavelet_tree::restricted_greedy(const tracked_intervals& at_root, Threshold&& threshold, Emit&& emit,
                                     traversal_stats* stats) const {
    validate_root_intervals(at_root);
    if (!at_root.has_uncovered()) return;
    struct entry {
        node_handle h;
        tracked_intervals t;
    };
    auto lower_priority = [this](const entry& a, const entry& b) {
        if (a.t.outer.size() != b.t.outer.size()) return a.t.outer.size() < b.t.outer.size();
        return m_nodes[a.h].lo > m_nodes[b.h].lo;
    };
    std::priority_queue<entry, std::vector<entry>, decltype(lower_priority)> queue(lower_priority);
    queue.push({root(), at_root});
    while (!queue.empty()) {
        entry e = queue.top();
        queue.pop();
        if (e.t.outer.size() <= threshold()) break;
        if (stats) ++stats->nodes_visited;
        const node& nd = m_nodes[e.h];
        if (nd.is_leaf()) {
            if (stats) ++stats->docs_emitted;
            emit(doc_frequency{nd.lo, e.t.outer.size()});
            continue;
        }
        tracked_intervals l = project_left(e.h, e.t);
        if (l.has_uncovered()) queue.push({nd.left, l});
        tracked_intervals r = project_right(e.h, e.t);
        if (r.has_uncovered()) queue.push({nd.right, r});
    }
}

template <class Threshold, class Emit>
void wavelet_tree::restricted_dfs(const tracked_intervals& at_root, Threshold&& threshold, Emit&& emit,
                                  traversal_stats* stats) const {
    validate_root_intervals(at_root);
    if (!at_root.has_uncovered()) return;
    dfs(root(), at_root, threshold, emit, stats);
}

template <class Threshold, class Emit>
void wavelet_tree::dfs(node_handle h, const tracked_intervals& t, Threshold& threshold, Emit& emit,
                       traversal_stats* stats) const {
    if (t.outer.size() <= threshold()) return;
    if (stats) ++stats->nodes_visited;
    const node& nd = m_nodes[h];
    if (nd.is_leaf()) {
        if (stats) ++stats->docs_emitted;
        emit(doc_frequency{nd.lo, t.outer.size()});
        return;
    }
    tracked_intervals l = project_left(h, t);
    if (l.has_uncovered()) dfs(nd.left, l, threshold, emit, stats);
    tracked_intervals r = project_right(h, t);
    if (r.has_uncovered()) dfs(nd.right, r, threshold, emit, stats);
}

}  // namespace topk
