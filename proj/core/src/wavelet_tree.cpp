#include "topk/wavelet_tree.hpp"

#include <bit>
#include <string>

namespace topk {

std::vector<wavelet_tree::node> wavelet_tree::layout(doc_id d, std::uint64_t n) {
    std::vector<node> nodes;
    nodes.push_back(node{1, d, n, 0, 0, {}});
    for (std::size_t h = 0; h < nodes.size(); ++h) {
        if (nodes[h].is_leaf()) continue;
        doc_id lo = nodes[h].lo, hi = nodes[h].hi;
        doc_id mid = lo + (hi - lo) / 2;
        nodes[h].left = static_cast<node_handle>(nodes.size());
        nodes.push_back(node{lo, mid, 0, 0, 0, {}});
        nodes[h].right = static_cast<node_handle>(nodes.size());
        nodes.push_back(node{mid + 1, hi, 0, 0, 0, {}});
    }
    return nodes;
}

wavelet_tree wavelet_tree::build(std::span<const doc_id> docs, doc_id d, std::uint64_t rank_step) {
    if (d == 0) fail(errc::invalid_parameter, "wavelet tree needs at least one document");
    for (std::size_t i = 0; i < docs.size(); ++i)
        if (docs[i] == 0 || docs[i] > d)
            fail(errc::value_out_of_range, "D[" + std::to_string(i + 1) + "] = " + std::to_string(docs[i]));
    wavelet_tree wt;
    wt.m_docs = d;
    wt.m_nodes = layout(d, docs.size());
    std::vector<std::vector<doc_id>> pending(wt.m_nodes.size());
    pending[0].assign(docs.begin(), docs.end());
    for (std::size_t h = 0; h < wt.m_nodes.size(); ++h) {
        node& nd = wt.m_nodes[h];
        std::vector<doc_id> seq = std::move(pending[h]);
        nd.length = seq.size();
        if (nd.is_leaf()) continue;
        doc_id mid = nd.lo + (nd.hi - nd.lo) / 2;
        std::vector<bool> bits(seq.size());
        auto& left = pending[nd.left];
        auto& right = pending[nd.right];
        for (std::size_t i = 0; i < seq.size(); ++i) {
            bits[i] = seq[i] > mid;
            (bits[i] ? right : left).push_back(seq[i]);
        }
        nd.bits = rank_bit_vector(bits, rank_step);
    }
    return wt;
}

unsigned wavelet_tree::height() const noexcept {
    return m_docs <= 1 ? 0 : static_cast<unsigned>(std::bit_width(static_cast<std::uint32_t>(m_docs - 1)));
}

doc_id wavelet_tree::access(std::uint64_t i) const {
    if (i == 0 || i > size()) fail(errc::out_of_range, "D index " + std::to_string(i));
    node_handle h = root();
    while (!m_nodes[h].is_leaf()) {
        const node& nd = m_nodes[h];
        if (nd.bits[i]) {
            i = nd.bits.rank1(i);
            h = nd.right;
        } else {
            i = nd.bits.rank0(i);
            h = nd.left;
        }
    }
    return m_nodes[h].lo;
}

std::uint64_t wavelet_tree::rank(doc_id doc, std::uint64_t i) const {
    if (doc == 0 || doc > m_docs) fail(errc::out_of_range, "document id " + std::to_string(doc));
    if (i > size()) fail(errc::out_of_range, "D index " + std::to_string(i));
    node_handle h = root();
    while (!m_nodes[h].is_leaf() && i > 0) {
        const node& nd = m_nodes[h];
        doc_id mid = nd.lo + (nd.hi - nd.lo) / 2;
        if (doc > mid) {
            i = nd.bits.rank1(i);
            h = nd.right;
        } else {
            i = nd.bits.rank0(i);
            h = nd.left;
        }
    }
    return i;
}

std::uint64_t wavelet_tree::doc_freq(doc_id doc, std::uint64_t l, std::uint64_t r) const {
    if (r < l) return 0;
    if (l == 0 || r > size()) fail(errc::out_of_range, "D range [" + std::to_string(l) + "," + std::to_string(r) + "]");
    return rank(doc, r) - rank(doc, l - 1);
}

std::pair<interval, interval> wavelet_tree::project(node_handle h, interval iv) const {
    if (h >= m_nodes.size()) fail(errc::out_of_range, "wavelet node " + std::to_string(h));
    const node& nd = m_nodes[h];
    if (nd.is_leaf()) fail(errc::out_of_range, "cannot project below a leaf");
    if (iv.empty()) return {interval{}, interval{}};
    if (iv.lo == 0 || iv.hi > nd.length)
        fail(errc::out_of_range, "interval exceeds node length " + std::to_string(nd.length));
    std::uint64_t ones_before = nd.bits.rank1(iv.lo - 1), ones_upto = nd.bits.rank1(iv.hi);
    interval left{(iv.lo - 1 - ones_before) + 1, iv.hi - ones_upto};
    interval right{ones_before + 1, ones_upto};
    return {left, right};
}

tracked_intervals wavelet_tree::project_left(node_handle h, const tracked_intervals& t) const {
    return {project(h, t.outer).first, project(h, t.uncovered_left).first, project(h, t.uncovered_right).first};
}

tracked_intervals wavelet_tree::project_right(node_handle h, const tracked_intervals& t) const {
    return {project(h, t.outer).second, project(h, t.uncovered_left).second, project(h, t.uncovered_right).second};
}

void wavelet_tree::validate_root_intervals(const tracked_intervals& t) const {
    const interval& o = t.outer;
    if (o.empty() || o.lo == 0 || o.hi > size())
        fail(errc::inconsistent_intervals, "outer interval must be a non-empty range of D");
    if (!o.contains(t.uncovered_left) || !o.contains(t.uncovered_right))
        fail(errc::inconsistent_intervals, "uncovered intervals must lie inside the outer interval");
    if (!t.uncovered_left.empty() && !t.uncovered_right.empty() && t.uncovered_left.hi >= t.uncovered_right.lo)
        fail(errc::inconsistent_intervals, "uncovered intervals must be disjoint and ordered");
}

std::vector<doc_frequency> wavelet_tree::greedy_topk(interval range, std::uint64_t k, traversal_stats* stats) const {
    if (range.empty() || range.lo == 0 || range.hi > size())
        fail(errc::out_of_range, "greedy_topk needs a non-empty range of D");
    if (k == 0) fail(errc::invalid_parameter, "k must be at least 1");
    struct entry {
        node_handle h;
        interval iv;
    };
    auto lower_priority = [this](const entry& a, const entry& b) {
        if (a.iv.size() != b.iv.size()) return a.iv.size() < b.iv.size();
        return m_nodes[a.h].lo > m_nodes[b.h].lo;
    };
    std::priority_queue<entry, std::vector<entry>, decltype(lower_priority)> queue(lower_priority);
    queue.push({root(), range});
    std::vector<doc_frequency> out;
    while (!queue.empty() && out.size() < k) {
        entry e = queue.top();
        queue.pop();
        if (stats) ++stats->nodes_visited;
        const node& nd = m_nodes[e.h];
        if (nd.is_leaf()) {
            if (stats) ++stats->docs_emitted;
            out.push_back({nd.lo, e.iv.size()});
            continue;
        }
        auto [l, r] = project(e.h, e.iv);
        if (!l.empty()) queue.push({nd.left, l});
        if (!r.empty()) queue.push({nd.right, r});
    }
    return out;
}

std::uint64_t wavelet_tree::size_in_bits() const noexcept {
    std::uint64_t bits = 0;
    for (const auto& nd : m_nodes) bits += nd.bits.size_in_bits();
    return bits;
}

void wavelet_tree::serialize(byte_writer& out) const {
    out.put_u64(m_docs);
    out.put_u64(size());
    for (const auto& nd : m_nodes) {
        if (nd.is_leaf())
            out.put_u64(nd.length);
        else
            nd.bits.serialize(out);
    }
}

wavelet_tree wavelet_tree::load(byte_reader& in) {
    wavelet_tree wt;
    std::uint64_t d = in.get_u64();
    if (d == 0 || d > UINT32_MAX) fail(errc::format_error, "bad wavelet document count");
    wt.m_docs = static_cast<doc_id>(d);
    wt.m_nodes = layout(wt.m_docs, in.get_u64());
    for (auto& nd : wt.m_nodes) {
        if (nd.is_leaf()) {
            nd.length = in.get_u64();
        } else {
            nd.bits = rank_bit_vector::load(in);
            nd.length = nd.bits.size();
        }
    }
    for (const auto& nd : wt.m_nodes) {
        if (nd.is_leaf()) continue;
        if (wt.m_nodes[nd.left].length != nd.bits.zeros() || wt.m_nodes[nd.right].length != nd.bits.ones())
            fail(errc::format_error, "wavelet child lengths disagree with parent bitmap");
    }
    return wt;
}

}  // namespace topk
