#include "topk/sgst.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace topk {

namespace {

bool nests_before(const interval& a, const interval& b) { return a.lo != b.lo ? a.lo < b.lo : a.hi > b.hi; }

// Previous/next strictly smaller lcp value, with lcp[1] and lcp[n+1] treated as -1.
struct smaller_values {
    std::vector<std::uint64_t> prev, next;
};

smaller_values nearest_smaller(const std::vector<std::uint64_t>& lcp) {
    const std::uint64_t n = lcp.size() - 1;
    auto value = [&](std::uint64_t i) -> std::int64_t {
        return (i <= 1 || i > n) ? -1 : static_cast<std::int64_t>(lcp[i]);
    };
    smaller_values s{std::vector<std::uint64_t>(n + 2, 1), std::vector<std::uint64_t>(n + 2, n + 1)};
    std::vector<std::uint64_t> stack;
    for (std::uint64_t i = 1; i <= n + 1; ++i) {
        while (!stack.empty() && value(stack.back()) >= value(i)) stack.pop_back();
        s.prev[i] = stack.empty() ? 1 : stack.back();
        stack.push_back(i);
    }
    stack.clear();
    for (std::uint64_t i = n + 1; i >= 1; --i) {
        while (!stack.empty() && value(stack.back()) >= value(i)) stack.pop_back();
        s.next[i] = stack.empty() ? n + 1 : stack.back();
        stack.push_back(i);
    }
    return s;
}

std::vector<interval> marked_intervals(const std::vector<std::uint64_t>& lcp, const smaller_values& sv,
                                       std::uint64_t g) {
    const std::uint64_t n = lcp.size() - 1;
    std::vector<interval> out;
    for (std::uint64_t a = 1; g <= n && a + g <= n; a += g) {
        std::uint64_t b = a + g;
        std::uint64_t p = a + 1;
        for (std::uint64_t q = a + 2; q <= b; ++q)
            if (lcp[q] < lcp[p]) p = q;
        out.push_back({sv.prev[p], sv.next[p] - 1});
    }
    std::sort(out.begin(), out.end(), nests_before);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t index_of(const std::vector<interval>& sorted, const interval& iv) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), iv, nests_before);
    if (it == sorted.end() || !(*it == iv)) return sorted.size();
    return static_cast<std::uint64_t>(it - sorted.begin());
}

}  // namespace

void sgst_params::validate() const {
    if (g_prime == 0) fail(errc::invalid_parameter, "g' must be at least 1");
    if (k_max == 0 || !std::has_single_bit(k_max)) fail(errc::invalid_parameter, "k_max must be a power of two");
    if (variant != sgst_variant::light && variant != sgst_variant::xlight)
        fail(errc::invalid_parameter, "unknown SGST variant");
    if (rank_step == 0 || rank_step % 64 != 0)
        fail(errc::invalid_parameter, "rank sample step must be a positive multiple of 64");
}

std::vector<interval> sampled_lca_intervals(const std::vector<std::uint64_t>& lcp, std::uint64_t g) {
    if (g == 0) fail(errc::invalid_parameter, "sampling step must be positive");
    if (lcp.size() < 2) return {};
    return marked_intervals(lcp, nearest_smaller(lcp), g);
}

ordinal_tree nesting_tree(const std::vector<interval>& intervals) {
    ordinal_tree tree;
    tree.children.resize(intervals.size());
    std::vector<std::uint32_t> stack;
    for (std::uint32_t i = 0; i < intervals.size(); ++i) {
        while (!stack.empty() && !intervals[stack.back()].contains(intervals[i])) stack.pop_back();
        if (stack.empty() && i != 0) throw std::logic_error("interval family has more than one root");
        if (!stack.empty()) {
            const interval& parent = intervals[stack.back()];
            if (!(intervals[i].lo >= parent.lo && intervals[i].hi <= parent.hi))
                throw std::logic_error("interval family is not laminar");
            tree.children[stack.back()].push_back(i);
        }
        stack.push_back(i);
    }
    return tree;
}

sgst sgst::build(const suffix_index& sa, const std::vector<std::uint64_t>& lcp, const wavelet_tree& wt,
                 const sgst_params& params) {
    params.validate();
    if (lcp.size() != sa.size() + 1) fail(errc::invalid_parameter, "lcp array does not match the suffix array");
    sgst x;
    x.m_params = params;
    const unsigned level_count = static_cast<unsigned>(std::bit_width(params.k_max));
    x.m_levels.resize(level_count);

    std::vector<std::vector<interval>> marked(level_count);
    if (lcp.size() >= 2) {
        smaller_values sv = nearest_smaller(lcp);
        for (unsigned j = 0; j < level_count; ++j) marked[j] = marked_intervals(lcp, sv, (std::uint64_t{1} << j) * params.g_prime);
    }
    const auto& tau = marked[0];
    if (tau.empty()) {
        x.m_cand_offsets = packed_array(std::vector<std::uint64_t>{0});
        return x;
    }
    for (unsigned j = 1; j < level_count; ++j)
        for (const auto& iv : marked[j])
            if (index_of(tau, iv) == tau.size()) throw std::logic_error("tau_k node missing from tau_1");

    ordinal_tree tree = nesting_tree(tau);
    std::vector<std::uint32_t> order = louds_tree::level_order(tree);
    std::vector<std::uint64_t> rank_of(tau.size());
    for (std::uint64_t x_rank = 1; x_rank <= order.size(); ++x_rank) rank_of[order[x_rank - 1]] = x_rank;

    std::vector<std::uint64_t> sp, ep, class_log, offsets{0}, docs, freqs;
    for (auto id : order) {
        const interval& iv = tau[id];
        unsigned cls_log = 0;
        for (unsigned j = 1; j < level_count; ++j)
            if (index_of(marked[j], iv) != marked[j].size()) cls_log = j;
        sp.push_back(iv.lo);
        ep.push_back(iv.hi);
        class_log.push_back(cls_log);
        for (const auto& c : wt.greedy_topk(iv, std::uint64_t{1} << cls_log)) {
            docs.push_back(c.doc);
            freqs.push_back(c.freq);
        }
        offsets.push_back(docs.size());
    }
    x.m_sp = packed_array(sp);
    x.m_ep = packed_array(ep);
    x.m_class_log = packed_array(class_log);
    x.m_cand_offsets = packed_array(offsets);
    x.m_cand_docs = packed_array(docs);
    if (params.variant == sgst_variant::light) x.m_cand_freqs = packed_array(freqs);

    x.m_levels[0].tree = louds_tree::encode(tree, params.rank_step);
    for (unsigned j = 1; j < level_count; ++j) {
        if (marked[j].empty()) continue;
        ordinal_tree sub = nesting_tree(marked[j]);
        std::vector<std::uint64_t> ref;
        for (auto id : louds_tree::level_order(sub)) ref.push_back(rank_of[index_of(tau, marked[j][id])]);
        x.m_levels[j].tree = louds_tree::encode(sub, params.rank_step);
        x.m_levels[j].tau_ref = packed_array(ref);
    }
    return x;
}

const sgst::level& sgst::level_for(std::uint64_t k) const {
    if (k == 0 || !std::has_single_bit(k) || k > m_params.k_max)
        fail(errc::k_star_not_precomputed, "k = " + std::to_string(k) + " with k_max = " + std::to_string(m_params.k_max));
    return m_levels[static_cast<std::size_t>(std::countr_zero(k))];
}

std::uint64_t sgst::node_count(std::uint64_t k) const { return level_for(k).tree.node_count(); }

marked_node sgst::node(std::uint64_t rank) const {
    if (rank == 0 || rank > node_count()) fail(errc::out_of_range, "tau node " + std::to_string(rank));
    return {rank, interval_of(rank), std::uint64_t{1} << m_class_log[rank - 1]};
}

const louds_tree* sgst::topology(std::uint64_t k) const {
    const level& lv = level_for(k);
    return lv.tree.node_count() == 0 ? nullptr : &lv.tree;
}

std::uint64_t sgst::tau_rank(std::uint64_t k, louds_tree::handle v) const {
    const level& lv = level_for(k);
    std::uint64_t x = lv.tree.node_rank(v);
    return k == 1 ? x : lv.tau_ref[x - 1];
}

std::optional<marked_node> sgst::find_locus(std::uint64_t k_star, interval range) const {
    const level& lv = level_for(k_star);
    if (range.empty()) fail(errc::out_of_range, "locus search needs a non-empty interval");
    if (lv.tree.node_count() == 0) return std::nullopt;
    const louds_tree& t = lv.tree;
    auto range_of = [&](louds_tree::handle v) { return interval_of(tau_rank(k_star, v)); };

    louds_tree::handle v = t.root();
    interval cur = range_of(v);
    if (range.contains(cur)) return node(tau_rank(k_star, v));
    if (!cur.contains(range)) return std::nullopt;
    for (;;) {
        // Children are disjoint and sorted; find the first one ending at or after sp.
        std::uint64_t lo = 1, hi = t.child_count(v) + 1;
        while (lo < hi) {
            std::uint64_t mid = lo + (hi - lo) / 2;
            if (range_of(t.child(v, mid)).hi >= range.lo)
                hi = mid;
            else
                lo = mid + 1;
        }
        if (lo > t.child_count(v)) return std::nullopt;
        louds_tree::handle c = t.child(v, lo);
        interval civ = range_of(c);
        if (range.contains(civ)) return node(tau_rank(k_star, c));
        if (!civ.contains(range)) return std::nullopt;
        v = c;
    }
}

std::vector<doc_frequency> sgst::candidates_of(const marked_node& v, const wavelet_tree& wt) const {
    if (v.rank == 0 || v.rank > node_count()) fail(errc::out_of_range, "tau node " + std::to_string(v.rank));
    std::vector<doc_frequency> out;
    interval iv = interval_of(v.rank);
    for (std::uint64_t i = m_cand_offsets[v.rank - 1]; i < m_cand_offsets[v.rank]; ++i) {
        auto doc = static_cast<doc_id>(m_cand_docs[i]);
        std::uint64_t freq = m_params.variant == sgst_variant::light ? m_cand_freqs[i] : wt.doc_freq(doc, iv.lo, iv.hi);
        out.push_back({doc, freq});
    }
    return out;
}

std::uint64_t sgst::size_in_bits() const noexcept {
    std::uint64_t bits = m_sp.size_in_bits() + m_ep.size_in_bits() + m_class_log.size_in_bits() +
                         m_cand_offsets.size_in_bits() + m_cand_docs.size_in_bits() + m_cand_freqs.size_in_bits();
    for (const auto& lv : m_levels) bits += lv.tree.bits().size_in_bits() + lv.tau_ref.size_in_bits();
    return bits;
}

void sgst::serialize(byte_writer& out) const {
    out.put_u64(m_params.g_prime);
    out.put_u64(m_params.k_max);
    out.put_u64(static_cast<std::uint64_t>(m_params.variant));
    out.put_u64(m_params.rank_step);
    m_sp.serialize(out);
    m_ep.serialize(out);
    m_class_log.serialize(out);
    m_cand_offsets.serialize(out);
    m_cand_docs.serialize(out);
    m_cand_freqs.serialize(out);
    out.put_u64(m_levels.size());
    for (const auto& lv : m_levels) {
        out.put_u8(lv.tree.node_count() == 0 ? 0 : 1);
        if (lv.tree.node_count() == 0) continue;
        lv.tree.serialize(out);
        lv.tau_ref.serialize(out);
    }
}

sgst sgst::load(byte_reader& in) {
    sgst x;
    x.m_params.g_prime = in.get_u64();
    x.m_params.k_max = in.get_u64();
    std::uint64_t variant = in.get_u64();
    if (variant != 1 && variant != 2) fail(errc::format_error, "unknown SGST variant tag");
    x.m_params.variant = static_cast<sgst_variant>(variant);
    x.m_params.rank_step = in.get_u64();
    try {
        x.m_params.validate();
    } catch (const error& e) {
        fail(errc::format_error, e.what());
    }
    x.m_sp = packed_array::load(in);
    x.m_ep = packed_array::load(in);
    x.m_class_log = packed_array::load(in);
    x.m_cand_offsets = packed_array::load(in);
    x.m_cand_docs = packed_array::load(in);
    x.m_cand_freqs = packed_array::load(in);
    std::uint64_t levels = in.get_u64();
    if (levels != static_cast<std::uint64_t>(std::bit_width(x.m_params.k_max)))
        fail(errc::format_error, "SGST level count disagrees with k_max");
    x.m_levels.resize(levels);
    for (std::uint64_t j = 0; j < levels; ++j) {
        if (in.get_u8() == 0) continue;
        x.m_levels[j].tree = louds_tree::load(in);
        x.m_levels[j].tau_ref = packed_array::load(in);
    }
    const std::uint64_t nodes = x.m_sp.size();
    bool consistent = x.m_ep.size() == nodes && x.m_class_log.size() == nodes && x.m_cand_offsets.size() == nodes + 1 &&
                      x.m_levels[0].tree.node_count() == nodes && x.m_cand_offsets[nodes] == x.m_cand_docs.size() &&
                      (x.m_params.variant == sgst_variant::xlight ? x.m_cand_freqs.size() == 0
                                                                  : x.m_cand_freqs.size() == x.m_cand_docs.size());
    for (std::uint64_t j = 1; consistent && j < levels; ++j) {
        const auto& lv = x.m_levels[j];
        consistent = lv.tau_ref.size() == lv.tree.node_count();
        for (std::uint64_t i = 0; consistent && i < lv.tau_ref.size(); ++i)
            consistent = lv.tau_ref[i] >= 1 && lv.tau_ref[i] <= nodes;
    }
    if (!consistent) fail(errc::format_error, "inconsistent SGST section");
    return x;
}

}  // namespace topk
