#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topk/bit_vector.hpp"
#include "topk/interval.hpp"
#include "topk/louds.hpp"
#include "topk/suffix_index.hpp"
#include "topk/wavelet_tree.hpp"

namespace topk {

/// LIGHT stores candidate frequencies; XLIGHT stores only candidate ids and
/// recomputes frequencies with wavelet-tree rank.
enum class sgst_variant : std::uint8_t { light = 1, xlight = 2 };

struct sgst_params {
    std::uint64_t g_prime = 400;
    std::uint64_t k_max = 16;
    sgst_variant variant = sgst_variant::light;
    std::uint64_t rank_step = rank_bit_vector::default_sample_step;

    /// Throws invalid_parameter unless g' >= 1 and k_max is a power of two.
    void validate() const;

    friend bool operator==(const sgst_params&, const sgst_params&) = default;
};

struct marked_node {
    std::uint64_t rank = 0;  // 1-based level-order number in tau
    interval range;          // [sp_v, ep_v]
    std::uint64_t cls = 0;   // largest k with the node in tau_k

    friend bool operator==(const marked_node&, const marked_node&) = default;
};

/// Suffix-array intervals of lca(l_{ig+1}, l_{(i+1)g+1}) for consecutive
/// sampled leaves, deduplicated and sorted by (lo asc, hi desc).
/// `lcp` is the 1-based array from build_lcp_array().
std::vector<interval> sampled_lca_intervals(const std::vector<std::uint64_t>& lcp, std::uint64_t g);

/// Nesting tree of a laminar interval family sorted by (lo asc, hi desc);
/// node i of the result is intervals[i]. The family must have one root.
ordinal_tree nesting_tree(const std::vector<interval>& intervals);

/// Sparsified generalized suffix tree.
///
/// tau holds every node marked for k = 1 with its interval, class and
/// top-c(v) candidate table. For each k = 2, 4, ..., k_max a separate LOUDS
/// skeleton holds the nodes of tau_k, each pointing back to its tau node.
class sgst {
public:
    sgst() = default;

    static sgst build(const suffix_index& sa, const std::vector<std::uint64_t>& lcp, const wavelet_tree& wt,
                      const sgst_params& params);

    const sgst_params& params() const noexcept { return m_params; }
    bool empty() const noexcept { return node_count() == 0; }
    std::uint64_t node_count() const noexcept { return m_sp.size(); }
    /// Number of nodes in tau_k.
    std::uint64_t node_count(std::uint64_t k) const;

    marked_node node(std::uint64_t rank) const;
    /// Tree topology of tau_k, or nullptr when tau_k is empty.
    const louds_tree* topology(std::uint64_t k) const;
    /// tau rank referenced by node `v` of tau_k.
    std::uint64_t tau_rank(std::uint64_t k, louds_tree::handle v) const;

    /// First node of tau_{k_star}, descending from its root, whose interval is
    /// contained in `range`.
    std::optional<marked_node> find_locus(std::uint64_t k_star, interval range) const;

    /// Stored candidate table of `v` with frequencies relative to its interval.
    std::vector<doc_frequency> candidates_of(const marked_node& v, const wavelet_tree& wt) const;

    std::uint64_t size_in_bits() const noexcept;

    void serialize(byte_writer& out) const;
    static sgst load(byte_reader& in);

    friend bool operator==(const sgst&, const sgst&) = default;

private:
    struct level {
        louds_tree tree;      // empty when node count is zero
        packed_array tau_ref;  // entry x-1: tau rank of tau_k node x
        friend bool operator==(const level&, const level&) = default;
    };

    const level& level_for(std::uint64_t k) const;
    interval interval_of(std::uint64_t tau_rank) const {
        return {m_sp[tau_rank - 1], m_ep[tau_rank - 1]};
    }

    sgst_params m_params;
    std::vector<level> m_levels;  // m_levels[j] is tau_{2^j}; tau_ref of level 0 is the identity
    packed_array m_sp;
    packed_array m_ep;
    packed_array m_class_log;
    packed_array m_cand_offsets;  // node_count()+1 entries
    packed_array m_cand_docs;
    packed_array m_cand_freqs;  // empty under XLIGHT
};

}  // namespace topk
