#pragma once

#include <cstdint>
#include <vector>

#include "topk/bit_vector.hpp"

namespace topk {

/// Explicit ordinal tree: children[v] lists v's children in order; node 0 is the root.
struct ordinal_tree {
    std::vector<std::vector<std::uint32_t>> children;

    std::size_t size() const noexcept { return children.size(); }
};

/// Level-order unary degree sequence.
///
/// The bitstring is "10" (a pseudo-root whose only child is the real root)
/// followed by 1^c 0 for every node in level order. A node handle is the
/// 1-based bit position where the node's encoding starts, so the root is 3.
/// node_rank() maps a handle to its 1-based level-order number.
class louds_tree {
public:
    using handle = std::uint64_t;

    louds_tree() = default;
    static louds_tree encode(const ordinal_tree& tree,
                             std::uint64_t rank_step = rank_bit_vector::default_sample_step);
    /// Level-order listing of `tree`'s node ids; entry x-1 is the node whose node_rank is x.
    static std::vector<std::uint32_t> level_order(const ordinal_tree& tree);

    std::uint64_t node_count() const noexcept { return m_bits.zeros() == 0 ? 0 : m_bits.zeros() - 1; }
    const rank_bit_vector& bits() const noexcept { return m_bits; }

    handle root() const noexcept { return 3; }
    bool is_leaf(handle v) const;
    std::uint64_t child_count(handle v) const;
    /// t-th child, 1-based.
    handle child(handle v, std::uint64_t t) const;
    handle parent(handle v) const;
    bool is_root(handle v) const { return check(v) == 1; }
    std::uint64_t node_rank(handle v) const { return check(v); }
    handle node_at(std::uint64_t rank) const;

    void serialize(byte_writer& out) const { m_bits.serialize(out); }
    static louds_tree load(byte_reader& in);

    friend bool operator==(const louds_tree&, const louds_tree&) = default;

private:
    std::uint64_t check(handle v) const;

    rank_bit_vector m_bits;
};

}  // namespace topk
