#include "topk/louds.hpp"

#include <string>

namespace topk {

std::vector<std::uint32_t> louds_tree::level_order(const ordinal_tree& tree) {
    std::vector<std::uint32_t> order;
    if (tree.size() == 0) return order;
    order.reserve(tree.size());
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto c : tree.children[order[i]]) {
            if (c >= tree.size()) fail(errc::invalid_parameter, "child id out of range");
            order.push_back(c);
        }
    if (order.size() != tree.size()) fail(errc::invalid_parameter, "ordinal tree is not connected or has shared children");
    return order;
}

louds_tree louds_tree::encode(const ordinal_tree& tree, std::uint64_t rank_step) {
    if (tree.size() == 0) fail(errc::empty_tree, "cannot encode an empty tree");
    std::vector<bool> bits{true, false};
    bits.reserve(2 * tree.size() + 1);
    for (auto v : level_order(tree)) {
        bits.insert(bits.end(), tree.children[v].size(), true);
        bits.push_back(false);
    }
    louds_tree t;
    t.m_bits = rank_bit_vector(bits, rank_step);
    return t;
}

std::uint64_t louds_tree::check(handle v) const {
    if (v < 3 || v > m_bits.size() || m_bits[v - 1])
        fail(errc::invalid_handle, "LOUDS handle " + std::to_string(v));
    return m_bits.rank0(v - 1);
}

bool louds_tree::is_leaf(handle v) const {
    check(v);
    return !m_bits[v];
}

std::uint64_t louds_tree::child_count(handle v) const {
    std::uint64_t x = check(v);
    return m_bits.select(false, x + 1) - v;
}

louds_tree::handle louds_tree::child(handle v, std::uint64_t t) const {
    if (t == 0 || t > child_count(v)) fail(errc::out_of_range, "child index " + std::to_string(t));
    return node_at(m_bits.rank1(v + t - 1));
}

louds_tree::handle louds_tree::parent(handle v) const {
    std::uint64_t x = check(v);
    if (x == 1) fail(errc::invalid_handle, "the root has no parent");
    return node_at(m_bits.rank0(m_bits.select(true, x)));
}

louds_tree::handle louds_tree::node_at(std::uint64_t rank) const {
    if (rank == 0 || rank > node_count()) fail(errc::invalid_handle, "node rank " + std::to_string(rank));
    return m_bits.select(false, rank) + 1;
}

louds_tree louds_tree::load(byte_reader& in) {
    louds_tree t;
    t.m_bits = rank_bit_vector::load(in);
    const auto& b = t.m_bits;
    if (b.size() < 3 || !b[1] || b[2] || b.zeros() != b.ones() + 1 || b[b.size()])
        fail(errc::format_error, "malformed LOUDS bitstring");
    return t;
}

}  // namespace topk
