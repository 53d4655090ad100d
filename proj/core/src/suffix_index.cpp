#include "topk/suffix_index.hpp"

#include <algorithm>
#include <numeric>

namespace topk {

std::vector<std::uint64_t> build_suffix_array(std::string_view text) {
    const std::uint64_t n = text.size();
    std::vector<std::uint64_t> sa(n), rank(n), next(n);
    std::iota(sa.begin(), sa.end(), 0);
    for (std::uint64_t i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(text[i]);
    // Rank 0 is reserved for "past the end", so shift real ranks by one.
    for (auto& r : rank) ++r;
    for (std::uint64_t h = 1;; h *= 2) {
        auto key = [&](std::uint64_t i) { return std::pair(rank[i], i + h < n ? rank[i + h] : 0); };
        std::sort(sa.begin(), sa.end(), [&](std::uint64_t a, std::uint64_t b) { return key(a) < key(b); });
        next[sa.empty() ? 0 : sa[0]] = 1;
        for (std::uint64_t i = 1; i < n; ++i) next[sa[i]] = next[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
        rank.swap(next);
        if (n == 0 || rank[sa[n - 1]] == n) break;
    }
    for (auto& p : sa) ++p;
    return sa;
}

std::vector<std::uint64_t> build_lcp_array(std::string_view text, const std::vector<std::uint64_t>& sa) {
    const std::uint64_t n = text.size();
    std::vector<std::uint64_t> inverse(n), lcp(n + 1, 0);
    for (std::uint64_t i = 0; i < n; ++i) inverse[sa[i] - 1] = i;
    std::uint64_t h = 0;
    for (std::uint64_t pos = 0; pos < n; ++pos) {
        std::uint64_t r = inverse[pos];
        if (r == 0) {
            h = 0;
            continue;
        }
        std::uint64_t prev = sa[r - 1] - 1;
        while (pos + h < n && prev + h < n && text[pos + h] == text[prev + h]) ++h;
        lcp[r + 1] = h;
        if (h > 0) --h;
    }
    return lcp;
}

suffix_index suffix_index::build(const corpus& c) { return from_suffix_array(c, build_suffix_array(c.text())); }

suffix_index suffix_index::from_suffix_array(const corpus& c, std::vector<std::uint64_t> sa) {
    if (sa.size() != c.size()) fail(errc::format_error, "suffix array length differs from text");
    suffix_index s;
    s.m_sa = std::move(sa);
    s.m_docs.resize(s.m_sa.size());
    for (std::uint64_t i = 0; i < s.m_sa.size(); ++i) s.m_docs[i] = c.doc_of_position(s.m_sa[i]);
    return s;
}

interval suffix_index::pattern_interval(const corpus& c, std::string_view pattern) const {
    if (pattern.empty()) fail(errc::empty_pattern, "pattern must be non-empty");
    if (pattern.find(sentinel) != std::string_view::npos)
        fail(errc::sentinel_in_pattern, "pattern contains the reserved byte 0x00");
    std::string_view text = c.text();
    // Compare the first |P| symbols of a suffix against P.
    auto prefix = [&](std::uint64_t pos) { return text.substr(pos - 1, pattern.size()); };
    auto lo = std::lower_bound(m_sa.begin(), m_sa.end(), pattern,
                               [&](std::uint64_t pos, std::string_view p) { return prefix(pos) < p; });
    auto hi = std::upper_bound(lo, m_sa.end(), pattern,
                               [&](std::string_view p, std::uint64_t pos) { return p < prefix(pos); });
    if (lo == hi) return {};
    return {static_cast<std::uint64_t>(lo - m_sa.begin()) + 1, static_cast<std::uint64_t>(hi - m_sa.begin())};
}

}  // namespace topk
