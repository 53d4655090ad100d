#pragma once

#include <cstdint>
#include <ostream>

namespace topk {

// Closed interval [lo, hi] of 1-based positions; empty whenever hi < lo.
struct interval {
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;

    constexpr bool empty() const noexcept { return hi < lo; }
    constexpr std::uint64_t size() const noexcept { return empty() ? 0 : hi - lo + 1; }
    constexpr bool contains(const interval& o) const noexcept {
        return o.empty() || (!empty() && lo <= o.lo && o.hi <= hi);
    }

    friend constexpr bool operator==(const interval& a, const interval& b) noexcept {
        return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
    }
    friend std::ostream& operator<<(std::ostream& os, const interval& iv) {
        if (iv.empty()) return os << "[]";
        return os << '[' << iv.lo << ',' << iv.hi << ']';
    }
};

}  // namespace topk
