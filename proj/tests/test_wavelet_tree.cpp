#include <doctest.h>

#include <map>
#include <random>

#include "oracle.hpp"
#include "topk/wavelet_tree.hpp"

using topk::doc_frequency;
using topk::interval;
using topk::tracked_intervals;
using topk::wavelet_tree;

namespace {

const std::vector<topk::doc_id> worked_d{3, 1, 2, 2, 3, 1, 1, 2, 3, 1, 2, 3, 1, 2};

std::string bit_string(const topk::rank_bit_vector& b) {
    std::string s;
    for (std::uint64_t p = 1; p <= b.size(); ++p) s += b[p] ? '1' : '0';
    return s;
}

std::vector<doc_frequency> to_lib(const std::vector<oracle::doc_freq>& v) {
    std::vector<doc_frequency> out;
    for (const auto& x : v) out.push_back({x.doc, x.freq});
    return out;
}

std::map<topk::doc_id, std::uint64_t> collect_dfs(const wavelet_tree& wt, const tracked_intervals& t,
                                                  std::uint64_t threshold) {
    std::map<topk::doc_id, std::uint64_t> out;
    wt.restricted_dfs(t, [&] { return threshold; }, [&](const doc_frequency& c) { out[c.doc] = c.freq; });
    return out;
}

std::map<topk::doc_id, std::uint64_t> collect_greedy(const wavelet_tree& wt, const tracked_intervals& t,
                                                     std::uint64_t threshold) {
    std::map<topk::doc_id, std::uint64_t> out;
    wt.restricted_greedy(t, [&] { return threshold; }, [&](const doc_frequency& c) { out[c.doc] = c.freq; });
    return out;
}

// Every distinct doc of D in the uncovered ranges with its count in [l,r].
std::map<topk::doc_id, std::uint64_t> naive_uncovered(const std::vector<topk::doc_id>& d, const tracked_intervals& t) {
    std::map<topk::doc_id, std::uint64_t> out;
    auto add = [&](const interval& iv) {
        for (std::uint64_t i = iv.lo; i <= iv.hi && !iv.empty(); ++i) out[d[i - 1]] = 0;
    };
    add(t.uncovered_left);
    add(t.uncovered_right);
    for (auto& [doc, f] : out)
        for (std::uint64_t i = t.outer.lo; i <= t.outer.hi; ++i) f += d[i - 1] == doc;
    return out;
}

}  // namespace

TEST_CASE("worked tree layout") {
    auto wt = wavelet_tree::build(worked_d, 3);
    CHECK(wt.height() == 2);
    CHECK(bit_string(wt.at(wt.root()).bits) == "10001000100100");
    CHECK(wt.access(5) == 3);
    CHECK(wt.access(1) == 3);
    for (std::uint64_t i = 1; i <= worked_d.size(); ++i) CHECK(wt.access(i) == worked_d[i - 1]);
}

TEST_CASE("single document and two document trees") {
    std::vector<topk::doc_id> ones(6, 1);
    auto wt1 = wavelet_tree::build(ones, 1);
    CHECK(wt1.height() == 0);
    CHECK(wt1.access(4) == 1);
    CHECK(wt1.doc_freq(1, 2, 5) == 4);
    CHECK(wt1.greedy_topk({1, 6}, 3) == std::vector<doc_frequency>{{1, 6}});

    auto wt2 = wavelet_tree::build(std::vector<topk::doc_id>{1, 2}, 2);
    CHECK(bit_string(wt2.at(wt2.root()).bits) == "01");
}

TEST_CASE("build rejects out-of-range values") {
    try {
        wavelet_tree::build(std::vector<topk::doc_id>{1, 4, 2}, 3);
        FAIL("expected ValueOutOfRange");
    } catch (const topk::error& e) {
        CHECK(e.code() == topk::errc::value_out_of_range);
    }
    CHECK_THROWS_AS(wavelet_tree::build(std::vector<topk::doc_id>{0}, 3), topk::error);
}

TEST_CASE("doc_freq and project on the worked tree") {
    auto wt = wavelet_tree::build(worked_d, 3);
    CHECK(wt.doc_freq(1, 5, 8) == 2);
    CHECK(wt.doc_freq(2, 9, 3) == 0);
    CHECK(wt.doc_freq(3, 1, 1) == 1);
    CHECK_THROWS_AS(wt.doc_freq(4, 1, 2), topk::error);
    CHECK_THROWS_AS(wt.doc_freq(1, 1, 15), topk::error);

    auto [left, right] = wt.project(wt.root(), {5, 8});
    CHECK(left == interval{4, 6});
    CHECK(right == interval{2, 2});

    const auto& root = wt.at(wt.root());
    auto [l_all, r_all] = wt.project(wt.root(), {1, 14});
    CHECK(l_all == interval{1, root.bits.zeros()});
    CHECK(r_all == interval{1, root.bits.ones()});

    auto [le, re] = wt.project(wt.root(), interval{});
    CHECK(le.empty());
    CHECK(re.empty());
    CHECK_THROWS_AS(wt.project(wt.root(), {3, 15}), topk::error);
}

TEST_CASE("greedy_topk on the worked tree") {
    auto wt = wavelet_tree::build(worked_d, 3);
    CHECK(wt.greedy_topk({5, 8}, 1) == std::vector<doc_frequency>{{1, 2}});
    CHECK(wt.greedy_topk({9, 14}, 2) == std::vector<doc_frequency>{{1, 2}, {2, 2}});
    CHECK(wt.greedy_topk({1, 14}, 10) == std::vector<doc_frequency>{{1, 5}, {2, 5}, {3, 4}});
    CHECK_THROWS_AS(wt.greedy_topk(interval{}, 1), topk::error);
}

TEST_CASE("restricted traversals: trivial configurations") {
    auto wt = wavelet_tree::build(worked_d, 3);
    tracked_intervals none{{4, 10}, {}, {}};
    CHECK(collect_dfs(wt, none, 0).empty());
    CHECK(collect_greedy(wt, none, 0).empty());

    // Uncovered = the whole range reduces to plain Greedy's support.
    tracked_intervals all{{3, 12}, {3, 12}, {}};
    std::map<topk::doc_id, std::uint64_t> expect;
    for (const auto& c : wt.greedy_topk({3, 12}, 3)) expect[c.doc] = c.freq;
    CHECK(collect_greedy(wt, all, 0) == expect);
    CHECK(collect_dfs(wt, all, 0) == expect);

    try {
        collect_greedy(wt, {{4, 10}, {2, 5}, {}}, 0);
        FAIL("expected InconsistentIntervals");
    } catch (const topk::error& e) {
        CHECK(e.code() == topk::errc::inconsistent_intervals);
    }
    CHECK_THROWS_AS(collect_dfs(wt, {{4, 10}, {4, 7}, {6, 10}}, 0), topk::error);
}

TEST_CASE("restricted traversals on a partially covered range") {
    // D reconstructed so that [sp,ep] = [4,14] and [sp',ep'] = [7,11] leave
    // documents 1, 2, 5, 7 uncovered with frequencies 2, 2, 1, 4 in [4,14].
    std::vector<topk::doc_id> d{4, 6, 1, 1, 7, 2, 2, 7, 7, 3, 8, 5, 7, 1};
    auto wt = wavelet_tree::build(d, 8);
    tracked_intervals t{{4, 14}, {4, 6}, {12, 14}};
    std::map<topk::doc_id, std::uint64_t> expect{{1, 2}, {2, 2}, {5, 1}, {7, 4}};
    CHECK(naive_uncovered(d, t) == expect);
    CHECK(collect_dfs(wt, t, 0) == expect);
    CHECK(collect_greedy(wt, t, 0) == expect);

    // Greedy visits by decreasing [l,r] length, so leaves come out by frequency.
    std::vector<std::uint64_t> order;
    wt.restricted_greedy(t, [] { return std::uint64_t{0}; }, [&](const doc_frequency& c) { order.push_back(c.freq); });
    CHECK(std::is_sorted(order.rbegin(), order.rend()));

    // With threshold 1 the frequency-1 document cannot be reported.
    auto pruned = collect_greedy(wt, t, 1);
    CHECK(pruned == std::map<topk::doc_id, std::uint64_t>{{1, 2}, {2, 2}, {7, 4}});
    CHECK(collect_dfs(wt, t, 1) == pruned);
}

TEST_CASE("access, doc_freq and project agree with the array on random D") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 20; ++round) {
        auto d = std::uniform_int_distribution<topk::doc_id>(1, 64)(rng);
        auto n = std::uniform_int_distribution<std::uint64_t>(1, 10000)(rng);
        std::vector<topk::doc_id> docs(n);
        for (auto& x : docs) x = std::uniform_int_distribution<topk::doc_id>(1, d)(rng);
        auto wt = wavelet_tree::build(docs, d);
        std::uniform_int_distribution<std::uint64_t> pos(1, n);
        std::uniform_int_distribution<topk::doc_id> sym(1, d);
        for (int probe = 0; probe < 200; ++probe) {
            std::uint64_t i = pos(rng), a = pos(rng), b = pos(rng);
            if (a > b) std::swap(a, b);
            REQUIRE(wt.access(i) == docs[i - 1]);
            topk::doc_id doc = sym(rng);
            std::uint64_t count = 0;
            for (std::uint64_t p = a; p <= b; ++p) count += docs[p - 1] == doc;
            REQUIRE(wt.doc_freq(doc, a, b) == count);
            if (!wt.at(wt.root()).is_leaf()) {
                auto [l, r] = wt.project(wt.root(), {a, b});
                const auto& root = wt.at(wt.root());
                topk::doc_id mid = root.lo + (root.hi - root.lo) / 2;
                std::uint64_t zeros_before = 0, zeros_in = 0;
                for (std::uint64_t p = 1; p < a; ++p) zeros_before += docs[p - 1] <= mid;
                for (std::uint64_t p = a; p <= b; ++p) zeros_in += docs[p - 1] <= mid;
                REQUIRE(l.size() == zeros_in);
                REQUIRE(r.size() == (b - a + 1) - zeros_in);
                if (!l.empty()) REQUIRE(l.lo == zeros_before + 1);
                if (!r.empty()) REQUIRE(r.lo == (a - 1 - zeros_before) + 1);
            }
        }
    }
}

TEST_CASE("greedy_topk matches naive counting; restricted traversals agree") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 200; ++round) {
        auto d = std::uniform_int_distribution<topk::doc_id>(1, 20)(rng);
        auto n = std::uniform_int_distribution<std::uint64_t>(1, 300)(rng);
        std::vector<topk::doc_id> docs(n);
        for (auto& x : docs) x = std::uniform_int_distribution<topk::doc_id>(1, d)(rng);
        auto wt = wavelet_tree::build(docs, d);
        std::uniform_int_distribution<std::uint64_t> pos(1, n);
        std::uint64_t l = pos(rng), r = pos(rng);
        if (l > r) std::swap(l, r);
        for (std::uint64_t k : {1u, 2u, 3u, 5u, 50u}) {
            auto expect = oracle::topk(oracle::range_counts(docs, d, l, r), k);
            REQUIRE(wt.greedy_topk({l, r}, k) == to_lib(expect));
        }
        // Random covered middle part.
        std::uint64_t a = std::uniform_int_distribution<std::uint64_t>(l, r)(rng);
        std::uint64_t b = std::uniform_int_distribution<std::uint64_t>(a, r)(rng);
        tracked_intervals t{{l, r}, {l, a - 1}, {b + 1, r}};
        auto naive = naive_uncovered(docs, t);
        REQUIRE(collect_dfs(wt, t, 0) == naive);
        REQUIRE(collect_greedy(wt, t, 0) == naive);
        std::uint64_t threshold = std::uniform_int_distribution<std::uint64_t>(0, 6)(rng);
        auto g = collect_greedy(wt, t, threshold);
        REQUIRE(g == collect_dfs(wt, t, threshold));
        for (const auto& [doc, f] : naive) {
            if (f > threshold) REQUIRE(g.count(doc) == 1);
        }
        for (const auto& [doc, f] : g) REQUIRE(f == wt.doc_freq(doc, l, r));
    }
}

TEST_CASE("serialization round trip") {
    auto wt = wavelet_tree::build(worked_d, 3);
    topk::byte_writer w;
    wt.serialize(w);
    topk::byte_reader r(w.bytes());
    CHECK(wavelet_tree::load(r) == wt);
    CHECK(r.at_end());
}
