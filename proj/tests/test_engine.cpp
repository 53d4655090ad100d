#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "topk/engine.hpp"

using topk::candidate_heap;
using topk::doc_frequency;
using topk::interval;
using topk::strategy;
using topk::topk_index;

namespace {

topk::index_params params(std::uint64_t g_prime, std::uint64_t k_max = 16,
                          topk::sgst_variant v = topk::sgst_variant::light) {
    topk::index_params p;
    p.sampling.g_prime = g_prime;
    p.sampling.k_max = k_max;
    p.sampling.variant = v;
    return p;
}

const std::vector<std::string> worked{"abab", "abba", "bab"};

std::vector<std::uint64_t> freqs(const std::vector<doc_frequency>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& c : v) out.push_back(c.freq);
    return out;
}

}  // namespace

TEST_CASE("kstar") {
    CHECK(topk::kstar(1) == 1);
    CHECK(topk::kstar(3) == 4);
    CHECK(topk::kstar(10) == 16);
    CHECK(topk::kstar(16) == 16);
    CHECK_THROWS_AS(topk::kstar(0), topk::error);
}

TEST_CASE("strategy and variant names") {
    CHECK(topk::parse_strategy("dfs") == strategy::dfs);
    try {
        topk::parse_strategy("quantile");
        FAIL("expected UnknownStrategy");
    } catch (const topk::error& e) {
        CHECK(e.code() == topk::errc::unknown_strategy);
    }
    CHECK(topk::parse_variant("xlight") == topk::sgst_variant::xlight);
    CHECK_THROWS_AS(topk::parse_variant("heavy"), topk::error);
}

TEST_CASE("heap offers") {
    candidate_heap h(2);
    h.offer(1, 5);
    CHECK(h.threshold() == 0);
    h.offer(2, 3);
    CHECK(h.ranked() == std::vector<doc_frequency>{{1, 5}, {2, 3}});
    CHECK(h.top() == doc_frequency{2, 3});
    CHECK(h.threshold() == 3);

    candidate_heap full(2);
    full.offer(3, 2);
    full.offer(4, 6);
    full.offer(7, 4);
    CHECK(full.ranked() == std::vector<doc_frequency>{{4, 6}, {7, 4}});
    full.offer(8, 4);  // ties do not replace
    CHECK(full.ranked() == std::vector<doc_frequency>{{4, 6}, {7, 4}});

    candidate_heap upd(3);
    upd.offer(1, 5);
    upd.offer(2, 6);
    upd.offer(3, 7);
    CHECK(upd.top().doc == 1);
    upd.offer(1, 9);
    CHECK(upd.ranked() == std::vector<doc_frequency>{{1, 9}, {3, 7}, {2, 6}});
    CHECK(upd.top() == doc_frequency{2, 6});
    CHECK(upd.size() == 3);
    CHECK(upd.offers() == 4);
}

TEST_CASE("heap threshold never decreases under traversal-style offers") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(1, 6)(rng);
        candidate_heap h(k);
        std::vector<std::uint64_t> truth(30, 0);
        std::uint64_t last = 0;
        for (int step = 0; step < 60; ++step) {
            auto doc = std::uniform_int_distribution<topk::doc_id>(1, 29)(rng);
            // Frequencies only grow for a given document, as exact totals do.
            truth[doc] += std::uniform_int_distribution<std::uint64_t>(0, 3)(rng);
            if (truth[doc] == 0) continue;
            h.offer(doc, truth[doc]);
            REQUIRE(h.threshold() >= last);
            REQUIRE(h.size() <= k);
            last = h.threshold();
        }
    }
}

TEST_CASE("select_scan") {
    auto idx = topk_index::build(worked, params(400));
    candidate_heap h(1);
    h.offer(2, 1);
    topk::select_scan(idx.wavelet(), {5, 8}, {5, 8}, h);
    CHECK(h.ranked() == std::vector<doc_frequency>{{2, 1}});

    candidate_heap scan(1);
    topk::query_stats st;
    topk::select_scan(idx.wavelet(), {5, 8}, {}, scan, &st);
    CHECK(scan.ranked() == std::vector<doc_frequency>{{1, 2}});
    CHECK(st.positions_scanned == 4);
    CHECK_THROWS_AS(topk::select_scan(idx.wavelet(), {5, 8}, {4, 6}, scan), topk::error);
}

TEST_CASE("select_scan and restricted traversals correct the same seeded heap") {
    std::vector<topk::doc_id> d{4, 6, 1, 1, 7, 2, 2, 7, 7, 3, 8, 5, 7, 1};
    auto wt = topk::wavelet_tree::build(d, 8);
    interval range{4, 14}, covered{7, 11};
    for (std::uint64_t k : {1u, 2u, 3u, 4u, 6u}) {
        auto seed = wt.greedy_topk(covered, k);
        auto run = [&](strategy s) {
            candidate_heap h(k);
            for (const auto& c : seed) h.offer(c);
            auto threshold = [&] { return h.threshold(); };
            auto emit = [&](const doc_frequency& c) { h.offer(c); };
            topk::tracked_intervals t{range, {4, 6}, {12, 14}};
            if (s == strategy::greedy) wt.restricted_greedy(t, threshold, emit);
            if (s == strategy::dfs) wt.restricted_dfs(t, threshold, emit);
            if (s == strategy::select) topk::select_scan(wt, range, covered, h);
            std::vector<std::uint64_t> out;
            for (const auto& c : h.ranked()) out.push_back(wt.doc_freq(c.doc, range.lo, range.hi));
            std::sort(out.rbegin(), out.rend());
            return out;
        };
        auto expect = oracle::freq_multiset(oracle::topk(oracle::range_counts(d, 8, 4, 14), k));
        CHECK(run(strategy::select) == expect);
        CHECK(run(strategy::greedy) == expect);
        CHECK(run(strategy::dfs) == expect);
    }
}

TEST_CASE("worked corpus queries") {
    for (std::uint64_t g : {1u, 2u, 7u, 400u}) {
        for (auto v : {topk::sgst_variant::light, topk::sgst_variant::xlight}) {
            auto idx = topk_index::build(worked, params(g, 16, v));
            for (auto s : {strategy::greedy, strategy::dfs, strategy::select}) {
                for (bool use : {true, false}) {
                    CAPTURE(g);
                    CAPTURE(topk::to_string(s));
                    CAPTURE(use);
                    CHECK(idx.query("ab", 1, s, use).docs == std::vector<doc_frequency>{{1, 2}});
                    auto b2 = idx.query("b", 2, s, use).docs;
                    REQUIRE(b2.size() == 2);
                    CHECK(b2[0].freq == 2);
                    CHECK(b2[1].freq == 2);
                    // All three documents tie; SELECT keeps whichever two it meets first.
                    if (s != strategy::select)
                        CHECK(b2 == std::vector<doc_frequency>{{1, 2}, {2, 2}});
                    CHECK(idx.query("zz", 3, s, use).docs.empty());
                    CHECK(idx.query("a", 10, s, use).docs ==
                          std::vector<doc_frequency>{{1, 2}, {2, 2}, {3, 1}});
                }
            }
        }
    }
}

TEST_CASE("query validates its arguments") {
    auto idx = topk_index::build(worked, params(2));
    CHECK_THROWS_AS(idx.query("", 1), topk::error);
    CHECK_THROWS_AS(idx.query("a", 0), topk::error);
    CHECK_THROWS_AS(topk_index::build(std::vector<std::string>{}, params(2)), topk::error);
    CHECK_THROWS_AS(topk_index::build(worked, params(0)), topk::error);
}

TEST_CASE("queries match the naive oracle on random corpora") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 25; ++round) {
        auto docs = oracle::random_docs(rng, 10, 500, "abc");
        std::uint64_t g = std::array<std::uint64_t, 4>{1, 2, 3, 7}[round % 4];
        auto idx = topk_index::build(docs, params(g, 4, round % 2 ? topk::sgst_variant::xlight : topk::sgst_variant::light));
        for (const auto& p : oracle::occurring_patterns(docs, 4)) {
            auto counts = oracle::doc_counts(docs, p);
            for (std::uint64_t k : {1u, 2u, 3u, 5u, 10u}) {
                auto expect = oracle::freq_multiset(oracle::topk(counts, k));
                std::uint64_t scanned = 0;
                for (auto s : {strategy::select, strategy::greedy, strategy::dfs}) {
                    topk::query_stats st;
                    auto res = idx.query(p, k, s, true, &st);
                    REQUIRE(freqs(res.docs) == expect);
                    for (const auto& c : res.docs) REQUIRE(c.freq == counts[c.doc]);
                    REQUIRE(std::is_sorted(res.docs.begin(), res.docs.end(), topk::ranks_before));
                    REQUIRE(st.threshold_decreases == 0);
                    if (s == strategy::select) scanned = st.positions_scanned;
                    if (st.locus_found) {
                        REQUIRE(st.docs_emitted <= scanned);
                        REQUIRE(st.range.contains(st.locus));
                    }
                }
            }
        }
    }
}

TEST_CASE("plain Greedy breaks ties toward lower document ids") {
    auto idx = topk_index::build(std::vector<std::string>{"xa", "ya", "za", "aa"}, params(1, 4));
    for (auto s : {strategy::greedy, strategy::dfs}) {
        CHECK(idx.query("a", 1, s, false).docs == std::vector<doc_frequency>{{4, 2}});
        CHECK(idx.query("a", 2, s, false).docs == std::vector<doc_frequency>{{4, 2}, {1, 1}});
    }
    // The corrected paths only promise the frequency multiset on ties.
    for (auto s : {strategy::greedy, strategy::dfs, strategy::select})
        CHECK(freqs(idx.query("a", 2, s).docs) == std::vector<std::uint64_t>{2, 1});
}
