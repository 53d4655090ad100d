#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "topk/engine.hpp"

namespace topk {

struct bench_options {
    std::uint64_t num_queries = 1000;
    std::uint64_t pattern_len = 3;
    std::uint64_t k = 10;
    std::vector<strategy> strategies{strategy::greedy, strategy::dfs, strategy::select};
    std::uint64_t seed = 1;
    bool use_sgst = true;
};

struct strategy_report {
    strategy used = strategy::greedy;
    std::uint64_t queries = 0;
    double mean_micros = 0;
    double mean_positions_scanned = 0;
    double mean_docs_emitted = 0;
    double mean_heap_offers = 0;
    double mean_nodes_visited = 0;
    std::uint64_t loci_found = 0;
};

struct bench_report {
    std::vector<std::string> patterns;
    std::vector<strategy_report> strategies;
    double bits_per_symbol = 0;
    std::uint64_t tau_nodes = 0;

    void print(std::ostream& os) const;
};

/// Substrings of length `len` taken at uniformly random text positions;
/// windows that reach a sentinel are resampled.
std::vector<std::string> sample_patterns(const corpus& c, std::uint64_t count, std::uint64_t len, std::uint64_t seed);

bench_report run_bench(const topk_index& idx, const bench_options& opts);

/// Random text over `alphabet`, cut into `docs` documents of roughly equal length.
std::vector<std::string> synthetic_collection(std::uint64_t total_len, std::uint64_t docs, std::string_view alphabet,
                                              std::uint64_t seed);

}  // namespace topk
