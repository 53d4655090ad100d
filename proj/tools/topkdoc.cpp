// topkdoc: build, query and benchmark top-k document indexes.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "topk/bench.hpp"
#include "topk/container.hpp"
#include "topk/document_io.hpp"
#include "topk/engine.hpp"

namespace {

struct build_args {
    std::string input;
    std::string output;
    std::uint64_t g_prime = 400;
    std::uint64_t k_max = 16;
    std::string variant = "light";
    std::uint64_t rank_step = 64;
    bool line_docs = false;
    bool keep_sa = false;
};

struct query_args {
    std::string index;
    std::string pattern;
    std::uint64_t k = 10;
    std::string strategy = "greedy";
    bool no_sgst = false;
};

struct bench_args {
    std::string index;
    std::uint64_t num_queries = 1000;
    std::uint64_t pattern_len = 3;
    std::uint64_t k = 10;
    std::vector<std::string> strategies{"greedy", "dfs", "select"};
    std::uint64_t seed = 1;
    bool no_sgst = false;
};

int cmd_build(const build_args& a) {
    topk::index_params params;
    params.sampling.g_prime = a.g_prime;
    params.sampling.k_max = a.k_max;
    params.sampling.variant = topk::parse_variant(a.variant);
    params.sampling.rank_step = a.rank_step;
    params.keep_suffix_array = a.keep_sa;
    params.sampling.validate();

    auto docs = a.line_docs ? topk::read_document_lines(a.input) : topk::read_document_directory(a.input);
    auto idx = topk::topk_index::build(docs, params);
    topk::container::save(idx, a.output);

    const auto& tree = idx.sampled_tree();
    std::cout << "n: " << idx.text().size() << "\n"
              << "d: " << idx.text().doc_count() << "\n"
              << "sigma: " << idx.text().sigma() << "\n"
              << "g': " << params.sampling.g_prime << "\n"
              << "K_max: " << params.sampling.k_max << "\n"
              << "variant: " << topk::to_string(params.sampling.variant) << "\n"
              << "tau nodes: " << tree.node_count() << "\n";
    for (std::uint64_t k = 2; k <= params.sampling.k_max; k *= 2)
        std::cout << "tau_" << k << " nodes: " << tree.node_count(k) << "\n";
    std::cout << "bits/symbol: " << idx.bits_per_symbol() << "\n";
    if (tree.empty()) std::cerr << "warning: g' leaves fewer than two sampled leaves; queries use plain Greedy\n";
    return 0;
}

int cmd_query(const query_args& a) {
    auto s = topk::parse_strategy(a.strategy);
    auto idx = topk::container::load(a.index);
    auto result = idx.query(a.pattern, a.k, s, !a.no_sgst);
    for (const auto& c : result.docs) std::cout << c.doc << '\t' << c.freq << '\n';
    return 0;
}

int cmd_bench(const bench_args& a) {
    topk::bench_options opts;
    opts.num_queries = a.num_queries;
    opts.pattern_len = a.pattern_len;
    opts.k = a.k;
    opts.seed = a.seed;
    opts.use_sgst = !a.no_sgst;
    opts.strategies.clear();
    for (const auto& name : a.strategies) {
        std::stringstream ss(name);
        for (std::string part; std::getline(ss, part, ',');)
            if (!part.empty()) opts.strategies.push_back(topk::parse_strategy(part));
    }
    auto idx = topk::container::load(a.index);
    topk::run_bench(idx, opts).print(std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Top-k most frequent document retrieval over substring patterns"};
    app.require_subcommand(1);

    build_args ba;
    auto* build = app.add_subcommand("build", "Index a document collection");
    build->add_option("input", ba.input, "Directory with one file per document (or a file with --line-docs)")->required();
    build->add_option("output", ba.output, "Index file to write")->required();
    build->add_option("--gprime", ba.g_prime, "Leaf sampling parameter g'")->capture_default_str();
    build->add_option("--kmax", ba.k_max, "Largest precomputed k (power of two)")->capture_default_str();
    build->add_option("--variant", ba.variant, "Candidate storage: light|xlight")
        ->check(CLI::IsMember({"light", "xlight"}))
        ->capture_default_str();
    build->add_option("--rank-step", ba.rank_step, "Rank directory sample step in bits")->capture_default_str();
    build->add_flag("--line-docs", ba.line_docs, "Treat each input line as a document");
    build->add_flag("--keep-sa", ba.keep_sa, "Store the suffix array in the index");

    query_args qa;
    auto* query = app.add_subcommand("query", "Report the k documents where a pattern occurs most often");
    query->add_option("index", qa.index, "Index file")->required();
    query->add_option("pattern", qa.pattern, "Pattern")->required();
    query->add_option("k", qa.k, "Number of documents")->required()->check(CLI::PositiveNumber);
    query->add_option("--strategy", qa.strategy, "greedy|dfs|select")
        ->check(CLI::IsMember({"greedy", "dfs", "select"}))
        ->capture_default_str();
    query->add_flag("--no-sgst", qa.no_sgst, "Skip the sampled suffix tree");

    bench_args xa;
    auto* bench = app.add_subcommand("bench", "Time random substring queries");
    bench->add_option("index", xa.index, "Index file")->required();
    bench->add_option("--num-queries", xa.num_queries, "Number of sampled patterns")->capture_default_str();
    bench->add_option("--pattern-len", xa.pattern_len, "Pattern length")->capture_default_str();
    bench->add_option("--k", xa.k, "k")->check(CLI::PositiveNumber)->capture_default_str();
    bench->add_option("--strategies", xa.strategies, "Comma-separated strategies")->delimiter(',');
    bench->add_option("--seed", xa.seed, "Sampling seed")->capture_default_str();
    bench->add_flag("--no-sgst", xa.no_sgst, "Skip the sampled suffix tree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*build) return cmd_build(ba);
        if (*query) return cmd_query(qa);
        if (*bench) return cmd_bench(xa);
    } catch (const std::exception& e) {
        std::cerr << "topkdoc: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
