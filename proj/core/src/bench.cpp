#include "topk/bench.hpp"

#include <chrono>
#include <iomanip>
#include <random>

namespace topk {

std::vector<std::string> sample_patterns(const corpus& c, std::uint64_t count, std::uint64_t len, std::uint64_t seed) {
    std::vector<std::string> out;
    if (count == 0) return out;
    if (len == 0) fail(errc::invalid_parameter, "pattern length must be at least 1");
    std::string_view text = c.text();
    bool any = false;
    for (doc_id i = 1; i <= c.doc_count() && !any; ++i) any = c.document(i).size() >= len;
    if (!any) fail(errc::invalid_parameter, "no document is long enough for the requested pattern length");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pos(0, text.size() - 1);
    out.reserve(count);
    while (out.size() < count) {
        std::uint64_t p = pos(rng);
        if (p + len > text.size()) continue;
        std::string_view w = text.substr(p, len);
        if (w.find(sentinel) != std::string_view::npos) continue;
        out.emplace_back(w);
    }
    return out;
}

bench_report run_bench(const topk_index& idx, const bench_options& opts) {
    bench_report report;
    report.patterns = sample_patterns(idx.text(), opts.num_queries, opts.pattern_len, opts.seed);
    report.bits_per_symbol = idx.bits_per_symbol();
    report.tau_nodes = idx.sampled_tree().node_count();
    for (strategy s : opts.strategies) {
        strategy_report sr;
        sr.used = s;
        double micros = 0, scanned = 0, emitted = 0, offers = 0, visited = 0;
        for (const auto& p : report.patterns) {
            query_stats st;
            auto start = std::chrono::steady_clock::now();
            idx.query(p, opts.k, s, opts.use_sgst, &st);
            micros += std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
            scanned += static_cast<double>(st.positions_scanned);
            emitted += static_cast<double>(st.docs_emitted);
            offers += static_cast<double>(st.heap_offers);
            visited += static_cast<double>(st.nodes_visited);
            sr.loci_found += st.locus_found;
        }
        sr.queries = report.patterns.size();
        if (sr.queries > 0) {
            auto q = static_cast<double>(sr.queries);
            sr.mean_micros = micros / q;
            sr.mean_positions_scanned = scanned / q;
            sr.mean_docs_emitted = emitted / q;
            sr.mean_heap_offers = offers / q;
            sr.mean_nodes_visited = visited / q;
        }
        report.strategies.push_back(sr);
    }
    return report;
}

void bench_report::print(std::ostream& os) const {
    os << "queries: " << patterns.size() << "\n";
    os << "tau nodes: " << tau_nodes << "\n";
    os << "index bits/symbol: " << std::fixed << std::setprecision(3) << bits_per_symbol << "\n";
    if (patterns.empty()) return;
    os << "strategy\tus/query\tscanned\temitted\toffers\twt_nodes\tloci\n";
    for (const auto& s : strategies) {
        os << to_string(s.used) << '\t' << std::setprecision(3) << s.mean_micros << '\t' << s.mean_positions_scanned
           << '\t' << s.mean_docs_emitted << '\t' << s.mean_heap_offers << '\t' << s.mean_nodes_visited << '\t'
           << s.loci_found << "\n";
    }
}

std::vector<std::string> synthetic_collection(std::uint64_t total_len, std::uint64_t docs, std::string_view alphabet,
                                              std::uint64_t seed) {
    if (docs == 0 || alphabet.empty() || total_len < docs)
        fail(errc::invalid_parameter, "synthetic collection needs docs >= 1, a non-empty alphabet and total_len >= docs");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
    std::vector<std::string> out(docs);
    for (std::uint64_t i = 0; i < docs; ++i) {
        std::uint64_t len = total_len / docs + (i < total_len % docs ? 1 : 0);
        out[i].reserve(len);
        for (std::uint64_t j = 0; j < len; ++j) out[i] += alphabet[sym(rng)];
    }
    return out;
}

}  // namespace topk
