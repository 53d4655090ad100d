#include "topk/container.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>

namespace topk::container {

namespace {

void put_section(byte_writer& out, section id, const byte_writer& payload) {
    out.put_u64(static_cast<std::uint64_t>(id));
    out.put_u64(payload.size());
    out.put_bytes(payload.bytes());
}

header parse_header(byte_reader& in) {
    auto m = in.get_bytes(4);
    if (!std::equal(m.begin(), m.end(), std::begin(magic))) fail(errc::format_error, "not a TKDI index file");
    std::uint16_t v = in.get_u16();
    if (v != version)
        fail(errc::version_mismatch, "index format version " + std::to_string(v) + ", expected " + std::to_string(version));
    header h;
    h.n = in.get_u64();
    h.d = in.get_u64();
    h.sigma = in.get_u64();
    h.g_prime = in.get_u64();
    h.k_max = in.get_u64();
    h.variant = in.get_u64();
    h.rank_step = in.get_u64();
    return h;
}

}  // namespace

std::vector<std::uint8_t> to_bytes(const topk_index& idx) {
    const auto& p = idx.params().sampling;
    byte_writer out;
    out.put_bytes(std::string_view(magic, 4));
    out.put_u16(version);
    out.put_u64(idx.text().size());
    out.put_u64(idx.text().doc_count());
    out.put_u64(idx.text().sigma());
    out.put_u64(p.g_prime);
    out.put_u64(p.k_max);
    out.put_u64(static_cast<std::uint64_t>(p.variant));
    out.put_u64(p.rank_step);

    byte_writer payload;
    idx.text().serialize(payload);
    put_section(out, section::corpus, payload);
    payload = {};
    idx.wavelet().serialize(payload);
    put_section(out, section::wavelet, payload);
    payload = {};
    idx.sampled_tree().serialize(payload);
    put_section(out, section::sgst, payload);
    if (idx.params().keep_suffix_array) {
        payload = {};
        payload.put_u64_array(idx.suffixes().sa());
        put_section(out, section::suffix_array, payload);
    }
    return out.release();
}

header read_header(std::span<const std::uint8_t> bytes) {
    byte_reader in(bytes);
    return parse_header(in);
}

topk_index from_bytes(std::span<const std::uint8_t> bytes) {
    byte_reader in(bytes);
    header h = parse_header(in);
    std::optional<corpus> c;
    std::optional<wavelet_tree> wt;
    std::optional<sgst> tree;
    std::vector<std::uint64_t> sa;
    bool has_sa = false;
    while (!in.at_end()) {
        std::uint64_t id = in.get_u64();
        std::uint64_t len = in.get_u64();
        byte_reader body(in.get_bytes(len));
        switch (static_cast<section>(id)) {
            case section::corpus: c = corpus::load(body); break;
            case section::wavelet: wt = wavelet_tree::load(body); break;
            case section::sgst: tree = sgst::load(body); break;
            case section::suffix_array:
                sa = body.get_u64_array();
                has_sa = true;
                break;
            default: continue;  // unknown section
        }
        if (!body.at_end()) fail(errc::format_error, "section " + std::to_string(id) + " has trailing bytes");
    }
    if (!c || !wt || !tree) fail(errc::format_error, "index is missing a required section");
    const auto& p = tree->params();
    header expect{c->size(), c->doc_count(), c->sigma(), p.g_prime, p.k_max,
                  static_cast<std::uint64_t>(p.variant), p.rank_step};
    if (!(expect == h)) fail(errc::format_error, "header disagrees with section contents");
    if (has_sa && sa.size() != c->size()) fail(errc::format_error, "suffix array length differs from text");
    return topk_index::assemble(std::move(*c), std::move(*wt), std::move(*tree), std::move(sa), has_sa);
}

void save(const topk_index& idx, const std::filesystem::path& path) {
    auto bytes = to_bytes(idx);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::io_error, "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(errc::io_error, "failed writing " + path.string());
}

topk_index load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_bytes(bytes);
}

}  // namespace topk::container
