#include "topk/corpus.hpp"

#include <array>

namespace topk {

namespace {

std::uint32_t count_symbols(std::string_view text) {
    std::array<bool, 256> seen{};
    for (char c : text) seen[static_cast<unsigned char>(c)] = true;
    seen[static_cast<unsigned char>(sentinel)] = false;
    std::uint32_t sigma = 0;
    for (bool s : seen) sigma += s;
    return sigma;
}

}  // namespace

corpus corpus::ingest(const std::vector<std::string>& documents, std::uint64_t rank_step) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < documents.size(); ++i) {
        if (documents[i].empty()) fail(errc::empty_document, "document " + std::to_string(i + 1) + " is empty");
        if (documents[i].find(sentinel) != std::string::npos)
            fail(errc::sentinel_in_document, "document " + std::to_string(i + 1) + " contains the reserved byte 0x00");
        total += documents[i].size() + 1;
    }
    corpus c;
    c.m_text.reserve(total);
    std::vector<bool> ends(total, false);
    for (const auto& doc : documents) {
        c.m_text += doc;
        c.m_text += sentinel;
        ends[c.m_text.size() - 1] = true;
    }
    c.m_boundaries = rank_bit_vector(ends, rank_step);
    c.m_sigma = count_symbols(c.m_text);
    return c;
}

doc_id corpus::doc_of_position(std::uint64_t pos) const {
    if (pos == 0 || pos > size()) fail(errc::out_of_range, "text position " + std::to_string(pos));
    return static_cast<doc_id>(1 + m_boundaries.rank1(pos - 1));
}

std::string_view corpus::document(doc_id id) const {
    if (id == 0 || id > doc_count()) fail(errc::out_of_range, "document id " + std::to_string(id));
    std::uint64_t begin = id == 1 ? 1 : m_boundaries.select(true, id - 1) + 1;
    std::uint64_t end = m_boundaries.select(true, id);  // sentinel position
    return std::string_view(m_text).substr(begin - 1, end - begin);
}

std::vector<std::string> corpus::documents() const {
    std::vector<std::string> out;
    out.reserve(doc_count());
    for (doc_id i = 1; i <= doc_count(); ++i) out.emplace_back(document(i));
    return out;
}

std::string corpus::printable_text() const {
    std::string out = m_text;
    for (auto& c : out)
        if (c == sentinel) c = '$';
    return out;
}

void corpus::serialize(byte_writer& out) const {
    out.put_u64(m_text.size());
    out.put_bytes(m_text);
    m_boundaries.serialize(out);
}

corpus corpus::load(byte_reader& in) {
    corpus c;
    std::uint64_t len = in.get_u64();
    auto bytes = in.get_bytes(len);
    c.m_text.assign(bytes.begin(), bytes.end());
    c.m_boundaries = rank_bit_vector::load(in);
    if (c.m_boundaries.size() != c.m_text.size()) fail(errc::format_error, "boundary bitmap length differs from text");
    for (std::uint64_t p = 1; p <= c.m_text.size(); ++p)
        if ((c.m_text[p - 1] == sentinel) != c.m_boundaries[p])
            fail(errc::format_error, "boundary bitmap does not match sentinels");
    c.m_sigma = count_symbols(c.m_text);
    return c;
}

}  // namespace topk
