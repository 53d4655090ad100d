#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topk/error.hpp"

namespace topk {

// Little-endian byte sink used by every persisted structure.
class byte_writer {
public:
    void put_u8(std::uint8_t v) { m_buf.push_back(v); }
    void put_u16(std::uint16_t v) {
        put_u8(static_cast<std::uint8_t>(v));
        put_u8(static_cast<std::uint8_t>(v >> 8));
    }
    void put_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) put_u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void put_bytes(std::span<const std::uint8_t> bytes) { m_buf.insert(m_buf.end(), bytes.begin(), bytes.end()); }
    void put_bytes(std::string_view bytes) { m_buf.insert(m_buf.end(), bytes.begin(), bytes.end()); }
    void put_u64_array(std::span<const std::uint64_t> values) {
        put_u64(values.size());
        for (auto v : values) put_u64(v);
    }

    const std::vector<std::uint8_t>& bytes() const noexcept { return m_buf; }
    std::vector<std::uint8_t> release() noexcept { return std::move(m_buf); }
    std::size_t size() const noexcept { return m_buf.size(); }

private:
    std::vector<std::uint8_t> m_buf;
};

class byte_reader {
public:
    explicit byte_reader(std::span<const std::uint8_t> data) : m_data(data) {}

    std::uint8_t get_u8() {
        need(1);
        return m_data[m_pos++];
    }
    std::uint16_t get_u16() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(m_data[m_pos] | (m_data[m_pos + 1] << 8));
        m_pos += 2;
        return v;
    }
    std::uint64_t get_u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(m_data[m_pos + i]) << (8 * i);
        m_pos += 8;
        return v;
    }
    std::span<const std::uint8_t> get_bytes(std::uint64_t len) {
        need(len);
        auto out = m_data.subspan(m_pos, len);
        m_pos += len;
        return out;
    }
    std::vector<std::uint64_t> get_u64_array() {
        std::uint64_t len = get_u64();
        if (len > remaining() / 8) fail(errc::format_error, "array length exceeds payload");
        std::vector<std::uint64_t> out(len);
        for (auto& v : out) v = get_u64();
        return out;
    }

    std::uint64_t remaining() const noexcept { return m_data.size() - m_pos; }
    bool at_end() const noexcept { return m_pos == m_data.size(); }

private:
    void need(std::uint64_t len) const {
        if (len > remaining()) fail(errc::format_error, "truncated payload");
    }

    std::span<const std::uint8_t> m_data;
    std::size_t m_pos = 0;
};

}  // namespace topk
