#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "murmurkit/errors.hpp"

namespace murmur {

// CRC-32 (IEEE, reflected, poly 0xEDB88320), same convention as zlib.
std::uint32_t crc32(const std::uint8_t* data, std::size_t len, std::uint32_t seed = 0);

// Little-endian serialization into a growable byte buffer. All of the
// toolkit's binary file formats go through these two classes so the
// on-disk layout stays platform independent.
class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u16(std::uint16_t v);
    void u32(std::uint32_t v);
    void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
    void u64(std::uint64_t v);
    void f32(float v);
    void f64(double v);
    void bytes(const void* p, std::size_t n);
    void magic(const char tag[4]) { bytes(tag, 4); }

    const std::vector<std::uint8_t>& buffer() const { return buf_; }
    std::size_t size() const { return buf_.size(); }

    // Appends the CRC of everything written so far.
    void crc_footer();

private:
    std::vector<std::uint8_t> buf_;
};

class ByteReader {
public:
    explicit ByteReader(std::vector<std::uint8_t> data) : buf_(std::move(data)) {}

    std::uint8_t u8();
    std::uint16_t u16();
    std::uint32_t u32();
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
    std::uint64_t u64();
    float f32();
    double f64();
    void bytes(void* out, std::size_t n);
    void expect_magic(const char tag[4], const std::string& what);

    // Verifies the trailing CRC against everything before it.
    void check_crc_footer(const std::string& what);

    std::size_t remaining() const { return buf_.size() - pos_; }
    std::size_t pos() const { return pos_; }

private:
    void need(std::size_t n);
    std::vector<std::uint8_t> buf_;
    std::size_t pos_ = 0;
};

// Whole-file helpers.
std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes);

} // namespace murmur
