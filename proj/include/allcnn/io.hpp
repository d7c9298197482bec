#pragma once

#include <cstdint>
#include <string>

#include "allcnn/error.hpp"

namespace allcnn::io {

std::string read_file(const std::string& path);

// Writes via a sibling temp file followed by rename, so a crash or error
// never leaves a partial file at `path`.
void atomic_write_file(const std::string& path, const std::string& bytes);

// Little-endian binary encoding, independent of host byte order.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u16(uint16_t v);
    void u32(uint32_t v);
    void f32(float v);
    void bytes(const void* p, size_t n);
    void str(const std::string& s) { bytes(s.data(), s.size()); }

    const std::string& buffer() const { return buf_; }
    std::string take() { return std::move(buf_); }

private:
    std::string buf_;
};

class ByteReader {
public:
    ByteReader(const void* data, size_t size, std::string source)
        : p_(static_cast<const uint8_t*>(data)), size_(size), source_(std::move(source)) {}
    explicit ByteReader(const std::string& data, std::string source = "<memory>")
        : ByteReader(data.data(), data.size(), std::move(source)) {}

    uint8_t u8();
    uint16_t u16();
    uint32_t u32();
    float f32();
    void bytes(void* out, size_t n);
    std::string str(size_t n);

    size_t remaining() const { return size_ - pos_; }
    bool at_end() const { return pos_ == size_; }
    const std::string& source() const { return source_; }

private:
    void require(size_t n);

    const uint8_t* p_;
    size_t size_;
    size_t pos_ = 0;
    std::string source_;
};

} // namespace allcnn::io
