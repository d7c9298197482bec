#include "allcnn/io.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>

namespace allcnn::io {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    ALLCNN_CHECK(in.good(), IoError, "cannot open file: ", path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ALLCNN_CHECK(!in.bad(), IoError, "read failed: ", path);
    return data;
}

void atomic_write_file(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        ALLCNN_CHECK(out.good(), IoError, "cannot open file for writing: ", tmp);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        ALLCNN_CHECK(out.good(), IoError, "write failed: ", tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        ALLCNN_THROW(IoError, "rename failed: ", tmp, " -> ", path, " (", ec.message(), ")");
    }
}

void ByteWriter::u16(uint16_t v) {
    u8(static_cast<uint8_t>(v & 0xff));
    u8(static_cast<uint8_t>(v >> 8));
}

void ByteWriter::u32(uint32_t v) {
    u8(static_cast<uint8_t>(v & 0xff));
    u8(static_cast<uint8_t>((v >> 8) & 0xff));
    u8(static_cast<uint8_t>((v >> 16) & 0xff));
    u8(static_cast<uint8_t>((v >> 24) & 0xff));
}

void ByteWriter::f32(float v) {
    uint32_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    u32(bits);
}

void ByteWriter::bytes(const void* p, size_t n) {
    buf_.append(static_cast<const char*>(p), n);
}

void ByteReader::require(size_t n) {
    ALLCNN_CHECK(pos_ + n <= size_, FormatError, "truncated file: ", source_);
}

uint8_t ByteReader::u8() {
    require(1);
    return p_[pos_++];
}

uint16_t ByteReader::u16() {
    require(2);
    uint16_t v = static_cast<uint16_t>(p_[pos_] | (p_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
}

uint32_t ByteReader::u32() {
    require(4);
    uint32_t v = static_cast<uint32_t>(p_[pos_]) | (static_cast<uint32_t>(p_[pos_ + 1]) << 8) |
                 (static_cast<uint32_t>(p_[pos_ + 2]) << 16) | (static_cast<uint32_t>(p_[pos_ + 3]) << 24);
    pos_ += 4;
    return v;
}

float ByteReader::f32() {
    uint32_t bits = u32();
    float v;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
}

void ByteReader::bytes(void* out, size_t n) {
    require(n);
    std::memcpy(out, p_ + pos_, n);
    pos_ += n;
}

std::string ByteReader::str(size_t n) {
    require(n);
    std::string s(reinterpret_cast<const char*>(p_ + pos_), n);
    pos_ += n;
    return s;
}

} // namespace allcnn::io
