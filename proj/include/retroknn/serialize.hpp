#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "retroknn/error.hpp"

namespace retroknn {

// Little-endian binary IO for the RK?? artifact files. Byte order is packed
// explicitly so the formats do not depend on host endianness.
class BinaryWriter {
public:
    explicit BinaryWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
        if (!out_) raise(ErrorCode::io, "cannot open for writing: " + path.string());
        path_ = path.string();
    }

    void write_magic(const char magic[4]) { put(magic, 4); }
    void write_u8(uint8_t v) { put(&v, 1); }

    void write_u32(uint32_t v) {
        unsigned char b[4];
        for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        put(b, 4);
    }

    void write_u64(uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        put(b, 8);
    }

    void write_f32(float v) {
        uint32_t bits;
        std::memcpy(&bits, &v, 4);
        write_u32(bits);
    }

    void write_f64(double v) {
        uint64_t bits;
        std::memcpy(&bits, &v, 8);
        write_u64(bits);
    }

    void write_f32_array(std::span<const float> v) {
        for (float x : v) write_f32(x);
    }
    void write_f64_array(std::span<const double> v) {
        for (double x : v) write_f64(x);
    }
    void write_u32_array(std::span<const uint32_t> v) {
        for (uint32_t x : v) write_u32(x);
    }
    void write_u8_array(std::span<const uint8_t> v) { put(v.data(), v.size()); }

    void finish() {
        out_.flush();
        if (!out_) raise(ErrorCode::io, "write failed: " + path_);
    }

private:
    void put(const void* p, size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
        if (!out_) raise(ErrorCode::io, "write failed: " + path_);
    }

    std::ofstream out_;
    std::string path_;
};

class BinaryReader {
public:
    explicit BinaryReader(const std::filesystem::path& path) : in_(path, std::ios::binary) {
        if (!in_) raise(ErrorCode::io, "cannot open for reading: " + path.string());
        path_ = path.string();
    }

    void expect_magic(const char magic[4]) {
        char got[4];
        get(got, 4);
        if (std::memcmp(got, magic, 4) != 0)
            raise(ErrorCode::format, path_ + ": bad magic, expected " + std::string(magic, 4));
    }

    uint8_t read_u8() {
        unsigned char b;
        get(&b, 1);
        return b;
    }

    uint32_t read_u32() {
        unsigned char b[4];
        get(b, 4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
        return v;
    }

    uint64_t read_u64() {
        unsigned char b[8];
        get(b, 8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
        return v;
    }

    float read_f32() {
        uint32_t bits = read_u32();
        float v;
        std::memcpy(&v, &bits, 4);
        return v;
    }

    double read_f64() {
        uint64_t bits = read_u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }

    std::vector<float> read_f32_array(size_t n) {
        std::vector<float> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = read_f32();
        return v;
    }

    std::vector<double> read_f64_array(size_t n) {
        std::vector<double> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = read_f64();
        return v;
    }

    std::vector<uint32_t> read_u32_array(size_t n) {
        std::vector<uint32_t> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = read_u32();
        return v;
    }

    std::vector<uint8_t> read_u8_array(size_t n) {
        std::vector<uint8_t> v(n);
        if (n > 0) get(v.data(), n);
        return v;
    }

    void expect_eof() {
        in_.peek();
        if (!in_.eof()) raise(ErrorCode::format, path_ + ": trailing bytes after payload");
    }

private:
    void get(void* p, size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (static_cast<size_t>(in_.gcount()) != n)
            raise(ErrorCode::format, path_ + ": truncated file");
    }

    std::ifstream in_;
    std::string path_;
};

}  // namespace retroknn
