// Copyright 2026-present the gazekit project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "gazekit/common.hpp"

namespace gazekit::io {

// All container formats are little-endian; values are byte-swapped on
// big-endian hosts so files are portable and byte-exact.

namespace detail {
template <typename T>
inline T to_le(T v) {
    if constexpr (std::endian::native == std::endian::big) {
        T out;
        auto* s = reinterpret_cast<const unsigned char*>(&v);
        auto* d = reinterpret_cast<unsigned char*>(&out);
        for (size_t i = 0; i < sizeof(T); ++i) d[i] = s[sizeof(T) - 1 - i];
        return out;
    }
    return v;
}
}  // namespace detail

/// Append-only byte buffer with typed little-endian writers.
class Writer {
public:
    void u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u32(uint32_t v) { raw(detail::to_le(v)); }
    void u64(uint64_t v) { raw(detail::to_le(v)); }
    void i32(int32_t v) { raw(detail::to_le(v)); }
    void f64(double v) {
        uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        u64(bits);
    }
    void bytes(const void* p, size_t n) {
        const char* c = static_cast<const char*>(p);
        buf_.insert(buf_.end(), c, c + n);
    }
    void str(const std::string& s) {
        u32(static_cast<uint32_t>(s.size()));
        bytes(s.data(), s.size());
    }

    const std::vector<char>& buffer() const { return buf_; }
    size_t size() const { return buf_.size(); }

    void save(const std::string& path) const {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        GZK_CHECK(f.good(), ErrorCode::IOFailure, "cannot open for write: " + path);
        f.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        f.flush();
        GZK_CHECK(f.good(), ErrorCode::IOFailure, "write failed: " + path);
    }

private:
    template <typename T>
    void raw(T v) {
        char tmp[sizeof(T)];
        std::memcpy(tmp, &v, sizeof(T));
        buf_.insert(buf_.end(), tmp, tmp + sizeof(T));
    }

    std::vector<char> buf_;
};

/// Bounds-checked reader over an in-memory buffer. Out-of-bounds reads
/// raise CorruptFile, which is how truncation is detected.
class Reader {
public:
    explicit Reader(std::vector<char> buf) : buf_(std::move(buf)) {}

    static Reader from_file(const std::string& path) {
        std::ifstream f(path, std::ios::binary | std::ios::ate);
        GZK_CHECK(f.good(), ErrorCode::IOFailure, "cannot open: " + path);
        const std::streamsize n = f.tellg();
        f.seekg(0);
        std::vector<char> buf(static_cast<size_t>(n));
        f.read(buf.data(), n);
        GZK_CHECK(f.good(), ErrorCode::IOFailure, "read failed: " + path);
        return Reader(std::move(buf));
    }

    uint8_t u8() { return static_cast<uint8_t>(take(1)[0]); }
    uint32_t u32() { return detail::to_le(raw<uint32_t>()); }
    uint64_t u64() { return detail::to_le(raw<uint64_t>()); }
    int32_t i32() { return detail::to_le(raw<int32_t>()); }
    double f64() {
        const uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }
    std::string str() {
        const uint32_t n = u32();
        const char* p = take(n);
        return std::string(p, p + n);
    }

    size_t remaining() const { return buf_.size() - pos_; }
    bool at_end() const { return pos_ == buf_.size(); }

private:
    template <typename T>
    T raw() {
        const char* p = take(sizeof(T));
        T v;
        std::memcpy(&v, p, sizeof(T));
        return v;
    }

    const char* take(size_t n) {
        GZK_CHECK(pos_ + n <= buf_.size(), ErrorCode::CorruptFile,
                  "unexpected end of data");
        const char* p = buf_.data() + pos_;
        pos_ += n;
        return p;
    }

    std::vector<char> buf_;
    size_t pos_ = 0;
};

}  // namespace gazekit::io
