#include "walkgen/codec.hpp"

#include <bit>
#include <stdexcept>

namespace walkgen {

BitString::BitString(int width)
    : width_(width), words_(static_cast<std::size_t>((width + 63) / 64), 0) {}

BitString BitString::from_string(const std::string& bits) {
    BitString b(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') b.set(static_cast<int>(i), true);
    return b;
}

std::uint64_t BitString::field(int offset, int w) const {
    std::uint64_t v = 0;
    for (int j = 0; j < w; ++j) v = (v << 1) | (get(offset + j) ? 1u : 0u);
    return v;
}

void BitString::set_field(int offset, int w, std::uint64_t value) {
    for (int j = 0; j < w; ++j)
        set(offset + j, (value >> (w - 1 - j)) & 1u);
}

int BitString::hamming(const BitString& o) const {
    int n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        n += std::popcount(words_[i] ^ o.words_[i]);
    return n;
}

std::string BitString::to_string() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
        if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::uint64_t gray_encode_value(std::uint64_t n) { return n ^ (n >> 1); }

std::uint64_t gray_decode_value(std::uint64_t g) {
    g ^= g >> 32;
    g ^= g >> 16;
    g ^= g >> 8;
    g ^= g >> 4;
    g ^= g >> 2;
    g ^= g >> 1;
    return g;
}

BitString gray_encode(std::uint64_t n, int w) {
    if (w < 64 && n >> w)
        throw std::out_of_range("value does not fit in " + std::to_string(w) + " bits");
    BitString b(w);
    b.set_field(0, w, gray_encode_value(n));
    return b;
}

std::uint64_t gray_decode(const BitString& b) {
    return gray_decode_value(b.field(0, b.width()));
}

CodecLayout CodecLayout::for_variables(const std::vector<VariableDomain>& vars) {
    CodecLayout layout;
    for (const auto& v : vars) {
        FieldLayout f;
        f.origin = v.lo();
        f.span = v.span();
        // Narrowest width covering span + 1 distinct values.
        f.width = v.kind == ValueKind::int32 ? 32 : std::bit_width(f.span);
        if (f.width == 0) f.width = 1;
        layout.total_width += f.width;
        layout.fields.push_back(f);
    }
    return layout;
}

BitString encode_input(const InputVector& v, const CodecLayout& layout) {
    BitString b(layout.total_width);
    int offset = 0;
    for (std::size_t i = 0; i < layout.fields.size(); ++i) {
        const FieldLayout& f = layout.fields[i];
        std::uint64_t u = static_cast<std::uint64_t>(v.values[i]) -
                          static_cast<std::uint64_t>(f.origin);
        b.set_field(offset, f.width, gray_encode_value(u));
        offset += f.width;
    }
    return b;
}

InputVector decode_input(const BitString& b, const CodecLayout& layout) {
    InputVector v;
    v.values.reserve(layout.fields.size());
    int offset = 0;
    for (const FieldLayout& f : layout.fields) {
        std::uint64_t u = gray_decode_value(b.field(offset, f.width));
        if (u > f.span) u = f.span;
        v.values.push_back(static_cast<std::int64_t>(static_cast<std::uint64_t>(f.origin) + u));
        offset += f.width;
    }
    return v;
}

std::vector<BitString> neighbors(const BitString& b) {
    std::vector<BitString> out;
    out.reserve(static_cast<std::size_t>(b.width()));
    for (int i = 0; i < b.width(); ++i) {
        out.push_back(b);
        out.back().flip(i);
    }
    return out;
}

}  // namespace walkgen
