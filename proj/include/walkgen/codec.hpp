#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walkgen/ast.hpp"
#include "walkgen/interpreter.hpp"

namespace walkgen {

// Fixed-width bit string; bit 0 is the leftmost (most significant) position
// of the rendered form.
class BitString {
public:
    BitString() = default;
    explicit BitString(int width);
    static BitString from_string(const std::string& bits);

    int width() const { return width_; }
    bool get(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[static_cast<std::size_t>(i) >> 6] |= mask;
        else
            words_[static_cast<std::size_t>(i) >> 6] &= ~mask;
    }
    void flip(int i) { words_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }

    // Field access: w <= 64 bits starting at `offset`, most significant first.
    std::uint64_t field(int offset, int w) const;
    void set_field(int offset, int w, std::uint64_t value);

    int hamming(const BitString& o) const;
    std::string to_string() const;

    bool operator==(const BitString& o) const {
        return width_ == o.width_ && words_ == o.words_;
    }

private:
    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

// Binary-reflected Gray code over w-bit fields.
std::uint64_t gray_encode_value(std::uint64_t n);
std::uint64_t gray_decode_value(std::uint64_t g);

// Throws std::out_of_range when n does not fit in w bits.
BitString gray_encode(std::uint64_t n, int w);
std::uint64_t gray_decode(const BitString& b);

struct FieldLayout {
    int width = 0;
    std::int64_t origin = 0;   // own-scaled domain minimum
    std::uint64_t span = 0;    // max - min in own-scaled units
};

// Bit layout of a whole input vector: one Gray-coded offset-binary field per
// variable, concatenated in declaration order. int32 fields are 32 bits wide;
// fixed-real fields use the narrowest width covering the scaled span.
struct CodecLayout {
    std::vector<FieldLayout> fields;
    int total_width = 0;

    static CodecLayout for_variables(const std::vector<VariableDomain>& vars);
};

BitString encode_input(const InputVector& v, const CodecLayout& layout);

// Total: any bit string decodes; field values beyond the domain span clamp
// to the domain maximum.
InputVector decode_input(const BitString& b, const CodecLayout& layout);

// All single-bit flips of b, the i-th differing from b exactly at bit i.
std::vector<BitString> neighbors(const BitString& b);

}  // namespace walkgen
