#pragma once

#include <cstdint>
#include <vector>

#include "sfxtbl/sequence.hpp"

namespace sfxtbl {

// 2-bit packed storage form: four symbols per byte, first symbol in the two
// most significant bits, final partial byte zero-padded in its low bits.
// Codes run in reverse listing order, which for DNA reproduces the mapping
// T=00, G=01, C=10, A=11. Code order is therefore NOT collation order and
// packed bytes must never be used as sort keys.
class PackedSequence {
public:
    PackedSequence(std::vector<std::uint8_t> codes, std::size_t length, const Alphabet& alphabet);

    static constexpr std::uint64_t packed_size_bytes(std::uint64_t symbol_count) {
        return (symbol_count + 3) / 4;
    }

    const std::vector<std::uint8_t>& codes() const { return codes_; }
    std::size_t length() const { return length_; }
    const Alphabet& alphabet() const { return *alphabet_; }

    // 2-bit code of symbol i.
    std::uint8_t code_at(std::size_t i) const {
        const unsigned shift = 6u - 2u * (i % 4);
        return static_cast<std::uint8_t>((codes_[i / 4] >> shift) & 0x3u);
    }

private:
    std::vector<std::uint8_t> codes_;
    std::size_t length_;
    const Alphabet* alphabet_;
};

std::uint8_t code_for(const Alphabet& alphabet, char symbol);
char symbol_for(const Alphabet& alphabet, std::uint8_t code);

// Throws NotPackable when the alphabet has more than 4 symbols.
PackedSequence pack(const Sequence& s);
Sequence unpack(const PackedSequence& p);

}  // namespace sfxtbl
