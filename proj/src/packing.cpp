#include "sfxtbl/packing.hpp"

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

PackedSequence::PackedSequence(std::vector<std::uint8_t> codes, std::size_t length,
                               const Alphabet& alphabet)
    : codes_(std::move(codes)), length_(length), alphabet_(&alphabet) {
    if (alphabet.size() > 4) throw NotPackable(alphabet.size());
    if (codes_.size() != packed_size_bytes(length_)) {
        throw Error("packed byte count " + std::to_string(codes_.size()) +
                    " does not match length " + std::to_string(length_));
    }
}

// Reverse listing order reproduces the paper's DNA table: T=00 G=01 C=10 A=11.
std::uint8_t code_for(const Alphabet& alphabet, char symbol) {
    if (alphabet.size() > 4) throw NotPackable(alphabet.size());
    return static_cast<std::uint8_t>(alphabet.size() - 1 -
                                     static_cast<std::size_t>(alphabet.rank_of(symbol)));
}

char symbol_for(const Alphabet& alphabet, std::uint8_t code) {
    if (alphabet.size() > 4) throw NotPackable(alphabet.size());
    if (code >= alphabet.size()) {
        throw Error("code " + std::to_string(code) + " out of range for alphabet \"" +
                    alphabet.name() + "\"");
    }
    return alphabet.symbol_at(alphabet.size() - 1 - code);
}

PackedSequence pack(const Sequence& s) {
    const Alphabet& alphabet = s.alphabet();
    if (alphabet.size() > 4) throw NotPackable(alphabet.size());
    std::vector<std::uint8_t> codes(PackedSequence::packed_size_bytes(s.length()), 0);
    for (std::size_t i = 0; i < s.length(); ++i) {
        const unsigned shift = 6u - 2u * (i % 4);
        codes[i / 4] |= static_cast<std::uint8_t>(code_for(alphabet, s.at(i)) << shift);
    }
    return PackedSequence(std::move(codes), s.length(), alphabet);
}

Sequence unpack(const PackedSequence& p) {
    std::string text;
    text.reserve(p.length());
    for (std::size_t i = 0; i < p.length(); ++i) {
        text.push_back(symbol_for(p.alphabet(), p.code_at(i)));
    }
    return Sequence(std::move(text), p.alphabet());
}

}  // namespace sfxtbl
