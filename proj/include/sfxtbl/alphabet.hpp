#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace sfxtbl {

// Ordered symbol set. Listing order defines the collation order; for the DNA
// alphabet that is A < C < G < T.
class Alphabet {
public:
    Alphabet(std::string symbols, std::string name);

    static const Alphabet& dna();    // "ACGT"
    static const Alphabet& latin();  // "A".."Z", handy for non-DNA subjects

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbols() const { return symbols_; }
    const std::string& name() const { return name_; }

    // Collation rank of a symbol, -1 when the symbol is not in the alphabet.
    int rank_of(char c) const { return ranks_[static_cast<unsigned char>(c)]; }
    bool contains(char c) const { return rank_of(c) >= 0; }
    char symbol_at(std::size_t rank) const { return symbols_[rank]; }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::string name_;
    std::array<int, 256> ranks_;
};

}  // namespace sfxtbl
