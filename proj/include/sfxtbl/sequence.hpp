#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sfxtbl/alphabet.hpp"

namespace sfxtbl {

// Validated symbol string over an alphabet. Immutable after construction.
// The alphabet is referenced, not owned, and must outlive the sequence.
class Sequence {
public:
    // Throws RejectedSymbol when a character is not in the alphabet.
    // Empty sequences are allowed here; the normalization entry points
    // below are the ones that reject empty results.
    Sequence(std::string text, const Alphabet& alphabet);

    std::size_t length() const { return text_.size(); }
    bool empty() const { return text_.empty(); }
    char at(std::size_t i) const { return text_[i]; }
    const std::string& text() const { return text_; }
    std::string_view view() const { return text_; }
    const Alphabet& alphabet() const { return *alphabet_; }

    bool operator==(const Sequence& other) const { return text_ == other.text_; }

private:
    std::string text_;
    const Alphabet* alphabet_;
};

// Three-way compare under alphabet collation; a proper prefix sorts first.
int collate(std::string_view a, std::string_view b, const Alphabet& alphabet);
int collate(const Sequence& a, const Sequence& b);

enum class UnknownSymbolPolicy { reject, strip, substitute };

struct NormalizePolicy {
    UnknownSymbolPolicy kind = UnknownSymbolPolicy::strip;
    char replacement = 'A';  // consulted only for substitute

    static NormalizePolicy reject() { return {UnknownSymbolPolicy::reject, 'A'}; }
    static NormalizePolicy strip() { return {UnknownSymbolPolicy::strip, 'A'}; }
    static NormalizePolicy substitute(char replacement) {
        return {UnknownSymbolPolicy::substitute, replacement};
    }
};

// Uppercases, drops whitespace, applies the unknown-symbol policy.
// Throws RejectedSymbol (policy reject; position = index in the output
// stream the symbol would have taken) or EmptySequence.
Sequence normalize_and_validate(std::string_view raw, const Alphabet& alphabet,
                                const NormalizePolicy& policy);

// Reads FASTA ('>' header lines ignored, records concatenated) or headerless
// raw text, then normalizes as above.
Sequence read_fasta(std::istream& in, const Alphabet& alphabet, const NormalizePolicy& policy);

}  // namespace sfxtbl
