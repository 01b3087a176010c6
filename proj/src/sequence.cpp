#include "sfxtbl/sequence.hpp"

#include <cctype>
#include <istream>

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

Sequence::Sequence(std::string text, const Alphabet& alphabet)
    : text_(std::move(text)), alphabet_(&alphabet) {
    for (std::size_t i = 0; i < text_.size(); ++i) {
        if (!alphabet_->contains(text_[i])) {
            throw RejectedSymbol(i, text_[i]);
        }
    }
}

int collate(std::string_view a, std::string_view b, const Alphabet& alphabet) {
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) {
        const int ra = alphabet.rank_of(a[i]);
        const int rb = alphabet.rank_of(b[i]);
        if (ra != rb) return ra < rb ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

int collate(const Sequence& a, const Sequence& b) {
    return collate(a.view(), b.view(), a.alphabet());
}

Sequence normalize_and_validate(std::string_view raw, const Alphabet& alphabet,
                                const NormalizePolicy& policy) {
    if (policy.kind == UnknownSymbolPolicy::substitute && !alphabet.contains(policy.replacement)) {
        throw Error("substitute symbol '" + std::string(1, policy.replacement) +
                    "' is not in alphabet \"" + alphabet.name() + "\"");
    }
    std::string out;
    out.reserve(raw.size());
    for (const char raw_c : raw) {
        const auto u = static_cast<unsigned char>(raw_c);
        if (std::isspace(u)) continue;
        const char c = static_cast<char>(std::toupper(u));
        if (alphabet.contains(c)) {
            out.push_back(c);
            continue;
        }
        switch (policy.kind) {
            case UnknownSymbolPolicy::reject:
                throw RejectedSymbol(out.size(), c);
            case UnknownSymbolPolicy::strip:
                break;
            case UnknownSymbolPolicy::substitute:
                out.push_back(policy.replacement);
                break;
        }
    }
    if (out.empty()) throw EmptySequence();
    return Sequence(std::move(out), alphabet);
}

Sequence read_fasta(std::istream& in, const Alphabet& alphabet, const NormalizePolicy& policy) {
    std::string joined;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '>') continue;
        joined += line;
        joined.push_back('\n');
    }
    return normalize_and_validate(joined, alphabet, policy);
}

}  // namespace sfxtbl
