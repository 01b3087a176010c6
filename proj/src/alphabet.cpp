#include "sfxtbl/alphabet.hpp"

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

Alphabet::Alphabet(std::string symbols, std::string name)
    : symbols_(std::move(symbols)), name_(std::move(name)) {
    if (symbols_.size() < 2) {
        throw Error("alphabet \"" + name_ + "\" needs at least 2 symbols");
    }
    ranks_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto c = static_cast<unsigned char>(symbols_[i]);
        if (ranks_[c] != -1) {
            throw Error("alphabet \"" + name_ + "\" repeats symbol '" +
                        std::string(1, symbols_[i]) + "'");
        }
        ranks_[c] = static_cast<int>(i);
    }
}

const Alphabet& Alphabet::dna() {
    static const Alphabet instance("ACGT", "dna");
    return instance;
}

const Alphabet& Alphabet::latin() {
    static const Alphabet instance("ABCDEFGHIJKLMNOPQRSTUVWXYZ", "latin");
    return instance;
}

}  // namespace sfxtbl
