#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sfxtbl {

// Base class for every expected failure in this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RejectedSymbol : Error {
    RejectedSymbol(std::size_t position_, char symbol_)
        : Error("rejected symbol '" + std::string(1, symbol_) + "' at position " +
                std::to_string(position_)),
          position(position_),
          symbol(symbol_) {}
    std::size_t position;
    char symbol;
};

struct EmptySequence : Error {
    EmptySequence() : Error("sequence is empty") {}
};

struct NotPackable : Error {
    explicit NotPackable(std::size_t alphabet_size)
        : Error("alphabet of " + std::to_string(alphabet_size) +
                " symbols does not fit 2-bit codes") {}
};

struct BadRange : Error {
    using Error::Error;
};

struct EmptyText : Error {
    EmptyText() : Error("text is empty") {}
};

struct PatternTooLong : Error {
    PatternTooLong(std::size_t pattern_length_, std::size_t truncation_)
        : Error("pattern of length " + std::to_string(pattern_length_) +
                " exceeds truncation depth " + std::to_string(truncation_)),
          pattern_length(pattern_length_),
          truncation(truncation_) {}
    std::size_t pattern_length;
    std::size_t truncation;
};

struct WrongLayout : Error {
    using Error::Error;
};

struct BadThreshold : Error {
    explicit BadThreshold(std::uint64_t value)
        : Error("split threshold must be at least 1, got " + std::to_string(value)) {}
};

struct CorruptFile : Error {
    explicit CorruptFile(const std::string& reason)
        : Error("corrupt store file: " + reason), reason(reason) {}
    std::string reason;
};

struct VersionMismatch : Error {
    explicit VersionMismatch(const std::string& found)
        : Error("unsupported store file version \"" + found + "\"") {}
};

struct EmptyInput : Error {
    EmptyInput() : Error("no input values") {}
};

struct MalformedRow : Error {
    MalformedRow(std::size_t line_no_, const std::string& detail)
        : Error("malformed CSV row at line " + std::to_string(line_no_) + ": " + detail),
          line_no(line_no_) {}
    std::size_t line_no;
};

}  // namespace sfxtbl
