#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>

#include "sfxtbl/tablet.hpp"

namespace sfxtbl {

// Store file layout (multi-byte integers little-endian, row keys raw bytes):
//   header:  magic "SFXTBL01", layout u8, truncation u32, subject_length u64,
//            tablet_count u32
//   tablet:  row_count u32, rows as [key_len u16][key][position u64]
//            [text_len u16][suffix_text]
//   footer:  total row count u64, XOR checksum of all preceding bytes u8
inline constexpr std::array<char, 8> kStoreMagic = {'S', 'F', 'X', 'T', 'B', 'L', '0', '1'};

void persist(const TabletStore& store, std::ostream& out);
void persist(const TabletStore& store, const std::filesystem::path& path);

// Validates magic/version, per-row key derivation, global key order, row
// counts, and the checksum; throws CorruptFile or VersionMismatch. The split
// threshold is not part of the format and is reconstructed as the largest
// tablet row count.
TabletStore load(std::istream& in);
TabletStore load(const std::filesystem::path& path);

// Equality over what the file format captures: layout, truncation, subject
// length, tablet boundaries, and all rows (the split threshold is excluded).
bool structurally_equal(const TabletStore& a, const TabletStore& b);

}  // namespace sfxtbl
