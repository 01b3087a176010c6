#include "sfxtbl/store_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>

#include "sfxtbl/errors.hpp"

namespace sfxtbl {

namespace {

constexpr std::size_t kU16Max = 0xFFFF;

// Forwards bytes to the stream while folding them into the running checksum.
class ChecksumWriter {
public:
    explicit ChecksumWriter(std::ostream& out) : out_(out) {}

    void bytes(const void* data, std::size_t len) {
        const char* p = static_cast<const char*>(data);
        for (std::size_t i = 0; i < len; ++i) sum_ ^= static_cast<std::uint8_t>(p[i]);
        out_.write(p, static_cast<std::streamsize>(len));
    }
    void u8(std::uint8_t v) { bytes(&v, 1); }
    void u16(std::uint16_t v) { le(v, 2); }
    void u32(std::uint32_t v) { le(v, 4); }
    void u64(std::uint64_t v) { le(v, 8); }

    std::uint8_t sum() const { return sum_; }

private:
    void le(std::uint64_t v, int width) {
        char buf[8];
        for (int i = 0; i < width; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
        bytes(buf, static_cast<std::size_t>(width));
    }

    std::ostream& out_;
    std::uint8_t sum_ = 0;
};

// Bounds-checked little-endian reads over a fully buffered file.
class Cursor {
public:
    explicit Cursor(const std::string& buf) : buf_(buf) {}

    std::uint8_t u8() { return take(1)[0]; }
    std::uint16_t u16() { return static_cast<std::uint16_t>(le(2)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
    std::uint64_t u64() { return le(8); }
    std::string_view raw(std::size_t len) {
        const std::uint8_t* p = take(len);
        return {reinterpret_cast<const char*>(p), len};
    }
    std::size_t offset() const { return off_; }
    std::size_t remaining() const { return buf_.size() - off_; }

private:
    const std::uint8_t* take(std::size_t len) {
        if (len > remaining()) throw CorruptFile("unexpected end of file");
        const auto* p = reinterpret_cast<const std::uint8_t*>(buf_.data()) + off_;
        off_ += len;
        return p;
    }
    std::uint64_t le(std::size_t width) {
        const std::uint8_t* p = take(width);
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
        return v;
    }

    const std::string& buf_;
    std::size_t off_ = 0;
};

}  // namespace

void persist(const TabletStore& store, std::ostream& out) {
    ChecksumWriter w(out);
    w.bytes(kStoreMagic.data(), kStoreMagic.size());
    w.u8(static_cast<std::uint8_t>(store.layout()));
    w.u32(store.truncation());
    w.u64(store.subject_length());
    w.u32(static_cast<std::uint32_t>(store.tablets().size()));
    for (const Tablet& tablet : store.tablets()) {
        w.u32(static_cast<std::uint32_t>(tablet.descriptor().row_count));
        for (const SuffixRow& row : tablet.rows()) {
            if (row.key.bytes.size() > kU16Max) {
                throw BadRange("row key does not fit the 16-bit length field");
            }
            if (row.suffix_text.size() > kU16Max) {
                throw BadRange("suffix text does not fit the 16-bit length field");
            }
            w.u16(static_cast<std::uint16_t>(row.key.bytes.size()));
            w.bytes(row.key.bytes.data(), row.key.bytes.size());
            w.u64(row.position);
            w.u16(static_cast<std::uint16_t>(row.suffix_text.size()));
            w.bytes(row.suffix_text.data(), row.suffix_text.size());
        }
    }
    w.u64(store.total_rows());
    const std::uint8_t sum = w.sum();
    out.put(static_cast<char>(sum));
    if (!out) throw Error("failed to write store file");
}

void persist(const TabletStore& store, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open store file for writing: " + path.string());
    persist(store, out);
}

TabletStore load(std::istream& in) {
    std::string buf(std::istreambuf_iterator<char>(in), {});
    if (buf.size() < kStoreMagic.size() + 1) throw CorruptFile("unexpected end of file");
    const std::string_view magic(buf.data(), kStoreMagic.size());
    if (magic != std::string_view(kStoreMagic.data(), kStoreMagic.size())) {
        if (magic.substr(0, 6) == "SFXTBL") throw VersionMismatch(std::string(magic));
        throw CorruptFile("bad magic");
    }
    std::uint8_t sum = 0;
    for (std::size_t i = 0; i + 1 < buf.size(); ++i) sum ^= static_cast<std::uint8_t>(buf[i]);
    if (sum != static_cast<std::uint8_t>(buf.back())) throw CorruptFile("checksum mismatch");

    Cursor cur(buf);
    cur.raw(kStoreMagic.size());
    const std::uint8_t layout_byte = cur.u8();
    if (layout_byte > 1) throw CorruptFile("unknown layout");
    const auto layout = static_cast<StoreLayout>(layout_byte);
    const std::uint32_t truncation = cur.u32();
    const std::uint64_t subject_length = cur.u64();
    const std::uint32_t tablet_count = cur.u32();

    std::vector<std::vector<SuffixRow>> tablet_rows(tablet_count);
    std::uint64_t total = 0;
    const SuffixRow* prev = nullptr;
    for (std::uint32_t t = 0; t < tablet_count; ++t) {
        const std::uint32_t row_count = cur.u32();
        if (row_count == 0) throw CorruptFile("empty tablet");
        tablet_rows[t].reserve(row_count);
        for (std::uint32_t r = 0; r < row_count; ++r) {
            SuffixRow row;
            const std::uint16_t key_len = cur.u16();
            const std::string_view key_bytes = cur.raw(key_len);
            row.key.bytes.assign(key_bytes.begin(), key_bytes.end());
            row.position = cur.u64();
            const std::uint16_t text_len = cur.u16();
            if (text_len > truncation) throw CorruptFile("suffix text longer than the truncation");
            row.suffix_text = std::string(cur.raw(text_len));
            if (row.position >= subject_length) {
                throw CorruptFile("row position outside the subject");
            }
            const RowKey expect = layout == StoreLayout::position_keyed
                                      ? position_row_key(row.position)
                                      : suffix_row_key(row.suffix_text, row.position);
            if (row.key != expect) throw CorruptFile("row key does not match its row");
            if (prev && !(prev->key < row.key)) throw CorruptFile("row keys out of order");
            tablet_rows[t].push_back(std::move(row));
            prev = &tablet_rows[t].back();
        }
        total += row_count;
    }
    if (cur.u64() != total) throw CorruptFile("row total mismatch");
    if (total != subject_length) throw CorruptFile("row count does not match the subject length");
    cur.u8();  // checksum byte, verified above
    if (cur.remaining() != 0) throw CorruptFile("trailing bytes");

    std::uint64_t threshold = 1;
    std::vector<Tablet> tablets;
    tablets.reserve(tablet_count);
    for (std::uint32_t t = 0; t < tablet_count; ++t) {
        threshold = std::max<std::uint64_t>(threshold, tablet_rows[t].size());
    }
    for (std::uint32_t t = 0; t < tablet_count; ++t) {
        TabletDescriptor descriptor;
        descriptor.tablet_id = t;
        descriptor.row_count = tablet_rows[t].size();
        if (t > 0) descriptor.range.start = tablet_rows[t].front().key;
        if (t + 1 < tablet_count) descriptor.range.end = tablet_rows[t + 1].front().key;
        tablets.emplace_back(std::move(descriptor), std::move(tablet_rows[t]));
    }
    return TabletStore(layout, truncation, subject_length, threshold, std::move(tablets));
}

TabletStore load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open store file: " + path.string());
    return load(in);
}

bool structurally_equal(const TabletStore& a, const TabletStore& b) {
    if (a.layout() != b.layout() || a.truncation() != b.truncation() ||
        a.subject_length() != b.subject_length() || a.tablets().size() != b.tablets().size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.tablets().size(); ++i) {
        const Tablet& ta = a.tablets()[i];
        const Tablet& tb = b.tablets()[i];
        if (ta.descriptor().tablet_id != tb.descriptor().tablet_id ||
            ta.descriptor().range != tb.descriptor().range ||
            ta.descriptor().row_count != tb.descriptor().row_count || ta.rows() != tb.rows()) {
            return false;
        }
    }
    return true;
}

}  // namespace sfxtbl
