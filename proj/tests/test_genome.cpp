#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sfxtbl/errors.hpp"
#include "sfxtbl/packing.hpp"
#include "sfxtbl/random.hpp"
#include "sfxtbl/sequence.hpp"

using namespace sfxtbl;

TEST_CASE("dna alphabet ranks follow listing order") {
    const Alphabet& dna = Alphabet::dna();
    CHECK(dna.size() == 4);
    CHECK(dna.symbols() == "ACGT");
    CHECK(dna.rank_of('A') == 0);
    CHECK(dna.rank_of('C') == 1);
    CHECK(dna.rank_of('G') == 2);
    CHECK(dna.rank_of('T') == 3);
    CHECK(dna.rank_of('N') == -1);
    CHECK(dna.contains('G'));
    CHECK(!dna.contains('g'));
    CHECK(dna.symbol_at(2) == 'G');
}

TEST_CASE("latin alphabet covers A through Z") {
    const Alphabet& latin = Alphabet::latin();
    CHECK(latin.size() == 26);
    CHECK(latin.rank_of('A') == 0);
    CHECK(latin.rank_of('Z') == 25);
}

TEST_CASE("alphabet construction rejects degenerate symbol sets") {
    CHECK_THROWS_AS(Alphabet("A", "single"), Error);
    CHECK_THROWS_AS(Alphabet("", "none"), Error);
    CHECK_THROWS_AS(Alphabet("ACCA", "dupes"), Error);
    CHECK_NOTHROW(Alphabet("01", "binary"));
}

TEST_CASE("sequence validates symbols and reports the offender") {
    CHECK_NOTHROW(Sequence("ACGT", Alphabet::dna()));
    CHECK_NOTHROW(Sequence("", Alphabet::dna()));
    try {
        Sequence s("ACXGT", Alphabet::dna());
        FAIL("expected RejectedSymbol");
    } catch (const RejectedSymbol& e) {
        CHECK(e.position == 2);
        CHECK(e.symbol == 'X');
    }
}

TEST_CASE("collation orders by rank with a proper prefix first") {
    const Alphabet& dna = Alphabet::dna();
    CHECK(collate("A", "C", dna) < 0);
    CHECK(collate("T", "G", dna) > 0);
    CHECK(collate("ACG", "ACT", dna) < 0);
    CHECK(collate("AC", "ACG", dna) < 0);  // prefix sorts first
    CHECK(collate("ACG", "AC", dna) > 0);
    CHECK(collate("ACGT", "ACGT", dna) == 0);
    CHECK(collate("", "A", dna) < 0);
    CHECK(collate("", "", dna) == 0);
}

TEST_CASE("collation agrees with rank-wise lexicographic comparison") {
    const Alphabet& dna = Alphabet::dna();
    Prng rng(11);
    auto ranks = [&](const Sequence& s) {
        std::vector<int> out;
        for (char c : s.view()) out.push_back(dna.rank_of(c));
        return out;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        const Sequence a = random_pattern(rng, 1, 12, dna);
        const Sequence b = random_pattern(rng, 1, 12, dna);
        const std::vector<int> ra = ranks(a);
        const std::vector<int> rb = ranks(b);
        const int got = collate(a, b);
        if (ra == rb) {
            CHECK(got == 0);
        } else {
            CHECK((got < 0) == (ra < rb));
        }
    }
}

TEST_CASE("normalization uppercases, drops whitespace, applies the policy") {
    const Alphabet& dna = Alphabet::dna();
    const Sequence s = normalize_and_validate("a c\ng\tt\r\n", dna, NormalizePolicy::strip());
    CHECK(s.text() == "ACGT");

    const Sequence stripped = normalize_and_validate("ACNNGT", dna, NormalizePolicy::strip());
    CHECK(stripped.text() == "ACGT");

    const Sequence swapped = normalize_and_validate("ACNGT", dna, NormalizePolicy::substitute('A'));
    CHECK(swapped.text() == "ACAGT");

    try {
        normalize_and_validate("AC nGT", dna, NormalizePolicy::reject());
        FAIL("expected RejectedSymbol");
    } catch (const RejectedSymbol& e) {
        CHECK(e.position == 2);  // index in the normalized output
        CHECK(e.symbol == 'N');
    }

    CHECK_THROWS_AS(normalize_and_validate("  \n ", dna, NormalizePolicy::strip()), EmptySequence);
    CHECK_THROWS_AS(normalize_and_validate("NNN", dna, NormalizePolicy::strip()), EmptySequence);
    CHECK_THROWS_AS(normalize_and_validate("ACGT", dna, NormalizePolicy::substitute('N')), Error);
}

TEST_CASE("fasta reading skips headers and joins records") {
    const Alphabet& dna = Alphabet::dna();
    std::istringstream in(">chr1 test\nACGT\nacg\n>chr2\nTT\n");
    const Sequence s = read_fasta(in, dna, NormalizePolicy::strip());
    CHECK(s.text() == "ACGTACGTT");

    std::istringstream raw("acgt\ntgca");
    CHECK(read_fasta(raw, dna, NormalizePolicy::strip()).text() == "ACGTTGCA");

    std::istringstream only_headers(">a\n>b\n");
    CHECK_THROWS_AS(read_fasta(only_headers, dna, NormalizePolicy::strip()), EmptySequence);
}

TEST_CASE("two bit codes run in reverse listing order") {
    const Alphabet& dna = Alphabet::dna();
    CHECK(code_for(dna, 'T') == 0);
    CHECK(code_for(dna, 'G') == 1);
    CHECK(code_for(dna, 'C') == 2);
    CHECK(code_for(dna, 'A') == 3);
    CHECK(symbol_for(dna, 0) == 'T');
    CHECK(symbol_for(dna, 3) == 'A');
    // Code order is not collation order: A collates first but codes last.
    CHECK(dna.rank_of('A') == 0);
    CHECK(code_for(dna, 'A') == 3);
}

TEST_CASE("packing lays symbols most significant first with zero padding") {
    const Alphabet& dna = Alphabet::dna();
    const PackedSequence p = pack(Sequence("TGCA", dna));
    REQUIRE(p.codes().size() == 1);
    CHECK(p.codes()[0] == 0x1B);  // 00 01 10 11

    const PackedSequence a = pack(Sequence("A", dna));
    REQUIRE(a.codes().size() == 1);
    CHECK(a.codes()[0] == 0xC0);  // 11 padded with zeros

    const PackedSequence five = pack(Sequence("AAAAA", dna));
    REQUIRE(five.codes().size() == 2);
    CHECK(five.codes()[0] == 0xFF);
    CHECK(five.codes()[1] == 0xC0);
}

TEST_CASE("packed size arithmetic") {
    CHECK(PackedSequence::packed_size_bytes(0) == 0);
    CHECK(PackedSequence::packed_size_bytes(1) == 1);
    CHECK(PackedSequence::packed_size_bytes(4) == 1);
    CHECK(PackedSequence::packed_size_bytes(5) == 2);
    CHECK(PackedSequence::packed_size_bytes(3200000000ull) == 800000000ull);
}

TEST_CASE("packing round trips") {
    const Alphabet& dna = Alphabet::dna();
    Prng rng(21);
    for (int iter = 0; iter < 300; ++iter) {
        const Sequence s = random_pattern(rng, 1, 257, dna);
        const PackedSequence p = pack(s);
        CHECK(p.length() == s.length());
        CHECK(p.codes().size() == PackedSequence::packed_size_bytes(s.length()));
        CHECK(unpack(p).text() == s.text());
    }
}

TEST_CASE("packing rejects alphabets wider than four symbols") {
    CHECK_THROWS_AS(pack(Sequence("HELLO", Alphabet::latin())), NotPackable);
    CHECK_THROWS_AS(code_for(Alphabet::latin(), 'A'), NotPackable);
    const Alphabet binary("01", "binary");
    CHECK(code_for(binary, '0') == 1);
    CHECK(code_for(binary, '1') == 0);
    CHECK(unpack(pack(Sequence("0110", binary))).text() == "0110");
}
