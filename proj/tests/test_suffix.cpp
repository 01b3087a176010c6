#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <vector>

#include "sfxtbl/brute_force.hpp"
#include "sfxtbl/errors.hpp"
#include "sfxtbl/random.hpp"
#include "sfxtbl/suffix_array.hpp"

using namespace sfxtbl;

namespace {

Sequence seq(const std::string& s, const Alphabet& a = Alphabet::latin()) { return {s, a}; }

std::vector<std::uint64_t> order_vec(const SuffixArray& sa) {
    return {sa.order().begin(), sa.order().end()};
}

// Fundamental ordering invariant: suffixes non-decreasing under collation,
// ties strictly increasing by start position.
void check_sorted(const SuffixArray& sa) {
    const std::size_t n = sa.size();
    std::vector<bool> seen(n, false);
    for (std::uint64_t pos : sa.order()) {
        REQUIRE(pos < n);
        REQUIRE(!seen[static_cast<std::size_t>(pos)]);
        seen[static_cast<std::size_t>(pos)] = true;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const int c =
            collate(sa.suffix_at(i), sa.suffix_at(i + 1), sa.text().alphabet());
        if (c == 0) {
            CHECK(sa.order()[i] < sa.order()[i + 1]);
        } else {
            CHECK(c < 0);
        }
    }
}

std::uint64_t plain_probe_bound(std::size_t n) {
    return 2ull * std::bit_width(static_cast<std::uint64_t>(n));
}

std::uint64_t bucket_probe_bound(std::size_t width) {
    if (width == 0) return 1;
    return 2ull * std::bit_width(static_cast<std::uint64_t>(width)) + 1;
}

}  // namespace

TEST_CASE("brute force finds first and all occurrences") {
    const Sequence text = seq("MISSISSIPPI");
    const BruteForceResult first = brute_force_first(seq("ISS"), text);
    REQUIRE(first.position.has_value());
    CHECK(*first.position == 1);

    const SearchOutcome all = brute_force_all(seq("ISS"), text);
    CHECK(all.found);
    CHECK(all.all_positions == std::vector<std::uint64_t>{1, 4});
    CHECK(all.occurrence_count == 2);
    CHECK(*all.first_position == 1);

    CHECK(!brute_force_first(seq("MISSING"), text).position.has_value());
    CHECK(!brute_force_all(seq("ABC"), text).found);
}

TEST_CASE("brute force matches a suffix at the very end") {
    const SearchOutcome out = brute_force_all(seq("PPI"), seq("MISSISSIPPI"));
    CHECK(out.all_positions == std::vector<std::uint64_t>{8});
}

TEST_CASE("brute force with the empty pattern matches every position") {
    const SearchOutcome out = brute_force_all(seq(""), seq("ACGT", Alphabet::dna()));
    CHECK(out.found);
    CHECK(out.all_positions == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
    CHECK(out.occurrence_count == 5);
    CHECK(out.comparisons == 0);
    CHECK(*brute_force_first(seq(""), seq("ACGT", Alphabet::dna())).position == 0);
}

TEST_CASE("brute force comparison counting is exact on a crafted case") {
    // Each of the two alignments burns through all four characters.
    const SearchOutcome out = brute_force_all(seq("AAAB"), seq("AAAAA"));
    CHECK(!out.found);
    CHECK(out.comparisons == 8);
}

TEST_CASE("brute force comparisons never exceed the alignment bound") {
    Prng rng(5);
    const Alphabet& dna = Alphabet::dna();
    for (int iter = 0; iter < 3000; ++iter) {
        const Sequence text = random_pattern(rng, 1, 200, dna);
        const Sequence pattern = random_pattern(rng, 1, 12, dna);
        const SearchOutcome out = brute_force_all(pattern, text);
        const std::uint64_t k = pattern.length();
        const std::uint64_t n = text.length();
        if (k <= n) {
            CHECK(out.comparisons <= k * (n - k + 1));
        } else {
            CHECK(out.comparisons == 0);
            CHECK(!out.found);
        }
    }
}

TEST_CASE("suffix order of MISSISSIPPI") {
    const SuffixArray sa = build_suffix_array(seq("MISSISSIPPI"));
    const std::vector<std::uint64_t> want{10, 7, 4, 1, 0, 9, 8, 6, 3, 5, 2};
    CHECK(order_vec(sa) == want);
    CHECK(sa.size() == 11);
    CHECK(sa.suffix_at(0) == "I");
    CHECK(sa.suffix_at(10) == "SSISSIPPI");
    check_sorted(sa);
}

TEST_CASE("suffix array search bounds isolate the match run") {
    const SuffixArray sa = build_suffix_array(seq("MISSISSIPPI"));
    CHECK(sa_lower_bound(sa, seq("PI")) == 5);
    CHECK(sa_upper_bound(sa, seq("PI")) == 6);
    CHECK(sa_lower_bound(sa, seq("I")) == 0);
    CHECK(sa_upper_bound(sa, seq("I")) == 4);
    CHECK(sa_lower_bound(sa, seq("Z")) == 11);
    CHECK(sa_upper_bound(sa, seq("Z")) == 11);

    const SearchOutcome pi = sa_search(sa, seq("PI"));
    CHECK(pi.all_positions == std::vector<std::uint64_t>{9});
    const SearchOutcome i = sa_search(sa, seq("I"));
    CHECK(i.all_positions == std::vector<std::uint64_t>{1, 4, 7, 10});
    const SearchOutcome ssi = sa_search(sa, seq("SSI"));
    CHECK(ssi.all_positions == std::vector<std::uint64_t>{2, 5});
    const SearchOutcome whole = sa_search(sa, seq("MISSISSIPPI"));
    CHECK(whole.all_positions == std::vector<std::uint64_t>{0});
    CHECK(!sa_search(sa, seq("IPS")).found);
}

TEST_CASE("suffix array ties break by position") {
    const SuffixArray sa = build_suffix_array(seq("ABAB"));
    CHECK(order_vec(sa) == std::vector<std::uint64_t>{2, 0, 3, 1});
}

TEST_CASE("truncation collapses long suffixes") {
    const SuffixArray sa = build_suffix_array(seq("AAA"), 1);
    CHECK(order_vec(sa) == std::vector<std::uint64_t>{0, 1, 2});
    CHECK(sa.suffix_at(0) == "A");
    const SearchOutcome out = sa_search(sa, seq("A"));
    CHECK(out.all_positions == std::vector<std::uint64_t>{0, 1, 2});
    CHECK_THROWS_AS(sa_search(sa, seq("AA")), PatternTooLong);
    CHECK_THROWS_AS(sa_lower_bound(sa, seq("AA")), PatternTooLong);
}

TEST_CASE("empty text is rejected, empty pattern matches everywhere") {
    CHECK_THROWS_AS(build_suffix_array(seq("")), EmptyText);
    const SuffixArray sa = build_suffix_array(seq("ACG", Alphabet::dna()));
    const SearchOutcome out = sa_search(sa, Sequence("", Alphabet::dna()));
    CHECK(out.all_positions == std::vector<std::uint64_t>{0, 1, 2, 3});
    CHECK(out.probes == 0);
}

TEST_CASE("both builders produce identical orders") {
    Prng rng(7);
    const Alphabet& dna = Alphabet::dna();
    const std::vector<std::optional<std::size_t>> truncations{
        std::nullopt, 1, 2, 3, 5, 7, 8, 64, 1000};
    for (int iter = 0; iter < 150; ++iter) {
        const Sequence text = random_pattern(rng, 1, 400, dna);
        const auto trunc = truncations[static_cast<std::size_t>(rng.below(truncations.size()))];
        const SuffixArray a = build_suffix_array(text, trunc, SaBuilder::comparison_sort);
        const SuffixArray b = build_suffix_array(text, trunc, SaBuilder::prefix_doubling);
        REQUIRE(order_vec(a) == order_vec(b));
        check_sorted(a);
    }
}

TEST_CASE("builders agree on repetitive adversarial texts") {
    const Alphabet& dna = Alphabet::dna();
    std::vector<std::string> texts;
    for (std::size_t k : {1u, 2u, 3u, 17u, 500u}) texts.push_back(std::string(k, 'A'));
    std::string acac;
    for (int i = 0; i < 300; ++i) acac += "AC";
    texts.push_back(acac);
    texts.push_back("AACAACAACAAC");
    for (const std::string& t : texts) {
        for (const std::optional<std::size_t> trunc :
             std::vector<std::optional<std::size_t>>{std::nullopt, 1, 3, 4, 100}) {
            const Sequence text(t, dna);
            const SuffixArray a = build_suffix_array(text, trunc, SaBuilder::comparison_sort);
            const SuffixArray b = build_suffix_array(text, trunc, SaBuilder::prefix_doubling);
            REQUIRE(order_vec(a) == order_vec(b));
            check_sorted(a);
        }
    }
}

TEST_CASE("suffix array search agrees with brute force") {
    Prng rng(13);
    const Alphabet& dna = Alphabet::dna();
    for (int iter = 0; iter < 400; ++iter) {
        const Sequence text = random_pattern(rng, 1, 300, dna);
        Sequence pattern = random_pattern(rng, 1, 10, dna);
        if (iter % 2 == 0 && text.length() >= 3) {
            // sample a substring so hits actually happen
            const std::size_t len = 1 + static_cast<std::size_t>(rng.below(
                                            std::min<std::uint64_t>(10, text.length())));
            const std::size_t at =
                static_cast<std::size_t>(rng.below(text.length() - len + 1));
            pattern = Sequence(std::string(text.view().substr(at, len)), dna);
        }
        const SuffixArray sa = build_suffix_array(text);
        const SearchOutcome expect = brute_force_all(pattern, text);
        const SearchOutcome got = sa_search(sa, pattern);
        REQUIRE(got.all_positions == expect.all_positions);
        CHECK(got.found == expect.found);
        CHECK(got.occurrence_count == expect.occurrence_count);
        if (expect.found) CHECK(*got.first_position == *expect.first_position);
    }
}

TEST_CASE("letter buckets partition MISSISSIPPI by first letter") {
    const SuffixArray sa = build_suffix_array(seq("MISSISSIPPI"));
    const LetterBuckets buckets = build_letter_buckets(sa);
    CHECK(buckets.range_of('I') == LetterBuckets::Range{0, 4});
    CHECK(buckets.range_of('M') == LetterBuckets::Range{4, 5});
    CHECK(buckets.range_of('P') == LetterBuckets::Range{5, 7});
    CHECK(buckets.range_of('S') == LetterBuckets::Range{7, 11});
    CHECK(buckets.range_of('A').width() == 0);
    CHECK(buckets.range_of('Z').width() == 0);
    CHECK(buckets.range_of('?').width() == 0);  // not in the alphabet at all

    std::size_t covered = 0;
    for (const auto& r : buckets.ranges()) covered += r.width();
    CHECK(covered == sa.size());
}

TEST_CASE("letter buckets validate their shape") {
    const Alphabet binary("01", "binary");
    CHECK_THROWS_AS(LetterBuckets(binary, {{0, 1}}), BadRange);
    CHECK_THROWS_AS(LetterBuckets(binary, {{0, 2}, {1, 3}}), BadRange);
    CHECK_THROWS_AS(LetterBuckets(binary, {{2, 1}, {1, 3}}), BadRange);
    CHECK_NOTHROW(LetterBuckets(binary, {{0, 2}, {2, 3}}));
}

TEST_CASE("bucketed search returns the same matches with fewer probes") {
    Prng rng(17);
    const Alphabet& dna = Alphabet::dna();
    for (int iter = 0; iter < 200; ++iter) {
        const Sequence text = random_pattern(rng, 1, 1024, dna);
        Sequence pattern = random_pattern(rng, 1, 8, dna);
        if (iter % 2 == 0) {
            const std::size_t len =
                1 + static_cast<std::size_t>(rng.below(std::min<std::uint64_t>(8, text.length())));
            const std::size_t at =
                static_cast<std::size_t>(rng.below(text.length() - len + 1));
            pattern = Sequence(std::string(text.view().substr(at, len)), dna);
        }
        const SuffixArray sa = build_suffix_array(text);
        const LetterBuckets buckets = build_letter_buckets(sa);
        const SearchOutcome plain = sa_search(sa, pattern);
        const SearchOutcome bucketed = sa_search(sa, pattern, buckets);
        REQUIRE(bucketed.all_positions == plain.all_positions);
        CHECK(plain.probes <= plain_probe_bound(sa.size()));
        CHECK(bucketed.probes <= bucket_probe_bound(buckets.range_of(pattern.at(0)).width()));
        CHECK(plain.comparisons <= plain.probes * pattern.length());
        CHECK(bucketed.comparisons <= bucketed.probes * pattern.length());
    }
}

TEST_CASE("patterns outside the text alphabet are simply not found") {
    const SuffixArray sa = build_suffix_array(seq("ACGTACGT", Alphabet::dna()));
    const Sequence pattern("ZZ", Alphabet::latin());
    CHECK(!sa_search(sa, pattern).found);
    const LetterBuckets buckets = build_letter_buckets(sa);
    CHECK(!sa_search(sa, pattern, buckets).found);
}
