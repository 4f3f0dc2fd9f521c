#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "patternlab/enumerate.hpp"
#include "patternlab/errors.hpp"
#include "patternlab/transfer.hpp"

using namespace patternlab;

TEST_CASE("count_words on known cells") {
    CHECK(count_words(Pattern("123"), 2, 5).at(0) == 32);  // d=3 > k, nothing to avoid
    CHECK(count_words(Pattern("12"), 3, 3).at(0) == 10);   // C(5,3)

    const CountTable t = count_words(Pattern("123"), 4, 3);
    CHECK(t.at(0) == 60);
    CHECK(t.at(1) == 4);
    CHECK(t.by_r.size() == 2);
    CHECK(t.total() == 64);

    CHECK(count_words(Pattern("12"), 4, 0).at(0) == 1);
    CHECK(count_words(Pattern("11"), 1, 1).at(0) == 1);
}

TEST_CASE("count_words over a pattern set") {
    const PatternSet pair{Pattern("12"), Pattern("21")};
    const CountTable t = count_words(pair, 2, 2);
    CHECK(t.at(0) == 2);  // 11 and 22
    CHECK(t.at(1) == 2);  // 12 and 21
    CHECK(t.total() == 4);
}

TEST_CASE("full distribution mass and oracle agreement") {
    std::mt19937 gen(31);
    for (const char* text : {"12", "11", "123", "221"}) {
        const Pattern v(text);
        for (int k = 1; k <= 3; ++k)
            for (std::int64_t n = 0; n <= 6; ++n) {
                const CountTable t = count_words(v, k, n);
                CHECK(t.total() == pow_int(k, n));
                // spot-check one random r bucket against the naive oracle
                Word w = testing::random_word(gen, k, static_cast<int>(n));
                const BigInt r = testing::naive_occ(v, w);
                BigInt members = 0;
                Word probe(n, 1);
                long remaining = 1;
                for (std::int64_t i = 0; i < n; ++i) remaining *= k;
                while (remaining-- > 0) {
                    if (testing::naive_occ(v, probe) == r) ++members;
                    std::int64_t pos = n - 1;
                    while (pos >= 0 && probe[pos] == k) probe[pos--] = 1;
                    if (pos < 0) break;
                    ++probe[pos];
                }
                CHECK(t.at(r.convert_to<std::int64_t>()) == members);
            }
    }
}

TEST_CASE("parallel kernels match the serial reference") {
    const PatternSet single{Pattern("132")};
    const PatternSet pair{Pattern("12"), Pattern("21")};
    for (const PatternSet& s : {single, pair}) {
        const CountTable serial = count_words_serial(s, 3, 7);
        for (int threads : {1, 2, 3, 5}) {
            EnumerateOptions opts;
            opts.threads = threads;
            const CountTable parallel = count_words(s, 3, 7, opts);
            CHECK(parallel.by_r == serial.by_r);
        }
    }

    const CountTable serial_perms = count_perms_serial(single, 7);
    for (int threads : {1, 2, 4}) {
        EnumerateOptions opts;
        opts.threads = threads;
        CHECK(count_perms(single, 7, opts).by_r == serial_perms.by_r);
    }

    const AutomatonGraph g = build_automaton(Pattern("123"), 3);
    const BigInt serial_avoiders = count_avoiders_bruteforce_serial(g, 9);
    for (int threads : {1, 2, 4}) {
        EnumerateOptions opts;
        opts.threads = threads;
        CHECK(count_avoiders_bruteforce(g, 9, opts) == serial_avoiders);
    }
}

TEST_CASE("budget errors") {
    EnumerateOptions tight;
    tight.budget = 1000;
    CHECK_THROWS_AS(count_words(Pattern("12"), 10, 4, tight), ResourceLimitError);
    try {
        count_words(Pattern("12"), 10, 4, tight);
    } catch (const ResourceLimitError& e) {
        CHECK(std::string(e.what()).find("transfer") != std::string::npos);
    }
    CHECK_THROWS_AS(subseq_histogram(Pattern("12"), 10, 4, 1, tight), ResourceLimitError);

    EnumerateOptions capped;
    capped.perm_cap = 5;
    CHECK_THROWS_AS(count_perms(Pattern("12"), 6, capped), ResourceLimitError);
}

TEST_CASE("count_perms on known cells") {
    CHECK(count_perms(Pattern("123"), 3).at(0) == 5);
    CHECK(count_perms(Pattern("132"), 4).at(0) == 14);
    for (int n = 1; n <= 6; ++n) {
        const CountTable t = count_perms(Pattern("12"), n);
        CHECK(t.at(0) == 1);  // only the decreasing permutation
        CHECK(t.total() == factorial(n));
    }
    CHECK(count_perms(Pattern("12"), 0).at(0) == 1);
}

TEST_CASE("permutations are the 11-avoiding words of maximal alphabet") {
    for (int n = 1; n <= 6; ++n) {
        const BigInt injective = count_words(Pattern("11"), n, n).at(0);
        CHECK(injective == factorial(n));
        CHECK(count_perms(Pattern("123"), n).total() == injective);
    }
}

TEST_CASE("pruned avoider scan equals transfer counts") {
    for (const char* text : {"12", "123", "212", "11"}) {
        const Pattern v(text);
        for (int k = 1; k <= 4; ++k) {
            const AutomatonGraph g = build_automaton(v, k);
            const auto expected = count_avoiders_upto(g, 7);
            for (std::int64_t n = 0; n <= 7; ++n)
                CHECK(count_avoiders_bruteforce(g, n) == expected[n]);
        }
    }
}

TEST_CASE("surjective word counts") {
    const PatternSet s{Pattern("123")};
    // a = n gives exactly the permutations
    for (int n = 1; n <= 5; ++n)
        CHECK(count_words_surjective(s, n, n).total() == factorial(n));
    // a = 1 gives the single constant word
    CHECK(count_words_surjective(s, 1, 4).total() == 1);
    CHECK(count_words_surjective(PatternSet{Pattern("11")}, 1, 4).at(3 * 2) == 1);  // C(4,2) occs
    // no surjective word shorter than the alphabet
    CHECK(count_words_surjective(s, 3, 2).total() == 0);
}

TEST_CASE("subsequence histograms") {
    const SubseqHistogram h = subseq_histogram(Pattern("12"), 2, 2, 1);
    REQUIRE(h.by_s.size() == 1);
    CHECK(h.by_s.at(2) == 1);  // only the word 12

    const SubseqHistogram deep = subseq_histogram(Pattern("123"), 3, 6, 1);
    const CountTable dist = count_words(Pattern("123"), 3, 6);
    BigInt mass = 0;
    for (const auto& [s, f] : deep.by_s) {
        CHECK(s >= 3);  // l + r - 1
        CHECK(s <= 3);  // r * l
        mass += f;
    }
    CHECK(mass == dist.at(1));

    // support stays inside [l+r-1, r*l] and masses add up across r
    for (const char* text : {"12", "21", "123"}) {
        const Pattern v(text);
        const std::int64_t l = v.length();
        const CountTable full = count_words(v, 2, 6);
        for (std::int64_t r = 1; r <= 3; ++r) {
            const SubseqHistogram h = subseq_histogram(v, 2, 6, r);
            for (const auto& [s, f] : h.by_s) {
                CHECK(s >= l + r - 1);
                CHECK(s <= r * l);
            }
            CHECK(h.total() == full.at(r));
        }
    }

    CHECK_THROWS_AS(subseq_histogram(Pattern("12"), 2, 3, 0), PatternError);
}

TEST_CASE("wilf comparison on words") {
    const WilfReport same = wilf_words_compare(Pattern("123"), Pattern("132"), 4, 7);
    CHECK(same.verdict == WilfReport::Verdict::equal_on_grid);
    CHECK_FALSE(same.witness.has_value());

    const WilfReport self = wilf_words_compare(Pattern("213"), Pattern("213"), 3, 6);
    CHECK(self.verdict == WilfReport::Verdict::equal_on_grid);

    const WilfReport diff = wilf_words_compare(Pattern("11"), Pattern("12"), 3, 4);
    REQUIRE(diff.witness.has_value());
    CHECK(diff.witness->k == 1);
    CHECK(diff.witness->n == 2);
    CHECK(diff.lhs == 0);
    CHECK(diff.rhs == 1);
}

TEST_CASE("wilf regression: the S4 classes") {
    // first differing word cells, discovered by grid search and frozen
    const WilfReport words = wilf_words_compare(Pattern("1324"), Pattern("2413"), 5, 8);
    CHECK(words.verdict == WilfReport::Verdict::differ);
    REQUIRE(words.witness.has_value());
    CHECK(words.witness->k == 5);
    CHECK(words.witness->n == 6);
    CHECK(words.lhs == 14495);
    CHECK(words.rhs == 14493);

    // 1342 and 2413 agree on every S_n here yet split over words: word-level
    // Wilf equivalence is strictly stronger than the permutation one.
    const WilfReport perms = wilf_perms_compare(Pattern("1342"), Pattern("2413"), 8);
    CHECK(perms.verdict == WilfReport::Verdict::equal_on_grid);
    const WilfReport split = wilf_words_compare(Pattern("1342"), Pattern("2413"), 5, 8);
    REQUIRE(split.witness.has_value());
    CHECK(split.witness->k == 5);
    CHECK(split.witness->n == 6);
    CHECK(split.lhs == 14494);
    CHECK(split.rhs == 14493);

    // 1324 is in neither class: it already separates from 2413 over S_6
    const WilfReport apart = wilf_perms_compare(Pattern("1324"), Pattern("2413"), 8);
    CHECK(apart.verdict == WilfReport::Verdict::differ);
    REQUIRE(apart.witness.has_value());
    CHECK(apart.witness->n == 6);
    CHECK(apart.lhs == 513);
    CHECK(apart.rhs == 512);
}

TEST_CASE("wilf partial verdict under a tight budget") {
    EnumerateOptions opts;
    opts.budget = 100;
    opts.state_limit = 2;  // forces the exhaustive fallback
    const WilfReport r = wilf_words_compare(Pattern("123"), Pattern("132"), 3, 6, opts);
    CHECK(r.verdict == WilfReport::Verdict::partial);
    CHECK_FALSE(r.unexplored.empty());
}

TEST_CASE("canonical pattern inventory") {
    CHECK(all_canonical_patterns(2).size() == 3);
    CHECK(all_canonical_patterns(3).size() == 13);
    CHECK(all_canonical_patterns(4).size() == 75);
    for (const Pattern& v : all_canonical_patterns(3))
        CHECK(canonicalize(v.letters()) == v);
}
