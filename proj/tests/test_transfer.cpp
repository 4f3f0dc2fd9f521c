#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "oracles.hpp"
#include "patternlab/enumerate.hpp"
#include "patternlab/errors.hpp"
#include "patternlab/transfer.hpp"

using namespace patternlab;

TEST_CASE("transition matrix invariants") {
    for (const char* text : {"12", "21", "11", "123", "213", "212"}) {
        const Pattern v(text);
        for (int k = 1; k <= 4; ++k) {
            const AutomatonGraph g = build_automaton(v, k);
            const TransitionMatrix m = transition_matrix(g);
            REQUIRE(m.size == g.live_count() + 1);
            const BigRat unit(1, k);
            for (int row = 0; row < m.size; ++row) {
                BigRat sum = 0;
                for (const auto& [col, p] : m.rows[row]) {
                    sum += p;
                    if (row < g.live_count() && col != row && col != g.sink())
                        CHECK(p == unit);  // non-zero off-diagonal entries are 1/k
                    if (row < g.live_count())
                        CHECK(col >= row);  // upper triangular on live states
                }
                CHECK(sum == 1);
            }
            // diagonal = 1 - #L/k; the null state sits at (d-1)/k when k >= d
            for (int id = 0; id < g.live_count(); ++id) {
                const int adv = static_cast<int>(g.advancing(id).size());
                CHECK(m.at(id, id) == BigRat(k - adv, k));
                if (k >= v.distinct()) CHECK(m.at(id, id) <= BigRat(v.distinct() - 1, k));
            }
            if (k >= v.distinct()) CHECK(m.at(0, 0) == BigRat(v.distinct() - 1, k));
            CHECK(m.at(g.sink(), g.sink()) == 1);
        }
    }
}

TEST_CASE("matrix json export") {
    const AutomatonGraph g = build_automaton(Pattern("12"), 2);
    const auto doc = nlohmann::json::parse(matrix_json(transition_matrix(g)));
    CHECK(doc["k"] == 2);
    CHECK(doc["order"].size() == doc["entries"].size());
    CHECK(doc["order"].back() == "sink");
    // each entry is an exact [numerator, denominator] pair
    for (const auto& row : doc["entries"])
        for (const auto& cell : row) REQUIRE(cell.size() == 2);
}

TEST_CASE("count_avoiders matches closed expectations") {
    CHECK(count_avoiders(build_automaton(Pattern("12"), 2), 3) == 4);
    CHECK(count_avoiders(build_automaton(Pattern("123"), 4), 3) == 60);
    CHECK(count_avoiders(build_automaton(Pattern("321"), 3), 0) == 1);
    // k < d: every word avoids
    CHECK(count_avoiders(build_automaton(Pattern("123"), 2), 10) == 1024);
}

TEST_CASE("count iteration conserves total mass") {
    const AutomatonGraph g = build_automaton(Pattern("132"), 3);
    std::vector<BigInt> mass(g.live_count() + 1);
    mass[0] = 1;
    BigInt expected_total = 1;
    for (int step = 0; step < 12; ++step) {
        step_counts(g, mass);
        expected_total *= g.k;
        BigInt total = 0;
        for (const BigInt& m : mass) total += m;
        CHECK(total == expected_total);
    }
}

TEST_CASE("count_avoiders equals the exhaustive distribution") {
    for (const char* text : {"12", "11", "123", "212", "321"}) {
        const Pattern v(text);
        for (int k = 1; k <= 3; ++k) {
            const AutomatonGraph g = build_automaton(v, k);
            const auto counts = count_avoiders_upto(g, 6);
            for (std::int64_t n = 0; n <= 6; ++n)
                CHECK(counts[n] == count_words(v, k, n).at(0));
        }
    }
}

TEST_CASE("avoidance probability") {
    const AutomatonGraph g = build_automaton(Pattern("123"), 4);
    CHECK(avoidance_probability(g, 3) == BigRat(15, 16));
    CHECK(avoidance_probability(g, 0) == 1);
    BigRat previous = 1;
    for (std::int64_t n = 1; n <= 12; ++n) {
        const BigRat p = avoidance_probability(g, n);
        CHECK(p <= previous);  // avoiders of length n+1 project to avoiders
        previous = p;
    }
}

TEST_CASE("growth rate") {
    CHECK(growth_rate(build_automaton(Pattern("123"), 4)).rate == 2);
    CHECK_FALSE(growth_rate(build_automaton(Pattern("123"), 4)).degenerate);
    CHECK(growth_rate(build_automaton(Pattern("11"), 3)).rate == 0);
    CHECK(growth_rate(build_automaton(Pattern("213"), 5)).rate == 2);

    const GrowthRate degenerate = growth_rate(build_automaton(Pattern("1234"), 2));
    CHECK(degenerate.degenerate);
    CHECK(degenerate.rate == 2);
}

TEST_CASE("birth bound") {
    CHECK(birth_bound(4, 3, 3, 0).value == 1);
    CHECK_THROWS_AS(birth_bound(3, 1, 2, 5), PatternError);

    const Pattern v("123");
    const AutomatonGraph g = build_automaton(v, 4);
    const BigInt f0 = count_avoiders(g, 13);
    const BirthBound bound = birth_bound(4, 3, 3, 13);
    CHECK(bound.in_regime);  // 13 > 3 * C(4,3) = 12
    CHECK_FALSE(birth_bound(4, 3, 3, 12).in_regime);
    CHECK(BigRat(pow_int(2, 13)) <= BigRat(f0));
    CHECK(BigRat(f0) <= bound.value);
}

TEST_CASE("rng letters are in range and deterministic") {
    std::uint64_t index = 0;
    for (int k : {1, 2, 3, 7, 10}) {
        for (int i = 0; i < 200; ++i) {
            const int letter = rng::uniform_letter(42, 7, index, k);
            CHECK(letter >= 1);
            CHECK(letter <= k);
        }
    }
    CHECK(rng::draw(1, 2, 3) == rng::draw(1, 2, 3));
    CHECK(rng::draw(1, 2, 3) != rng::draw(1, 2, 4));
    CHECK(rng::draw(1, 2, 3) != rng::draw(2, 2, 3));
}

TEST_CASE("simulation") {
    const AutomatonGraph g = build_automaton(Pattern("123"), 4);

    const SimulationResult empty = simulate(g, 0, 500, 9);
    CHECK(empty.hits == 500);
    CHECK(empty.estimate == 1);

    const SimulationResult a = simulate(g, 10, 20000, 20240817);
    const SimulationResult b = simulate(g, 10, 20000, 20240817);
    CHECK(a.hits == b.hits);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);

    const SimulationResult c = simulate(g, 10, 20000, 20240817, 4);
    CHECK(c.hits == a.hits);  // independent of worker count

    const BigRat exact = avoidance_probability(g, 10);
    BigRat gap = a.estimate - exact;
    if (gap < 0) gap = -gap;
    CHECK(gap <= BigRat(4.0 * a.std_error));

    CHECK_THROWS_AS(simulate(g, 5, 0, 1), PatternError);
}
