#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "json.hpp"
#include "oracles.hpp"
#include "patternlab/automaton.hpp"
#include "patternlab/enumerate.hpp"
#include "patternlab/errors.hpp"

using namespace patternlab;

TEST_CASE("instance sets") {
    const InstanceSet inst = instances(Pattern("123"), 4);
    REQUIRE(inst.size() == 4);
    CHECK(inst.instances[0] == Word{1, 2, 3});
    CHECK(inst.instances[1] == Word{1, 2, 4});
    CHECK(inst.instances[2] == Word{1, 3, 4});
    CHECK(inst.instances[3] == Word{2, 3, 4});

    CHECK(instances(Pattern("213"), 5).size() == 10);  // C(5,3)
    CHECK(instances(Pattern("213"), 3).instances == std::vector<Word>{{2, 1, 3}});
    CHECK(instances(Pattern("123"), 2).size() == 0);
    CHECK_THROWS_AS(instances(Pattern("12"), 0), PatternError);
}

TEST_CASE("instances are sorted by first-index order and contain v once") {
    for (const char* text : {"21", "11", "231", "132", "212", "1212"}) {
        const Pattern v(text);
        for (int k = v.distinct(); k <= 5; ++k) {
            const InstanceSet inst = instances(v, k);
            CHECK(BigInt(inst.size()) == binomial(k, v.distinct()));
            for (std::size_t i = 0; i < inst.size(); ++i) {
                CHECK(occ(v, inst.instances[i]) == 1);
                if (i > 0) CHECK(inst.instances[i - 1] < inst.instances[i]);
            }
        }
    }
}

TEST_CASE("prefix sets") {
    const auto prefixes = prefix_set({1, 2, 4, 5});
    REQUIRE(prefixes.size() == 5);
    CHECK(prefixes[0] == Word{});
    CHECK(prefixes[1] == Word{1});
    CHECK(prefixes[2] == Word{1, 2});
    CHECK(prefixes[3] == Word{1, 2, 4});
    CHECK(prefixes[4] == Word{1, 2, 4, 5});
    CHECK(prefix_set({}).size() == 1);
}

TEST_CASE("extend follows the one-step update") {
    const InstanceSet inst = instances(Pattern("123"), 4);
    const StateVector start = null_state(inst);

    const StateVector after1 = extend(inst, start, 1);
    CHECK(after1.matched == std::vector<std::uint8_t>{1, 1, 1, 0});
    CHECK(state_label(inst, after1) == "(1,1,1,e)");

    const StateVector after13 = extend(inst, after1, 3);
    CHECK(after13.matched == std::vector<std::uint8_t>{1, 1, 2, 0});
    CHECK(state_label(inst, after13) == "(1,1,13,e)");

    // 4 advances nothing from the start state
    CHECK(extend(inst, start, 4) == start);
    CHECK_THROWS_AS(extend(inst, start, 5), PatternError);
    CHECK_THROWS_AS(extend(inst, start, 0), PatternError);
}

TEST_CASE("advancing letters") {
    const InstanceSet inst = instances(Pattern("123"), 4);
    CHECK(advancing_letters(inst, null_state(inst)) == std::vector<int>{1, 2});

    const StateVector after1 = extend(inst, null_state(inst), 1);
    CHECK(advancing_letters(inst, after1) == std::vector<int>{2, 3});

    // L at the null state is {v_1, ..., k-d+v_1}
    for (const char* text : {"123", "213", "321", "1212"}) {
        const Pattern v(text);
        for (int k = v.distinct(); k <= 5; ++k) {
            const InstanceSet set = instances(v, k);
            const auto letters = advancing_letters(set, null_state(set));
            const int v1 = v.letters().front();
            REQUIRE(static_cast<int>(letters.size()) == k - v.distinct() + 1);
            CHECK(letters.front() == v1);
            CHECK(letters.back() == k - v.distinct() + v1);
        }
    }

    // k = d leaves exactly one advancing letter everywhere
    for (const char* text : {"12", "132", "2143"}) {
        const Pattern v(text);
        const AutomatonGraph g = build_automaton(v, v.distinct());
        for (int id = 0; id < g.live_count(); ++id)
            CHECK(g.advancing(id).size() == 1);
    }
}

TEST_CASE("figure regressions: live state counts at k=4") {
    CHECK(build_automaton(Pattern("123"), 4).live_count() == 12);
    CHECK(build_automaton(Pattern("213"), 4).live_count() == 10);
    CHECK(build_automaton(Pattern("132"), 4).live_count() == 12);
}

TEST_CASE("degenerate alphabet: k < d") {
    const AutomatonGraph g = build_automaton(Pattern("123"), 2);
    CHECK(g.live_count() == 1);
    CHECK(g.advancing(0).empty());
    CHECK(detect_avoidance(g, {1, 2, 1, 2, 2}));
    CHECK(g.depth == 1);
}

TEST_CASE("state limit aborts construction") {
    AutomatonOptions opts;
    opts.state_limit = 3;
    CHECK_THROWS_AS(build_automaton(Pattern("11"), 5, opts), ResourceLimitError);
    try {
        build_automaton(Pattern("11"), 5, opts);
    } catch (const ResourceLimitError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("detection agrees with occ == 0") {
    CHECK_FALSE(detect_avoidance(build_automaton(Pattern("21"), 9), {3, 5, 2, 3, 9}));
    CHECK(detect_avoidance(build_automaton(Pattern("123"), 4), {1, 2}));

    for (const char* text : {"123", "212", "11"}) {
        const Pattern v(text);
        const int k = 3;
        const AutomatonGraph g = build_automaton(v, k);
        Word w(5, 1);
        for (int count = 0; count < 243; ++count) {
            CHECK(detect_avoidance(g, w) == (occ(v, w) == 0));
            int pos = 4;
            while (pos >= 0 && w[pos] == k) w[pos--] = 1;
            if (pos < 0) break;
            ++w[pos];
        }
    }

    const AutomatonGraph g = build_automaton(Pattern("12"), 3);
    CHECK_THROWS_AS(detect_avoidance(g, {1, 4}), PatternError);
}

TEST_CASE("graph structure invariants over a small grid") {
    for (int l = 2; l <= 4; ++l) {
        for (const Pattern& v : all_canonical_patterns(l)) {
            for (int k = 1; k <= 4; ++k) {
                const AutomatonGraph g = build_automaton(v, k);
                const BigInt phi = binomial(k, v.distinct());
                CHECK(BigInt(g.inst.size()) == (k >= v.distinct() ? phi : BigInt(0)));
                int total_advancing = 0;
                for (int id = 0; id < g.live_count(); ++id) {
                    const auto letters = g.advancing(id);
                    total_advancing += static_cast<int>(letters.size());
                    const int mass = std::accumulate(g.live[id].matched.begin(),
                                                     g.live[id].matched.end(), 0);
                    for (int letter : letters) {
                        const int target = g.delta[id][letter - 1];
                        if (target == g.sink()) continue;
                        // advancing edges go strictly forward and add mass
                        CHECK(target > id);
                        const int next_mass = std::accumulate(g.live[target].matched.begin(),
                                                              g.live[target].matched.end(), 0);
                        CHECK(next_mass > mass);
                        // the advancing letter is determined by (state, successor)
                        int repeats = 0;
                        for (int other = 1; other <= k; ++other)
                            if (g.delta[id][other - 1] == target) ++repeats;
                        CHECK(repeats == 1);
                    }
                }
                if (k >= v.distinct()) CHECK(BigInt(g.depth) <= phi * l);
                // live states are distinct and none is absorbed
                std::set<std::vector<std::uint8_t>> seen;
                for (const StateVector& state : g.live) {
                    CHECK_FALSE(is_absorbed(g.inst, state));
                    seen.insert(state.matched);
                }
                CHECK(seen.size() == static_cast<std::size_t>(g.live_count()));
                (void)total_advancing;
            }
        }
    }
}

TEST_CASE("max chain on the k=4 figures stays within the bound") {
    const AutomatonGraph g = build_automaton(Pattern("123"), 4);
    CHECK(max_chain(g) <= 12);  // C(4,3) * 3
    CHECK(max_chain(g) == 6);
}

TEST_CASE("dot export") {
    const AutomatonGraph g = build_automaton(Pattern("123"), 4);
    const std::string dot = export_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("(e,e,e,e)") != std::string::npos);
    int nodes = 0;
    for (std::size_t at = dot.find("label=\"("); at != std::string::npos;
         at = dot.find("label=\"(", at + 1))
        ++nodes;
    CHECK(nodes == 12);
    CHECK(dot.find("sink") == std::string::npos);

    const std::string with_sink = export_dot(g, {.include_sink = true});
    CHECK(with_sink.find("sink") != std::string::npos);

    const std::string degenerate = export_dot(build_automaton(Pattern("123"), 2));
    CHECK(degenerate.find("(e,e,e,e)") == std::string::npos);
    CHECK(degenerate.find("label=\"(e)\"") != std::string::npos);
}

TEST_CASE("json export") {
    const AutomatonGraph g = build_automaton(Pattern("213"), 4);
    const auto doc = nlohmann::json::parse(export_json(g));
    CHECK(doc["pattern"] == "213");
    CHECK(doc["k"] == 4);
    CHECK(doc["live_count"] == 10);
    CHECK(doc["depth"] == g.depth);
    CHECK(doc["states"].size() == 10);
    CHECK(doc["states"][0][0] == "");
    for (const auto& t : doc["transitions"]) {
        const int from = t["state"];
        const int next = t["next"];
        const int letter = t["letter"];
        CHECK(from >= 0);
        CHECK(from < 10);
        CHECK(next <= 10);  // live or sink
        CHECK(letter >= 1);
        CHECK(letter <= 4);
        CHECK(from != next);
    }
}
