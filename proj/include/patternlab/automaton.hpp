#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patternlab/word.hpp"

namespace patternlab {

/// The instances of a pattern v in the alphabet [k]: all words of length l
/// over [k] containing v exactly once, i.e. the order-isomorphic embeddings
/// of v. There are C(k, d) of them; the list is sorted by the first-index
/// order (plain lexicographic comparison of equal-length words).
struct InstanceSet {
    Pattern pattern;
    int k = 0;
    std::vector<Word> instances;

    std::size_t size() const { return instances.size(); }
};

InstanceSet instances(const Pattern& v, int k);

/// All prefixes of u ordered by length, from the empty word to u itself
/// (|u| + 1 entries).
std::vector<Word> prefix_set(const Word& u);

/// An automaton state: per instance, the longest prefix of that instance
/// matched so far by the greedy left-to-right scan. Stored as prefix
/// lengths in instance order; length l means the instance is complete.
struct StateVector {
    std::vector<std::uint8_t> matched;

    friend bool operator==(const StateVector&, const StateVector&) = default;
    friend auto operator<=>(const StateVector& a, const StateVector& b) {
        return a.matched <=> b.matched;
    }
};

StateVector null_state(const InstanceSet& inst);

/// One scan step: appends letter i to every coordinate whose instance
/// continues with i, leaves the others unchanged. Returns the input state
/// exactly when i advances no coordinate.
StateVector extend(const InstanceSet& inst, const StateVector& state, int letter);

/// The letters that strictly extend the state.
std::vector<int> advancing_letters(const InstanceSet& inst, const StateVector& state);

/// True once some coordinate has matched its whole instance.
bool is_absorbed(const InstanceSet& inst, const StateVector& state);

/// Options for automaton construction.
struct AutomatonOptions {
    /// Abort construction once more live states than this are reachable.
    std::size_t state_limit = 1'000'000;
};

/// The reachable state graph of the avoidance scan. Live states (no
/// instance completed yet) are numbered 0..live_count-1 in a linear
/// extension of the extension order: total matched prefix length first,
/// ties broken lexicographically on the prefix tuple. All absorbed states
/// collapse into one sink with index live_count.
struct AutomatonGraph {
    AutomatonGraph(Pattern v, int alphabet, InstanceSet instance_set)
        : pattern(std::move(v)), k(alphabet), inst(std::move(instance_set)) {}

    Pattern pattern;
    int k = 0;
    InstanceSet inst;

    std::vector<StateVector> live;
    std::vector<int> layer;                     // BFS depth per live state
    std::vector<std::vector<std::int32_t>> delta;  // [state][letter-1] -> state id
    int depth = 0;                              // h_k(v): longest live chain, in states

    int live_count() const { return static_cast<int>(live.size()); }
    int sink() const { return live_count(); }
    bool is_live(int id) const { return id >= 0 && id < live_count(); }

    /// Successor id under one letter; the sink absorbs every letter.
    int step(int id, int letter) const;

    /// Letters advancing live state `id` (into a live state or the sink).
    std::vector<int> advancing(int id) const;
};

AutomatonGraph build_automaton(const Pattern& v, int k, const AutomatonOptions& opts = {});

/// Size of the maximum chain of the live-state poset.
int max_chain(const AutomatonGraph& g);

/// Runs the avoidance scan over w. True iff w contains no occurrence of the
/// pattern. Letters must lie in [k].
bool detect_avoidance(const AutomatonGraph& g, const Word& w);

struct DotOptions {
    bool include_sink = false;
};

/// Hasse diagram of the live poset as a DOT digraph (only advancing edges;
/// the empty prefix prints as "e").
std::string export_dot(const AutomatonGraph& g, const DotOptions& opts = {});

/// Graph as JSON text: states as arrays of prefix strings, transitions as
/// {state, letter, next}, plus k, pattern, live_count, depth.
std::string export_json(const AutomatonGraph& g);

/// Prefix of the instance at `coord` matched in `state`, as text ("" for
/// the empty prefix).
std::string prefix_string(const InstanceSet& inst, const StateVector& state, std::size_t coord);

/// Human-readable state label, e.g. "(e,e,12,2)".
std::string state_label(const InstanceSet& inst, const StateVector& state);

}  // namespace patternlab
