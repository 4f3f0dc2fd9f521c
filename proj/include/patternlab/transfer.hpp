#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patternlab/automaton.hpp"
#include "patternlab/numeric.hpp"

namespace patternlab {

/// Row-stochastic transition matrix of the scan chain under i.i.d. uniform
/// letters. States are the live states in graph order followed by the sink.
/// Restricted to live states the matrix is upper triangular; every non-zero
/// off-diagonal entry is 1/k and the diagonal at a state with a advancing
/// letters is 1 - a/k.
struct TransitionMatrix {
    int size = 0;  // live states + sink
    int k = 0;
    std::vector<std::string> labels;
    // Sparse rows: (column, probability), columns ascending.
    std::vector<std::vector<std::pair<int, BigRat>>> rows;

    BigRat at(int row, int col) const;
};

TransitionMatrix transition_matrix(const AutomatonGraph& g);

/// Matrix as JSON: {"order": [labels], "entries": rows of [num, den] pairs}.
std::string matrix_json(const TransitionMatrix& m);

/// One step of the integer count iteration: mass <- mass * M where
/// M = k * P. `mass` has live_count + 1 entries, sink last. Total mass is
/// multiplied by exactly k.
void step_counts(const AutomatonGraph& g, std::vector<BigInt>& mass);

/// Exact number of words in [k]^n avoiding the pattern: the live mass of
/// the n-step count iteration started from the null state.
BigInt count_avoiders(const AutomatonGraph& g, std::int64_t n);

/// Avoider counts for every length 0..n, one iteration pass.
std::vector<BigInt> count_avoiders_upto(const AutomatonGraph& g, std::int64_t n);

/// count_avoiders / k^n as an exact rational.
BigRat avoidance_probability(const AutomatonGraph& g, std::int64_t n);

struct GrowthRate {
    int rate = 0;
    /// Set when k < d: no occurrence fits in the alphabet, every word
    /// avoids, and the count grows like k^n.
    bool degenerate = false;
};

/// The growth rate of the avoider count: the largest diagonal entry of the
/// live-restricted count matrix, which is d - 1 whenever k >= d.
GrowthRate growth_rate(const AutomatonGraph& g);

struct BirthBound {
    BigRat value;
    /// True when k > d and n > l * C(k, d), the regime where
    /// (d-1)^n <= f_0 <= value is guaranteed.
    bool in_regime = false;
};

/// The pure-birth upper bound
///   (d-1)^n * sum_{i=0}^{l*C(k,d)} C(n,i) * ((k-d+1)/(d-1))^i,
/// evaluated exactly. Requires d >= 2.
BirthBound birth_bound(int k, int d, int l, std::int64_t n);

struct SimulationResult {
    std::int64_t trials = 0;
    std::int64_t hits = 0;  // walks never absorbed within n steps
    BigRat estimate;        // hits / trials
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

/// Runs `trials` independent walks of the scan chain for n uniform letters
/// and counts the walks still live. Each trial draws from its own
/// counter-derived stream, so the result depends only on (seed, trials, n),
/// not on thread count. Letters are drawn by rejection sampling.
SimulationResult simulate(const AutomatonGraph& g, std::int64_t n, std::int64_t trials,
                          std::uint64_t seed, int threads = 0);

namespace rng {

/// SplitMix64 output function: bijective mixing of a 64-bit counter.
std::uint64_t mix(std::uint64_t x);

/// Draw index j >= 0 of the stream for `stream` under `seed`.
std::uint64_t draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Uniform letter in [k] by rejection from 64-bit draws; advances `index`.
int uniform_letter(std::uint64_t seed, std::uint64_t stream, std::uint64_t& index, int k);

}  // namespace rng

}  // namespace patternlab
