#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "patternlab/automaton.hpp"
#include "patternlab/numeric.hpp"
#include "patternlab/word.hpp"

namespace patternlab {

/// Exact occurrence-count distribution over a word or permutation family:
/// r -> number of members with exactly r occurrences. Absent keys are zero.
struct CountTable {
    std::string patterns;  // canonical key, e.g. "123" or "12+21"
    std::string domain;    // "words", "perms", or "surjective"
    int k = 0;             // alphabet size (equals n for perms)
    std::int64_t n = 0;
    std::map<std::int64_t, BigInt> by_r;

    BigInt at(std::int64_t r) const;
    BigInt total() const;
};

/// f_{r,s}: members with exactly r occurrences whose occurrence subsequence
/// has length s, keyed by s.
struct SubseqHistogram {
    std::string pattern;
    int k = 0;
    std::int64_t n = 0;
    std::int64_t r = 0;
    std::map<std::int64_t, BigInt> by_s;

    BigInt total() const;
};

struct EnumerateOptions {
    /// Maximum family size k^n (or a^n) an exhaustive scan may visit.
    std::uint64_t budget = 100'000'000;
    /// Largest n for permutation enumeration.
    int perm_cap = 10;
    /// Worker threads; 0 uses the OpenMP default.
    int threads = 0;
    /// Passed through to automaton construction where pruning is used.
    std::size_t state_limit = 1'000'000;
};

/// Serial reference kernels. These are the correctness anchors the
/// OpenMP kernels are tested against; they share no scheduling logic.
CountTable count_words_serial(const PatternSet& s, int k, std::int64_t n,
                              const EnumerateOptions& opts = {});
CountTable count_perms_serial(const PatternSet& s, int n, const EnumerateOptions& opts = {});
BigInt count_avoiders_bruteforce_serial(const AutomatonGraph& g, std::int64_t n,
                                        const EnumerateOptions& opts = {});

/// Exact distribution of occurrence counts over all k^n words. The word
/// space is partitioned into first-letter blocks handed to workers;
/// per-worker subtotals are summed, so the result does not depend on the
/// partitioning.
CountTable count_words(const PatternSet& s, int k, std::int64_t n,
                       const EnumerateOptions& opts = {});
CountTable count_words(const Pattern& v, int k, std::int64_t n,
                       const EnumerateOptions& opts = {});

/// Exact distribution over all n! permutations, partitioned by first element.
CountTable count_perms(const PatternSet& s, int n, const EnumerateOptions& opts = {});
CountTable count_perms(const Pattern& v, int n, const EnumerateOptions& opts = {});

/// Distribution over the words of [a]^n whose letter set is exactly [a].
CountTable count_words_surjective(const PatternSet& s, int a, std::int64_t n,
                                  const EnumerateOptions& opts = {});

/// Avoider count by depth-first scan that abandons a prefix as soon as the
/// automaton absorbs it. Much faster than the full distribution when only
/// r = 0 is needed; still subject to the k^n budget.
BigInt count_avoiders_bruteforce(const AutomatonGraph& g, std::int64_t n,
                                 const EnumerateOptions& opts = {});

/// f_{r,s} histogram of occurrence-subsequence lengths over [k]^n, r >= 1.
SubseqHistogram subseq_histogram(const Pattern& v, int k, std::int64_t n, std::int64_t r,
                                 const EnumerateOptions& opts = {});

struct WilfCell {
    int k = 0;
    std::int64_t n = 0;
};

struct WilfReport {
    enum class Verdict { equal_on_grid, differ, partial };
    Verdict verdict = Verdict::equal_on_grid;
    std::string lhs_pattern, rhs_pattern;
    /// First cell, in (k, n) lexicographic order, where the counts differ.
    std::optional<WilfCell> witness;
    BigInt lhs, rhs;  // counts at the witness
    /// Cells skipped because automaton and budget both ran out.
    std::vector<WilfCell> unexplored;
};

/// Compares f_0 over [k]^n on the grid k <= k_max, 1 <= n <= n_max.
/// Transfer-matrix counts are used while the automaton fits the state
/// limit, exhaustive scans otherwise.
WilfReport wilf_words_compare(const Pattern& v1, const Pattern& v2, int k_max,
                              std::int64_t n_max, const EnumerateOptions& opts = {});

/// Compares f_0 over S_n for n <= n_max.
WilfReport wilf_perms_compare(const Pattern& v1, const Pattern& v2, int n_max,
                              const EnumerateOptions& opts = {});

/// Every canonical pattern of the given length, sorted.
std::vector<Pattern> all_canonical_patterns(int length);

}  // namespace patternlab
