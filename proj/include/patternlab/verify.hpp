#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patternlab/identities.hpp"

namespace patternlab {

struct Failure {
    std::string cell;
    std::string lhs;
    std::string rhs;
};

struct Report {
    Report(std::string name_, std::string grid_)
        : name(std::move(name_)), grid(std::move(grid_)) {}

    std::string name;
    std::string grid;
    bool pass = true;
    std::vector<Failure> failures;
    /// Cells skipped (state limit or budget), informational.
    std::vector<std::string> skipped;

    void fail(std::string cell, std::string lhs, std::string rhs) {
        pass = false;
        failures.push_back({std::move(cell), std::move(lhs), std::move(rhs)});
    }
};

/// Transfer-matrix avoider counts against exhaustive scans:
/// every canonical pattern with l <= l_max, k <= k_max, n <= n_max.
Report check_count_oracle(CountProvider& counts, int l_max = 3, int k_max = 4,
                          std::int64_t n_max = 8);

/// Automaton detection against occ = 0, exhaustively over [k]^n.
Report check_detection_oracle(int l_max = 3, int k_max = 3, std::int64_t n_max = 7);

/// (d-1)^n <= f_0 <= pure-birth bound in its regime l*C(k,d) < n <= n_max.
Report check_bounds_sandwich(const std::vector<Pattern>& patterns, int k = 4,
                             std::int64_t n_max = 40);

/// Advancing-letter and chain-size bounds over every automaton with
/// l <= l_max, d <= d_max, k <= k_max.
Report check_lemmas(int l_max = 4, int d_max = 4, int k_max = 5,
                    std::size_t state_limit = 1'000'000);

/// Largest diagonal of the live-restricted count matrix equals d-1 for
/// every automaton on the same grid with k >= d.
Report check_growth_diagonal(int l_max = 4, int d_max = 4, int k_max = 5,
                             std::size_t state_limit = 1'000'000);

/// |f_0(n+1)/f_0(n) - (d-1)| <= tol at one long length, exact rationals.
Report check_growth_ratio(const Pattern& v, int k, std::int64_t n, const BigRat& tol);

/// Inclusion-exclusion from words to permutations, every canonical pattern
/// with l <= l_max plus the {12, 21} set, r <= r_max, n <= n_max.
Report check_theorem2(CountProvider& counts, int l_max = 3, std::int64_t r_max = 2,
                      std::int64_t n_max = 7);

/// Direct surjective counts against the alternating sum, small grid.
Report check_yna(CountProvider& counts, const PatternSet& s, int a_max = 4,
                 std::int64_t n_max = 5);

/// EGF relation coefficientwise to the given order.
Report check_egf(CountProvider& counts, const std::vector<Pattern>& patterns,
                 std::int64_t r_max = 1, int order = 6);

/// The three closed forms against enumerated and transfer counts.
Report check_closed_forms(CountProvider& counts, int k_max = 4, std::int64_t n_max = 8,
                          std::int64_t catalan_n_max = 9);

/// Alternating binomial identity equals 1 up to n_max.
Report check_binomial_identity(std::int64_t n_max = 25);

/// Permutation-word inequality for the given patterns up to n_max.
Report check_sdisc(CountProvider& counts, const std::vector<Pattern>& patterns,
                   std::int64_t n_max = 7);

/// Live-state counts of the three published diagrams.
Report check_figures();

/// Monte Carlo estimate within 4 standard errors of the exact probability,
/// and bit-identical under seed reuse.
Report check_simulation(const Pattern& v, int k, std::int64_t n, std::int64_t trials,
                        std::uint64_t seed);

/// Occurrence-subsequence histogram: support, total, and per-s sandwich.
Report check_decomposition(CountProvider& counts, const Pattern& v, int k, std::int64_t n,
                           std::int64_t r);

}  // namespace patternlab
