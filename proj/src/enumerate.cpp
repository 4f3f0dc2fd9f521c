#include "patternlab/enumerate.hpp"

#include <algorithm>

#include "patternlab/transfer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "patternlab/errors.hpp"

namespace patternlab {

BigInt CountTable::at(std::int64_t r) const {
    auto it = by_r.find(r);
    return it == by_r.end() ? BigInt(0) : it->second;
}

BigInt CountTable::total() const {
    BigInt sum = 0;
    for (const auto& [r, f] : by_r) sum += f;
    return sum;
}

BigInt SubseqHistogram::total() const {
    BigInt sum = 0;
    for (const auto& [s, f] : by_s) sum += f;
    return sum;
}

namespace {

int resolve_threads(int requested) {
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

void check_budget(const BigInt& family_size, const EnumerateOptions& opts,
                  const std::string& what) {
    if (family_size > opts.budget)
        throw ResourceLimitError(what + " needs " + family_size.str() +
                                 " members, over the budget of " + std::to_string(opts.budget) +
                                 "; for r=0 word counts use transfer-matrix counting instead");
}

// Occurrence totals are tracked in 64-bit during scans; refuse families
// where a single member could overflow that.
void check_occ_range(const PatternSet& s, std::int64_t n) {
    BigInt max_occ = 0;
    for (const Pattern& v : s.patterns()) {
        if (v.length() > 64)
            throw ResourceLimitError("scan kernels support pattern lengths up to 64");
        max_occ += binomial(n, v.length());
    }
    if (max_occ > BigInt(INT64_MAX))
        throw ResourceLimitError("occurrence counts for length " + std::to_string(n) +
                                 " exceed the 64-bit scan accumulator");
}

// Number of (depth..last-1)-position choices in w[from..m) extending
// `picked` so that, with letter x at position m matching v[last], the tuple
// is an occurrence of v. Pairwise relations are checked as positions are
// picked, so inconsistent branches die early.
std::uint64_t ending_walk(const int* v, int last, const int* w, int m, int x, int* picked,
                          int depth, int from) {
    if (depth == last) return 1;
    std::uint64_t count = 0;
    for (int j = from; j <= m - (last - depth); ++j) {
        bool ok = (w[j] < x) == (v[depth] < v[last]) && (w[j] == x) == (v[depth] == v[last]);
        for (int q = 0; ok && q < depth; ++q) {
            ok = (w[picked[q]] < w[j]) == (v[q] < v[depth]) &&
                 (w[picked[q]] == w[j]) == (v[q] == v[depth]);
        }
        if (!ok) continue;
        picked[depth] = j;
        count += ending_walk(v, last, w, m, x, picked, depth + 1, j + 1);
    }
    return count;
}

// Occurrences of any pattern in the set that end exactly at position m,
// where letter x is about to be placed. The incremental cost of one more
// position in a depth-first word scan.
std::uint64_t delta_for_set(const PatternSet& s, const std::vector<int>& w, int m, int x) {
    int picked[64];  // pattern lengths are capped at 64 by check_occ_range
    std::uint64_t total = 0;
    for (const Pattern& v : s.patterns())
        if (m >= v.length() - 1)
            total += ending_walk(v.letters().data(), v.length() - 1, w.data(), m, x, picked, 0, 0);
    return total;
}

using Tally = std::map<std::int64_t, std::uint64_t>;

void merge_into(CountTable& table, const Tally& tally) {
    for (const auto& [r, f] : tally) table.by_r[r] += f;
}

// Exhaustive scan of the subtree of words with the given prefix. occ is the
// occurrence total inside the prefix; surjective_over > 0 restricts the
// final tally to words whose letter set is exactly [surjective_over].
void words_subtree(const PatternSet& s, int k, std::int64_t n, std::vector<int>& w, int depth,
                   std::uint64_t occ, int surjective_over, std::vector<int>& usage, int used,
                   Tally& tally) {
    if (depth == n) {
        if (surjective_over == 0 || used == surjective_over) ++tally[static_cast<std::int64_t>(occ)];
        return;
    }
    if (surjective_over > 0 && surjective_over - used > n - depth) return;
    for (int x = 1; x <= k; ++x) {
        const std::uint64_t delta = delta_for_set(s, w, depth, x);
        w[depth] = x;
        int next_used = used;
        if (surjective_over > 0 && usage[x]++ == 0) ++next_used;
        words_subtree(s, k, n, w, depth + 1, occ + delta, surjective_over, usage, next_used, tally);
        if (surjective_over > 0) --usage[x];
    }
}

CountTable words_scan(const PatternSet& s, int k, std::int64_t n, const EnumerateOptions& opts,
                      bool surjective, bool parallel) {
    if (k < 1) throw PatternError("alphabet size must be >= 1");
    if (n < 0) throw PatternError("word length must be >= 0");
    check_budget(pow_int(k, n), opts, "word enumeration over [" + std::to_string(k) + "]^" +
                                          std::to_string(n));
    check_occ_range(s, n);
    CountTable table;
    table.patterns = s.str();
    table.domain = surjective ? "surjective" : "words";
    table.k = k;
    table.n = n;
    const int over = surjective ? k : 0;
    if (n == 0) {
        if (!surjective || k == 0) table.by_r[0] = 1;
        return table;
    }

    // Jobs are blocks of words sharing a short prefix; letters beyond the
    // first refine the blocks when there are few distinct first letters.
    const int team = parallel ? resolve_threads(opts.threads) : 1;
    int prefix_len = 1;
    std::int64_t jobs = k;
    while (jobs < 4 * static_cast<std::int64_t>(team) && prefix_len < std::min<std::int64_t>(n, 3)) {
        ++prefix_len;
        jobs *= k;
    }

    std::vector<Tally> tallies(jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(team) if (parallel)
#endif
    for (std::int64_t job = 0; job < jobs; ++job) {
        std::vector<int> w(n);
        std::vector<int> usage(k + 1, 0);
        int used = 0;
        std::uint64_t occ = 0;
        std::int64_t rest = job;
        for (int pos = prefix_len - 1; pos >= 0; --pos) {
            w[pos] = static_cast<int>(rest % k) + 1;
            rest /= k;
        }
        for (int pos = 0; pos < prefix_len; ++pos) {
            occ += delta_for_set(s, w, pos, w[pos]);
            if (over > 0 && usage[w[pos]]++ == 0) ++used;
        }
        words_subtree(s, k, n, w, prefix_len, occ, over, usage, used, tallies[job]);
    }
    for (const Tally& t : tallies) merge_into(table, t);
    return table;
}

void perms_subtree(const PatternSet& s, int n, std::vector<int>& w, std::uint64_t used_mask,
                   int depth, std::uint64_t occ, Tally& tally) {
    if (depth == n) {
        ++tally[static_cast<std::int64_t>(occ)];
        return;
    }
    for (int x = 1; x <= n; ++x) {
        const std::uint64_t bit = 1ULL << x;
        if (used_mask & bit) continue;
        const std::uint64_t delta = delta_for_set(s, w, depth, x);
        w[depth] = x;
        perms_subtree(s, n, w, used_mask | bit, depth + 1, occ + delta, tally);
    }
}

CountTable perms_scan(const PatternSet& s, int n, const EnumerateOptions& opts, bool parallel) {
    if (n < 0) throw PatternError("permutation length must be >= 0");
    if (n > opts.perm_cap)
        throw ResourceLimitError("permutation length " + std::to_string(n) +
                                 " exceeds the cap of " + std::to_string(opts.perm_cap));
    check_occ_range(s, n);
    CountTable table;
    table.patterns = s.str();
    table.domain = "perms";
    table.k = n;
    table.n = n;
    if (n == 0) {
        table.by_r[0] = 1;
        return table;
    }
    const int team = parallel ? resolve_threads(opts.threads) : 1;
    std::vector<Tally> tallies(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(team) if (parallel)
#endif
    for (int first = 1; first <= n; ++first) {
        std::vector<int> w(n);
        w[0] = first;
        perms_subtree(s, n, w, 1ULL << first, 1, 0, tallies[first - 1]);
    }
    for (const Tally& t : tallies) merge_into(table, t);
    return table;
}

std::uint64_t avoider_subtree(const AutomatonGraph& g, std::int64_t n, int depth, int state) {
    if (depth == n) return 1;
    std::uint64_t count = 0;
    for (int letter = 1; letter <= g.k; ++letter) {
        const int next = g.delta[state][letter - 1];
        if (next == g.sink()) continue;
        count += avoider_subtree(g, n, depth + 1, next);
    }
    return count;
}

BigInt avoiders_scan(const AutomatonGraph& g, std::int64_t n, const EnumerateOptions& opts,
                     bool parallel) {
    if (n < 0) throw PatternError("word length must be >= 0");
    check_budget(pow_int(g.k, n), opts, "pruned avoider scan over [" + std::to_string(g.k) +
                                            "]^" + std::to_string(n));
    if (n == 0) return 1;
    const int team = parallel ? resolve_threads(opts.threads) : 1;
    int prefix_len = 1;
    std::int64_t jobs = g.k;
    while (jobs < 4 * static_cast<std::int64_t>(team) &&
           prefix_len < std::min<std::int64_t>(n, 3)) {
        ++prefix_len;
        jobs *= g.k;
    }
    std::vector<std::uint64_t> partial(jobs, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(team) if (parallel)
#endif
    for (std::int64_t job = 0; job < jobs; ++job) {
        int state = 0;
        std::int64_t rest = job;
        std::vector<int> prefix(prefix_len);
        for (int pos = prefix_len - 1; pos >= 0; --pos) {
            prefix[pos] = static_cast<int>(rest % g.k) + 1;
            rest /= g.k;
        }
        for (int pos = 0; pos < prefix_len && state != g.sink(); ++pos)
            state = g.delta[state][prefix[pos] - 1];
        if (state == g.sink()) continue;
        partial[job] = avoider_subtree(g, n, prefix_len, state);
    }
    BigInt total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
}

}  // namespace

CountTable count_words_serial(const PatternSet& s, int k, std::int64_t n,
                              const EnumerateOptions& opts) {
    return words_scan(s, k, n, opts, false, false);
}

CountTable count_words(const PatternSet& s, int k, std::int64_t n, const EnumerateOptions& opts) {
    return words_scan(s, k, n, opts, false, true);
}

CountTable count_words(const Pattern& v, int k, std::int64_t n, const EnumerateOptions& opts) {
    return count_words(PatternSet{v}, k, n, opts);
}

CountTable count_perms_serial(const PatternSet& s, int n, const EnumerateOptions& opts) {
    return perms_scan(s, n, opts, false);
}

CountTable count_perms(const PatternSet& s, int n, const EnumerateOptions& opts) {
    return perms_scan(s, n, opts, true);
}

CountTable count_perms(const Pattern& v, int n, const EnumerateOptions& opts) {
    return count_perms(PatternSet{v}, n, opts);
}

CountTable count_words_surjective(const PatternSet& s, int a, std::int64_t n,
                                  const EnumerateOptions& opts) {
    return words_scan(s, a, n, opts, true, true);
}

BigInt count_avoiders_bruteforce_serial(const AutomatonGraph& g, std::int64_t n,
                                        const EnumerateOptions& opts) {
    return avoiders_scan(g, n, opts, false);
}

BigInt count_avoiders_bruteforce(const AutomatonGraph& g, std::int64_t n,
                                 const EnumerateOptions& opts) {
    return avoiders_scan(g, n, opts, true);
}

SubseqHistogram subseq_histogram(const Pattern& v, int k, std::int64_t n, std::int64_t r,
                                 const EnumerateOptions& opts) {
    if (r < 1) throw PatternError("subsequence histogram needs r >= 1");
    if (k < 1) throw PatternError("alphabet size must be >= 1");
    if (n < 0) throw PatternError("word length must be >= 0");
    const BigInt family = pow_int(k, n);
    check_budget(family, opts, "histogram scan over [" + std::to_string(k) + "]^" +
                                   std::to_string(n));
    SubseqHistogram hist;
    hist.pattern = v.str();
    hist.k = k;
    hist.n = n;
    hist.r = r;
    const std::int64_t total = family.convert_to<std::int64_t>();
    const int team = resolve_threads(opts.threads);
    std::vector<std::map<std::int64_t, std::uint64_t>> partial(team);
#ifdef _OPENMP
#pragma omp parallel num_threads(team)
#endif
    {
#ifdef _OPENMP
        const int me = omp_get_thread_num();
#else
        const int me = 0;
#endif
        Word w(n);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (std::int64_t idx = 0; idx < total; ++idx) {
            std::int64_t rest = idx;
            for (std::int64_t pos = n - 1; pos >= 0; --pos) {
                w[pos] = static_cast<int>(rest % k) + 1;
                rest /= k;
            }
            const auto occs = occurrences(v, w);
            if (static_cast<std::int64_t>(occs.size()) != r) continue;
            std::vector<bool> seen(n + 1, false);
            std::int64_t s = 0;
            for (const Occurrence& o : occs)
                for (int j : o)
                    if (!seen[j]) {
                        seen[j] = true;
                        ++s;
                    }
            ++partial[me][s];
        }
    }
    for (const auto& t : partial)
        for (const auto& [s, f] : t) hist.by_s[s] += f;
    return hist;
}

namespace {

// f_0 column for one alphabet on 1..n_max; nullopt marks unexplored cells.
std::vector<std::optional<BigInt>> avoider_column(const Pattern& v, int k, std::int64_t n_max,
                                                  const EnumerateOptions& opts) {
    std::vector<std::optional<BigInt>> column(n_max + 1);
    try {
        AutomatonGraph g = build_automaton(v, k, {opts.state_limit});
        auto counts = count_avoiders_upto(g, n_max);
        for (std::int64_t n = 1; n <= n_max; ++n) column[n] = counts[n];
        return column;
    } catch (const ResourceLimitError&) {
        // fall through to exhaustive scans per length
    }
    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (pow_int(k, n) > opts.budget) continue;
        column[n] = count_words(v, k, n, opts).at(0);
    }
    return column;
}

}  // namespace

WilfReport wilf_words_compare(const Pattern& v1, const Pattern& v2, int k_max,
                              std::int64_t n_max, const EnumerateOptions& opts) {
    WilfReport report;
    report.lhs_pattern = v1.str();
    report.rhs_pattern = v2.str();
    for (int k = 1; k <= k_max; ++k) {
        const auto lhs = avoider_column(v1, k, n_max, opts);
        const auto rhs = avoider_column(v2, k, n_max, opts);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            if (!lhs[n] || !rhs[n]) {
                report.unexplored.push_back({k, n});
                continue;
            }
            if (*lhs[n] != *rhs[n]) {
                report.verdict = WilfReport::Verdict::differ;
                report.witness = WilfCell{k, n};
                report.lhs = *lhs[n];
                report.rhs = *rhs[n];
                return report;
            }
        }
    }
    report.verdict = report.unexplored.empty() ? WilfReport::Verdict::equal_on_grid
                                               : WilfReport::Verdict::partial;
    return report;
}

WilfReport wilf_perms_compare(const Pattern& v1, const Pattern& v2, int n_max,
                              const EnumerateOptions& opts) {
    WilfReport report;
    report.lhs_pattern = v1.str();
    report.rhs_pattern = v2.str();
    for (int n = 1; n <= n_max; ++n) {
        BigInt lhs, rhs;
        try {
            lhs = count_perms(v1, n, opts).at(0);
            rhs = count_perms(v2, n, opts).at(0);
        } catch (const ResourceLimitError&) {
            report.unexplored.push_back({n, n});
            continue;
        }
        if (lhs != rhs) {
            report.verdict = WilfReport::Verdict::differ;
            report.witness = WilfCell{n, n};
            report.lhs = lhs;
            report.rhs = rhs;
            return report;
        }
    }
    report.verdict = report.unexplored.empty() ? WilfReport::Verdict::equal_on_grid
                                               : WilfReport::Verdict::partial;
    return report;
}

std::vector<Pattern> all_canonical_patterns(int length) {
    if (length < 2) throw PatternError("patterns have length >= 2");
    std::vector<Pattern> out;
    Word w(length, 1);
    while (true) {
        Pattern p(w);
        if (p.letters() == w) out.push_back(p);
        int pos = length - 1;
        while (pos >= 0 && w[pos] == length) w[pos--] = 1;
        if (pos < 0) break;
        ++w[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace patternlab
