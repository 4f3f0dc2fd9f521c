#include "patternlab/verify.hpp"

#include <optional>
#include <sstream>

#include "patternlab/errors.hpp"
#include "patternlab/transfer.hpp"

namespace patternlab {

namespace {

std::vector<Pattern> patterns_up_to(int l_max, int d_max = 0) {
    std::vector<Pattern> out;
    for (int l = 2; l <= l_max; ++l)
        for (const Pattern& v : all_canonical_patterns(l))
            if (d_max == 0 || v.distinct() <= d_max) out.push_back(v);
    return out;
}

std::string cell_tag(const Pattern& v, int k, std::int64_t n) {
    std::ostringstream out;
    out << "v=" << v.str() << " k=" << k << " n=" << n;
    return out.str();
}

}  // namespace

Report check_count_oracle(CountProvider& counts, int l_max, int k_max, std::int64_t n_max) {
    Report report{"count-oracle", "l<=" + std::to_string(l_max) + " k<=" + std::to_string(k_max) +
                                      " n<=" + std::to_string(n_max)};
    for (const Pattern& v : patterns_up_to(l_max)) {
        const PatternSet s{v};
        for (int k = 1; k <= k_max; ++k) {
            const AutomatonGraph g = build_automaton(v, k);
            const auto transfer = count_avoiders_upto(g, n_max);
            for (std::int64_t n = 0; n <= n_max; ++n) {
                const BigInt brute = counts.words(s, k, n, 0);
                if (transfer[n] != brute)
                    report.fail(cell_tag(v, k, n), transfer[n].str(), brute.str());
            }
        }
    }
    return report;
}

Report check_detection_oracle(int l_max, int k_max, std::int64_t n_max) {
    Report report{"detection-oracle", "l<=" + std::to_string(l_max) + " k<=" +
                                          std::to_string(k_max) + " n<=" + std::to_string(n_max)};
    for (const Pattern& v : patterns_up_to(l_max)) {
        for (int k = 1; k <= k_max; ++k) {
            const AutomatonGraph g = build_automaton(v, k);
            for (std::int64_t n = 0; n <= n_max; ++n) {
                Word w(n, 1);
                std::int64_t remaining = 1;
                for (std::int64_t i = 0; i < n; ++i) remaining *= k;
                while (remaining-- > 0) {
                    const bool scanned = detect_avoidance(g, w);
                    const bool counted = occ(v, w) == 0;
                    if (scanned != counted)
                        report.fail(cell_tag(v, k, n) + " w=" + format_word(w),
                                    scanned ? "avoids" : "contains",
                                    counted ? "avoids" : "contains");
                    // next word in [k]^n
                    std::int64_t pos = n - 1;
                    while (pos >= 0 && w[pos] == k) w[pos--] = 1;
                    if (pos < 0) break;
                    ++w[pos];
                }
            }
        }
    }
    return report;
}

Report check_bounds_sandwich(const std::vector<Pattern>& patterns, int k, std::int64_t n_max) {
    Report report{"bounds-sandwich", "k=" + std::to_string(k) + " n<=" + std::to_string(n_max)};
    for (const Pattern& v : patterns) {
        const int d = v.distinct();
        const int l = v.length();
        if (d < 2) throw PatternError("bounds need d >= 2, got pattern " + v.str());
        const AutomatonGraph g = build_automaton(v, k);
        const auto counts = count_avoiders_upto(g, n_max);
        const BigInt phi = binomial(k, d);
        const std::int64_t regime_from = l * phi.convert_to<std::int64_t>() + 1;
        for (std::int64_t n = regime_from; n <= n_max; ++n) {
            const BigInt lower = pow_int(d - 1, n);
            const BirthBound upper = birth_bound(k, d, l, n);
            if (!upper.in_regime)
                report.fail(cell_tag(v, k, n), "in_regime=false", "in_regime=true");
            if (lower > counts[n])
                report.fail(cell_tag(v, k, n) + " lower", lower.str(), counts[n].str());
            if (BigRat(counts[n]) > upper.value)
                report.fail(cell_tag(v, k, n) + " upper", counts[n].str(),
                            numerator(upper.value).str() + "/" + denominator(upper.value).str());
        }
    }
    return report;
}

Report check_lemmas(int l_max, int d_max, int k_max, std::size_t state_limit) {
    Report report{"lemmas", "l<=" + std::to_string(l_max) + " d<=" + std::to_string(d_max) +
                                " k<=" + std::to_string(k_max)};
    for (const Pattern& v : patterns_up_to(l_max, d_max)) {
        const int d = v.distinct();
        const int l = v.length();
        for (int k = 1; k <= k_max; ++k) {
            AutomatonOptions opts;
            opts.state_limit = state_limit;
            std::optional<AutomatonGraph> built;
            try {
                built.emplace(build_automaton(v, k, opts));
            } catch (const ResourceLimitError&) {
                report.skipped.push_back(cell_tag(v, k, -1) + " over state limit");
                continue;
            }
            const AutomatonGraph& g = *built;
            const int l_floor = k - d + 1;
            for (int id = 0; id < g.live_count(); ++id) {
                const int adv = static_cast<int>(g.advancing(id).size());
                if (adv < l_floor)
                    report.fail(cell_tag(v, k, -1) + " state " + state_label(g.inst, g.live[id]),
                                std::to_string(adv), ">=" + std::to_string(l_floor));
            }
            // The chain bound presumes the pattern fits the alphabet; k < d
            // degenerates to the single null state.
            if (k >= d) {
                const BigInt depth_cap = binomial(k, d) * l;
                if (BigInt(g.depth) > depth_cap)
                    report.fail(cell_tag(v, k, -1) + " depth", std::to_string(g.depth),
                                "<=" + depth_cap.str());
            }
        }
    }
    return report;
}

Report check_growth_diagonal(int l_max, int d_max, int k_max, std::size_t state_limit) {
    Report report{"growth-diagonal", "l<=" + std::to_string(l_max) + " d<=" +
                                         std::to_string(d_max) + " k<=" + std::to_string(k_max)};
    for (const Pattern& v : patterns_up_to(l_max, d_max)) {
        const int d = v.distinct();
        for (int k = d; k <= k_max; ++k) {
            AutomatonOptions opts;
            opts.state_limit = state_limit;
            std::optional<AutomatonGraph> built;
            try {
                built.emplace(build_automaton(v, k, opts));
            } catch (const ResourceLimitError&) {
                report.skipped.push_back(cell_tag(v, k, -1) + " over state limit");
                continue;
            }
            const GrowthRate rate = growth_rate(*built);
            if (rate.degenerate || rate.rate != d - 1)
                report.fail(cell_tag(v, k, -1) + " max diagonal", std::to_string(rate.rate),
                            std::to_string(d - 1));
        }
    }
    return report;
}

Report check_growth_ratio(const Pattern& v, int k, std::int64_t n, const BigRat& tol) {
    Report report{"growth-ratio", cell_tag(v, k, n)};
    const AutomatonGraph g = build_automaton(v, k);
    const auto counts = count_avoiders_upto(g, n + 1);
    const BigRat ratio(counts[n + 1], counts[n]);
    BigRat gap = ratio - (v.distinct() - 1);
    if (gap < 0) gap = -gap;
    if (gap > tol) {
        std::ostringstream lhs, rhs;
        lhs << gap;
        rhs << tol;
        report.fail("ratio gap at n=" + std::to_string(n), lhs.str(), "<=" + rhs.str());
    }
    return report;
}

Report check_theorem2(CountProvider& counts, int l_max, std::int64_t r_max, std::int64_t n_max) {
    Report report{"theorem2", "l<=" + std::to_string(l_max) + " r<=" + std::to_string(r_max) +
                                  " n<=" + std::to_string(n_max)};
    std::vector<PatternSet> inputs;
    for (const Pattern& v : patterns_up_to(l_max)) inputs.push_back(PatternSet{v});
    inputs.push_back(PatternSet{Pattern("12"), Pattern("21")});
    for (const PatternSet& s : inputs) {
        for (std::int64_t r = 0; r <= r_max; ++r) {
            for (std::int64_t n = 1; n <= n_max; ++n) {
                const BigInt alternating = perms_from_words(counts, s, r, n);
                const BigInt direct = counts.perms(s, static_cast<int>(n), r);
                if (alternating != direct)
                    report.fail("s=" + s.str() + " r=" + std::to_string(r) +
                                    " n=" + std::to_string(n),
                                alternating.str(), direct.str());
            }
        }
    }
    return report;
}

Report check_yna(CountProvider& counts, const PatternSet& s, int a_max, std::int64_t n_max) {
    Report report{"yna-decomposition",
                  "s=" + s.str() + " a<=" + std::to_string(a_max) + " n<=" + std::to_string(n_max)};
    for (int a = 1; a <= a_max; ++a)
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const YnaCheck c = yna_decomposition_check(counts, s, a, n);
            if (!c.equal)
                report.fail("a=" + std::to_string(a) + " n=" + std::to_string(n), c.direct.str(),
                            c.alternating.str());
        }
    // Y_n([n]) is exactly the permutation set.
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(n_max, a_max); ++n) {
        const BigInt surj = counts.surjective(s, static_cast<int>(n), n, 0);
        const BigInt perm = counts.perms(s, static_cast<int>(n), 0);
        if (surj != perm)
            report.fail("Y_n([n]) n=" + std::to_string(n), surj.str(), perm.str());
    }
    return report;
}

Report check_egf(CountProvider& counts, const std::vector<Pattern>& patterns, std::int64_t r_max,
                 int order) {
    Report report{"egf", "order<=" + std::to_string(order)};
    for (const Pattern& v : patterns)
        for (std::int64_t r = 0; r <= r_max; ++r) {
            const EgfCheck c = egf_identity_check(counts, PatternSet{v}, r, order);
            if (!c.equal)
                report.fail("v=" + v.str() + " r=" + std::to_string(r),
                            "mismatch at order " + std::to_string(*c.first_mismatch),
                            "equal to order " + std::to_string(order));
        }
    return report;
}

Report check_closed_forms(CountProvider& counts, int k_max, std::int64_t n_max,
                          std::int64_t catalan_n_max) {
    Report report{"closed-forms", "k<=" + std::to_string(k_max) + " n<=" + std::to_string(n_max) +
                                      " perms n<=" + std::to_string(catalan_n_max)};
    const Pattern v123("123"), v132("132"), v12("12");
    for (int k = 1; k <= k_max; ++k) {
        const AutomatonGraph g123 = build_automaton(v123, k);
        const auto transfer123 = count_avoiders_upto(g123, n_max);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const BigInt formula = burstein_closed_form(k, n);
            const BigInt brute123 = counts.words(PatternSet{v123}, k, n, 0);
            const BigInt brute132 = counts.words(PatternSet{v132}, k, n, 0);
            if (formula != brute123)
                report.fail(cell_tag(v123, k, n) + " closed form", formula.str(),
                            brute123.str());
            if (formula != brute132)
                report.fail(cell_tag(v132, k, n) + " closed form", formula.str(),
                            brute132.str());
            if (formula != transfer123[n])
                report.fail(cell_tag(v123, k, n) + " transfer", formula.str(),
                            transfer123[n].str());
            const BigInt weak = weak_words_closed_form(k, n);
            const BigInt brute12 = counts.words(PatternSet{v12}, k, n, 0);
            if (weak != brute12)
                report.fail(cell_tag(v12, k, n) + " closed form", weak.str(), brute12.str());
        }
    }
    for (std::int64_t n = 0; n <= catalan_n_max; ++n) {
        const BigInt cat = catalan(n);
        const BigInt p123 = counts.perms(PatternSet{v123}, static_cast<int>(n), 0);
        const BigInt p132 = counts.perms(PatternSet{v132}, static_cast<int>(n), 0);
        if (cat != p123) report.fail("catalan n=" + std::to_string(n), cat.str(), p123.str());
        if (cat != p132) report.fail("catalan n=" + std::to_string(n), cat.str(), p132.str());
    }
    return report;
}

Report check_binomial_identity(std::int64_t n_max) {
    Report report{"binomial-identity", "n<=" + std::to_string(n_max)};
    for (std::int64_t n = 1; n <= n_max; ++n)
        if (!binomial_identity_check(n))
            report.fail("n=" + std::to_string(n), "!=1", "1");
    return report;
}

Report check_sdisc(CountProvider& counts, const std::vector<Pattern>& patterns,
                   std::int64_t n_max) {
    Report report{"sdisc", "n<=" + std::to_string(n_max)};
    for (const Pattern& v : patterns)
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const SdiscCheck c = sdisc_check(counts, PatternSet{v}, n);
            if (!c.holds)
                report.fail("v=" + v.str() + " n=" + std::to_string(n), c.lhs.str(),
                            "<=" + c.rhs.str());
        }
    return report;
}

Report check_figures() {
    Report report{"figure-regressions", "k=4"};
    const struct {
        const char* pattern;
        int live;
    } expected[] = {{"123", 12}, {"213", 10}, {"132", 12}};
    for (const auto& e : expected) {
        const AutomatonGraph g = build_automaton(Pattern(e.pattern), 4);
        if (g.live_count() != e.live)
            report.fail(std::string("v=") + e.pattern + " k=4", std::to_string(g.live_count()),
                        std::to_string(e.live));
    }
    return report;
}

Report check_simulation(const Pattern& v, int k, std::int64_t n, std::int64_t trials,
                        std::uint64_t seed) {
    Report report{"simulation", cell_tag(v, k, n) + " trials=" + std::to_string(trials)};
    const AutomatonGraph g = build_automaton(v, k);
    const BigRat exact = avoidance_probability(g, n);
    const SimulationResult run = simulate(g, n, trials, seed);
    BigRat gap = run.estimate - exact;
    if (gap < 0) gap = -gap;
    const BigRat band(4.0 * run.std_error);
    if (gap > band) {
        std::ostringstream lhs, rhs;
        lhs << gap;
        rhs << band;
        report.fail("estimate gap", lhs.str(), "<=" + rhs.str());
    }
    const SimulationResult again = simulate(g, n, trials, seed);
    if (again.hits != run.hits || again.estimate != run.estimate ||
        again.std_error != run.std_error)
        report.fail("seed reproducibility", std::to_string(again.hits),
                    std::to_string(run.hits));
    const SimulationResult other_team = simulate(g, n, trials, seed, 3);
    if (other_team.hits != run.hits)
        report.fail("thread-count independence", std::to_string(other_team.hits),
                    std::to_string(run.hits));
    return report;
}

Report check_decomposition(CountProvider& counts, const Pattern& v, int k, std::int64_t n,
                           std::int64_t r) {
    Report report{"subsequence-decomposition", cell_tag(v, k, n) + " r=" + std::to_string(r)};
    const PatternSet s{v};
    const std::int64_t l = v.length();
    const SubseqHistogram hist = subseq_histogram(v, k, n, r, counts.options());
    for (const auto& [len, f] : hist.by_s) {
        if (f == 0) continue;
        if (len < l + r - 1 || len > r * l)
            report.fail("support s=" + std::to_string(len), f.str(), "0");
    }
    const BigInt fr = counts.words(s, k, n, r);
    if (hist.total() != fr) report.fail("mass", hist.total().str(), fr.str());
    for (std::int64_t len = l + r - 1; len <= r * l; ++len) {
        const BigInt f0_rest = counts.words(s, k, n - len, 0);
        const BigInt fs = [&] {
            auto it = hist.by_s.find(len);
            return it == hist.by_s.end() ? BigInt(0) : it->second;
        }();
        const BigInt upper = pow_int(k, len) * binomial(n, len) * f0_rest;
        if (fs < f0_rest)
            report.fail("sandwich lower s=" + std::to_string(len), fs.str(),
                        ">=" + f0_rest.str());
        if (fs > upper)
            report.fail("sandwich upper s=" + std::to_string(len), fs.str(),
                        "<=" + upper.str());
    }
    return report;
}

}  // namespace patternlab
