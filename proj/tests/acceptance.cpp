// Acceptance suite: every release gate in one binary, one line per
// criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "patternlab/verify.hpp"

using namespace patternlab;

namespace {

int failed_criteria = 0;

Report merge(Report a, const Report& b) {
    a.name += " + " + b.name;
    a.grid += " | " + b.grid;
    a.pass = a.pass && b.pass;
    a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
    a.skipped.insert(a.skipped.end(), b.skipped.begin(), b.skipped.end());
    return a;
}

template <typename MakeReport>
void run(int index, const std::string& label, MakeReport&& make) {
    using clock = std::chrono::steady_clock;
    const clock::time_point start = clock::now();
    const Report report = make();
    const double seconds =
        std::chrono::duration<double>(clock::now() - start).count();
    std::printf("criterion %2d: %s  (%s; %s; %.1fs)\n", index,
                report.pass ? "PASS" : "FAIL", label.c_str(), report.grid.c_str(), seconds);
    if (!report.pass) {
        ++failed_criteria;
        std::size_t shown = 0;
        for (const Failure& f : report.failures) {
            std::printf("    %s: got %s, want %s\n", f.cell.c_str(), f.lhs.c_str(),
                        f.rhs.c_str());
            if (++shown == 10 && report.failures.size() > 10) {
                std::printf("    ... %zu more failures\n", report.failures.size() - 10);
                break;
            }
        }
    }
    for (const std::string& s : report.skipped) std::printf("    skipped: %s\n", s.c_str());
}

}  // namespace

int main() {
    CountProvider counts;
    const std::vector<Pattern> l3_perms{Pattern("123"), Pattern("132"), Pattern("213"),
                                        Pattern("231"), Pattern("312"), Pattern("321")};

    run(1, "transfer counts equal exhaustive avoider counts",
        [&] { return check_count_oracle(counts, 3, 4, 8); });
    run(2, "automaton detection agrees with occ = 0",
        [] { return check_detection_oracle(3, 3, 7); });
    run(3, "avoider counts sit in the pure-birth sandwich",
        [&] { return check_bounds_sandwich(l3_perms, 4, 40); });
    run(4, "advancing-letter floor and chain-size cap", [] { return check_lemmas(4, 4, 5); });
    run(5, "growth rate: structural diagonal and ratio", [] {
        return merge(check_growth_diagonal(4, 4, 5),
                     check_growth_ratio(Pattern("123"), 4, 500, BigRat(1, 20)));
    });
    run(6, "permutation counts from word counts",
        [&] { return check_theorem2(counts, 3, 2, 7); });
    run(7, "EGF relation to order 6",
        [&] { return check_egf(counts, {Pattern("12"), Pattern("123")}, 1, 6); });
    run(8, "closed forms match enumerated counts",
        [&] { return check_closed_forms(counts, 4, 8, 9); });
    run(9, "binomial identity and permutation-word inequality", [&] {
        return merge(check_binomial_identity(25),
                     check_sdisc(counts, {Pattern("12"), Pattern("123"), Pattern("132")}, 7));
    });
    run(10, "published diagrams: live state counts", [] { return check_figures(); });
    run(11, "simulation within four standard errors, reproducible",
        [] { return check_simulation(Pattern("123"), 4, 10, 100000, 20240817); });
    run(12, "occurrence-subsequence decomposition",
        [&] { return check_decomposition(counts, Pattern("123"), 3, 6, 1); });

    if (failed_criteria == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failed_criteria);
    return 1;
}
