// patternlab -- pattern occurrence machinery for k-ary words and permutations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "patternlab/automaton.hpp"
#include "patternlab/cache.hpp"
#include "patternlab/enumerate.hpp"
#include "patternlab/errors.hpp"
#include "patternlab/identities.hpp"
#include "patternlab/transfer.hpp"
#include "patternlab/verify.hpp"

using namespace patternlab;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitCache = 4;
constexpr int kExitInternal = 5;

struct GlobalOptions {
    int threads = 0;
    std::uint64_t budget = 100'000'000;
    std::size_t state_limit = 1'000'000;
    int perm_cap = 10;
    std::string cache_dir;
    std::string out;
    std::string format = "json";
};

EnumerateOptions enum_options(const GlobalOptions& g) {
    EnumerateOptions opts;
    opts.budget = g.budget;
    opts.threads = g.threads;
    opts.state_limit = g.state_limit;
    opts.perm_cap = g.perm_cap;
    return opts;
}

std::shared_ptr<DiskCache> open_cache(const GlobalOptions& g) {
    if (g.cache_dir.empty()) return nullptr;
    return std::make_shared<DiskCache>(g.cache_dir);
}

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(g.out);
    if (!file) throw std::runtime_error("cannot write to " + g.out);
    file << text;
    if (text.empty() || text.back() != '\n') file << '\n';
}

void require_format(const GlobalOptions& g, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (g.format == f) return;
    throw PatternError("format '" + g.format + "' is not valid for this command");
}

PatternSet parse_set(const std::vector<std::string>& texts) {
    std::vector<Pattern> patterns;
    patterns.reserve(texts.size());
    for (const std::string& t : texts) patterns.emplace_back(t);
    return PatternSet(std::move(patterns));
}

std::string count_csv(const CountTable& t) {
    std::ostringstream out;
    out << "k,n,r,count\n";
    for (const auto& [r, f] : t.by_r)
        out << t.k << ',' << t.n << ',' << r << ',' << f.str() << '\n';
    return out.str();
}

std::string count_table_text(const CountTable& t) {
    std::ostringstream out;
    out << "pattern " << t.patterns << "  domain " << t.domain << "  k=" << t.k
        << "  n=" << t.n << '\n';
    for (const auto& [r, f] : t.by_r) out << "  r=" << r << "  " << f.str() << '\n';
    return out.str();
}

ordered_json report_json(const Report& r) {
    ordered_json doc;
    doc["identity"] = r.name;
    doc["grid"] = r.grid;
    doc["status"] = r.pass ? "pass" : "fail";
    auto failures = ordered_json::array();
    for (const Failure& f : r.failures)
        failures.push_back(ordered_json{{"cell", f.cell}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    doc["failures"] = std::move(failures);
    if (!r.skipped.empty()) doc["skipped"] = r.skipped;
    return doc;
}

int run_count(const GlobalOptions& g, const std::vector<std::string>& patterns, int k,
              std::int64_t n, std::optional<std::int64_t> r, bool all) {
    require_format(g, {"json", "csv", "table"});
    const PatternSet s = parse_set(patterns);
    const EnumerateOptions opts = enum_options(g);
    CountProvider counts(opts, open_cache(g));

    ordered_json doc;
    doc["pattern"] = s.str();
    doc["k"] = k;
    doc["n"] = n;
    if (all || r.has_value()) {
        CountTable t;
        t.patterns = s.str();
        t.domain = "words";
        t.k = k;
        t.n = n;
        t.by_r = counts.words_table(s, k, n);
        if (all) {
            ordered_json table = ordered_json::object();
            for (const auto& [rr, f] : t.by_r) table[std::to_string(rr)] = f.str();
            doc["table"] = std::move(table);
        } else {
            doc["f" + std::to_string(*r)] = t.at(*r).str();
        }
        if (g.format == "csv") {
            emit(g, count_csv(t));
            return 0;
        }
        if (g.format == "table") {
            emit(g, count_table_text(t));
            return 0;
        }
    } else {
        // avoidance count: transfer matrix when the automaton fits, scan otherwise
        BigInt f0;
        if (!s.single()) {
            f0 = count_words(s, k, n, opts).at(0);
        } else {
            try {
                f0 = count_avoiders(build_automaton(s.patterns()[0], k, {g.state_limit}), n);
            } catch (const ResourceLimitError&) {
                f0 = count_words(s, k, n, opts).at(0);
            }
        }
        doc["f0"] = f0.str();
        if (g.format == "csv") {
            emit(g, "k,n,r,count\n" + std::to_string(k) + "," + std::to_string(n) + ",0," +
                        f0.str() + "\n");
            return 0;
        }
        if (g.format == "table") {
            emit(g, "pattern " + s.str() + "  k=" + std::to_string(k) +
                        "  n=" + std::to_string(n) + "  f0=" + f0.str() + "\n");
            return 0;
        }
    }
    emit(g, doc.dump(2));
    return 0;
}

int run_perm_count(const GlobalOptions& g, const std::vector<std::string>& patterns, int n,
                   std::int64_t r, bool all) {
    require_format(g, {"json", "csv", "table"});
    const PatternSet s = parse_set(patterns);
    CountProvider counts(enum_options(g), open_cache(g));
    CountTable t;
    t.patterns = s.str();
    t.domain = "perms";
    t.k = n;
    t.n = n;
    t.by_r = counts.perms_table(s, n);
    if (g.format == "csv") {
        emit(g, count_csv(t));
        return 0;
    }
    if (g.format == "table") {
        emit(g, count_table_text(t));
        return 0;
    }
    ordered_json doc;
    doc["pattern"] = s.str();
    doc["n"] = n;
    if (all) {
        ordered_json table = ordered_json::object();
        for (const auto& [rr, f] : t.by_r) table[std::to_string(rr)] = f.str();
        doc["table"] = std::move(table);
    } else {
        doc["f" + std::to_string(r)] = t.at(r).str();
    }
    emit(g, doc.dump(2));
    return 0;
}

int run_automaton(const GlobalOptions& g, const std::string& pattern, int k, bool include_sink,
                  bool matrix) {
    require_format(g, {"json", "dot"});
    const Pattern v(pattern);
    const AutomatonGraph graph = build_automaton(v, k, {g.state_limit});
    if (matrix) {
        require_format(g, {"json"});
        emit(g, matrix_json(transition_matrix(graph)));
        return 0;
    }
    if (g.format == "dot")
        emit(g, export_dot(graph, {.include_sink = include_sink}));
    else
        emit(g, export_json(graph));
    return 0;
}

int run_growth(const GlobalOptions& g, const std::string& pattern, int k) {
    require_format(g, {"json", "table"});
    const Pattern v(pattern);
    const GrowthRate rate = growth_rate(build_automaton(v, k, {g.state_limit}));
    if (g.format == "table") {
        emit(g, "pattern " + v.str() + "  k=" + std::to_string(k) +
                    "  rate=" + std::to_string(rate.rate) +
                    (rate.degenerate ? "  (degenerate: every word avoids)" : "") + "\n");
        return 0;
    }
    ordered_json doc;
    doc["pattern"] = v.str();
    doc["k"] = k;
    doc["rate"] = rate.rate;
    doc["degenerate"] = rate.degenerate;
    emit(g, doc.dump(2));
    return 0;
}

int run_simulate(const GlobalOptions& g, const std::string& pattern, int k, std::int64_t n,
                 std::int64_t trials, std::uint64_t seed) {
    require_format(g, {"json"});
    const Pattern v(pattern);
    const AutomatonGraph graph = build_automaton(v, k, {g.state_limit});
    const SimulationResult r = simulate(graph, n, trials, seed, g.threads);
    ordered_json doc;
    doc["pattern"] = v.str();
    doc["k"] = k;
    doc["n"] = n;
    doc["trials"] = r.trials;
    doc["seed"] = r.seed;
    doc["hits"] = r.hits;
    doc["estimate"] = numerator(r.estimate).str() + "/" + denominator(r.estimate).str();
    doc["std_error"] = r.std_error;
    emit(g, doc.dump(2));
    return 0;
}

int run_wilf(const GlobalOptions& g, const std::vector<std::string>& patterns, int k_max,
             std::int64_t n_max, const std::string& domain) {
    require_format(g, {"json", "table"});
    if (patterns.size() != 2) throw PatternError("wilf compares exactly two patterns");
    const Pattern a(patterns[0]), b(patterns[1]);
    const EnumerateOptions opts = enum_options(g);
    const WilfReport r = domain == "perms"
                             ? wilf_perms_compare(a, b, static_cast<int>(n_max), opts)
                             : wilf_words_compare(a, b, k_max, n_max, opts);
    ordered_json doc;
    doc["patterns"] = {a.str(), b.str()};
    doc["domain"] = domain;
    doc["verdict"] = r.verdict == WilfReport::Verdict::equal_on_grid ? "equal-on-grid"
                     : r.verdict == WilfReport::Verdict::differ      ? "differ"
                                                                     : "partial";
    if (r.witness) {
        doc["witness"] = ordered_json{{"k", r.witness->k},
                                      {"n", r.witness->n},
                                      {"lhs", r.lhs.str()},
                                      {"rhs", r.rhs.str()}};
    }
    if (!r.unexplored.empty()) {
        auto cells = ordered_json::array();
        for (const WilfCell& c : r.unexplored)
            cells.push_back(ordered_json{{"k", c.k}, {"n", c.n}});
        doc["unexplored"] = std::move(cells);
    }
    if (g.format == "table") {
        std::ostringstream out;
        out << a.str() << " vs " << b.str() << " over " << domain << ": "
            << doc["verdict"].get<std::string>();
        if (r.witness)
            out << " at k=" << r.witness->k << " n=" << r.witness->n << " (" << r.lhs.str()
                << " vs " << r.rhs.str() << ")";
        out << '\n';
        emit(g, out.str());
        return 0;
    }
    emit(g, doc.dump(2));
    return 0;
}

int run_histogram(const GlobalOptions& g, const std::string& pattern, int k, std::int64_t n,
                  std::int64_t r) {
    require_format(g, {"json", "csv", "table"});
    const Pattern v(pattern);
    const SubseqHistogram h = subseq_histogram(v, k, n, r, enum_options(g));
    if (g.format == "csv") {
        std::ostringstream out;
        out << "k,n,r,s,count\n";
        for (const auto& [s, f] : h.by_s)
            out << k << ',' << n << ',' << r << ',' << s << ',' << f.str() << '\n';
        emit(g, out.str());
        return 0;
    }
    if (g.format == "table") {
        std::ostringstream out;
        out << "pattern " << v.str() << "  k=" << k << "  n=" << n << "  r=" << r << '\n';
        for (const auto& [s, f] : h.by_s) out << "  s=" << s << "  " << f.str() << '\n';
        emit(g, out.str());
        return 0;
    }
    ordered_json doc;
    doc["pattern"] = v.str();
    doc["k"] = k;
    doc["n"] = n;
    doc["r"] = r;
    ordered_json table = ordered_json::object();
    for (const auto& [s, f] : h.by_s) table[std::to_string(s)] = f.str();
    doc["table"] = std::move(table);
    emit(g, doc.dump(2));
    return 0;
}

struct VerifyGridArgs {
    int k_max = 0;
    std::int64_t n_max = 0;
    int l_max = 0;
    std::int64_t r_max = -1;
    int order = 0;
    std::vector<std::string> patterns;
    std::uint64_t seed = 20240817;
    std::int64_t trials = 100000;
};

int run_verify(const GlobalOptions& g, const std::string& suite, const VerifyGridArgs& args) {
    require_format(g, {"json", "table"});
    const EnumerateOptions opts = enum_options(g);
    CountProvider counts(opts, open_cache(g));

    std::vector<Pattern> chosen;
    for (const std::string& t : args.patterns) chosen.emplace_back(t);

    std::vector<Report> reports;
    const bool all = suite == "all";
    if (all || suite == "bounds") {
        const std::vector<Pattern> defaults{Pattern("123"), Pattern("132"), Pattern("213"),
                                            Pattern("231"), Pattern("312"), Pattern("321")};
        reports.push_back(check_bounds_sandwich(chosen.empty() ? defaults : chosen,
                                                args.k_max ? args.k_max : 4,
                                                args.n_max ? args.n_max : 40));
        reports.push_back(check_growth_ratio(Pattern("123"), 4, 500, BigRat(1, 20)));
    }
    if (all || suite == "lemmas") {
        const int l_max = args.l_max ? args.l_max : 4;
        const int k_max = args.k_max ? args.k_max : 5;
        reports.push_back(check_lemmas(l_max, l_max, k_max, g.state_limit));
        reports.push_back(check_growth_diagonal(l_max, l_max, k_max, g.state_limit));
    }
    if (all || suite == "theorem2") {
        reports.push_back(check_theorem2(counts, args.l_max ? args.l_max : 3,
                                         args.r_max >= 0 ? args.r_max : 2,
                                         args.n_max ? args.n_max : 7));
        reports.push_back(check_yna(counts, PatternSet{Pattern("123")}, 4, 5));
        reports.push_back(check_yna(counts, PatternSet{Pattern("12"), Pattern("21")}, 4, 5));
    }
    if (all || suite == "closed-forms") {
        reports.push_back(check_closed_forms(counts, args.k_max ? args.k_max : 4,
                                             args.n_max ? args.n_max : 8, 9));
        reports.push_back(check_binomial_identity(25));
    }
    if (all || suite == "egf") {
        const std::vector<Pattern> defaults{Pattern("12"), Pattern("123")};
        reports.push_back(check_egf(counts, chosen.empty() ? defaults : chosen,
                                    args.r_max >= 0 ? args.r_max : 1,
                                    args.order ? args.order : 6));
    }
    if (all || suite == "sdisc") {
        const std::vector<Pattern> defaults{Pattern("12"), Pattern("123"), Pattern("132")};
        reports.push_back(check_sdisc(counts, chosen.empty() ? defaults : chosen,
                                      args.n_max ? args.n_max : 7));
    }
    if (all) {
        reports.push_back(check_figures());
        reports.push_back(check_simulation(Pattern("123"), 4, 10, args.trials, args.seed));
        reports.push_back(check_decomposition(counts, Pattern("123"), 3, 6, 1));
    }
    if (reports.empty()) throw PatternError("unknown verify suite '" + suite + "'");

    bool ok = true;
    if (g.format == "table") {
        std::ostringstream out;
        for (const Report& r : reports) {
            ok = ok && r.pass;
            out << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.grid << "]";
            if (!r.failures.empty()) out << "  failures=" << r.failures.size();
            out << '\n';
            for (const Failure& f : r.failures)
                out << "    " << f.cell << ": " << f.lhs << " vs " << f.rhs << '\n';
        }
        emit(g, out.str());
    } else {
        auto doc = ordered_json::array();
        for (const Report& r : reports) {
            ok = ok && r.pass;
            doc.push_back(report_json(r));
        }
        emit(g, doc.dump(2));
    }
    return ok ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern occurrence machinery for k-ary words and permutations"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--threads", g.threads, "worker threads (0 = all)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget", g.budget, "largest family an exhaustive scan may visit")
        ->check(CLI::PositiveNumber);
    app.add_option("--state-limit", g.state_limit, "largest live state count per automaton")
        ->check(CLI::PositiveNumber);
    app.add_option("--perm-cap", g.perm_cap, "largest n for permutation enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", g.cache_dir, "count-table cache directory")
        ->envname("PATTERNLAB_CACHE");
    app.add_option("--out", g.out, "write output to this file instead of stdout");
    app.add_option("--format", g.format, "json, csv, table, or dot (automaton only)");

    std::vector<std::string> patterns;
    int k = 0;
    std::int64_t n = 0;
    std::optional<std::int64_t> r_opt;
    std::int64_t r_perm = 0;
    bool all = false, include_sink = false, matrix = false;
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    int k_max = 4;
    std::int64_t n_max = 8;
    std::string domain = "words";
    std::string suite;
    VerifyGridArgs grid;

    auto add_pattern = [&patterns](CLI::App* cmd, bool multi) {
        cmd->add_option("--pattern", patterns,
                        "pattern (digit string, or comma-separated letters over 9)")
            ->expected(multi ? -1 : 1);
        cmd->add_option("--patterns", patterns, "several patterns forming a set")
            ->expected(-1);
    };

    CLI::App* count = app.add_subcommand("count", "exact f_r over [k]^n");
    add_pattern(count, true);
    count->add_option("--k", k, "alphabet size")->required();
    count->add_option("--n", n, "word length")->required();
    count->add_option("--r", r_opt, "occurrence count to report (default 0 via transfer)");
    count->add_flag("--all", all, "report the whole distribution");

    CLI::App* perm = app.add_subcommand("perm-count", "exact f_r over S_n");
    add_pattern(perm, true);
    perm->add_option("--n", n, "permutation length")->required();
    perm->add_option("--r", r_perm, "occurrence count to report");
    perm->add_flag("--all", all, "report the whole distribution");

    CLI::App* automaton = app.add_subcommand("automaton", "avoidance automaton export");
    add_pattern(automaton, false);
    automaton->add_option("--k", k, "alphabet size")->required();
    automaton->add_flag("--include-sink", include_sink, "draw the absorbing sink too");
    automaton->add_flag("--matrix", matrix, "emit the transition matrix instead");

    CLI::App* growth = app.add_subcommand("growth", "avoider growth rate");
    add_pattern(growth, false);
    growth->add_option("--k", k, "alphabet size")->required();

    CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo avoidance probability");
    add_pattern(sim, false);
    sim->add_option("--k", k, "alphabet size")->required();
    sim->add_option("--n", n, "word length")->required();
    sim->add_option("--trials", trials, "number of walks")->check(CLI::PositiveNumber);
    sim->add_option("--seed", seed, "PRNG seed");

    CLI::App* wilf = app.add_subcommand("wilf", "compare avoidance counts of two patterns");
    add_pattern(wilf, true);
    wilf->add_option("--k-max", k_max, "alphabet ceiling (words)");
    wilf->add_option("--n-max", n_max, "length ceiling");
    wilf->add_option("--domain", domain, "words or perms")
        ->check(CLI::IsMember({"words", "perms"}));

    CLI::App* hist = app.add_subcommand("histogram", "occurrence-subsequence lengths");
    add_pattern(hist, false);
    hist->add_option("--k", k, "alphabet size")->required();
    hist->add_option("--n", n, "word length")->required();
    hist->add_option("--r", r_perm, "occurrence count (>= 1)")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a named identity suite");
    verify->add_option("suite", suite,
                       "bounds, lemmas, theorem2, closed-forms, egf, sdisc, or all")
        ->required();
    verify->add_option("--pattern", grid.patterns, "pattern override")->expected(-1);
    verify->add_option("--patterns", grid.patterns, "pattern override")->expected(-1);
    verify->add_option("--k-max", grid.k_max, "alphabet ceiling");
    verify->add_option("--n-max", grid.n_max, "length ceiling");
    verify->add_option("--l-max", grid.l_max, "pattern length ceiling");
    verify->add_option("--r-max", grid.r_max, "occurrence ceiling");
    verify->add_option("--order", grid.order, "EGF truncation order");
    verify->add_option("--seed", grid.seed, "simulation seed");
    verify->add_option("--trials", grid.trials, "simulation trials");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) {
            if (patterns.empty()) throw PatternError("count needs --pattern");
            return run_count(g, patterns, k, n, r_opt, all);
        }
        if (perm->parsed()) {
            if (patterns.empty()) throw PatternError("perm-count needs --pattern");
            return run_perm_count(g, patterns, static_cast<int>(n), r_perm, all);
        }
        if (automaton->parsed()) {
            if (patterns.size() != 1) throw PatternError("automaton needs one --pattern");
            return run_automaton(g, patterns[0], k, include_sink, matrix);
        }
        if (growth->parsed()) {
            if (patterns.size() != 1) throw PatternError("growth needs one --pattern");
            return run_growth(g, patterns[0], k);
        }
        if (sim->parsed()) {
            if (patterns.size() != 1) throw PatternError("simulate needs one --pattern");
            return run_simulate(g, patterns[0], k, n, trials, seed);
        }
        if (wilf->parsed()) return run_wilf(g, patterns, k_max, n_max, domain);
        if (hist->parsed()) {
            if (patterns.size() != 1) throw PatternError("histogram needs one --pattern");
            return run_histogram(g, patterns[0], k, n, r_perm);
        }
        if (verify->parsed()) return run_verify(g, suite, grid);
    } catch (const PatternError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const DependencyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const CacheError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCache;
    } catch (const IdentityViolationError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitBadInput;
}
