#include "patternlab/transfer.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "patternlab/errors.hpp"

namespace patternlab {

BigRat TransitionMatrix::at(int row, int col) const {
    for (const auto& [c, p] : rows[row])
        if (c == col) return p;
    return BigRat(0);
}

TransitionMatrix transition_matrix(const AutomatonGraph& g) {
    TransitionMatrix m;
    m.size = g.live_count() + 1;
    m.k = g.k;
    m.labels.reserve(m.size);
    for (int id = 0; id < g.live_count(); ++id)
        m.labels.push_back(state_label(g.inst, g.live[id]));
    m.labels.push_back("sink");
    m.rows.resize(m.size);
    const BigRat unit(1, g.k);
    for (int id = 0; id < g.live_count(); ++id) {
        int self = 0, to_sink = 0;
        std::vector<int> targets;
        for (int letter = 1; letter <= g.k; ++letter) {
            const int t = g.delta[id][letter - 1];
            if (t == id)
                ++self;
            else if (t == g.sink())
                ++to_sink;
            else
                targets.push_back(t);
        }
        auto& row = m.rows[id];
        if (self > 0) row.emplace_back(id, BigRat(self, g.k));
        for (int t : targets) row.emplace_back(t, unit);
        if (to_sink > 0) row.emplace_back(g.sink(), BigRat(to_sink, g.k));
    }
    m.rows[g.sink()].emplace_back(g.sink(), BigRat(1));
    return m;
}

std::string matrix_json(const TransitionMatrix& m) {
    nlohmann::ordered_json doc;
    doc["k"] = m.k;
    doc["order"] = m.labels;
    auto entries = nlohmann::ordered_json::array();
    for (int r = 0; r < m.size; ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.size; ++c) {
            const BigRat p = m.at(r, c);
            row.push_back({numerator(p).str(), denominator(p).str()});
        }
        entries.push_back(std::move(row));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2);
}

void step_counts(const AutomatonGraph& g, std::vector<BigInt>& mass) {
    const int live = g.live_count();
    std::vector<BigInt> next(live + 1);
    next[live] = mass[live] * g.k;
    for (int id = 0; id < live; ++id) {
        if (mass[id] == 0) continue;
        int self = g.k;
        for (int letter = 1; letter <= g.k; ++letter) {
            const int t = g.delta[id][letter - 1];
            if (t != id) {
                --self;
                next[t] += mass[id];
            }
        }
        if (self > 0) next[id] += mass[id] * self;
    }
    mass.swap(next);
}

BigInt count_avoiders(const AutomatonGraph& g, std::int64_t n) {
    return count_avoiders_upto(g, n).back();
}

std::vector<BigInt> count_avoiders_upto(const AutomatonGraph& g, std::int64_t n) {
    if (n < 0) throw PatternError("word length must be >= 0");
    std::vector<BigInt> mass(g.live_count() + 1);
    mass[0] = 1;
    std::vector<BigInt> out;
    out.reserve(n + 1);
    auto live_mass = [&] {
        BigInt total = 0;
        for (int id = 0; id < g.live_count(); ++id) total += mass[id];
        return total;
    };
    out.push_back(live_mass());
    for (std::int64_t step = 0; step < n; ++step) {
        step_counts(g, mass);
        out.push_back(live_mass());
    }
    return out;
}

BigRat avoidance_probability(const AutomatonGraph& g, std::int64_t n) {
    return BigRat(count_avoiders(g, n), pow_int(g.k, n));
}

GrowthRate growth_rate(const AutomatonGraph& g) {
    if (g.k < g.pattern.distinct()) return {g.k, true};
    int max_diag = 0;
    for (int id = 0; id < g.live_count(); ++id)
        max_diag = std::max(max_diag, g.k - static_cast<int>(g.advancing(id).size()));
    return {max_diag, false};
}

BirthBound birth_bound(int k, int d, int l, std::int64_t n) {
    if (d < 2) throw PatternError("birth bound needs d >= 2 (divides by d - 1)");
    if (n < 0) throw PatternError("word length must be >= 0");
    const BigInt full_terms = BigInt(l) * binomial(k, d);
    const std::int64_t terms =
        full_terms > n ? n : full_terms.convert_to<std::int64_t>();
    const BigRat ratio = BigRat(k - d + 1, d - 1);
    BigRat sum = 0;
    for (std::int64_t i = 0; i <= terms; ++i)
        sum += BigRat(binomial(n, i)) * rat_pow(ratio, i);
    BirthBound out;
    out.value = BigRat(pow_int(d - 1, n)) * sum;
    out.in_regime = k > d && full_terms < n;
    return out;
}

namespace rng {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return mix(seed + mix(stream) + index * 0x9E3779B97F4A7C15ULL);
}

int uniform_letter(std::uint64_t seed, std::uint64_t stream, std::uint64_t& index, int k) {
    const std::uint64_t span = UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(k);
    while (true) {
        const std::uint64_t r = draw(seed, stream, index++);
        if (r < span) return static_cast<int>(r % static_cast<std::uint64_t>(k)) + 1;
    }
}

}  // namespace rng

SimulationResult simulate(const AutomatonGraph& g, std::int64_t n, std::int64_t trials,
                          std::uint64_t seed, [[maybe_unused]] int threads) {
    if (trials < 1) throw PatternError("trials must be >= 1");
    if (n < 0) throw PatternError("word length must be >= 0");
    std::int64_t hits = 0;
#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(team) reduction(+ : hits)
#endif
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        int state = 0;
        std::uint64_t index = 0;
        for (std::int64_t step = 0; step < n; ++step) {
            const int letter =
                rng::uniform_letter(seed, static_cast<std::uint64_t>(trial), index, g.k);
            state = g.delta[state][letter - 1];
            if (state == g.sink()) break;
        }
        if (state != g.sink()) ++hits;
    }
    SimulationResult out;
    out.trials = trials;
    out.hits = hits;
    out.estimate = BigRat(hits, trials);
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    out.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    out.seed = seed;
    return out;
}

}  // namespace patternlab
