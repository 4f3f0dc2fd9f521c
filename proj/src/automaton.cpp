#include "patternlab/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "patternlab/errors.hpp"

namespace patternlab {

InstanceSet instances(const Pattern& v, int k) {
    if (k < 1) throw PatternError("alphabet size must be >= 1");
    InstanceSet out{v, k, {}};
    const int d = v.distinct();
    if (k < d) return out;
    std::vector<int> values(d);
    for (int i = 0; i < d; ++i) values[i] = i + 1;
    while (true) {
        Word u;
        u.reserve(v.letters().size());
        for (int letter : v.letters()) u.push_back(values[letter - 1]);
        out.instances.push_back(std::move(u));
        int i = d - 1;
        while (i >= 0 && values[i] == k - (d - 1 - i)) --i;
        if (i < 0) break;
        ++values[i];
        for (int j = i + 1; j < d; ++j) values[j] = values[j - 1] + 1;
    }
    // Subset enumeration order is not the first-index order of the mapped
    // words (e.g. v = 231), so sort explicitly.
    std::sort(out.instances.begin(), out.instances.end());
    return out;
}

std::vector<Word> prefix_set(const Word& u) {
    std::vector<Word> out;
    out.reserve(u.size() + 1);
    for (std::size_t len = 0; len <= u.size(); ++len)
        out.emplace_back(u.begin(), u.begin() + len);
    return out;
}

StateVector null_state(const InstanceSet& inst) {
    return StateVector{std::vector<std::uint8_t>(inst.size(), 0)};
}

StateVector extend(const InstanceSet& inst, const StateVector& state, int letter) {
    if (letter < 1 || letter > inst.k)
        throw PatternError("letter " + std::to_string(letter) + " outside [" +
                           std::to_string(inst.k) + "]");
    StateVector next = state;
    const std::size_t full = inst.pattern.letters().size();
    for (std::size_t c = 0; c < inst.size(); ++c) {
        const std::uint8_t len = state.matched[c];
        if (len < full && inst.instances[c][len] == letter) next.matched[c] = len + 1;
    }
    return next;
}

std::vector<int> advancing_letters(const InstanceSet& inst, const StateVector& state) {
    std::vector<int> out;
    const std::size_t full = inst.pattern.letters().size();
    for (int letter = 1; letter <= inst.k; ++letter) {
        for (std::size_t c = 0; c < inst.size(); ++c) {
            const std::uint8_t len = state.matched[c];
            if (len < full && inst.instances[c][len] == letter) {
                out.push_back(letter);
                break;
            }
        }
    }
    return out;
}

bool is_absorbed(const InstanceSet& inst, const StateVector& state) {
    const std::uint8_t full = static_cast<std::uint8_t>(inst.pattern.letters().size());
    return std::any_of(state.matched.begin(), state.matched.end(),
                       [full](std::uint8_t len) { return len == full; });
}

int AutomatonGraph::step(int id, int letter) const {
    if (letter < 1 || letter > k)
        throw PatternError("letter " + std::to_string(letter) + " outside [" +
                           std::to_string(k) + "]");
    if (id == sink()) return sink();
    return delta[id][letter - 1];
}

std::vector<int> AutomatonGraph::advancing(int id) const {
    std::vector<int> out;
    for (int letter = 1; letter <= k; ++letter)
        if (delta[id][letter - 1] != id) out.push_back(letter);
    return out;
}

AutomatonGraph build_automaton(const Pattern& v, int k, const AutomatonOptions& opts) {
    AutomatonGraph g(v, k, instances(v, k));

    // Breadth-first closure from the null state. Absorbed successors are
    // not expanded; they all collapse into the sink.
    std::map<StateVector, int> id_of;
    std::vector<StateVector> discovered;
    std::vector<int> bfs_layer;
    std::deque<int> queue;

    const StateVector start = null_state(g.inst);
    id_of.emplace(start, 0);
    discovered.push_back(start);
    bfs_layer.push_back(0);
    queue.push_back(0);

    std::vector<std::vector<int>> raw_delta;  // -1 marks the sink
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        if (static_cast<std::size_t>(cur) >= raw_delta.size()) raw_delta.resize(cur + 1);
        raw_delta[cur].assign(k, cur);
        for (int letter = 1; letter <= k; ++letter) {
            const StateVector next = extend(g.inst, discovered[cur], letter);
            if (next == discovered[cur]) continue;
            if (is_absorbed(g.inst, next)) {
                raw_delta[cur][letter - 1] = -1;
                continue;
            }
            auto [it, fresh] = id_of.emplace(next, static_cast<int>(discovered.size()));
            if (fresh) {
                if (discovered.size() >= opts.state_limit)
                    throw ResourceLimitError(
                        "live state count exceeds the state limit of " +
                        std::to_string(opts.state_limit) + " for pattern " + v.str() +
                        ", k=" + std::to_string(k));
                discovered.push_back(next);
                bfs_layer.push_back(bfs_layer[cur] + 1);
                queue.push_back(it->second);
            }
            raw_delta[cur][letter - 1] = it->second;
        }
    }

    // Canonical numbering: total matched prefix length first, prefix tuple
    // lexicographically within a level. Every advancing step appends at
    // least one letter, so this is a linear extension of the extension
    // order regardless of the graph shape. (BFS depth is NOT: an advancing
    // edge can land on a state with a shorter shortest path, e.g. pattern
    // 1212 at k = 4.) Prefixes of one instance compare by length, so the
    // matched-length vectors compare exactly like the flattened tuples.
    const int live = static_cast<int>(discovered.size());
    std::vector<int> mass(live, 0);
    for (int id = 0; id < live; ++id)
        for (std::uint8_t len : discovered[id].matched) mass[id] += len;
    std::vector<int> order(live);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (mass[a] != mass[b]) return mass[a] < mass[b];
        return discovered[a] < discovered[b];
    });
    std::vector<int> renumber(live);
    for (int pos = 0; pos < live; ++pos) renumber[order[pos]] = pos;

    g.live.resize(live);
    g.layer.resize(live);
    g.delta.assign(live, std::vector<std::int32_t>(k));
    for (int old = 0; old < live; ++old) {
        const int id = renumber[old];
        g.live[id] = discovered[old];
        g.layer[id] = bfs_layer[old];
        for (int letter = 0; letter < k; ++letter) {
            const int target = raw_delta[old][letter];
            g.delta[id][letter] = target < 0 ? live : renumber[target];
        }
    }

    // The numbering must be a linear extension of the advancing order;
    // counting relies on it (triangular count matrix).
    for (int id = 0; id < live; ++id)
        for (int letter = 0; letter < k; ++letter) {
            const int target = g.delta[id][letter];
            if (target != id && target != live && target < id)
                throw IdentityViolationError("state order is not a linear extension at " +
                                             state_label(g.inst, g.live[id]));
        }

    // Longest chain over live states, walking ids in topological order.
    std::vector<int> chain(live, 1);
    int depth = live > 0 ? 1 : 0;
    for (int id = 0; id < live; ++id)
        for (int letter = 0; letter < k; ++letter) {
            const int target = g.delta[id][letter];
            if (target != id && target != live) {
                chain[target] = std::max(chain[target], chain[id] + 1);
                depth = std::max(depth, chain[target]);
            }
        }
    g.depth = depth;
    return g;
}

int max_chain(const AutomatonGraph& g) { return g.depth; }

bool detect_avoidance(const AutomatonGraph& g, const Word& w) {
    int state = 0;
    for (int letter : w) {
        state = g.step(state, letter);
        if (state == g.sink()) return false;
    }
    return true;
}

std::string prefix_string(const InstanceSet& inst, const StateVector& state, std::size_t coord) {
    const Word& u = inst.instances[coord];
    return format_word(Word(u.begin(), u.begin() + state.matched[coord]));
}

std::string state_label(const InstanceSet& inst, const StateVector& state) {
    std::string out = "(";
    if (inst.size() == 0) {
        out += "e";
    } else {
        for (std::size_t c = 0; c < inst.size(); ++c) {
            if (c > 0) out += ',';
            const std::string p = prefix_string(inst, state, c);
            out += p.empty() ? "e" : p;
        }
    }
    out += ')';
    return out;
}

std::string export_json(const AutomatonGraph& g) {
    nlohmann::ordered_json doc;
    doc["pattern"] = g.pattern.str();
    doc["k"] = g.k;
    doc["live_count"] = g.live_count();
    doc["depth"] = g.depth;
    doc["sink"] = g.sink();
    auto states = nlohmann::ordered_json::array();
    for (int id = 0; id < g.live_count(); ++id) {
        auto prefixes = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < g.inst.size(); ++c)
            prefixes.push_back(prefix_string(g.inst, g.live[id], c));
        states.push_back(std::move(prefixes));
    }
    doc["states"] = std::move(states);
    auto transitions = nlohmann::ordered_json::array();
    for (int id = 0; id < g.live_count(); ++id)
        for (int letter = 1; letter <= g.k; ++letter) {
            const int target = g.delta[id][letter - 1];
            if (target == id) continue;
            transitions.push_back(
                nlohmann::ordered_json{{"state", id}, {"letter", letter}, {"next", target}});
        }
    doc["transitions"] = std::move(transitions);
    return doc.dump(2);
}

std::string export_dot(const AutomatonGraph& g, const DotOptions& opts) {
    std::ostringstream out;
    out << "digraph avoidance {\n";
    out << "  rankdir=LR;\n";
    out << "  label=\"pattern " << g.pattern.str() << ", k=" << g.k << "\";\n";
    for (int id = 0; id < g.live_count(); ++id)
        out << "  q" << id << " [label=\"" << state_label(g.inst, g.live[id]) << "\"];\n";
    if (opts.include_sink)
        out << "  q" << g.sink() << " [label=\"sink\", shape=doublecircle];\n";
    for (int id = 0; id < g.live_count(); ++id)
        for (int letter = 1; letter <= g.k; ++letter) {
            const int target = g.delta[id][letter - 1];
            if (target == id) continue;
            if (target == g.sink() && !opts.include_sink) continue;
            out << "  q" << id << " -> q" << target << " [label=\"" << letter << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace patternlab
