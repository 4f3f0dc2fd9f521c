#include "patternlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "patternlab/errors.hpp"

namespace patternlab {

Word parse_word(const std::string& text) {
    bool digits_only = !text.empty();
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            digits_only = false;
            break;
        }
    }
    Word w;
    if (digits_only) {
        for (char c : text) {
            int letter = c - '0';
            if (letter == 0) throw PatternError("letter 0 is not allowed: letters are positive");
            w.push_back(letter);
        }
        return w;
    }
    std::string buf = text;
    std::replace(buf.begin(), buf.end(), ',', ' ');
    std::istringstream in(buf);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int letter;
        try {
            letter = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw PatternError("unparsable letter '" + tok + "'");
        }
        if (used != tok.size() || letter < 1)
            throw PatternError("unparsable letter '" + tok + "': letters are positive integers");
        w.push_back(letter);
    }
    if (w.empty()) throw PatternError("empty word text '" + text + "'");
    return w;
}

std::string format_word(const Word& w) {
    bool wide = std::any_of(w.begin(), w.end(), [](int x) { return x > 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i > 0) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

bool is_order_isomorphic(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            if ((a[p] < a[q]) != (b[p] < b[q])) return false;
            if ((a[p] == a[q]) != (b[p] == b[q])) return false;
        }
    return true;
}

Pattern::Pattern(const Word& word) {
    if (word.size() < 2) throw PatternError("pattern too short: need length >= 2");
    std::map<int, int> rank;
    for (int letter : word) {
        if (letter < 1) throw PatternError("pattern letters must be positive");
        rank[letter] = 0;
    }
    int next = 1;
    for (auto& [letter, r] : rank) r = next++;
    letters_.reserve(word.size());
    for (int letter : word) letters_.push_back(rank[letter]);
    distinct_ = next - 1;
}

Pattern canonicalize(const Word& word) { return Pattern(word); }

PatternSet::PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
    if (patterns_.empty()) throw PatternError("pattern set must be non-empty");
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

std::string PatternSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (i > 0) out += '+';
        out += patterns_[i].str();
    }
    return out;
}

namespace {

// Rank-compress w so its letters are exactly {1..m}; occ is invariant under
// order-isomorphic relabeling, and the compressed alphabet keeps the
// instance list below small.
Word rank_compress(const Word& w, int& alphabet) {
    std::map<int, int> rank;
    for (int x : w) rank[x] = 0;
    int next = 1;
    for (auto& [x, r] : rank) r = next++;
    Word out;
    out.reserve(w.size());
    for (int x : w) out.push_back(rank[x]);
    alphabet = next - 1;
    return out;
}

// Every length-l word order-isomorphic to v over the values {1..m}: one per
// d-subset, v's letters mapped onto the subset in order.
std::vector<Word> embeddings(const Pattern& v, int m) {
    const int d = v.distinct();
    std::vector<Word> out;
    if (m < d) return out;
    std::vector<int> values(d);
    for (int i = 0; i < d; ++i) values[i] = i + 1;
    while (true) {
        Word u;
        u.reserve(v.letters().size());
        for (int letter : v.letters()) u.push_back(values[letter - 1]);
        out.push_back(std::move(u));
        // next d-combination of {1..m}
        int i = d - 1;
        while (i >= 0 && values[i] == m - (d - 1 - i)) --i;
        if (i < 0) break;
        ++values[i];
        for (int j = i + 1; j < d; ++j) values[j] = values[j - 1] + 1;
    }
    return out;
}

// Number of ways u embeds in w as a (not necessarily contiguous) subsequence.
BigInt subsequence_embeddings(const Word& u, const Word& w) {
    std::vector<BigInt> dp(u.size() + 1);
    dp[0] = 1;
    for (int x : w)
        for (std::size_t p = u.size(); p >= 1; --p)
            if (u[p - 1] == x) dp[p] += dp[p - 1];
    return dp[u.size()];
}

}  // namespace

BigInt occ(const Pattern& v, const Word& w) {
    if (w.size() < static_cast<std::size_t>(v.length())) return 0;
    int m = 0;
    const Word compressed = rank_compress(w, m);
    BigInt total = 0;
    for (const Word& u : embeddings(v, m)) total += subsequence_embeddings(u, compressed);
    return total;
}

BigInt occ_set(const PatternSet& s, const Word& w) {
    BigInt total = 0;
    for (const Pattern& v : s.patterns()) total += occ(v, w);
    return total;
}

namespace {

void collect_occurrences(const Word& v, const Word& w, std::size_t depth,
                         std::vector<int>& picked, std::vector<Occurrence>& out) {
    if (depth == v.size()) {
        out.emplace_back(picked);
        return;
    }
    const std::size_t remaining = v.size() - depth;
    int first = depth == 0 ? 1 : picked.back() + 1;
    for (int j = first; j + static_cast<int>(remaining) - 1 <= static_cast<int>(w.size()); ++j) {
        bool consistent = true;
        for (std::size_t p = 0; p < depth && consistent; ++p) {
            int a = w[picked[p] - 1], b = w[j - 1];
            if ((a < b) != (v[p] < v[depth])) consistent = false;
            if ((a == b) != (v[p] == v[depth])) consistent = false;
        }
        if (!consistent) continue;
        picked.push_back(j);
        collect_occurrences(v, w, depth + 1, picked, out);
        picked.pop_back();
    }
}

}  // namespace

std::vector<Occurrence> occurrences(const Pattern& v, const Word& w) {
    std::vector<Occurrence> out;
    if (w.size() < static_cast<std::size_t>(v.length())) return out;
    std::vector<int> picked;
    collect_occurrences(v.letters(), w, 0, picked, out);
    return out;
}

std::vector<int> occurrence_subsequence(const Pattern& v, const Word& w) {
    std::set<int> used;
    for (const Occurrence& o : occurrences(v, w)) used.insert(o.begin(), o.end());
    return std::vector<int>(used.begin(), used.end());
}

}  // namespace patternlab
