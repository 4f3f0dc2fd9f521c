#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "patternlab/numeric.hpp"

namespace patternlab {

/// A k-ary word: a finite sequence of letters from {1, 2, ...}. The empty
/// word is allowed.
using Word = std::vector<int>;

/// One occurrence of a pattern in a word: strictly increasing positions,
/// 1-based (position j means the j-th letter of the word).
using Occurrence = std::vector<int>;

/// Parses "35239" (digit string, letters <= 9) or "3,5,2,3,9" / "3 5 2 3 9".
Word parse_word(const std::string& text);

/// Renders letters back to text; comma-separated once any letter exceeds 9.
std::string format_word(const Word& w);

/// True iff the words have equal length and the same order type:
/// a_p < a_q exactly when b_p < b_q, and a_p = a_q exactly when b_p = b_q.
bool is_order_isomorphic(const Word& a, const Word& b);

/// A word considered up to order-isomorphism. Canonical on construction:
/// the letters used are exactly {1..d} where d is the number of distinct
/// letters, and the length is at least 2.
class Pattern {
public:
    explicit Pattern(const Word& word);
    explicit Pattern(const std::string& text) : Pattern(parse_word(text)) {}

    const Word& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    int distinct() const { return distinct_; }
    std::string str() const { return format_word(letters_); }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern& a, const Pattern& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    Word letters_;
    int distinct_ = 0;
};

/// Rank-compresses a word to the order-isomorphic pattern over {1..d}.
Pattern canonicalize(const Word& word);

/// A non-empty set of patterns, deduplicated by canonical form.
class PatternSet {
public:
    explicit PatternSet(std::vector<Pattern> patterns);
    PatternSet(std::initializer_list<Pattern> patterns)
        : PatternSet(std::vector<Pattern>(patterns)) {}

    const std::vector<Pattern>& patterns() const { return patterns_; }
    std::size_t size() const { return patterns_.size(); }
    bool single() const { return patterns_.size() == 1; }
    std::string str() const;

    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<Pattern> patterns_;
};

/// Exact number of occurrences of v in w. Counts index tuples
/// j_1 < ... < j_l whose subsequence is order-isomorphic to v.
BigInt occ(const Pattern& v, const Word& w);

/// Total occurrence count over all patterns in the set.
BigInt occ_set(const PatternSet& s, const Word& w);

/// All occurrences of v in w in lexicographic order of their index tuples.
std::vector<Occurrence> occurrences(const Pattern& v, const Word& w);

/// The occurrence subsequence as a sorted 1-based index set: the union of
/// all occurrence index tuples (the minimal subsequence of w containing
/// every occurrence of v).
std::vector<int> occurrence_subsequence(const Pattern& v, const Word& w);

}  // namespace patternlab
