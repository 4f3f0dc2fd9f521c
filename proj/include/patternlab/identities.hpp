#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "patternlab/cache.hpp"
#include "patternlab/enumerate.hpp"
#include "patternlab/numeric.hpp"
#include "patternlab/word.hpp"

namespace patternlab {

/// A power series cut at x^N, exact rational coefficients for x^1..x^N.
class SeriesTruncation {
public:
    explicit SeriesTruncation(int order) : coeff_(order + 1) {}

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    BigRat& operator[](int n) { return coeff_.at(n); }
    const BigRat& operator[](int n) const { return coeff_.at(n); }

    /// Formal derivative, truncation order drops by one.
    SeriesTruncation derivative() const;
    /// x -> -x substitution.
    SeriesTruncation negate_argument() const;
    /// Multiply by c * x^shift, re-truncating at the receiver's order.
    SeriesTruncation shift_scale(int shift, const BigRat& c, int order) const;
    SeriesTruncation& operator+=(const SeriesTruncation& other);

    friend bool operator==(const SeriesTruncation&, const SeriesTruncation&) = default;

private:
    std::vector<BigRat> coeff_;
};

/// Serves exact occurrence counts, memoizing full distributions per
/// (domain, pattern set, k, n) in memory and optionally on disk. All the
/// identity checks pull their inputs through one provider so the expensive
/// tables are enumerated once.
class CountProvider {
public:
    explicit CountProvider(EnumerateOptions opts = {}, std::shared_ptr<DiskCache> cache = nullptr);

    /// f_r over [k]^n.
    BigInt words(const PatternSet& s, int k, std::int64_t n, std::int64_t r);
    /// f_r over S_n.
    BigInt perms(const PatternSet& s, int n, std::int64_t r);
    /// f_r over the words in [a]^n using exactly the letters 1..a.
    BigInt surjective(const PatternSet& s, int a, std::int64_t n, std::int64_t r);

    /// Whole distributions, memoized like the scalar lookups.
    const std::map<std::int64_t, BigInt>& words_table(const PatternSet& s, int k,
                                                      std::int64_t n);
    const std::map<std::int64_t, BigInt>& perms_table(const PatternSet& s, int n);

    const EnumerateOptions& options() const { return opts_; }

private:
    const std::map<std::int64_t, BigInt>& table(const PatternSet& s, const CacheKey& key);

    EnumerateOptions opts_;
    std::shared_ptr<DiskCache> cache_;
    std::map<std::string, std::map<std::int64_t, BigInt>> memo_;
};

/// f_r over S_n from word counts by inclusion-exclusion:
///   sum_{k=1}^{n} (-1)^{n-k} C(n,k) f_r([k]^n).
BigInt perms_from_words(CountProvider& counts, const PatternSet& s, std::int64_t r,
                        std::int64_t n);

struct EgfCheck {
    bool equal = false;
    int verified_order = 0;             // highest order with equal coefficients
    std::optional<int> first_mismatch;  // lowest differing order, if any
};

/// Compares the permutation EGF with the alternating sum of derivative
/// terms of the word EGFs, coefficientwise to order N.
EgfCheck egf_identity_check(CountProvider& counts, const PatternSet& s, std::int64_t r, int N);

/// Closed form for the number of 123-avoiders (equivalently 132-avoiders)
/// in [k]^n. Evaluated in exact rationals; a non-integer total raises
/// IdentityViolationError.
BigInt burstein_closed_form(int k, std::int64_t n);

/// (1/(n+1)) C(2n, n).
BigInt catalan(std::int64_t n);

/// Number of 12-avoiding words in [k]^n: C(n+k-1, n).
BigInt weak_words_closed_form(int k, std::int64_t n);

/// sum_{k=1}^{n} (-1)^{n-k} C(n,k) C(n+k-1,n) == 1.
bool binomial_identity_check(std::int64_t n);

struct SdiscCheck {
    bool holds = false;
    BigInt lhs, rhs;
};

/// f_0([n]^n) <= sum_{i=1}^n C(n,i)^2 f_0([i]^{n-i}) f_0(S_i), with
/// f_0([i]^0) = 1.
SdiscCheck sdisc_check(CountProvider& counts, const PatternSet& s, std::int64_t n);

struct YnaCheck {
    bool equal = false;
    BigInt direct, alternating;
};

/// f_r over the words of [a]^n using every letter of [a]: the direct
/// surjective count against the alternating binomial sum over smaller
/// alphabets.
YnaCheck yna_decomposition_check(CountProvider& counts, const PatternSet& s, int a,
                                 std::int64_t n, std::int64_t r = 0);

}  // namespace patternlab
