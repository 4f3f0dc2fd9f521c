#include "patternlab/identities.hpp"

#include <algorithm>

#include "patternlab/errors.hpp"

namespace patternlab {

SeriesTruncation SeriesTruncation::derivative() const {
    SeriesTruncation out(order() - 1);
    for (int n = 1; n <= order(); ++n) out[n - 1] = coeff_[n] * n;
    return out;
}

SeriesTruncation SeriesTruncation::negate_argument() const {
    SeriesTruncation out(order());
    for (int n = 0; n <= order(); ++n) out[n] = (n % 2 == 0) ? coeff_[n] : -coeff_[n];
    return out;
}

SeriesTruncation SeriesTruncation::shift_scale(int shift, const BigRat& c, int order) const {
    SeriesTruncation out(order);
    for (int n = 0; n <= this->order() && n + shift <= order; ++n)
        out[n + shift] = coeff_[n] * c;
    return out;
}

SeriesTruncation& SeriesTruncation::operator+=(const SeriesTruncation& other) {
    const int upto = std::min(order(), other.order());
    for (int n = 0; n <= upto; ++n) coeff_[n] += other[n];
    return *this;
}

CountProvider::CountProvider(EnumerateOptions opts, std::shared_ptr<DiskCache> cache)
    : opts_(std::move(opts)), cache_(std::move(cache)) {}

const std::map<std::int64_t, BigInt>& CountProvider::table(const PatternSet& s,
                                                           const CacheKey& key) {
    const std::string memo_key = key.filename();
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
    if (cache_) {
        if (auto loaded = cache_->load(key)) return memo_[memo_key] = std::move(*loaded);
    }
    CountTable computed;
    if (key.domain == "words")
        computed = count_words(s, key.k, key.n, opts_);
    else if (key.domain == "perms")
        computed = count_perms(s, static_cast<int>(key.n), opts_);
    else
        computed = count_words_surjective(s, key.k, key.n, opts_);
    if (cache_) cache_->store(key, computed.by_r);
    return memo_[memo_key] = std::move(computed.by_r);
}

namespace {

BigInt lookup(const std::map<std::int64_t, BigInt>& table, std::int64_t r) {
    auto it = table.find(r);
    return it == table.end() ? BigInt(0) : it->second;
}

}  // namespace

BigInt CountProvider::words(const PatternSet& s, int k, std::int64_t n, std::int64_t r) {
    return lookup(table(s, {"words", s.str(), k, n}), r);
}

BigInt CountProvider::perms(const PatternSet& s, int n, std::int64_t r) {
    return lookup(table(s, {"perms", s.str(), n, n}), r);
}

BigInt CountProvider::surjective(const PatternSet& s, int a, std::int64_t n, std::int64_t r) {
    return lookup(table(s, {"surjective", s.str(), a, n}), r);
}

const std::map<std::int64_t, BigInt>& CountProvider::words_table(const PatternSet& s, int k,
                                                                 std::int64_t n) {
    return table(s, {"words", s.str(), k, n});
}

const std::map<std::int64_t, BigInt>& CountProvider::perms_table(const PatternSet& s, int n) {
    return table(s, {"perms", s.str(), n, n});
}

BigInt perms_from_words(CountProvider& counts, const PatternSet& s, std::int64_t r,
                        std::int64_t n) {
    BigInt sum = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        BigInt f;
        try {
            f = counts.words(s, static_cast<int>(k), n, r);
        } catch (const ResourceLimitError& e) {
            throw DependencyError("missing word count f_" + std::to_string(r) + "([" +
                                  std::to_string(k) + "]^" + std::to_string(n) +
                                  ") for the permutation identity: " + e.what());
        }
        const BigInt term = binomial(n, k) * f;
        sum += ((n - k) % 2 == 0) ? term : -term;
    }
    return sum;
}

EgfCheck egf_identity_check(CountProvider& counts, const PatternSet& s, std::int64_t r, int N) {
    SeriesTruncation lhs(N);
    for (int n = 1; n <= N; ++n)
        lhs[n] = BigRat(counts.perms(s, n, r), factorial(n));

    SeriesTruncation rhs(N);
    for (int k = 1; k <= N; ++k) {
        SeriesTruncation w(N);
        for (int n = 1; n <= N; ++n)
            w[n] = BigRat(counts.words(s, k, n, r), factorial(n));
        SeriesTruncation term = w.negate_argument();
        for (int i = 0; i < k; ++i) term = term.derivative();
        const BigRat scale =
            BigRat((k % 2 == 0) ? BigInt(1) : BigInt(-1), factorial(k));
        rhs += term.shift_scale(k, scale, N);
    }

    EgfCheck out;
    out.equal = true;
    out.verified_order = 0;
    for (int n = 1; n <= N; ++n) {
        if (lhs[n] == rhs[n]) {
            if (out.equal) out.verified_order = n;
        } else {
            if (out.equal) out.first_mismatch = n;
            out.equal = false;
        }
    }
    return out;
}

BigInt burstein_closed_form(int k, std::int64_t n) {
    if (k < 1 || n < 1) throw PatternError("closed form needs k >= 1 and n >= 1");
    BigRat total = k == 1 ? 1 : 0;
    // 2^{n-2(k-2)} can carry a negative exponent, so the sum is assembled
    // over exact rationals and the result checked for integrality.
    const std::int64_t e = n - 2 * (static_cast<std::int64_t>(k) - 2);
    const BigRat power = e >= 0 ? BigRat(pow_int(2, e)) : BigRat(1, pow_int(2, -e));
    BigRat sum = 0;
    for (int j = 0; j <= k - 2; ++j) {
        BigRat inner = 0;
        for (int m = j; m <= k - 2; ++m)
            inner += BigRat(binomial(2 * m, m), m + 1) *
                     BigRat(binomial(2 * (k - 2 - m), k - 2 - m));
        sum += BigRat(binomial(n + 2 * j, n)) * inner;
    }
    total += power * sum;
    if (denominator(total) != 1)
        throw IdentityViolationError("closed form for k=" + std::to_string(k) +
                                     ", n=" + std::to_string(n) + " is not an integer: " +
                                     numerator(total).str() + "/" + denominator(total).str());
    return numerator(total);
}

BigInt catalan(std::int64_t n) {
    if (n < 0) throw PatternError("catalan needs n >= 0");
    return binomial(2 * n, n) / (n + 1);
}

BigInt weak_words_closed_form(int k, std::int64_t n) {
    if (k < 1 || n < 1) throw PatternError("closed form needs k >= 1 and n >= 1");
    return binomial(n + k - 1, n);
}

bool binomial_identity_check(std::int64_t n) {
    if (n < 1) throw PatternError("identity needs n >= 1");
    BigInt sum = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        const BigInt term = binomial(n, k) * binomial(n + k - 1, n);
        sum += ((n - k) % 2 == 0) ? term : -term;
    }
    return sum == 1;
}

SdiscCheck sdisc_check(CountProvider& counts, const PatternSet& s, std::int64_t n) {
    if (n < 1) throw PatternError("inequality needs n >= 1");
    SdiscCheck out;
    out.lhs = counts.words(s, static_cast<int>(n), n, 0);
    out.rhs = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        const BigInt words_part =
            n - i == 0 ? BigInt(1) : counts.words(s, static_cast<int>(i), n - i, 0);
        const BigInt sq = binomial(n, i) * binomial(n, i);
        out.rhs += sq * words_part * counts.perms(s, static_cast<int>(i), 0);
    }
    out.holds = out.lhs <= out.rhs;
    return out;
}

YnaCheck yna_decomposition_check(CountProvider& counts, const PatternSet& s, int a,
                                 std::int64_t n, std::int64_t r) {
    if (a < 1) throw PatternError("alphabet size must be >= 1");
    YnaCheck out;
    out.direct = counts.surjective(s, a, n, r);
    out.alternating = 0;
    for (int k = 0; k <= a - 1; ++k) {
        const BigInt term = binomial(a, k) * counts.words(s, a - k, n, r);
        out.alternating += (k % 2 == 0) ? term : -term;
    }
    out.equal = out.direct == out.alternating;
    return out;
}

}  // namespace patternlab
