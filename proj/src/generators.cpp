#include "strmeas/generators.hpp"

#include <algorithm>

#include "strmeas/params.hpp"

namespace strmeas {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection on the top of the range keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

namespace {

TokenString random_string(SplitMix64& rng, std::int64_t n, std::int64_t sigma) {
    std::vector<Token> t;
    t.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        t.push_back(Token::symbol(symbol_code(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(sigma))))));
    }
    return TokenString(std::move(t));
}

std::vector<std::int64_t> shuffled(SplitMix64& rng, std::int64_t n) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    for (std::int64_t i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    return p;
}

}  // namespace

GenResult generate(const GenSpec& spec) {
    if (spec.n < 0) throw ParamError("generator length must be non-negative");
    if (spec.alphabet_size < 1) throw ParamError("alphabet size must be at least 1");
    SplitMix64 rng(spec.seed);
    GenResult r;
    switch (spec.kind) {
    case GenKind::Random:
        r.x = random_string(rng, spec.n, spec.alphabet_size);
        break;
    case GenKind::PlantedEd: {
        if (spec.param < 0 || spec.param > spec.n) throw ParamError("planted_ed needs 0 <= k <= n");
        r.x = random_string(rng, spec.n, spec.alphabet_size);
        std::vector<Token> y = r.x.tokens();
        for (std::int64_t e = 0; e < spec.param; ++e) {
            const auto op = y.empty() ? 1 : rng.below(3);
            const auto sym = Token::symbol(symbol_code(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(spec.alphabet_size)))));
            if (op == 0) {  // substitution
                y[rng.below(y.size())] = sym;
            } else if (op == 1) {  // insertion
                y.insert(y.begin() + static_cast<std::ptrdiff_t>(rng.below(y.size() + 1)), sym);
            } else {  // deletion
                y.erase(y.begin() + static_cast<std::ptrdiff_t>(rng.below(y.size())));
            }
        }
        r.y = TokenString(std::move(y));
        r.annotation = spec.param;
        break;
    }
    case GenKind::PlantedLis: {
        if (spec.param < 0 || spec.param > spec.n) throw ParamError("planted_lis needs 0 <= l <= n");
        auto p = shuffled(rng, spec.n);
        // Choose l positions, then rewrite their values in ascending order.
        auto idx = shuffled(rng, spec.n);
        idx.resize(static_cast<std::size_t>(spec.param));
        std::sort(idx.begin(), idx.end());
        std::vector<std::int64_t> vals;
        vals.reserve(idx.size());
        for (auto i : idx) vals.push_back(p[static_cast<std::size_t>(i - 1)]);
        std::sort(vals.begin(), vals.end());
        for (std::size_t k = 0; k < idx.size(); ++k) p[static_cast<std::size_t>(idx[k] - 1)] = vals[k];
        r.x = TokenString::from_ints(p);
        r.annotation = spec.param;
        r.positions = std::move(idx);
        break;
    }
    case GenKind::Permutation:
        r.x = TokenString::from_ints(shuffled(rng, spec.n));
        break;
    }
    return r;
}

SmallStringEnumerator::SmallStringEnumerator(std::int64_t alphabet_size, std::int64_t max_len)
    : sigma_(alphabet_size), max_len_(max_len) {
    if (alphabet_size < 1 || max_len < 0) throw ParamError("enumerate_small needs alphabet >= 1 and max_len >= 0");
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < max_len; ++i) {
        count *= alphabet_size;
        if (count > kEnumerateGuard) throw ParamError("enumerate_small exceeds the 10^7 instance guard");
    }
}

bool SmallStringEnumerator::next(TokenString& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
    } else {
        // Odometer increment; roll over into the next length.
        std::size_t i = digits_.size();
        while (i > 0 && digits_[i - 1] == sigma_ - 1) {
            digits_[i - 1] = 0;
            --i;
        }
        if (i == 0) {
            if (static_cast<std::int64_t>(digits_.size()) == max_len_) {
                done_ = true;
                return false;
            }
            digits_.assign(digits_.size() + 1, 0);
        } else {
            ++digits_[i - 1];
        }
    }
    std::vector<Token> t;
    t.reserve(digits_.size());
    for (auto d : digits_) t.push_back(Token::symbol(symbol_code(d)));
    out = TokenString(std::move(t));
    return true;
}

std::vector<TokenString> enumerate_small(std::int64_t alphabet_size, std::int64_t max_len) {
    SmallStringEnumerator e(alphabet_size, max_len);
    std::vector<TokenString> all;
    TokenString s;
    while (e.next(s)) all.push_back(s);
    return all;
}

}  // namespace strmeas
