#pragma once
// Test-side helpers and independent reference oracles.  Written as plain
// textbook DPs and brute-force enumerations so they share no code with the
// library paths they check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "strmeas/generators.hpp"
#include "strmeas/token.hpp"

namespace strmeas::testing {

inline TokenString bytes(const std::string& s) { return TokenString::from_bytes(s); }
inline TokenString ints(const std::vector<std::int64_t>& v) { return TokenString::from_ints(v); }

template <class S>
TokenString materialize(const S& s) {
    std::vector<Token> t;
    for (std::size_t i = 1; i <= s.size(); ++i) t.push_back(s.at(i));
    return TokenString(std::move(t));
}

inline TokenString prefix(const TokenString& x, std::size_t k) {
    return TokenString(std::vector<Token>(x.tokens().begin(), x.tokens().begin() + static_cast<std::ptrdiff_t>(k)));
}

inline TokenString random_string(std::uint64_t seed, std::int64_t n, std::int64_t sigma) {
    GenSpec g;
    g.seed = seed;
    g.n = n;
    g.alphabet_size = sigma;
    return generate(g).x;
}

inline TokenString permutation(std::uint64_t seed, std::int64_t n) {
    GenSpec g;
    g.seed = seed;
    g.n = n;
    g.kind = GenKind::Permutation;
    return generate(g).x;
}

inline TokenString sorted(std::int64_t n) {
    std::vector<std::int64_t> v;
    for (std::int64_t i = 1; i <= n; ++i) v.push_back(i);
    return TokenString::from_ints(v);
}

inline TokenString decreasing(std::int64_t n) {
    std::vector<std::int64_t> v;
    for (std::int64_t i = n; i >= 1; --i) v.push_back(i);
    return TokenString::from_ints(v);
}

inline std::int64_t table_ed(const TokenString& x, const TokenString& y) {
    const std::size_t n = x.size(), m = y.size();
    std::vector<std::vector<std::int64_t>> t(n + 1, std::vector<std::int64_t>(m + 1));
    for (std::size_t i = 0; i <= n; ++i) t[i][0] = static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j <= m; ++j) t[0][j] = static_cast<std::int64_t>(j);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            t[i][j] = std::min({t[i - 1][j] + 1, t[i][j - 1] + 1, t[i - 1][j - 1] + (x.at(i) == y.at(j) ? 0 : 1)});
    return t[n][m];
}

inline std::int64_t table_lcs(const TokenString& x, const TokenString& y) {
    const std::size_t n = x.size(), m = y.size();
    std::vector<std::vector<std::int64_t>> t(n + 1, std::vector<std::int64_t>(m + 1, 0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            t[i][j] = x.at(i) == y.at(j) ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    return t[n][m];
}

template <class S>
std::int64_t quadratic_lis(const S& x) {
    const std::size_t n = x.size();
    std::vector<std::int64_t> best(n + 1, 0);
    std::int64_t out = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        best[i] = 1;
        for (std::size_t j = 1; j < i; ++j)
            if (x.at(j) < x.at(i)) best[i] = std::max(best[i], best[j] + 1);
        out = std::max(out, best[i]);
    }
    return out;
}

// Longest non-decreasing subsequence by enumerating all 2^n subsequences.
inline std::int64_t brute_lnds(const TokenString& x) {
    const std::size_t n = x.size();
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        bool ok = true;
        std::int64_t len = 0;
        Token last = Token::neg_inf();
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            if (x.at(i + 1) < last) ok = false;
            last = x.at(i + 1);
            ++len;
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

template <class S, class T>
bool is_subsequence(const S& sub, const T& x) {
    std::size_t j = 1;
    for (std::size_t i = 1; i <= sub.size(); ++i) {
        while (j <= x.size() && !(x.at(j) == sub.at(i))) ++j;
        if (j > x.size()) return false;
        ++j;
    }
    return true;
}

template <class S>
bool strictly_increasing(const S& s) {
    for (std::size_t i = 2; i <= s.size(); ++i)
        if (!(s.at(i - 1) < s.at(i))) return false;
    return true;
}

// x with k seeded substitutions (each to a different symbol).
inline TokenString substituted(const TokenString& x, std::int64_t k, std::int64_t sigma, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Token> t = x.tokens();
    for (std::int64_t e = 0; e < k && !t.empty(); ++e) {
        const auto pos = rng.below(t.size());
        const std::int64_t old = t[pos].code() - 'a';
        const auto shift = static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(sigma - 1)));
        t[pos] = Token::symbol(symbol_code((old + shift) % sigma));
    }
    return TokenString(std::move(t));
}

}  // namespace strmeas::testing
