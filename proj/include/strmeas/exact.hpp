#pragma once
// Exact baselines: edit distance, patience sorting, LCS (length and
// Hirschberg sequence) and brute-force closest substring.  They serve both as
// recursion base cases and as ground truth for the approximations.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "strmeas/token.hpp"

namespace strmeas {

// Levenshtein distance with two rolling rows over the shorter string.
template <TokenSequence X, TokenSequence Y>
std::int64_t exact_ed(const X& x, const Y& y) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    if (n < m) return exact_ed(y, x);
    // Rows run over the shorter string y.
    std::vector<std::int64_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<std::int64_t>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        const Token xi = x.at(i);
        cur[0] = static_cast<std::int64_t>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            const std::int64_t sub = prev[j - 1] + (xi == y.at(j) ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

struct PatienceResult {
    std::int64_t length = 0;
    // P[0] unused; P[1..n] hold the smallest last symbol per length (+inf if none).
    std::vector<Token> P;
};

// Patience sorting on a sequence of tokens.  With a bound l only slots 1..l
// are maintained and elements that would open slot l+1 are ignored.
template <TokenSequence X>
PatienceResult patience_sorting(const X& x, std::optional<std::int64_t> bound = std::nullopt) {
    const std::size_t n = x.size();
    std::size_t cap = n;
    if (bound && static_cast<std::size_t>(std::max<std::int64_t>(*bound, 0)) < cap) {
        cap = static_cast<std::size_t>(std::max<std::int64_t>(*bound, 0));
    }
    PatienceResult r;
    r.P.assign(n + 1, Token::pos_inf());
    std::size_t len = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const Token v = x.at(i);
        // smallest slot l with P[l] >= v
        const auto it = std::lower_bound(r.P.begin() + 1, r.P.begin() + 1 + static_cast<std::ptrdiff_t>(len), v);
        const auto l = static_cast<std::size_t>(it - r.P.begin());
        if (l > cap) continue;
        r.P[l] = v;
        if (l > len) len = l;
    }
    r.length = static_cast<std::int64_t>(len);
    return r;
}

// Longest strictly increasing subsequence, via patience sorting with
// predecessor links.
template <TokenSequence X>
TokenString exact_lis_sequence(const X& x) {
    const std::size_t n = x.size();
    std::vector<Token> tail;           // tail[k] = smallest last value of a length-(k+1) run
    std::vector<std::size_t> tail_at;  // position of that value
    std::vector<std::size_t> pred(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const Token v = x.at(i);
        const auto k = static_cast<std::size_t>(std::lower_bound(tail.begin(), tail.end(), v) - tail.begin());
        pred[i] = k == 0 ? 0 : tail_at[k - 1];
        if (k == tail.size()) {
            tail.push_back(v);
            tail_at.push_back(i);
        } else {
            tail[k] = v;
            tail_at[k] = i;
        }
    }
    std::vector<Token> out(tail.size());
    std::size_t p = tail.empty() ? 0 : tail_at.back();
    for (std::size_t k = tail.size(); k-- > 0;) {
        out[k] = x.at(p);
        p = pred[p];
    }
    return TokenString(std::move(out));
}

// Longest non-decreasing subsequence (patience sorting with upper_bound).
template <TokenSequence X>
TokenString exact_lnds_sequence(const X& x) {
    const std::size_t n = x.size();
    std::vector<Token> tail;
    std::vector<std::size_t> tail_at;
    std::vector<std::size_t> pred(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const Token v = x.at(i);
        const auto k = static_cast<std::size_t>(std::upper_bound(tail.begin(), tail.end(), v) - tail.begin());
        pred[i] = k == 0 ? 0 : tail_at[k - 1];
        if (k == tail.size()) {
            tail.push_back(v);
            tail_at.push_back(i);
        } else {
            tail[k] = v;
            tail_at[k] = i;
        }
    }
    std::vector<Token> out(tail.size());
    std::size_t p = tail.empty() ? 0 : tail_at.back();
    for (std::size_t k = tail.size(); k-- > 0;) {
        out[k] = x.at(p);
        p = pred[p];
    }
    return TokenString(std::move(out));
}

template <TokenSequence X, TokenSequence Y>
std::int64_t exact_lcs_len(const X& x, const Y& y) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    if (n < m) return exact_lcs_len(y, x);
    std::vector<std::int64_t> prev(m + 1, 0), cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const Token xi = x.at(i);
        for (std::size_t j = 1; j <= m; ++j) {
            cur[j] = xi == y.at(j) ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

namespace detail {

// Last row of the LCS table of x[xs..xe] against y[ys..ye] (forward or reversed).
template <TokenSequence X, TokenSequence Y>
void lcs_row(const X& x, std::size_t xs, std::size_t xe, const Y& y, std::size_t ys, std::size_t ye,
             bool reversed, std::vector<std::int64_t>& row) {
    const std::size_t m = ye + 1 - ys;
    std::vector<std::int64_t> prev(m + 1, 0);
    row.assign(m + 1, 0);
    for (std::size_t k = 0; xs + k <= xe; ++k) {
        const Token xi = x.at(reversed ? xe - k : xs + k);
        for (std::size_t j = 1; j <= m; ++j) {
            const Token yj = y.at(reversed ? ye + 1 - j : ys + j - 1);
            row[j] = xi == yj ? prev[j - 1] + 1 : std::max(prev[j], row[j - 1]);
        }
        std::swap(prev, row);
    }
    std::swap(prev, row);
}

template <TokenSequence X, TokenSequence Y>
void hirschberg(const X& x, std::size_t xs, std::size_t xe, const Y& y, std::size_t ys, std::size_t ye,
                std::vector<Token>& out) {
    if (xs > xe || ys > ye) return;
    if (xs == xe) {
        const Token c = x.at(xs);
        for (std::size_t j = ys; j <= ye; ++j) {
            if (y.at(j) == c) {
                out.push_back(c);
                return;
            }
        }
        return;
    }
    const std::size_t mid = xs + (xe - xs) / 2;
    std::vector<std::int64_t> fwd, bwd;
    lcs_row(x, xs, mid, y, ys, ye, false, fwd);
    lcs_row(x, mid + 1, xe, y, ys, ye, true, bwd);
    const std::size_t m = ye + 1 - ys;
    std::size_t split = 0;
    std::int64_t best = -1;
    for (std::size_t k = 0; k <= m; ++k) {
        const std::int64_t v = fwd[k] + bwd[m - k];
        if (v > best) {
            best = v;
            split = k;
        }
    }
    fwd.clear();
    bwd.clear();
    fwd.shrink_to_fit();
    bwd.shrink_to_fit();
    if (split > 0) hirschberg(x, xs, mid, y, ys, ys + split - 1, out);
    if (split < m) hirschberg(x, mid + 1, xe, y, ys + split, ye, out);
}

}  // namespace detail

// Linear-space LCS with sequence output.
template <TokenSequence X, TokenSequence Y>
TokenString hirschberg_lcs(const X& x, const Y& y) {
    std::vector<Token> out;
    if (x.size() > 0 && y.size() > 0) detail::hirschberg(x, 1, x.size(), y, 1, y.size(), out);
    return TokenString(std::move(out));
}

struct ClosestSubstring {
    Interval iv;
    std::int64_t d = 0;
};

// Minimum edit distance from x to a substring of y of length at most max_len
// (the empty substring included).  Ties go to the lexicographically smallest
// (start, end); the empty substring is reported as [1, 0].
template <TokenSequence X, TokenSequence Y>
ClosestSubstring closest_substring_exact(const X& x, const Y& y, std::int64_t max_len) {
    const auto n = static_cast<std::int64_t>(x.size());
    const auto m = static_cast<std::int64_t>(y.size());
    ClosestSubstring best{Interval{1, 0}, n};
    std::vector<std::int64_t> col(static_cast<std::size_t>(n + 1)), next(static_cast<std::size_t>(n + 1));
    for (std::int64_t l = 1; l <= m; ++l) {
        // Column sweep over y[l..]: col[i] = ED(x[1..i], y[l..r]).
        for (std::int64_t i = 0; i <= n; ++i) col[static_cast<std::size_t>(i)] = i;
        const std::int64_t rmax = std::min(m, l + max_len - 1);
        for (std::int64_t r = l; r <= rmax; ++r) {
            const Token yr = y.at(static_cast<std::size_t>(r));
            next[0] = r - l + 1;
            for (std::int64_t i = 1; i <= n; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                const std::int64_t sub = col[ui - 1] + (x.at(ui) == yr ? 0 : 1);
                next[ui] = std::min({col[ui] + 1, next[ui - 1] + 1, sub});
            }
            std::swap(col, next);
            if (col[static_cast<std::size_t>(n)] < best.d) best = {Interval{l, r}, col[static_cast<std::size_t>(n)]};
        }
    }
    return best;
}

}  // namespace strmeas
