#pragma once
// Longest common subsequence through the LCS-to-LIS reduction: the virtual
// reduced sequence, masked views of y, the block-recursive approximation over
// blocks of x, its bounded variant, and witness-exact sequence recovery.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "strmeas/exact.hpp"
#include "strmeas/frontier.hpp"
#include "strmeas/lis_approx.hpp"
#include "strmeas/meter.hpp"
#include "strmeas/params.hpp"
#include "strmeas/token.hpp"

namespace strmeas {

// y with its first p positions replaced by the wildcard token.
template <TokenSequence Y>
class MaskedY {
public:
    MaskedY(const Y& y, std::size_t p) : y_(&y), p_(std::min(p, y.size())) {}
    std::size_t size() const { return y_->size(); }
    Token at(std::size_t i) const {
        if (i < 1 || i > y_->size()) throw IndexError("masked index out of range");
        return i <= p_ ? Token::wildcard() : y_->at(i);
    }

private:
    const Y* y_;
    std::size_t p_;
};

// z = b^1 ... b^n where b^i lists, in descending order, the positions j of y
// with x_i = y_j.  Elements are produced on demand; a sequential cursor makes
// left-to-right reads O(1) amortized while the view holds O(1) words.
template <TokenSequence X, TokenSequence Y>
class ReducedView {
public:
    ReducedView(const X& x, const Y& y) : x_(&x), y_(&y) {
        for (std::size_t i = 1; i <= x.size(); ++i) {
            const Token c = x.at(i);
            for (std::size_t j = y.size(); j >= 1; --j) {
                if (y.at(j) == c) ++size_;
            }
        }
    }
    std::size_t size() const { return size_; }
    Token at(std::size_t k) const {
        if (k < 1 || k > size_) throw IndexError("reduced index out of range");
        if (k <= rank_) reset();
        while (rank_ < k) advance();
        return Token::symbol(static_cast<std::int64_t>(j_));
    }

private:
    void reset() const {
        i_ = 1;
        j_ = y_->size() + 1;
        rank_ = 0;
    }
    void advance() const {
        while (true) {
            if (j_ <= 1) {
                ++i_;
                j_ = y_->size() + 1;
                continue;
            }
            --j_;
            if (y_->at(j_) == x_->at(i_)) {
                ++rank_;
                return;
            }
        }
    }

    const X* x_;
    const Y* y_;
    std::size_t size_ = 0;
    mutable std::size_t i_ = 1;
    mutable std::size_t j_ = 0;
    mutable std::size_t rank_ = 0;
    // First use starts from a reset cursor.
    struct Init {
        Init(ReducedView* v) { v->reset(); }
    } init_{this};
};

template <TokenSequence X, TokenSequence Y>
ReducedView<X, Y> lcs_to_lis_view(const X& x, const Y& y) {
    return ReducedView<X, Y>(x, y);
}

// Instance pieces for the frontier engine: blocks partition x, filters mask a
// prefix of y, frontier values are y-indices (0 plays -inf).
template <TokenSequence X, TokenSequence Y>
class LcsProblem {
public:
    using Value = std::int64_t;
    using Output = Token;

    struct View {
        std::size_t xb;  // x range, 1-based inclusive
        std::size_t xe;
        std::int64_t p;  // y positions <= p are masked
        std::int64_t ye; // last y position
        std::size_t xlen() const { return xe + 1 - xb; }
    };

    class BlockCursor {
    public:
        BlockCursor(const View& v, std::int64_t b)
            : v_(v), pos_(v.xb), big_(static_cast<std::int64_t>(v.xlen()) % b),
              size_(static_cast<std::int64_t>(v.xlen()) / b) {}
        View next() {
            const std::int64_t want = size_ + (j_ < big_ ? 1 : 0);
            ++j_;
            View w{pos_, pos_ + static_cast<std::size_t>(want) - 1, v_.p, v_.ye};
            pos_ += static_cast<std::size_t>(want);
            return w;
        }

    private:
        View v_;
        std::size_t pos_;
        std::int64_t big_;
        std::int64_t size_;
        std::int64_t j_ = 0;
    };

    LcsProblem(const X& x, const Y& y, std::int64_t b, SpaceMeter& m) : x_(&x), y_(&y), b_(b), m_(&m) {}

    static Value neg_inf() { return 0; }
    static Value pos_inf() { return INT64_MAX; }

    View whole() const { return View{1, x_->size(), 0, static_cast<std::int64_t>(y_->size())}; }

    bool is_base(const View& v) const {
        return static_cast<std::int64_t>(v.xlen()) <= b_ || v.ye - v.p <= b_;
    }
    std::int64_t upper_bound(const View& v) const {
        return std::max<std::int64_t>(0, std::min<std::int64_t>(static_cast<std::int64_t>(v.xlen()), v.ye - v.p));
    }
    MemoKey key(const View& v) const {
        return {static_cast<std::int64_t>(v.xb), static_cast<std::int64_t>(v.xe), v.p, v.ye, 0};
    }
    View filter(const View& v, Value q) const { return View{v.xb, v.xe, std::max(v.p, q), v.ye}; }
    BlockCursor blocks(const View& v, std::int64_t b) const { return BlockCursor(v, b); }

    // A run over z (values > z.p) can only lower Q'[s'] if Q'[s'] exceeds the
    // smallest conceivable end z.p + (s' - s) of an extension of length s' - s.
    bool may_improve(const View& z, std::int64_t s, std::int64_t l, const Frontier<Value>& next) const {
        for (std::size_t i = next.successor(s + 1); i < next.size() && next[i].s <= s + l; ++i) {
            if (next[i].q > z.p + (next[i].s - s)) return true;
        }
        return false;
    }

    // Exact patience list of the reduction restricted to the view.  Slot
    // l + 1 receives the first occurrence of x_i after P[l] (scanning slots
    // from the top, so every slot sees the previous row), which is exactly
    // what patience sorting does on the descending per-symbol runs of z.
    RunInfo base_frontier(const View& v, std::optional<std::int64_t> cap, Frontier<Value>& out) const {
        RunInfo info;
        MeteredVec<Value> P(*m_);
        P.push_back(v.p);
        for (std::size_t i = v.xb; i <= v.xe; ++i) {
            const Token c = x_->at(i);
            const auto len = static_cast<std::int64_t>(P.size()) - 1;
            for (std::int64_t l = len; l >= 0; --l) {
                const auto ul = static_cast<std::size_t>(l);
                if (l + 1 <= len && P[ul + 1] <= P[ul] + 1) continue;  // cannot improve
                const std::int64_t limit = l + 1 <= len ? P[ul + 1] - 1 : v.ye;
                std::int64_t j = P[ul] + 1;
                while (j <= limit && !(y_->at(static_cast<std::size_t>(j)) == c)) ++j;
                if (j > limit) continue;
                if (l + 1 > len) {
                    if (cap && l + 1 > *cap) {
                        info.capped = true;
                        continue;
                    }
                    P.push_back(j);
                } else {
                    P[ul + 1] = j;
                }
            }
        }
        out.clear();
        out.push_back({0, neg_inf()});
        for (std::size_t l = 1; l < P.size(); ++l) out.push_back({static_cast<std::int64_t>(l), P[l]});
        return info;
    }

    void leaf_recover(const View& v, std::optional<std::int64_t>, std::int64_t r, Value q,
                      std::vector<Output>& out) const {
        const SubView<X> xs(*x_, v.xb - 1, v.xlen());
        const SubView<Y> ys(*y_, static_cast<std::size_t>(v.p), static_cast<std::size_t>(std::max<std::int64_t>(0, q - v.p)));
        const TokenString common = hirschberg_lcs(xs, ys);
        if (static_cast<std::int64_t>(common.size()) < r) throw AccountingError("leaf holds no common subsequence of the target length");
        for (std::int64_t k = 1; k <= r; ++k) out.push_back(common.at(static_cast<std::size_t>(k)));
    }

private:
    const X* x_;
    const Y* y_;
    std::int64_t b_;
    SpaceMeter* m_;
};

template <TokenSequence X, TokenSequence Y>
std::int64_t approx_lcs(const X& x, const Y& y, const ApproxParams& p, SpaceMeter& meter, EngineOptions opt = {}) {
    p.validate(static_cast<std::int64_t>(x.size()));
    LcsProblem<X, Y> prob(x, y, p.b, meter);
    FrontierEngine<LcsProblem<X, Y>> eng(prob, p.b, p.eps, meter, opt);
    return eng.value(prob.whole());
}

template <TokenSequence X, TokenSequence Y>
std::int64_t approx_lcs(const X& x, const Y& y, std::int64_t b, double eps, SpaceMeter& meter) {
    return approx_lcs(x, y, ApproxParams(b, eps), meter);
}

template <TokenSequence X, TokenSequence Y>
Frontier<std::int64_t> approx_lcs_bound(const X& x, const Y& y, const ApproxParams& p, std::int64_t l,
                                        SpaceMeter& meter) {
    if (l < 1) throw ParamError("length bound l must be at least 1");
    p.validate(static_cast<std::int64_t>(x.size()));
    LcsProblem<X, Y> prob(x, y, p.b, meter);
    FrontierEngine<LcsProblem<X, Y>> eng(prob, p.b, p.eps, meter);
    Frontier<std::int64_t> f(meter);
    eng.run(prob.whole(), l, f);
    return f;
}

// Common subsequence of length exactly approx_lcs(x, y).
template <TokenSequence X, TokenSequence Y>
TokenString lcs_sequence(const X& x, const Y& y, const ApproxParams& p, SpaceMeter& meter,
                         std::int64_t* value_out = nullptr, EngineOptions opt = {}) {
    p.validate(static_cast<std::int64_t>(x.size()));
    LcsProblem<X, Y> prob(x, y, p.b, meter);
    FrontierEngine<LcsProblem<X, Y>> eng(prob, p.b, p.eps, meter, opt);
    const auto whole = prob.whole();
    std::int64_t target = 0;
    std::int64_t bound = 0;
    {
        Frontier<std::int64_t> f(meter);
        eng.run(whole, std::nullopt, f);
        target = frontier_max(f, LcsProblem<X, Y>::pos_inf());
        bound = f[f.successor(target)].q;
    }
    if (value_out) *value_out = target;
    std::vector<Token> out;
    eng.recover(whole, std::nullopt, target, bound, out);
    return TokenString(std::move(out));
}

template <TokenSequence X, TokenSequence Y>
TokenString lcs_sequence(const X& x, const Y& y, std::int64_t b, double eps, SpaceMeter& meter) {
    return lcs_sequence(x, y, ApproxParams(b, eps), meter);
}

}  // namespace strmeas
