#pragma once
// Longest increasing subsequence approximation: the budgeted streaming base
// case, the block-recursive ApproxLIS / bounded variant, witness-exact
// sequence recovery, and the non-decreasing reduction.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "strmeas/exact.hpp"
#include "strmeas/frontier.hpp"
#include "strmeas/meter.hpp"
#include "strmeas/params.hpp"
#include "strmeas/token.hpp"

namespace strmeas {

template <class V>
struct ValueTraits;

template <>
struct ValueTraits<Token> {
    static constexpr Token neg_inf() { return Token::neg_inf(); }
    static constexpr Token pos_inf() { return Token::pos_inf(); }
};

// (x_i, i) under lexicographic order: strictly increasing runs of pairs are
// exactly the non-decreasing runs of x.
struct PairToken {
    Token value;
    std::int64_t index = 0;
    constexpr auto operator<=>(const PairToken&) const = default;
};

template <>
struct ValueTraits<PairToken> {
    static constexpr PairToken neg_inf() { return {Token::neg_inf(), 0}; }
    static constexpr PairToken pos_inf() { return {Token::pos_inf(), INT64_MAX}; }
};

template <TokenSequence X>
class PairedView {
public:
    explicit PairedView(const X& x) : x_(&x) {}
    std::size_t size() const { return x_->size(); }
    PairToken at(std::size_t i) const { return {x_->at(i), static_cast<std::int64_t>(i)}; }

private:
    const X* x_;
};

template <TokenSequence X>
PairedView<X> reduce_nondecreasing(const X& x) {
    return PairedView<X>(x);
}

template <class Seq>
using SeqValue = std::remove_cvref_t<decltype(std::declval<const Seq&>().at(std::size_t{1}))>;

// Instance pieces for the frontier engine over an ordered sequence.  A view is
// a base-position range plus an exclusive lower filter; its elements are the
// values in the range that exceed the filter.
template <class Seq>
class LisProblem {
public:
    using Value = SeqValue<Seq>;
    using Output = Value;
    using Traits = ValueTraits<Value>;

    struct View {
        std::size_t begin;  // 1-based base positions, inclusive
        std::size_t end;
        Value lo;
        std::int64_t count;
    };

    class BlockCursor {
    public:
        BlockCursor(const LisProblem& p, const View& v, std::int64_t b)
            : p_(&p), v_(v), b_(b), pos_(v.begin), big_(v.count % b), size_(v.count / b) {}
        View next() {
            const std::int64_t want = size_ + (j_ < big_ ? 1 : 0);
            ++j_;
            const std::size_t start = pos_;
            std::int64_t got = 0;
            while (got < want) {
                if (v_.lo < p_->seq_->at(pos_)) ++got;
                ++pos_;
            }
            return View{start, pos_ - 1, v_.lo, want};
        }

    private:
        const LisProblem* p_;
        View v_;
        std::int64_t b_;
        std::size_t pos_;
        std::int64_t big_;
        std::int64_t size_;
        std::int64_t j_ = 0;
    };

    LisProblem(const Seq& seq, std::int64_t b, Eps eps, SpaceMeter& m)
        : seq_(&seq), b_(b), budget_(eps.ceil_div_by(b)), m_(&m) {}

    static Value neg_inf() { return Traits::neg_inf(); }
    static Value pos_inf() { return Traits::pos_inf(); }

    View whole() const {
        return View{1, seq_->size(), neg_inf(), static_cast<std::int64_t>(seq_->size())};
    }

    bool is_base(const View& v) const { return v.count <= b_ * b_; }
    std::int64_t upper_bound(const View& v) const { return v.count; }
    bool may_improve(const View&, std::int64_t, std::int64_t, const Frontier<Value>&) const { return true; }

    MemoKey key(const View& v) const {
        MemoKey k{static_cast<std::int64_t>(v.begin), static_cast<std::int64_t>(v.end), 0, 0, v.count};
        if constexpr (std::is_same_v<Value, PairToken>) {
            k[2] = v.lo.value.code();
            k[3] = v.lo.index;
        } else {
            k[2] = v.lo.code();
        }
        return k;
    }
    View filter(const View& v, const Value& q) const {
        View w{v.begin, v.end, std::max(v.lo, q), 0};
        if (!(v.lo < q)) {
            w.count = v.count;
            return w;
        }
        for (std::size_t i = v.begin; i <= v.end; ++i) {
            if (w.lo < seq_->at(i)) ++w.count;
        }
        return w;
    }

    BlockCursor blocks(const View& v, std::int64_t b) const { return BlockCursor(*this, v, b); }

    RunInfo base_frontier(const View& v, std::optional<std::int64_t> cap, Frontier<Value>& out) const {
        StreamingFrontier<Value> sf(*m_, budget_, cap, neg_inf());
        for (std::size_t i = v.begin; i <= v.end; ++i) {
            const Value x = seq_->at(i);
            if (v.lo < x) sf.push(x);
        }
        out.swap(sf.frontier());
        return sf.info();
    }

    // Exact on views of at most b elements; otherwise replays the streaming
    // base case backwards from the first moment the target entry appears.
    void leaf_recover(const View& v, std::optional<std::int64_t> cap, std::int64_t r, const Value& q,
                      std::vector<Output>& out) const {
        if (v.count <= b_) {
            exact_band(v, r, q, out);
            return;
        }
        std::vector<Value> rev;
        rev.reserve(static_cast<std::size_t>(r));
        std::size_t limit = v.end;
        Value bound = q;
        for (std::int64_t want = r; want > 0; --want) {
            StreamingFrontier<Value> sf(*m_, budget_, cap, neg_inf());
            bool found = false;
            for (std::size_t i = v.begin; i <= limit; ++i) {
                const Value x = seq_->at(i);
                if (!(v.lo < x)) continue;
                const auto pl = sf.push(x);
                if (pl.slot == 0) continue;
                const auto& f = sf.frontier();
                const auto j = f.successor(want);
                if (j < f.size() && !(bound < f[j].q)) {
                    rev.push_back(x);
                    bound = pl.pred;
                    limit = i - 1;
                    found = true;
                    break;
                }
            }
            if (!found) throw AccountingError("streaming witness replay failed");
        }
        out.insert(out.end(), rev.rbegin(), rev.rend());
    }

    std::int64_t budget() const { return budget_; }
    const Seq& seq() const { return *seq_; }

private:
    // Longest increasing run of the band (lo, q] of the view, first r elements.
    void exact_band(const View& v, std::int64_t r, const Value& q, std::vector<Output>& out) const {
        // Indexed by rank among the band's elements (at most v.count <= b of them).
        MeteredVec<Value> vals(*m_);
        MeteredVec<std::size_t> pred(*m_);
        MeteredVec<Value> tail(*m_);
        MeteredVec<std::size_t> tail_at(*m_);
        for (std::size_t i = v.begin; i <= v.end; ++i) {
            const Value x = seq_->at(i);
            if (!(v.lo < x) || q < x) continue;
            const auto k = static_cast<std::size_t>(std::lower_bound(tail.begin(), tail.end(), x) - tail.begin());
            vals.push_back(x);
            pred.push_back(k == 0 ? 0 : tail_at[k - 1]);
            if (k == tail.size()) {
                tail.push_back(x);
                tail_at.push_back(vals.size());
            } else {
                tail[k] = x;
                tail_at[k] = vals.size();
            }
        }
        if (static_cast<std::int64_t>(tail.size()) < r) throw AccountingError("band holds no witness of the target length");
        std::vector<Value> seq(tail.size());
        std::size_t p = tail_at.back();
        for (std::size_t k = tail.size(); k-- > 0;) {
            seq[k] = vals[p - 1];
            p = pred[p - 1];
        }
        out.insert(out.end(), seq.begin(), seq.begin() + r);
    }

    const Seq* seq_;
    std::int64_t b_;
    std::int64_t budget_;
    SpaceMeter* m_;
};

// Streaming LIS frontier with budgeted cleanups (the base case of ApproxLIS).
template <class Seq>
Frontier<SeqValue<Seq>> ges_approx_lis(const Seq& x, std::int64_t budget, Eps /*eps*/, SpaceMeter& meter,
                                       std::optional<std::int64_t> cap = std::nullopt) {
    if (budget < 1) throw ParamError("budget must be at least 1");
    using V = SeqValue<Seq>;
    StreamingFrontier<V> sf(meter, budget, cap, ValueTraits<V>::neg_inf());
    for (std::size_t i = 1; i <= x.size(); ++i) sf.push(x.at(i));
    Frontier<V> out(meter);
    out.swap(sf.frontier());
    return out;
}

namespace detail {
inline void check_lis_params(const ApproxParams& p, std::size_t n) {
    p.validate(static_cast<std::int64_t>(n));
}
}  // namespace detail

template <class Seq>
std::int64_t approx_lis(const Seq& x, const ApproxParams& p, SpaceMeter& meter, EngineOptions opt = {}) {
    detail::check_lis_params(p, x.size());
    LisProblem<Seq> prob(x, p.b, p.eps, meter);
    FrontierEngine<LisProblem<Seq>> eng(prob, p.b, p.eps, meter, opt);
    return eng.value(prob.whole());
}

template <class Seq>
std::int64_t approx_lis(const Seq& x, std::int64_t b, double eps, SpaceMeter& meter) {
    return approx_lis(x, ApproxParams(b, eps), meter);
}

template <class Seq>
Frontier<SeqValue<Seq>> approx_lis_bound(const Seq& x, const ApproxParams& p, std::int64_t l, SpaceMeter& meter) {
    if (l < 1) throw ParamError("length bound l must be at least 1");
    detail::check_lis_params(p, x.size());
    LisProblem<Seq> prob(x, p.b, p.eps, meter);
    FrontierEngine<LisProblem<Seq>> eng(prob, p.b, p.eps, meter);
    Frontier<SeqValue<Seq>> f(meter);
    eng.run(prob.whole(), l, f);
    return f;
}

// Increasing subsequence of length exactly approx_lis(x), recovered by
// replaying the frontier computation.
template <class Seq>
std::vector<SeqValue<Seq>> lis_sequence_values(const Seq& x, const ApproxParams& p, SpaceMeter& meter,
                                               std::int64_t* value_out = nullptr, EngineOptions opt = {}) {
    detail::check_lis_params(p, x.size());
    using V = SeqValue<Seq>;
    LisProblem<Seq> prob(x, p.b, p.eps, meter);
    FrontierEngine<LisProblem<Seq>> eng(prob, p.b, p.eps, meter, opt);
    std::vector<V> out;
    const auto whole = prob.whole();
    std::int64_t target = 0;
    V bound = ValueTraits<V>::neg_inf();
    {
        Frontier<V> f(meter);
        eng.run(whole, std::nullopt, f);
        target = frontier_max(f, ValueTraits<V>::pos_inf());
        bound = f[f.successor(target)].q;
    }
    if (value_out) *value_out = target;
    eng.recover(whole, std::nullopt, target, bound, out);
    return out;
}

template <TokenSequence X>
TokenString lis_sequence(const X& x, const ApproxParams& p, SpaceMeter& meter, std::int64_t* value_out = nullptr) {
    return TokenString(lis_sequence_values(x, p, meter, value_out));
}

template <TokenSequence X>
TokenString lis_sequence(const X& x, std::int64_t b, double eps, SpaceMeter& meter) {
    return lis_sequence(x, ApproxParams(b, eps), meter);
}

// Non-decreasing variants through the pair reduction.
template <TokenSequence X>
std::int64_t approx_lnds(const X& x, const ApproxParams& p, SpaceMeter& meter) {
    const auto z = reduce_nondecreasing(x);
    return approx_lis(z, p, meter);
}

template <TokenSequence X>
TokenString lnds_sequence(const X& x, const ApproxParams& p, SpaceMeter& meter, std::int64_t* value_out = nullptr) {
    const auto z = reduce_nondecreasing(x);
    std::vector<Token> out;
    for (const auto& v : lis_sequence_values(z, p, meter, value_out)) out.push_back(v.value);
    return TokenString(std::move(out));
}

}  // namespace strmeas
