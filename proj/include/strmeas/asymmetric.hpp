#pragma once
// Asymmetric streaming: x arrives once, left to right, through a StreamTape;
// y is random access (every probe counted).
//
//  * asym_ed_sqrt: the ED approximation with b = ceil(sqrt n), all distance
//    guesses advanced in lockstep block by block, one buffered x block at a time.
//  * asym_closest_substring / asym_ed_2delta: the closest-substring recursion
//    over a virtual concatenation of per-block answers.
//  * asym_lcs: the LCS approximation with b = ceil(sqrt n) over a sliding
//    block buffer of x.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "strmeas/ed_approx.hpp"
#include "strmeas/exact.hpp"
#include "strmeas/kernels.hpp"
#include "strmeas/lcs_approx.hpp"
#include "strmeas/meter.hpp"
#include "strmeas/params.hpp"
#include "strmeas/token.hpp"

namespace strmeas {

struct AsymOptions {
    // eps' = eps / eps_divisor is used inside asym_ed_sqrt.
    std::int64_t eps_divisor = 4;
};

// x as seen through the tape: positions must be requested in a window that
// only moves forward; reading behind the window would need a second pass.
class StreamedX {
public:
    StreamedX(StreamTape& t, std::size_t window, SpaceMeter& m) : t_(&t), window_(std::max<std::size_t>(1, window)), buf_(m) {}

    std::size_t size() const { return t_->x_size(); }
    Token at(std::size_t i) const {
        if (i < 1 || i > size()) throw IndexError("streamed x index out of range");
        while (hi_ < i) {
            const auto tok = t_->next();
            if (!tok) throw IndexError("tape ended early");
            if (buf_.size() < window_) {
                buf_.push_back(*tok);
            } else {
                buf_[(hi_) % window_] = *tok;
            }
            ++hi_;
        }
        if (i + window_ <= hi_) throw AccountingError("streamed x read behind its buffer (second pass)");
        return buf_[(i - 1) % window_];
    }

private:
    StreamTape* t_;
    std::size_t window_;
    mutable MeteredVec<Token> buf_;
    mutable std::size_t hi_ = 0;
};

// Concatenation y[l_1..r_1] y[l_2..r_2] ... addressed through prefix sums.
template <TokenSequence Y>
class ConcatView {
public:
    ConcatView(const Y& y, const std::vector<Interval>& parts, SpaceMeter& m) : y_(&y), start_(m), prefix_(m) {
        prefix_.push_back(0);
        for (const auto& iv : parts) {
            if (iv.empty()) continue;
            start_.push_back(iv.start);
            prefix_.push_back(prefix_.back() + iv.length());
        }
    }
    std::size_t size() const { return static_cast<std::size_t>(prefix_.back()); }
    Token at(std::size_t k) const {
        if (k < 1 || k > size()) throw IndexError("concatenation index out of range");
        const auto& p = prefix_.raw();
        const auto it = std::upper_bound(p.begin(), p.end(), static_cast<std::int64_t>(k) - 1);
        const auto part = static_cast<std::size_t>(it - p.begin()) - 1;
        return y_->at(static_cast<std::size_t>(start_[part] + (static_cast<std::int64_t>(k) - 1 - p[part])));
    }

private:
    const Y* y_;
    MeteredVec<std::int64_t> start_;
    MeteredVec<std::int64_t> prefix_;
};

namespace detail {

// Exact ED with x streamed and one DP row over y.
inline std::int64_t streamed_exact_ed(StreamTape& t, SpaceMeter& meter) {
    const TapeY y(t);
    const auto m = y.size();
    MeteredVec<std::int64_t> row(meter, m + 1, 0);
    for (std::size_t j = 0; j <= m; ++j) row[j] = static_cast<std::int64_t>(j);
    std::int64_t i = 0;
    while (auto tok = t.next()) {
        ++i;
        std::int64_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::int64_t up = row[j];
            row[j] = std::min({up + 1, row[j - 1] + 1, diag + (*tok == y.at(j) ? 0 : 1)});
            diag = up;
        }
    }
    return row[m];
}

inline std::int64_t pow_ceil(std::int64_t n, double delta) {
    if (n <= 1) return 1;
    auto v = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(n), delta) - 1e-9));
    return std::max<std::int64_t>(1, v);
}

}  // namespace detail

// One pass over x; equals approx_ed(x, y, ceil(sqrt n), eps / eps_divisor).
inline std::int64_t asym_ed_sqrt(StreamTape& t, Eps eps, SpaceMeter& meter, AsymOptions opt = {}) {
    const auto n = static_cast<std::int64_t>(t.x_size());
    const auto m = static_cast<std::int64_t>(t.y_size());
    const Eps e = eps.divided_by(opt.eps_divisor);
    const std::int64_t b = std::max<std::int64_t>(2, ceil_sqrt(n));
    FrameGuard frame(meter, 8);
    if (n <= b || m <= b) return detail::streamed_exact_ed(t, meter);
    const TapeY y(t);
    const std::int64_t top = std::max(n, m);
    auto deltas = schedule_values(e, top, true);
    if (deltas.back() != top) deltas.push_back(top);
    const auto js = schedule_values(e, m, true);

    struct Instance {
        std::int64_t delta;
        bool carried = false;  // cur holds carried positions, not candidate starts
        bool next_carried = false;
        MeteredVec<ed::State> cur, next;
        MeteredVec<std::int64_t> pend;
        Instance(std::int64_t d, SpaceMeter& mm) : delta(d), cur(mm), next(mm), pend(mm) {}
    };
    std::vector<Instance> inst;
    inst.reserve(deltas.size());
    for (const auto d : deltas) inst.emplace_back(d, meter);
    auto starts_of = [&](std::int64_t delta, std::int64_t i, MeteredVec<ed::State>& out) {
        out.clear();
        const Interval blk = ed::block_of(n, b, i);
        ed::for_each_start(m, b, e, blk.start, blk.length(), delta, [&](std::int64_t a) { out.push_back({a, ed::kInf}); });
    };
    for (auto& in : inst) {
        starts_of(in.delta, 1, in.cur);
        if (in.cur.empty()) {
            in.cur.push_back({1, 0});
            in.carried = true;
        }
        for (std::size_t k = 0; k < in.cur.size(); ++k) in.cur[k].a = in.cur[k].pos - 1;
    }

    MeteredVec<std::int64_t> block(meter);
    MeteredVec<std::int64_t> starts(meter);
    MeteredVec<std::int32_t> rows(meter);
    MeteredVec<std::int64_t> ends(meter);
    const auto step = kernels::sweep_step();
    for (std::int64_t i = 1; i <= b; ++i) {
        const Interval blk = ed::block_of(n, b, i);
        const std::int64_t L = blk.length();
        block.clear();
        for (std::int64_t k = 0; k < L; ++k) block.push_back(t.next()->code());
        // Union of live starts over all instances.
        starts.clear();
        for (auto& in : inst) {
            in.next_carried = false;
            if (i < b) {
                starts_of(in.delta, i + 1, in.next);
                if (in.next.empty()) {
                    for (std::size_t k = 0; k < in.cur.size(); ++k) in.next.push_back({in.cur[k].pos, ed::kInf});
                    in.next_carried = true;
                }
            } else {
                in.next.clear();
                in.next.push_back({m + 1, ed::kInf});
            }
            ed::unmatched_pass(in.cur, in.next, L);
            in.pend.assign(in.next.size(), ed::kInf);
            if (!in.carried) {
                for (std::size_t k = 0; k < in.cur.size(); ++k) {
                    if (in.cur[k].a < ed::kInf) starts.push_back(in.cur[k].pos);
                }
            }
        }
        std::sort(starts.raw().begin(), starts.raw().end());
        starts.raw().erase(std::unique(starts.raw().begin(), starts.raw().end()), starts.raw().end());
        const std::int64_t span = (L * Eps::kDen) / e.num();
        // Sweep eight starts at a time; rows[k * stride + t] = ED(block, y[a_k .. a_k + t - 1]).
        for (std::size_t s0 = 0; s0 < starts.size(); s0 += kernels::kLanes) {
            const int lanes = static_cast<int>(std::min<std::size_t>(kernels::kLanes, starts.size() - s0));
            std::int64_t T = 0;
            std::int64_t lane_T[kernels::kLanes] = {};
            for (int k = 0; k < lanes; ++k) {
                lane_T[k] = std::min(m - starts[s0 + static_cast<std::size_t>(k)] + 1, span);
                T = std::max(T, lane_T[k]);
            }
            const auto stride = static_cast<std::size_t>(T + 1);
            rows.assign(stride * kernels::kLanes, 0);
            kernels::SweepState st;
            kernels::sweep_init(st, block.raw().data(), static_cast<int>(L));
            for (int k = 0; k < lanes; ++k) rows[static_cast<std::size_t>(k) * stride] = static_cast<std::int32_t>(L);
            std::int64_t codes[kernels::kLanes];
            std::int32_t res[kernels::kLanes];
            for (std::int64_t tt = 1; tt <= T; ++tt) {
                for (int k = 0; k < kernels::kLanes; ++k) {
                    codes[k] = (k < lanes && tt <= lane_T[k])
                                   ? y.at(static_cast<std::size_t>(starts[s0 + static_cast<std::size_t>(k)] + tt - 1)).code()
                                   : Token::pos_inf().code();
                }
                step(st, codes, res);
                for (int k = 0; k < lanes; ++k) rows[static_cast<std::size_t>(k) * stride + static_cast<std::size_t>(tt)] = res[k];
            }
            for (auto& in : inst) {
                for (int k = 0; k < lanes; ++k) {
                    const std::int64_t a = starts[s0 + static_cast<std::size_t>(k)];
                    const auto idx = ed::landing(in.cur, a - 1);
                    if (in.carried || idx >= in.cur.size() || in.cur[idx].pos != a || in.cur[idx].a >= ed::kInf) continue;
                    const std::int64_t A = in.cur[idx].a;
                    ed::candidate_ends(m, e, a, L, js, ends);
                    for (std::size_t q = 0; q < ends.size(); ++q) {
                        const std::int64_t beta = ends[q];
                        const std::int64_t value = A + rows[static_cast<std::size_t>(k) * stride + static_cast<std::size_t>(beta - a + 1)];
                        const auto land = ed::landing(in.next, beta);
                        if (land < in.next.size()) in.pend[land] = std::min(in.pend[land], value - beta);
                    }
                }
            }
        }
        for (auto& in : inst) {
            ed::pend_pass(in.next, in.pend);
            in.cur.swap(in.next);
            in.carried = in.next_carried;
        }
    }
    std::int64_t best = ed::kInf;
    for (auto& in : inst) best = std::min(best, in.cur[0].a);
    return best;
}

namespace detail {

template <TokenSequence Y>
ClosestSubstring closest_substring_rec(StreamTape& t, const Y& y, std::int64_t len, std::int64_t B, double delta,
                                       Eps eps, std::int64_t depth, SpaceMeter& meter) {
    FrameGuard frame(meter, 8);
    if (len <= B || depth <= 0) {
        MeteredVec<Token> buf(meter);
        for (std::int64_t k = 0; k < len; ++k) buf.push_back(*t.next());
        const TokenString xs(buf.raw());
        return closest_substring_exact(xs, y, 2 * len);
    }
    std::vector<Interval> parts;
    std::int64_t dsum = 0;
    MeteredVec<std::int64_t> hold(meter);  // three words per block answer
    for (std::int64_t i = 1; i <= B; ++i) {
        const Interval blk = ed::block_of(len, B, i);
        const ClosestSubstring r = closest_substring_rec(t, y, blk.length(), B, delta, eps, depth - 1, meter);
        parts.push_back(r.iv);
        hold.push_back(r.iv.start);
        hold.push_back(r.iv.end);
        hold.push_back(r.d);
        dsum += r.d;
    }
    const ConcatView<Y> ybar(y, parts, meter);
    const auto nb = static_cast<std::int64_t>(ybar.size());
    const auto m = static_cast<std::int64_t>(y.size());
    if (nb == 0 || m == 0) return ClosestSubstring{Interval{1, 0}, dsum + nb};
    const std::int64_t bb = std::max<std::int64_t>(2, pow_ceil(nb, delta));
    EdApprox<ConcatView<Y>, Y> eng(ybar, y, bb, eps, meter);
    ClosestSubstring best{Interval{1, 0}, ed::kInf};
    for (std::int64_t l = 1; l <= m; ++l) {
        for (std::int64_t r = l; r <= std::min(m, l + 2 * nb - 1); ++r) {
            const std::int64_t cap = best.d >= ed::kInf ? ed::kInf : best.d - dsum;
            if (cap <= 0) break;
            const std::int64_t v = eng.solve(1, nb, l, r, cap);
            if (v < cap) best = ClosestSubstring{Interval{l, r}, v + dsum};
        }
    }
    return best;
}

}  // namespace detail

// Closest substring of y to the streamed x, with a certified distance.
inline ClosestSubstring asym_closest_substring(StreamTape& t, double delta, Eps eps, SpaceMeter& meter,
                                               std::optional<std::int64_t> depth = std::nullopt) {
    if (!(delta > 0.0 && delta <= 0.5)) throw ParamError("delta must lie in (0, 1/2]");
    const auto n = static_cast<std::int64_t>(t.x_size());
    const std::int64_t B = std::max<std::int64_t>(2, detail::pow_ceil(n, delta));
    const std::int64_t d = depth.value_or(static_cast<std::int64_t>(std::ceil(1.0 / delta - 1e-9)));
    const TapeY y(t);
    return detail::closest_substring_rec(t, y, n, B, delta, eps, d, meter);
}

// alpha_k = (2 + eps) alpha_{k-1} + 1 + eps, alpha_0 = 1.
inline double closest_substring_alpha(std::int64_t k, double eps) {
    double a = 1.0;
    for (std::int64_t i = 0; i < k; ++i) a = (2.0 + eps) * a + 1.0 + eps;
    return a;
}

// One pass over x; the top level compares the concatenated block answers with
// the whole of y.
inline std::int64_t asym_ed_2delta(StreamTape& t, double delta, SpaceMeter& meter) {
    if (!(delta > 0.0 && delta <= 0.5)) throw ParamError("delta must lie in (0, 1/2]");
    const Eps eps = Eps::from_double(delta);
    const auto n = static_cast<std::int64_t>(t.x_size());
    const TapeY y(t);
    FrameGuard frame(meter, 8);
    const std::int64_t B = std::max<std::int64_t>(2, detail::pow_ceil(n, delta));
    if (n <= B || y.size() == 0) return detail::streamed_exact_ed(t, meter);
    const std::int64_t depth = static_cast<std::int64_t>(std::ceil(1.0 / delta - 1e-9));
    std::vector<Interval> parts;
    std::int64_t dsum = 0;
    for (std::int64_t i = 1; i <= B; ++i) {
        const Interval blk = ed::block_of(n, B, i);
        const auto r = detail::closest_substring_rec(t, y, blk.length(), B, delta, eps, depth - 1, meter);
        parts.push_back(r.iv);
        dsum += r.d;
    }
    const ConcatView<TapeY> ybar(y, parts, meter);
    const auto nb = static_cast<std::int64_t>(ybar.size());
    if (nb == 0) return dsum + static_cast<std::int64_t>(y.size());
    const std::int64_t bb = std::max<std::int64_t>(2, detail::pow_ceil(nb, delta));
    EdApprox<ConcatView<TapeY>, TapeY> eng(ybar, y, bb, eps, meter);
    return eng.run() + dsum;
}

// One pass over x; approx_lcs with b = ceil(sqrt n).
inline std::int64_t asym_lcs(StreamTape& t, Eps eps, SpaceMeter& meter) {
    const auto n = static_cast<std::int64_t>(t.x_size());
    const std::int64_t b = std::max<std::int64_t>(2, ceil_sqrt(n));
    FrameGuard frame(meter, 8);
    const StreamedX x(t, static_cast<std::size_t>(Eps::ceil_div(std::max<std::int64_t>(n, 1), b)), meter);
    const TapeY y(t);
    ApproxParams p(b, eps);
    p.enforce_sqrt_bound = false;
    if (n == 0) {
        t.next();
        return 0;
    }
    return approx_lcs(x, y, p, meter);
}

}  // namespace strmeas
