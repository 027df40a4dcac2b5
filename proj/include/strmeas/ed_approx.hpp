#pragma once
// Space-efficient edit-distance approximation: candidate intervals per block,
// the two-row block DP over a candidate matching, and the recursive driver
// that minimizes the DP over a geometric schedule of distance guesses.
//
// The driver runs in one of two modes with identical outputs:
//  * literal: every schedule value, every candidate, every oracle query;
//  * pruned (default): the same minimum, found by branch-and-bound.  A DP
//    state or candidate is skipped only when exact lower bounds prove it
//    cannot lead below the best value already found, and recursive calls get
//    that margin as a cap (they return min(cap, value)).  Exact lower bounds
//    come from semi-global sweeps and suffix tables; this acceleration memory
//    is reported separately from the algorithm's own meter.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "strmeas/exact.hpp"
#include "strmeas/kernels.hpp"
#include "strmeas/meter.hpp"
#include "strmeas/params.hpp"
#include "strmeas/token.hpp"

namespace strmeas {

namespace ed {

inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Block i (1-based) of a length-n range split into b near-equal blocks: the
// first n mod b blocks hold ceil(n/b) tokens, the rest floor(n/b).
inline Interval block_of(std::int64_t n, std::int64_t b, std::int64_t i) {
    const std::int64_t q = n / b;
    const std::int64_t r = n % b;
    const std::int64_t start = (i - 1) * q + std::min(i - 1, r) + 1;
    const std::int64_t len = q + (i <= r ? 1 : 0);
    return Interval{start, start + len - 1};
}

// ceil(eps * delta / b): spacing of candidate starts.
inline std::int64_t start_gap(Eps eps, std::int64_t delta, std::int64_t b) {
    return Eps::ceil_div(eps.num() * delta, Eps::kDen * b);
}

// Smallest admissible interval length for a block of length L: ceil(eps L).
inline std::int64_t min_len(Eps eps, std::int64_t L) { return std::max<std::int64_t>(1, eps.ceil_mul(L)); }

// Calls fn(a) for each candidate start of a block (start l, length L >= 1) in a
// y of length m, ascending.  Every reported start has at least one candidate.
template <class Fn>
void for_each_start(std::int64_t m, std::int64_t b, Eps eps, std::int64_t l, std::int64_t L, std::int64_t delta,
                    Fn&& fn) {
    const std::int64_t g = start_gap(eps, delta, b);
    // With a zero gap every integer of the window widened by one is a start.
    const std::int64_t pad = g == 0 ? 1 : g;
    const std::int64_t lo = std::max<std::int64_t>(1, l - delta - pad);
    const std::int64_t hi = std::min(m + 1 - min_len(eps, L), l + delta + pad);
    if (lo > hi) return;
    if (g == 0) {
        for (std::int64_t a = lo; a <= hi; ++a) fn(a);
        return;
    }
    for (std::int64_t a = Eps::ceil_div(lo, g) * g; a <= hi; a += g) fn(a);
}

// Candidate ends for start a, ascending and duplicate-free: offsets j' from
// the schedule shrink or grow the block length subject to
// eps L <= length <= L / eps, then ends are clipped to m.
template <class Out>
void candidate_ends(std::int64_t m, Eps eps, std::int64_t a, std::int64_t L, const std::vector<std::int64_t>& js,
                    Out& out) {
    out.clear();
    std::int64_t last = -1;
    auto emit = [&](std::int64_t end) {
        end = std::min(end, m);
        const std::int64_t len = end - a + 1;
        if (len < 1 || !eps.mul_le(L, len)) return;
        if (end == last) return;
        out.push_back(end);
        last = end;
    };
    for (std::size_t k = js.size(); k-- > 0;) {
        const std::int64_t j = js[k];
        if (j == 0) continue;
        if (eps.mul_le(L, L - j)) emit(a + L - 1 - j);
    }
    for (const std::int64_t j : js) {
        if (eps.mul_le(L + j, L)) emit(a + L - 1 + j);
        else break;
    }
}

struct State {
    std::int64_t pos;  // next unread y position (relative, 1-based)
    std::int64_t a;    // best cost so far, kInf when dead
};

// Unmatched transition: state alpha receives min over alpha' <= alpha of
// A(alpha') + L + (alpha - alpha').
template <class V>
void unmatched_pass(const V& cur, V& next, std::int64_t L) {
    std::int64_t run = kInf;
    std::size_t p = 0;
    for (std::size_t k = 0; k < next.size(); ++k) {
        while (p < cur.size() && cur[p].pos <= next[k].pos) {
            if (cur[p].a < kInf) run = std::min(run, cur[p].a - cur[p].pos);
            ++p;
        }
        if (run < kInf) next[k].a = std::min(next[k].a, run + next[k].pos + L);
    }
}

// First index of next with pos >= beta + 1.
template <class V>
std::size_t landing(const V& next, std::int64_t beta) {
    const auto it = std::lower_bound(next.begin(), next.end(), beta + 1,
                                     [](const State& s, std::int64_t v) { return s.pos < v; });
    return static_cast<std::size_t>(it - next.begin());
}

// Resolves pending matched contributions pend[k] = min(value - beta) landing
// at index k: next[k'] >= pend[k] + pos(k') - 1 for all k' >= k.
template <class V, class P>
void pend_pass(V& next, const P& pend) {
    std::int64_t run = kInf;
    for (std::size_t k = 0; k < next.size(); ++k) {
        run = std::min(run, pend[k]);
        if (run < kInf) next[k].a = std::min(next[k].a, run + next[k].pos - 1);
    }
}

}  // namespace ed

// Candidate intervals of one block (start l, length L) for distance guess delta.
std::vector<Interval> candidate_set(std::int64_t n, std::int64_t m, std::int64_t b, Interval block, Eps eps,
                                    std::int64_t delta);

// DP over block-to-interval matchings for explicit candidate sets.
// blocks[i] are the x blocks in order; cands[i] the candidates of block i;
// M(i, iv) returns an upper bound on ED(x^i, y[iv]) (0-based block index).
std::int64_t dp_edit_distance(std::int64_t n, std::int64_t m, const std::vector<Interval>& blocks,
                              const std::vector<std::vector<Interval>>& cands,
                              const std::function<std::int64_t(std::size_t, Interval)>& M, SpaceMeter& meter);

struct EdOptions {
    bool prune = true;
    // Limit on cached sweep rows and sub-instance results (in 32-bit cells).
    std::int64_t cache_cells = std::int64_t{1} << 26;
};

struct EdStats {
    std::int64_t rounds = 0;
    std::int64_t oracle_queries = 0;
    std::int64_t recursive_calls = 0;
    std::int64_t accel_cells = 0;
};

template <TokenSequence X, TokenSequence Y>
class EdApprox {
public:
    EdApprox(const X& x, const Y& y, std::int64_t b, Eps eps, SpaceMeter& meter, EdOptions opt = {})
        : x_(&x), y_(&y), b_(b), eps_(eps), m_(&meter), opt_(opt), n_(static_cast<std::int64_t>(x.size())),
          my_(static_cast<std::int64_t>(y.size())) {}

    std::int64_t run() { return solve(1, n_, 1, my_, ed::kInf); }
    const EdStats& stats() const { return stats_; }

    // min(cap, F) where F is the algorithm's value on (x[xb..xe], y[ys..ye]).
    std::int64_t solve(std::int64_t xb, std::int64_t xe, std::int64_t ys, std::int64_t ye, std::int64_t cap) {
        const std::int64_t n = xe - xb + 1;
        const std::int64_t m = ye - ys + 1;
        FrameGuard frame(*m_, 8);
        if (n <= b_ || m <= b_ || n == 0 || m == 0) return std::min(cap, exact(xb, xe, ys, ye));
        return opt_.prune ? solve_pruned(xb, xe, ys, ye, cap) : solve_literal(xb, xe, ys, ye);
    }

private:
    using Row = std::vector<std::int32_t>;
    using RowPtr = std::shared_ptr<const Row>;

    struct Inst {
        std::int64_t xb, xe, ys, ye, n, m;
    };

    // Exact ED of a base instance.
    std::int64_t exact(std::int64_t xb, std::int64_t xe, std::int64_t ys, std::int64_t ye) {
        const std::int64_t n = xe - xb + 1;
        const std::int64_t m = ye - ys + 1;
        if (n == 0) return m;
        if (m == 0) return n;
        if (opt_.prune) {
            const RowPtr r = row(xb, xe, ys);
            if (r && m < static_cast<std::int64_t>(r->size())) return (*r)[static_cast<std::size_t>(m)];
        }
        const SubView<X> xs(*x_, static_cast<std::size_t>(xb - 1), static_cast<std::size_t>(n));
        const SubView<Y> ysub(*y_, static_cast<std::size_t>(ys - 1), static_cast<std::size_t>(m));
        return exact_ed(xs, ysub);
    }

    // Distance guesses: the schedule up to max(n, m), closed by max(n, m)
    // itself so that some guess always covers the true distance.
    std::vector<std::int64_t> guesses(const Inst& in) const {
        const std::int64_t top = std::max(in.n, in.m);
        auto d = schedule_values(eps_, top, true);
        if (d.back() != top) d.push_back(top);
        return d;
    }

    std::int64_t solve_literal(std::int64_t xb, std::int64_t xe, std::int64_t ys, std::int64_t ye) {
        const Inst in{xb, xe, ys, ye, xe - xb + 1, ye - ys + 1};
        std::int64_t best = ed::kInf;
        for (const std::int64_t delta : guesses(in)) best = std::min(best, round(in, delta, ed::kInf, nullptr));
        return best;
    }

    std::int64_t solve_pruned(std::int64_t xb, std::int64_t xe, std::int64_t ys, std::int64_t ye, std::int64_t cap) {
        const Inst in{xb, xe, ys, ye, xe - xb + 1, ye - ys + 1};
        // Suffix table: suf[i][c] = ED(x after block i, y[c..m]) for c = 1..m+1.
        const std::vector<Row> suf = suffix_table(in);
        const std::int64_t floor_ed = suf[0][1];
        cap = std::min(cap, std::max(in.n, in.m));
        if (floor_ed >= cap) return cap;
        const std::vector<std::int64_t> deltas = guesses(in);
        // The first guess at least the exact distance usually gives the best
        // value; the minimum over all guesses does not depend on the order.
        const auto first = std::lower_bound(deltas.begin(), deltas.end(), floor_ed);
        std::vector<std::int64_t> order;
        if (first != deltas.end()) order.push_back(*first);
        for (auto d : deltas) {
            if (first == deltas.end() || d != *first) order.push_back(d);
        }
        // Iterative deepening on the cap: a pass capped at c returns min(c, F),
        // which is F itself whenever it lands below c.
        std::int64_t slack = 1;
        while (true) {
            const std::int64_t c = std::min(cap, floor_ed + slack);
            std::int64_t best = c;
            for (const std::int64_t delta : order) {
                if (best <= floor_ed) break;
                best = std::min(best, round(in, delta, best, &suf));
            }
            if (best < c || c == cap) return best;
            slack *= 4;
        }
    }

    // One DP over the candidate matching for guess delta; states whose exact
    // lower bound reaches `best` are dropped (pruned mode only).
    std::int64_t round(const Inst& in, std::int64_t delta, std::int64_t best, const std::vector<Row>* suf) {
        ++stats_.rounds;
        const bool prune = suf != nullptr;
        const auto js = schedule_values(eps_, in.m, true);
        MeteredVec<ed::State> cur(*m_), next(*m_);
        MeteredVec<std::int64_t> pend(*m_), ends(*m_);
        auto starts_of = [&](std::int64_t i, MeteredVec<ed::State>& out) {
            out.clear();
            const Interval blk = ed::block_of(in.n, b_, i);
            ed::for_each_start(in.m, b_, eps_, blk.start, blk.length(), delta,
                               [&](std::int64_t a) { out.push_back({a, ed::kInf}); });
        };
        auto alive = [&](std::int64_t i, const ed::State& s) {
            return s.a < ed::kInf && (!prune || s.a + (*suf)[static_cast<std::size_t>(i)][static_cast<std::size_t>(s.pos)] < best);
        };
        // Boundary 0: the gap before the first block.
        starts_of(1, cur);
        if (cur.empty()) cur.push_back({1, ed::kInf});
        for (std::size_t k = 0; k < cur.size(); ++k) {
            cur[k].a = cur[k].pos - 1;
            if (!alive(0, cur[k])) cur[k].a = ed::kInf;
        }
        for (std::int64_t i = 1; i <= b_; ++i) {
            const Interval blk = ed::block_of(in.n, b_, i);
            const std::int64_t L = blk.length();
            if (i < b_) {
                starts_of(i + 1, next);
                if (next.empty()) {
                    for (std::size_t k = 0; k < cur.size(); ++k) next.push_back({cur[k].pos, ed::kInf});
                }
            } else {
                next.clear();
                next.push_back({in.m + 1, ed::kInf});
            }
            ed::unmatched_pass(cur, next, L);
            pend.assign(next.size(), ed::kInf);
            // Matched transitions from the candidates of block i.
            const std::int64_t gxb = in.xb + blk.start - 1;
            const std::int64_t gxe = in.xb + blk.end - 1;
            const bool base_block = L <= b_;
            ed::for_each_start(in.m, b_, eps_, blk.start, L, delta, [&](std::int64_t a) {
                // a is a state of boundary i-1 when the set was non-empty.
                const auto k = ed::landing(cur, a - 1);
                if (k >= cur.size() || cur[k].pos != a || cur[k].a >= ed::kInf) return;
                const std::int64_t A = cur[k].a;
                ed::candidate_ends(in.m, eps_, a, L, js, ends);
                const RowPtr lb = prune ? row(gxb, gxe, in.ys + a - 1) : nullptr;
                for (std::size_t e = 0; e < ends.size(); ++e) {
                    const std::int64_t beta = ends[e];
                    const std::int64_t len = beta - a + 1;
                    std::int64_t value;
                    if (prune) {
                        const std::int64_t rest = (*suf)[static_cast<std::size_t>(i)][static_cast<std::size_t>(beta + 1)];
                        const std::int64_t low = (*lb)[static_cast<std::size_t>(len)];
                        if (A + low + rest >= best) continue;
                        ++stats_.oracle_queries;
                        if (base_block) {
                            value = A + low;
                        } else {
                            value = A + sub_solve(gxb, gxe, in.ys + a - 1, in.ys + beta - 1, best - A - rest);
                        }
                        if (value + rest >= best) continue;
                    } else {
                        ++stats_.oracle_queries;
                        value = A + (base_block ? exact(gxb, gxe, in.ys + a - 1, in.ys + beta - 1)
                                                : solve(gxb, gxe, in.ys + a - 1, in.ys + beta - 1, ed::kInf));
                    }
                    const auto land = ed::landing(next, beta);
                    if (land < next.size()) pend[land] = std::min(pend[land], value - beta);
                }
            });
            ed::pend_pass(next, pend);
            bool any = false;
            for (std::size_t k = 0; k < next.size(); ++k) {
                if (!alive(i, next[k])) next[k].a = ed::kInf;
                any = any || next[k].a < ed::kInf;
            }
            if (!any) return prune ? best : ed::kInf;
            cur.swap(next);
        }
        return cur[0].a;
    }

    // Memoized capped recursive call: results below the cap are exact values,
    // results at the cap are lower bounds.
    std::int64_t sub_solve(std::int64_t xb, std::int64_t xe, std::int64_t ys, std::int64_t ye, std::int64_t cap) {
        const std::uint64_t key = pack(xb, ys, ye) ^ (static_cast<std::uint64_t>(xe) * 0x9E3779B97F4A7C15ULL);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            const Memo& mm = it->second;
            if (mm.exact) return std::min(cap, mm.value);
            if (mm.value >= cap) return cap;
        }
        ++stats_.recursive_calls;
        const std::int64_t v = solve(xb, xe, ys, ye, cap);
        if (static_cast<std::int64_t>(memo_.size()) * 4 > opt_.cache_cells) memo_.clear();
        Memo& slot = memo_[key];
        if (v < cap) slot = Memo{v, true};
        else if (!slot.exact) slot = Memo{std::max(slot.value, v), false};
        return v;
    }

    static std::uint64_t pack(std::int64_t a, std::int64_t b, std::int64_t c) {
        return (static_cast<std::uint64_t>(a) << 42) ^ (static_cast<std::uint64_t>(b) << 21) ^ static_cast<std::uint64_t>(c);
    }

    // ED(x[r..xe], y[c..ye]) for r at block boundaries, c = ys..ye+1 (stored as
    // relative column c - ys + 1).
    std::vector<Row> suffix_table(const Inst& in) {
        std::vector<Row> suf(static_cast<std::size_t>(b_ + 1), Row(static_cast<std::size_t>(in.m + 2), 0));
        Row cur(static_cast<std::size_t>(in.m + 2)), prev(static_cast<std::size_t>(in.m + 2));
        auto ycode = [&](std::int64_t c) { return y_->at(static_cast<std::size_t>(in.ys + c - 1)); };
        for (std::int64_t c = 1; c <= in.m + 1; ++c) prev[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(in.m + 1 - c);
        std::int64_t boundary = b_;
        suf[static_cast<std::size_t>(b_)] = prev;
        std::int64_t next_cut = b_ >= 1 ? ed::block_of(in.n, b_, b_).start : 1;
        for (std::int64_t r = in.n; r >= 1; --r) {
            const Token xr = x_->at(static_cast<std::size_t>(in.xb + r - 1));
            cur[static_cast<std::size_t>(in.m + 1)] = static_cast<std::int32_t>(in.n + 1 - r);
            for (std::int64_t c = in.m; c >= 1; --c) {
                const auto uc = static_cast<std::size_t>(c);
                const std::int32_t sub = prev[uc + 1] + (xr == ycode(c) ? 0 : 1);
                cur[uc] = std::min({prev[uc] + 1, cur[uc + 1] + 1, sub});
            }
            std::swap(cur, prev);
            if (r == next_cut) {
                --boundary;
                suf[static_cast<std::size_t>(boundary)] = prev;
                next_cut = boundary >= 1 ? ed::block_of(in.n, b_, boundary).start : 0;
            }
        }
        stats_.accel_cells = std::max(stats_.accel_cells, static_cast<std::int64_t>((b_ + 1) * (in.m + 2)) + cache_cells_);
        return suf;
    }

    // Cached sweep row ED(x[xb..xe], y[a .. a+t-1]) for t = 0..T with
    // T = min(|y| - a + 1, floor(L / eps)); computed eight starts at a time.
    RowPtr row(std::int64_t xb, std::int64_t xe, std::int64_t a) {
        const std::uint64_t key = pack(xb, xe, a);
        if (auto it = rows_.find(key); it != rows_.end()) return it->second;
        if (cache_cells_ > opt_.cache_cells) {
            rows_.clear();
            cache_cells_ = 0;
        }
        const std::int64_t L = xe - xb + 1;
        std::vector<std::int64_t> pat(static_cast<std::size_t>(L));
        for (std::int64_t j = 0; j < L; ++j) pat[static_cast<std::size_t>(j)] = x_->at(static_cast<std::size_t>(xb + j)).code();
        const std::int64_t span = (L * Eps::kDen) / eps_.num();
        std::int64_t lane_start[kernels::kLanes];
        std::int64_t lane_T[kernels::kLanes];
        std::int64_t T = 0;
        int lanes = 0;
        for (std::int64_t s = a; s <= my_ + 1 && lanes < kernels::kLanes; ++s) {
            if (lanes > 0 && rows_.count(pack(xb, xe, s))) break;
            lane_start[lanes] = s;
            lane_T[lanes] = std::min(my_ - s + 1, span);
            T = std::max(T, lane_T[lanes]);
            ++lanes;
        }
        kernels::SweepState st;
        kernels::sweep_init(st, pat.data(), static_cast<int>(L));
        std::vector<Row> out(static_cast<std::size_t>(lanes));
        for (int k = 0; k < lanes; ++k) {
            out[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(lane_T[k] + 1));
            out[static_cast<std::size_t>(k)][0] = static_cast<std::int32_t>(L);
        }
        const auto step = kernels::sweep_step();
        std::int64_t codes[kernels::kLanes];
        std::int32_t res[kernels::kLanes];
        for (std::int64_t t = 1; t <= T; ++t) {
            for (int k = 0; k < kernels::kLanes; ++k) {
                const std::int64_t pos = k < lanes ? lane_start[k] + t - 1 : 0;
                codes[k] = (k < lanes && t <= lane_T[k]) ? y_->at(static_cast<std::size_t>(pos)).code() : Token::pos_inf().code();
            }
            step(st, codes, res);
            for (int k = 0; k < lanes; ++k) {
                if (t <= lane_T[k]) out[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] = res[k];
            }
        }
        for (int k = 0; k < lanes; ++k) {
            cache_cells_ += static_cast<std::int64_t>(out[static_cast<std::size_t>(k)].size());
            rows_.emplace(pack(xb, xe, lane_start[k]), std::make_shared<const Row>(std::move(out[static_cast<std::size_t>(k)])));
        }
        return rows_.find(key)->second;
    }

    struct Memo {
        std::int64_t value = 0;
        bool exact = false;
    };

    const X* x_;
    const Y* y_;
    std::int64_t b_;
    Eps eps_;
    SpaceMeter* m_;
    EdOptions opt_;
    std::int64_t n_;
    std::int64_t my_;
    EdStats stats_;
    std::unordered_map<std::uint64_t, RowPtr> rows_;
    std::unordered_map<std::uint64_t, Memo> memo_;
    std::int64_t cache_cells_ = 0;
};

template <TokenSequence X, TokenSequence Y>
std::int64_t approx_ed(const X& x, const Y& y, const ApproxParams& p, SpaceMeter& meter, EdOptions opt = {},
                       EdStats* stats = nullptr) {
    p.validate(static_cast<std::int64_t>(x.size()));
    EdApprox<X, Y> eng(x, y, p.b, p.eps, meter, opt);
    const std::int64_t v = eng.run();
    if (stats) *stats = eng.stats();
    return v;
}

template <TokenSequence X, TokenSequence Y>
std::int64_t approx_ed(const X& x, const Y& y, std::int64_t b, double eps, SpaceMeter& meter) {
    return approx_ed(x, y, ApproxParams(b, eps), meter);
}

}  // namespace strmeas
