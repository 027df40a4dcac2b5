#pragma once
// Sparse patience-list frontiers and the block-recursive frontier engine
// shared by the LIS and LCS approximations.
//
// A Problem supplies the instance-specific pieces:
//   using View, Value, Output;
//   Value neg_inf() / pos_inf();
//   bool is_base(const View&);
//   BaseRun base_frontier(const View&, std::optional<int64_t> cap, Frontier<Value>& out);
//   View filter(const View&, Value q);             // keep elements > q
//   BlockCursor blocks(const View&);                // yields b sub-views in order
//   int64_t upper_bound(const View&);               // cheap bound on the LIS of the view
//   void leaf_recover(const View&, cap, r, q, std::vector<Output>& out);
//   MemoKey key(const View&);                       // identifies the view's content
//
// The engine implements the recursive outer loop: for each block, the new
// frontier length k is the best s + (recursive estimate on the block filtered
// by Q[s]); S is then resampled evenly and Q rebuilt from capped recursive
// runs over the length schedule.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "strmeas/meter.hpp"
#include "strmeas/params.hpp"

namespace strmeas {

template <class V>
struct FrontierEntry {
    std::int64_t s;
    V q;
    bool operator==(const FrontierEntry&) const = default;
};

// S and Q stored together as entries sorted by s; entry 0 is (0, -inf).
template <class V>
class Frontier {
public:
    explicit Frontier(SpaceMeter& m) : e_(m) {}

    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }
    const FrontierEntry<V>& operator[](std::size_t i) const { return e_[i]; }
    FrontierEntry<V>& operator[](std::size_t i) { return e_[i]; }
    const FrontierEntry<V>& back() const { return e_.back(); }
    void push_back(FrontierEntry<V> x) { e_.push_back(x); }
    void clear() { e_.clear(); }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }
    MeteredVec<FrontierEntry<V>>& entries() { return e_; }
    const MeteredVec<FrontierEntry<V>>& entries() const { return e_; }
    void swap(Frontier& o) noexcept { e_.swap(o.e_); }

    std::vector<std::int64_t> lengths() const {
        std::vector<std::int64_t> s;
        for (const auto& x : e_) s.push_back(x.s);
        return s;
    }
    // Index of the smallest entry with s >= i, or size() if none.
    std::size_t successor(std::int64_t i) const {
        return static_cast<std::size_t>(
            std::lower_bound(e_.begin(), e_.end(), i, [](const FrontierEntry<V>& a, std::int64_t v) { return a.s < v; }) -
            e_.begin());
    }

private:
    MeteredVec<FrontierEntry<V>> e_;
};

// P'[i] = Q[j] for the smallest j >= i in S; -inf for i <= 0, +inf past max S.
template <class V>
V frontier_interpolate(const Frontier<V>& f, std::int64_t i, V neg_inf, V pos_inf) {
    if (i <= 0) return neg_inf;
    const auto j = f.successor(i);
    return j == f.size() ? pos_inf : f[j].q;
}

// Largest s whose witness bound is finite.
template <class V>
std::int64_t frontier_max(const Frontier<V>& f, V pos_inf) {
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i].q != pos_inf) return f[i].s;
    }
    return 0;
}

// Outcome flags of one run; `capped` records whether a length cap ever changed
// the computation (when it did not, the run equals the uncapped run).
struct RunInfo {
    bool capped = false;
};

// Streaming frontier with periodic even resampling (the budgeted base case).
// Each element is placed into the interpolated list at the smallest index
// whose value is >= it; when |S| exceeds 2 * budget the frontier is reduced to
// even_picks(max S, budget) with interpolated values.
template <class V>
class StreamingFrontier {
public:
    StreamingFrontier(SpaceMeter& m, std::int64_t budget, std::optional<std::int64_t> cap, V neg_inf)
        : f_(m), budget_(budget), cap_(cap) {
        f_.push_back({0, neg_inf});
    }

    struct Placement {
        std::int64_t slot;  // 0 when the cap ignored the element
        V pred;             // P'[slot - 1] before the placement
    };

    Placement push(const V& v) {
        auto& e = f_.entries().raw();
        // smallest j >= 1 with Q[s_j] >= v (Q is non-decreasing)
        const auto it = std::lower_bound(e.begin() + 1, e.end(), v,
                                         [](const FrontierEntry<V>& a, const V& x) { return a.q < x; });
        const auto j = static_cast<std::size_t>(it - e.begin());
        const std::int64_t l = e[j - 1].s + 1;
        const V pred = e[j - 1].q;
        if (cap_ && l > *cap_) {
            info_.capped = true;
            return {0, pred};
        }
        if (j < e.size() && e[j].s == l) {
            e[j].q = v;
        } else {
            e.insert(e.begin() + static_cast<std::ptrdiff_t>(j), FrontierEntry<V>{l, v});
            f_.entries().sync();
        }
        if (static_cast<std::int64_t>(e.size()) > 2 * budget_) cleanup();
        return {l, pred};
    }

    const Frontier<V>& frontier() const { return f_; }
    Frontier<V>& frontier() { return f_; }
    RunInfo info() const { return info_; }

private:
    void cleanup() {
        auto& e = f_.entries().raw();
        const auto picks = even_picks(e.back().s, budget_);
        std::vector<FrontierEntry<V>> kept;
        kept.reserve(picks.size());
        std::size_t j = 0;
        for (auto p : picks) {
            while (e[j].s < p) ++j;
            kept.push_back({p, e[j].q});
        }
        e.assign(kept.begin(), kept.end());
        f_.entries().sync();
    }

    Frontier<V> f_;
    std::int64_t budget_;
    std::optional<std::int64_t> cap_;
    RunInfo info_;
};

using MemoKey = std::array<std::int64_t, 5>;

struct MemoKeyHash {
    std::size_t operator()(const std::pair<MemoKey, std::int64_t>& k) const {
        std::uint64_t h = static_cast<std::uint64_t>(k.second) * 0x9E3779B97F4A7C15ULL;
        for (const auto v : k.first) {
            h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

struct EngineOptions {
    // Runs are pure functions of (view, cap); remembering them skips repeated
    // recursion without changing any output.  The memo is acceleration memory
    // and is not charged to the algorithm's meter.
    bool memo = true;
    std::int64_t memo_entries = std::int64_t{1} << 24;
};

template <class Problem>
class FrontierEngine {
public:
    using View = typename Problem::View;
    using V = typename Problem::Value;
    using Output = typename Problem::Output;

    FrontierEngine(Problem& p, std::int64_t b, Eps eps, SpaceMeter& m, EngineOptions opt = {})
        : p_(p), b_(b), eps_(eps), m_(m), budget_(eps.ceil_div_by(b)), opt_(opt) {}

    std::int64_t budget() const { return budget_; }

    // Frontier of the view after all blocks; cap = length bound l (the bounded variant).
    RunInfo run(const View& view, std::optional<std::int64_t> cap, Frontier<V>& out) {
        if (!opt_.memo) return run_plain(view, cap, out);
        const std::pair<MemoKey, std::int64_t> key{p_.key(view), cap ? *cap : -1};
        if (auto it = memo_.find(key); it != memo_.end()) {
            out.clear();
            for (const auto& e : it->second.entries) out.push_back(e);
            return it->second.info;
        }
        const RunInfo info = run_plain(view, cap, out);
        if (static_cast<std::int64_t>(memo_cells_) > opt_.memo_entries) {
            memo_.clear();
            memo_cells_ = 0;
        }
        memo_cells_ += out.size() + 4;
        memo_.emplace(key, Memo{std::vector<FrontierEntry<V>>(out.begin(), out.end()), info});
        return info;
    }

    std::size_t memo_cells() const { return memo_cells_; }

    // Read-only result of run(view, cap): points into the memo when enabled,
    // otherwise into `scratch`.  Valid until the next run on this engine.
    struct RunView {
        const FrontierEntry<V>* data;
        std::size_t n;
        RunInfo info;
        std::size_t size() const { return n; }
        const FrontierEntry<V>& operator[](std::size_t i) const { return data[i]; }
    };

    RunView run_view(const View& view, std::optional<std::int64_t> cap, Frontier<V>& scratch) {
        if (!opt_.memo) {
            const RunInfo info = run_plain(view, cap, scratch);
            return RunView{scratch.entries().raw().data(), scratch.size(), info};
        }
        const std::pair<MemoKey, std::int64_t> key{p_.key(view), cap ? *cap : -1};
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            run(view, cap, scratch);
            it = memo_.find(key);
        }
        return RunView{it->second.entries.data(), it->second.entries.size(), it->second.info};
    }

    RunInfo run_plain(const View& view, std::optional<std::int64_t> cap, Frontier<V>& out) {
        FrameGuard frame(m_, 8);
        out.clear();
        if (p_.is_base(view)) return p_.base_frontier(view, cap, out);
        RunInfo info;
        Frontier<V> next(m_);
        out.push_back({0, p_.neg_inf()});
        auto cursor = p_.blocks(view, b_);
        for (std::int64_t t = 1; t <= b_; ++t) {
            const View blk = cursor.next();
            if (step(out, blk, cap, next)) info.capped = true;
            out.swap(next);
        }
        return info;
    }

    std::int64_t value(const View& view) {
        Frontier<V> f(m_);
        run(view, std::nullopt, f);
        return frontier_max(f, p_.pos_inf());
    }

    // Emits exactly r increasing elements of the view whose last is <= q.
    // Precondition: the final frontier of run(view, cap) has an entry s >= r
    // with Q[s] <= q.
    void recover(const View& view, std::optional<std::int64_t> cap, std::int64_t r, V q, std::vector<Output>& out) {
        if (r <= 0) return;
        FrameGuard frame(m_, 8);
        if (p_.is_base(view)) {
            p_.leaf_recover(view, cap, r, q, out);
            return;
        }
        // Per block: filter threshold, length bound, part length, part bound.
        struct Part {
            V low;
            std::int64_t l;
            std::int64_t len;
            V high;
        };
        MeteredVec<Part> parts(m_, static_cast<std::size_t>(b_ + 1), Part{p_.neg_inf(), 0, 0, p_.neg_inf()});
        Frontier<V> prev(m_), next(m_);
        std::int64_t want = r;
        V bound = q;
        for (std::int64_t t = b_; t >= 1; --t) {
            // Replay blocks 1..t-1 to rebuild S_{t-1}, Q_{t-1}.
            prev.clear();
            prev.push_back({0, p_.neg_inf()});
            auto cursor = p_.blocks(view, b_);
            for (std::int64_t u = 1; u < t; ++u) {
                const View blk = cursor.next();
                step(prev, blk, cap, next);
                prev.swap(next);
            }
            const View blk = cursor.next();
            const auto hit = provenance(prev, blk, cap, want, bound);
            parts[static_cast<std::size_t>(t)] = Part{hit.low, hit.l, hit.part, bound};
            want -= hit.part;
            bound = hit.low;
        }
        prev.clear();
        next.clear();
        auto cursor = p_.blocks(view, b_);
        for (std::int64_t t = 1; t <= b_; ++t) {
            const View blk = cursor.next();
            const Part& pt = parts[static_cast<std::size_t>(t)];
            if (pt.len > 0) recover(p_.filter(blk, pt.low), pt.l, pt.len, pt.high, out);
        }
    }

private:
    struct Hit {
        V low;
        std::int64_t l;
        std::int64_t part;
    };

    // Invokes fn(l) over the l-schedule for extension budget kk, stopping after
    // the first run the cap did not influence (all larger l repeat it exactly).
    template <class Fn>
    void for_each_l(std::int64_t kk, Fn&& fn) {
        if (kk < 1) return;
        std::int64_t l = 1;
        while (true) {
            const bool stop = fn(l);
            if (stop || l == kk) return;
            l = std::min(schedule_next(eps_, l), kk);
        }
    }

    // Extension length k for this block, before the cap.
    std::int64_t block_k(const Frontier<V>& cur, const View& blk) {
        Frontier<V> scratch(m_);
        auto scratch_of = [&]() -> Frontier<V>& { return scratch; };
        std::int64_t k = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            const auto& e = cur[i];
            if (e.q == p_.pos_inf()) continue;
            if (e.s > k) k = e.s;
            const View z = p_.filter(blk, e.q);
            if (e.s + p_.upper_bound(z) <= k) continue;
            const auto r = run_view(z, std::nullopt, scratch_of());
            std::int64_t d = 0;
            for (std::size_t j = r.size(); j-- > 0;) {
                if (r[j].q != p_.pos_inf()) {
                    d = r[j].s;
                    break;
                }
            }
            if (e.s + d > k) k = e.s + d;
        }
        return k;
    }

    // One outer-loop iteration; returns whether the cap bound k.
    bool step(const Frontier<V>& cur, const View& blk, std::optional<std::int64_t> cap, Frontier<V>& next) {
        std::int64_t k = block_k(cur, blk);
        bool capped = false;
        if (cap && k > *cap) {
            k = *cap;
            capped = true;
        }
        next.clear();
        for (auto s : even_picks(k, budget_)) next.push_back({s, s == 0 ? p_.neg_inf() : p_.pos_inf()});
        Frontier<V> sub(m_);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const auto e = cur[i];
            if (e.q == p_.pos_inf()) continue;
            // s' = s: the old witness itself.
            const auto self = next.successor(e.s);
            if (self < next.size() && next[self].s == e.s && e.q < next[self].q) next[self].q = e.q;
            const View z = p_.filter(blk, e.q);
            for_each_l(k - e.s, [&](std::int64_t l) {
                if (!p_.may_improve(z, e.s, l, next)) return false;
                const auto r = run_view(z, l, sub);
                merge(next, e.s, l, r);
                return !r.info.capped;
            });
        }
        normalize(next);
        return capped;
    }

    // Q'[s'] = min(Q'[s'], Q~[s~]) for s' in (s, s+l], s~ the smallest length >= s' - s.
    template <class Sub>
    void merge(Frontier<V>& next, std::int64_t s, std::int64_t l, const Sub& sub) {
        std::size_t j = 0;
        for (std::size_t i = next.successor(s + 1); i < next.size() && next[i].s <= s + l; ++i) {
            const std::int64_t need = next[i].s - s;
            while (j < sub.size() && (sub[j].s < need || sub[j].q == p_.pos_inf())) ++j;
            if (j == sub.size()) return;
            if (sub[j].q < next[i].q) next[i].q = sub[j].q;
        }
    }

    // Suffix minima (prefixes of longer witnesses) and removal of unwitnessed lengths.
    void normalize(Frontier<V>& f) {
        auto& e = f.entries().raw();
        for (std::size_t i = e.size(); i-- > 1;) {
            if (i + 1 < e.size() && e[i + 1].q < e[i].q) e[i].q = e[i + 1].q;
        }
        std::size_t w = 1;
        for (std::size_t i = 1; i < e.size(); ++i) {
            if (e[i].q != p_.pos_inf()) e[w++] = e[i];
        }
        e.resize(w);
    }

    // Finds a frontier run that witnesses (want, bound) at this block: an entry
    // (s, Q[s]) of the previous frontier and an extension inside the block.
    Hit provenance(const Frontier<V>& cur, const View& blk, std::optional<std::int64_t> cap, std::int64_t want,
                   const V& bound) {
        std::int64_t k = block_k(cur, blk);
        if (cap && k > *cap) k = *cap;
        Frontier<V> sub(m_);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const auto e = cur[i];
            if (e.q == p_.pos_inf()) continue;
            const std::int64_t need = want - e.s;
            if (need <= 0) {
                if (!(bound < e.q)) return Hit{e.q, 0, 0};
                continue;
            }
            const View z = p_.filter(blk, e.q);
            std::optional<Hit> hit;
            for_each_l(k - e.s, [&](std::int64_t l) {
                const auto r = run_view(z, l, sub);
                for (std::size_t jj = 0; jj < r.size(); ++jj) {
                    if (r[jj].s >= need && r[jj].q != p_.pos_inf() && !(bound < r[jj].q)) {
                        hit = Hit{e.q, l, need};
                        return true;
                    }
                }
                return !r.info.capped;
            });
            if (hit) return *hit;
        }
        throw AccountingError("sequence recovery found no witness for a frontier entry");
    }

    struct Memo {
        std::vector<FrontierEntry<V>> entries;
        RunInfo info;
    };

    Problem& p_;
    std::int64_t b_;
    Eps eps_;
    SpaceMeter& m_;
    std::int64_t budget_;
    EngineOptions opt_;
    std::unordered_map<std::pair<MemoKey, std::int64_t>, Memo, MemoKeyHash> memo_;
    std::size_t memo_cells_ = 0;
};

}  // namespace strmeas
