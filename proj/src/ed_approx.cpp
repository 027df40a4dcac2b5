#include "strmeas/ed_approx.hpp"

#include <algorithm>

namespace strmeas {

std::vector<Interval> candidate_set(std::int64_t n, std::int64_t m, std::int64_t b, Interval block, Eps eps,
                                    std::int64_t delta) {
    if (!block.valid() || block.empty() || block.start < 1 || block.end > n)
        throw ParamError("candidate block must be a non-empty interval within [1, n]");
    if (delta < 0 || delta > std::max(n, m)) throw ParamError("delta must lie in [0, max(n, m)]");
    if (b < 1) throw ParamError("b must be positive");
    const auto js = schedule_values(eps, m, true);
    std::vector<Interval> out;
    std::vector<std::int64_t> ends;
    const std::int64_t L = block.length();
    ed::for_each_start(m, b, eps, block.start, L, delta, [&](std::int64_t a) {
        ed::candidate_ends(m, eps, a, L, js, ends);
        for (const auto e : ends) out.push_back(Interval{a, e});
    });
    return out;
}

std::int64_t dp_edit_distance(std::int64_t n, std::int64_t m, const std::vector<Interval>& blocks,
                              const std::vector<std::vector<Interval>>& cands,
                              const std::function<std::int64_t(std::size_t, Interval)>& M, SpaceMeter& meter) {
    if (blocks.size() != cands.size()) throw ParamError("one candidate set per block is required");
    std::int64_t covered = 0;
    for (const auto& blk : blocks) covered += blk.length();
    if (covered != n) throw ParamError("blocks must partition x");
    FrameGuard frame(meter, 8);
    MeteredVec<ed::State> cur(meter), next(meter);
    MeteredVec<std::int64_t> pend(meter);
    auto starts_of = [&](std::size_t i, MeteredVec<ed::State>& out) {
        out.clear();
        for (const auto& iv : cands[i]) {
            if (out.empty() || out.back().pos != iv.start) out.push_back({iv.start, ed::kInf});
        }
        std::sort(out.raw().begin(), out.raw().end(), [](const ed::State& a, const ed::State& b) { return a.pos < b.pos; });
        out.raw().erase(std::unique(out.raw().begin(), out.raw().end(),
                                    [](const ed::State& a, const ed::State& b) { return a.pos == b.pos; }),
                        out.raw().end());
    };
    const std::size_t nb = blocks.size();
    if (nb == 0) return m;
    starts_of(0, cur);
    if (cur.empty()) cur.push_back({1, 0});
    for (std::size_t k = 0; k < cur.size(); ++k) cur[k].a = cur[k].pos - 1;
    for (std::size_t i = 0; i < nb; ++i) {
        const std::int64_t L = blocks[i].length();
        if (i + 1 < nb) {
            starts_of(i + 1, next);
            if (next.empty()) {
                for (std::size_t k = 0; k < cur.size(); ++k) next.push_back({cur[k].pos, ed::kInf});
            }
        } else {
            next.clear();
            next.push_back({m + 1, ed::kInf});
        }
        ed::unmatched_pass(cur, next, L);
        pend.assign(next.size(), ed::kInf);
        for (const auto& iv : cands[i]) {
            const auto k = ed::landing(cur, iv.start - 1);
            if (k >= cur.size() || cur[k].pos != iv.start || cur[k].a >= ed::kInf) continue;
            const std::int64_t value = cur[k].a + M(i, iv);
            const auto land = ed::landing(next, iv.end);
            if (land < next.size()) pend[land] = std::min(pend[land], value - iv.end);
        }
        ed::pend_pass(next, pend);
        cur.swap(next);
    }
    return cur[0].a;
}

}  // namespace strmeas
