#include "strmeas/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace strmeas::kernels {

void sweep_init(SweepState& st, const std::int64_t* pattern, int L) {
    st.L = L;
    st.t = 0;
    st.col.assign(static_cast<std::size_t>(L + 1) * kLanes, 0);
    for (int j = 0; j <= L; ++j) {
        for (int k = 0; k < kLanes; ++k) st.col[static_cast<std::size_t>(j) * kLanes + k] = j;
    }
    st.pat_lo.resize(static_cast<std::size_t>(L));
    st.pat_hi.resize(static_cast<std::size_t>(L));
    for (int j = 0; j < L; ++j) {
        const auto u = static_cast<std::uint64_t>(pattern[j]);
        st.pat_lo[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(static_cast<std::uint32_t>(u));
        st.pat_hi[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(static_cast<std::uint32_t>(u >> 32));
    }
}

void sweep_step_scalar(SweepState& st, const std::int64_t* codes, std::int32_t* out) {
    ++st.t;
    for (int k = 0; k < kLanes; ++k) {
        const auto u = static_cast<std::uint64_t>(codes[k]);
        const auto lo = static_cast<std::int32_t>(static_cast<std::uint32_t>(u));
        const auto hi = static_cast<std::int32_t>(static_cast<std::uint32_t>(u >> 32));
        std::int32_t diag = st.col[static_cast<std::size_t>(k)];
        std::int32_t above = st.t;
        st.col[static_cast<std::size_t>(k)] = above;
        for (int j = 1; j <= st.L; ++j) {
            const std::size_t at = static_cast<std::size_t>(j) * kLanes + static_cast<std::size_t>(k);
            const std::int32_t left = st.col[at];
            const bool eq = st.pat_lo[static_cast<std::size_t>(j - 1)] == lo && st.pat_hi[static_cast<std::size_t>(j - 1)] == hi;
            const std::int32_t v = std::min({left + 1, above + 1, diag + (eq ? 0 : 1)});
            diag = left;
            above = v;
            st.col[at] = v;
        }
        out[k] = above;
    }
}

namespace {
std::atomic<bool> g_force_scalar{false};
}

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

SweepStepFn sweep_step() {
    if (!g_force_scalar.load() && avx2_available()) return &sweep_step_avx2;
    return &sweep_step_scalar;
}

const char* sweep_impl_name() { return sweep_step() == &sweep_step_avx2 ? "avx2" : "scalar"; }

void force_scalar(bool on) { g_force_scalar.store(on); }

}  // namespace strmeas::kernels
