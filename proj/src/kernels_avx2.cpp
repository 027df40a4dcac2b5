#include "strmeas/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace strmeas::kernels {

#if defined(__AVX2__)

// All eight lanes advance together: the vertical dependency along the pattern
// stays sequential, the lanes are independent.
void sweep_step_avx2(SweepState& st, const std::int64_t* codes, std::int32_t* out) {
    ++st.t;
    alignas(32) std::int32_t lo[kLanes];
    alignas(32) std::int32_t hi[kLanes];
    for (int k = 0; k < kLanes; ++k) {
        const auto u = static_cast<std::uint64_t>(codes[k]);
        lo[k] = static_cast<std::int32_t>(static_cast<std::uint32_t>(u));
        hi[k] = static_cast<std::int32_t>(static_cast<std::uint32_t>(u >> 32));
    }
    const __m256i vlo = _mm256_load_si256(reinterpret_cast<const __m256i*>(lo));
    const __m256i vhi = _mm256_load_si256(reinterpret_cast<const __m256i*>(hi));
    const __m256i one = _mm256_set1_epi32(1);
    auto* col = reinterpret_cast<__m256i*>(st.col.data());
    __m256i diag = _mm256_loadu_si256(col);
    __m256i above = _mm256_set1_epi32(st.t);
    _mm256_storeu_si256(col, above);
    for (int j = 1; j <= st.L; ++j) {
        const __m256i left = _mm256_loadu_si256(col + j);
        const __m256i eq = _mm256_and_si256(_mm256_cmpeq_epi32(vlo, _mm256_set1_epi32(st.pat_lo[static_cast<std::size_t>(j - 1)])),
                                            _mm256_cmpeq_epi32(vhi, _mm256_set1_epi32(st.pat_hi[static_cast<std::size_t>(j - 1)])));
        // eq lanes are all-ones (-1): diag + 1 + eq gives diag on a match.
        const __m256i sub = _mm256_add_epi32(_mm256_add_epi32(diag, one), eq);
        const __m256i v = _mm256_min_epi32(_mm256_min_epi32(_mm256_add_epi32(left, one), _mm256_add_epi32(above, one)), sub);
        diag = left;
        above = v;
        _mm256_storeu_si256(col + j, v);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), above);
}

#else

void sweep_step_avx2(SweepState& st, const std::int64_t* codes, std::int32_t* out) {
    sweep_step_scalar(st, codes, out);
}

#endif

}  // namespace strmeas::kernels
