#pragma once
// Batched semi-global edit-distance sweep: one short pattern against up to
// kLanes text start positions at once.  Lane k holds the DP column of
// ED(pattern, y[a_k .. a_k + t - 1]) and advances by one text symbol per step,
// so after step t its bottom cell is the distance to the length-t substring.
//
// The scalar kernel is the reference; the AVX2 kernel is selected at run time
// when the CPU supports it and must agree with the reference bit for bit.

#include <cstdint>
#include <vector>

namespace strmeas::kernels {

inline constexpr int kLanes = 8;

// Lane-major DP state for a pattern of length L: cell j of lane k lives at
// col[j * kLanes + k].
struct SweepState {
    int L = 0;
    std::vector<std::int32_t> col;     // (L + 1) * kLanes
    std::vector<std::int32_t> pat_lo;  // pattern codes split into 32-bit halves
    std::vector<std::int32_t> pat_hi;
    std::int32_t t = 0;                // text symbols consumed so far
};

void sweep_init(SweepState& st, const std::int64_t* pattern, int L);

// Consumes one text symbol per lane; codes[k] is the symbol for lane k.
// Writes the bottom cell of every lane to out[k].
using SweepStepFn = void (*)(SweepState& st, const std::int64_t* codes, std::int32_t* out);

void sweep_step_scalar(SweepState& st, const std::int64_t* codes, std::int32_t* out);
void sweep_step_avx2(SweepState& st, const std::int64_t* codes, std::int32_t* out);

bool avx2_available();
// The fastest step implementation available on this CPU (overridable for tests).
SweepStepFn sweep_step();
const char* sweep_impl_name();
void force_scalar(bool on);

}  // namespace strmeas::kernels
