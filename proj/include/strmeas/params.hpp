#pragma once
// Approximation knobs and the deterministic integer schedules derived from
// them.  Every quantity that depends on eps goes through exact integer
// arithmetic on eps = num / 10^6, so results never depend on floating-point
// rounding.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strmeas {

struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// eps as an exact rational num / kDen with 0 < num < kDen.
class Eps {
public:
    static constexpr std::int64_t kDen = 1'000'000;

    Eps() = default;
    static Eps from_double(double e);
    // Parses a decimal with at most 6 fractional digits ("0.05", ".1", "1e-1" is rejected).
    static Eps parse(const std::string& text);
    static Eps from_ratio(std::int64_t num) {
        if (num <= 0 || num >= kDen) throw ParamError("eps must lie strictly between 0 and 1");
        Eps e;
        e.num_ = num;
        return e;
    }

    std::int64_t num() const { return num_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(kDen); }
    Eps divided_by(std::int64_t k) const;

    // ceil(eps * v) for v >= 0
    std::int64_t ceil_mul(std::int64_t v) const { return ceil_div(num_ * v, kDen); }
    // floor(eps * v) for v >= 0
    std::int64_t floor_mul(std::int64_t v) const { return (num_ * v) / kDen; }
    // ceil(v / eps) for v >= 0
    std::int64_t ceil_div_by(std::int64_t v) const { return ceil_div(v * kDen, num_); }
    // eps * a <= b, exactly
    bool mul_le(std::int64_t a, std::int64_t b) const { return num_ * a <= b * kDen; }

    bool operator==(const Eps&) const = default;

    static std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

private:
    std::int64_t num_ = 100'000;
};

struct ApproxParams {
    std::int64_t b = 2;
    Eps eps;
    std::optional<double> delta;
    // The approximation guarantees assume b <= ceil(sqrt(n)); callers that deliberately probe
    // larger block counts may switch the entry check off.
    bool enforce_sqrt_bound = true;

    ApproxParams() = default;
    ApproxParams(std::int64_t b_, double eps_) : b(b_), eps(Eps::from_double(eps_)) {}
    ApproxParams(std::int64_t b_, Eps eps_) : b(b_), eps(eps_) {}

    // Entry check against the instance size n.
    void validate(std::int64_t n) const;
};

std::int64_t ceil_sqrt(std::int64_t n);
// ceil(log_b n) for n >= 1, b >= 2 (exact integer arithmetic); 0 when n <= 1.
std::int64_t ceil_log(std::int64_t b, std::int64_t n);

// Geometric integer grid: 1, then v <- max(v + 1, ceil(v (1 + eps))), truncated
// at max, optionally with 0 prepended.
std::vector<std::int64_t> schedule_values(Eps ratio_eps, std::int64_t max, bool include_zero);

// Advances one step of the schedule recurrence.
inline std::int64_t schedule_next(Eps e, std::int64_t v) {
    const std::int64_t grown = v + e.ceil_mul(v);
    return grown > v + 1 ? grown : v + 1;
}

// { floor(j k / slots) : j = 0..slots }, deduplicated and ascending.
std::vector<std::int64_t> even_picks(std::int64_t k, std::int64_t slots);

}  // namespace strmeas
