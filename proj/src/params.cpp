#include "strmeas/params.hpp"

#include <cctype>
#include <cmath>

namespace strmeas {

Eps Eps::from_double(double e) {
    if (!(e > 0.0 && e < 1.0)) throw ParamError("eps must lie strictly between 0 and 1");
    return from_ratio(std::llround(e * static_cast<double>(kDen)));
}

Eps Eps::parse(const std::string& text) {
    std::size_t i = 0;
    std::int64_t whole = 0;
    bool digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        whole = whole * 10 + (text[i] - '0');
        if (whole > 1) throw ParamError("eps must lie strictly between 0 and 1: " + text);
        digits = true;
        ++i;
    }
    std::int64_t frac = 0;
    int frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (frac_digits == 6) throw ParamError("eps accepts at most 6 fractional digits: " + text);
            frac = frac * 10 + (text[i] - '0');
            ++frac_digits;
            digits = true;
            ++i;
        }
    }
    if (!digits || i != text.size()) throw ParamError("eps is not a decimal number: " + text);
    for (int d = frac_digits; d < 6; ++d) frac *= 10;
    return from_ratio(whole * kDen + frac);
}

Eps Eps::divided_by(std::int64_t k) const {
    if (k < 1) throw ParamError("eps divisor must be positive");
    const std::int64_t n = num_ / k;
    return from_ratio(n > 0 ? n : 1);
}

void ApproxParams::validate(std::int64_t n) const {
    if (b < 2) throw ParamError("b must be at least 2");
    if (enforce_sqrt_bound && n > 0 && b > ceil_sqrt(n)) {
        throw ParamError("b = " + std::to_string(b) + " exceeds ceil(sqrt(n)) = " +
                         std::to_string(ceil_sqrt(n)));
    }
    if (delta && !(*delta > 0.0 && *delta < 0.5)) throw ParamError("delta must lie strictly between 0 and 1/2");
}

std::int64_t ceil_sqrt(std::int64_t n) {
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 1 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

std::int64_t ceil_log(std::int64_t b, std::int64_t n) {
    std::int64_t d = 0;
    std::int64_t p = 1;
    while (p < n) {
        p *= b;
        ++d;
    }
    return d;
}

std::vector<std::int64_t> schedule_values(Eps ratio_eps, std::int64_t max, bool include_zero) {
    if (max < 0) throw ParamError("schedule maximum must be non-negative");
    std::vector<std::int64_t> out;
    if (include_zero) out.push_back(0);
    for (std::int64_t v = 1; v <= max; v = schedule_next(ratio_eps, v)) out.push_back(v);
    return out;
}

std::vector<std::int64_t> even_picks(std::int64_t k, std::int64_t slots) {
    if (k < 0 || slots < 1) throw ParamError("even_picks needs k >= 0 and slots >= 1");
    std::vector<std::int64_t> out;
    if (k <= slots) {
        out.reserve(static_cast<std::size_t>(k + 1));
        for (std::int64_t v = 0; v <= k; ++v) out.push_back(v);
        return out;
    }
    out.reserve(static_cast<std::size_t>(slots + 1));
    for (std::int64_t j = 0; j <= slots; ++j) {
        const std::int64_t v = j * k / slots;
        if (out.empty() || out.back() != v) out.push_back(v);
    }
    return out;
}

}  // namespace strmeas
