#include "strmeas/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <vector>

#include "strmeas/asymmetric.hpp"
#include "strmeas/ed_approx.hpp"
#include "strmeas/exact.hpp"
#include "strmeas/generators.hpp"
#include "strmeas/lcs_approx.hpp"
#include "strmeas/lis_approx.hpp"
#include "strmeas/meter.hpp"
#include "strmeas/params.hpp"

namespace strmeas::suite {

namespace {

using i128 = __int128;
constexpr std::int64_t kDen = Eps::kDen;

// ---- independent oracles (textbook forms, deliberately unoptimized) ----

std::int64_t oracle_lis_quadratic(const TokenString& x) {
    const std::size_t n = x.size();
    std::vector<std::int64_t> best(n + 1, 0);
    std::int64_t out = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        best[i] = 1;
        for (std::size_t j = 1; j < i; ++j) {
            if (x.at(j) < x.at(i)) best[i] = std::max(best[i], best[j] + 1);
        }
        out = std::max(out, best[i]);
    }
    return out;
}

std::int64_t oracle_lcs_table(const TokenString& x, const TokenString& y) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    std::vector<std::vector<std::int64_t>> t(n + 1, std::vector<std::int64_t>(m + 1, 0));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            t[i][j] = x.at(i) == y.at(j) ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
        }
    }
    return t[n][m];
}

std::int64_t oracle_ed_table(const TokenString& x, const TokenString& y) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    std::vector<std::vector<std::int64_t>> t(n + 1, std::vector<std::int64_t>(m + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) t[i][0] = static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j <= m; ++j) t[0][j] = static_cast<std::int64_t>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            t[i][j] = std::min({t[i - 1][j] + 1, t[i][j - 1] + 1, t[i - 1][j - 1] + (x.at(i) == y.at(j) ? 0 : 1)});
        }
    }
    return t[n][m];
}

template <class S>
bool is_subsequence(const S& sub, const TokenString& x) {
    std::size_t j = 1;
    for (std::size_t i = 1; i <= sub.size(); ++i) {
        while (j <= x.size() && !(x.at(j) == sub.at(i))) ++j;
        if (j > x.size()) return false;
        ++j;
    }
    return true;
}

bool strictly_increasing(const TokenString& s) {
    for (std::size_t i = 2; i <= s.size(); ++i) {
        if (!(s.at(i - 1) < s.at(i))) return false;
    }
    return true;
}

// ---- instance families ----

TokenString random_string(std::uint64_t seed, std::int64_t n, std::int64_t sigma) {
    GenSpec g;
    g.seed = seed;
    g.n = n;
    g.alphabet_size = sigma;
    g.kind = GenKind::Random;
    return generate(g).x;
}

TokenString permutation(std::uint64_t seed, std::int64_t n) {
    GenSpec g;
    g.seed = seed;
    g.n = n;
    g.kind = GenKind::Permutation;
    return generate(g).x;
}

TokenString planted_lis(std::uint64_t seed, std::int64_t n, std::int64_t l) {
    GenSpec g;
    g.seed = seed;
    g.n = n;
    g.kind = GenKind::PlantedLis;
    g.param = l;
    return generate(g).x;
}

// x with k positions substituted by a different symbol (lengths stay equal).
TokenString substituted(const TokenString& x, std::int64_t k, std::int64_t sigma, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Token> t = x.tokens();
    const auto n = static_cast<std::uint64_t>(t.size());
    for (std::int64_t e = 0; e < k && n > 0; ++e) {
        const auto pos = rng.below(n);
        const std::int64_t old = t[pos].code() - 'a';
        const auto shift = static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(sigma - 1)));
        t[pos] = Token::symbol(symbol_code((old + shift) % sigma));
    }
    return TokenString(std::move(t));
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    SplitMix64 r(seed ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL));
    return r.next();
}

// ---- exact bound arithmetic ----

// v <= ((den + 10 num) / den)^d * e, exactly.
bool ed_upper_ok(std::int64_t v, std::int64_t e, Eps eps, std::int64_t d) {
    std::int64_t p = kDen + 10 * eps.num();
    std::int64_t q = kDen;
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    i128 lhs = v;
    i128 rhs = e;
    for (std::int64_t i = 0; i < d; ++i) {
        lhs *= q;
        rhs *= p;
    }
    return lhs <= rhs;
}

// (1 - c * eps) * L <= v, exactly (c an integer).
bool lower_ok(std::int64_t v, std::int64_t L, Eps eps, std::int64_t c) {
    const i128 coef = static_cast<i128>(kDen) - static_cast<i128>(c) * eps.num();
    return coef * L <= static_cast<i128>(v) * kDen;
}

std::string fmt_ratio(double r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(4);
    os << r;
    return os.str();
}

struct Tally {
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::string first_failure;
    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0 && cases > 0; }
    std::string summary() const {
        std::ostringstream os;
        os << cases << " cases, " << failures << " failures";
        if (failures) os << " (first: " << first_failure << ")";
        return os.str();
    }
};

void check_balance(const SpaceMeter& m, Tally& t, const std::string& where) {
    if (m.live() != 0) t.fail("meter not balanced after " + where);
}

// ---- criteria ----

CriterionResult crit_ed_sandwich(std::uint64_t seed, Scale scale) {
    CriterionResult r{1, "ED sandwich", false, ""};
    const int per_cell = scale == Scale::Full ? 50 : 2;
    Tally t;
    double worst = 1.0;
    struct Cell {
        std::int64_t b;
        const char* eps;
    };
    const Cell cells[] = {{16, "0.1"}, {8, "0.05"}};
    for (const std::int64_t n : {64, 128, 256}) {
        for (const auto& c : cells) {
            const Eps eps = Eps::parse(c.eps);
            ApproxParams p(c.b, eps);
            p.enforce_sqrt_bound = false;  // b = 16 exceeds ceil(sqrt n) for n < 256
            const std::int64_t d = ceil_log(c.b, n);
            for (int j = 0; j < per_cell; ++j) {
                const std::uint64_t s = mix(seed, 1, static_cast<std::uint64_t>(n * 1000 + c.b * 100 + j));
                const TokenString x = random_string(s, n, 4);
                const TokenString y = j % 2 == 0 ? random_string(s + 1, n, 4)
                                                 : substituted(x, j == 1 ? 0 : 1 + j % (n / 4), 4, s + 2);
                SpaceMeter m;
                const std::int64_t v = approx_ed(x, y, p, m);
                const std::int64_t e = exact_ed(x, y);
                ++t.cases;
                std::ostringstream id;
                id << "n=" << n << " b=" << c.b << " pair " << j << ": approx " << v << " exact " << e;
                if (v < e || !ed_upper_ok(v, e, eps, d) || ((v == 0) != (e == 0))) t.fail(id.str());
                check_balance(m, t, id.str());
                if (e > 0) worst = std::max(worst, static_cast<double>(v) / static_cast<double>(e));
            }
        }
    }
    r.pass = t.ok();
    r.detail = t.summary() + ", worst ratio " + fmt_ratio(worst);
    return r;
}

CriterionResult crit_lis_sandwich(std::uint64_t seed, Scale scale) {
    CriterionResult r{2, "LIS sandwich", false, ""};
    const int count = scale == Scale::Full ? 100 : 3;
    const std::int64_t n = 4096;
    const ApproxParams p(16, Eps::parse("0.05"));
    const std::int64_t d = ceil_log(p.b, n);
    Tally t;
    double worst = 1.0;
    for (int j = 0; j < count; ++j) {
        const TokenString x = permutation(mix(seed, 2, static_cast<std::uint64_t>(j)), n);
        SpaceMeter m;
        const std::int64_t v = approx_lis(x, p, m);
        const std::int64_t L = patience_sorting(x).length;
        ++t.cases;
        std::ostringstream id;
        id << "permutation " << j << ": approx " << v << " exact " << L;
        if (v > L || !lower_ok(v, L, p.eps, 3 * d)) t.fail(id.str());
        check_balance(m, t, id.str());
        worst = std::min(worst, static_cast<double>(v) / static_cast<double>(L));
    }
    r.pass = t.ok();
    r.detail = t.summary() + ", worst ratio " + fmt_ratio(worst);
    return r;
}

CriterionResult crit_lis_sequence(std::uint64_t seed, Scale scale) {
    CriterionResult r{3, "LIS sequence validity", false, ""};
    const int count = scale == Scale::Full ? 50 : 3;
    const std::int64_t n = 1024;
    const ApproxParams p(8, Eps::parse("0.05"));
    const std::int64_t d = ceil_log(p.b, n);
    Tally t;
    for (int j = 0; j < count; ++j) {
        const std::uint64_t s = mix(seed, 3, static_cast<std::uint64_t>(j));
        const TokenString x = j % 2 == 0 ? permutation(s, n) : planted_lis(s, n, 64 + 8 * j);
        SpaceMeter m;
        std::int64_t value = -1;
        const TokenString out = lis_sequence(x, p, m, &value);
        SpaceMeter m2;
        const std::int64_t v = approx_lis(x, p, m2);
        const std::int64_t L = patience_sorting(x).length;
        ++t.cases;
        std::ostringstream id;
        id << "input " << j << ": |out| " << out.size() << " approx " << v << " exact " << L;
        const auto len = static_cast<std::int64_t>(out.size());
        if (!strictly_increasing(out) || !is_subsequence(out, x) || len != v || value != v ||
            !lower_ok(len, L, p.eps, 3 * d))
            t.fail(id.str());
        check_balance(m, t, id.str());
        check_balance(m2, t, id.str());
    }
    r.pass = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult crit_lcs_reduction(std::uint64_t, Scale scale) {
    CriterionResult r{4, "LCS reduction exactness", false, ""};
    const std::int64_t max_len = scale == Scale::Full ? 6 : 4;
    const auto all = enumerate_small(2, max_len);
    Tally t;
    for (const auto& x : all) {
        for (const auto& y : all) {
            const auto z = lcs_to_lis_view(x, y);
            const std::int64_t via = patience_sorting(z).length;
            const std::int64_t direct = exact_lcs_len(x, y);
            ++t.cases;
            if (via != direct) {
                std::ostringstream id;
                id << "|x|=" << x.size() << " |y|=" << y.size() << ": reduction " << via << " dp " << direct;
                t.fail(id.str());
            }
        }
    }
    r.pass = t.ok();
    r.detail = t.summary();
    return r;
}

CriterionResult crit_lcs_sandwich(std::uint64_t seed, Scale scale) {
    CriterionResult r{5, "LCS sandwich + sequence", false, ""};
    const int count = scale == Scale::Full ? 100 : 2;
    const std::int64_t n = scale == Scale::Full ? 512 : 128;
    const ApproxParams p(8, Eps::parse("0.05"));
    const std::int64_t d = ceil_log(p.b, n);
    Tally t;
    double worst = 1.0;
    for (int j = 0; j < count; ++j) {
        const std::uint64_t s = mix(seed, 5, static_cast<std::uint64_t>(j));
        const TokenString x = random_string(s, n, 4);
        const TokenString y = j % 2 == 0 ? random_string(s + 1, n, 4) : substituted(x, n / 4, 4, s + 2);
        SpaceMeter m;
        std::int64_t v = -1;
        const TokenString common = lcs_sequence(x, y, p, m, &v);
        const std::int64_t L = exact_lcs_len(x, y);
        ++t.cases;
        std::ostringstream id;
        id << "pair " << j << ": approx " << v << " |seq| " << common.size() << " exact " << L;
        if (v > L || !lower_ok(v, L, p.eps, 3 * d) || static_cast<std::int64_t>(common.size()) != v ||
            !is_subsequence(common, x) || !is_subsequence(common, y))
            t.fail(id.str());
        check_balance(m, t, id.str());
        if (L > 0) worst = std::min(worst, static_cast<double>(v) / static_cast<double>(L));
    }
    r.pass = t.ok();
    r.detail = t.summary() + ", worst ratio " + fmt_ratio(worst);
    return r;
}

CriterionResult crit_one_pass(std::uint64_t seed, Scale scale) {
    CriterionResult r{6, "One-pass enforcement", false, ""};
    const int count = scale == Scale::Full ? 50 : 3;
    Tally t;
    const Eps ed_eps = Eps::parse("0.2");
    const Eps lcs_eps = Eps::parse("0.1");
    const Eps delta = Eps::parse("0.5");
    // alpha_2 = (2 + d)(3 + 2d) + 1 + d over den^2.
    const i128 dn = delta.num();
    const i128 alpha_num = (2 * static_cast<i128>(kDen) + dn) * (3 * static_cast<i128>(kDen) + 2 * dn) +
                           (static_cast<i128>(kDen) + dn) * kDen;
    const i128 alpha_den = static_cast<i128>(kDen) * kDen;
    double worst_ed = 1.0, worst_lcs = 1.0, worst_2d = 1.0;
    for (int j = 0; j < count; ++j) {
        const std::uint64_t s = mix(seed, 6, static_cast<std::uint64_t>(j));
        {
            const std::int64_t n = 256;
            const TokenString x = random_string(s, n, 4);
            const TokenString y = j % 2 == 0 ? random_string(s + 1, n, 4) : substituted(x, 1 + j % 40, 4, s + 2);
            StreamTape tape(x, y);
            SpaceMeter m;
            const std::int64_t v = asym_ed_sqrt(tape, ed_eps, m);
            const std::int64_t e = exact_ed(x, y);
            ++t.cases;
            std::ostringstream id;
            id << "ed-sqrt pair " << j << ": " << v << " vs " << e << ", passes " << tape.passes_started();
            if (tape.passes_started() != 1 || v < e ||
                static_cast<i128>(v) * kDen > static_cast<i128>(kDen + ed_eps.num()) * e)
                t.fail(id.str());
            check_balance(m, t, id.str());
            if (e > 0) worst_ed = std::max(worst_ed, static_cast<double>(v) / static_cast<double>(e));
        }
        {
            const std::int64_t n = 400;
            const TokenString x = random_string(s + 3, n, 4);
            const TokenString y = j % 2 == 0 ? random_string(s + 4, n, 4) : substituted(x, n / 4, 4, s + 5);
            StreamTape tape(x, y);
            SpaceMeter m;
            const std::int64_t v = asym_lcs(tape, lcs_eps, m);
            const std::int64_t L = exact_lcs_len(x, y);
            ++t.cases;
            std::ostringstream id;
            id << "lcs pair " << j << ": " << v << " vs " << L << ", passes " << tape.passes_started();
            if (tape.passes_started() != 1 || v > L || !lower_ok(v, L, lcs_eps, 1)) t.fail(id.str());
            check_balance(m, t, id.str());
            if (L > 0) worst_lcs = std::min(worst_lcs, static_cast<double>(v) / static_cast<double>(L));
        }
        {
            const std::int64_t n = 128;
            const TokenString x = random_string(s + 6, n, 4);
            const TokenString y = j % 2 == 0 ? random_string(s + 7, n, 4) : substituted(x, 1 + j % 20, 4, s + 8);
            StreamTape tape(x, y);
            SpaceMeter m;
            const std::int64_t v = asym_ed_2delta(tape, delta.value(), m);
            const std::int64_t e = exact_ed(x, y);
            ++t.cases;
            std::ostringstream id;
            id << "ed-2delta pair " << j << ": " << v << " vs " << e << ", passes " << tape.passes_started();
            if (tape.passes_started() != 1 || v < e || static_cast<i128>(v) * alpha_den > alpha_num * e)
                t.fail(id.str());
            check_balance(m, t, id.str());
            if (e > 0) worst_2d = std::max(worst_2d, static_cast<double>(v) / static_cast<double>(e));
        }
    }
    r.pass = t.ok();
    r.detail = t.summary() + ", worst ratios ed-sqrt " + fmt_ratio(worst_ed) + " lcs " + fmt_ratio(worst_lcs) +
               " ed-2delta " + fmt_ratio(worst_2d);
    return r;
}

CriterionResult crit_closest_substring(std::uint64_t seed, Scale scale) {
    CriterionResult r{7, "Closest-substring oracle", false, ""};
    const int count = scale == Scale::Full ? 50 : 3;
    const Eps eps = Eps::parse("0.1");
    Tally t;
    double worst = 1.0;
    const std::int64_t sizes[] = {16, 32, 48, 64};
    for (int j = 0; j < count; ++j) {
        const std::uint64_t s = mix(seed, 7, static_cast<std::uint64_t>(j));
        const std::int64_t n = sizes[j % 4];
        const std::int64_t m = n + n / 2;
        const TokenString x = random_string(s, n, 4);
        TokenString y = random_string(s + 1, m, 4);
        if (j % 2 == 1) {
            // Embed a mutated copy of x inside y at a seeded offset.
            const TokenString c = substituted(x, j % 6, 4, s + 2);
            std::vector<Token> yt = y.tokens();
            const std::size_t off = static_cast<std::size_t>(mix(s, 3) % static_cast<std::uint64_t>(m - n + 1));
            for (std::size_t k = 0; k < c.size(); ++k) yt[off + k] = c.at(k + 1);
            y = TokenString(std::move(yt));
        }
        StreamTape tape(x, y);
        SpaceMeter meter;
        const ClosestSubstring got = asym_closest_substring(tape, 0.5, eps, meter);
        const ClosestSubstring opt = closest_substring_exact(x, y, 2 * n);
        const auto sub = token_substring(y, got.iv);
        const std::int64_t certified = exact_ed(x, sub);
        ++t.cases;
        std::ostringstream id;
        id << "instance " << j << " (n=" << n << "): d " << got.d << " ed " << certified << " opt " << opt.d;
        if (!got.iv.valid() || got.iv.end > m || got.d < certified || tape.passes_started() != 1 ||
            static_cast<i128>(got.d) * kDen > (3 * static_cast<i128>(kDen) + 2 * eps.num()) * opt.d)
            t.fail(id.str());
        check_balance(meter, t, id.str());
        if (opt.d > 0) worst = std::max(worst, static_cast<double>(got.d) / static_cast<double>(opt.d));
    }
    r.pass = t.ok();
    r.detail = t.summary() + ", worst ratio " + fmt_ratio(worst);
    return r;
}

CriterionResult crit_space_scaling(std::uint64_t seed, Scale) {
    CriterionResult r{8, "Space scaling", false, ""};
    const Eps eps = Eps::parse("0.1");
    Tally t;
    std::vector<std::int64_t> peaks;
    const std::int64_t sizes[] = {1 << 10, 1 << 12, 1 << 14};
    EngineOptions plain;
    plain.memo = false;  // measure the algorithm's own working set, no memo shortcuts
    for (const std::int64_t n : sizes) {
        // b = ceil(n^(1/3)) exactly.
        std::int64_t b = 1;
        while (b * b * b < n) ++b;
        std::int64_t peak = 0;
        for (int j = 0; j < 3; ++j) {
            const TokenString x = permutation(mix(seed, 8, static_cast<std::uint64_t>(n * 10 + j)), n);
            SpaceMeter m;
            approx_lis(x, ApproxParams(b, eps), m, plain);
            ++t.cases;
            check_balance(m, t, "n=" + std::to_string(n));
            peak = std::max(peak, m.peak());
        }
        peaks.push_back(peak);
    }
    std::ostringstream os;
    os << "peak words";
    for (std::size_t i = 0; i < peaks.size(); ++i) os << " n=" << sizes[i] << ":" << peaks[i];
    for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
        const double ratio = static_cast<double>(peaks[i + 1]) / static_cast<double>(peaks[i]);
        os << ", ratio(" << sizes[i + 1] << "/" << sizes[i] << ") " << fmt_ratio(ratio);
        if (peaks[i + 1] > 3 * peaks[i]) t.fail("peak ratio above 3 at n=" + std::to_string(sizes[i]));
    }
    r.pass = t.ok();
    r.detail = t.summary() + ", " + os.str();
    return r;
}

CriterionResult crit_oracles(std::uint64_t seed, Scale scale) {
    CriterionResult r{9, "Oracle cross-checks", false, ""};
    Tally t;
    // Patience sorting vs the quadratic DP, exhaustively.
    {
        SmallStringEnumerator en(3, scale == Scale::Full ? 9 : 6);
        TokenString x;
        while (en.next(x)) {
            ++t.cases;
            const auto p = patience_sorting(x).length;
            if (p != oracle_lis_quadratic(x)) t.fail("patience on a length-" + std::to_string(x.size()) + " string");
            const TokenString w = exact_lis_sequence(x);
            if (static_cast<std::int64_t>(w.size()) != p || !strictly_increasing(w) || !is_subsequence(w, x))
                t.fail("LIS witness on a length-" + std::to_string(x.size()) + " string");
        }
    }
    // Hirschberg vs the full LCS table.
    {
        const int count = scale == Scale::Full ? 200 : 20;
        for (int j = 0; j < count; ++j) {
            const std::uint64_t s = mix(seed, 9, static_cast<std::uint64_t>(j));
            const auto n = static_cast<std::int64_t>(s % 129);
            const auto m = static_cast<std::int64_t>((s >> 8) % 129);
            const TokenString x = random_string(s, n, 4);
            const TokenString y = random_string(s + 1, m, 4);
            const TokenString c = hirschberg_lcs(x, y);
            ++t.cases;
            if (static_cast<std::int64_t>(c.size()) != oracle_lcs_table(x, y) || !is_subsequence(c, x) ||
                !is_subsequence(c, y))
                t.fail("hirschberg pair " + std::to_string(j));
        }
    }
    // Edit-distance metric axioms, plus agreement with the full table.
    {
        const int count = scale == Scale::Full ? 300 : 30;
        for (int j = 0; j < count; ++j) {
            const std::uint64_t s = mix(seed, 10, static_cast<std::uint64_t>(j));
            const TokenString a = random_string(s, static_cast<std::int64_t>(s % 65), 3);
            const TokenString b = random_string(s + 1, static_cast<std::int64_t>((s >> 8) % 65), 3);
            const TokenString c = random_string(s + 2, static_cast<std::int64_t>((s >> 16) % 65), 3);
            const std::int64_t ab = exact_ed(a, b), ba = exact_ed(b, a), bc = exact_ed(b, c), ac = exact_ed(a, c);
            ++t.cases;
            const bool same = a.tokens() == b.tokens();
            if (exact_ed(a, a) != 0 || (ab == 0) != same || ab != ba || ac > ab + bc || ab != oracle_ed_table(a, b))
                t.fail("ed triple " + std::to_string(j));
        }
    }
    r.pass = t.ok();
    r.detail = t.summary();
    return r;
}

}  // namespace

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("STRMEAS_SEED"); s && *s) {
        char* end = nullptr;
        const auto v = std::strtoull(s, &end, 10);
        if (end && *end == '\0') return v;
        throw ParamError("STRMEAS_SEED must be a decimal integer");
    }
    return kDefaultSeed;
}

CriterionResult run_criterion(int id, std::uint64_t seed, Scale scale) {
    switch (id) {
        case 1: return crit_ed_sandwich(seed, scale);
        case 2: return crit_lis_sandwich(seed, scale);
        case 3: return crit_lis_sequence(seed, scale);
        case 4: return crit_lcs_reduction(seed, scale);
        case 5: return crit_lcs_sandwich(seed, scale);
        case 6: return crit_one_pass(seed, scale);
        case 7: return crit_closest_substring(seed, scale);
        case 8: return crit_space_scaling(seed, scale);
        case 9: return crit_oracles(seed, scale);
        default: throw ParamError("criterion id must be between 1 and 9");
    }
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.title << ": " << r.detail;
    return os.str();
}

}  // namespace strmeas::suite
