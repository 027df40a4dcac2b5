// strmeas: run a string measure on file inputs and print a one-line JSON
// report, generate seeded instances, or run the property suite.
//
// Exit codes: 0 success, 1 suite failure, 2 parameter error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "strmeas/asymmetric.hpp"
#include "strmeas/ed_approx.hpp"
#include "strmeas/exact.hpp"
#include "strmeas/generators.hpp"
#include "strmeas/lcs_approx.hpp"
#include "strmeas/lis_approx.hpp"
#include "strmeas/meter.hpp"
#include "strmeas/params.hpp"
#include "strmeas/suite.hpp"

namespace {

using namespace strmeas;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailed = 1;
constexpr int kExitParam = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TokenString read_input(const std::string& path, const std::string& format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read input file: " + path);
    const std::string text = buf.str();
    if (format == "bytes") return TokenString::from_bytes(text);
    std::istringstream is(text);
    std::vector<std::int64_t> codes;
    std::string word;
    while (is >> word) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(word, &used, 10);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != word.size()) throw IoError("not an integer in " + path + ": " + word);
        codes.push_back(v);
    }
    try {
        return TokenString::from_ints(codes);
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("reserved token code in ") + path + ": " + e.what());
    }
}

void write_output(const std::string& path, const TokenString& s, const std::string& format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    if (format == "bytes") {
        for (const auto c : s.codes()) {
            if (c < 0 || c > 255) throw ParamError("token code " + std::to_string(c) + " does not fit in a byte");
            out.put(static_cast<char>(c));
        }
    } else {
        const auto codes = s.codes();
        for (std::size_t i = 0; i < codes.size(); ++i) out << (i ? " " : "") << codes[i];
        out << '\n';
    }
    if (!out) throw IoError("cannot write output file: " + path);
}

json eps_json(const std::optional<Eps>& e) {
    if (!e) return nullptr;
    return e->value();
}

// Shared flags of the measure subcommands.
struct MeasureArgs {
    std::string x_path, y_path, format = "bytes";
    bool approx = false, asym = false, asym2 = false;
    bool emit_sequence = false, nondecreasing = false;
    std::optional<std::int64_t> b;
    std::optional<std::string> eps_text;
    std::optional<std::string> delta_text;
};

struct Report {
    std::string measure, mode;
    std::int64_t value = 0;
    std::optional<TokenString> sequence;
    std::optional<std::int64_t> b;
    std::optional<Eps> eps;
    std::optional<Eps> delta;
    std::int64_t peak_words = 0, passes_x = 0, y_probes = 0, recursion_depth = 0;
    double elapsed_ms = 0.0;

    json to_json() const {
        json j;
        j["measure"] = measure;
        j["mode"] = mode;
        j["value"] = value;
        if (sequence) j["sequence"] = sequence->codes();
        j["params"] = {{"b", b ? json(*b) : json(nullptr)}, {"eps", eps_json(eps)}, {"delta", eps_json(delta)}};
        j["stats"] = {{"peak_words", peak_words},
                      {"passes_x", passes_x},
                      {"y_probes", y_probes},
                      {"elapsed_ms", elapsed_ms},
                      {"recursion_depth", recursion_depth}};
        return j;
    }
};

std::string mode_of(const MeasureArgs& a) {
    if (a.asym) return "asym";
    if (a.asym2) return "asym2delta";
    if (a.approx) return "approx";
    return "exact";
}

Eps need_eps(const MeasureArgs& a) {
    if (!a.eps_text) throw ParamError("--eps is required in this mode");
    const Eps e = Eps::parse(*a.eps_text);
    if (!(e.num() > 0 && e.num() < Eps::kDen)) throw ParamError("eps must lie strictly between 0 and 1");
    return e;
}

ApproxParams need_params(const MeasureArgs& a) {
    if (!a.b) throw ParamError("--b is required with --approx");
    return ApproxParams(*a.b, need_eps(a));
}

Eps need_delta(const MeasureArgs& a) {
    if (!a.delta_text) throw ParamError("--delta is required with --asym2delta");
    const Eps d = Eps::parse(*a.delta_text);
    if (!(d.num() > 0 && 2 * d.num() <= Eps::kDen)) throw ParamError("delta must lie in (0, 1/2]");
    return d;
}

std::int64_t depth_of(std::int64_t b, std::size_t n) {
    return ceil_log(b, std::max<std::int64_t>(1, static_cast<std::int64_t>(n)));
}

Report run_ed(const MeasureArgs& a) {
    if (a.emit_sequence) throw ParamError("--emit-sequence is not available for ed: the ED algorithms output values only");
    const TokenString x = read_input(a.x_path, a.format);
    const TokenString y = read_input(a.y_path, a.format);
    Report r;
    r.measure = "ed";
    r.mode = mode_of(a);
    SpaceMeter meter;
    if (a.asym) {
        const Eps eps = need_eps(a);
        StreamTape tape(x, y);
        r.value = asym_ed_sqrt(tape, eps, meter);
        r.b = std::max<std::int64_t>(2, ceil_sqrt(static_cast<std::int64_t>(x.size())));
        r.eps = eps;
        r.passes_x = tape.passes_started();
        r.y_probes = tape.y_probes();
        r.recursion_depth = depth_of(*r.b, x.size());
    } else if (a.asym2) {
        const Eps delta = need_delta(a);
        StreamTape tape(x, y);
        r.value = asym_ed_2delta(tape, delta.value(), meter);
        r.delta = delta;
        r.passes_x = tape.passes_started();
        r.y_probes = tape.y_probes();
        r.recursion_depth = Eps::ceil_div(Eps::kDen, delta.num());
    } else if (a.approx) {
        const ApproxParams p = need_params(a);
        r.value = approx_ed(x, y, p, meter);
        r.b = p.b;
        r.eps = p.eps;
        r.recursion_depth = depth_of(p.b, std::max(x.size(), y.size()));
    } else {
        r.value = exact_ed(x, y);
    }
    r.peak_words = meter.peak();
    return r;
}

Report run_lcs(const MeasureArgs& a) {
    if (a.asym2) throw ParamError("--asym2delta is only defined for ed");
    const TokenString x = read_input(a.x_path, a.format);
    const TokenString y = read_input(a.y_path, a.format);
    Report r;
    r.measure = "lcs";
    r.mode = mode_of(a);
    SpaceMeter meter;
    if (a.asym) {
        if (a.emit_sequence) throw ParamError("--emit-sequence is not available with --asym");
        const Eps eps = need_eps(a);
        StreamTape tape(x, y);
        r.value = asym_lcs(tape, eps, meter);
        r.b = std::max<std::int64_t>(2, ceil_sqrt(static_cast<std::int64_t>(x.size())));
        r.eps = eps;
        r.passes_x = tape.passes_started();
        r.y_probes = tape.y_probes();
        r.recursion_depth = depth_of(*r.b, x.size());
    } else if (a.approx) {
        const ApproxParams p = need_params(a);
        if (a.emit_sequence) {
            std::int64_t v = 0;
            r.sequence = lcs_sequence(x, y, p, meter, &v);
            r.value = v;
        } else {
            r.value = approx_lcs(x, y, p, meter);
        }
        r.b = p.b;
        r.eps = p.eps;
        r.recursion_depth = depth_of(p.b, x.size());
    } else if (a.emit_sequence) {
        r.sequence = hirschberg_lcs(x, y);
        r.value = static_cast<std::int64_t>(r.sequence->size());
    } else {
        r.value = exact_lcs_len(x, y);
    }
    r.peak_words = meter.peak();
    return r;
}

Report run_lis(const MeasureArgs& a) {
    if (a.asym || a.asym2) throw ParamError("lis has no asymmetric mode");
    const TokenString x = read_input(a.x_path, a.format);
    Report r;
    r.measure = "lis";
    r.mode = mode_of(a);
    SpaceMeter meter;
    if (a.approx) {
        const ApproxParams p = need_params(a);
        if (a.emit_sequence) {
            std::int64_t v = 0;
            r.sequence = a.nondecreasing ? lnds_sequence(x, p, meter, &v) : lis_sequence(x, p, meter, &v);
            r.value = v;
        } else {
            r.value = a.nondecreasing ? approx_lnds(x, p, meter) : approx_lis(x, p, meter);
        }
        r.b = p.b;
        r.eps = p.eps;
        r.recursion_depth = depth_of(p.b, x.size());
    } else {
        const TokenString w = a.nondecreasing ? exact_lnds_sequence(x) : exact_lis_sequence(x);
        r.value = static_cast<std::int64_t>(w.size());
        if (a.emit_sequence) r.sequence = w;
    }
    r.peak_words = meter.peak();
    return r;
}

void add_measure_flags(CLI::App* cmd, MeasureArgs& a, bool two_inputs, bool asym_modes) {
    cmd->add_option("--x", a.x_path, "input file for x")->required();
    if (two_inputs) cmd->add_option("--y", a.y_path, "input file for y")->required();
    cmd->add_option("--format", a.format, "input format")->check(CLI::IsMember({"bytes", "ints"}));
    auto* approx = cmd->add_flag("--approx", a.approx, "deterministic approximation");
    cmd->add_option("--b", a.b, "branching factor");
    cmd->add_option("--eps", a.eps_text, "approximation parameter (decimal, at most 6 fractional digits)");
    if (asym_modes) {
        auto* asym = cmd->add_flag("--asym,--asymmetric", a.asym, "one pass over x, random access to y");
        auto* asym2 = cmd->add_flag("--asym2delta", a.asym2, "one pass, n^delta-space variant (ed only)");
        cmd->add_option("--delta", a.delta_text, "space exponent in (0, 1/2]");
        approx->excludes(asym)->excludes(asym2);
        asym->excludes(asym2);
    }
}

int run_suite(bool quick, const std::vector<int>& only, std::optional<std::uint64_t> seed_flag) {
    const std::uint64_t seed = seed_flag ? *seed_flag : suite::seed_from_env();
    const auto scale = quick ? suite::Scale::Quick : suite::Scale::Full;
    std::vector<int> ids = only;
    if (ids.empty()) {
        for (int i = suite::kFirstCriterion; i <= suite::kLastInProcess; ++i) ids.push_back(i);
    }
    std::cout << "suite seed=" << seed << " scale=" << (quick ? "quick" : "full") << '\n';
    bool all = true;
    for (const int id : ids) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = suite::run_criterion(id, seed, scale);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::cout << suite::format_line(res) << std::endl;
        std::cerr << "criterion " << id << " took " << static_cast<std::int64_t>(ms) << " ms\n";
        all = all && res.pass;
    }
    std::cout << (all ? "suite PASS" : "suite FAIL") << '\n';
    return all ? kExitOk : kExitSuiteFailed;
}

GenKind parse_kind(const std::string& k) {
    if (k == "random") return GenKind::Random;
    if (k == "planted_ed") return GenKind::PlantedEd;
    if (k == "planted_lis") return GenKind::PlantedLis;
    return GenKind::Permutation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strmeas: space-efficient approximations of ED, LCS and LIS"};
    app.require_subcommand(1);

    MeasureArgs ed_args, lcs_args, lis_args;
    auto* ed = app.add_subcommand("ed", "edit distance");
    add_measure_flags(ed, ed_args, true, true);
    ed->add_flag("--emit-sequence", ed_args.emit_sequence, "rejected: ED outputs a value only");

    auto* lcs = app.add_subcommand("lcs", "longest common subsequence");
    add_measure_flags(lcs, lcs_args, true, true);
    lcs->add_flag("--emit-sequence", lcs_args.emit_sequence, "also output a common subsequence");

    auto* lis = app.add_subcommand("lis", "longest increasing subsequence");
    add_measure_flags(lis, lis_args, false, false);
    lis->add_flag("--emit-sequence", lis_args.emit_sequence, "also output an increasing subsequence");
    lis->add_flag("--nondecreasing", lis_args.nondecreasing, "longest non-decreasing subsequence");

    GenSpec gen_spec;
    std::string gen_kind = "random", gen_x, gen_y, gen_format = "ints";
    auto* gen = app.add_subcommand("gen", "write a seeded instance to files");
    gen->add_option("--kind", gen_kind, "instance family")
        ->check(CLI::IsMember({"random", "planted_ed", "planted_lis", "permutation"}));
    gen->add_option("--seed", gen_spec.seed, "64-bit seed");
    gen->add_option("--n", gen_spec.n, "length")->required();
    gen->add_option("--alphabet", gen_spec.alphabet_size, "alphabet size");
    gen->add_option("--param", gen_spec.param, "k for planted_ed, l for planted_lis");
    gen->add_option("--out-x", gen_x, "output file for x")->required();
    gen->add_option("--out-y", gen_y, "output file for y (planted_ed)");
    gen->add_option("--format", gen_format, "output format")->check(CLI::IsMember({"bytes", "ints"}));

    bool quick = false;
    std::vector<int> only;
    std::optional<std::uint64_t> suite_seed;
    auto* suite_cmd = app.add_subcommand("suite", "run the property suite and print a pass/fail table");
    suite_cmd->add_flag("--quick", quick, "reduced instance counts");
    suite_cmd->add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, 9));
    suite_cmd->add_option("--seed", suite_seed, "base seed (overrides STRMEAS_SEED)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return kExitParam;
    }

    try {
        if (*suite_cmd) return run_suite(quick, only, suite_seed);
        if (*gen) {
            gen_spec.kind = parse_kind(gen_kind);
            const GenResult g = generate(gen_spec);
            write_output(gen_x, g.x, gen_format);
            json j = {{"kind", gen_kind}, {"n", gen_spec.n}, {"seed", gen_spec.seed}, {"x", gen_x}};
            if (g.y) {
                if (gen_y.empty()) throw ParamError("--out-y is required for planted_ed");
                write_output(gen_y, *g.y, gen_format);
                j["y"] = gen_y;
            }
            if (gen_spec.kind == GenKind::PlantedEd || gen_spec.kind == GenKind::PlantedLis) j["annotation"] = g.annotation;
            std::cout << j.dump() << '\n';
            return kExitOk;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Report r = *ed ? run_ed(ed_args) : *lcs ? run_lcs(lcs_args) : run_lis(lis_args);
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::cout << r.to_json().dump() << '\n';
        return kExitOk;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParam;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParam;
    }
}
