#pragma once
// The property suite behind the acceptance criteria: seeded instance
// families, independent oracles and exact (integer) bound checks.  The CLI
// `suite` command and the acceptance test both run it.

#include <cstdint>
#include <string>

namespace strmeas::suite {

enum class Scale { Quick, Full };

inline constexpr std::uint64_t kDefaultSeed = 20240607;
inline constexpr int kFirstCriterion = 1;
inline constexpr int kLastInProcess = 9;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // deterministic summary (no timings)
};

// STRMEAS_SEED when set (decimal), otherwise kDefaultSeed.
std::uint64_t seed_from_env();

// Runs one in-process criterion (1..9).
CriterionResult run_criterion(int id, std::uint64_t seed, Scale scale);

std::string format_line(const CriterionResult& r);

}  // namespace strmeas::suite
