#pragma once
// Deterministic seeded instance generators.
//
// All randomness comes from SplitMix64 (Steele, Lea and Flood's 64-bit
// mixer), seeded directly with GenSpec::seed, and bounded draws use rejection
// sampling, so identical specs yield identical instances on every platform.
// Alphabet symbol c (0-based) is encoded as token code 'a' + c; permutations
// use codes 1..n.

#include <cstdint>
#include <optional>
#include <vector>

#include "strmeas/params.hpp"
#include "strmeas/token.hpp"

namespace strmeas {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound) for bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t s_;
};

enum class GenKind { Random, PlantedEd, PlantedLis, Permutation };

struct GenSpec {
    std::uint64_t seed = 0;
    std::int64_t n = 0;
    std::int64_t alphabet_size = 2;
    GenKind kind = GenKind::Random;
    // k for PlantedEd, l for PlantedLis.
    std::int64_t param = 0;
};

struct GenResult {
    TokenString x;
    std::optional<TokenString> y;
    // PlantedEd: the edit budget (an upper bound on ED(x, y)).
    // PlantedLis: the planted length; positions holds its 1-based positions.
    std::int64_t annotation = 0;
    std::vector<std::int64_t> positions;
};

GenResult generate(const GenSpec& spec);

inline constexpr std::int64_t kEnumerateGuard = 10'000'000;

// Yields every string of length 0..max_len over alphabet_size symbols, by
// length and then lexicographically.
class SmallStringEnumerator {
public:
    SmallStringEnumerator(std::int64_t alphabet_size, std::int64_t max_len);
    bool next(TokenString& out);

private:
    std::int64_t sigma_;
    std::int64_t max_len_;
    std::vector<std::int64_t> digits_;
    bool started_ = false;
    bool done_ = false;
};

// Materialized form of the enumerator (for small instance families).
std::vector<TokenString> enumerate_small(std::int64_t alphabet_size, std::int64_t max_len);

inline std::int64_t symbol_code(std::int64_t c) { return 'a' + c; }

}  // namespace strmeas
