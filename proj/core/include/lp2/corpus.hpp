#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lp2/quiver.hpp"
#include "lp2/scalar.hpp"

namespace lp2 {

enum class OutputFormat { Text, Json };

inline constexpr std::uint64_t kDefaultPrime = 2147483659ULL;
inline constexpr std::uint64_t kDefaultSeed = 20240521ULL;

struct RunConfig {
    ScalarMode mode = RationalMode{};
    int range_lo = -8;
    int range_hi = 8;
    std::string corpus = "standard";
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = kDefaultSeed;
    std::size_t random_pairs = 100;
};

struct CorpusEntry {
    std::string name;
    Representation rep;
};

/// Heart-0 objects: the three simples, three points, pushforward(1,0), pushforward(2,0).
std::vector<CorpusEntry> standard_corpus();

/// The smaller set used for the triangle check: a point, S0, pushforward(d,0) for d <= 2.
std::vector<CorpusEntry> triangle_corpus();

/// Seeded pairs of direct sums (two summands each) drawn from `pool`.
std::vector<std::pair<Representation, Representation>> random_sum_pairs(const std::vector<CorpusEntry>& pool,
                                                                        std::size_t count, std::uint64_t seed);

enum class Cell { Pass, Fail, Skip };

struct CorpusRow {
    std::string name;
    std::vector<Cell> cells;
    std::vector<std::string> notes;  // one per failing cell
};

struct CorpusResult {
    std::vector<std::string> columns;
    std::vector<CorpusRow> rows;
    std::string mode;
    std::uint64_t seed = 0;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

/// Runs every module-level check over `entries` (plus the identity verifiers and the
/// seeded direct-sum pairs). A fixture that fails its relation check is excluded from
/// every later column, so it shows exactly one failing cell.
CorpusResult run_corpus(const std::vector<CorpusEntry>& entries, const RunConfig& cfg);

std::string render_text(const CorpusResult& r);

}  // namespace lp2
