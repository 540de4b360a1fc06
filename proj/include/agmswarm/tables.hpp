#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "agmswarm/hilbert_class_poly.hpp"
#include "agmswarm/summary_io.hpp"
#include "agmswarm/swarm.hpp"

// Reference tables for small swarms and their reproduction.
namespace agmswarm::tables {

struct DRef {
  std::uint64_t q, d;
};
struct MinMaxRef {
  std::uint64_t q, min, max;
};
struct ClassRow {
  std::int64_t t, h, h2;
  std::uint64_t size, m;
  bool operator==(const ClassRow&) const = default;
};

inline constexpr std::array<DRef, 8> kComponentCounts{
    {{7, 1}, {11, 3}, {19, 8}, {23, 5}, {27, 39}, {31, 10}, {43, 7}, {47, 4}}};
/// Published but beyond a full build here; reported as skipped.
inline constexpr std::array<DRef, 4> kComponentCountsLarge{
    {{161047, 6499}, {161051, 25558635}, {161059, 4902}, {161071, 33744}}};
inline constexpr std::array<MinMaxRef, 13> kMinMax{{{7, 12, 12},
                                                    {11, 10, 20},
                                                    {19, 12, 36},
                                                    {23, 22, 132},
                                                    {27, 6, 12},
                                                    {31, 30, 60},
                                                    {43, 42, 168},
                                                    {47, 230, 276},
                                                    {59, 174, 348},
                                                    {67, 18, 396},
                                                    {71, 28, 280},
                                                    {79, 52, 390},
                                                    {83, 410, 820}}};
/// q = 271, ordered by (t, h descending, size descending).
inline constexpr std::array<ClassRow, 13> kClasses271{{{-32, 2, 2, 540, 2},
                                                       {-24, 5, 5, 900, 3},
                                                       {-16, 6, 6, 1620, 2},
                                                       {-16, 3, 3, 810, 2},
                                                       {-8, 12, 6, 1620, 2},
                                                       {-8, 12, 6, 1620, 2},
                                                       {0, 11, 11, 2970, 2},
                                                       {8, 12, 6, 1620, 2},
                                                       {8, 12, 6, 1620, 2},
                                                       {16, 6, 6, 1620, 2},
                                                       {16, 3, 3, 810, 2},
                                                       {24, 5, 5, 2700, 1},
                                                       {32, 2, 2, 108, 10}}};

/// q = p^r; throws when q is not a prime power.
std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q);

/// Swarm summaries, optionally backed by an on-disk cache.
class SwarmSource {
 public:
  explicit SwarmSource(std::optional<std::filesystem::path> cache_dir = std::nullopt,
                       std::uint64_t guard = swarm::kDefaultVertexGuard);

  swarm::SwarmSummary summary(std::uint64_t p, unsigned r);
  /// Always builds; refreshes the cached summary.
  swarm::SwarmGraph graph(std::uint64_t p, unsigned r);
  std::size_t cache_hits() const { return hits_; }

 private:
  std::optional<io::SummaryCache> cache_;
  std::uint64_t guard_;
  std::size_t hits_ = 0;
};

struct TableResult {
  std::string text;
  bool match = true;
  std::vector<std::string> diffs;
};

TableResult fig3(SwarmSource& source);
TableResult fig4(SwarmSource& source);
TableResult ex271(SwarmSource& source, classes::HcpCache& hcp);

}  // namespace agmswarm::tables
