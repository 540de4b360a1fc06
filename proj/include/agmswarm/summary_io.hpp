#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "agmswarm/swarm.hpp"

namespace agmswarm::io {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const swarm::SwarmSummary& summary);
/// Throws ParseError on missing fields or a schema_version mismatch.
swarm::SwarmSummary summary_from_json(const nlohmann::json& doc);

/// Pretty-printed JSON with a trailing newline.
std::string render_summary(const swarm::SwarmSummary& summary);

/// Writes to a sibling temporary file and renames it over path.
void write_atomic(const std::filesystem::path& path, const std::string& text);

/// Swarm summaries keyed by (p, r, schema version).
class SummaryCache {
 public:
  explicit SummaryCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(std::uint64_t p, std::uint64_t r) const;
  /// Empty when absent, unreadable or from another schema version.
  std::optional<swarm::SwarmSummary> load(std::uint64_t p, std::uint64_t r) const;
  void store(const swarm::SwarmSummary& summary) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace agmswarm::io
