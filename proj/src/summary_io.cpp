#include "agmswarm/summary_io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "agmswarm/error.hpp"

namespace agmswarm::io {

using nlohmann::json;

json to_json(const swarm::SwarmSummary& s) {
  json classes = json::array();
  for (const auto& c : s.classes) {
    json entry{{"size", c.size},
               {"multiplicity", c.multiplicity},
               {"signature_hash", c.signature_hash},
               {"sample_lambda", c.sample_lambda.index()}};
    entry["trace"] = c.trace ? json(*c.trace) : json(nullptr);
    classes.push_back(std::move(entry));
  }
  json per_trace = json::array();
  for (auto [t, n] : s.vertices_per_trace) per_trace.push_back({{"trace", t}, {"vertices", n}});
  return json{{"schema_version", kSchemaVersion},
              {"q", s.q},
              {"p", s.p},
              {"r", s.r},
              {"vertex_count", s.vertex_count},
              {"d", s.d},
              {"min", s.min_size},
              {"max", s.max_size},
              {"sizes", s.sizes},
              {"classes", std::move(classes)},
              {"vertices_per_trace", std::move(per_trace)}};
}

swarm::SwarmSummary summary_from_json(const json& doc) {
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw Error(ErrorCode::ParseError, "schema_version mismatch");
    }
    swarm::SwarmSummary s;
    s.q = doc.at("q").get<std::uint64_t>();
    s.p = doc.at("p").get<std::uint64_t>();
    s.r = doc.at("r").get<std::uint64_t>();
    s.vertex_count = doc.at("vertex_count").get<std::uint64_t>();
    s.d = doc.at("d").get<std::uint64_t>();
    s.min_size = doc.at("min").get<std::uint64_t>();
    s.max_size = doc.at("max").get<std::uint64_t>();
    s.sizes = doc.at("sizes").get<std::vector<std::uint64_t>>();
    for (const auto& entry : doc.at("classes")) {
      swarm::ClassSummary c;
      if (!entry.at("trace").is_null()) c.trace = entry.at("trace").get<std::int64_t>();
      c.size = entry.at("size").get<std::size_t>();
      c.multiplicity = entry.at("multiplicity").get<std::size_t>();
      c.signature_hash = entry.at("signature_hash").get<std::uint64_t>();
      c.sample_lambda = FieldElement{entry.at("sample_lambda").get<std::uint32_t>()};
      s.classes.push_back(c);
    }
    for (const auto& entry : doc.at("vertices_per_trace")) {
      s.vertices_per_trace[entry.at("trace").get<std::int64_t>()] = entry.at("vertices").get<std::uint64_t>();
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad summary: ") + e.what());
  }
}

std::string render_summary(const swarm::SwarmSummary& summary) { return to_json(summary).dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename onto " + path.string());
  }
}

std::filesystem::path SummaryCache::path_for(std::uint64_t p, std::uint64_t r) const {
  return dir_ / ("swarm_p" + std::to_string(p) + "_r" + std::to_string(r) + "_v" + std::to_string(kSchemaVersion) +
                 ".json");
}

std::optional<swarm::SwarmSummary> SummaryCache::load(std::uint64_t p, std::uint64_t r) const {
  std::ifstream in(path_for(p, r));
  if (!in) return std::nullopt;
  try {
    auto s = summary_from_json(json::parse(in));
    if (s.p != p || s.r != r) return std::nullopt;
    return s;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void SummaryCache::store(const swarm::SwarmSummary& summary) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir_.string());
  write_atomic(path_for(summary.p, summary.r), render_summary(summary));
}

}  // namespace agmswarm::io
