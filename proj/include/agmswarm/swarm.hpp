#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agmswarm/finite_field.hpp"

// The AGM over F_q (q = 3 mod 4) as a functional graph on admissible pairs,
// and its decomposition into jellyfish: one cycle with a length-one tentacle
// hanging off every cycle vertex.
namespace agmswarm::swarm {

inline constexpr std::uint64_t kDefaultVertexGuard = 100'000'000;

struct AgmPair {
  FieldElement a;
  FieldElement b;
  auto operator<=>(const AgmPair&) const = default;
};

/// a, b nonzero, a != +-b, ab a nonzero square.
bool is_admissible(const Field& F, AgmPair pair);

/// ((a + b)/2, s) where s^2 = ab and the sign of s makes the new product a square.
AgmPair agm_step(const Field& F, AgmPair pair);

/// lambda = b^2 / a^2.
FieldElement lambda_of(const Field& F, AgmPair pair);

std::string render(const Field& F, AgmPair pair);

struct Jellyfish {
  std::size_t id = 0;
  /// Successor order, starting from the lexicographically smallest cycle vertex.
  std::vector<AgmPair> cycle;
  /// tentacles[i] is the unique non-cycle predecessor of cycle[i].
  std::vector<AgmPair> tentacles;
  std::size_t size = 0;
  /// Trace of Frobenius shared by all vertices; absent when p = 3.
  std::optional<std::int64_t> trace;
  /// lambda = b^2/a^2 along the cycle.
  std::vector<FieldElement> lambda_cycle;
};

struct Signature {
  /// Least rotation of the lambda cycle (canonical element order).
  std::vector<FieldElement> lambdas;
  /// FNV-1a of the rendered rotation, comma separated.
  std::uint64_t hash = 0;
  bool operator==(const Signature& o) const { return lambdas == o.lambdas; }
};

Signature canonical_signature(const Field& F, const Jellyfish& J);

/// Jellyfish that coincide once vertices are identified with their curves.
struct JellyClass {
  Signature signature;
  std::vector<std::size_t> members;
  std::size_t size = 0;
  std::optional<std::int64_t> trace;
  std::size_t multiplicity() const { return members.size(); }
};

/// Outcome of the cycle-plus-tentacle certification done at build time.
struct ShapeCertificate {
  bool ok = true;
  std::string detail;
};

class SwarmGraph {
 public:
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }

  std::uint64_t vertex_count() const { return successor_.size(); }
  AgmPair vertex(std::uint32_t id) const;
  /// Vertex id of an admissible pair.
  std::uint32_t id_of(AgmPair pair) const;
  std::uint32_t successor(std::uint32_t id) const { return successor_[id]; }
  std::uint32_t component_of(std::uint32_t id) const { return component_[id]; }
  bool on_cycle(std::uint32_t id) const { return on_cycle_[id] != 0; }
  std::uint8_t in_degree(std::uint32_t id) const { return in_degree_[id]; }

  const std::vector<Jellyfish>& jellyfish() const { return jellyfish_; }
  /// Classes sorted by (trace, size descending, signature).
  const std::vector<JellyClass>& classes() const { return classes_; }
  const ShapeCertificate& certificate() const { return certificate_; }

 private:
  friend SwarmGraph build_swarm(std::shared_ptr<const Field> F, std::uint64_t guard);

  std::shared_ptr<const Field> field_;
  std::vector<FieldElement> mu_values_;   // squares other than 1, index order
  std::vector<std::int32_t> mu_rank_;     // element index -> position in mu_values_
  std::vector<std::uint32_t> successor_;
  std::vector<std::uint32_t> component_;
  std::vector<std::uint8_t> on_cycle_;
  std::vector<std::uint8_t> in_degree_;
  std::vector<Jellyfish> jellyfish_;
  std::vector<JellyClass> classes_;
  ShapeCertificate certificate_;
};

/// (q - 3)(q - 1)/2.
std::uint64_t expected_vertex_count(std::uint64_t q);

/// Full swarm. Requires q = 3 mod 4, q >= 7, and vertex count <= guard.
SwarmGraph build_swarm(std::shared_ptr<const Field> F, std::uint64_t guard = kDefaultVertexGuard);

/// The jellyfish containing seed, without materializing the swarm.
Jellyfish jellyfish_of_seed(const std::shared_ptr<const Field>& F, AgmPair seed);

/// Admissible predecessors of a pair (at most two).
std::vector<AgmPair> predecessors(const Field& F, AgmPair pair);

struct ClassSummary {
  std::optional<std::int64_t> trace;
  std::size_t size = 0;
  std::size_t multiplicity = 0;
  std::uint64_t signature_hash = 0;
  FieldElement sample_lambda;
};

struct SwarmSummary {
  std::uint64_t q = 0, p = 0, r = 0;
  std::uint64_t vertex_count = 0;
  std::uint64_t d = 0;
  std::vector<std::uint64_t> sizes;  // ascending
  std::uint64_t min_size = 0, max_size = 0;
  std::vector<ClassSummary> classes;
  std::map<std::int64_t, std::uint64_t> vertices_per_trace;
};

SwarmSummary summarize(const SwarmGraph& graph);

/// Graphviz text; nodes labelled "(a,b)", one edge per vertex to its successor.
std::string export_dot(const SwarmGraph& graph);
std::string export_dot(const Field& F, const Jellyfish& J);

}  // namespace agmswarm::swarm
