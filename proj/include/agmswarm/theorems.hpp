#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agmswarm/hilbert_class_poly.hpp"
#include "agmswarm/hurwitz.hpp"
#include "agmswarm/swarm.hpp"

// Verifiers tying swarm data to class numbers.
namespace agmswarm::theorems {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct PrimePower {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned r = 0;
};

/// Prime powers q = p^r in [qmin, qmax] with q = 3 mod 4, ascending. p = 3
/// is kept only when allow_p3 is set.
std::vector<PrimePower> prime_powers_3_mod_4(std::uint64_t qmin, std::uint64_t qmax, bool allow_p3);

/// q = 3 + 4 (sum_t H((4q - t^2)/4) [+ h(-q) when q = 7 mod 8]), exactly.
struct ClassNumberIdentityReport {
  std::uint64_t q = 0;
  bool seven_mod_8 = false;
  classes::HurwitzValue hurwitz_sum;  // includes h(-q) for the supersingular branch
  std::int64_t class_number_term = 0;
  std::int64_t class_number_p = 0;  // h(-p): count of supersingular j for q = p^r, r odd
  bool pass_with_h_p = false;
  std::vector<std::int64_t> traces;
  bool pass = false;
  std::string str() const;
};

ClassNumberIdentityReport verify_class_number_identity(std::uint64_t q, std::uint64_t p);

/// Discriminant of End(E_lambda): the candidate of order_decomposition(t, q)
/// whose Hilbert class polynomial vanishes at j(lambda). Throws
/// NoCandidateMatched when zero or several candidates match.
std::int64_t end_ring_disc(const Field& F, FieldElement lambda, std::int64_t t, classes::HcpCache& cache);

struct SizeLawRow {
  std::int64_t t = 0;
  std::int64_t D = 0;
  std::int64_t h = 0;
  std::int64_t h2 = 0;
  std::size_t size = 0;
  std::size_t m = 0;
  std::int64_t h2_star = 0;
  bool identified = false;  // D came from Hilbert class polynomial roots
  std::uint64_t signature_hash = 0;
  std::vector<Check> checks;
  bool pass() const;
};

struct SizeLawReport {
  std::uint64_t q = 0;
  /// Ordered by (t ascending, h descending, size descending).
  std::vector<SizeLawRow> rows;
  std::vector<Check> aggregate;
  std::vector<std::string> notes;
  bool pass() const;
  /// Columns t, h, h2, size, m.
  std::string table() const;
};

/// Requires p > 3.
SizeLawReport verify_size_law(const swarm::SwarmGraph& graph, classes::HcpCache& cache);

struct StructureReport {
  std::uint64_t q = 0;
  std::vector<Check> checks;
  bool pass() const;
};

/// Shape, vertex and label counts; for p > 3 also per-component constancy of
/// trace and group structure and realization of every admissible trace.
StructureReport verify_structure(const swarm::SwarmGraph& graph);

}  // namespace agmswarm::theorems
