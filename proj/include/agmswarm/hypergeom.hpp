#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "agmswarm/elliptic.hpp"
#include "agmswarm/finite_field.hpp"
#include "agmswarm/swarm.hpp"

// Multiplicative characters of F_q, Jacobi sums, Greene's binomial
// coefficients and 2F1, and the finite-field elliptic integral.
namespace agmswarm::hypergeom {

using Complex = std::complex<double>;

/// Largest q for which character tables are built.
inline constexpr std::uint64_t kMaxCharTableOrder = 1u << 16;

/// chi_j(g^k) = exp(2 pi i j k / (q - 1)); chi_j(0) = 0 for every j.
struct MultChar {
  std::uint64_t j = 0;
  bool operator==(const MultChar&) const = default;
};

class CharTable {
 public:
  explicit CharTable(std::shared_ptr<const Field> field);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::uint64_t group_order() const { return n_; }

  MultChar trivial() const { return {0}; }
  MultChar quadratic() const { return {n_ / 2}; }
  MultChar conj(MultChar c) const { return {(n_ - c.j) % n_}; }
  MultChar mul(MultChar a, MultChar b) const { return {(a.j + b.j) % n_}; }

  /// Discrete log of a nonzero element base field().generator().
  std::uint64_t dlog(FieldElement x) const { return dlog_[x.index()]; }
  /// exp(2 pi i k / (q - 1)).
  Complex root(std::uint64_t k) const { return roots_[k % n_]; }
  Complex value(MultChar c, FieldElement x) const;
  /// chi(-1) = (-1)^j.
  int sign_at_minus_one(MultChar c) const { return c.j % 2 == 0 ? 1 : -1; }

 private:
  friend Complex jacobi_sum(const CharTable&, MultChar, MultChar);

  std::shared_ptr<const Field> field_;
  std::uint64_t n_;
  std::vector<std::uint32_t> dlog_;           // by element index; entry 0 unused
  std::vector<std::uint32_t> one_minus_;      // index of 1 - x
  std::vector<Complex> roots_;
};

/// J(a, b) = sum_x a(x) b(1 - x).
Complex jacobi_sum(const CharTable& T, MultChar a, MultChar b);

/// (A | B) = B(-1)/q * J(A, conj B).
Complex greene_binom(const CharTable& T, MultChar A, MultChar B);

/// All (q - 1)^2 binomials of one table.
class BinomialCache {
 public:
  explicit BinomialCache(const CharTable& table);
  const CharTable& table() const { return table_; }
  Complex get(MultChar A, MultChar B) const { return values_[A.j * table_.group_order() + B.j]; }

 private:
  const CharTable& table_;
  std::vector<Complex> values_;
};

/// q/(q - 1) * sum_chi (A chi | chi)(B chi | C chi) chi(x).
Complex greene_2f1(const BinomialCache& cache, MultChar A, MultChar B, MultChar C, FieldElement x);
Complex greene_2f1(const CharTable& T, MultChar A, MultChar B, MultChar C, FieldElement x);

/// Default comparison tolerance 1e-6 sqrt(q).
double default_tolerance(std::uint64_t q);

struct Residual {
  bool pass = false;
  double residual = 0;
};

/// |a_lambda(q) + phi(-1) q 2F1(phi, phi; eps | lambda)| < tol, real and imaginary parts.
Residual trace_identity_check(const BinomialCache& cache, const elliptic::CharacterSums& sums,
                              FieldElement lambda, double tol);

struct IffValue {
  FieldElement value;
  /// sum_x phi(x) phi(x - 1) phi(x - (1 - b^2/a^2)).
  std::int64_t S = 0;
};

/// (2a)^-1 * S in F_q.
IffValue I_ff(const elliptic::CharacterSums& sums, FieldElement a, FieldElement b);

struct InvarianceResult {
  bool pass = true;
  /// Whether S alone is constant along the iterates.
  bool s_invariant = true;
  std::size_t steps = 0;
  std::vector<swarm::AgmPair> iterates;
};

/// I_ff equal across seed and its first n AGM iterates.
InvarianceResult invariance_check(const elliptic::CharacterSums& sums, swarm::AgmPair seed, std::size_t steps);

/// S(a, b) against phi(-1) q 2F1(phi, phi; eps | 1 - b^2/a^2).
Residual integral_consistency_check(const BinomialCache& cache, const elliptic::CharacterSums& sums, FieldElement a,
                               FieldElement b, double tol);

struct SweepStat {
  std::size_t checked = 0;
  std::size_t failed = 0;
  double worst = 0;
  bool pass() const { return failed == 0; }
};

struct HyperSuiteReport {
  std::uint64_t q = 0;
  SweepStat trace_identity;   // every lambda not in {0, 1}
  SweepStat integral;             // every admissible pair
  SweepStat invariance;       // every swarm edge, exact field equality
  SweepStat s_invariance;     // every swarm edge, integer S
  bool pass() const { return trace_identity.pass() && integral.pass() && invariance.pass(); }
};

/// Full sweeps at one field; invariance uses every edge of the swarm.
HyperSuiteReport run_hyper_suite(std::shared_ptr<const Field> field, double tol);

}  // namespace agmswarm::hypergeom
