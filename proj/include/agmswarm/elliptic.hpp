#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "agmswarm/finite_field.hpp"

// Legendre curves E_lambda: y^2 = x(x - 1)(x - lambda) over F_q.
namespace agmswarm::elliptic {

inline constexpr std::uint64_t kDefaultBruteGuard = 1'000'000;

struct GroupShape {
  /// E(F_q) = Z/m x Z/n with m | n.
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  bool operator==(const GroupShape&) const = default;
};

/// Cached character tables for repeated sums over one field.
///
/// Holds phi(x) and phi(x - 1) in element-index order so that
///   S(c) = sum_x phi(x) phi(x - 1) phi(x - c)
/// runs through the vectorized sign-product kernel.
class CharacterSums {
 public:
  explicit CharacterSums(std::shared_ptr<const Field> field);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }

  /// sum_x phi(x) phi(x - 1) phi(x - c).
  std::int64_t product_sum(FieldElement c) const;

  /// a_lambda(q) = -sum_x phi(x(x - 1)(x - lambda)).
  std::int64_t trace(FieldElement lambda) const;

 private:
  std::shared_ptr<const Field> field_;
  std::vector<std::int8_t> phi_;
  std::vector<std::int8_t> phi_minus_one_;
};

/// a_lambda(q) by the character sum. Requires p >= 5, lambda not in {0, 1}.
std::int64_t trace_char_sum(const std::shared_ptr<const Field>& F, FieldElement lambda);

/// #E(F_q) counted point by point (independent of the sign-product kernel).
std::uint64_t point_count_brute(const Field& F, FieldElement lambda,
                                std::uint64_t guard = kDefaultBruteGuard);

/// Group structure by enumerating points and taking the exponent.
GroupShape group_structure(const Field& F, FieldElement lambda,
                           std::uint64_t guard = kDefaultBruteGuard);

/// 2^8 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2).
FieldElement j_invariant(const Field& F, FieldElement lambda);

/// Distinct values among lambda, 1/lambda, 1 - lambda, 1/(1 - lambda),
/// lambda/(lambda - 1), (lambda - 1)/lambda, sorted by index.
std::vector<FieldElement> lambda_orbit(const Field& F, FieldElement lambda);

/// Number of square lambda (not 0, 1) whose curve has trace t and invariant j.
std::uint64_t count_lambdas(const CharacterSums& sums, std::int64_t t, FieldElement j,
                            std::uint64_t guard = kDefaultBruteGuard);

/// j-invariant of the image of the 2-isogeny with kernel <(0, 0)>.
FieldElement two_isogeny_image_j(const Field& F, FieldElement lambda);

/// |t| <= 2 sqrt(q).
bool within_hasse_bound(std::int64_t t, std::uint64_t q);

/// Throws unless p >= 5 and lambda is not 0 or 1.
void require_curve_domain(const Field& F, FieldElement lambda);

}  // namespace agmswarm::elliptic
