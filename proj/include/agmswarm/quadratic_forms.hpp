#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Positive definite binary quadratic forms A x^2 + B xy + C y^2 and their
// class groups.
namespace agmswarm::classes {

struct QuadForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  /// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
  bool is_reduced() const;
  bool is_primitive() const;
  std::string str() const;

  auto operator<=>(const QuadForm&) const = default;
};

/// D < 0 and D = 0, 1 mod 4.
bool is_discriminant(std::int64_t D);
/// Fundamental discriminant test.
bool is_fundamental(std::int64_t D);

/// The reduced form equivalent to f. Requires a > 0, negative discriminant.
QuadForm reduce(QuadForm f);

/// Reduced primitive forms of discriminant D, sorted.
std::vector<QuadForm> reduced_forms(std::int64_t D);

/// All reduced forms of discriminant D, primitive or not, sorted.
std::vector<QuadForm> reduced_forms_all(std::int64_t D);

/// h(D): number of reduced primitive forms.
std::int64_t class_number(std::int64_t D);

/// Principal form of discriminant D.
QuadForm principal_form(std::int64_t D);

/// Dirichlet composition followed by reduction.
QuadForm compose(const QuadForm& f, const QuadForm& g);

/// (a, -b, c) reduced.
QuadForm inverse(const QuadForm& f);

/// Order of the class of f (f primitive).
std::int64_t form_order(const QuadForm& f);

/// (2, b, (b^2 - D)/8) with b the least odd positive with 8 | b^2 - D.
QuadForm prime_form_above_two(std::int64_t D);

/// Order of [p_2] in cl(D). Requires D = 1 mod 8.
std::int64_t h2(std::int64_t D);

/// Finite abelian group of reduced primitive forms.
class ClassGroup {
 public:
  explicit ClassGroup(std::int64_t D);

  std::int64_t discriminant() const { return D_; }
  std::int64_t order() const { return static_cast<std::int64_t>(forms_.size()); }
  const std::vector<QuadForm>& forms() const { return forms_; }
  const QuadForm& identity() const { return identity_; }

  /// Position of a reduced form in forms(), or -1.
  std::int64_t index_of(const QuadForm& f) const;

 private:
  std::int64_t D_;
  std::vector<QuadForm> forms_;
  QuadForm identity_;
};

}  // namespace agmswarm::classes
