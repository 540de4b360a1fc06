#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agmswarm {

/// Description of F_q = F_p[x]/(modulus), q = p^r.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  /// Monic, degree r, constant term first. For r = 1 this is x (residues mod p).
  std::vector<std::uint32_t> modulus;
  std::uint64_t q = 0;

  bool operator==(const FieldSpec&) const = default;
};

/// Largest q accepted; q^2 must fit comfortably in 64 bits.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;

/// Deterministic field description: the lexicographically smallest monic
/// irreducible of degree r (coefficients compared constant term first).
FieldSpec make_field(std::uint64_t p, unsigned r);

/// Whether the monic polynomial (constant term first) is irreducible mod p.
bool is_irreducible(std::span<const std::uint32_t> monic_poly, std::uint32_t p);

/// An element of F_q, stored as its canonical index.
///
/// The index is the coefficient vector (c0, ..., c_{r-1}) read as base-p
/// digits with c0 most significant, so index order is lexicographic order on
/// coefficient vectors. For r = 1 the index is the residue itself.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  auto operator<=>(const FieldElement&) const = default;

 private:
  std::uint32_t index_ = 0;
};

/// Arithmetic context for one field. Immutable after construction.
class Field {
 public:
  explicit Field(FieldSpec spec);

  static std::shared_ptr<const Field> create(std::uint64_t p, unsigned r);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t q() const { return spec_.q; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t r() const { return spec_.r; }
  bool is_3_mod_4() const { return spec_.q % 4 == 3; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return one_; }
  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t n) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;
  /// Element with the given canonical index (throws if out of range).
  FieldElement element(std::uint64_t index) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement sqr(FieldElement a) const { return mul(a, a); }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// phi_q(x) in {-1, 0, +1}.
  int quad_char(FieldElement x) const;
  /// x^((q+1)/4); requires q = 3 mod 4 and quad_char(x) != -1.
  FieldElement sqrt_principal(FieldElement x) const;
  /// Least n >= 1 with x^n = 1.
  std::uint64_t mult_order(FieldElement x) const;
  /// First element in index order with multiplicative order q - 1.
  FieldElement generator() const { return generator_; }
  /// Discrete log base generator(); x must be nonzero.
  std::uint64_t dlog(FieldElement x) const;

  std::string render(FieldElement x) const;
  FieldElement parse(std::string_view text) const;

  /// phi_q indexed by element index, when lookup tables are built.
  std::span<const std::int8_t> quad_char_table() const { return phi_; }
  bool has_tables() const { return !log_.empty(); }

  const std::vector<std::pair<std::uint64_t, int>>& group_order_factors() const {
    return order_factors_;
  }

 private:
  FieldElement mul_poly(FieldElement a, FieldElement b) const;
  FieldElement pow_slow(FieldElement a, std::uint64_t e) const;
  FieldElement find_generator_slow() const;
  void build_tables();

  FieldSpec spec_;
  FieldElement one_;
  std::vector<std::uint32_t> place_;  // p^(r-1-i)
  std::vector<std::pair<std::uint64_t, int>> order_factors_;
  FieldElement generator_;
  std::vector<std::uint32_t> exp_;  // g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;  // inverse of exp_, entry 0 unused
  std::vector<std::int8_t> phi_;
};

/// Free-function spellings of the core field operations.
inline int quad_char(const Field& F, FieldElement x) { return F.quad_char(x); }
inline FieldElement sqrt_principal(const Field& F, FieldElement x) { return F.sqrt_principal(x); }
inline FieldElement find_generator(const Field& F) { return F.generator(); }
inline std::uint64_t mult_order(const Field& F, FieldElement x) { return F.mult_order(x); }

}  // namespace agmswarm
