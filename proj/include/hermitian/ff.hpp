#pragma once

// Exact arithmetic in F_{p^m} = F_p[T]/(modulus).
//
// Elements are stored as their residue index: the coefficient vector
// (c_0, ..., c_{m-1}) packed as the integer sum c_i p^i. For p = 2 this is
// simply the bit vector of coefficients. Fields are interned for the life of
// the process, so a FieldElement can hold a plain pointer to its field and
// field identity is pointer identity.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hermitian/errors.hpp"
#include "hermitian/rng.hpp"

namespace hq {

std::string to_string(u128 v);

class Field;

class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const;
  bool has_field() const noexcept { return field_ != nullptr; }
  uint64_t rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_ == 0; }
  bool is_one() const noexcept { return rep_ == 1; }

  // Coefficients of the residue representative, low degree first, length m.
  std::vector<uint32_t> coeffs() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement pow(u128 e) const;
  FieldElement inverse() const;
  // a^{q^k} with q = p^h of the owning field.
  FieldElement frob_q(uint64_t k) const;

  bool operator==(const FieldElement& o) const noexcept {
    return field_ == o.field_ && rep_ == o.rep_;
  }
  // Canonical order: by residue index (fields must match for a meaningful order).
  std::strong_ordering operator<=>(const FieldElement& o) const noexcept { return rep_ <=> o.rep_; }

  // Text encoding: the decimal residue index.
  std::string to_string() const;

 private:
  friend class Field;
  FieldElement(const Field* f, uint64_t rep) : field_(f), rep_(rep) {}
  const Field* check_same(const FieldElement& o) const;

  const Field* field_ = nullptr;
  uint64_t rep_ = 0;
};

// Solutions of an affine F_p-linear system, kept in reduced form so that
// repeated right-hand sides are cheap.
class FpLinearSystem {
 public:
  FpLinearSystem() = default;
  // columns[j] is the image of the j-th basis vector, as a length-n vector.
  FpLinearSystem(uint32_t p, std::vector<std::vector<uint32_t>> columns);

  // One solution of L(y) = c, or empty if inconsistent.
  bool solve(std::span<const uint32_t> c, std::vector<uint32_t>& out) const;
  const std::vector<std::vector<uint32_t>>& kernel_basis() const { return kernel_; }

 private:
  uint32_t p_ = 0;
  size_t n_ = 0;
  size_t rank_ = 0;
  std::vector<std::vector<uint32_t>> transform_;  // E with E*L = R (RREF)
  std::vector<std::vector<uint32_t>> rref_;
  std::vector<size_t> pivot_col_;
  std::vector<std::vector<uint32_t>> kernel_;
};

class Field {
 public:
  // Fields up to this order get log/antilog tables.
  static constexpr uint64_t kTableLimit = uint64_t{1} << 20;

  // Interned field with the least irreducible modulus (see least_irreducible).
  static const Field& get(uint32_t p, uint32_t h, uint32_t m);
  // Interned field with a caller-chosen monic irreducible modulus
  // (coefficients low to high, length m + 1).
  static const Field& with_modulus(uint32_t p, uint32_t h, std::vector<uint32_t> modulus);

  // Least monic irreducible of degree m over F_p, comparing coefficient
  // vectors as base-p integers (sum c_i p^i).
  static std::vector<uint32_t> least_irreducible(uint32_t p, uint32_t m);
  static bool is_irreducible(uint32_t p, std::span<const uint32_t> monic);
  static bool is_prime(uint64_t n);

  uint32_t p() const noexcept { return p_; }
  uint32_t h() const noexcept { return h_; }
  uint32_t m() const noexcept { return m_; }
  uint64_t q() const noexcept { return q_; }
  u128 order() const noexcept { return order_; }
  const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }
  bool contains_fq2() const noexcept { return m_ % (2 * h_) == 0; }
  bool has_tables() const noexcept { return !exp_.empty(); }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, m_ == 0 ? 0u : 1u}; }
  FieldElement from_int(int64_t v) const;
  FieldElement from_index(uint64_t index) const;
  FieldElement from_coeffs(std::span<const uint32_t> coeffs) const;
  // The residue class of T.
  FieldElement generator() const;
  FieldElement random(Rng& rng) const { return from_index(uniform_below(rng, order_)); }
  // All elements in index order; ScaleExceeded above kTableLimit.
  std::vector<FieldElement> elements() const;

  bool in_subfield(const FieldElement& a, uint32_t d) const;
  FieldElement frob_q(const FieldElement& a, uint64_t k) const;
  FieldElement norm_tilde(const FieldElement& a) const;
  // All y with y^q + y = c, sorted by index; empty or exactly q elements.
  std::vector<FieldElement> solve_affine_q(const FieldElement& c) const;
  // The elements of F_{p^d} inside this field, sorted by index.
  std::vector<FieldElement> subfield_elements(uint32_t d) const;

  // Raw residue arithmetic.
  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;
  uint64_t pow(uint64_t a, u128 e) const;
  // a^{p^j}
  uint64_t frob_p(uint64_t a, uint64_t j) const;
  std::vector<uint32_t> digits(uint64_t a) const;
  uint64_t encode(std::span<const uint32_t> digits) const;

  std::string describe() const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(uint32_t p, uint32_t h, std::vector<uint32_t> modulus);
  uint64_t mul_generic(uint64_t a, uint64_t b) const;
  void build_tables();
  FpLinearSystem linear_map(uint64_t (*map)(const Field&, uint64_t, uint64_t), uint64_t arg) const;
  std::vector<FieldElement> span_of(const std::vector<std::vector<uint32_t>>& basis,
                                    uint64_t offset) const;

  uint32_t p_;
  uint32_t h_;
  uint32_t m_;
  uint64_t q_;
  u128 order_;
  std::vector<uint32_t> modulus_;
  uint64_t mod_low_bits_ = 0;  // p = 2: modulus without the leading term
  std::vector<uint32_t> exp_;
  std::vector<uint32_t> log_;
  std::unique_ptr<FpLinearSystem> affine_q_;  // y -> y^q + y, when 2h | m

  friend class FieldElement;
};

}  // namespace hq
