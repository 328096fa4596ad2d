#pragma once

// Exact polynomials over a single ambient field.
//
//  * UPoly: dense univariate polynomials (gcd, division, evaluation).
//  * Poly: sparse polynomials in up to four named variables x, y, v, t.
//    The curve polynomials live in x and y; v and t are the fresh variables
//    introduced by elimination.
//  * CurveResidue: the canonical representative of a class in
//    F[x, y] / (y^q + y - x^{q+1}), stored as q dense rows in x.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermitian/ff.hpp"

namespace hq {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Field& f) : field_(&f) {}
  UPoly(const Field& f, std::vector<uint64_t> reps);

  static UPoly constant(const FieldElement& c);
  static UPoly monomial(const FieldElement& c, uint64_t degree);
  static UPoly variable(const Field& f) { return monomial(f.one(), 1); }

  const Field& field() const;
  int64_t degree() const noexcept { return static_cast<int64_t>(reps_.size()) - 1; }
  bool is_zero() const noexcept { return reps_.empty(); }
  FieldElement coeff(uint64_t i) const;
  FieldElement lead() const;
  const std::vector<uint64_t>& reps() const noexcept { return reps_; }

  UPoly monic() const;
  FieldElement eval(const FieldElement& at) const;
  // f^{p^j}: coefficients raised to p^j, exponents scaled by p^j.
  UPoly frobenius(uint64_t j) const;
  UPoly pow(u128 e) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const FieldElement& c) const;
  UPoly operator-() const;
  bool operator==(const UPoly& o) const { return field_ == o.field_ && reps_ == o.reps_; }

  // Euclidean division; throws ZeroPolynomial on a zero divisor.
  static std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  const Field* field_ = nullptr;
  std::vector<uint64_t> reps_;
};

// Monic gcd; gcd(f, 0) is f made monic and gcd(0, 0) is 0.
UPoly gcd_uni(const UPoly& f, const UPoly& g);

enum class Var : uint8_t { x = 0, y = 1, v = 2, t = 3 };
inline constexpr size_t kNumVars = 4;
char var_name(Var v) noexcept;

using Exponents = std::array<uint32_t, kNumVars>;

class Poly {
 public:
  struct Term {
    Exponents exps;
    uint64_t rep;
  };

  Poly() = default;
  explicit Poly(const Field& f) : field_(&f) {}

  static Poly constant(const FieldElement& c);
  static Poly variable(const Field& f, Var v);
  static Poly monomial(const FieldElement& c, Exponents exps);
  // c * x^i * y^j
  static Poly monomial_xy(const FieldElement& c, uint32_t i, uint32_t j) {
    return monomial(c, {i, j, 0, 0});
  }
  static Poly from_upoly(const UPoly& u, Var v);
  // Builds from arbitrary (possibly repeated or zero) terms.
  static Poly from_terms(const Field& f, std::vector<Term> terms);

  const Field& field() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  size_t num_terms() const noexcept { return terms_.size(); }
  // Terms in ascending lexicographic order of (x, y, v, t) exponents.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  uint32_t degree(Var v) const noexcept;
  uint32_t total_degree() const noexcept;
  bool uses(Var v) const noexcept { return degree(v) > 0; }
  FieldElement constant_term() const;

  // coefficients[k] is the coefficient of v^k (a polynomial free of v).
  std::vector<Poly> coefficients_in(Var v) const;
  static Poly from_coefficients_in(const Field& f, Var v, const std::vector<Poly>& coeffs);
  // Requires the polynomial to involve only v.
  UPoly to_upoly(Var v) const;

  Poly substitute(Var v, const FieldElement& value) const;
  Poly substitute(Var v, const Poly& value) const;
  FieldElement eval(const std::array<std::optional<FieldElement>, kNumVars>& at) const;
  FieldElement eval_xy(const FieldElement& x, const FieldElement& y) const;

  // f^{p^j}
  Poly frobenius(uint64_t j) const;
  Poly pow(u128 e) const;
  // Coefficients must lie in the prime field; re-homes them into `target`.
  Poly change_field(const Field& target) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElement& c) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;

  // Canonical text: terms in descending lexicographic exponent order,
  // joined by " + ", each written coeff*x^i*y^j (exponent 1 as bare name,
  // zero exponents omitted, constant term as its coefficient). "0" if zero.
  std::string to_string() const;

 private:
  const Field* field_ = nullptr;
  std::vector<Term> terms_;
};

// Canonical representative modulo y^q + y - x^{q+1} (q taken from the
// field), obtained by rewriting y^q -> x^{q+1} - y until deg_y < q.
Poly reduce_mod_curve(const Poly& f);

class CurveResidue {
 public:
  explicit CurveResidue(const Field& f);
  static CurveResidue from_poly(const Poly& f);

  Poly to_poly() const;
  const Field& field() const { return *field_; }
  bool is_zero() const noexcept;

  CurveResidue operator+(const CurveResidue& o) const;
  CurveResidue operator-(const CurveResidue& o) const;
  CurveResidue operator*(const CurveResidue& o) const;
  bool operator==(const CurveResidue& o) const;
  // The class of f^q.
  CurveResidue frobenius_q() const;

 private:
  // rows may have any length; on return rows.size() <= q.
  static void reduce_rows(const Field& f, std::vector<std::vector<uint64_t>>& rows);

  const Field* field_;
  std::vector<std::vector<uint64_t>> rows_;  // rows_[j] = coefficient of y^j, dense in x
};

// Dense product of coefficient vectors (Karatsuba above a size threshold).
std::vector<uint64_t> dense_mul(const Field& f, const std::vector<uint64_t>& a,
                                const std::vector<uint64_t>& b);

struct ResultantOptions {
  // Cap on (deg_var f + deg_var g)^2; 0 disables the cap.
  uint64_t max_sylvester_dim_sq = 0;
};

// Determinant of the Sylvester matrix of f and g with respect to `var`,
// rows of f first. Polynomial coefficients in the remaining variables are
// handled by evaluation and interpolation in the ambient field.
// Res(f, g) = (-1)^{deg f deg g} Res(g, f).
Poly resultant(const Poly& f, const Poly& g, Var var, const ResultantOptions& opts = {});
// Direct numeric Sylvester determinant; f and g must involve only `var`.
FieldElement sylvester_determinant(const Poly& f, const Poly& g, Var var);

struct EvalOutcome {
  enum class Kind { Value, Pole, Indeterminate };
  Kind kind = Kind::Indeterminate;
  std::optional<FieldElement> value;

  static EvalOutcome of(const FieldElement& v) { return {Kind::Value, v}; }
  static EvalOutcome pole() { return {Kind::Pole, std::nullopt}; }
  static EvalOutcome indeterminate() { return {Kind::Indeterminate, std::nullopt}; }
  // num / den with the tri-state rules (no local resolution of 0/0).
  static EvalOutcome fraction(const FieldElement& num, const FieldElement& den);

  bool is_value() const noexcept { return kind == Kind::Value; }
  EvalOutcome pow(u128 e) const;
  bool operator==(const EvalOutcome& o) const { return kind == o.kind && value == o.value; }
  std::string to_string() const;
};

// Product of outcomes: anything with Indeterminate, or Pole times zero, is
// Indeterminate; Pole times a nonzero value or a pole is a Pole.
EvalOutcome operator*(const EvalOutcome& a, const EvalOutcome& b);

struct RationalFunction {
  UPoly num;
  UPoly den;
  Var var = Var::x;

  uint64_t degree() const;
  EvalOutcome eval(const FieldElement& at) const;
};

struct ReducedFraction {
  RationalFunction fraction;
  uint64_t degree;
};

// Cancels gcd(num, den), makes den monic, reports max(deg num, deg den).
ReducedFraction ratfun_reduce(const UPoly& num, const UPoly& den, Var var = Var::x);

// num(x, y) / den(x, y) at an affine point.
EvalOutcome ratfun_eval(const Poly& num, const Poly& den, const FieldElement& x, const FieldElement& y);

}  // namespace hq
