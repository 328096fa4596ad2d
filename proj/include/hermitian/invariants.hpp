#pragma once

// The invariant t of PGU(3, q) and its relatives.
//
// Notation (all over the affine curve y^q + y = x^{q+1}):
//   A   = y + y^{q^5} - x^{q^5+1}        B   = y + y^{q^3} - x^{q^3+1}
//   D1  = det[(x,y,1), (x^{q^2},y^{q^2},1), (x^{q^6},y^{q^6},1)]   (columns)
//   D2  = same with twists (2, 4),        E1  = same with twists (4, 6)
//   t   = (A / B) (D1 / E1)^q             u   = D1^{q^2+1} / (E1^{q^2} D2)
// t_x and t_y are the single-variable forms of t, with xt = x^{q+1} and
// S = y^q + y:
//   t_x = (Ax / Bx) (N1 / N2)^q           t_y = (Ay / By) (M1 / M2)^q
// The PGL(2, q) invariant is (x^{q^2} - x)^{q+1} / (x^q - x)^{q^2+1}.

#include <mutex>

#include "hermitian/curve.hpp"
#include "hermitian/group.hpp"
#include "hermitian/poly.hpp"
#include "hermitian/report.hpp"

namespace hq {

// Integral exponents of the single-variable forms.
struct TExponents {
  u128 first_num;   // q^4 - q^3 + q^2 - q + 1
  u128 first_den;   // q^2 - q + 1
  u128 sixth;       // (q^6 - 1) / (q + 1)
  u128 fourth;      // (q^4 - 1) / (q + 1)
  static TExponents of(uint64_t q);
};

// ---------------------------------------------------------------------------
// Pointwise evaluation. Arguments live in a field containing F_{q^2}.

// det of the columns (x,y,1), (x^{q^e2}, y^{q^e2}, 1), (x^{q^e3}, y^{q^e3}, 1).
FieldElement dickson_det(const FieldElement& x, const FieldElement& y, uint32_t e2, uint32_t e3);

// NotOnCurve unless (x, y) is on the curve.
EvalOutcome eval_t(const FieldElement& x, const FieldElement& y);
EvalOutcome eval_u(const FieldElement& x, const FieldElement& y);
EvalOutcome eval_t_x(const FieldElement& xi);
EvalOutcome eval_t_y(const FieldElement& eta);
EvalOutcome eval_pgl2(const FieldElement& xi);

struct TValues {
  EvalOutcome t, u, tx, ty;
};
TValues eval_all(const FieldElement& x, const FieldElement& y);

// ---------------------------------------------------------------------------
// Symbolic forms. Coefficients are in F_p, so they are built directly over
// whatever field is passed in (it must have the right p and h).

struct TxParts {
  UPoly a, b, n1, n2;  // in x
};
struct TyParts {
  UPoly a, b, m1, m2;  // in y
};
struct TParts {
  Poly a, b, d1, d2, e1;  // in x, y (not reduced)
};

const TxParts& tx_parts(const Field& f);
const TyParts& ty_parts(const Field& f);
TParts t_parts(const Field& f);

// num / den of t_x, t_y and the PGL(2, q) invariant, before cancellation.
std::pair<UPoly, UPoly> tx_fraction(const Field& f);
std::pair<UPoly, UPoly> ty_fraction(const Field& f);
std::pair<UPoly, UPoly> pgl2_fraction(const Field& f);

// Memoized reduced fractions.
const ReducedFraction& tx_reduced(const Field& f);
const ReducedFraction& ty_reduced(const Field& f);

// ---------------------------------------------------------------------------
// Checks

struct InvarianceConfig {
  uint32_t p = 2;
  uint32_t h = 1;
  uint32_t m = 0;  // 0 picks 8h
  uint64_t n_points = 1000;
  uint64_t n_elements = 100;
  uint32_t word_length = 8;
  uint64_t seed = 42;
  unsigned threads = 1;
  // Use only the identity as group element.
  bool identity_only = false;
};

VerificationReport verify_invariance(const InvarianceConfig& cfg);

// D_m = (x^{q^2} - x)(-y^q + x^{q^m+q} - y^{q^m}) modulo the curve.
VerificationReport symbolic_dm_identity(uint32_t p, uint32_t h, uint32_t m);

// Checks (i) t^q = u, (ii) t = t_x(x), (iii) t = t_y(y) as cross-multiplied
// congruences modulo the curve. `which` selects a subset ("i", "ii", "iii").
VerificationReport symbolic_consistency(uint32_t p, uint32_t h, const std::vector<std::string>& which = {});

VerificationReport degree_census(uint32_t p, uint32_t h);

// Roots of the reduced numerators of t_x and t_y over F_{q^6}, compared with
// the coordinates of the points of Delta.
VerificationReport zero_locus(uint32_t p, uint32_t h, unsigned threads = 1);

// All q^3 - q fractional linear maps over F_q, n_args random arguments each
// over F_{q^4}.
VerificationReport pgl2_invariance(uint32_t p, uint32_t h, uint64_t n_args, uint64_t seed);

// Canonical invertible 2x2 matrices over F_q (first nonzero entry 1), as (a, b, c, d).
std::vector<std::array<FieldElement, 4>> pgl2_elements(const Field& ambient);

}  // namespace hq
