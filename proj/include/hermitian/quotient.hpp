#pragma once

// Plane models of quotient curves by elimination: for w = V1 / V2 fixed by a
// subgroup H, eliminate x between the curve and V1 - v V2, then eliminate y
// against the relation num(y) - t den(y) coming from t_y.

#include "hermitian/curve.hpp"
#include "hermitian/group.hpp"
#include "hermitian/poly.hpp"
#include "hermitian/report.hpp"

namespace hq {

struct FixedFunction {
  std::string name;
  Poly v1, v2;
  std::vector<Mat3> subgroup;  // over the same field as v1, v2
};

// w = x with H = Psi; w = y with H = Lambda; w = x^{q+1} with H = <Psi, Lambda>.
FixedFunction fixed_x(const Field& ambient);
FixedFunction fixed_y(const Field& ambient);
FixedFunction fixed_norm(const Field& ambient);

struct FixedCheckOptions {
  uint64_t n_points = 100;  // 0 sweeps every point of the ambient field
  uint64_t seed = 42;
  bool symbolic = false;    // q <= 3
};

VerificationReport fixed_function_check(const FixedFunction& w, const FixedCheckOptions& opts = {});

// Res_x(y^q + y - x^{q+1}, V1 - v V2), content in v removed.
Poly eliminate_x(const FixedFunction& w);

// Res_y(g, t_relation) under a Sylvester budget.
Poly eliminate_y(const Poly& g, const Poly& t_relation, uint64_t max_sylvester_dim_sq = 10000);

// num(y) - t den(y) from the reduced t_y, over f.
Poly t_relation(const Field& f);

struct QuotientConfig {
  uint32_t p = 2;
  uint32_t h = 1;
  uint32_t m = 0;  // 0 picks 10h
  uint64_t n_points = 100;
  uint64_t seed = 42;
  uint64_t max_sylvester_dim_sq = 10000;
};

// Eliminants for w = x and w = x^{q+1} against their closed forms, pointwise
// soundness of every eliminant, and the plane model F(t, v) for w = x^{q+1}
// when it fits the budget.
VerificationReport quotient_eliminate(const QuotientConfig& cfg);

}  // namespace hq
