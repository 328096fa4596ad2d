#include "hermitian/invariants.hpp"

#include <map>

namespace hq {

TExponents TExponents::of(uint64_t q) {
  const u128 Q = q;
  TExponents e;
  e.first_num = Q * Q * Q * Q - Q * Q * Q + Q * Q - Q + 1;
  e.first_den = Q * Q - Q + 1;
  e.sixth = (Q * Q * Q * Q * Q * Q - 1) / (Q + 1);
  e.fourth = (Q * Q * Q * Q - 1) / (Q + 1);
  return e;
}

// ---------------------------------------------------------------------------
// Pointwise

FieldElement dickson_det(const FieldElement& x, const FieldElement& y, uint32_t e2, uint32_t e3) {
  const FieldElement b = x.frob_q(e2), c = x.frob_q(e3);
  const FieldElement e = y.frob_q(e2), f = y.frob_q(e3);
  return x * (e - f) - b * (y - f) + c * (y - e);
}

namespace {

void require_on_curve(const FieldElement& x, const FieldElement& y) {
  if (!on_curve_affine(x, y)) raise(ErrorCode::NotOnCurve, "point is not on the curve");
}

EvalOutcome t_from(const FieldElement& x, const FieldElement& y, const FieldElement& d1, const FieldElement& e1) {
  const uint64_t q = x.field().q();
  const FieldElement a = y + y.frob_q(5) - x.frob_q(5) * x;
  const FieldElement b = y + y.frob_q(3) - x.frob_q(3) * x;
  return EvalOutcome::fraction(a, b) * EvalOutcome::fraction(d1, e1).pow(q);
}

EvalOutcome u_from(const FieldElement& d1, const FieldElement& d2, const FieldElement& e1) {
  return EvalOutcome::fraction(d1.frob_q(2) * d1, e1.frob_q(2) * d2);
}

}  // namespace

EvalOutcome eval_t(const FieldElement& x, const FieldElement& y) {
  require_on_curve(x, y);
  return t_from(x, y, dickson_det(x, y, 2, 6), dickson_det(x, y, 4, 6));
}

EvalOutcome eval_u(const FieldElement& x, const FieldElement& y) {
  require_on_curve(x, y);
  return u_from(dickson_det(x, y, 2, 6), dickson_det(x, y, 2, 4), dickson_det(x, y, 4, 6));
}

EvalOutcome eval_t_x(const FieldElement& xi) {
  const uint64_t q = xi.field().q();
  const TExponents ex = TExponents::of(q);
  const FieldElement xt = xi.frob_q(1) * xi;
  FieldElement xtq[6];
  xtq[0] = xt;
  for (int k = 1; k < 6; ++k) xtq[k] = xtq[k - 1].frob_q(1);
  FieldElement xq[7];
  xq[0] = xi;
  for (int k = 1; k < 7; ++k) xq[k] = xq[k - 1].frob_q(1);
  const FieldElement a = xtq[4] - xtq[3] + xtq[2] - xtq[1] + xt - xt.pow(ex.first_num);
  const FieldElement b = xtq[2] - xtq[1] + xt - xt.pow(ex.first_den);
  const FieldElement n1 = (xi - xq[2]) * (xtq[2] - xtq[3] + xtq[4] - xtq[5]) + (xq[6] - xq[2]) * (xt - xtq[1]);
  const FieldElement n2 = (xq[6] - xq[4]) * (xt - xtq[1] + xtq[2] - xtq[3]) + (xi - xq[4]) * (xtq[4] - xtq[5]);
  return EvalOutcome::fraction(a, b) * EvalOutcome::fraction(n1, n2).pow(q);
}

EvalOutcome eval_t_y(const FieldElement& eta) {
  const uint64_t q = eta.field().q();
  const TExponents ex = TExponents::of(q);
  const FieldElement s = eta.frob_q(1) + eta;
  const FieldElement y2 = eta.frob_q(2), y3 = eta.frob_q(3), y4 = eta.frob_q(4), y5 = eta.frob_q(5),
                     y6 = eta.frob_q(6);
  const FieldElement s6 = s.pow(ex.sixth);
  const FieldElement a = eta + y5 - s.pow(ex.first_num);
  const FieldElement b = eta + y3 - s.pow(ex.first_den);
  const FieldElement m1 = (eta - y2) * s6 + (y6 - eta) * s.pow(q - 1) + y2 - y6;
  const FieldElement m2 = (eta - y4) * s6 + (y6 - eta) * s.pow(ex.fourth) + y4 - y6;
  return EvalOutcome::fraction(a, b) * EvalOutcome::fraction(m1, m2).pow(q);
}

EvalOutcome eval_pgl2(const FieldElement& xi) {
  const uint64_t q = xi.field().q();
  const FieldElement num = (xi.frob_q(2) - xi).pow(u128(q) + 1);
  const FieldElement den = (xi.frob_q(1) - xi).pow(u128(q) * q + 1);
  return EvalOutcome::fraction(num, den);
}

TValues eval_all(const FieldElement& x, const FieldElement& y) {
  require_on_curve(x, y);
  const FieldElement d1 = dickson_det(x, y, 2, 6), d2 = dickson_det(x, y, 2, 4), e1 = dickson_det(x, y, 4, 6);
  return {t_from(x, y, d1, e1), u_from(d1, d2, e1), eval_t_x(x), eval_t_y(y)};
}

// ---------------------------------------------------------------------------
// Symbolic

namespace {

template <class T>
struct FieldCache {
  std::mutex mu;
  std::map<const Field*, T> entries;

  template <class Build>
  const T& get(const Field& f, Build build) {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = entries.find(&f);
      if (it != entries.end()) return it->second;
    }
    T value = build();
    std::lock_guard<std::mutex> lock(mu);
    return entries.emplace(&f, std::move(value)).first->second;
  }
};

// p^{h k}, i.e. q^k, as the number of p-Frobenius steps.
uint64_t steps(const Field& f, uint32_t k) { return uint64_t(f.h()) * k; }

TxParts build_tx(const Field& f) {
  const TExponents ex = TExponents::of(f.q());
  const UPoly x = UPoly::variable(f);
  const UPoly xt = x.pow(f.q() + 1);
  UPoly xtq[6], xq[7];
  xtq[0] = xt;
  xq[0] = x;
  for (int k = 1; k < 6; ++k) xtq[k] = xtq[k - 1].frobenius(steps(f, 1));
  for (int k = 1; k < 7; ++k) xq[k] = xq[k - 1].frobenius(steps(f, 1));
  TxParts p;
  p.a = xtq[4] - xtq[3] + xtq[2] - xtq[1] + xt - xt.pow(ex.first_num);
  p.b = xtq[2] - xtq[1] + xt - xt.pow(ex.first_den);
  p.n1 = (x - xq[2]) * (xtq[2] - xtq[3] + xtq[4] - xtq[5]) + (xq[6] - xq[2]) * (xt - xtq[1]);
  p.n2 = (xq[6] - xq[4]) * (xt - xtq[1] + xtq[2] - xtq[3]) + (x - xq[4]) * (xtq[4] - xtq[5]);
  return p;
}

TyParts build_ty(const Field& f) {
  const uint64_t q = f.q();
  const TExponents ex = TExponents::of(q);
  const UPoly y = UPoly::variable(f);
  UPoly yq[7];
  yq[0] = y;
  for (int k = 1; k < 7; ++k) yq[k] = yq[k - 1].frobenius(steps(f, 1));
  const UPoly s = yq[1] + y;
  const UPoly s6 = s.pow(ex.sixth);
  TyParts p;
  p.a = y + yq[5] - s.pow(ex.first_num);
  p.b = y + yq[3] - s.pow(ex.first_den);
  p.m1 = (y - yq[2]) * s6 + (yq[6] - y) * s.pow(q - 1) + yq[2] - yq[6];
  p.m2 = (y - yq[4]) * s6 + (yq[6] - y) * s.pow(ex.fourth) + yq[4] - yq[6];
  return p;
}

FieldCache<TxParts>& tx_cache() {
  static FieldCache<TxParts> c;
  return c;
}
FieldCache<TyParts>& ty_cache() {
  static FieldCache<TyParts> c;
  return c;
}
FieldCache<ReducedFraction>& txr_cache() {
  static FieldCache<ReducedFraction> c;
  return c;
}
FieldCache<ReducedFraction>& tyr_cache() {
  static FieldCache<ReducedFraction> c;
  return c;
}

void require_fq2(const Field& f) {
  if (!f.contains_fq2()) raise(ErrorCode::FieldTooSmall, "field does not contain F_{q^2}");
}

}  // namespace

const TxParts& tx_parts(const Field& f) {
  return tx_cache().get(f, [&] { return build_tx(f); });
}

const TyParts& ty_parts(const Field& f) {
  return ty_cache().get(f, [&] { return build_ty(f); });
}

TParts t_parts(const Field& f) {
  const uint64_t q = f.q();
  auto xp = [&](u128 e) { return Poly::monomial_xy(f.one(), static_cast<uint32_t>(e), 0); };
  auto yp = [&](u128 e) { return Poly::monomial_xy(f.one(), 0, static_cast<uint32_t>(e)); };
  auto qk = [&](unsigned k) {
    u128 r = 1;
    for (unsigned i = 0; i < k; ++i) r *= q;
    return r;
  };
  if (qk(6) + qk(5) > UINT32_MAX) raise(ErrorCode::ScaleExceeded, "q too large for symbolic forms");
  const Poly x = xp(1), y = yp(1);
  auto det = [&](unsigned e2, unsigned e3) {
    const Poly b = xp(qk(e2)), c = xp(qk(e3)), e = yp(qk(e2)), g = yp(qk(e3));
    return x * (e - g) - b * (y - g) + c * (y - e);
  };
  TParts p;
  p.a = y + yp(qk(5)) - xp(qk(5) + 1);
  p.b = y + yp(qk(3)) - xp(qk(3) + 1);
  p.d1 = det(2, 6);
  p.d2 = det(2, 4);
  p.e1 = det(4, 6);
  return p;
}

std::pair<UPoly, UPoly> tx_fraction(const Field& f) {
  require_fq2(f);
  const TxParts& p = tx_parts(f);
  return {p.a * p.n1.frobenius(steps(f, 1)), p.b * p.n2.frobenius(steps(f, 1))};
}

std::pair<UPoly, UPoly> ty_fraction(const Field& f) {
  require_fq2(f);
  const TyParts& p = ty_parts(f);
  return {p.a * p.m1.frobenius(steps(f, 1)), p.b * p.m2.frobenius(steps(f, 1))};
}

std::pair<UPoly, UPoly> pgl2_fraction(const Field& f) {
  const uint64_t q = f.q();
  const UPoly x = UPoly::variable(f);
  return {(x.pow(u128(q) * q) - x).pow(q + 1), (x.pow(q) - x).pow(u128(q) * q + 1)};
}

const ReducedFraction& tx_reduced(const Field& f) {
  return txr_cache().get(f, [&] {
    auto [num, den] = tx_fraction(f);
    return ratfun_reduce(num, den, Var::x);
  });
}

const ReducedFraction& ty_reduced(const Field& f) {
  return tyr_cache().get(f, [&] {
    auto [num, den] = ty_fraction(f);
    return ratfun_reduce(num, den, Var::y);
  });
}

}  // namespace hq
