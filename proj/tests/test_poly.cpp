#include <doctest.h>

#include <functional>

#include "hermitian/poly.hpp"

using namespace hq;

namespace {

const Field& F4() { return Field::get(2, 1, 2); }

Poly X(const Field& f) { return Poly::variable(f, Var::x); }
Poly Y(const Field& f) { return Poly::variable(f, Var::y); }
Poly V(const Field& f) { return Poly::variable(f, Var::v); }
Poly C(const FieldElement& c) { return Poly::constant(c); }

u128 ipow(u128 b, unsigned e) {
  u128 r = 1;
  while (e--) r *= b;
  return r;
}

// Leibniz expansion; exponential but independent of the elimination code.
FieldElement leibniz(const Field& f, const std::vector<std::vector<FieldElement>>& a) {
  const size_t n = a.size();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  FieldElement total = f.zero();
  do {
    size_t inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    FieldElement term = f.one();
    for (size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

FieldElement leibniz_resultant(const UPoly& a, const UPoly& b) {
  const Field& f = a.field();
  const size_t n = a.degree(), m = b.degree(), dim = n + m;
  std::vector<std::vector<FieldElement>> mat(dim, std::vector<FieldElement>(dim, f.zero()));
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k <= n; ++k) mat[i][i + k] = a.coeff(n - k);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k <= m; ++k) mat[m + i][i + k] = b.coeff(m - k);
  return leibniz(f, mat);
}

UPoly random_upoly(const Field& f, Rng& rng, size_t deg) {
  std::vector<uint64_t> r(deg + 1);
  for (auto& c : r) c = f.random(rng).rep();
  if (r.back() == 0) r.back() = 1;
  return UPoly(f, r);
}

Poly random_poly(const Field& f, Rng& rng, uint32_t dx, uint32_t dy, int terms) {
  std::vector<Poly::Term> t;
  for (int i = 0; i < terms; ++i)
    t.push_back({{uint32_t(uniform_below(rng, dx + 1)), uint32_t(uniform_below(rng, dy + 1)), 0, 0},
                 f.random(rng).rep()});
  return Poly::from_terms(f, t);
}

}  // namespace

TEST_CASE("gcd_uni") {
  for (auto [p, h] : {std::pair{2u, 1u}, {3u, 1u}}) {
    const Field& f = Field::get(p, h, 2 * h);
    const uint64_t q = f.q();
    const UPoly x = UPoly::variable(f);
    const UPoly xq = x.pow(q) - x;
    const UPoly xq2 = x.pow(q * q) - x;
    CHECK(gcd_uni(xq, xq2) == xq);
    CHECK(gcd_uni(xq * f.from_int(2 % p == 0 ? 1 : 2), UPoly(f)) == xq);
  }
  const Field& f = F4();
  const UPoly x = UPoly::variable(f);
  const UPoly a = (x.pow(4) - x).pow(3), b = (x.pow(2) - x).pow(5);
  CHECK(gcd_uni(a, b) == (x.pow(2) - x).pow(3));
  CHECK(gcd_uni(UPoly(f), UPoly(f)).is_zero());
}

TEST_CASE("univariate division identity") {
  Rng rng(2);
  const Field& f = Field::get(3, 1, 4);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_upoly(f, rng, uniform_below(rng, 30));
    const auto b = random_upoly(f, rng, uniform_below(rng, 10));
    const auto [qq, r] = UPoly::divrem(a, b);
    CHECK(qq * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(UPoly::divrem(UPoly::variable(f), UPoly(f)), Error);
}

TEST_CASE("Karatsuba agrees with schoolbook") {
  Rng rng(9);
  for (const Field* f : {&Field::get(2, 1, 8), &Field::get(3, 1, 6)}) {
    for (auto [na, nb] : {std::pair{100, 100}, {257, 40}, {33, 300}, {64, 65}, {500, 1}}) {
      std::vector<uint64_t> a(na), b(nb);
      for (auto& c : a) c = f->random(rng).rep();
      for (auto& c : b) c = f->random(rng).rep();
      a.back() = b.back() = 1;
      std::vector<uint64_t> naive(na + nb - 1, 0);
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) naive[i + j] = f->add(naive[i + j], f->mul(a[i], b[j]));
      CHECK(dense_mul(*f, a, b) == naive);
    }
  }
}

TEST_CASE("frobenius and pow of polynomials") {
  Rng rng(4);
  const Field& f = Field::get(3, 1, 4);
  const auto a = random_upoly(f, rng, 5);
  UPoly slow = UPoly::constant(f.one());
  for (int i = 0; i < 10; ++i) slow = slow * a;
  CHECK(a.pow(10) == slow);
  CHECK(a.frobenius(1) == a * a * a);
  const Poly p = random_poly(f, rng, 4, 3, 6);
  CHECK(p.pow(9) == p.frobenius(2));
  CHECK(p.pow(5) == p * p * p * p * p);
}

TEST_CASE("sparse polynomial basics and text form") {
  const Field& f = F4();
  const auto w = f.generator();
  const Poly p = C(w) * X(f).pow(2) * Y(f) + Y(f) + C(f.one());
  CHECK(p.to_string() == "2*x^2*y + 1*y + 1");
  CHECK(Poly(f).to_string() == "0");
  CHECK(p.degree(Var::x) == 2);
  CHECK(p.total_degree() == 3);
  CHECK((p - p).is_zero());
  CHECK(p.substitute(Var::y, X(f)) == C(w) * X(f).pow(3) + X(f) + C(f.one()));
  CHECK(p.eval_xy(f.one(), f.one()) == w + f.one() + f.one());
  const auto cs = p.coefficients_in(Var::y);
  REQUIRE(cs.size() == 2);
  CHECK(Poly::from_coefficients_in(f, Var::y, cs) == p);
  const Field& big = Field::get(2, 1, 6);
  CHECK((X(f) + C(f.one())).change_field(big) == X(big) + C(big.one()));
  CHECK_THROWS_AS(p.change_field(big), Error);
}

TEST_CASE("curve reduction matches the Frobenius reductions") {
  for (auto [p, h] : {std::pair{2u, 1u}, {3u, 1u}}) {
    const Field& f = Field::get(p, h, 2 * h);
    const uint64_t q = f.q();
    const Poly x = X(f), y = Y(f);
    auto xp = [&](u128 e) { return Poly::monomial_xy(f.one(), uint32_t(e), 0); };
    CHECK(reduce_mod_curve(y.pow(q)) == xp(q + 1) - y);
    CHECK(reduce_mod_curve(y.pow(q * q)) == y - xp(q + 1) + xp(q * q + q));
    Poly expect = y;
    for (unsigned k = 0; k < 6; ++k) {
      const Poly term = xp(ipow(q, k + 1) + ipow(q, k));
      expect = k % 2 == 0 ? expect - term : expect + term;
    }
    CHECK(reduce_mod_curve(y.pow(ipow(q, 6))) == expect);
    CHECK(reduce_mod_curve(y.pow(q) + y - x.pow(q + 1)).is_zero());
  }
}

TEST_CASE("curve reduction is multiplicative and idempotent") {
  Rng rng(21);
  for (const Field* f : {&Field::get(2, 1, 2), &Field::get(3, 1, 2), &Field::get(2, 2, 4)}) {
    for (int i = 0; i < 50; ++i) {
      const Poly a = random_poly(*f, rng, 12, 9, 8), b = random_poly(*f, rng, 7, 11, 8);
      const Poly ra = reduce_mod_curve(a), rb = reduce_mod_curve(b);
      CHECK(ra.degree(Var::y) < f->q());
      CHECK(reduce_mod_curve(ra) == ra);
      CHECK(reduce_mod_curve(a * b) == reduce_mod_curve(ra * rb));
      const auto prod = CurveResidue::from_poly(a) * CurveResidue::from_poly(b);
      CHECK(prod.to_poly() == reduce_mod_curve(a * b));
      CHECK(CurveResidue::from_poly(a).frobenius_q().to_poly() == reduce_mod_curve(a.pow(f->q())));
    }
  }
}

TEST_CASE("adding a multiple of the curve leaves the reduction unchanged") {
  Rng rng(8);
  const Field& f = Field::get(2, 1, 6);
  const Poly curve = Y(f).pow(2) + Y(f) - X(f).pow(3);
  for (int i = 0; i < 20; ++i) {
    const Poly a = random_poly(f, rng, 6, 4, 5), g = random_poly(f, rng, 3, 3, 4);
    CHECK(reduce_mod_curve(a + curve * g) == reduce_mod_curve(a));
  }
}

TEST_CASE("numeric resultant against Leibniz oracle") {
  Rng rng(13);
  for (const Field* f : {&Field::get(2, 1, 4), &Field::get(3, 1, 2), &Field::get(5, 1, 1)}) {
    for (int i = 0; i < 40; ++i) {
      const size_t n = 1 + uniform_below(rng, 4), m = 1 + uniform_below(rng, 4);
      const auto a = random_upoly(*f, rng, n), b = random_upoly(*f, rng, m);
      const auto pa = Poly::from_upoly(a, Var::x), pb = Poly::from_upoly(b, Var::x);
      const auto expect = leibniz_resultant(a, b);
      CHECK(sylvester_determinant(pa, pb, Var::x) == expect);
      CHECK(resultant(pa, pb, Var::x) == C(expect));
      const Poly swapped = resultant(pb, pa, Var::x);
      CHECK(((n * m) % 2 ? -swapped : swapped) == C(expect));
    }
  }
}

TEST_CASE("resultant simple cases") {
  const Field& f = Field::get(3, 1, 2);
  const auto a = f.from_index(4), b = f.from_index(7);
  CHECK(resultant(X(f) - C(a), X(f) - C(b), Var::x) == C(a - b));
  const Poly common = X(f) - C(a);
  CHECK(resultant(common * (X(f) + Y(f)), common * X(f).pow(2), Var::x).is_zero());
  CHECK_THROWS_AS(resultant(Poly(f), X(f), Var::x), Error);
  CHECK_THROWS_AS(resultant(Y(f), X(f), Var::x), Error);
  ResultantOptions tight;
  tight.max_sylvester_dim_sq = 4;
  CHECK_THROWS_AS(resultant(X(f).pow(2), X(f) + C(a), Var::x, tight), Error);
}

TEST_CASE("Res_x(y^q+y-x^{q+1}, x^{q+1}-v)") {
  for (auto [p, h] : {std::pair{2u, 1u}, {3u, 1u}}) {
    const Field& f = Field::get(p, h, 2 * h);
    const uint64_t q = f.q();
    const Poly curve = Y(f).pow(q) + Y(f) - X(f).pow(q + 1);
    const Poly r = resultant(curve, X(f).pow(q + 1) - V(f), Var::x);
    const Poly target = (Y(f).pow(q) + Y(f) - V(f)).pow(q + 1);
    CHECK((r == target || r == -target));
  }
}

TEST_CASE("symbolic resultant specializes to numeric resultant") {
  Rng rng(17);
  const Field& f = Field::get(2, 1, 6);
  for (int i = 0; i < 15; ++i) {
    const Poly a = random_poly(f, rng, 3, 3, 6) + X(f).pow(3) * Y(f);
    const Poly b = random_poly(f, rng, 2, 2, 5) + X(f).pow(2) + Y(f).pow(2) * X(f);
    const Poly r = resultant(a, b, Var::x);
    for (int k = 0; k < 10; ++k) {
      const auto y0 = f.random(rng);
      const Poly sa = a.substitute(Var::y, y0), sb = b.substitute(Var::y, y0);
      if (sa.degree(Var::x) != a.degree(Var::x) || sb.degree(Var::x) != b.degree(Var::x)) continue;
      CHECK(r.substitute(Var::y, y0) == C(sylvester_determinant(sa, sb, Var::x)));
    }
  }
}

TEST_CASE("resultant vanishes exactly at shared roots over F_4") {
  // Coefficients in F_4; interpolation needs the larger ambient F_16.
  Rng rng(23);
  const Field& f = Field::get(2, 1, 4);
  const auto sub = f.subfield_elements(2);
  auto rnd = [&](uint32_t dx, uint32_t dy, int terms) {
    std::vector<Poly::Term> t;
    for (int i = 0; i < terms; ++i)
      t.push_back({{uint32_t(uniform_below(rng, dx + 1)), uint32_t(uniform_below(rng, dy + 1)), 0, 0},
                   sub[uniform_below(rng, sub.size())].rep()});
    return Poly::from_terms(f, t);
  };
  int shared_count = 0;
  for (int i = 0; i < 40; ++i) {
    const Poly a = X(f).pow(2) + rnd(1, 2, 4);
    const Poly b = X(f).pow(2) * Y(f) + X(f).pow(2) + rnd(1, 2, 4);
    const Poly r = resultant(a, b, Var::x);
    for (const auto& y0 : sub) {
      const Poly sa = a.substitute(Var::y, y0), sb = b.substitute(Var::y, y0);
      if (sb.degree(Var::x) != 2) continue;
      const bool shared = gcd_uni(sa.to_upoly(Var::x), sb.to_upoly(Var::x)).degree() > 0;
      shared_count += shared;
      CHECK((r.substitute(Var::y, y0).is_zero() == shared));
    }
  }
  CHECK(shared_count > 0);
}

TEST_CASE("rational functions") {
  const Field& f = F4();
  const UPoly x = UPoly::variable(f);
  const auto xx = ratfun_reduce(x, x);
  CHECK(xx.degree == 0);
  CHECK(xx.fraction.num == UPoly::constant(f.one()));
  CHECK_THROWS_AS(ratfun_reduce(x, UPoly(f)), Error);

  for (auto [p, h] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const Field& g = Field::get(p, h, 4 * h);
    const uint64_t q = g.q();
    const UPoly t = UPoly::variable(g);
    const UPoly num = (t.pow(q * q) - t).pow(q + 1), den = (t.pow(q) - t).pow(q * q + 1);
    const auto r = ratfun_reduce(num, den);
    CHECK(r.degree == q * q * q - q);
    CHECK(r.fraction.den.lead() == g.one());
    for (const auto& a : g.elements()) {
      const auto raw = EvalOutcome::fraction(num.eval(a), den.eval(a));
      if (g.in_subfield(a, h)) {
        CHECK(raw.kind == EvalOutcome::Kind::Indeterminate);
      } else if (g.in_subfield(a, 2 * h)) {
        CHECK(raw == EvalOutcome::of(g.zero()));
      }
      if (raw.is_value()) CHECK(r.fraction.eval(a) == raw);
    }
  }
  const UPoly inv_den = x - UPoly::constant(f.generator());
  RationalFunction rf{UPoly::constant(f.one()), inv_den, Var::x};
  CHECK(rf.eval(f.generator()).kind == EvalOutcome::Kind::Pole);
}

TEST_CASE("outcome products") {
  const Field& f = F4();
  const auto one = EvalOutcome::of(f.one()), zero = EvalOutcome::of(f.zero());
  const auto pole = EvalOutcome::pole(), ind = EvalOutcome::indeterminate();
  CHECK((one * one) == one);
  CHECK((pole * one) == pole);
  CHECK((pole * pole) == pole);
  CHECK((pole * zero) == ind);
  CHECK((ind * one) == ind);
  CHECK((zero * ind) == ind);
  CHECK(pole.pow(3) == pole);
}
