#include <algorithm>

#include "hermitian/poly.hpp"

namespace hq {

namespace {

// Gaussian elimination on a square matrix of residues.
uint64_t determinant(const Field& f, std::vector<std::vector<uint64_t>> a) {
  const size_t n = a.size();
  uint64_t det = f.one().rep();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = f.neg(det);
    }
    det = f.mul(det, a[col][col]);
    const uint64_t inv = f.inv(a[col][col]);
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const uint64_t factor = f.mul(a[r][col], inv);
      for (size_t c = col; c < n; ++c)
        if (a[col][c]) a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
    }
  }
  return det;
}

// Sylvester determinant for formal degrees (n, m); leading entries may be zero.
uint64_t sylvester_numeric(const Field& f, const std::vector<uint64_t>& fc, size_t n,
                           const std::vector<uint64_t>& gc, size_t m) {
  const size_t dim = n + m;
  if (dim == 0) return f.one().rep();
  auto at = [](const std::vector<uint64_t>& c, size_t i) { return i < c.size() ? c[i] : uint64_t{0}; };
  std::vector<std::vector<uint64_t>> mat(dim, std::vector<uint64_t>(dim, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k <= n; ++k) mat[i][i + k] = at(fc, n - k);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k <= m; ++k) mat[m + i][i + k] = at(gc, m - k);
  return determinant(f, std::move(mat));
}

class Resultant {
 public:
  Resultant(const Field& f, Var var) : f_(f), var_(var) {}

  // Res_{n,m}(a, b): Sylvester determinant with formal degrees n >= deg a, m >= deg b.
  Poly run(const Poly& a, const Poly& b, uint32_t n, uint32_t m) {
    if (n == 0) return a.pow(m);
    if (m == 0) return b.pow(n);
    const auto ac = a.coefficients_in(var_);
    const auto bc = b.coefficients_in(var_);
    auto lead_const = [](const std::vector<Poly>& c, uint32_t d) {
      return c.size() == size_t(d) + 1 && c[d].is_constant() && !c[d].is_zero();
    };
    if (lead_const(ac, n) && m >= n) return reduce(a, ac, n, b, m, false);
    if (lead_const(bc, m) && n >= m) return reduce(b, bc, m, a, n, (uint64_t(n) * m) % 2 == 1);

    std::optional<Var> other;
    for (size_t i = 0; i < kNumVars; ++i) {
      const Var w = Var(i);
      if (w != var_ && (a.uses(w) || b.uses(w))) {
        other = w;
        break;
      }
    }
    if (!other) {
      std::vector<uint64_t> ar(n + 1, 0), br(m + 1, 0);
      for (size_t k = 0; k < ac.size(); ++k) ar[k] = ac[k].constant_term().rep();
      for (size_t k = 0; k < bc.size(); ++k) br[k] = bc[k].constant_term().rep();
      return Poly::constant(f_.from_index(sylvester_numeric(f_, ar, n, br, m)));
    }
    return interpolate(a, b, n, m, *other);
  }

 private:
  // Res_{n,m}(p, g) with lc(p) a nonzero constant equals
  // lc(p)^{m - dr} Res_{n,dr}(p, g mod p); `swap` adds the (-1)^{nm} of
  // exchanging the operands back.
  Poly reduce(const Poly& p, const std::vector<Poly>& pc, uint32_t n, const Poly& g, uint32_t m, bool swap) {
    std::vector<Poly> r = g.coefficients_in(var_);
    const FieldElement lc_inv = pc[n].constant_term().inverse();
    for (size_t k = r.size(); k-- > n;) {
      if (r[k].is_zero()) continue;
      const Poly factor = r[k] * lc_inv;
      for (size_t i = 0; i <= n; ++i)
        if (!pc[i].is_zero()) r[k - n + i] -= factor * pc[i];
    }
    if (r.size() > n) r.resize(n);
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    Poly out(f_);
    if (r.empty()) return out;
    const uint32_t dr = static_cast<uint32_t>(r.size() - 1);
    const Poly rem = Poly::from_coefficients_in(f_, var_, r);
    out = Poly::constant(pc[n].constant_term().pow(m - dr)) * run(p, rem, n, dr);
    return swap ? -out : out;
  }

  Poly interpolate(const Poly& a, const Poly& b, uint32_t n, uint32_t m, Var w) {
    const u128 bound = u128(n) * b.degree(w) + u128(m) * a.degree(w);
    if (bound + 1 > f_.order()) raise(ErrorCode::FieldTooSmall, "not enough interpolation points");
    const size_t npts = static_cast<size_t>(bound) + 1;
    std::vector<FieldElement> xs;
    std::vector<Poly> coef;
    xs.reserve(npts);
    coef.reserve(npts);
    for (size_t i = 0; i < npts; ++i) {
      xs.push_back(f_.from_index(i));
      coef.push_back(run(a.substitute(w, xs[i]), b.substitute(w, xs[i]), n, m));
    }
    // Newton divided differences.
    for (size_t j = 1; j < npts; ++j)
      for (size_t i = npts - 1; i >= j; --i)
        coef[i] = (coef[i] - coef[i - 1]) * (xs[i] - xs[i - j]).inverse();
    const Poly wv = Poly::variable(f_, w);
    Poly acc = coef[npts - 1];
    for (size_t k = npts - 1; k-- > 0;) acc = acc * (wv - Poly::constant(xs[k])) + coef[k];
    return acc;
  }

  const Field& f_;
  Var var_;
};

}  // namespace

Poly resultant(const Poly& f, const Poly& g, Var var, const ResultantOptions& opts) {
  if (&f.field() != &g.field()) raise(ErrorCode::FieldMismatch, "resultant operands over different fields");
  if (f.is_zero() || g.is_zero()) raise(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
  const uint32_t n = f.degree(var), m = g.degree(var);
  if (n == 0 || m == 0)
    raise(ErrorCode::DegreeZeroInVar, std::string("operand has degree zero in ") + var_name(var));
  const uint64_t dim = uint64_t(n) + m;
  if (opts.max_sylvester_dim_sq != 0 && dim * dim > opts.max_sylvester_dim_sq)
    raise(ErrorCode::ScaleExceeded, "Sylvester matrix of dimension " + std::to_string(dim) + " exceeds the budget");
  return Resultant(f.field(), var).run(f, g, n, m);
}

FieldElement sylvester_determinant(const Poly& f, const Poly& g, Var var) {
  const Field& fd = f.field();
  if (&fd != &g.field()) raise(ErrorCode::FieldMismatch, "resultant operands over different fields");
  const UPoly a = f.to_upoly(var), b = g.to_upoly(var);
  if (a.is_zero() || b.is_zero()) raise(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
  return fd.from_index(sylvester_numeric(fd, a.reps(), static_cast<size_t>(a.degree()), b.reps(),
                                         static_cast<size_t>(b.degree())));
}

}  // namespace hq
