#include "hermitian/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hq {

namespace {

constexpr size_t kKaratsubaThreshold = 32;
constexpr u128 kMaxDenseLength = u128(1) << 28;

const Field& same_field(const Field* a, const Field* b) {
  if (!a || a != b) raise(ErrorCode::FieldMismatch, "polynomials over different fields");
  return *a;
}

void trim_reps(std::vector<uint64_t>& r) {
  while (!r.empty() && r.back() == 0) r.pop_back();
}

void add_into(const Field& f, std::vector<uint64_t>& acc, const std::vector<uint64_t>& b, size_t shift = 0) {
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i]) acc[i + shift] = f.add(acc[i + shift], b[i]);
}

void sub_into(const Field& f, std::vector<uint64_t>& acc, const std::vector<uint64_t>& b, size_t shift = 0) {
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i]) acc[i + shift] = f.sub(acc[i + shift], b[i]);
}

void schoolbook(const Field& f, const uint64_t* a, size_t na, const uint64_t* b, size_t nb, uint64_t* out) {
  for (size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < nb; ++j) {
      if (b[j] == 0) continue;
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
}

std::vector<uint64_t> karatsuba(const Field& f, const uint64_t* a, size_t na, const uint64_t* b, size_t nb) {
  std::vector<uint64_t> out(na + nb - 1, 0);
  if (std::min(na, nb) < kKaratsubaThreshold) {
    schoolbook(f, a, na, b, nb, out.data());
    return out;
  }
  const size_t k = std::max(na, nb) / 2;
  if (nb <= k || na <= k) {
    // Unbalanced: split only the longer operand.
    const bool a_long = na > nb;
    const uint64_t* L = a_long ? a : b;
    const size_t nl = a_long ? na : nb;
    const uint64_t* S = a_long ? b : a;
    const size_t ns = a_long ? nb : na;
    for (size_t off = 0; off < nl; off += ns) {
      const size_t len = std::min(ns, nl - off);
      auto part = karatsuba(f, L + off, len, S, ns);
      for (size_t i = 0; i < part.size(); ++i)
        if (part[i]) out[off + i] = f.add(out[off + i], part[i]);
    }
    return out;
  }
  auto z0 = karatsuba(f, a, k, b, k);
  auto z2 = karatsuba(f, a + k, na - k, b + k, nb - k);
  std::vector<uint64_t> sa(std::max(k, na - k), 0), sb(std::max(k, nb - k), 0);
  for (size_t i = 0; i < k; ++i) sa[i] = a[i];
  for (size_t i = k; i < na; ++i) sa[i - k] = f.add(sa[i - k], a[i]);
  for (size_t i = 0; i < k; ++i) sb[i] = b[i];
  for (size_t i = k; i < nb; ++i) sb[i - k] = f.add(sb[i - k], b[i]);
  auto z1 = karatsuba(f, sa.data(), sa.size(), sb.data(), sb.size());
  sub_into(f, z1, z0);
  sub_into(f, z1, z2);
  for (size_t i = 0; i < z0.size(); ++i) out[i] = f.add(out[i], z0[i]);
  for (size_t i = 0; i < z1.size(); ++i)
    if (z1[i]) out[i + k] = f.add(out[i + k], z1[i]);
  for (size_t i = 0; i < z2.size(); ++i)
    if (z2[i]) out[i + 2 * k] = f.add(out[i + 2 * k], z2[i]);
  return out;
}

uint32_t checked_exp(u128 e) {
  if (e > std::numeric_limits<uint32_t>::max()) raise(ErrorCode::ScaleExceeded, "exponent overflow");
  return static_cast<uint32_t>(e);
}

void write_coeff_term(std::ostringstream& os, uint64_t rep, const std::vector<std::pair<char, uint64_t>>& powers) {
  os << rep;
  for (const auto& [name, e] : powers) {
    if (e == 0) continue;
    os << '*' << name;
    if (e != 1) os << '^' << e;
  }
}

}  // namespace

std::vector<uint64_t> dense_mul(const Field& f, const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  if (a.empty() || b.empty()) return {};
  auto out = karatsuba(f, a.data(), a.size(), b.data(), b.size());
  trim_reps(out);
  return out;
}

char var_name(Var v) noexcept {
  switch (v) {
    case Var::x: return 'x';
    case Var::y: return 'y';
    case Var::v: return 'v';
    case Var::t: return 't';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(const Field& f, std::vector<uint64_t> reps) : field_(&f), reps_(std::move(reps)) { trim(); }

void UPoly::trim() { trim_reps(reps_); }

UPoly UPoly::constant(const FieldElement& c) { return UPoly(c.field(), {c.rep()}); }

UPoly UPoly::monomial(const FieldElement& c, uint64_t degree) {
  if (u128(degree) >= kMaxDenseLength) raise(ErrorCode::ScaleExceeded, "polynomial degree too large");
  std::vector<uint64_t> r(degree + 1, 0);
  r[degree] = c.rep();
  return UPoly(c.field(), std::move(r));
}

const Field& UPoly::field() const {
  if (!field_) raise(ErrorCode::FieldMismatch, "polynomial has no field");
  return *field_;
}

FieldElement UPoly::coeff(uint64_t i) const {
  return field().from_index(i < reps_.size() ? reps_[i] : 0);
}

FieldElement UPoly::lead() const {
  if (reps_.empty()) raise(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return field().from_index(reps_.back());
}

UPoly UPoly::monic() const {
  if (reps_.empty()) return *this;
  return *this * lead().inverse();
}

FieldElement UPoly::eval(const FieldElement& at) const {
  const Field& f = same_field(field_, &at.field());
  uint64_t acc = 0;
  for (size_t i = reps_.size(); i-- > 0;) acc = f.add(f.mul(acc, at.rep()), reps_[i]);
  return f.from_index(acc);
}

UPoly UPoly::frobenius(uint64_t j) const {
  const Field& f = field();
  if (reps_.empty()) return *this;
  u128 s = 1;
  for (uint64_t i = 0; i < j; ++i) s *= f.p();
  if (u128(reps_.size() - 1) * s + 1 > kMaxDenseLength) raise(ErrorCode::ScaleExceeded, "Frobenius power too large");
  std::vector<uint64_t> r(static_cast<size_t>((reps_.size() - 1) * s + 1), 0);
  for (size_t i = 0; i < reps_.size(); ++i)
    if (reps_[i]) r[static_cast<size_t>(i * s)] = f.frob_p(reps_[i], j);
  return UPoly(f, std::move(r));
}

UPoly UPoly::pow(u128 e) const {
  const Field& f = field();
  UPoly result = constant(f.one());
  UPoly cur = *this;
  // f^e = prod_k (f^{p^k})^{d_k} over the base-p digits d_k of e.
  while (e != 0) {
    const uint64_t d = static_cast<uint64_t>(e % f.p());
    for (uint64_t i = 0; i < d; ++i) result = result * cur;
    e /= f.p();
    if (e != 0) cur = cur.frobenius(1);
  }
  return result;
}

UPoly UPoly::operator+(const UPoly& o) const {
  const Field& f = same_field(field_, o.field_);
  std::vector<uint64_t> r = reps_;
  add_into(f, r, o.reps_);
  return UPoly(f, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  const Field& f = same_field(field_, o.field_);
  std::vector<uint64_t> r = reps_;
  sub_into(f, r, o.reps_);
  return UPoly(f, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  const Field& f = same_field(field_, o.field_);
  return UPoly(f, dense_mul(f, reps_, o.reps_));
}

UPoly UPoly::operator*(const FieldElement& c) const {
  const Field& f = same_field(field_, &c.field());
  std::vector<uint64_t> r(reps_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = f.mul(reps_[i], c.rep());
  return UPoly(f, std::move(r));
}

UPoly UPoly::operator-() const {
  const Field& f = field();
  std::vector<uint64_t> r(reps_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = f.neg(reps_[i]);
  return UPoly(f, std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& a, const UPoly& b) {
  const Field& f = same_field(a.field_, b.field_);
  if (b.is_zero()) raise(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(f), a};
  std::vector<uint64_t> rem = a.reps_;
  const size_t db = b.reps_.size() - 1;
  std::vector<uint64_t> quot(rem.size() - db, 0);
  const uint64_t lc_inv = f.inv(b.reps_.back());
  for (size_t k = rem.size(); k-- > db;) {
    const uint64_t c = rem[k];
    if (c == 0) continue;
    const uint64_t qc = f.mul(c, lc_inv);
    quot[k - db] = qc;
    for (size_t i = 0; i <= db; ++i)
      if (b.reps_[i]) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(qc, b.reps_[i]));
  }
  rem.resize(db);
  return {UPoly(f, std::move(quot)), UPoly(f, std::move(rem))};
}

std::string UPoly::to_string(char var) const {
  if (reps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = reps_.size(); i-- > 0;) {
    if (reps_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    write_coeff_term(os, reps_[i], {{var, i}});
  }
  return os.str();
}

UPoly gcd_uni(const UPoly& f, const UPoly& g) {
  UPoly a = f, b = g;
  while (!b.is_zero()) {
    UPoly r = UPoly::divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(const FieldElement& c) { return monomial(c, {0, 0, 0, 0}); }

Poly Poly::variable(const Field& f, Var v) {
  Exponents e{0, 0, 0, 0};
  e[static_cast<size_t>(v)] = 1;
  return monomial(f.one(), e);
}

Poly Poly::monomial(const FieldElement& c, Exponents exps) {
  Poly p(c.field());
  if (!c.is_zero()) p.terms_.push_back({exps, c.rep()});
  return p;
}

Poly Poly::from_upoly(const UPoly& u, Var v) {
  Poly p(u.field());
  const auto& r = u.reps();
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    Exponents e{0, 0, 0, 0};
    e[static_cast<size_t>(v)] = checked_exp(i);
    p.terms_.push_back({e, r[i]});
  }
  std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
  return p;
}

Poly Poly::from_terms(const Field& f, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
  Poly p(f);
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().rep = f.add(p.terms_.back().rep, t.rep);
    } else {
      if (!p.terms_.empty() && p.terms_.back().rep == 0) p.terms_.pop_back();
      p.terms_.push_back(t);
    }
  }
  if (!p.terms_.empty() && p.terms_.back().rep == 0) p.terms_.pop_back();
  return p;
}

const Field& Poly::field() const {
  if (!field_) raise(ErrorCode::FieldMismatch, "polynomial has no field");
  return *field_;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponents{0, 0, 0, 0});
}

uint32_t Poly::degree(Var v) const noexcept {
  uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.exps[static_cast<size_t>(v)]);
  return d;
}

uint32_t Poly::total_degree() const noexcept {
  uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.exps[0] + t.exps[1] + t.exps[2] + t.exps[3]);
  return d;
}

FieldElement Poly::constant_term() const {
  if (!terms_.empty() && terms_[0].exps == Exponents{0, 0, 0, 0}) return field().from_index(terms_[0].rep);
  return field().zero();
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  const Field& f = field();
  const size_t vi = static_cast<size_t>(v);
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const Term& t : terms_) {
    Term c = t;
    c.exps[vi] = 0;
    buckets[t.exps[vi]].push_back(c);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(f, std::move(b)));
  if (terms_.empty()) out.assign(1, Poly(f));
  return out;
}

Poly Poly::from_coefficients_in(const Field& f, Var v, const std::vector<Poly>& coeffs) {
  const size_t vi = static_cast<size_t>(v);
  std::vector<Term> terms;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    same_field(&f, &coeffs[k].field());
    for (Term t : coeffs[k].terms_) {
      if (t.exps[vi] != 0) raise(ErrorCode::InvalidArgument, "coefficient depends on the main variable");
      t.exps[vi] = checked_exp(k);
      terms.push_back(t);
    }
  }
  return from_terms(f, std::move(terms));
}

UPoly Poly::to_upoly(Var v) const {
  const Field& f = field();
  const size_t vi = static_cast<size_t>(v);
  std::vector<uint64_t> reps(terms_.empty() ? 0 : degree(v) + 1, 0);
  for (const Term& t : terms_) {
    for (size_t i = 0; i < kNumVars; ++i)
      if (i != vi && t.exps[i] != 0) raise(ErrorCode::InvalidArgument, "polynomial is not univariate");
    reps[t.exps[vi]] = t.rep;
  }
  return UPoly(f, std::move(reps));
}

Poly Poly::substitute(Var v, const FieldElement& value) const {
  const Field& f = same_field(field_, &value.field());
  const size_t vi = static_cast<size_t>(v);
  std::vector<uint64_t> powers{1};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term t : terms_) {
    const uint32_t e = t.exps[vi];
    while (powers.size() <= e) powers.push_back(f.mul(powers.back(), value.rep()));
    t.rep = f.mul(t.rep, powers[e]);
    t.exps[vi] = 0;
    if (t.rep) out.push_back(t);
  }
  return from_terms(f, std::move(out));
}

Poly Poly::substitute(Var v, const Poly& value) const {
  const Field& f = same_field(field_, value.field_);
  const auto coeffs = coefficients_in(v);
  Poly acc(f);
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * value + coeffs[k];
  return acc;
}

FieldElement Poly::eval(const std::array<std::optional<FieldElement>, kNumVars>& at) const {
  const Field& f = field();
  uint64_t acc = 0;
  for (const Term& t : terms_) {
    uint64_t term = t.rep;
    for (size_t i = 0; i < kNumVars; ++i) {
      if (t.exps[i] == 0) continue;
      if (!at[i]) raise(ErrorCode::InvalidArgument, std::string("variable ") + var_name(Var(i)) + " not assigned");
      same_field(field_, &at[i]->field());
      term = f.mul(term, f.pow(at[i]->rep(), t.exps[i]));
    }
    acc = f.add(acc, term);
  }
  return f.from_index(acc);
}

FieldElement Poly::eval_xy(const FieldElement& x, const FieldElement& y) const {
  return eval({x, y, std::nullopt, std::nullopt});
}

Poly Poly::frobenius(uint64_t j) const {
  const Field& f = field();
  u128 s = 1;
  for (uint64_t i = 0; i < j; ++i) s *= f.p();
  Poly p(f);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term n;
    for (size_t i = 0; i < kNumVars; ++i) n.exps[i] = checked_exp(u128(t.exps[i]) * s);
    n.rep = f.frob_p(t.rep, j);
    p.terms_.push_back(n);
  }
  return p;
}

Poly Poly::pow(u128 e) const {
  const Field& f = field();
  Poly result = constant(f.one());
  Poly cur = *this;
  while (e != 0) {
    const uint64_t d = static_cast<uint64_t>(e % f.p());
    for (uint64_t i = 0; i < d; ++i) result = result * cur;
    e /= f.p();
    if (e != 0) cur = cur.frobenius(1);
  }
  return result;
}

Poly Poly::change_field(const Field& target) const {
  const Field& f = field();
  if (f.p() != target.p()) raise(ErrorCode::FieldMismatch, "characteristics differ");
  Poly p(target);
  p.terms_ = terms_;
  for (const Term& t : terms_)
    if (t.rep >= f.p()) raise(ErrorCode::FieldMismatch, "coefficient outside the prime field");
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  const Field& f = same_field(field_, o.field_);
  Poly p(f);
  p.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exps < o.terms_[j].exps)) {
      p.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].exps < terms_[i].exps) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      const uint64_t r = f.add(terms_[i].rep, o.terms_[j].rep);
      if (r) p.terms_.push_back({terms_[i].exps, r});
      ++i;
      ++j;
    }
  }
  return p;
}

Poly Poly::operator-() const {
  const Field& f = field();
  Poly p = *this;
  for (Term& t : p.terms_) t.rep = f.neg(t.rep);
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  const Field& f = same_field(field_, o.field_);
  if (terms_.empty() || o.terms_.empty()) return Poly(f);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      Term t;
      for (size_t i = 0; i < kNumVars; ++i) t.exps[i] = checked_exp(u128(a.exps[i]) + b.exps[i]);
      t.rep = f.mul(a.rep, b.rep);
      prod.push_back(t);
    }
  }
  return from_terms(f, std::move(prod));
}

Poly Poly::operator*(const FieldElement& c) const {
  const Field& f = same_field(field_, &c.field());
  if (c.is_zero()) return Poly(f);
  Poly p = *this;
  for (Term& t : p.terms_) t.rep = f.mul(t.rep, c.rep());
  return p;
}

bool Poly::operator==(const Poly& o) const {
  if (field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != o.terms_[i].exps || terms_[i].rep != o.terms_[i].rep) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (size_t k = terms_.size(); k-- > 0;) {
    const Term& t = terms_[k];
    if (k + 1 != terms_.size()) os << " + ";
    write_coeff_term(os, t.rep,
                     {{'x', t.exps[0]}, {'y', t.exps[1]}, {'v', t.exps[2]}, {'t', t.exps[3]}});
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Curve reduction

CurveResidue::CurveResidue(const Field& f) : field_(&f), rows_(f.q()) {}

void CurveResidue::reduce_rows(const Field& f, std::vector<std::vector<uint64_t>>& rows) {
  const uint64_t q = f.q();
  // y^j = y^{j-q} (x^{q+1} - y) for j >= q
  for (size_t j = rows.size(); j-- > q;) {
    std::vector<uint64_t> row = std::move(rows[j]);
    rows[j].clear();
    trim_reps(row);
    if (row.empty()) continue;
    add_into(f, rows[j - q], row, q + 1);
    sub_into(f, rows[j - q + 1], row);
  }
  rows.resize(q);
  for (auto& r : rows) trim_reps(r);
}

CurveResidue CurveResidue::from_poly(const Poly& p) {
  const Field& f = p.field();
  if (p.uses(Var::v) || p.uses(Var::t)) raise(ErrorCode::InvalidArgument, "curve reduction needs a polynomial in x, y");
  CurveResidue r(f);
  std::vector<std::vector<uint64_t>> rows(std::max<size_t>(p.degree(Var::y) + 1, f.q()));
  for (const auto& t : p.terms()) {
    auto& row = rows[t.exps[1]];
    if (row.size() <= t.exps[0]) row.resize(t.exps[0] + 1, 0);
    row[t.exps[0]] = f.add(row[t.exps[0]], t.rep);
  }
  reduce_rows(f, rows);
  r.rows_ = std::move(rows);
  return r;
}

Poly CurveResidue::to_poly() const {
  std::vector<Poly::Term> terms;
  for (size_t j = 0; j < rows_.size(); ++j)
    for (size_t i = 0; i < rows_[j].size(); ++i)
      if (rows_[j][i]) terms.push_back({{checked_exp(i), checked_exp(j), 0, 0}, rows_[j][i]});
  return Poly::from_terms(*field_, std::move(terms));
}

bool CurveResidue::is_zero() const noexcept {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

CurveResidue CurveResidue::operator+(const CurveResidue& o) const {
  const Field& f = same_field(field_, o.field_);
  CurveResidue r = *this;
  for (size_t j = 0; j < rows_.size(); ++j) {
    add_into(f, r.rows_[j], o.rows_[j]);
    trim_reps(r.rows_[j]);
  }
  return r;
}

CurveResidue CurveResidue::operator-(const CurveResidue& o) const {
  const Field& f = same_field(field_, o.field_);
  CurveResidue r = *this;
  for (size_t j = 0; j < rows_.size(); ++j) {
    sub_into(f, r.rows_[j], o.rows_[j]);
    trim_reps(r.rows_[j]);
  }
  return r;
}

CurveResidue CurveResidue::operator*(const CurveResidue& o) const {
  const Field& f = same_field(field_, o.field_);
  std::vector<std::vector<uint64_t>> rows(2 * rows_.size() - 1);
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) continue;
    for (size_t j = 0; j < o.rows_.size(); ++j) {
      if (o.rows_[j].empty()) continue;
      add_into(f, rows[i + j], dense_mul(f, rows_[i], o.rows_[j]));
    }
  }
  reduce_rows(f, rows);
  CurveResidue r(f);
  r.rows_ = std::move(rows);
  return r;
}

bool CurveResidue::operator==(const CurveResidue& o) const { return field_ == o.field_ && rows_ == o.rows_; }

CurveResidue CurveResidue::frobenius_q() const {
  const Field& f = *field_;
  const uint64_t q = f.q();
  std::vector<std::vector<uint64_t>> rows((rows_.size() - 1) * q + 1);
  for (size_t j = 0; j < rows_.size(); ++j) {
    const auto& src = rows_[j];
    if (src.empty()) continue;
    if (u128(src.size()) * q > kMaxDenseLength) raise(ErrorCode::ScaleExceeded, "residue too large");
    auto& dst = rows[j * q];
    dst.assign((src.size() - 1) * q + 1, 0);
    for (size_t i = 0; i < src.size(); ++i)
      if (src[i]) dst[i * q] = f.frob_p(src[i], f.h());
  }
  reduce_rows(f, rows);
  CurveResidue r(f);
  r.rows_ = std::move(rows);
  return r;
}

Poly reduce_mod_curve(const Poly& f) { return CurveResidue::from_poly(f).to_poly(); }

// ---------------------------------------------------------------------------
// Evaluation outcomes and rational functions

EvalOutcome EvalOutcome::fraction(const FieldElement& num, const FieldElement& den) {
  if (!den.is_zero()) return of(num / den);
  return num.is_zero() ? indeterminate() : pole();
}

EvalOutcome EvalOutcome::pow(u128 e) const {
  switch (kind) {
    case Kind::Value: return of(value->pow(e));
    case Kind::Pole: return e == 0 ? indeterminate() : pole();
    case Kind::Indeterminate: return indeterminate();
  }
  return indeterminate();
}

std::string EvalOutcome::to_string() const {
  switch (kind) {
    case Kind::Value: return "Value(" + value->to_string() + ")";
    case Kind::Pole: return "Pole";
    case Kind::Indeterminate: return "Indeterminate";
  }
  return "?";
}

EvalOutcome operator*(const EvalOutcome& a, const EvalOutcome& b) {
  using K = EvalOutcome::Kind;
  if (a.kind == K::Indeterminate || b.kind == K::Indeterminate) return EvalOutcome::indeterminate();
  if (a.kind == K::Value && b.kind == K::Value) return EvalOutcome::of(*a.value * *b.value);
  if (a.kind == K::Pole && b.kind == K::Pole) return EvalOutcome::pole();
  const EvalOutcome& val = a.kind == K::Value ? a : b;
  return val.value->is_zero() ? EvalOutcome::indeterminate() : EvalOutcome::pole();
}

uint64_t RationalFunction::degree() const {
  const int64_t d = std::max(num.degree(), den.degree());
  return d < 0 ? 0 : static_cast<uint64_t>(d);
}

EvalOutcome RationalFunction::eval(const FieldElement& at) const {
  return EvalOutcome::fraction(num.eval(at), den.eval(at));
}

ReducedFraction ratfun_reduce(const UPoly& num, const UPoly& den, Var var) {
  if (den.is_zero()) raise(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  const UPoly g = gcd_uni(num, den);
  UPoly n = UPoly::divrem(num, g).first;
  UPoly d = UPoly::divrem(den, g).first;
  const FieldElement lc_inv = d.lead().inverse();
  n = n * lc_inv;
  d = d * lc_inv;
  RationalFunction r{std::move(n), std::move(d), var};
  const uint64_t deg = r.degree();
  return {std::move(r), deg};
}

EvalOutcome ratfun_eval(const Poly& num, const Poly& den, const FieldElement& x, const FieldElement& y) {
  return EvalOutcome::fraction(num.eval_xy(x, y), den.eval_xy(x, y));
}

}  // namespace hq
