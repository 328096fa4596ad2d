#include "hermitian/ff.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace hq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::BadSubfieldDegree: return "BadSubfieldDegree";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeZeroInVar: return "DegreeZeroInVar";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::EntriesNotInFq2: return "EntriesNotInFq2";
    case ErrorCode::DegenerateEliminant: return "DegenerateEliminant";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace {

// Dense polynomials over F_p with small p, used only for modulus selection.
using PrimePoly = std::vector<uint64_t>;

void pp_trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t inv_mod_p(uint64_t a, uint64_t p) {
  // p is prime and small enough that products fit in 64 bits
  uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

PrimePoly pp_mod(PrimePoly a, const PrimePoly& f, uint64_t p) {
  pp_trim(a);
  const size_t df = f.size() - 1;
  const uint64_t lc_inv = inv_mod_p(f.back(), p);
  while (a.size() >= f.size()) {
    const uint64_t c = a.back() * lc_inv % p;
    const size_t shift = a.size() - f.size();
    for (size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    }
    pp_trim(a);
  }
  return a;
}

PrimePoly pp_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return pp_mod(std::move(r), f, p);
}

PrimePoly pp_powmod(PrimePoly base, uint64_t e, const PrimePoly& f, uint64_t p) {
  PrimePoly result{1};
  base = pp_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = pp_mulmod(result, base, f, p);
    base = pp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

PrimePoly pp_gcd(PrimePoly a, PrimePoly b, uint64_t p) {
  pp_trim(a);
  pp_trim(b);
  while (!b.empty()) {
    PrimePoly r = pp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::vector<uint32_t>> mat_identity(size_t n) {
  std::vector<std::vector<uint32_t>> id(n, std::vector<uint32_t>(n, 0));
  for (size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

uint64_t map_affine_q(const Field& f, uint64_t y, uint64_t) { return f.add(f.frob_p(y, f.h()), y); }
uint64_t map_subfield(const Field& f, uint64_t y, uint64_t d) { return f.sub(f.frob_p(y, d), y); }

struct Registry {
  std::mutex mu;
  std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>, std::unique_ptr<Field>> by_modulus;
  std::map<std::tuple<uint32_t, uint32_t, uint32_t>, const Field*> by_degree;
};

Registry& registry() {
  static Registry r;
  return r;
}

void validate_parameters(uint32_t p, uint32_t h, uint32_t m) {
  if (!Field::is_prime(p)) raise(ErrorCode::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
  if (h == 0 || m == 0) raise(ErrorCode::InvalidArgument, "h and m must be positive");
  u128 order = 1;
  for (uint32_t i = 0; i < m; ++i) {
    order *= p;
    if (order > (u128(1) << 64)) {
      raise(ErrorCode::DegreeTooLarge, "p^m exceeds 2^64 (p = " + std::to_string(p) +
                                           ", m = " + std::to_string(m) + ")");
    }
  }
  u128 q = 1;
  for (uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > u128(UINT64_MAX)) raise(ErrorCode::DegreeTooLarge, "q = p^h exceeds 64 bits");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FpLinearSystem

FpLinearSystem::FpLinearSystem(uint32_t p, std::vector<std::vector<uint32_t>> columns)
    : p_(p), n_(columns.size()) {
  const size_t n = n_;
  rref_.assign(n, std::vector<uint32_t>(n, 0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) rref_[i][j] = columns[j][i] % p;
  transform_ = mat_identity(n);

  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t piv = row;
    while (piv < n && rref_[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rref_[piv], rref_[row]);
    std::swap(transform_[piv], transform_[row]);
    const uint64_t s = inv_mod_p(rref_[row][col], p);
    for (size_t k = 0; k < n; ++k) {
      rref_[row][k] = static_cast<uint32_t>(rref_[row][k] * s % p);
      transform_[row][k] = static_cast<uint32_t>(transform_[row][k] * s % p);
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == row || rref_[r][col] == 0) continue;
      const uint64_t f = p - rref_[r][col];
      for (size_t k = 0; k < n; ++k) {
        rref_[r][k] = static_cast<uint32_t>((rref_[r][k] + f * rref_[row][k]) % p);
        transform_[r][k] = static_cast<uint32_t>((transform_[r][k] + f * transform_[row][k]) % p);
      }
    }
    pivot_col_.push_back(col);
    ++row;
  }
  rank_ = row;

  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col_) is_pivot[c] = true;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<uint32_t> v(n, 0);
    v[f] = 1;
    for (size_t r = 0; r < rank_; ++r) v[pivot_col_[r]] = (p - rref_[r][f]) % p;
    kernel_.push_back(std::move(v));
  }
}

bool FpLinearSystem::solve(std::span<const uint32_t> c, std::vector<uint32_t>& out) const {
  std::vector<uint64_t> d(n_, 0);
  for (size_t r = 0; r < n_; ++r) {
    uint64_t acc = 0;
    for (size_t k = 0; k < n_; ++k) acc = (acc + uint64_t{transform_[r][k]} * c[k]) % p_;
    d[r] = acc;
  }
  for (size_t r = rank_; r < n_; ++r)
    if (d[r] != 0) return false;
  out.assign(n_, 0);
  for (size_t r = 0; r < rank_; ++r) out[pivot_col_[r]] = static_cast<uint32_t>(d[r]);
  return true;
}

// ---------------------------------------------------------------------------
// Field

bool Field::is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool Field::is_irreducible(uint32_t p, std::span<const uint32_t> monic) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const size_t m = monic.size() - 1;
  PrimePoly f(monic.begin(), monic.end());
  if (m == 1) return true;
  // Rabin: T^{p^m} = T mod f, and gcd(T^{p^{m/r}} - T, f) = 1 for primes r | m.
  std::vector<size_t> checks;
  for (uint64_t r : prime_factors(m)) checks.push_back(m / r);
  PrimePoly x{0, 1};
  PrimePoly cur = x;
  for (size_t k = 1; k <= m; ++k) {
    cur = pp_powmod(cur, p, f, p);
    if (std::find(checks.begin(), checks.end(), k) != checks.end()) {
      PrimePoly d = cur;
      d.resize(std::max<size_t>(d.size(), 2), 0);
      d[1] = (d[1] + p - 1) % p;
      pp_trim(d);
      if (d.empty()) return false;
      PrimePoly g = pp_gcd(f, d, p);
      if (g.size() > 1) return false;
    }
  }
  PrimePoly diff = cur;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  pp_trim(diff);
  return diff.empty();
}

std::vector<uint32_t> Field::least_irreducible(uint32_t p, uint32_t m) {
  validate_parameters(p, 1, m);
  std::vector<uint32_t> f(m + 1, 0);
  f[m] = 1;
  // Enumerate the low coefficients as a base-p counter, c_0 least significant.
  for (;;) {
    if (is_irreducible(p, f)) return f;
    size_t i = 0;
    while (i < m) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == m) break;
  }
  raise(ErrorCode::NoIrreducibleFound, "no irreducible polynomial of degree " + std::to_string(m));
}

const Field& Field::get(uint32_t p, uint32_t h, uint32_t m) {
  validate_parameters(p, h, m);
  {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.by_degree.find({p, h, m});
    if (it != reg.by_degree.end()) return *it->second;
  }
  const Field& f = with_modulus(p, h, least_irreducible(p, m));
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  reg.by_degree.emplace(std::make_tuple(p, h, m), &f);
  return f;
}

const Field& Field::with_modulus(uint32_t p, uint32_t h, std::vector<uint32_t> modulus) {
  if (modulus.size() < 2) raise(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
  validate_parameters(p, h, static_cast<uint32_t>(modulus.size() - 1));
  for (uint32_t c : modulus)
    if (c >= p) raise(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  if (!is_irreducible(p, modulus)) raise(ErrorCode::InvalidArgument, "modulus is not monic irreducible");
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto key = std::make_tuple(p, h, modulus);
  auto it = reg.by_modulus.find(key);
  if (it != reg.by_modulus.end()) return *it->second;
  std::unique_ptr<Field> f(new Field(p, h, std::move(modulus)));
  const Field& ref = *f;
  reg.by_modulus.emplace(std::move(key), std::move(f));
  return ref;
}

Field::Field(uint32_t p, uint32_t h, std::vector<uint32_t> modulus)
    : p_(p), h_(h), m_(static_cast<uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = 1;
  for (uint32_t i = 0; i < h_; ++i) q_ *= p_;
  order_ = 1;
  for (uint32_t i = 0; i < m_; ++i) order_ *= p_;
  if (p_ == 2) {
    for (uint32_t i = 0; i < m_; ++i)
      if (modulus_[i]) mod_low_bits_ |= uint64_t{1} << i;
  }
  if (order_ <= kTableLimit) build_tables();
  if (contains_fq2()) affine_q_ = std::make_unique<FpLinearSystem>(linear_map(&map_affine_q, 0));
}

void Field::build_tables() {
  const uint64_t n = static_cast<uint64_t>(order_);
  const uint64_t group = n - 1;
  const auto factors = prime_factors(group);
  uint64_t g = 0;
  for (uint64_t cand = 1; cand < n; ++cand) {
    bool primitive = true;
    for (uint64_t r : factors) {
      u128 e = group / r;
      uint64_t acc = 1, base = cand;
      while (e) {
        if (e & 1) acc = mul_generic(acc, base);
        base = mul_generic(base, base);
        e >>= 1;
      }
      if (acc == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) raise(ErrorCode::Internal, "no primitive element found");
  exp_.assign(group == 0 ? 1 : group, 0);
  log_.assign(n, 0);
  uint64_t cur = 1;
  for (uint64_t i = 0; i < group; ++i) {
    exp_[i] = static_cast<uint32_t>(cur);
    log_[cur] = static_cast<uint32_t>(i);
    cur = mul_generic(cur, g);
  }
}

FieldElement Field::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<uint64_t>(r)};
}

FieldElement Field::from_index(uint64_t index) const {
  if (u128(index) >= order_) raise(ErrorCode::InvalidArgument, "element index out of range");
  return {this, index};
}

FieldElement Field::from_coeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() > m_) raise(ErrorCode::InvalidArgument, "too many coefficients");
  std::vector<uint32_t> d(m_, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % p_;
  return {this, encode(d)};
}

FieldElement Field::generator() const {
  if (m_ == 1) return {this, (p_ - modulus_[0]) % p_};
  return {this, p_};
}

std::vector<FieldElement> Field::elements() const {
  if (order_ > kTableLimit) raise(ErrorCode::ScaleExceeded, "field too large to enumerate: " + describe());
  std::vector<FieldElement> out;
  out.reserve(static_cast<size_t>(order_));
  for (uint64_t i = 0; u128(i) < order_; ++i) out.push_back({this, i});
  return out;
}

std::vector<uint32_t> Field::digits(uint64_t a) const {
  std::vector<uint32_t> d(m_, 0);
  if (p_ == 2) {
    for (uint32_t i = 0; i < m_; ++i) d[i] = (a >> i) & 1u;
  } else {
    for (uint32_t i = 0; i < m_; ++i) {
      d[i] = static_cast<uint32_t>(a % p_);
      a /= p_;
    }
  }
  return d;
}

uint64_t Field::encode(std::span<const uint32_t> d) const {
  uint64_t r = 0;
  if (p_ == 2) {
    for (size_t i = 0; i < d.size(); ++i)
      if (d[i] & 1u) r |= uint64_t{1} << i;
    return r;
  }
  for (size_t i = d.size(); i-- > 0;) r = r * p_ + d[i];
  return r;
}

uint64_t Field::add(uint64_t a, uint64_t b) const {
  if (p_ == 2) return a ^ b;
  uint64_t r = 0, pw = 1;
  for (uint32_t i = 0; i < m_ && (a | b); ++i) {
    uint64_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

uint64_t Field::neg(uint64_t a) const {
  if (p_ == 2) return a;
  uint64_t r = 0, pw = 1;
  for (uint32_t i = 0; i < m_ && a; ++i) {
    const uint64_t c = a % p_;
    if (c) r += (p_ - c) * pw;
    a /= p_;
    pw *= p_;
  }
  return r;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const {
  if (p_ == 2) return a ^ b;
  return add(a, neg(b));
}

uint64_t Field::mul_generic(uint64_t a, uint64_t b) const {
  if (p_ == 2) {
    uint64_t r = 0;
    const uint64_t top = uint64_t{1} << (m_ - 1);
    const uint64_t mask = m_ == 64 ? UINT64_MAX : (uint64_t{1} << m_) - 1;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      const bool carry = (a & top) != 0;
      a = (a << 1) & mask;
      if (carry) a ^= mod_low_bits_;
    }
    return r;
  }
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<uint64_t> prod(2 * m_ - 1, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + uint64_t{da[i]} * db[j]) % p_;
  }
  for (size_t k = prod.size(); k-- > m_;) {
    const uint64_t c = prod[k];
    if (c == 0) continue;
    for (uint32_t i = 0; i < m_; ++i) {
      prod[k - m_ + i] = (prod[k - m_ + i] + c * ((p_ - modulus_[i]) % p_)) % p_;
    }
    prod[k] = 0;
  }
  uint64_t r = 0;
  for (uint32_t i = m_; i-- > 0;) r = r * p_ + prod[i];
  return r;
}

uint64_t Field::mul(uint64_t a, uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    const uint64_t group = static_cast<uint64_t>(order_) - 1;
    uint64_t e = uint64_t{log_[a]} + log_[b];
    if (e >= group) e -= group;
    return exp_[e];
  }
  return mul_generic(a, b);
}

uint64_t Field::pow(uint64_t a, u128 e) const {
  uint64_t result = 1;
  int top = 127;
  while (top >= 0 && !((e >> top) & 1)) --top;
  for (int i = top; i >= 0; --i) {
    result = mul(result, result);
    if ((e >> i) & 1) result = mul(result, a);
  }
  return result;
}

uint64_t Field::inv(uint64_t a) const {
  if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of zero");
  if (!exp_.empty()) {
    const uint64_t group = static_cast<uint64_t>(order_) - 1;
    return exp_[(group - log_[a]) % group];
  }
  return pow(a, order_ - 2);
}

uint64_t Field::frob_p(uint64_t a, uint64_t j) const {
  j %= m_;
  if (a == 0 || a == 1 || j == 0) return a;
  if (!exp_.empty()) {
    const uint64_t group = static_cast<uint64_t>(order_) - 1;
    u128 e = 1;
    for (uint64_t i = 0; i < j; ++i) e = e * p_ % group;
    return exp_[static_cast<uint64_t>(u128(log_[a]) * e % group)];
  }
  for (uint64_t i = 0; i < j; ++i) a = pow(a, p_);
  return a;
}

bool Field::in_subfield(const FieldElement& a, uint32_t d) const {
  if (d == 0 || m_ % d != 0) {
    raise(ErrorCode::BadSubfieldDegree, std::to_string(d) + " does not divide " + std::to_string(m_));
  }
  a.check_same(FieldElement(this, 0));
  return frob_p(a.rep(), d) == a.rep();
}

FieldElement Field::frob_q(const FieldElement& a, uint64_t k) const {
  a.check_same(FieldElement(this, 0));
  // a^{q^k} = a^{p^{hk}} and a^{p^m} = a
  const uint64_t j = static_cast<uint64_t>(u128(h_) * k % m_);
  return {this, frob_p(a.rep(), j)};
}

FieldElement Field::norm_tilde(const FieldElement& a) const { return frob_q(a, 1) * a; }

FpLinearSystem Field::linear_map(uint64_t (*map)(const Field&, uint64_t, uint64_t), uint64_t arg) const {
  std::vector<std::vector<uint32_t>> columns;
  columns.reserve(m_);
  uint64_t basis = 1;
  for (uint32_t j = 0; j < m_; ++j) {
    columns.push_back(digits(map(*this, basis, arg)));
    if (j + 1 < m_) basis = p_ == 2 ? basis << 1 : basis * p_;
  }
  return FpLinearSystem(p_, std::move(columns));
}

std::vector<FieldElement> Field::span_of(const std::vector<std::vector<uint32_t>>& basis,
                                         uint64_t offset) const {
  u128 count = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    count *= p_;
    if (count > kTableLimit) raise(ErrorCode::ScaleExceeded, "solution space too large to enumerate");
  }
  std::vector<uint64_t> reps;
  reps.reserve(static_cast<size_t>(count));
  std::vector<uint64_t> basis_reps;
  for (const auto& b : basis) basis_reps.push_back(encode(b));
  std::vector<uint32_t> counter(basis.size(), 0);
  for (;;) {
    uint64_t acc = offset;
    for (size_t i = 0; i < basis.size(); ++i)
      for (uint32_t c = 0; c < counter[i]; ++c) acc = add(acc, basis_reps[i]);
    reps.push_back(acc);
    size_t i = 0;
    while (i < counter.size()) {
      if (++counter[i] < p_) break;
      counter[i] = 0;
      ++i;
    }
    if (i == counter.size()) break;
  }
  std::sort(reps.begin(), reps.end());
  std::vector<FieldElement> out;
  out.reserve(reps.size());
  for (uint64_t r : reps) out.push_back({this, r});
  return out;
}

std::vector<FieldElement> Field::solve_affine_q(const FieldElement& c) const {
  c.check_same(FieldElement(this, 0));
  if (!affine_q_) {
    raise(ErrorCode::FieldTooSmall, "F_{q^2} is not a subfield of " + describe());
  }
  std::vector<uint32_t> particular;
  if (!affine_q_->solve(digits(c.rep()), particular)) return {};
  return span_of(affine_q_->kernel_basis(), encode(particular));
}

std::vector<FieldElement> Field::subfield_elements(uint32_t d) const {
  if (d == 0 || m_ % d != 0) {
    raise(ErrorCode::BadSubfieldDegree, std::to_string(d) + " does not divide " + std::to_string(m_));
  }
  FpLinearSystem sys = linear_map(&map_subfield, d);
  return span_of(sys.kernel_basis(), 0);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << p_ << "^" << m_ << " (q = " << q_ << "), modulus ";
  bool first = true;
  for (size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (modulus_[i] != 1 || i == 0) os << modulus_[i];
    if (i > 0) os << (modulus_[i] != 1 ? "*" : "") << "T" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FieldElement

const Field& FieldElement::field() const {
  if (!field_) raise(ErrorCode::FieldMismatch, "element has no field");
  return *field_;
}

const Field* FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || field_ != o.field_) raise(ErrorCode::FieldMismatch, "operands belong to different fields");
  return field_;
}

std::vector<uint32_t> FieldElement::coeffs() const { return field().digits(rep_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const Field* f = check_same(o);
  return {f, f->add(rep_, o.rep_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const Field* f = check_same(o);
  return {f, f->sub(rep_, o.rep_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const Field* f = check_same(o);
  return {f, f->mul(rep_, o.rep_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  const Field* f = check_same(o);
  if (o.rep_ == 0) raise(ErrorCode::DivisionByZero, "division by zero");
  return {f, f->mul(rep_, f->inv(o.rep_))};
}

FieldElement FieldElement::operator-() const { return {&field(), field_->neg(rep_)}; }

FieldElement FieldElement::pow(u128 e) const { return {&field(), field_->pow(rep_, e)}; }

FieldElement FieldElement::inverse() const { return {&field(), field_->inv(rep_)}; }

FieldElement FieldElement::frob_q(uint64_t k) const { return field().frob_q(*this, k); }

std::string FieldElement::to_string() const { return std::to_string(rep_); }

}  // namespace hq
