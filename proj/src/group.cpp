#include "hermitian/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace hq {

Mat3 Mat3::identity(const Field& f) {
  Mat3 m;
  for (int i = 0; i < 9; ++i) m.a[i] = (i % 4 == 0) ? f.one() : f.zero();
  return m;
}

Mat3 Mat3::from_rows(const std::array<std::array<FieldElement, 3>, 3>& rows) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rows[i][j];
  return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  const Field& f = field();
  if (&f != &o.field()) raise(ErrorCode::FieldMismatch, "matrices over different fields");
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      uint64_t s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[3 * i + k].rep(), o.a[3 * k + j].rep()));
      r.a[3 * i + j] = f.from_index(s);
    }
  }
  return r;
}

Mat3 Mat3::scaled(const FieldElement& s) const {
  Mat3 r = *this;
  for (auto& e : r.a) e *= s;
  return r;
}

FieldElement Mat3::det() const {
  const Mat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 Mat3::dagger() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i).frob_q(1);
  return r;
}

Mat3 Mat3::canonical() const {
  for (const auto& e : a)
    if (!e.is_zero()) return scaled(e.inverse());
  raise(ErrorCode::SingularMatrix, "zero matrix has no projective class");
}

bool Mat3::is_canonical() const {
  for (const auto& e : a)
    if (!e.is_zero()) return e.is_one();
  return false;
}

bool Mat3::operator<(const Mat3& o) const {
  for (int i = 0; i < 9; ++i)
    if (a[i].rep() != o.a[i].rep()) return a[i].rep() < o.a[i].rep();
  return false;
}

std::string Mat3::to_string() const {
  std::string s;
  for (int i = 0; i < 9; ++i) {
    if (i) s += ' ';
    s += a[i].to_string();
  }
  return s;
}

Json Mat3::to_json() const {
  Json j = Json::array();
  for (const auto& e : a) j.push_back(e.to_string());
  return j;
}

size_t Mat3Hash::operator()(const Mat3& m) const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (const auto& e : m.a) {
    h ^= e.rep();
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

Mat3 gram_matrix(const Field& f) {
  const auto o = f.one(), z = f.zero(), m = -f.one();
  return Mat3::from_rows({{{o, z, z}, {z, z, m}, {z, m, z}}});
}

UnitaryResult is_unitary(const Mat3& M) {
  const Field& f = M.field();
  if (!f.contains_fq2()) raise(ErrorCode::FieldTooSmall, "ambient field does not contain F_{q^2}");
  for (const auto& e : M.a)
    if (!f.in_subfield(e, 2 * f.h())) raise(ErrorCode::EntriesNotInFq2, "matrix entry outside F_{q^2}");
  if (M.det().is_zero()) raise(ErrorCode::SingularMatrix, "singular matrix");
  const Mat3 A = gram_matrix(f);
  const Mat3 B = M.dagger() * A * M;
  // lambda is read off the (0,0) entry, where A has a 1
  const FieldElement lambda = B(0, 0);
  UnitaryResult r;
  if (lambda.is_zero() || !(B == A.scaled(lambda)) || lambda.frob_q(1) != lambda) return r;
  r.unitary = true;
  r.lambda = lambda;
  return r;
}

Mat3 gen_translation(const FieldElement& a, const FieldElement& b) {
  const Field& f = a.field();
  if (b.frob_q(1) + b != a.frob_q(1) * a) raise(ErrorCode::BadParameters, "translation needs b^q + b = a^{q+1}");
  const auto o = f.one(), z = f.zero();
  return Mat3::from_rows({{{o, z, a}, {a.frob_q(1), o, b}, {z, z, o}}});
}

Mat3 gen_scaling(const FieldElement& lambda) {
  const Field& f = lambda.field();
  if (lambda.is_zero()) raise(ErrorCode::ZeroLambda, "scaling by zero");
  const auto o = f.one(), z = f.zero();
  return Mat3::from_rows({{{lambda, z, z}, {z, f.norm_tilde(lambda), z}, {z, z, o}}});
}

Mat3 gen_inversion(const Field& f) {
  const auto o = f.one(), z = f.zero();
  return Mat3::from_rows({{{o, z, z}, {z, z, o}, {z, o, z}}});
}

ProjectivePoint apply(const Mat3& M, const ProjectivePoint& P) {
  FieldElement v[3];
  for (int i = 0; i < 3; ++i) v[i] = M(i, 0) * P.X() + M(i, 1) * P.Y() + M(i, 2) * P.Z();
  return ProjectivePoint::make(v[0], v[1], v[2]);
}

namespace {

struct GeneratorPool {
  std::vector<Mat3> translations;
  std::vector<Mat3> scalings;
  Mat3 inversion;
};

GeneratorPool generator_pool(const Field& f) {
  if (!f.contains_fq2()) raise(ErrorCode::FieldTooSmall, "ambient field does not contain F_{q^2}");
  GeneratorPool pool;
  for (const auto& a : f.subfield_elements(2 * f.h())) {
    for (const auto& b : f.solve_affine_q(f.norm_tilde(a))) pool.translations.push_back(gen_translation(a, b));
    if (!a.is_zero()) pool.scalings.push_back(gen_scaling(a));
  }
  pool.inversion = gen_inversion(f);
  return pool;
}

}  // namespace

std::vector<Mat3> generators(const Field& ambient) {
  GeneratorPool pool = generator_pool(ambient);
  std::vector<Mat3> out = std::move(pool.translations);
  out.insert(out.end(), pool.scalings.begin(), pool.scalings.end());
  out.push_back(pool.inversion);
  return out;
}

Mat3 random_element(const Field& ambient, Rng& rng, uint32_t word_length) {
  if (word_length == 0) raise(ErrorCode::InvalidArgument, "word length must be positive");
  const GeneratorPool pool = generator_pool(ambient);
  Mat3 m = Mat3::identity(ambient);
  for (uint32_t i = 0; i < word_length; ++i) {
    switch (uniform_below(rng, 3)) {
      case 0: m = m * pool.translations[uniform_below(rng, pool.translations.size())]; break;
      case 1: m = m * pool.scalings[uniform_below(rng, pool.scalings.size())]; break;
      default: m = m * pool.inversion; break;
    }
  }
  return m.canonical();
}

Mat3 random_element(const Field& ambient, Rng& rng, uint32_t word_length, GeneratorKind forced) {
  if (word_length == 0) raise(ErrorCode::InvalidArgument, "word length must be positive");
  const GeneratorPool pool = generator_pool(ambient);
  Mat3 m = Mat3::identity(ambient);
  for (uint32_t i = 0; i < word_length; ++i) {
    switch (forced) {
      case GeneratorKind::Translation: m = m * pool.translations[uniform_below(rng, pool.translations.size())]; break;
      case GeneratorKind::Scaling: m = m * pool.scalings[uniform_below(rng, pool.scalings.size())]; break;
      case GeneratorKind::Inversion: m = m * pool.inversion; break;
    }
  }
  return m.canonical();
}

std::vector<Mat3> closure(const std::vector<Mat3>& gens, size_t limit) {
  if (gens.empty()) raise(ErrorCode::InvalidArgument, "closure of an empty generator set");
  const Field& f = gens[0].field();
  std::vector<Mat3> canon;
  for (const auto& g : gens) canon.push_back(g.canonical());
  std::unordered_set<Mat3, Mat3Hash> seen;
  std::deque<Mat3> frontier;
  const Mat3 id = Mat3::identity(f);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const Mat3 cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : canon) {
      Mat3 next = (cur * g).canonical();
      if (seen.insert(next).second) {
        if (seen.size() > limit) raise(ErrorCode::ScaleExceeded, "group closure exceeds the element limit");
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<Mat3> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat3> enumerate_group(uint32_t p, uint32_t h) {
  const Field& f = Field::get(p, h, 2 * h);
  if (f.q() > 4) raise(ErrorCode::ScaleExceeded, "group enumeration limited to q <= 4");
  return closure(generators(f));
}

std::vector<Mat3> subgroup(const Field& ambient, SubgroupKind kind) {
  const Field& f = ambient;
  if (!f.contains_fq2()) raise(ErrorCode::FieldTooSmall, "ambient field does not contain F_{q^2}");
  std::vector<Mat3> out;
  if (kind == SubgroupKind::Psi) {
    for (const auto& b : f.solve_affine_q(f.zero())) out.push_back(gen_translation(f.zero(), b).canonical());
  } else {
    for (const auto& l : f.subfield_elements(2 * f.h()))
      if (!l.is_zero() && f.norm_tilde(l).is_one()) out.push_back(gen_scaling(l).canonical());
  }
  std::sort(out.begin(), out.end());
  return out;
}

u128 pgu_order(uint64_t q) {
  const u128 q3 = u128(q) * q * q;
  return q3 * (q3 + 1) * (u128(q) * q - 1);
}

VerificationReport group_order_check(uint32_t p, uint32_t h, uint64_t seed) {
  const Field& f = Field::get(p, h, 2 * h);
  const uint64_t q = f.q();
  VerificationReport r;
  r.check = "group-order";
  r.q = q;
  r.params = {{"field", field_json(f)}, {"seed", seed}};
  const auto group = enumerate_group(p, h);
  const std::unordered_set<Mat3, Mat3Hash> set(group.begin(), group.end());

  uint64_t non_unitary = 0, off_curve = 0, not_closed = 0;
  for (const auto& M : group) {
    if (!is_unitary(M).unitary && non_unitary++ == 0)
      r.witnesses.push_back({{"kind", "non-unitary"}, {"matrix", M.to_json()}});
  }
  Rng rng(seed);
  const PointSet pts = enumerate_points(f);
  for (int i = 0; i < 1000; ++i) {
    const Mat3& A = group[uniform_below(rng, group.size())];
    const Mat3& B = group[uniform_below(rng, group.size())];
    if (!set.count((A * B).canonical()) && not_closed++ == 0)
      r.witnesses.push_back({{"kind", "not-closed"}, {"a", A.to_json()}, {"b", B.to_json()}});
    const ProjectivePoint& P = pts.points[uniform_below(rng, pts.points.size())];
    if (!on_curve(apply(A, P)) && off_curve++ == 0)
      r.witnesses.push_back({{"kind", "image-off-curve"}, {"matrix", A.to_json()}, {"point", P.to_string()}});
  }
  r.expected = {{"order", u128_json(pgu_order(q))}, {"non_unitary", 0}, {"not_closed", 0}, {"image_off_curve", 0}};
  r.observed = {{"order", group.size()}, {"non_unitary", non_unitary}, {"not_closed", not_closed},
                {"image_off_curve", off_curve}};
  r.pass = u128(group.size()) == pgu_order(q) && non_unitary == 0 && not_closed == 0 && off_curve == 0;
  r.finalize();
  return r;
}

}  // namespace hq
