#include <doctest.h>

#include <set>
#include <unordered_set>

#include "hermitian/group.hpp"

using namespace hq;

TEST_CASE("generators are unitary") {
  for (auto [p, h] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const Field& f = Field::get(p, h, 2 * h);
    for (const auto& g : generators(f)) {
      const auto r = is_unitary(g);
      CHECK(r.unitary);
      CHECK(r.lambda->frob_q(1) == *r.lambda);
    }
    const auto id = is_unitary(Mat3::identity(f));
    CHECK(id.unitary);
    CHECK(*id.lambda == f.one());
    const auto w = is_unitary(gen_inversion(f));
    CHECK(w.unitary);
    CHECK(*w.lambda == f.one());
  }
}

TEST_CASE("shear is not unitary") {
  const Field& f = Field::get(2, 1, 2);
  const auto o = f.one(), z = f.zero();
  CHECK_FALSE(is_unitary(Mat3::from_rows({{{o, o, z}, {z, o, z}, {z, z, o}}})).unitary);
  CHECK_THROWS_AS(is_unitary(Mat3::from_rows({{{o, o, z}, {o, o, z}, {z, z, o}}})), Error);
  const Field& big = Field::get(2, 1, 4);
  CHECK_THROWS_AS(is_unitary(gen_scaling(big.generator())), Error);
}

TEST_CASE("generator errors") {
  const Field& f = Field::get(2, 1, 2);
  CHECK_THROWS_AS(gen_translation(f.one(), f.zero()), Error);
  CHECK_THROWS_AS(gen_scaling(f.zero()), Error);
}

TEST_CASE("translation composition law") {
  const Field& f = Field::get(3, 1, 2);
  std::vector<std::pair<FieldElement, FieldElement>> ab;
  for (const auto& a : f.elements())
    for (const auto& b : f.solve_affine_q(f.norm_tilde(a))) ab.emplace_back(a, b);
  CHECK(ab.size() == 27);
  for (const auto& [a, b] : ab) {
    for (const auto& [c, d] : ab) {
      CHECK(gen_translation(a, b) * gen_translation(c, d) == gen_translation(a + c, b + d + a.frob_q(1) * c));
    }
  }
}

TEST_CASE("action on points") {
  const Field& f = Field::get(2, 1, 6);
  const auto pts = enumerate_points(f);
  const auto W = gen_inversion(f);
  CHECK(W * W == Mat3::identity(f));
  CHECK(apply(W, ProjectivePoint::infinity(f)) == ProjectivePoint::make(f.zero(), f.zero(), f.one()));
  for (const auto& b : f.solve_affine_q(f.zero())) {
    const auto psi = gen_translation(f.zero(), b);
    CHECK(apply(psi, ProjectivePoint::affine(f.zero(), f.zero())) == ProjectivePoint::affine(f.zero(), b));
    for (const auto& P : pts.points) {
      const auto Q = apply(psi, P);
      if (P.is_affine()) CHECK(Q.x() == P.x());
    }
  }
  for (const auto& l : f.subfield_elements(2)) {
    if (l.is_zero() || !f.norm_tilde(l).is_one()) continue;
    for (const auto& P : pts.points) {
      const auto Q = apply(gen_scaling(l), P);
      if (P.is_affine()) CHECK(Q.y() == P.y());
    }
  }
  Rng rng(3);
  for (const auto& g : generators(f)) {
    CHECK((apply(g, ProjectivePoint::infinity(f)) == ProjectivePoint::infinity(f) || g == gen_inversion(f)));
    for (int i = 0; i < 1000; ++i) CHECK(on_curve(apply(g, sample_point(f, rng))));
  }
}

TEST_CASE("random elements") {
  const Field& f = Field::get(2, 1, 8);
  Rng a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    const auto m = random_element(f, a, 6);
    CHECK(m == random_element(f, b, 6));
    CHECK(is_unitary(m).unitary);
    CHECK(m.is_canonical());
  }
  CHECK(random_element(f, a, 1, GeneratorKind::Inversion) == gen_inversion(f));
  CHECK_THROWS_AS(random_element(f, a, 0), Error);
}

TEST_CASE("canonical form is a complete invariant") {
  const Field& f = Field::get(3, 1, 2);
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const auto m = random_element(f, rng, 4);
    for (const auto& s : f.elements())
      if (!s.is_zero()) CHECK(m.scaled(s).canonical() == m);
  }
}

TEST_CASE("group orders") {
  const auto g2 = enumerate_group(2, 1);
  CHECK(g2.size() == 216);
  CHECK(pgu_order(2) == 216);
  const auto g3 = enumerate_group(3, 1);
  CHECK(g3.size() == 6048);
  const std::unordered_set<Mat3, Mat3Hash> s(g2.begin(), g2.end());
  for (size_t i = 0; i < g2.size(); i += 7)
    for (size_t j = 0; j < g2.size(); j += 11) CHECK(s.count((g2[i] * g2[j]).canonical()));
  CHECK_THROWS_AS(enumerate_group(5, 1), Error);
}

TEST_CASE("subgroups Psi and Lambda") {
  for (auto [p, h] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const Field& f = Field::get(p, h, 2 * h);
    const auto psi = subgroup(f, SubgroupKind::Psi);
    const auto lam = subgroup(f, SubgroupKind::Lambda);
    CHECK(psi.size() == f.q());
    CHECK(lam.size() == f.q() + 1);
    for (const auto* G : {&psi, &lam}) {
      CHECK(closure(*G).size() == G->size());
      CHECK(std::find(G->begin(), G->end(), Mat3::identity(f)) != G->end());
    }
  }
}

TEST_CASE("group order report") {
  const auto r = group_order_check(2, 1, 42);
  CHECK(r.pass);
  CHECK(r.observed["order"] == 216);
}
