#include <doctest.h>

#include <set>

#include "hermitian/curve.hpp"

using namespace hq;

namespace {

// Pair sweep over the whole field; independent of the linearized solver.
size_t brute_count(const Field& f) {
  size_t n = 1;  // (0:1:0)
  const auto elems = f.elements();
  for (const auto& x : elems)
    for (const auto& y : elems) n += (y.pow(f.q()) + y == x.pow(f.q() + 1));
  return n;
}

}  // namespace

TEST_CASE("on_curve") {
  const Field& f = Field::get(2, 1, 2);
  CHECK(on_curve(ProjectivePoint::make(f.zero(), f.zero(), f.one())));
  CHECK(on_curve(ProjectivePoint::infinity(f)));
  CHECK_FALSE(on_curve(ProjectivePoint::make(f.one(), f.one(), f.one())));
  CHECK_THROWS_AS(ProjectivePoint::make(f.zero(), f.zero(), f.zero()), Error);
}

TEST_CASE("normalization is canonical") {
  const Field& f = Field::get(3, 1, 2);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto P = ProjectivePoint::make(f.random(rng), f.random(rng), f.from_index(1 + uniform_below(rng, 8)));
    const auto s = f.from_index(1 + uniform_below(rng, 8));
    CHECK(ProjectivePoint::make(P.X() * s, P.Y() * s, P.Z() * s) == P);
    CHECK(P.is_affine());
  }
}

TEST_CASE("point counts against pair sweep") {
  for (auto [p, h, k] : {std::tuple{2u, 1u, 1u}, {3u, 1u, 1u}, {2u, 1u, 2u}, {2u, 2u, 1u}, {2u, 1u, 3u}}) {
    const auto set = enumerate_points(p, h, k);
    CHECK(set.points.size() == brute_count(*set.field));
    for (const auto& P : set.points) CHECK(on_curve(P));
    CHECK(std::is_sorted(set.points.begin(), set.points.end()));
  }
  CHECK(enumerate_points(2, 1, 1).points.size() == 9);
  CHECK(enumerate_points(3, 1, 1).points.size() == 28);
  CHECK(enumerate_points(2, 1, 3).points.size() == 81);
}

TEST_CASE("delta sets") {
  const auto d2 = delta_set(2, 1);
  CHECK(d2.points.size() == 72);
  const auto d3 = delta_set(3, 1, 2);
  CHECK(d3.points.size() == 864);
  for (const auto& P : d2.points) {
    CHECK_FALSE(d2.field->in_subfield(P.X(), 2));
    CHECK(P.is_affine());
  }
  const auto all = enumerate_points(2, 1, 3);
  CHECK(all.count(PointTag::Rational) == 9);
  CHECK(all.count(PointTag::Delta) == 72);
  CHECK(all.count(PointTag::Other) == 0);
}

TEST_CASE("x in F_{q^2} forces y in F_{q^2} on F_{q^6}-points") {
  for (auto [p, h] : {std::pair{2u, 1u}, {3u, 1u}}) {
    const auto set = enumerate_points(p, h, 3);
    for (const auto& P : set.points)
      if (P.is_affine() && set.field->in_subfield(P.x(), 2 * h)) CHECK(set.field->in_subfield(P.y(), 2 * h));
  }
}

TEST_CASE("threaded enumeration is identical") {
  const auto a = enumerate_points(3, 1, 3, 1), b = enumerate_points(3, 1, 3, 4);
  CHECK(a.points == b.points);
  CHECK(a.to_text() == b.to_text());
}

TEST_CASE("counts do not depend on the modulus") {
  // Another irreducible sextic over F_2.
  const std::vector<uint32_t> alt{1, 0, 0, 1, 0, 0, 1};
  REQUIRE(Field::is_irreducible(2, alt));
  const Field& g = Field::with_modulus(2, 1, alt);
  const auto set = enumerate_points(g);
  CHECK(set.points.size() == 81);
  CHECK(set.count(PointTag::Delta) == 72);
}

TEST_CASE("scale limits") {
  CHECK_THROWS_AS(enumerate_points(2, 1, 11), Error);
  CHECK_THROWS_AS(enumerate_points(2, 2, 6), Error);
}

TEST_CASE("sampling") {
  const Field& f = Field::get(2, 1, 10);
  Rng a(99), b(99);
  for (int i = 0; i < 1000; ++i) {
    const auto P = sample_point(f, a);
    CHECK(on_curve(P));
    CHECK(P == sample_point(f, b));
    CHECK(f.solve_affine_q(f.norm_tilde(P.x())).size() == 2);
  }
  Rng r(1);
  CHECK_THROWS_AS(sample_point(Field::get(2, 1, 7), r), Error);
}

TEST_CASE("count reports") {
  const auto r1 = count_check(2, 1, 1);
  CHECK(r1.pass);
  CHECK(r1.observed["total"] == 9);
  const auto r3 = count_check(3, 1, 3);
  CHECK(r3.pass);
  CHECK(r3.observed["delta"] == 864);
  CHECK(r3.observed["total"] == 892);
  const auto r23 = count_check(2, 1, 3);
  CHECK(r23.observed["total"] == 81);
}

TEST_CASE("text format") {
  const auto set = enumerate_points(2, 1, 1);
  const std::string text = set.to_text();
  CHECK(text.find("0 1 0 rational\n") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 9);
}
