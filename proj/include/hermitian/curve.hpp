#pragma once

// The Hermitian curve y^q z + y z^q = x^{q+1}, with q taken from the field.

#include <string>
#include <vector>

#include "hermitian/ff.hpp"
#include "hermitian/report.hpp"

namespace hq {

class ProjectivePoint {
 public:
  // Normalized so the last nonzero coordinate is 1; InvalidArgument if all vanish.
  static ProjectivePoint make(const FieldElement& X, const FieldElement& Y, const FieldElement& Z);
  static ProjectivePoint affine(const FieldElement& x, const FieldElement& y);
  static ProjectivePoint infinity(const Field& f);

  const FieldElement& X() const noexcept { return c_[0]; }
  const FieldElement& Y() const noexcept { return c_[1]; }
  const FieldElement& Z() const noexcept { return c_[2]; }
  const Field& field() const { return c_[0].field(); }
  bool is_affine() const noexcept { return c_[2].is_one(); }
  // Affine coordinates; only meaningful when is_affine().
  const FieldElement& x() const noexcept { return c_[0]; }
  const FieldElement& y() const noexcept { return c_[1]; }

  bool operator==(const ProjectivePoint& o) const noexcept {
    return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
  }
  bool operator<(const ProjectivePoint& o) const noexcept;
  // "X Y Z" in field-element text encoding.
  std::string to_string() const;

 private:
  FieldElement c_[3];
};

bool on_curve(const ProjectivePoint& P);
bool on_curve_affine(const FieldElement& x, const FieldElement& y);

enum class PointTag { Rational, Delta, Other };
const char* to_string(PointTag t) noexcept;

struct PointSet {
  const Field* field = nullptr;
  std::vector<ProjectivePoint> points;  // canonical order
  std::vector<PointTag> tags;

  size_t count(PointTag t) const;
  // One line per point: "X Y Z tag".
  std::string to_text() const;
};

// All F_{q^{2k}}-points of H_q (q = p^h), tagged by subfield membership.
// ScaleExceeded when q^{2k} > 2^20.
PointSet enumerate_points(uint32_t p, uint32_t h, uint32_t k, unsigned threads = 1);
// Same over a caller-chosen model of the field (must satisfy 2h | m).
PointSet enumerate_points(const Field& f, unsigned threads = 1);
// The F_{q^6}-points that are not F_{q^2}-rational.
PointSet delta_set(uint32_t p, uint32_t h, unsigned threads = 1);

// Random affine curve point over f; FieldTooSmall unless 2h | m.
ProjectivePoint sample_point(const Field& f, Rng& rng);

VerificationReport count_check(uint32_t p, uint32_t h, uint32_t k, unsigned threads = 1);

// Genus q(q-1)/2 and the F_{q^2} point count q^2 + 2gq + 1.
inline uint64_t hermitian_genus(uint64_t q) { return q * (q - 1) / 2; }

}  // namespace hq
