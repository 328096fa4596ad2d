#pragma once

// PGU(3, q) as 3x3 matrices over F_{q^2} modulo scalars, preserving the
// Hermitian form with Gram matrix [[1,0,0],[0,0,-1],[0,-1,0]].
//
// Matrices live in an ambient field that contains F_{q^2}, so they can act
// directly on points over larger fields.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hermitian/curve.hpp"
#include "hermitian/ff.hpp"
#include "hermitian/report.hpp"

namespace hq {

struct Mat3 {
  std::array<FieldElement, 9> a;  // row-major

  static Mat3 identity(const Field& f);
  static Mat3 from_rows(const std::array<std::array<FieldElement, 3>, 3>& rows);

  const Field& field() const { return a[0].field(); }
  const FieldElement& operator()(int i, int j) const { return a[3 * i + j]; }
  FieldElement& operator()(int i, int j) { return a[3 * i + j]; }

  Mat3 operator*(const Mat3& o) const;
  Mat3 scaled(const FieldElement& s) const;
  FieldElement det() const;
  // Entrywise q-th power, transposed.
  Mat3 dagger() const;
  // First nonzero entry in row-major order becomes 1.
  Mat3 canonical() const;
  bool is_canonical() const;

  bool operator==(const Mat3& o) const { return a == o.a; }
  bool operator<(const Mat3& o) const;
  // Nine field-element texts, row-major.
  std::string to_string() const;
  Json to_json() const;
};

struct Mat3Hash {
  size_t operator()(const Mat3& m) const noexcept;
};

Mat3 gram_matrix(const Field& f);

struct UnitaryResult {
  bool unitary = false;
  std::optional<FieldElement> lambda;
};
// M^dagger A M = lambda A with lambda in F_q^*. SingularMatrix if det M = 0,
// EntriesNotInFq2 if some entry is outside F_{q^2}.
UnitaryResult is_unitary(const Mat3& M);

// (x, y) -> (x + a, y + a^q x + b); BadParameters unless b^q + b = a^{q+1}.
Mat3 gen_translation(const FieldElement& a, const FieldElement& b);
// (x, y) -> (lambda x, lambda^{q+1} y); ZeroLambda for lambda = 0.
Mat3 gen_scaling(const FieldElement& lambda);
// Swaps Y and Z: (x, y) -> (x / y, 1 / y).
Mat3 gen_inversion(const Field& f);

ProjectivePoint apply(const Mat3& M, const ProjectivePoint& P);

enum class GeneratorKind { Translation, Scaling, Inversion };

// All generators over the ambient field: every T_{a,b}, every scaling, and W.
std::vector<Mat3> generators(const Field& ambient);

// Product of word_length random generators, each of a uniformly chosen kind.
Mat3 random_element(const Field& ambient, Rng& rng, uint32_t word_length);
Mat3 random_element(const Field& ambient, Rng& rng, uint32_t word_length, GeneratorKind forced);

// BFS closure of the generators, canonical and sorted.
std::vector<Mat3> closure(const std::vector<Mat3>& gens, size_t limit = 1u << 22);

// Whole group over F_{q^2}; ScaleExceeded for q > 4.
std::vector<Mat3> enumerate_group(uint32_t p, uint32_t h);

enum class SubgroupKind { Psi, Lambda };
std::vector<Mat3> subgroup(const Field& ambient, SubgroupKind kind);

// q^3 (q^3 + 1)(q^2 - 1)
u128 pgu_order(uint64_t q);

VerificationReport group_order_check(uint32_t p, uint32_t h, uint64_t seed);

}  // namespace hq
