// Finitely generated commutative monoids embedded in integer lattices.
//
// An AffineMonoid is the submonoid of Z^d generated by a finite list of
// vectors, optionally with an order-2 lattice automorphism preserving it.
// Integrality is automatic. The unit group and a strictly positive functional
// on the sharpening are computed once at construction; they make membership a
// decision procedure.

#ifndef RTHH_MONOID_HPP
#define RTHH_MONOID_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rthh/integer_matrix.hpp"

namespace rthh {

class DimensionCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AffineMonoid {
 public:
  // Validates shapes, w^2 = id, and w(generator) in M. Throws
  // std::invalid_argument on violation.
  AffineMonoid(std::size_t ambient_rank, Mat generators,
               std::optional<Mat> involution = std::nullopt);

  static AffineMonoid zero(std::size_t ambient_rank = 0);
  static AffineMonoid naturals(std::size_t rank);  // N^rank, standard basis
  static AffineMonoid integers(std::size_t rank);  // Z^rank as a monoid

  std::size_t ambient_rank() const { return rank_; }
  const Mat& generators() const { return generators_; }
  const std::optional<Mat>& involution() const { return involution_; }
  bool has_involution() const { return involution_.has_value(); }

  AffineMonoid with_involution(std::optional<Mat> involution) const;

  // w(x); identity when no involution is present.
  Vec involute(const Vec& x) const;

  bool contains(const Vec& x) const;

  // Hermite basis of the subgroup of Z^d generated by the generators.
  const Mat& group_basis() const { return structure_->group_basis; }
  bool in_group(const Vec& x) const;

  // Indices of generators that are units.
  const std::vector<bool>& unit_generators() const { return structure_->unit_mask; }
  const Mat& unit_basis() const { return structure_->unit_basis; }
  bool is_sharp() const { return structure_->unit_basis.empty(); }
  bool is_unit(const Vec& x) const;

  // Free quotient Z^d -> Z^e by the saturation of the unit lattice, and a
  // section Z^e -> Z^d of it.
  const Mat& quotient_projection() const { return structure_->projection; }
  const Mat& quotient_section() const { return structure_->section; }
  // Positive integer weights phi(pi(g)) >= 1 on non-unit generators.
  const Vec& positive_functional() const { return structure_->functional; }
  // True when the unit lattice is not saturated in Z^d (the quotient by units
  // then carries torsion that the free projection forgets).
  bool unit_quotient_has_torsion() const { return structure_->torsion; }

  // Elements with every coordinate in [-window, window].
  std::vector<Vec> window_elements(std::int64_t window) const;

  std::string describe() const;

 private:
  struct Structure {
    Mat group_basis;
    std::vector<bool> unit_mask;
    Mat unit_basis;
    Mat coords;          // V^T from the Smith form of the unit basis
    std::vector<std::int64_t> unit_divisors;  // diagonal of that Smith form
    Mat projection;
    Mat section;
    Vec functional;
    std::vector<std::int64_t> weights;  // functional on each generator (0 for units)
    bool torsion = false;
  };

  bool in_unit_lattice(const Vec& x) const;
  static std::shared_ptr<const Structure> analyze(std::size_t rank, const Mat& gens);

  std::size_t rank_;
  Mat generators_;
  std::optional<Mat> involution_;
  std::shared_ptr<const Structure> structure_;
};

struct MonoidHom {
  // Validates that generators land in the target and that the matrix
  // intertwines the involutions when both are present.
  MonoidHom(AffineMonoid source, AffineMonoid target, Mat matrix);

  static MonoidHom identity(const AffineMonoid& m);

  Vec operator()(const Vec& x) const { return mat_vec(matrix, x); }
  bool equivariant() const;

  AffineMonoid source;
  AffineMonoid target;
  Mat matrix;  // target.ambient_rank rows, source.ambient_rank columns
};

// Hermite basis of M^gp.
Mat group_completion(const AffineMonoid& m);

// M^* as a monoid (a lattice): the unit basis together with its negatives.
AffineMonoid units(const AffineMonoid& m);

struct Sharpening {
  AffineMonoid monoid;   // in Z^e, trivial units
  MonoidHom projection;  // M -> M / M^*
};
Sharpening sharpen(const AffineMonoid& m);

// The map induced by theta on sharpenings, as a matrix Z^e_P -> Z^e_Q.
Mat sharpened_matrix(const MonoidHom& theta);

struct IsoVerdict {
  bool iso = false;
  std::string reason;
};
// Decides whether a homomorphism between sharp monoids (given by a matrix on
// ambient lattices) is an isomorphism.
IsoVerdict is_isomorphism_sharp(const AffineMonoid& source, const AffineMonoid& target,
                                const Mat& matrix);

// M == cone(M) cap M^gp. Throws DimensionCapError when the ambient rank
// exceeds rank_cap.
bool is_saturated(const AffineMonoid& m, std::size_t rank_cap = 4);

// True iff the generators indexed by face are exactly the generators lying
// on the smallest face of M containing them.
bool is_face(const AffineMonoid& m, const std::vector<std::size_t>& face);

// M with the generators in face inverted. Throws std::invalid_argument when
// face does not span a face.
AffineMonoid face_localization(const AffineMonoid& m, const std::vector<std::size_t>& face);

AffineMonoid direct_sum(const AffineMonoid& a, const AffineMonoid& b);

// M x M on Z^{2d} with the coordinate switch (x, y) -> (w y, w x); w is the
// identity when M carries no involution.
AffineMonoid double_monoid(const AffineMonoid& m);

// {"ambient_rank": d, "generators": [[...], ...], "involution": [[...], ...] | null}.
// Throws MonoidParseError on schema violations and std::invalid_argument when
// the involution is invalid.
class MonoidParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
AffineMonoid monoid_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json monoid_to_json(const AffineMonoid& m);

// Block-diagonal matrix.
Mat block_diagonal(const Mat& a, std::size_t a_cols, const Mat& b, std::size_t b_cols);

}  // namespace rthh

#endif  // RTHH_MONOID_HPP
