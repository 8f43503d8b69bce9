// Monoid-level constructions with involution and the unit/fixed-point
// identities: exactification, integral pushouts, conjugation-fixed monoids,
// monoid-set base change, unit base change and the pushout squares that
// compare fixed-point monoids of exactifications.

#ifndef RTHH_MONOID_CHECKS_HPP
#define RTHH_MONOID_CHECKS_HPP

#include <cstdint>
#include <stdexcept>

#include "rthh/check_report.hpp"
#include "rthh/monoid.hpp"

namespace rthh {

// P (+) P^gp with w(x, y) = (w x, w x - w y), together with
//   theta(x, y) = x + y, theta_ex(x, y) = x, eta(x, y) = (x + y, y)
// where theta and eta start from the doubled monoid P x P with the switch.
struct ExactifiedMonoid {
  AffineMonoid base;
  AffineMonoid doubled;
  AffineMonoid carrier;
  MonoidHom theta;
  MonoidHom theta_ex;
  MonoidHom eta;
};

// Requires an involution on m (throws std::invalid_argument otherwise).
ExactifiedMonoid exactify(const AffineMonoid& m);

class PushoutTorsionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Image of P (+) Q in the group pushout P^gp (+)_{R^gp} Q^gp, realized on the
// free quotient of Z^{d_P + d_Q}. Throws PushoutTorsionError when the group
// pushout has torsion (the integral pushout then does not embed in a
// lattice).
struct IntegralPushout {
  AffineMonoid monoid;
  Mat left;     // Z^{d_P} -> pushout ambient
  Mat right;    // Z^{d_Q} -> pushout ambient
  Mat section;  // pushout ambient -> Z^{d_P + d_Q}, a right inverse of the quotient

  // The map out of the pushout induced by a cocone (a on P, b on Q).
  Mat induced(const Mat& a, const Mat& b) const;
};

IntegralPushout integral_pushout(const MonoidHom& f, const MonoidHom& g);

// Exact isomorphism test for a homomorphism given by a matrix, followed by a
// windowed preimage sweep over target elements when the target rank is small.
CheckReport check_isomorphism(const std::string& name, const AffineMonoid& source,
                              const AffineMonoid& target, const Mat& matrix,
                              std::int64_t window);

struct FixedMonoid {
  AffineMonoid monoid;
  // Every element of the set in the certification window (twice the
  // generation window) lies in the generated monoid.
  bool certified = false;
  std::int64_t window = 0;
};

// {y in Q^gp : y + w(y) in Q}, generated from its elements with coordinates
// bounded by window.
FixedMonoid conjugation_fixed_monoid(const AffineMonoid& q, std::int64_t window = 3);

// A free monoid set: disjoint copies of the acting monoid, some paired and
// swapped by the involution.
struct MonoidSet {
  AffineMonoid acting;
  std::size_t free_orbits = 0;
  std::size_t swap_pairs = 0;

  std::size_t orbit_count() const { return free_orbits + 2 * swap_pairs; }
  // (-) (+)_P Q along theta: P -> Q.
  MonoidSet base_change(const MonoidHom& theta) const;
};

// (P |_| P) (+)_P Q = Q |_| Q on a coordinate window: classes of the
// relation (i, p + r, q) ~ (i, p, theta(r) + q) biject with Q |_| Q through
// (i, p, q) -> (i, theta(p) + q), compatibly with the switching involution.
CheckReport check_pair_base_change(const MonoidHom& theta, std::int64_t window = 3);

// eta: P (+)_{P^*} Q^* -> Q is an isomorphism when theta is an isomorphism
// on sharpenings.
CheckReport check_unit_base_change(const MonoidHom& theta, std::int64_t window = 5);

// Left and outer pushout squares comparing P (+) P, P (+) P^gp and their Q
// counterparts over the unit groups, and L (+)_P Q = M for the conjugation
// fixed monoids L of P and M of Q.
CheckReport check_strict3_squares(const MonoidHom& theta, std::int64_t window = 3);

// Faces of m as sorted generator index sets, in increasing bitmask order.
// Throws std::invalid_argument beyond 16 generators.
std::vector<std::vector<std::size_t>> faces(const AffineMonoid& m);

// chart: P -> Q is a global chart in the affine sense: for every face F of
// Q (the torus-invariant opens Spec Z[Q_F]) the composite P -> Q_F / Q_F^*
// is surjective. Decided exactly: each generator of the sharpened
// localization must lie in the monoid generated by the images of P.
// precondition-failed when Q is not saturated.
CheckReport check_chart_surjectivity(const MonoidHom& chart);

// Precondition shared by the two checks above; empty reason when it holds.
std::optional<std::string> sharpening_not_iso(const MonoidHom& theta);

}  // namespace rthh

#endif  // RTHH_MONOID_CHECKS_HPP
