// Cellwise verification of the simplicial isomorphisms between nerve
// constructions. Every check works on an l1 cell window (closed under faces,
// degeneracies, rotation and block reversal), verifies the operator
// relations of the objects involved, and then checks an explicit bijection
// together with its inverse.

#ifndef RTHH_SIMPLICIAL_CHECKS_HPP
#define RTHH_SIMPLICIAL_CHECKS_HPP

#include "rthh/nerves.hpp"

namespace rthh {

// (M (x) Delta^1_sigma) (+)_{i_# i^* M} M in normal form: cells (a; z_1..z_q)
// standing for the class of ((0, z_1, ..., z_q, 0), a). Operators are
// computed on that representative and renormalized.
TruncatedDihedralSet drep22_pushout(const AffineMonoid& m, std::size_t max_degree, CellWindow window);

// The pushout above is isomorphic to N^di M through (a; z) -> (a, z_q..z_1);
// also checks that renormalizing commutes with the operators on arbitrary
// representatives in the window.
CheckReport check_drep22(const AffineMonoid& m, std::size_t max_degree, std::int64_t window);

// N^drep M = M x N^sigma M^gp.
CheckReport check_dih25(const AffineMonoid& m, std::size_t max_degree, std::int64_t window);

// N^drep (P (+) Q) = N^drep P x N^drep Q.
CheckReport check_drep4(const AffineMonoid& p, const AffineMonoid& q, std::size_t max_degree,
                        std::int64_t window);

// N^di (P (+) Q) = N^di P x N^di Q.
CheckReport check_thrlog8(const AffineMonoid& p, const AffineMonoid& q, std::size_t max_degree,
                          std::int64_t window);

// The resolution Q = M x E M^gp: relations, the maps
// (i_# i^* M)^ex -> Q -> M x N^sigma M^gp and Q -> M, and the description of
// (sd Q)^{Z/2} as tuples (x, g_0..g_q, w x - w g_q, ..., w x - w g_0) with
// x fixed, through degree n.
CheckReport check_dih15(const AffineMonoid& m, std::size_t n, std::int64_t window);

// sd(Delta^1_sigma) = Delta^1 |_| Delta^1 with the switching involution, and
// (sd S^sigma)^{Z/2} is two points, through degree n.
CheckReport check_subdivided_interval(std::size_t n);

}  // namespace rthh

#endif  // RTHH_SIMPLICIAL_CHECKS_HPP
