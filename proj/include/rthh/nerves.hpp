// Nerve constructions on affine monoids with involution.
//
// A degree-q cell of a nerve is a list of monoid (or group) elements stored
// as one concatenated vector, block size = ambient rank. Infinite objects are
// enumerated either by weight (total sum fixed, sharp monoids) or inside a
// CellWindow.

#ifndef RTHH_NERVES_HPP
#define RTHH_NERVES_HPP

#include <optional>

#include "rthh/monoid.hpp"
#include "rthh/simplicial.hpp"

namespace rthh {

struct CellWindow {
  enum class Norm {
    kMax,  // every coordinate of the cell in [-bound, bound]
    kL1,   // sum of |coordinate| over the whole cell at most bound
  };
  std::int64_t bound = 3;
  Norm norm = Norm::kMax;

  bool admits(const Cell& c) const;
};

// phi(x) for the positive functional of m (>= 1 on nonzero elements of a
// sharp monoid).
std::int64_t functional_degree(const AffineMonoid& m, const Vec& x);

// Elements of a sharp monoid with functional degree at most bound, sorted.
std::vector<Vec> elements_up_to(const AffineMonoid& m, std::int64_t bound);

// {weight, w(weight)}, deduplicated.
std::vector<Vec> weight_orbit(const AffineMonoid& m, const Vec& weight);

// (N^di M)_q = M^{q+1}: cells summing to an element of the weight orbit.
// Throws std::invalid_argument when m is not sharp.
TruncatedDihedralSet dihedral_nerve(const AffineMonoid& m, std::size_t max_degree, const Vec& weight);
// All cells with entries in M inside the window.
TruncatedDihedralSet dihedral_nerve(const AffineMonoid& m, std::size_t max_degree, CellWindow window);

// N^di M^gp x_{M^gp} M: cells in (M^gp)^{q+1} whose sum lies in M (and in
// the weight orbit when a weight is given).
TruncatedDihedralSet replete_nerve(const AffineMonoid& m, std::size_t max_degree, CellWindow window,
                                   const std::optional<Vec>& weight = std::nullopt);

// Bar construction of M^gp: (g_1, ..., g_q), d_0 and d_q drop an end entry,
// the other faces add neighbours, w reverses and applies w.
TruncatedDihedralSet real_nerve(const AffineMonoid& m, std::size_t max_degree, CellWindow window);

// M (x) Delta^1_sigma: (q+2)-tuples indexed by the q-simplices of Delta^1.
TruncatedDihedralSet tensor_interval(const AffineMonoid& m, std::size_t max_degree, const Vec& weight);
TruncatedDihedralSet tensor_interval(const AffineMonoid& m, std::size_t max_degree, CellWindow window);

// The constant dihedral set on the listed elements of m (all operators
// identity except w).
TruncatedDihedralSet constant_object(const AffineMonoid& m, std::size_t max_degree,
                                     std::vector<Vec> elements);

// Total sum of a cell cut into blocks of the given size.
SimplicialMap sum_map(std::size_t block);

// M x N^sigma M^gp as a dihedral set: cells (s; h_1, ..., h_q), the cyclic
// operator t(s; h) = (s; s - (h_1 + ... + h_q), h_1, ..., h_{q-1}).
TruncatedDihedralSet replete_splitting(const AffineMonoid& m, std::size_t max_degree, CellWindow window);

// (x_0, ..., x_q) -> (x_0 + ... + x_q; x_1, ..., x_q) and its inverse.
SimplicialMap replete_to_splitting(std::size_t block);
SimplicialMap splitting_to_replete(std::size_t block);

// Q = M x E M^gp: cells (x; g_0, ..., g_q), faces delete g_i, degeneracies
// repeat g_i, w(x; g) = (w x; w x - w g_q, ..., w x - w g_0).
TruncatedDihedralSet repletion_resolution(const AffineMonoid& m, std::size_t max_degree, CellWindow window);

// (x, g) -> (x; g, ..., g) from the exactification, and
// (x; g_0, ..., g_q) -> (x; g_1 - g_0, ..., g_q - g_{q-1}).
SimplicialMap exactification_to_resolution(std::size_t block);
SimplicialMap resolution_to_splitting(std::size_t block);
// (x; g) -> x.
SimplicialMap resolution_projection(std::size_t block);

}  // namespace rthh

#endif  // RTHH_NERVES_HPP
