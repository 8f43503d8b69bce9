// Cubes indexed by subsets of {0..d-1} (bitmasks), their total cofiber and
// total fiber as chain-level total complexes, and the Phi-cube of the
// projective-space computation.

#ifndef RTHH_CUBE_HPP
#define RTHH_CUBE_HPP

#include <optional>

#include "rthh/homology.hpp"
#include "rthh/integer_matrix.hpp"

namespace rthh {

using Subset = std::uint32_t;

// edges[J][i] is the map vertex(J) -> vertex(J + i) for i not in J; other
// slots are unused.
struct ChainCube {
  std::size_t dimension = 0;
  std::vector<ChainComplex> vertices;
  std::vector<std::vector<ChainMap>> edges;
};

// Every edge is a chain map and every square commutes.
CheckReport validate_functoriality(const ChainCube& cube);

// Tot_k = sum over J of C(J)_{k - (d - |J|)}; with one direction this is
// the mapping cone. Throws std::logic_error when validation fails.
ChainComplex total_cofiber(const ChainCube& cube);
// Tot_k = sum over J of C(J)_{k + |J|}; with one direction this is the
// fiber, the cone shifted down by one.
ChainComplex total_fiber(const ChainCube& cube);

// A cube of real simplicial sets; an empty vertex is nullopt.
struct SimplicialCube {
  std::size_t dimension = 0;
  std::vector<std::optional<TruncatedDihedralSet>> vertices;
  std::vector<std::vector<SimplicialMap>> edges;
};

// Edges are simplicial maps commuting with the involutions, and squares
// commute on every tabulated cell.
CheckReport validate_functoriality(const SimplicialCube& cube);

enum class CubePart { kUnderlying, kFixedPoints };

// Normalized chains of every vertex through degree n + 1: the objects
// themselves, or the fixed points of their Segal subdivision (depth
// 2n + 3 needed). Empty vertices give the zero complex.
ChainCube chains_of(const SimplicialCube& cube, CubePart part, std::size_t n);

// Phi(I; x) for I a subset of [n] = {0..n} (bit i for index i), x in Z^n.
struct PhiCell {
  Subset subset = 0;
  Vec x;
  bool empty = false;              // x not in P_{[n] - I}
  std::vector<bool> point_factor;  // factor i = 1..n stored at i - 1
};

// P_j = {x_j >= 0} (j >= 1), P_0 = {x_1 + ... + x_n <= 0}, P_J the
// intersection, P_{} = Z^n.
bool in_p(const Vec& x, Subset j);
PhiCell phi_cell(std::size_t n, Subset subset, const Vec& x);

// A direction i with Phi(I; x) = Phi(I + i; x) for every I not containing i:
// i >= 1 with x_i > 0, else 0 (then x lies in P_0).
std::size_t homeomorphic_direction(const Vec& x);

enum class PhiVariant {
  kFaithful,
  kDirectionZeroCollapsed,  // every direction-0 map sends each factor to vertex 0
};

// Vertices are products of 2-gons and points, maps are identities and
// collapses S^sigma -> *. Throws std::invalid_argument unless n is 1 or 2.
SimplicialCube build_phi_cube(std::size_t n, const Vec& x, std::size_t depth,
                              PhiVariant variant = PhiVariant::kFaithful);

// Total cofibers of the underlying and fixed-point chain cubes of Phi(-; x),
// acyclic through degree cap.
CheckReport phi_cube_check(std::size_t n, const Vec& x, std::size_t cap,
                           PhiVariant variant = PhiVariant::kFaithful);

// phi_cube_check for every x with |x_i| <= window; x are independent jobs
// spread over threads and merged in lexicographic order.
CheckReport pn_invariance_check(std::size_t n, std::int64_t window, std::size_t cap, unsigned threads = 1);

}  // namespace rthh

#endif  // RTHH_CUBE_HPP
