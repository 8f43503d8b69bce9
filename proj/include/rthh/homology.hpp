// Integer chain complexes of truncated simplicial sets and their homology.
//
// Boundary matrices are stored sparsely by column with machine-integer
// entries; all elimination happens in GMP integers. Unit pivots are removed
// sparsely first and the remainder goes through dense Smith normal form.

#ifndef RTHH_HOMOLOGY_HPP
#define RTHH_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rthh/integer_matrix.hpp"
#include "rthh/simplicial.hpp"

namespace rthh {

struct SparseMatrix {
  using Column = std::vector<std::pair<std::size_t, std::int64_t>>;  // (row, value), sorted by row

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Column> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  // Accumulates into (row, col); drops entries that cancel to zero.
  void add(std::size_t row, std::size_t col, std::int64_t value);
  std::size_t nonzeros() const;
  BigMatrix dense() const;
};

// outer * inner; throws std::overflow_error if an entry leaves int64.
SparseMatrix multiply(const SparseMatrix& outer, const SparseMatrix& inner);
bool is_zero(const SparseMatrix& m);

struct MatrixInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
};

MatrixInvariants matrix_invariants(const SparseMatrix& m);

// Chain groups C_k = Z^{dim(k)} for lowest <= k <= top; boundary(k): C_k ->
// C_{k-1}. Homology is only reported for degrees <= certified_top, which is
// top - 1 for a truncation of an infinite complex.
class ChainComplex {
 public:
  ChainComplex() = default;
  // boundaries[k - lowest] is boundary(k); the entry for k = lowest must have
  // zero rows. Throws std::invalid_argument on shape mismatch and
  // std::logic_error when the boundary does not square to zero.
  ChainComplex(int lowest, std::vector<std::size_t> dims, std::vector<SparseMatrix> boundaries,
               int certified_top);

  static ChainComplex zero(int lowest, int top, int certified_top);

  int lowest() const { return lowest_; }
  int top() const { return lowest_ + static_cast<int>(dims_.size()) - 1; }
  int certified_top() const { return certified_top_; }
  std::size_t dim(int k) const;
  // Zero-size matrix outside the stored range.
  SparseMatrix boundary(int k) const;

 private:
  int lowest_ = 0;
  int certified_top_ = -1;
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix> boundaries_;
};

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& other) const {
    return betti == other.betti && torsion == other.torsion;
  }
  // "Z^2 + Z/2", "0"
  std::string to_string() const;
};

struct HomologyTable {
  int lowest = 0;
  std::vector<HomologyGroup> groups;  // degrees lowest, lowest + 1, ...

  int top() const { return lowest + static_cast<int>(groups.size()) - 1; }
  const HomologyGroup& at(int k) const { return groups.at(static_cast<std::size_t>(k - lowest)); }
  // True when every listed group vanishes.
  bool acyclic() const;

  // {"degrees": [{"q", "betti", "torsion"}]}
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

HomologyGroup homology(const ChainComplex& c, int k);  // throws beyond the certified range
HomologyTable homology(const ChainComplex& c);          // lowest .. certified_top

// Degreewise matrices f_k: C_k -> D_k for the source degrees.
struct ChainMap {
  int lowest = 0;
  std::vector<SparseMatrix> components;

  SparseMatrix at(int k) const;
};

// Checks shapes and f d = d f on every degree both sides store.
bool is_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f);

// cone_k = D_k + C_{k-1}, d(y, x) = (d y + f x, -d x).
ChainComplex mapping_cone(const ChainComplex& source, const ChainComplex& target, const ChainMap& f);

// Normalized chains: basis = nondegenerate tabulated cells (without the
// degree-0 basepoint when pointed). Requires closure under faces.
struct SimplicialChains {
  ChainComplex complex;
  std::vector<std::vector<Cell>> basis;  // sorted per degree
  bool pointed = false;

  // Index of a basis cell, or -1 when the cell is degenerate, the basepoint,
  // or not a basis element.
  std::ptrdiff_t index_of(std::size_t q, const Cell& c) const;
};

SimplicialChains normalized_chains(const TruncatedDihedralSet& x, bool pointed = false);

// The chain map of a simplicial map: a basis cell goes to its image when the
// image is nondegenerate (and not the basepoint), else to zero. Throws
// std::runtime_error when an image is not tabulated in the target.
ChainMap induced_chain_map(const TruncatedDihedralSet& source, const SimplicialChains& source_chains,
                           const TruncatedDihedralSet& target, const SimplicialChains& target_chains,
                           const SimplicialMap& f);

// Homology isomorphism through degree n on the underlying object and on the
// fixed points of the Segal subdivision. For each part: the mapping cone is
// acyclic through n and source and target homology agree through n; a
// surjection between isomorphic finitely generated groups is injective, so
// together these certify f_* iso. Sound but not complete for Z/2-weak
// equivalence. Both objects need depth >= 2n + 3; throws
// std::invalid_argument otherwise.
CheckReport z2_equivalence_certificate(const std::string& check, const TruncatedDihedralSet& source,
                                       const TruncatedDihedralSet& target, const SimplicialMap& f,
                                       std::size_t n);

}  // namespace rthh

#endif  // RTHH_HOMOLOGY_HPP
