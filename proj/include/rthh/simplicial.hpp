// Truncated real and dihedral simplicial sets.
//
// Cells are integer vectors. Operators are formulas (std::function) valid on
// the whole untruncated object; the per-degree tables only record which cells
// have been enumerated. A membership predicate describes the full object so
// that maps can be checked to land in their target even when the target is
// only partially tabulated.

#ifndef RTHH_SIMPLICIAL_HPP
#define RTHH_SIMPLICIAL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rthh/check_report.hpp"

namespace rthh {

using Cell = std::vector<std::int64_t>;

enum class InvolutionKind {
  kNone,
  kReversing,  // d_i w = w d_{q-i}, s_i w = w s_{q-i}: a real simplicial set
  kCommuting,  // commutes with faces and degeneracies (after subdivision)
};

struct Operators {
  using Indexed = std::function<Cell(std::size_t q, std::size_t i, const Cell&)>;
  using Unary = std::function<Cell(std::size_t q, const Cell&)>;

  Indexed face;        // X_q -> X_{q-1}, 0 <= i <= q
  Indexed degeneracy;  // X_q -> X_{q+1}, 0 <= i <= q
  InvolutionKind involution_kind = InvolutionKind::kNone;
  Unary involution;  // empty iff kind is kNone
  Unary cyclic;      // t_q, empty when absent
  std::function<bool(std::size_t q, const Cell&)> member;
};

class TruncatedDihedralSet {
 public:
  // Cells are sorted and deduplicated per degree.
  TruncatedDihedralSet(std::string name, std::shared_ptr<const Operators> ops,
                       std::vector<std::vector<Cell>> cells,
                       std::optional<Cell> basepoint = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t max_degree() const { return cells_.size() - 1; }
  const std::vector<Cell>& cells(std::size_t q) const { return cells_.at(q); }
  std::size_t size(std::size_t q) const { return cells_.at(q).size(); }
  std::size_t total_size() const;
  std::optional<std::size_t> index_of(std::size_t q, const Cell& c) const;
  bool tabulated(std::size_t q, const Cell& c) const { return index_of(q, c).has_value(); }

  const Operators& ops() const { return *ops_; }
  std::shared_ptr<const Operators> shared_ops() const { return ops_; }
  InvolutionKind involution_kind() const { return ops_->involution_kind; }
  bool has_involution() const { return ops_->involution_kind != InvolutionKind::kNone; }
  bool has_cyclic() const { return static_cast<bool>(ops_->cyclic); }

  Cell face(std::size_t q, std::size_t i, const Cell& c) const { return ops_->face(q, i, c); }
  Cell degeneracy(std::size_t q, std::size_t i, const Cell& c) const {
    return ops_->degeneracy(q, i, c);
  }
  Cell involution(std::size_t q, const Cell& c) const { return ops_->involution(q, c); }
  Cell cyclic(std::size_t q, const Cell& c) const { return ops_->cyclic(q, c); }
  bool member(std::size_t q, const Cell& c) const { return ops_->member(q, c); }

  // Basepoint vertex and its degeneracy s_0^q in degree q.
  const std::optional<Cell>& basepoint() const { return basepoint_; }
  std::optional<Cell> basepoint(std::size_t q) const;

  // Faces of every tabulated cell of degree >= 1 are tabulated.
  bool closed_under_faces() const;
  bool is_degenerate(std::size_t q, const Cell& c) const;

  TruncatedDihedralSet renamed(std::string name) const;
  TruncatedDihedralSet with_basepoint(Cell vertex) const;
  TruncatedDihedralSet truncated(std::size_t max_degree) const;

 private:
  std::string name_;
  std::shared_ptr<const Operators> ops_;
  std::vector<std::vector<Cell>> cells_;
  std::optional<Cell> basepoint_;
};

// Every crossed-simplicial relation available for the object, on every
// tabulated cell: simplicial identities, the involution relations for its
// kind, and the cyclic relations when t is present.
CheckReport verify_relations(const TruncatedDihedralSet& x);

// Degreewise product; a product cell is (|a|, a..., b...). Involutions must
// have the same kind; the cyclic operator is kept when both have one. When
// keep is given only the pairs it accepts are tabulated.
using PairFilter = std::function<bool(const Cell&, const Cell&)>;
TruncatedDihedralSet product(const TruncatedDihedralSet& x, const TruncatedDihedralSet& y,
                             const PairFilter& keep = {});
// The product restricted to pairs with l1(a) + l1(b) <= budget, tabulated by
// l1 buckets instead of testing every pair.
TruncatedDihedralSet product_l1(const TruncatedDihedralSet& x, const TruncatedDihedralSet& y,
                                std::int64_t budget);
std::pair<Cell, Cell> split_product_cell(const Cell& c);
Cell product_cell(const Cell& a, const Cell& b);

// sd_q = X_{2q+1}, d_i = d_i d_{2q+1-i}, s_i = s_i s_{2q+1-i}, w = w_{2q+1}.
// Requires a reversing involution (or none) and x.max_degree() >= 2N+1; the
// result is truncated at N. Throws std::invalid_argument otherwise.
TruncatedDihedralSet segal_subdivide(const TruncatedDihedralSet& x, std::size_t n);

// Degreewise fixed cells of a commuting involution; the whole object when
// there is no involution. The result carries no involution or cyclic
// operator. Throws for reversing involutions (not simplicial).
TruncatedDihedralSet fixed_points(const TruncatedDihedralSet& x);

// The object with its involution forgotten.
TruncatedDihedralSet underlying(const TruncatedDihedralSet& x);

struct SimplicialMap {
  std::string name;
  std::function<Cell(std::size_t q, const Cell&)> apply;
};

SimplicialMap identity_map();
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);
// On sd X the map f_{2q+1}.
SimplicialMap subdivide(const SimplicialMap& f);
SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g);

// Every tabulated source cell maps to a target member, and the map commutes
// with faces, degeneracies, and with involution / cyclic operator whenever
// both sides carry them.
CheckReport check_simplicial_map(const std::string& check, const TruncatedDihedralSet& source,
                                 const TruncatedDihedralSet& target, const SimplicialMap& f);

// f is a map with inverse g: f commutes with all operators on the source
// table, g(f(c)) = c on the source table, f(g(t)) = t on the target table,
// and g lands in source members. Injectivity is exact; surjectivity is
// certified within the target table.
CheckReport check_simplicial_iso(const std::string& check, const TruncatedDihedralSet& source,
                                 const TruncatedDihedralSet& target, const SimplicialMap& f,
                                 const SimplicialMap& g);

// Small models on vertex sequences: faces delete an entry, degeneracies
// repeat one.
TruncatedDihedralSet point_model(std::size_t max_degree);
// Delta^1 with w(a_0 ... a_q) = (1 - a_q) ... (1 - a_0).
TruncatedDihedralSet interval_model(std::size_t max_degree);
// S^sigma: vertices 0, 1; edges 01 and 10 swapped by reversal.
TruncatedDihedralSet two_gon_model(std::size_t max_degree);
// Two edges 1 -> 0 and 1 -> 2 sharing the vertex 1, with the commuting
// involution exchanging 0 and 2.
TruncatedDihedralSet wedge_of_intervals_model(std::size_t max_degree);
// Two vertices, constant in every degree, trivial commuting involution.
TruncatedDihedralSet two_points_model(std::size_t max_degree);

// {"name", "max_degree", "involution", "cyclic", "degrees": [{"q", "cells",
// "faces", "degeneracies", "involution", "cyclic"}]} where operator tables
// hold indices into the neighbouring degree, or null when the image is not
// tabulated.
nlohmann::ordered_json to_json(const TruncatedDihedralSet& x);

}  // namespace rthh

#endif  // RTHH_SIMPLICIAL_HPP
