#include "rthh/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rthh {

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
  if (row >= rows || col >= cols) throw std::out_of_range("SparseMatrix::add");
  if (value == 0) return;
  Column& column = columns[col];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != column.end() && it->first == row) {
    it->second += value;
    if (it->second == 0) column.erase(it);
  } else {
    column.insert(it, {row, value});
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const Column& c : columns) n += c.size();
  return n;
}

BigMatrix SparseMatrix::dense() const {
  BigMatrix out(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) out(r, c) = BigInt(static_cast<long>(v));
  return out;
}

SparseMatrix multiply(const SparseMatrix& outer, const SparseMatrix& inner) {
  if (outer.cols != inner.rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseMatrix out(outer.rows, inner.cols);
  for (std::size_t c = 0; c < inner.cols; ++c) {
    std::map<std::size_t, BigInt> acc;
    for (const auto& [k, v] : inner.columns[c])
      for (const auto& [r, u] : outer.columns[k]) acc[r] += BigInt(static_cast<long>(u)) * static_cast<long>(v);
    for (const auto& [r, v] : acc) {
      if (v == 0) continue;
      if (!v.fits_slong_p()) throw std::overflow_error("multiply: entry exceeds int64");
      out.columns[c].push_back({r, v.get_si()});
    }
  }
  return out;
}

bool is_zero(const SparseMatrix& m) {
  return std::all_of(m.columns.begin(), m.columns.end(), [](const auto& c) { return c.empty(); });
}

MatrixInvariants matrix_invariants(const SparseMatrix& m) {
  std::vector<std::map<std::size_t, BigInt>> cols(m.cols);
  std::vector<std::set<std::size_t>> rows(m.rows);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) {
      cols[c][r] = BigInt(static_cast<long>(v));
      rows[r].insert(c);
    }

  // Pivoting on a unit entry splits off an invariant factor 1 and leaves the
  // Schur complement, which has the remaining invariant factors.
  std::size_t pivots = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (cols[c].empty()) continue;
      std::size_t best = m.rows;
      for (const auto& [r, v] : cols[c])
        if (abs(v) == 1 && (best == m.rows || rows[r].size() < rows[best].size())) best = r;
      if (best == m.rows) continue;

      const BigInt p = cols[c][best];
      std::vector<std::size_t> others;
      for (std::size_t c2 : rows[best])
        if (c2 != c) others.push_back(c2);
      for (std::size_t c2 : others) {
        const BigInt factor = cols[c2][best] * p;
        for (const auto& [r2, v] : cols[c]) {
          BigInt& e = cols[c2][r2];
          e -= factor * v;
          if (e == 0) {
            cols[c2].erase(r2);
            rows[r2].erase(c2);
          } else {
            rows[r2].insert(c2);
          }
        }
      }
      for (const auto& entry : cols[c]) rows[entry.first].erase(c);
      cols[c].clear();
      ++pivots;
      progress = true;
    }
  }

  std::vector<std::size_t> live_cols, live_rows;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!cols[c].empty()) live_cols.push_back(c);
  for (std::size_t r = 0; r < m.rows; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);

  MatrixInvariants out;
  out.rank = pivots;
  if (!live_cols.empty()) {
    std::vector<std::size_t> row_pos(m.rows, 0);
    for (std::size_t i = 0; i < live_rows.size(); ++i) row_pos[live_rows[i]] = i;
    BigMatrix rest(live_rows.size(), live_cols.size());
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      for (const auto& [r, v] : cols[live_cols[j]]) rest(row_pos[r], j) = v;
    for (const BigInt& f : invariant_factors(std::move(rest))) {
      ++out.rank;
      if (abs(f) != 1) out.torsion.push_back(abs(f));
    }
  }
  return out;
}

ChainComplex::ChainComplex(int lowest, std::vector<std::size_t> dims, std::vector<SparseMatrix> boundaries,
                           int certified_top)
    : lowest_(lowest), certified_top_(certified_top), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != dims_.size()) throw std::invalid_argument("ChainComplex: one boundary per degree");
  if (certified_top_ > top()) throw std::invalid_argument("ChainComplex: certified range beyond stored chains");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const std::size_t below = i == 0 ? 0 : dims_[i - 1];
    if (boundaries_[i].rows != below || boundaries_[i].cols != dims_[i])
      throw std::invalid_argument("ChainComplex: boundary shape mismatch in degree " +
                                  std::to_string(lowest_ + static_cast<int>(i)));
  }
  for (std::size_t i = 2; i < dims_.size(); ++i)
    if (!is_zero(multiply(boundaries_[i - 1], boundaries_[i])))
      throw std::logic_error("ChainComplex: boundary does not square to zero in degree " +
                             std::to_string(lowest_ + static_cast<int>(i)));
}

ChainComplex ChainComplex::zero(int lowest, int top, int certified_top) {
  const std::size_t n = top >= lowest ? static_cast<std::size_t>(top - lowest + 1) : 0;
  return ChainComplex(lowest, std::vector<std::size_t>(n, 0), std::vector<SparseMatrix>(n), certified_top);
}

std::size_t ChainComplex::dim(int k) const {
  if (k < lowest_ || k > top()) return 0;
  return dims_[static_cast<std::size_t>(k - lowest_)];
}

SparseMatrix ChainComplex::boundary(int k) const {
  if (k < lowest_ || k > top()) return SparseMatrix(dim(k - 1), dim(k));
  return boundaries_[static_cast<std::size_t>(k - lowest_)];
}

std::string HomologyGroup::to_string() const {
  std::vector<std::string> parts;
  if (betti == 1) parts.push_back("Z");
  if (betti > 1) parts.push_back("Z^" + std::to_string(betti));
  for (const BigInt& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

bool HomologyTable::acyclic() const {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.is_zero(); });
}

nlohmann::ordered_json HomologyTable::to_json() const {
  nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
    for (const BigInt& t : groups[i].torsion) {
      if (t.fits_slong_p())
        torsion.push_back(t.get_si());
      else
        torsion.push_back(t.get_str());
    }
    degrees.push_back({{"q", lowest + static_cast<int>(i)}, {"betti", groups[i].betti}, {"torsion", torsion}});
  }
  return {{"degrees", degrees}};
}

std::string HomologyTable::to_text() const {
  std::ostringstream out;
  out << "   q  H_q\n";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::string q = std::to_string(lowest + static_cast<int>(i));
    out << std::string(q.size() < 4 ? 4 - q.size() : 0, ' ') << q << "  " << groups[i].to_string() << "\n";
  }
  return out.str();
}

HomologyGroup homology(const ChainComplex& c, int k) {
  if (k < c.lowest() || k > c.certified_top())
    throw std::out_of_range("homology: degree " + std::to_string(k) + " outside certified range [" +
                            std::to_string(c.lowest()) + ", " + std::to_string(c.certified_top()) + "]");
  const MatrixInvariants out = matrix_invariants(c.boundary(k));
  const MatrixInvariants in = matrix_invariants(c.boundary(k + 1));
  return {c.dim(k) - out.rank - in.rank, in.torsion};
}

HomologyTable homology(const ChainComplex& c) {
  HomologyTable table;
  table.lowest = c.lowest();
  if (c.certified_top() < c.lowest()) return table;
  std::vector<MatrixInvariants> inv;
  for (int k = c.lowest(); k <= c.certified_top() + 1; ++k) inv.push_back(matrix_invariants(c.boundary(k)));
  for (int k = c.lowest(); k <= c.certified_top(); ++k) {
    const std::size_t i = static_cast<std::size_t>(k - c.lowest());
    table.groups.push_back({c.dim(k) - inv[i].rank - inv[i + 1].rank, inv[i + 1].torsion});
  }
  return table;
}

SparseMatrix ChainMap::at(int k) const {
  if (k < lowest || k >= lowest + static_cast<int>(components.size())) return {};
  return components[static_cast<std::size_t>(k - lowest)];
}

namespace {

// Degrees where f is stored, intersected with the target's range.
bool stored(const ChainMap& f, int k) {
  return k >= f.lowest && k < f.lowest + static_cast<int>(f.components.size());
}

SparseMatrix map_or_zero(const ChainComplex& source, const ChainComplex& target, const ChainMap& f, int k) {
  if (stored(f, k)) return f.at(k);
  return SparseMatrix(target.dim(k), source.dim(k));
}

void place(SparseMatrix& dst, const SparseMatrix& src, std::size_t row_off, std::size_t col_off, int sign) {
  for (std::size_t c = 0; c < src.cols; ++c)
    for (const auto& [r, v] : src.columns[c]) dst.add(row_off + r, col_off + c, sign * v);
}

}  // namespace

bool is_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f) {
  const int lo = std::max(source.lowest(), target.lowest());
  const int hi = std::min(source.top(), target.top());
  for (int k = lo; k <= hi; ++k) {
    const SparseMatrix fk = map_or_zero(source, target, f, k);
    if (fk.rows != target.dim(k) || fk.cols != source.dim(k)) return false;
    if (k == lo) continue;
    const SparseMatrix below = map_or_zero(source, target, f, k - 1);
    if (multiply(below, source.boundary(k)).columns != multiply(target.boundary(k), fk).columns) return false;
  }
  return true;
}

ChainComplex mapping_cone(const ChainComplex& source, const ChainComplex& target, const ChainMap& f) {
  if (!is_chain_map(source, target, f)) throw std::logic_error("mapping_cone: not a chain map");
  const int lowest = std::min(target.lowest(), source.lowest() + 1);
  const int top = std::min(target.top(), source.top() + 1);
  const int certified = std::min(target.certified_top(), source.certified_top() + 1);
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> boundaries;
  for (int k = lowest; k <= top; ++k) {
    dims.push_back(target.dim(k) + source.dim(k - 1));
    const std::size_t rows = k == lowest ? 0 : target.dim(k - 1) + source.dim(k - 2);
    SparseMatrix d(rows, dims.back());
    if (k > lowest) {
      place(d, target.boundary(k), 0, 0, 1);
      place(d, map_or_zero(source, target, f, k - 1), 0, target.dim(k), 1);
      place(d, source.boundary(k - 1), target.dim(k - 1), target.dim(k), -1);
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(lowest, std::move(dims), std::move(boundaries), certified);
}

std::ptrdiff_t SimplicialChains::index_of(std::size_t q, const Cell& c) const {
  if (q >= basis.size()) return -1;
  const auto& b = basis[q];
  auto it = std::lower_bound(b.begin(), b.end(), c);
  if (it == b.end() || *it != c) return -1;
  return it - b.begin();
}

SimplicialChains normalized_chains(const TruncatedDihedralSet& x, bool pointed) {
  if (!x.closed_under_faces()) throw std::invalid_argument("normalized_chains: " + x.name() + " is not closed under faces");
  if (pointed && !x.basepoint()) throw std::invalid_argument("normalized_chains: " + x.name() + " has no basepoint");
  SimplicialChains out;
  out.pointed = pointed;
  const std::size_t depth = x.max_degree();
  out.basis.resize(depth + 1);
  for (std::size_t q = 0; q <= depth; ++q)
    for (const Cell& c : x.cells(q)) {
      if (q > 0 && x.is_degenerate(q, c)) continue;
      if (q == 0 && pointed && c == *x.basepoint()) continue;
      out.basis[q].push_back(c);
    }
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> boundaries;
  for (std::size_t q = 0; q <= depth; ++q) {
    dims.push_back(out.basis[q].size());
    SparseMatrix d(q == 0 ? 0 : out.basis[q - 1].size(), dims.back());
    if (q > 0)
      for (std::size_t j = 0; j < out.basis[q].size(); ++j)
        for (std::size_t i = 0; i <= q; ++i) {
          const std::ptrdiff_t row = out.index_of(q - 1, x.face(q, i, out.basis[q][j]));
          if (row >= 0) d.add(static_cast<std::size_t>(row), j, i % 2 == 0 ? 1 : -1);
        }
    boundaries.push_back(std::move(d));
  }
  out.complex = ChainComplex(0, std::move(dims), std::move(boundaries), static_cast<int>(depth) - 1);
  return out;
}

ChainMap induced_chain_map(const TruncatedDihedralSet& source, const SimplicialChains& source_chains,
                           const TruncatedDihedralSet& target, const SimplicialChains& target_chains,
                           const SimplicialMap& f) {
  ChainMap out;
  const std::size_t depth = std::min(source_chains.basis.size(), target_chains.basis.size());
  for (std::size_t q = 0; q < depth; ++q) {
    SparseMatrix m(target_chains.basis[q].size(), source_chains.basis[q].size());
    for (std::size_t j = 0; j < source_chains.basis[q].size(); ++j) {
      const Cell y = f.apply(q, source_chains.basis[q][j]);
      if (!target.tabulated(q, y))
        throw std::runtime_error("induced_chain_map: " + f.name + " sends a cell of " + source.name() +
                                 " outside the table of " + target.name() + " in degree " + std::to_string(q));
      const std::ptrdiff_t row = target_chains.index_of(q, y);
      if (row >= 0) m.add(static_cast<std::size_t>(row), j, 1);
    }
    out.components.push_back(std::move(m));
  }
  return out;
}

namespace {

CheckReport compare_part(const std::string& check, const std::string& part, const TruncatedDihedralSet& x,
                         const TruncatedDihedralSet& y, const SimplicialMap& f, std::size_t n) {
  const SimplicialChains cx = normalized_chains(x);
  const SimplicialChains cy = normalized_chains(y);
  const ChainComplex cone = mapping_cone(cx.complex, cy.complex, induced_chain_map(x, cx, y, cy, f));
  const HomologyTable hx = homology(cx.complex), hy = homology(cy.complex), hc = homology(cone);

  CheckReport report = CheckReport::pass(check + ":" + part);
  report.details = {{"source", hx.to_json()}, {"target", hy.to_json()}, {"cone", hc.to_json()}};
  for (int k = 0; k <= static_cast<int>(n); ++k) {
    if (!hc.at(k).is_zero()) {
      report.status = CheckStatus::kFail;
      report.witness = {{"part", part}, {"degree", k}, {"cone_homology", hc.at(k).to_string()}};
      return report;
    }
    if (!(hx.at(k) == hy.at(k))) {
      report.status = CheckStatus::kFail;
      report.witness = {{"part", part},
                        {"degree", k},
                        {"source_homology", hx.at(k).to_string()},
                        {"target_homology", hy.at(k).to_string()}};
      return report;
    }
  }
  return report;
}

}  // namespace

CheckReport z2_equivalence_certificate(const std::string& check, const TruncatedDihedralSet& source,
                                       const TruncatedDihedralSet& target, const SimplicialMap& f,
                                       std::size_t n) {
  const std::size_t need = 2 * n + 3;
  if (source.max_degree() < need || target.max_degree() < need)
    throw std::invalid_argument("z2_equivalence_certificate: depth " +
                                std::to_string(std::min(source.max_degree(), target.max_degree())) +
                                " below 2N+3 = " + std::to_string(need));
  CheckReport report = CheckReport::pass(check);
  absorb(report, compare_part(check, "underlying", source.truncated(n + 1), target.truncated(n + 1), f, n));
  absorb(report, compare_part(check, "fixed", fixed_points(segal_subdivide(source, n + 1)),
                              fixed_points(segal_subdivide(target, n + 1)), subdivide(f), n));
  report.details["certified_through"] = n;
  report.details["note"] = "homology isomorphism on underlying and subdivided fixed points; sufficient, not necessary";
  return report;
}

}  // namespace rthh
