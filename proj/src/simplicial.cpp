#include "rthh/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rthh {

using nlohmann::ordered_json;

TruncatedDihedralSet::TruncatedDihedralSet(std::string name, std::shared_ptr<const Operators> ops,
                                           std::vector<std::vector<Cell>> cells,
                                           std::optional<Cell> basepoint)
    : name_(std::move(name)), ops_(std::move(ops)), cells_(std::move(cells)),
      basepoint_(std::move(basepoint)) {
  if (cells_.empty()) throw std::invalid_argument("TruncatedDihedralSet: no degrees");
  if (!ops_ || !ops_->face || !ops_->degeneracy || !ops_->member)
    throw std::invalid_argument("TruncatedDihedralSet: incomplete operators");
  if ((ops_->involution_kind == InvolutionKind::kNone) == static_cast<bool>(ops_->involution))
    throw std::invalid_argument("TruncatedDihedralSet: involution kind and formula disagree");
  for (auto& level : cells_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
}

std::size_t TruncatedDihedralSet::total_size() const {
  std::size_t n = 0;
  for (const auto& level : cells_) n += level.size();
  return n;
}

std::optional<std::size_t> TruncatedDihedralSet::index_of(std::size_t q, const Cell& c) const {
  if (q >= cells_.size()) return std::nullopt;
  const auto& level = cells_[q];
  auto it = std::lower_bound(level.begin(), level.end(), c);
  if (it == level.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::optional<Cell> TruncatedDihedralSet::basepoint(std::size_t q) const {
  if (!basepoint_) return std::nullopt;
  Cell c = *basepoint_;
  for (std::size_t k = 0; k < q; ++k) c = degeneracy(k, 0, c);
  return c;
}

bool TruncatedDihedralSet::closed_under_faces() const {
  for (std::size_t q = 1; q < cells_.size(); ++q)
    for (const Cell& c : cells_[q])
      for (std::size_t i = 0; i <= q; ++i)
        if (!tabulated(q - 1, face(q, i, c))) return false;
  return true;
}

bool TruncatedDihedralSet::is_degenerate(std::size_t q, const Cell& c) const {
  for (std::size_t i = 0; i < q; ++i)
    if (degeneracy(q - 1, i, face(q, i, c)) == c) return true;
  return false;
}

TruncatedDihedralSet TruncatedDihedralSet::renamed(std::string name) const {
  TruncatedDihedralSet out = *this;
  out.name_ = std::move(name);
  return out;
}

TruncatedDihedralSet TruncatedDihedralSet::with_basepoint(Cell vertex) const {
  TruncatedDihedralSet out = *this;
  out.basepoint_ = std::move(vertex);
  return out;
}

TruncatedDihedralSet TruncatedDihedralSet::truncated(std::size_t max_degree) const {
  if (max_degree > this->max_degree()) throw std::invalid_argument("truncated: degree too high");
  std::vector<std::vector<Cell>> cells(cells_.begin(), cells_.begin() + max_degree + 1);
  return TruncatedDihedralSet(name_, ops_, std::move(cells), basepoint_);
}

namespace {

struct RelationLog {
  CheckReport report;
  ordered_json counts = ordered_json::object();

  // Records one evaluation; keeps the first failure as witness.
  void expect(const char* relation, std::size_t q, const Cell& c, const Cell& lhs, const Cell& rhs) {
    auto& n = counts[relation];
    n = n.is_null() ? 1 : n.get<int>() + 1;
    if (lhs == rhs || report.status == CheckStatus::kFail) return;
    report.status = CheckStatus::kFail;
    report.witness = {{"relation", relation}, {"degree", q}, {"cell", c}, {"lhs", lhs}, {"rhs", rhs}};
  }
  void expect_member(const TruncatedDihedralSet& x, std::size_t q, const Cell& c, const char* what,
                     const Cell& source) {
    if (x.member(q, c)) return;
    if (report.status == CheckStatus::kFail) return;
    report.status = CheckStatus::kFail;
    report.witness = {{"relation", std::string("closure:") + what}, {"degree", q}, {"cell", source},
                      {"image", c}};
  }
};

Cell power(const TruncatedDihedralSet& x, std::size_t q, const Cell& c, std::size_t k) {
  Cell out = c;
  for (std::size_t j = 0; j < k; ++j) out = x.cyclic(q, out);
  return out;
}

}  // namespace

CheckReport verify_relations(const TruncatedDihedralSet& x) {
  RelationLog log{CheckReport::pass("relations:" + x.name())};
  const InvolutionKind kind = x.involution_kind();
  for (std::size_t q = 0; q <= x.max_degree(); ++q) {
    for (const Cell& c : x.cells(q)) {
      log.expect_member(x, q, c, "member", c);
      // Faces.
      if (q >= 1)
        for (std::size_t i = 0; i <= q; ++i) log.expect_member(x, q - 1, x.face(q, i, c), "face", c);
      if (q >= 2)
        for (std::size_t j = 1; j <= q; ++j)
          for (std::size_t i = 0; i < j; ++i)
            log.expect("d_i d_j = d_{j-1} d_i", q, c, x.face(q - 1, i, x.face(q, j, c)),
                       x.face(q - 1, j - 1, x.face(q, i, c)));
      // Degeneracies.
      for (std::size_t j = 0; j <= q; ++j) {
        const Cell sj = x.degeneracy(q, j, c);
        log.expect_member(x, q + 1, sj, "degeneracy", c);
        for (std::size_t i = 0; i <= q + 1; ++i) {
          const Cell lhs = x.face(q + 1, i, sj);
          if (i == j || i == j + 1)
            log.expect("d_j s_j = d_{j+1} s_j = id", q, c, lhs, c);
          else if (i < j)
            log.expect("d_i s_j = s_{j-1} d_i", q, c, lhs, x.degeneracy(q - 1, j - 1, x.face(q, i, c)));
          else
            log.expect("d_i s_j = s_j d_{i-1}", q, c, lhs, x.degeneracy(q - 1, j, x.face(q, i - 1, c)));
        }
        for (std::size_t i = 0; i <= j; ++i)
          log.expect("s_i s_j = s_{j+1} s_i", q, c, x.degeneracy(q + 1, i, sj),
                     x.degeneracy(q + 1, j + 1, x.degeneracy(q, i, c)));
      }
      // Involution.
      if (kind != InvolutionKind::kNone) {
        const Cell wc = x.involution(q, c);
        log.expect_member(x, q, wc, "involution", c);
        log.expect("w^2 = id", q, c, x.involution(q, wc), c);
        const bool rev = kind == InvolutionKind::kReversing;
        if (q >= 1)
          for (std::size_t i = 0; i <= q; ++i)
            log.expect(rev ? "d_i w = w d_{q-i}" : "d_i w = w d_i", q, c, x.face(q, i, wc),
                       x.involution(q - 1, x.face(q, rev ? q - i : i, c)));
        for (std::size_t i = 0; i <= q; ++i)
          log.expect(rev ? "s_i w = w s_{q-i}" : "s_i w = w s_i", q, c, x.degeneracy(q, i, wc),
                     x.involution(q + 1, x.degeneracy(q, rev ? q - i : i, c)));
      }
      // Cyclic operator.
      if (x.has_cyclic()) {
        const Cell tc = x.cyclic(q, c);
        log.expect_member(x, q, tc, "cyclic", c);
        log.expect("t^{q+1} = id", q, c, power(x, q, c, q + 1), c);
        if (q >= 1) {
          log.expect("d_0 t = d_q", q, c, x.face(q, 0, tc), x.face(q, q, c));
          for (std::size_t i = 1; i <= q; ++i)
            log.expect("d_i t = t d_{i-1}", q, c, x.face(q, i, tc), x.cyclic(q - 1, x.face(q, i - 1, c)));
        }
        log.expect("s_0 t = t^2 s_q", q, c, x.degeneracy(q, 0, tc),
                   power(x, q + 1, x.degeneracy(q, q, c), 2));
        for (std::size_t i = 1; i <= q; ++i)
          log.expect("s_i t = t s_{i-1}", q, c, x.degeneracy(q, i, tc),
                     x.cyclic(q + 1, x.degeneracy(q, i - 1, c)));
        if (kind == InvolutionKind::kReversing)
          log.expect("w t w = t^{-1}", q, c, x.cyclic(q, x.involution(q, x.cyclic(q, x.involution(q, c)))),
                     c);
      }
    }
  }
  CheckReport out = std::move(log.report);
  out.details["object"] = x.name();
  out.details["max_degree"] = x.max_degree();
  out.details["cells"] = x.total_size();
  out.details["evaluations"] = std::move(log.counts);
  return out;
}

Cell product_cell(const Cell& a, const Cell& b) {
  Cell c;
  c.reserve(a.size() + b.size() + 1);
  c.push_back(static_cast<std::int64_t>(a.size()));
  c.insert(c.end(), a.begin(), a.end());
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

std::pair<Cell, Cell> split_product_cell(const Cell& c) {
  if (c.empty() || c[0] < 0 || static_cast<std::size_t>(c[0]) + 1 > c.size())
    throw std::invalid_argument("split_product_cell: malformed cell");
  auto mid = c.begin() + 1 + c[0];
  return {Cell(c.begin() + 1, mid), Cell(mid, c.end())};
}

namespace {

std::int64_t cell_l1(const Cell& c) {
  std::int64_t s = 0;
  for (std::int64_t v : c) s += v < 0 ? -v : v;
  return s;
}

using PairTable = std::function<std::vector<std::vector<Cell>>(const TruncatedDihedralSet&,
                                                               const TruncatedDihedralSet&)>;

TruncatedDihedralSet product_with(const TruncatedDihedralSet& x, const TruncatedDihedralSet& y,
                                  const PairTable& table) {
  if (x.max_degree() != y.max_degree()) throw std::invalid_argument("product: degree caps differ");
  if (x.involution_kind() != y.involution_kind())
    throw std::invalid_argument("product: involution kinds differ");
  auto a = x.shared_ops();
  auto b = y.shared_ops();
  auto ops = std::make_shared<Operators>();
  ops->face = [a, b](std::size_t q, std::size_t i, const Cell& c) {
    auto [u, v] = split_product_cell(c);
    return product_cell(a->face(q, i, u), b->face(q, i, v));
  };
  ops->degeneracy = [a, b](std::size_t q, std::size_t i, const Cell& c) {
    auto [u, v] = split_product_cell(c);
    return product_cell(a->degeneracy(q, i, u), b->degeneracy(q, i, v));
  };
  ops->involution_kind = x.involution_kind();
  if (x.has_involution())
    ops->involution = [a, b](std::size_t q, const Cell& c) {
      auto [u, v] = split_product_cell(c);
      return product_cell(a->involution(q, u), b->involution(q, v));
    };
  if (x.has_cyclic() && y.has_cyclic())
    ops->cyclic = [a, b](std::size_t q, const Cell& c) {
      auto [u, v] = split_product_cell(c);
      return product_cell(a->cyclic(q, u), b->cyclic(q, v));
    };
  ops->member = [a, b](std::size_t q, const Cell& c) {
    if (c.empty() || c[0] < 0 || static_cast<std::size_t>(c[0]) + 1 > c.size()) return false;
    auto [u, v] = split_product_cell(c);
    return a->member(q, u) && b->member(q, v);
  };
  std::optional<Cell> base;
  if (x.basepoint() && y.basepoint()) base = product_cell(*x.basepoint(), *y.basepoint());
  return TruncatedDihedralSet(x.name() + " x " + y.name(), ops, table(x, y), base);
}

}  // namespace

TruncatedDihedralSet product(const TruncatedDihedralSet& x, const TruncatedDihedralSet& y,
                             const PairFilter& keep) {
  return product_with(x, y, [&keep](const TruncatedDihedralSet& x, const TruncatedDihedralSet& y) {
    std::vector<std::vector<Cell>> cells(x.max_degree() + 1);
    for (std::size_t q = 0; q <= x.max_degree(); ++q)
      for (const Cell& u : x.cells(q))
        for (const Cell& v : y.cells(q))
          if (!keep || keep(u, v)) cells[q].push_back(product_cell(u, v));
    return cells;
  });
}

TruncatedDihedralSet product_l1(const TruncatedDihedralSet& x, const TruncatedDihedralSet& y,
                                std::int64_t budget) {
  return product_with(x, y, [budget](const TruncatedDihedralSet& x, const TruncatedDihedralSet& y) {
    std::vector<std::vector<Cell>> cells(x.max_degree() + 1);
    if (budget < 0) return cells;
    for (std::size_t q = 0; q <= x.max_degree(); ++q) {
      std::vector<std::vector<const Cell*>> buckets(budget + 1);
      for (const Cell& v : y.cells(q)) {
        const std::int64_t w = cell_l1(v);
        if (w <= budget) buckets[w].push_back(&v);
      }
      for (const Cell& u : x.cells(q)) {
        const std::int64_t w = cell_l1(u);
        for (std::int64_t r = 0; r + w <= budget; ++r)
          for (const Cell* v : buckets[r]) cells[q].push_back(product_cell(u, *v));
      }
    }
    return cells;
  });
}

TruncatedDihedralSet segal_subdivide(const TruncatedDihedralSet& x, std::size_t n) {
  if (x.involution_kind() == InvolutionKind::kCommuting)
    throw std::invalid_argument("segal_subdivide: expects a real (reversing) involution");
  if (x.max_degree() < 2 * n + 1)
    throw std::invalid_argument("segal_subdivide: truncation depth " + std::to_string(x.max_degree()) +
                                " below 2N+1 = " + std::to_string(2 * n + 1));
  auto a = x.shared_ops();
  auto ops = std::make_shared<Operators>();
  ops->face = [a](std::size_t q, std::size_t i, const Cell& c) {
    return a->face(2 * q, i, a->face(2 * q + 1, 2 * q + 1 - i, c));
  };
  ops->degeneracy = [a](std::size_t q, std::size_t i, const Cell& c) {
    return a->degeneracy(2 * q + 2, i, a->degeneracy(2 * q + 1, 2 * q + 1 - i, c));
  };
  if (x.has_involution()) {
    ops->involution_kind = InvolutionKind::kCommuting;
    ops->involution = [a](std::size_t q, const Cell& c) { return a->involution(2 * q + 1, c); };
  }
  ops->member = [a](std::size_t q, const Cell& c) { return a->member(2 * q + 1, c); };
  std::vector<std::vector<Cell>> cells(n + 1);
  for (std::size_t q = 0; q <= n; ++q) cells[q] = x.cells(2 * q + 1);
  std::optional<Cell> base;
  if (x.basepoint()) base = x.basepoint(1);
  return TruncatedDihedralSet("sd(" + x.name() + ")", ops, std::move(cells), base);
}

TruncatedDihedralSet fixed_points(const TruncatedDihedralSet& x) {
  if (x.involution_kind() == InvolutionKind::kReversing)
    throw std::invalid_argument("fixed_points: reversing involution; subdivide first");
  if (!x.has_involution()) return x.renamed(x.name() + "^Z/2");
  auto a = x.shared_ops();
  auto ops = std::make_shared<Operators>();
  ops->face = a->face;
  ops->degeneracy = a->degeneracy;
  ops->member = [a](std::size_t q, const Cell& c) { return a->member(q, c) && a->involution(q, c) == c; };
  std::vector<std::vector<Cell>> cells(x.max_degree() + 1);
  for (std::size_t q = 0; q <= x.max_degree(); ++q)
    for (const Cell& c : x.cells(q))
      if (x.involution(q, c) == c) cells[q].push_back(c);
  std::optional<Cell> base = x.basepoint();
  if (base && x.involution(0, *base) != *base) base.reset();
  return TruncatedDihedralSet(x.name() + "^Z/2", ops, std::move(cells), base);
}

TruncatedDihedralSet underlying(const TruncatedDihedralSet& x) {
  auto a = x.shared_ops();
  auto ops = std::make_shared<Operators>();
  ops->face = a->face;
  ops->degeneracy = a->degeneracy;
  ops->cyclic = a->cyclic;
  ops->member = a->member;
  std::vector<std::vector<Cell>> cells;
  for (std::size_t q = 0; q <= x.max_degree(); ++q) cells.push_back(x.cells(q));
  return TruncatedDihedralSet(x.name(), ops, std::move(cells), x.basepoint());
}

SimplicialMap identity_map() {
  return {"id", [](std::size_t, const Cell& c) { return c; }};
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  auto f = outer.apply;
  auto g = inner.apply;
  return {outer.name + " o " + inner.name, [f, g](std::size_t q, const Cell& c) { return f(q, g(q, c)); }};
}

SimplicialMap subdivide(const SimplicialMap& f) {
  auto g = f.apply;
  return {"sd(" + f.name + ")", [g](std::size_t q, const Cell& c) { return g(2 * q + 1, c); }};
}

SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g) {
  auto a = f.apply;
  auto b = g.apply;
  return {f.name + " x " + g.name, [a, b](std::size_t q, const Cell& c) {
            auto [u, v] = split_product_cell(c);
            return product_cell(a(q, u), b(q, v));
          }};
}

namespace {

struct MapLog {
  CheckReport report;
  std::size_t evaluations = 0;

  void expect(const char* what, std::size_t q, const Cell& c, const Cell& lhs, const Cell& rhs) {
    ++evaluations;
    if (lhs == rhs || report.status == CheckStatus::kFail) return;
    report.status = CheckStatus::kFail;
    report.witness = {{"relation", what}, {"degree", q}, {"cell", c}, {"lhs", lhs}, {"rhs", rhs}};
  }
  void expect_true(const char* what, std::size_t q, const Cell& c, bool ok) {
    ++evaluations;
    if (ok || report.status == CheckStatus::kFail) return;
    report.status = CheckStatus::kFail;
    report.witness = {{"relation", what}, {"degree", q}, {"cell", c}};
  }
};

void check_commutation(MapLog& log, const TruncatedDihedralSet& source,
                       const TruncatedDihedralSet& target, const SimplicialMap& f) {
  const bool inv = source.has_involution() && target.has_involution();
  const bool cyc = source.has_cyclic() && target.has_cyclic();
  for (std::size_t q = 0; q <= source.max_degree(); ++q)
    for (const Cell& c : source.cells(q)) {
      const Cell fc = f.apply(q, c);
      log.expect_true("image is a target cell", q, c, target.member(q, fc));
      if (q >= 1)
        for (std::size_t i = 0; i <= q; ++i)
          log.expect("f d_i = d_i f", q, c, f.apply(q - 1, source.face(q, i, c)), target.face(q, i, fc));
      for (std::size_t i = 0; i <= q; ++i)
        log.expect("f s_i = s_i f", q, c, f.apply(q + 1, source.degeneracy(q, i, c)),
                   target.degeneracy(q, i, fc));
      if (inv) log.expect("f w = w f", q, c, f.apply(q, source.involution(q, c)), target.involution(q, fc));
      if (cyc) log.expect("f t = t f", q, c, f.apply(q, source.cyclic(q, c)), target.cyclic(q, fc));
    }
}

}  // namespace

CheckReport check_simplicial_map(const std::string& check, const TruncatedDihedralSet& source,
                                 const TruncatedDihedralSet& target, const SimplicialMap& f) {
  MapLog log{CheckReport::pass(check)};
  check_commutation(log, source, target, f);
  CheckReport out = std::move(log.report);
  out.details["map"] = f.name;
  out.details["source"] = source.name();
  out.details["target"] = target.name();
  out.details["source_cells"] = source.total_size();
  out.details["evaluations"] = log.evaluations;
  return out;
}

CheckReport check_simplicial_iso(const std::string& check, const TruncatedDihedralSet& source,
                                 const TruncatedDihedralSet& target, const SimplicialMap& f,
                                 const SimplicialMap& g) {
  MapLog log{CheckReport::pass(check)};
  if (source.max_degree() != target.max_degree())
    throw std::invalid_argument("check_simplicial_iso: degree caps differ");
  check_commutation(log, source, target, f);
  for (std::size_t q = 0; q <= source.max_degree(); ++q) {
    for (const Cell& c : source.cells(q)) log.expect("g f = id", q, c, g.apply(q, f.apply(q, c)), c);
    for (const Cell& t : target.cells(q)) {
      const Cell gt = g.apply(q, t);
      log.expect_true("preimage is a source cell", q, t, source.member(q, gt));
      log.expect("f g = id", q, t, f.apply(q, gt), t);
    }
  }
  CheckReport out = std::move(log.report);
  out.details["map"] = f.name;
  out.details["source"] = source.name();
  out.details["target"] = target.name();
  out.details["source_cells"] = source.total_size();
  out.details["target_cells"] = target.total_size();
  out.details["evaluations"] = log.evaluations;
  return out;
}

namespace {

std::shared_ptr<Operators> vertex_sequence_ops(std::function<bool(const Cell&)> shape,
                                               InvolutionKind kind, Operators::Unary involution) {
  auto ops = std::make_shared<Operators>();
  ops->face = [](std::size_t, std::size_t i, const Cell& c) {
    Cell out = c;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  };
  ops->degeneracy = [](std::size_t, std::size_t i, const Cell& c) {
    Cell out = c;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), c[i]);
    return out;
  };
  ops->involution_kind = kind;
  ops->involution = std::move(involution);
  ops->member = [shape](std::size_t q, const Cell& c) { return c.size() == q + 1 && shape(c); };
  return ops;
}

// All sequences of length q+1 over the given labels accepted by shape.
std::vector<std::vector<Cell>> enumerate_sequences(std::size_t max_degree, const Cell& labels,
                                                   const std::function<bool(const Cell&)>& shape) {
  std::vector<std::vector<Cell>> cells(max_degree + 1);
  for (std::size_t q = 0; q <= max_degree; ++q) {
    std::vector<std::size_t> idx(q + 1, 0);
    for (;;) {
      Cell c(q + 1);
      for (std::size_t k = 0; k <= q; ++k) c[k] = labels[idx[k]];
      if (shape(c)) cells[q].push_back(c);
      std::size_t k = 0;
      while (k <= q && ++idx[k] == labels.size()) idx[k++] = 0;
      if (k > q) break;
    }
  }
  return cells;
}

bool nondecreasing(const Cell& c) { return std::is_sorted(c.begin(), c.end()); }
bool nonincreasing(const Cell& c) { return std::is_sorted(c.rbegin(), c.rend()); }

}  // namespace

TruncatedDihedralSet point_model(std::size_t max_degree) {
  auto shape = [](const Cell& c) { return std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; }); };
  auto ops = vertex_sequence_ops(shape, InvolutionKind::kReversing, [](std::size_t, const Cell& c) { return c; });
  ops->cyclic = [](std::size_t, const Cell& c) { return c; };
  return TruncatedDihedralSet("pt", ops, enumerate_sequences(max_degree, {0}, shape), Cell{0});
}

TruncatedDihedralSet interval_model(std::size_t max_degree) {
  auto shape = [](const Cell& c) {
    return nondecreasing(c) && std::all_of(c.begin(), c.end(), [](auto v) { return v == 0 || v == 1; });
  };
  auto ops = vertex_sequence_ops(shape, InvolutionKind::kReversing, [](std::size_t, const Cell& c) {
    Cell out(c.rbegin(), c.rend());
    for (auto& v : out) v = 1 - v;
    return out;
  });
  return TruncatedDihedralSet("Delta^1_sigma", ops, enumerate_sequences(max_degree, {0, 1}, shape));
}

TruncatedDihedralSet two_gon_model(std::size_t max_degree) {
  auto shape = [](const Cell& c) {
    return (nondecreasing(c) || nonincreasing(c)) &&
           std::all_of(c.begin(), c.end(), [](auto v) { return v == 0 || v == 1; });
  };
  auto ops = vertex_sequence_ops(shape, InvolutionKind::kReversing,
                                 [](std::size_t, const Cell& c) { return Cell(c.rbegin(), c.rend()); });
  return TruncatedDihedralSet("S^sigma", ops, enumerate_sequences(max_degree, {0, 1}, shape));
}

TruncatedDihedralSet wedge_of_intervals_model(std::size_t max_degree) {
  auto shape = [](const Cell& c) {
    bool low = std::all_of(c.begin(), c.end(), [](auto v) { return v == 0 || v == 1; });
    bool high = std::all_of(c.begin(), c.end(), [](auto v) { return v == 1 || v == 2; });
    return (low && nonincreasing(c)) || (high && nondecreasing(c));
  };
  auto ops = vertex_sequence_ops(shape, InvolutionKind::kCommuting, [](std::size_t, const Cell& c) {
    Cell out = c;
    for (auto& v : out) v = 2 - v;
    return out;
  });
  return TruncatedDihedralSet("Delta^1 |_|_1 Delta^1", ops, enumerate_sequences(max_degree, {0, 1, 2}, shape));
}

TruncatedDihedralSet two_points_model(std::size_t max_degree) {
  auto shape = [](const Cell& c) {
    return !c.empty() && (c[0] == 0 || c[0] == 1) &&
           std::all_of(c.begin(), c.end(), [&](auto v) { return v == c[0]; });
  };
  auto ops = vertex_sequence_ops(shape, InvolutionKind::kCommuting, [](std::size_t, const Cell& c) { return c; });
  return TruncatedDihedralSet("S^0", ops, enumerate_sequences(max_degree, {0, 1}, shape));
}

ordered_json to_json(const TruncatedDihedralSet& x) {
  auto lookup = [&](std::size_t q, const Cell& c) -> ordered_json {
    auto i = x.index_of(q, c);
    return i ? ordered_json(*i) : ordered_json(nullptr);
  };
  ordered_json degrees = ordered_json::array();
  for (std::size_t q = 0; q <= x.max_degree(); ++q) {
    ordered_json level = {{"q", q}, {"cells", x.cells(q)}};
    ordered_json faces = ordered_json::array(), degens = ordered_json::array();
    ordered_json inv = ordered_json::array(), cyc = ordered_json::array();
    for (const Cell& c : x.cells(q)) {
      ordered_json f = ordered_json::array(), s = ordered_json::array();
      if (q >= 1)
        for (std::size_t i = 0; i <= q; ++i) f.push_back(lookup(q - 1, x.face(q, i, c)));
      for (std::size_t i = 0; i <= q; ++i) s.push_back(lookup(q + 1, x.degeneracy(q, i, c)));
      faces.push_back(std::move(f));
      degens.push_back(std::move(s));
      if (x.has_involution()) inv.push_back(lookup(q, x.involution(q, c)));
      if (x.has_cyclic()) cyc.push_back(lookup(q, x.cyclic(q, c)));
    }
    level["faces"] = std::move(faces);
    level["degeneracies"] = std::move(degens);
    if (x.has_involution()) level["involution"] = std::move(inv);
    if (x.has_cyclic()) level["cyclic"] = std::move(cyc);
    degrees.push_back(std::move(level));
  }
  static const char* kinds[] = {"none", "reversing", "commuting"};
  ordered_json out = {{"name", x.name()},
                      {"max_degree", x.max_degree()},
                      {"involution", kinds[static_cast<int>(x.involution_kind())]},
                      {"cyclic", x.has_cyclic()}};
  if (x.basepoint()) out["basepoint"] = *x.basepoint();
  out["degrees"] = std::move(degrees);
  return out;
}

}  // namespace rthh
