#include "rthh/simplicial_checks.hpp"

#include <algorithm>
#include <stdexcept>

#include "rthh/monoid_checks.hpp"

namespace rthh {

namespace {

using nlohmann::ordered_json;

CellWindow l1_window(std::int64_t bound) { return CellWindow{bound, CellWindow::Norm::kL1}; }

std::vector<Vec> blocks_of(const Cell& c, std::size_t d, std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < n; ++k)
    out.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(k * d),
                     c.begin() + static_cast<std::ptrdiff_t>((k + 1) * d));
  return out;
}

Cell concat(const std::vector<Vec>& blocks) {
  Cell c;
  for (const Vec& b : blocks) c.insert(c.end(), b.begin(), b.end());
  return c;
}

// Block k of every entry split at column dp into a P part and a Q part.
std::pair<Cell, Cell> split_columns(const Cell& c, std::size_t dp, std::size_t dq) {
  Cell a, b;
  const std::size_t d = dp + dq;
  for (std::size_t k = 0; d && k < c.size() / d; ++k) {
    a.insert(a.end(), c.begin() + static_cast<std::ptrdiff_t>(k * d),
             c.begin() + static_cast<std::ptrdiff_t>(k * d + dp));
    b.insert(b.end(), c.begin() + static_cast<std::ptrdiff_t>(k * d + dp),
             c.begin() + static_cast<std::ptrdiff_t>((k + 1) * d));
  }
  return {a, b};
}

Cell merge_columns(const Cell& a, const Cell& b, std::size_t dp, std::size_t dq, std::size_t blocks) {
  Cell c;
  for (std::size_t k = 0; k < blocks; ++k) {
    c.insert(c.end(), a.begin() + static_cast<std::ptrdiff_t>(k * dp),
             a.begin() + static_cast<std::ptrdiff_t>((k + 1) * dp));
    c.insert(c.end(), b.begin() + static_cast<std::ptrdiff_t>(k * dq),
             b.begin() + static_cast<std::ptrdiff_t>((k + 1) * dq));
  }
  return c;
}

std::int64_t l1(const Cell& c) {
  std::int64_t s = 0;
  for (auto x : c) s += x < 0 ? -x : x;
  return s;
}

// Shared body of drep.4 and thrlog.8: the column split is an isomorphism
// from the nerve of P (+) Q onto the product of nerves.
CheckReport product_split_check(const std::string& check, const TruncatedDihedralSet& whole,
                                const TruncatedDihedralSet& left, const TruncatedDihedralSet& right,
                                std::size_t dp, std::size_t dq, std::int64_t window) {
  CheckReport report = CheckReport::pass(check);
  TruncatedDihedralSet target = product_l1(left, right, window);
  for (const auto* x : {&whole, &left, &right}) absorb(report, verify_relations(*x));
  absorb(report, verify_relations(target));
  SimplicialMap f{"split columns", [dp, dq](std::size_t, const Cell& c) {
                    auto [a, b] = split_columns(c, dp, dq);
                    return product_cell(a, b);
                  }};
  SimplicialMap g{"merge columns", [dp, dq](std::size_t q, const Cell& c) {
                    auto [a, b] = split_product_cell(c);
                    return merge_columns(a, b, dp, dq, q + 1);
                  }};
  absorb(report, check_simplicial_iso(check + ":iso", whole, target, f, g));
  return report;
}

}  // namespace

TruncatedDihedralSet drep22_pushout(const AffineMonoid& m, std::size_t max_degree, CellWindow window) {
  const std::size_t d = m.ambient_rank();
  // Only the operators are needed.
  auto t = tensor_interval(m, 0, window).shared_ops();
  // (z_0, ..., z_{q+1}) with extra p -> (z_0 + z_{q+1} + p; z_1..z_q).
  auto normalize = [d](std::size_t q, const Cell& z, const Vec& p) {
    auto b = blocks_of(z, d, q + 2);
    std::vector<Vec> out{add(add(b.front(), b.back()), p)};
    out.insert(out.end(), b.begin() + 1, b.end() - 1);
    return concat(out);
  };
  auto represent = [d](std::size_t q, const Cell& c) {
    auto b = blocks_of(c, d, q + 1);
    Vec a = b[0];
    b[0] = Vec(d, 0);
    b.push_back(Vec(d, 0));
    return std::make_pair(concat(b), a);
  };
  auto ops = std::make_shared<Operators>();
  ops->face = [t, normalize, represent](std::size_t q, std::size_t i, const Cell& c) {
    auto [z, a] = represent(q, c);
    return normalize(q - 1, t->face(q, i, z), a);
  };
  ops->degeneracy = [t, normalize, represent](std::size_t q, std::size_t i, const Cell& c) {
    auto [z, a] = represent(q, c);
    return normalize(q + 1, t->degeneracy(q, i, z), a);
  };
  ops->involution_kind = InvolutionKind::kReversing;
  ops->involution = [t, normalize, represent, m](std::size_t q, const Cell& c) {
    auto [z, a] = represent(q, c);
    return normalize(q, t->involution(q, z), m.involute(a));
  };
  ops->member = [m, d](std::size_t q, const Cell& c) {
    if (c.size() != d * (q + 1)) return false;
    for (const Vec& b : blocks_of(c, d, q + 1))
      if (!m.contains(b)) return false;
    return true;
  };
  // Same cell shape as the dihedral nerve window.
  const TruncatedDihedralSet shape = dihedral_nerve(m, max_degree, window);
  std::vector<std::vector<Cell>> cells;
  for (std::size_t q = 0; q <= max_degree; ++q) cells.push_back(shape.cells(q));
  return TruncatedDihedralSet("(" + m.describe() + ")(x)Delta^1_sigma (+)_{i#i*P} P", ops, std::move(cells));
}

CheckReport check_drep22(const AffineMonoid& m, std::size_t max_degree, std::int64_t window) {
  CheckReport report = CheckReport::pass("drep.2.2");
  const std::size_t d = m.ambient_rank();
  const CellWindow win = l1_window(window);
  const TruncatedDihedralSet pushout = drep22_pushout(m, max_degree, win);
  const TruncatedDihedralSet tensor = tensor_interval(m, max_degree, win);
  const TruncatedDihedralSet nerve = dihedral_nerve(m, max_degree, win);
  absorb(report, verify_relations(tensor));
  absorb(report, verify_relations(pushout));
  absorb(report, verify_relations(nerve));

  // Renormalizing any representative ((z), p) commutes with the operators:
  // the normal form is a map out of (M (x) Delta^1) x M and identifies
  // exactly the i_# i^* M-orbits.
  CheckReport quotient = CheckReport::pass("drep.2.2:normal-form");
  auto normalize = [d](std::size_t q, const Cell& z, const Vec& p) {
    auto b = blocks_of(z, d, q + 2);
    std::vector<Vec> out{add(add(b.front(), b.back()), p)};
    out.insert(out.end(), b.begin() + 1, b.end() - 1);
    return concat(out);
  };
  std::vector<Vec> extras{Vec(d, 0)};
  for (const Vec& g : m.generators()) extras.push_back(g);
  std::size_t evaluations = 0;
  auto expect = [&](const char* what, std::size_t q, const Cell& z, const Cell& lhs, const Cell& rhs) {
    ++evaluations;
    if (lhs == rhs || quotient.status == CheckStatus::kFail) return;
    quotient.status = CheckStatus::kFail;
    quotient.witness = {{"relation", what}, {"degree", q}, {"representative", z}, {"lhs", lhs}, {"rhs", rhs}};
  };
  for (std::size_t q = 0; q <= max_degree; ++q)
    for (const Cell& z : tensor.cells(q))
      for (const Vec& p : extras) {
        const Cell n = normalize(q, z, p);
        if (q >= 1)
          for (std::size_t i = 0; i <= q; ++i)
            expect("normalize d_i = d_i normalize", q, z, normalize(q - 1, tensor.face(q, i, z), p),
                   pushout.face(q, i, n));
        for (std::size_t i = 0; i <= q; ++i)
          expect("normalize s_i = s_i normalize", q, z, normalize(q + 1, tensor.degeneracy(q, i, z), p),
                 pushout.degeneracy(q, i, n));
        expect("normalize w = w normalize", q, z, normalize(q, tensor.involution(q, z), m.involute(p)),
               pushout.involution(q, n));
        // The i_# i^* M action (x, y) . z = (z_0 + x, ..., z_{q+1} + y) is
        // absorbed by the counit x + y.
        for (const Vec& x : extras) {
          Cell moved = z;
          for (std::size_t k = 0; k < d; ++k) moved[k] += x[k];
          expect("normalize((x,0).z, p) = normalize(z, x + p)", q, z, normalize(q, moved, p),
                 normalize(q, z, add(x, p)));
        }
      }
  quotient.details["evaluations"] = evaluations;
  absorb(report, quotient);

  auto reverse_tail = [d](std::size_t q, const Cell& c) {
    auto b = blocks_of(c, d, q + 1);
    std::reverse(b.begin() + 1, b.end());
    return concat(b);
  };
  SimplicialMap f{"(a; z) -> (a, z_q..z_1)", reverse_tail};
  SimplicialMap g{"(x) -> (x_0; x_q..x_1)", reverse_tail};
  absorb(report, check_simplicial_iso("drep.2.2:iso", pushout, nerve, f, g));
  report.details["monoid"] = m.describe();
  report.details["window"] = "l1<=" + std::to_string(window);
  return report;
}

CheckReport check_dih25(const AffineMonoid& m, std::size_t max_degree, std::int64_t window) {
  CheckReport report = CheckReport::pass("dih.25");
  const CellWindow win = l1_window(window);
  const TruncatedDihedralSet replete = replete_nerve(m, max_degree, win);
  const TruncatedDihedralSet split = replete_splitting(m, max_degree, win);
  absorb(report, verify_relations(replete));
  absorb(report, verify_relations(split));
  const std::size_t d = m.ambient_rank();
  absorb(report, check_simplicial_iso("dih.25:iso", replete, split, replete_to_splitting(d),
                                      splitting_to_replete(d)));
  report.details["monoid"] = m.describe();
  report.details["window"] = "l1<=" + std::to_string(window);
  return report;
}

CheckReport check_drep4(const AffineMonoid& p, const AffineMonoid& q, std::size_t max_degree,
                        std::int64_t window) {
  const CellWindow win = l1_window(window);
  CheckReport report = product_split_check(
      "drep.4", replete_nerve(direct_sum(p, q), max_degree, win), replete_nerve(p, max_degree, win),
      replete_nerve(q, max_degree, win), p.ambient_rank(), q.ambient_rank(), window);
  report.details["monoids"] = {p.describe(), q.describe()};
  report.details["window"] = "l1<=" + std::to_string(window);
  return report;
}

CheckReport check_thrlog8(const AffineMonoid& p, const AffineMonoid& q, std::size_t max_degree,
                          std::int64_t window) {
  const CellWindow win = l1_window(window);
  CheckReport report = product_split_check(
      "thrlog.8", dihedral_nerve(direct_sum(p, q), max_degree, win), dihedral_nerve(p, max_degree, win),
      dihedral_nerve(q, max_degree, win), p.ambient_rank(), q.ambient_rank(), window);
  report.details["monoids"] = {p.describe(), q.describe()};
  report.details["window"] = "l1<=" + std::to_string(window);
  return report;
}

CheckReport check_dih15(const AffineMonoid& m, std::size_t n, std::int64_t window) {
  if (!m.has_involution()) throw std::invalid_argument("check_dih15: monoid carries no involution");
  CheckReport report = CheckReport::pass("dih.15");
  const std::size_t d = m.ambient_rank();
  const CellWindow win = l1_window(window);
  const TruncatedDihedralSet resolution = repletion_resolution(m, 2 * n + 1, win);
  absorb(report, verify_relations(resolution));

  // The two maps out of the exactification and their composite.
  const TruncatedDihedralSet low = resolution.truncated(n);
  const ExactifiedMonoid ex = exactify(m);
  std::vector<Vec> carrier_cells;
  for (const Vec& v : ex.carrier.window_elements(window))
    if (l1(v) <= window) carrier_cells.push_back(v);
  const TruncatedDihedralSet exact = constant_object(ex.carrier, n, carrier_cells);
  const TruncatedDihedralSet split = replete_splitting(m, n, win);
  std::vector<Vec> base_cells;
  for (const Vec& v : m.window_elements(window))
    if (l1(v) <= window) base_cells.push_back(v);
  const TruncatedDihedralSet base = constant_object(m, n, base_cells);
  absorb(report, verify_relations(exact));
  absorb(report, verify_relations(split));
  absorb(report, check_simplicial_map("dih.15:ex->Q", exact, low, exactification_to_resolution(d)));
  absorb(report, check_simplicial_map("dih.15:Q->split", low, split, resolution_to_splitting(d)));
  absorb(report, check_simplicial_map("dih.15:Q->P", low, base, resolution_projection(d)));
  {
    CheckReport composite = CheckReport::pass("dih.15:composite");
    const SimplicialMap both = compose(resolution_to_splitting(d), exactification_to_resolution(d));
    for (std::size_t q = 0; q <= n && composite.passed(); ++q)
      for (const Cell& c : exact.cells(q)) {
        Cell expected(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d));
        expected.resize(d * (q + 1), 0);
        if (both.apply(q, c) != expected) {
          composite = CheckReport::fail("dih.15:composite", {{"degree", q}, {"cell", c}, {"image", both.apply(q, c)}});
          break;
        }
      }
    absorb(report, composite);
  }

  // (sd Q)^{Z/2} against the tuple description.
  const TruncatedDihedralSet fixed = fixed_points(segal_subdivide(resolution, n));
  auto q_ops = resolution.shared_ops();
  auto param_ops = std::make_shared<Operators>();
  param_ops->face = q_ops->face;
  param_ops->degeneracy = q_ops->degeneracy;
  param_ops->member = [q_ops, m, d](std::size_t q, const Cell& c) {
    if (!q_ops->member(q, c)) return false;
    Vec x(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d));
    return m.involute(x) == x;
  };
  std::vector<std::vector<Cell>> param_cells(n + 1);
  for (std::size_t q = 0; q <= n; ++q)
    for (const Cell& c : resolution.cells(q))
      if (param_ops->member(q, c)) param_cells[q].push_back(c);
  const TruncatedDihedralSet param("P^Z/2 x E(gp)", param_ops, std::move(param_cells));
  SimplicialMap describe{"(x; g) -> (x; g, w x - w g_q..w x - w g_0)", [m, d](std::size_t q, const Cell& c) {
                           auto b = blocks_of(c, d, q + 2);
                           const Vec wx = m.involute(b[0]);
                           for (std::size_t k = q + 1; k >= 1; --k) b.push_back(sub(wx, m.involute(b[k])));
                           return concat(b);
                         }};
  SimplicialMap first_half{"first half", [d](std::size_t q, const Cell& c) {
                             return Cell(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d * (q + 2)));
                           }};
  absorb(report, check_simplicial_iso("dih.15:fixed-points", param, fixed, describe, first_half));
  report.details["monoid"] = m.describe();
  report.details["window"] = "l1<=" + std::to_string(window);
  report.details["fixed_cells"] = fixed.total_size();
  return report;
}

CheckReport check_subdivided_interval(std::size_t n) {
  CheckReport report = CheckReport::pass("drep.1:sd");
  const TruncatedDihedralSet interval = interval_model(2 * n + 1);
  const TruncatedDihedralSet sd = segal_subdivide(interval, n);
  const TruncatedDihedralSet wedge = wedge_of_intervals_model(n);
  absorb(report, verify_relations(interval));
  absorb(report, verify_relations(sd));
  absorb(report, verify_relations(wedge));
  // The pair (a_k, a_{2q+1-k}) read from the outside in: 00 -> 0, 01 -> 1,
  // 11 -> 2.
  SimplicialMap f{"pairs", [](std::size_t q, const Cell& a) {
                    Cell out(q + 1);
                    for (std::size_t k = 0; k <= q; ++k) out[k] = a[k] + a[2 * q + 1 - k];
                    return out;
                  }};
  SimplicialMap g{"unpair", [](std::size_t q, const Cell& l) {
                    Cell a(2 * q + 2);
                    for (std::size_t k = 0; k <= q; ++k) {
                      a[k] = l[k] == 2 ? 1 : 0;
                      a[2 * q + 1 - k] = l[k] >= 1 ? 1 : 0;
                    }
                    return a;
                  }};
  absorb(report, check_simplicial_iso("drep.1:sd-interval", sd, wedge, f, g));

  const TruncatedDihedralSet circle_fixed = fixed_points(segal_subdivide(two_gon_model(2 * n + 1), n));
  CheckReport two = CheckReport::pass("drep.1:sd-two-gon-fixed");
  for (std::size_t q = 0; q <= n; ++q)
    if (circle_fixed.size(q) != 2) {
      two = CheckReport::fail(two.check, {{"degree", q}, {"fixed_cells", circle_fixed.cells(q)}});
      break;
    }
  absorb(report, two);
  return report;
}

}  // namespace rthh
