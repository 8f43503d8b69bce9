#include "rthh/cube.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

namespace rthh {

namespace {

bool has(Subset j, std::size_t i) { return (j >> i) & 1u; }

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

// Sign of the direction-i map out of J: (-1)^{#{j not in J, j < i}}.
int edge_sign(Subset j, std::size_t i) {
  int count = 0;
  for (std::size_t t = 0; t < i; ++t)
    if (!has(j, t)) ++count;
  return parity_sign(count);
}

SparseMatrix component(const ChainCube& cube, Subset j, std::size_t i, int k) {
  const ChainMap& f = cube.edges[j][i];
  if (k >= f.lowest && k < f.lowest + static_cast<int>(f.components.size())) return f.at(k);
  return SparseMatrix(cube.vertices[j | (1u << i)].dim(k), cube.vertices[j].dim(k));
}

void place(SparseMatrix& dst, const SparseMatrix& src, std::size_t row_off, std::size_t col_off, int sign) {
  for (std::size_t c = 0; c < src.cols; ++c)
    for (const auto& [r, v] : src.columns[c]) dst.add(row_off + r, col_off + c, sign * v);
}

ChainComplex total_complex(const ChainCube& cube, bool cofiber) {
  const CheckReport valid = validate_functoriality(cube);
  if (!valid.passed()) throw std::logic_error("total complex of an invalid cube: " + valid.witness.dump());
  const std::size_t d = cube.dimension;
  const Subset count = 1u << d;
  auto shift = [&](Subset j) {
    const int size = std::popcount(j);
    return cofiber ? static_cast<int>(d) - size : -size;
  };
  int lowest = INT32_MAX, top = INT32_MAX, certified = INT32_MAX;
  for (Subset j = 0; j < count; ++j) {
    lowest = std::min(lowest, cube.vertices[j].lowest() + shift(j));
    top = std::min(top, cube.vertices[j].top() + shift(j));
    certified = std::min(certified, cube.vertices[j].certified_top() + shift(j));
  }
  if (top < lowest) return ChainComplex::zero(lowest, lowest - 1, lowest - 1);

  // offsets[k - lowest][J]: position of C(J)_{k - shift(J)} inside Tot_k.
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> dims;
  for (int k = lowest; k <= top; ++k) {
    std::vector<std::size_t> off(count);
    std::size_t total = 0;
    for (Subset j = 0; j < count; ++j) {
      off[j] = total;
      total += cube.vertices[j].dim(k - shift(j));
    }
    offsets.push_back(std::move(off));
    dims.push_back(total);
  }

  std::vector<SparseMatrix> boundaries;
  for (int k = lowest; k <= top; ++k) {
    const std::size_t at = static_cast<std::size_t>(k - lowest);
    SparseMatrix d_k(at == 0 ? 0 : dims[at - 1], dims[at]);
    if (at > 0)
      for (Subset j = 0; j < count; ++j) {
        const int deg = k - shift(j);
        place(d_k, cube.vertices[j].boundary(deg), offsets[at - 1][j], offsets[at][j], parity_sign(shift(j)));
        for (std::size_t i = 0; i < d; ++i) {
          if (has(j, i)) continue;
          const Subset to = j | (1u << i);
          place(d_k, component(cube, j, i, deg), offsets[at - 1][to], offsets[at][j], edge_sign(j, i));
        }
      }
    boundaries.push_back(std::move(d_k));
  }
  return ChainComplex(lowest, std::move(dims), std::move(boundaries), std::min(certified, top));
}

nlohmann::ordered_json vec_json(const Vec& x) { return nlohmann::ordered_json(x); }

}  // namespace

CheckReport validate_functoriality(const ChainCube& cube) {
  CheckReport report = CheckReport::pass("cube-functoriality");
  const std::size_t d = cube.dimension;
  const Subset count = 1u << d;
  if (cube.vertices.size() != count || cube.edges.size() != count)
    return CheckReport::fail("cube-functoriality", {{"reason", "expected 2^d vertices and edge lists"}});
  for (Subset j = 0; j < count; ++j) {
    if (cube.edges[j].size() != d)
      return CheckReport::fail("cube-functoriality", {{"subset", j}, {"reason", "expected d edge slots"}});
    const ChainComplex& src = cube.vertices[j];
    for (std::size_t i = 0; i < d; ++i) {
      if (has(j, i)) continue;
      const ChainComplex& dst = cube.vertices[j | (1u << i)];
      ChainMap full;
      full.lowest = src.lowest();
      for (int k = src.lowest(); k <= src.top(); ++k) full.components.push_back(component(cube, j, i, k));
      if (!is_chain_map(src, dst, full))
        return CheckReport::fail("cube-functoriality", {{"subset", j}, {"direction", i}, {"reason", "not a chain map"}});
      for (std::size_t i2 = i + 1; i2 < d; ++i2) {
        if (has(j, i2)) continue;
        for (int k = src.lowest(); k <= src.top(); ++k) {
          const auto a = multiply(component(cube, j | (1u << i), i2, k), component(cube, j, i, k));
          const auto b = multiply(component(cube, j | (1u << i2), i, k), component(cube, j, i2, k));
          if (a.columns != b.columns)
            return CheckReport::fail("cube-functoriality",
                                     {{"subset", j}, {"square", {i, i2}}, {"degree", k}, {"reason", "square does not commute"}});
        }
      }
    }
  }
  return report;
}

ChainComplex total_cofiber(const ChainCube& cube) { return total_complex(cube, true); }
ChainComplex total_fiber(const ChainCube& cube) { return total_complex(cube, false); }

CheckReport validate_functoriality(const SimplicialCube& cube) {
  const std::string name = "cube-functoriality";
  const std::size_t d = cube.dimension;
  const Subset count = 1u << d;
  if (cube.vertices.size() != count || cube.edges.size() != count)
    return CheckReport::fail(name, {{"reason", "expected 2^d vertices and edge lists"}});
  for (Subset j = 0; j < count; ++j) {
    if (!cube.vertices[j]) continue;
    const TruncatedDihedralSet& x = *cube.vertices[j];
    for (std::size_t i = 0; i < d; ++i) {
      if (has(j, i)) continue;
      const Subset to = j | (1u << i);
      if (!cube.vertices[to])
        return CheckReport::fail(name, {{"subset", j}, {"direction", i}, {"reason", "map into an empty vertex"}});
      CheckReport edge = check_simplicial_map(name, x, *cube.vertices[to], cube.edges[j][i]);
      if (!edge.passed()) {
        edge.witness = {{"subset", j}, {"direction", i}, {"map", edge.witness}};
        return edge;
      }
      for (std::size_t i2 = i + 1; i2 < d; ++i2) {
        if (has(j, i2)) continue;
        const auto& a1 = cube.edges[j][i].apply;
        const auto& a2 = cube.edges[to][i2].apply;
        const auto& b1 = cube.edges[j][i2].apply;
        const auto& b2 = cube.edges[j | (1u << i2)][i].apply;
        for (std::size_t q = 0; q <= x.max_degree(); ++q)
          for (const Cell& c : x.cells(q))
            if (a2(q, a1(q, c)) != b2(q, b1(q, c)))
              return CheckReport::fail(name, {{"subset", j}, {"square", {i, i2}}, {"degree", q}, {"cell", c}});
      }
    }
  }
  return CheckReport::pass(name);
}

ChainCube chains_of(const SimplicialCube& cube, CubePart part, std::size_t n) {
  const Subset count = 1u << cube.dimension;
  std::vector<std::optional<TruncatedDihedralSet>> objects(count);
  std::vector<std::optional<SimplicialChains>> chains(count);
  ChainCube out;
  out.dimension = cube.dimension;
  for (Subset j = 0; j < count; ++j) {
    if (!cube.vertices[j]) {
      out.vertices.push_back(ChainComplex::zero(0, static_cast<int>(n) + 1, static_cast<int>(n)));
      continue;
    }
    objects[j] = part == CubePart::kUnderlying ? cube.vertices[j]->truncated(n + 1)
                                               : fixed_points(segal_subdivide(*cube.vertices[j], n + 1));
    chains[j] = normalized_chains(*objects[j]);
    out.vertices.push_back(chains[j]->complex);
  }
  out.edges.assign(count, std::vector<ChainMap>(cube.dimension));
  for (Subset j = 0; j < count; ++j)
    for (std::size_t i = 0; i < cube.dimension; ++i) {
      if (has(j, i)) continue;
      const Subset to = j | (1u << i);
      ChainMap& f = out.edges[j][i];
      if (!objects[j]) {
        for (int k = 0; k <= static_cast<int>(n) + 1; ++k) f.components.emplace_back(out.vertices[to].dim(k), 0);
        continue;
      }
      const SimplicialMap g = part == CubePart::kUnderlying ? cube.edges[j][i] : subdivide(cube.edges[j][i]);
      f = induced_chain_map(*objects[j], *chains[j], *objects[to], *chains[to], g);
    }
  return out;
}

bool in_p(const Vec& x, Subset j) {
  for (std::size_t i = 0; i <= x.size(); ++i) {
    if (!has(j, i)) continue;
    if (i == 0) {
      std::int64_t sum = 0;
      for (auto v : x) sum += v;
      if (sum > 0) return false;
    } else if (x[i - 1] < 0) {
      return false;
    }
  }
  return true;
}

PhiCell phi_cell(std::size_t n, Subset subset, const Vec& x) {
  if (x.size() != n) throw std::invalid_argument("phi_cell: x must have n coordinates");
  const Subset all = (1u << (n + 1)) - 1;
  PhiCell cell{subset, x, !in_p(x, all & ~subset), {}};
  for (std::size_t i = 1; i <= n; ++i) cell.point_factor.push_back(x[i - 1] == 0 && has(subset, i));
  return cell;
}

std::size_t homeomorphic_direction(const Vec& x) {
  for (std::size_t i = 1; i <= x.size(); ++i)
    if (x[i - 1] > 0) return i;
  return 0;
}

SimplicialCube build_phi_cube(std::size_t n, const Vec& x, std::size_t depth, PhiVariant variant) {
  if (n != 1 && n != 2) throw std::invalid_argument("build_phi_cube: n must be 1 or 2");
  if (x.size() != n) throw std::invalid_argument("build_phi_cube: x must have n coordinates");
  const SimplicialMap id = identity_map();
  const SimplicialMap collapse{"collapse", [](std::size_t q, const Cell&) { return Cell(q + 1, 0); }};

  SimplicialCube cube;
  cube.dimension = n + 1;
  const Subset count = 1u << cube.dimension;
  std::vector<PhiCell> cells;
  for (Subset j = 0; j < count; ++j) {
    cells.push_back(phi_cell(n, j, x));
    const PhiCell& cell = cells.back();
    if (cell.empty) {
      cube.vertices.emplace_back(std::nullopt);
      continue;
    }
    std::vector<TruncatedDihedralSet> factors;
    for (bool point : cell.point_factor) factors.push_back(point ? point_model(depth) : two_gon_model(depth));
    TruncatedDihedralSet v = n == 1 ? factors[0] : product(factors[0], factors[1]);
    std::string label = "Phi({";
    for (std::size_t i = 0; i <= n; ++i)
      if (has(j, i)) label += (label.back() == '{' ? "" : ",") + std::to_string(i);
    cube.vertices.emplace_back(v.renamed(label + "};" + to_string(x) + ")"));
  }
  cube.edges.assign(count, std::vector<SimplicialMap>(cube.dimension));
  for (Subset j = 0; j < count; ++j)
    for (std::size_t i = 0; i < cube.dimension; ++i) {
      if (has(j, i)) continue;
      const PhiCell& to = cells[j | (1u << i)];
      std::vector<SimplicialMap> parts;
      for (std::size_t t = 0; t < n; ++t) {
        const bool collapsed = (variant == PhiVariant::kDirectionZeroCollapsed && i == 0) ||
                               (!cells[j].point_factor[t] && to.point_factor[t]);
        parts.push_back(collapsed ? collapse : id);
      }
      cube.edges[j][i] = n == 1 ? parts[0] : product_map(parts[0], parts[1]);
    }
  return cube;
}

CheckReport phi_cube_check(std::size_t n, const Vec& x, std::size_t cap, PhiVariant variant) {
  CheckReport report = CheckReport::pass("phi-cube");
  const SimplicialCube cube = build_phi_cube(n, x, 2 * cap + 3, variant);
  report.details["x"] = vec_json(x);
  report.details["homeomorphic_direction"] = homeomorphic_direction(x);
  const CheckReport valid = validate_functoriality(cube);
  if (!valid.passed()) {
    report.status = CheckStatus::kFail;
    report.witness = {{"x", vec_json(x)}, {"functoriality", valid.witness}};
    return report;
  }
  for (CubePart part : {CubePart::kUnderlying, CubePart::kFixedPoints}) {
    const std::string label = part == CubePart::kUnderlying ? "underlying" : "fixed";
    const HomologyTable table = homology(total_cofiber(chains_of(cube, part, cap)));
    report.details[label] = table.to_json();
    if (report.passed())
      for (int k = table.lowest; k <= table.top(); ++k)
        if (!table.at(k).is_zero()) {
          report.status = CheckStatus::kFail;
          report.witness = {{"x", vec_json(x)}, {"part", label}, {"degree", k}, {"homology", table.at(k).to_string()}};
          break;
        }
  }
  return report;
}

CheckReport pn_invariance_check(std::size_t n, std::int64_t window, std::size_t cap, unsigned threads) {
  if (n != 1 && n != 2) throw std::invalid_argument("pn_invariance_check: n must be 1 or 2");
  std::vector<Vec> points;
  Vec x(n, -window);
  while (true) {
    points.push_back(x);
    std::size_t i = n;
    while (i > 0 && x[i - 1] == window) x[--i] = -window;
    if (i == 0) break;
    ++x[i - 1];
  }

  std::vector<CheckReport> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) results[k] = phi_cube_check(n, points[k], cap);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CheckReport report = CheckReport::pass("pn-invariance");
  report.details = {{"n", n},
                    {"window", window},
                    {"degree_cap", cap},
                    {"method", "chain-level total complex of the cube (iterated mapping cones)"}};
  for (const CheckReport& r : results) absorb(report, r);
  return report;
}

}  // namespace rthh
