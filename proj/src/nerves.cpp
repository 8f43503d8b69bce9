#include "rthh/nerves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rthh {

namespace {

constexpr std::uint64_t kEnumerationLimit = 20'000'000;

Vec block_at(const Cell& c, std::size_t d, std::size_t k) {
  return Vec(c.begin() + static_cast<std::ptrdiff_t>(k * d),
             c.begin() + static_cast<std::ptrdiff_t>((k + 1) * d));
}

std::vector<Vec> split(const Cell& c, std::size_t d, std::size_t blocks) {
  std::vector<Vec> out;
  out.reserve(blocks);
  for (std::size_t k = 0; k < blocks; ++k) out.push_back(block_at(c, d, k));
  return out;
}

Cell join(const std::vector<Vec>& blocks) {
  Cell c;
  for (const Vec& b : blocks) c.insert(c.end(), b.begin(), b.end());
  return c;
}

Vec total(const Cell& c, std::size_t d) {
  Vec s(d, 0);
  if (d == 0) return s;
  for (std::size_t k = 0; k < c.size(); ++k) s[k % d] += c[k];
  return s;
}

// Shared cell-level involution w applied blockwise.
struct Twist {
  std::optional<Mat> w;
  Vec operator()(const Vec& x) const { return w ? mat_vec(*w, x) : x; }
};

bool in_orbit(const std::vector<Vec>& orbit, const Vec& s) {
  return std::find(orbit.begin(), orbit.end(), s) != orbit.end();
}

// Cyclic-nerve operators on (q+1)-tuples, acting on the flat cell.
void set_cyclic_nerve_ops(Operators& ops, std::size_t d, Twist w) {
  ops.face = [d](std::size_t q, std::size_t i, const Cell& c) {
    Cell x = c;
    if (i < q) {
      for (std::size_t k = 0; k < d; ++k) x[i * d + k] += x[(i + 1) * d + k];
      x.erase(x.begin() + static_cast<std::ptrdiff_t>((i + 1) * d),
              x.begin() + static_cast<std::ptrdiff_t>((i + 2) * d));
    } else {
      for (std::size_t k = 0; k < d; ++k) x[k] += x[q * d + k];
      x.resize(q * d);
    }
    return x;
  };
  ops.degeneracy = [d](std::size_t, std::size_t i, const Cell& c) {
    Cell x = c;
    x.insert(x.begin() + static_cast<std::ptrdiff_t>((i + 1) * d), d, 0);
    return x;
  };
  ops.involution_kind = InvolutionKind::kReversing;
  ops.involution = [d, w](std::size_t q, const Cell& c) {
    Cell y;
    y.reserve(c.size());
    for (std::size_t j = 0; j <= q; ++j) {
      const std::size_t k = j == 0 ? 0 : q + 1 - j;
      const Vec b = w(block_at(c, d, k));
      y.insert(y.end(), b.begin(), b.end());
    }
    return y;
  };
  ops.cyclic = [d](std::size_t, const Cell& c) {
    Cell x = c;
    std::rotate(x.begin(), x.end() - static_cast<std::ptrdiff_t>(d), x.end());
    return x;
  };
}

// All vectors in Z^d whose own norm fits the window and that pass ok.
std::vector<Vec> window_entries(std::size_t d, const CellWindow& window,
                                const std::function<bool(const Vec&)>& ok) {
  std::vector<Vec> out;
  const std::int64_t b = window.bound;
  Vec v(d, -b);
  if (d == 0) {
    if (ok(v)) out.push_back(v);
    return out;
  }
  for (;;) {
    if (window.admits(v) && ok(v)) out.push_back(v);
    std::size_t k = 0;
    while (k < d && v[k] == b) v[k++] = -b;
    if (k == d) break;
    ++v[k];
  }
  return out;
}

std::int64_t l1(const Vec& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x < 0 ? -x : x;
  return s;
}

// Every concatenation of k entries admitted by the window; accept filters
// complete cells.
std::vector<Cell> window_tuples(std::size_t k, const std::vector<Vec>& entries, const CellWindow& window,
                                const std::function<bool(const Cell&)>& accept) {
  if (window.norm == CellWindow::Norm::kMax) {
    double count = 1;
    for (std::size_t j = 0; j < k; ++j) count *= static_cast<double>(entries.size());
    if (count > static_cast<double>(kEnumerationLimit))
      throw std::length_error("window enumeration exceeds " + std::to_string(kEnumerationLimit) +
                              " cells; use a smaller window or the l1 norm");
  }
  std::vector<std::int64_t> cost(entries.size(), 0);
  if (window.norm == CellWindow::Norm::kL1)
    for (std::size_t e = 0; e < entries.size(); ++e) cost[e] = l1(entries[e]);
  std::vector<Cell> out;
  Cell cur;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t budget) {
    if (pos == k) {
      if (accept(cur)) out.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e < entries.size(); ++e) {
      if (cost[e] > budget) continue;
      cur.insert(cur.end(), entries[e].begin(), entries[e].end());
      rec(pos + 1, budget - cost[e]);
      cur.resize(cur.size() - entries[e].size());
    }
  };
  rec(0, window.bound);
  if (out.size() > kEnumerationLimit) throw std::length_error("window enumeration too large");
  return out;
}

// k-tuples from the sorted element list of a sharp monoid summing to target.
void tuples_with_sum(const AffineMonoid& m, std::size_t k, const std::vector<Vec>& elements,
                     const Vec& target, std::vector<Cell>& out) {
  if (k == 0) return;
  const std::set<Vec> lookup(elements.begin(), elements.end());
  const std::int64_t cap = functional_degree(m, target);
  std::vector<std::int64_t> deg;
  for (const Vec& e : elements) deg.push_back(functional_degree(m, e));
  Cell cur;
  std::function<void(std::size_t, const Vec&, std::int64_t)> rec = [&](std::size_t pos, const Vec& partial,
                                                                       std::int64_t used) {
    if (pos + 1 == k) {
      Vec last = sub(target, partial);
      if (!lookup.count(last)) return;
      cur.insert(cur.end(), last.begin(), last.end());
      out.push_back(cur);
      cur.resize(cur.size() - last.size());
      return;
    }
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (used + deg[e] > cap) continue;
      cur.insert(cur.end(), elements[e].begin(), elements[e].end());
      rec(pos + 1, add(partial, elements[e]), used + deg[e]);
      cur.resize(cur.size() - elements[e].size());
    }
  };
  rec(0, Vec(m.ambient_rank(), 0), 0);
}

std::vector<std::vector<Cell>> weight_cells(const AffineMonoid& m, std::size_t max_degree,
                                            std::size_t extra_blocks, const Vec& weight) {
  if (!m.is_sharp())
    throw std::invalid_argument("weight enumeration needs a sharp monoid; supply a window instead");
  const auto orbit = weight_orbit(m, weight);
  std::int64_t cap = 0;
  for (const Vec& o : orbit) cap = std::max(cap, functional_degree(m, o));
  const auto elements = elements_up_to(m, cap);
  std::vector<std::vector<Cell>> cells(max_degree + 1);
  for (std::size_t q = 0; q <= max_degree; ++q)
    for (const Vec& o : orbit)
      if (m.contains(o)) tuples_with_sum(m, q + extra_blocks, elements, o, cells[q]);
  return cells;
}

std::string weight_label(const std::vector<Vec>& orbit) {
  std::string s;
  for (const Vec& o : orbit) s += (s.empty() ? "" : "|") + to_string(o);
  return s;
}

std::string window_label(const CellWindow& w) {
  return std::string(w.norm == CellWindow::Norm::kL1 ? "l1<=" : "max<=") + std::to_string(w.bound);
}

// Cached membership for sums that recur across many cells.
struct MembershipCache {
  const AffineMonoid* m;
  std::map<Vec, bool> seen;
  bool operator()(const Vec& x) {
    auto it = seen.find(x);
    if (it != seen.end()) return it->second;
    return seen[x] = m->contains(x);
  }
};

}  // namespace

bool CellWindow::admits(const Cell& c) const {
  if (norm == Norm::kL1) return l1(c) <= bound;
  return std::all_of(c.begin(), c.end(), [&](std::int64_t x) { return x >= -bound && x <= bound; });
}

std::int64_t functional_degree(const AffineMonoid& m, const Vec& x) {
  const Vec y = mat_vec(m.quotient_projection(), x);
  const Vec& phi = m.positive_functional();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) s += phi[i] * y[i];
  return s;
}

std::vector<Vec> elements_up_to(const AffineMonoid& m, std::int64_t bound) {
  if (!m.is_sharp()) throw std::invalid_argument("elements_up_to: monoid is not sharp");
  Mat gens;
  std::vector<std::int64_t> deg;
  for (const Vec& g : m.generators())
    if (!is_zero(g)) {
      gens.push_back(g);
      deg.push_back(functional_degree(m, g));
    }
  std::set<Vec> found;
  std::function<void(std::size_t, const Vec&, std::int64_t)> rec = [&](std::size_t j, const Vec& x,
                                                                       std::int64_t used) {
    if (j == gens.size()) {
      found.insert(x);
      return;
    }
    Vec y = x;
    for (std::int64_t u = used; u <= bound; u += deg[j]) {
      rec(j + 1, y, u);
      y = add(y, gens[j]);
    }
  };
  rec(0, Vec(m.ambient_rank(), 0), 0);
  return {found.begin(), found.end()};
}

std::vector<Vec> weight_orbit(const AffineMonoid& m, const Vec& weight) {
  if (weight.size() != m.ambient_rank()) throw std::invalid_argument("weight: dimension mismatch");
  std::vector<Vec> orbit{weight};
  Vec w = m.involute(weight);
  if (w != weight) orbit.push_back(w);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

TruncatedDihedralSet dihedral_nerve(const AffineMonoid& m, std::size_t max_degree, const Vec& weight) {
  const std::size_t d = m.ambient_rank();
  const auto orbit = weight_orbit(m, weight);
  auto ops = std::make_shared<Operators>();
  set_cyclic_nerve_ops(*ops, d, Twist{m.involution()});
  ops->member = [m, d, orbit](std::size_t q, const Cell& c) {
    if (c.size() != d * (q + 1)) return false;
    for (std::size_t k = 0; k <= q; ++k)
      if (!m.contains(block_at(c, d, k))) return false;
    return in_orbit(orbit, total(c, d));
  };
  return TruncatedDihedralSet("N^di(" + m.describe() + ")[" + weight_label(orbit) + "]", ops,
                              weight_cells(m, max_degree, 1, weight));
}

TruncatedDihedralSet dihedral_nerve(const AffineMonoid& m, std::size_t max_degree, CellWindow window) {
  const std::size_t d = m.ambient_rank();
  auto ops = std::make_shared<Operators>();
  set_cyclic_nerve_ops(*ops, d, Twist{m.involution()});
  ops->member = [m, d](std::size_t q, const Cell& c) {
    if (c.size() != d * (q + 1)) return false;
    for (std::size_t k = 0; k <= q; ++k)
      if (!m.contains(block_at(c, d, k))) return false;
    return true;
  };
  const auto entries = window_entries(d, window, [&](const Vec& v) { return m.contains(v); });
  std::vector<std::vector<Cell>> cells(max_degree + 1);
  for (std::size_t q = 0; q <= max_degree; ++q)
    cells[q] = window_tuples(q + 1, entries, window, [&](const Cell& c) { return window.admits(c); });
  return TruncatedDihedralSet("N^di(" + m.describe() + ")[" + window_label(window) + "]", ops,
                              std::move(cells));
}

TruncatedDihedralSet replete_nerve(const AffineMonoid& m, std::size_t max_degree, CellWindow window,
                                   const std::optional<Vec>& weight) {
  const std::size_t d = m.ambient_rank();
  std::optional<std::vector<Vec>> orbit;
  if (weight) orbit = weight_orbit(m, *weight);
  auto ops = std::make_shared<Operators>();
  set_cyclic_nerve_ops(*ops, d, Twist{m.involution()});
  ops->member = [m, d, orbit](std::size_t q, const Cell& c) {
    if (c.size() != d * (q + 1)) return false;
    for (std::size_t k = 0; k <= q; ++k)
      if (!m.in_group(block_at(c, d, k))) return false;
    Vec s = total(c, d);
    return orbit ? in_orbit(*orbit, s) && m.contains(s) : m.contains(s);
  };
  const auto entries = window_entries(d, window, [&](const Vec& v) { return m.in_group(v); });
  MembershipCache in_m{&m, {}};
  std::vector<std::vector<Cell>> cells(max_degree + 1);
  for (std::size_t q = 0; q <= max_degree; ++q)
    cells[q] = window_tuples(q + 1, entries, window, [&](const Cell& c) {
      if (!window.admits(c)) return false;
      Vec s = total(c, d);
      if (orbit && !in_orbit(*orbit, s)) return false;
      return in_m(s);
    });
  std::string label = window_label(window) + (orbit ? "," + weight_label(*orbit) : "");
  return TruncatedDihedralSet("N^drep(" + m.describe() + ")[" + label + "]", ops, std::move(cells));
}

TruncatedDihedralSet real_nerve(const AffineMonoid& m, std::size_t max_degree, CellWindow window) {
  const std::size_t d = m.ambient_rank();
  const Twist w{m.involution()};
  auto ops = std::make_shared<Operators>();
  ops->face = [d](std::size_t q, std::size_t i, const Cell& c) {
    auto h = split(c, d, q);
    if (i == 0) {
      h.erase(h.begin());
    } else if (i == q) {
      h.pop_back();
    } else {
      h[i - 1] = add(h[i - 1], h[i]);
      h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return join(h);
  };
  ops->degeneracy = [d](std::size_t q, std::size_t i, const Cell& c) {
    auto h = split(c, d, q);
    h.insert(h.begin() + static_cast<std::ptrdiff_t>(i), Vec(d, 0));
    return join(h);
  };
  ops->involution_kind = InvolutionKind::kReversing;
  ops->involution = [d, w](std::size_t q, const Cell& c) {
    auto h = split(c, d, q);
    std::reverse(h.begin(), h.end());
    for (auto& x : h) x = w(x);
    return join(h);
  };
  ops->member = [m, d](std::size_t q, const Cell& c) {
    if (c.size() != d * q) return false;
    for (std::size_t k = 0; k < q; ++k)
      if (!m.in_group(block_at(c, d, k))) return false;
    return true;
  };
  const auto entries = window_entries(d, window, [&](const Vec& v) { return m.in_group(v); });
  std::vector<std::vector<Cell>> cells(max_degree + 1);
  for (std::size_t q = 0; q <= max_degree; ++q)
    cells[q] = window_tuples(q, entries, window, [&](const Cell& c) { return window.admits(c); });
  return TruncatedDihedralSet("N^sigma(" + m.describe() + "^gp)[" + window_label(window) + "]", ops,
                              std::move(cells));
}

namespace {

std::shared_ptr<Operators> tensor_ops(std::size_t d, Twist w) {
  auto ops = std::make_shared<Operators>();
  // Entry j is the simplex with j ones; d_i merges entries q-i and q-i+1.
  ops->face = [d](std::size_t q, std::size_t i, const Cell& c) {
    auto x = split(c, d, q + 2);
    const std::size_t j = q - i;
    x[j] = add(x[j], x[j + 1]);
    x.erase(x.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    return join(x);
  };
  ops->degeneracy = [d](std::size_t q, std::size_t i, const Cell& c) {
    auto x = split(c, d, q + 2);
    x.insert(x.begin() + static_cast<std::ptrdiff_t>(q - i + 1), Vec(d, 0));
    return join(x);
  };
  ops->involution_kind = InvolutionKind::kReversing;
  ops->involution = [d, w](std::size_t q, const Cell& c) {
    auto x = split(c, d, q + 2);
    std::reverse(x.begin(), x.end());
    for (auto& v : x) v = w(v);
    return join(x);
  };
  return ops;
}

}  // namespace

TruncatedDihedralSet tensor_interval(const AffineMonoid& m, std::size_t max_degree, const Vec& weight) {
  const std::size_t d = m.ambient_rank();
  const auto orbit = weight_orbit(m, weight);
  auto ops = tensor_ops(d, Twist{m.involution()});
  ops->member = [m, d, orbit](std::size_t q, const Cell& c) {
    if (c.size() != d * (q + 2)) return false;
    for (std::size_t k = 0; k < q + 2; ++k)
      if (!m.contains(block_at(c, d, k))) return false;
    return in_orbit(orbit, total(c, d));
  };
  return TruncatedDihedralSet("(" + m.describe() + ")(x)Delta^1_sigma[" + weight_label(orbit) + "]", ops,
                              weight_cells(m, max_degree, 2, weight));
}

TruncatedDihedralSet tensor_interval(const AffineMonoid& m, std::size_t max_degree, CellWindow window) {
  const std::size_t d = m.ambient_rank();
  auto ops = tensor_ops(d, Twist{m.involution()});
  ops->member = [m, d](std::size_t q, const Cell& c) {
    if (c.size() != d * (q + 2)) return false;
    for (std::size_t k = 0; k < q + 2; ++k)
      if (!m.contains(block_at(c, d, k))) return false;
    return true;
  };
  const auto entries = window_entries(d, window, [&](const Vec& v) { return m.contains(v); });
  std::vector<std::vector<Cell>> cells(max_degree + 1);
  for (std::size_t q = 0; q <= max_degree; ++q)
    cells[q] = window_tuples(q + 2, entries, window, [&](const Cell& c) { return window.admits(c); });
  return TruncatedDihedralSet("(" + m.describe() + ")(x)Delta^1_sigma[" + window_label(window) + "]", ops,
                              std::move(cells));
}

TruncatedDihedralSet constant_object(const AffineMonoid& m, std::size_t max_degree, std::vector<Vec> elements) {
  auto ops = std::make_shared<Operators>();
  ops->face = [](std::size_t, std::size_t, const Cell& c) { return c; };
  ops->degeneracy = [](std::size_t, std::size_t, const Cell& c) { return c; };
  ops->involution_kind = InvolutionKind::kReversing;
  ops->involution = [m](std::size_t, const Cell& c) { return m.involute(c); };
  ops->cyclic = [](std::size_t, const Cell& c) { return c; };
  const std::size_t d = m.ambient_rank();
  ops->member = [m, d](std::size_t, const Cell& c) { return c.size() == d && m.contains(c); };
  std::vector<std::vector<Cell>> cells(max_degree + 1, elements);
  return TruncatedDihedralSet(m.describe(), ops, std::move(cells));
}

SimplicialMap sum_map(std::size_t block) {
  return {"sum", [block](std::size_t, const Cell& c) { return total(c, block); }};
}

TruncatedDihedralSet replete_splitting(const AffineMonoid& m, std::size_t max_degree, CellWindow window) {
  const std::size_t d = m.ambient_rank();
  const Twist w{m.involution()};
  auto ops = std::make_shared<Operators>();
  ops->face = [d](std::size_t q, std::size_t i, const Cell& c) {
    auto x = split(c, d, q + 1);  // x[0] = s, x[k] = h_k
    if (i == 0) {
      x.erase(x.begin() + 1);
    } else if (i == q) {
      x.pop_back();
    } else {
      x[i] = add(x[i], x[i + 1]);
      x.erase(x.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    return join(x);
  };
  ops->degeneracy = [d](std::size_t q, std::size_t i, const Cell& c) {
    auto x = split(c, d, q + 1);
    x.insert(x.begin() + static_cast<std::ptrdiff_t>(i) + 1, Vec(d, 0));
    return join(x);
  };
  ops->involution_kind = InvolutionKind::kReversing;
  ops->involution = [d, w](std::size_t q, const Cell& c) {
    auto x = split(c, d, q + 1);
    std::vector<Vec> y{w(x[0])};
    for (std::size_t k = q; k >= 1; --k) y.push_back(w(x[k]));
    return join(y);
  };
  ops->cyclic = [d](std::size_t q, const Cell& c) {
    auto x = split(c, d, q + 1);
    if (q == 0) return c;
    Vec first = x[0];
    for (std::size_t k = 1; k <= q; ++k) first = sub(first, x[k]);
    x.pop_back();
    x.insert(x.begin() + 1, first);
    return join(x);
  };
  ops->member = [m, d](std::size_t q, const Cell& c) {
    if (c.size() != d * (q + 1) || !m.contains(block_at(c, d, 0))) return false;
    for (std::size_t k = 1; k <= q; ++k)
      if (!m.in_group(block_at(c, d, k))) return false;
    return true;
  };
  const auto group = window_entries(d, window, [&](const Vec& v) { return m.in_group(v); });
  std::vector<std::vector<Cell>> cells(max_degree + 1);
  for (std::size_t q = 0; q <= max_degree; ++q)
    cells[q] = window_tuples(q + 1, group, window, [&](const Cell& c) {
      return window.admits(c) && m.contains(block_at(c, d, 0));
    });
  return TruncatedDihedralSet("(" + m.describe() + ") x N^sigma(gp)[" + window_label(window) + "]", ops,
                              std::move(cells));
}

SimplicialMap replete_to_splitting(std::size_t block) {
  return {"(x)->(sum x; x_1..x_q)", [block](std::size_t, const Cell& c) {
            Cell out = c;
            Vec s = total(c, block);
            std::copy(s.begin(), s.end(), out.begin());
            return out;
          }};
}

SimplicialMap splitting_to_replete(std::size_t block) {
  return {"(s; h)->(s - sum h, h)", [block](std::size_t, const Cell& c) {
            Cell out = c;
            Vec s = total(c, block);
            // x_0 = s - sum h = 2 s - total.
            for (std::size_t k = 0; k < block; ++k) out[k] = 2 * c[k] - s[k];
            return out;
          }};
}

TruncatedDihedralSet repletion_resolution(const AffineMonoid& m, std::size_t max_degree, CellWindow window) {
  const std::size_t d = m.ambient_rank();
  const Twist w{m.involution()};
  auto ops = std::make_shared<Operators>();
  ops->face = [d](std::size_t q, std::size_t i, const Cell& c) {
    auto x = split(c, d, q + 2);
    x.erase(x.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    return join(x);
  };
  ops->degeneracy = [d](std::size_t q, std::size_t i, const Cell& c) {
    auto x = split(c, d, q + 2);
    x.insert(x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x[i + 1]);
    return join(x);
  };
  ops->involution_kind = InvolutionKind::kReversing;
  ops->involution = [d, w](std::size_t q, const Cell& c) {
    auto x = split(c, d, q + 2);
    const Vec wx = w(x[0]);
    std::vector<Vec> y{wx};
    for (std::size_t k = q + 1; k >= 1; --k) y.push_back(sub(wx, w(x[k])));
    return join(y);
  };
  ops->member = [m, d](std::size_t q, const Cell& c) {
    if (c.size() != d * (q + 2) || !m.contains(block_at(c, d, 0))) return false;
    for (std::size_t k = 1; k < q + 2; ++k)
      if (!m.in_group(block_at(c, d, k))) return false;
    return true;
  };
  const auto group = window_entries(d, window, [&](const Vec& v) { return m.in_group(v); });
  std::vector<std::vector<Cell>> cells(max_degree + 1);
  for (std::size_t q = 0; q <= max_degree; ++q)
    cells[q] = window_tuples(q + 2, group, window, [&](const Cell& c) {
      return window.admits(c) && m.contains(block_at(c, d, 0));
    });
  return TruncatedDihedralSet("(" + m.describe() + ") x E(gp)[" + window_label(window) + "]", ops,
                              std::move(cells));
}

SimplicialMap exactification_to_resolution(std::size_t block) {
  return {"(x,g)->(x;g..g)", [block](std::size_t q, const Cell& c) {
            Cell out(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(block));
            for (std::size_t k = 0; k <= q; ++k) out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(block), c.end());
            return out;
          }};
}

SimplicialMap resolution_to_splitting(std::size_t block) {
  return {"(x;g)->(x;g_1-g_0..)", [block](std::size_t q, const Cell& c) {
            auto x = split(c, block, q + 2);
            std::vector<Vec> y{x[0]};
            for (std::size_t k = 2; k < q + 2; ++k) y.push_back(sub(x[k], x[k - 1]));
            return join(y);
          }};
}

SimplicialMap resolution_projection(std::size_t block) {
  return {"(x;g)->x", [block](std::size_t, const Cell& c) {
            return Cell(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(block));
          }};
}

}  // namespace rthh
