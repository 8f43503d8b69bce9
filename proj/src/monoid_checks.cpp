#include "rthh/monoid_checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace rthh {

namespace {

using nlohmann::ordered_json;

ordered_json vec_json(const Vec& v) { return ordered_json(v); }

std::int64_t l1(const Vec& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x < 0 ? -x : x;
  return s;
}

AffineMonoid plain(const AffineMonoid& m) { return m.with_involution(std::nullopt); }

Mat hstack(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t r = 0; r < out.size(); ++r) out[r].insert(out[r].end(), b[r].begin(), b[r].end());
  return out;
}

// [[a, a'], [b, b']] for d x d blocks.
Mat blocks(const Mat& a, const Mat& a2, const Mat& b, const Mat& b2) {
  Mat out = hstack(a, a2);
  Mat low = hstack(b, b2);
  out.insert(out.end(), low.begin(), low.end());
  return out;
}

Mat zero_mat(std::size_t r, std::size_t c) { return Mat(r, Vec(c, 0)); }

Mat negate(const Mat& m) {
  Mat out = m;
  for (auto& row : out)
    for (auto& x : row) x = -x;
  return out;
}

std::uint64_t box_size(std::int64_t window, std::size_t rank) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < rank; ++i) n *= static_cast<std::uint64_t>(2 * window + 1);
  return n;
}

}  // namespace

ExactifiedMonoid exactify(const AffineMonoid& m) {
  if (!m.has_involution()) throw std::invalid_argument("exactify: monoid carries no involution");
  const std::size_t d = m.ambient_rank();
  const Mat& w = *m.involution();
  const Mat id = identity_mat(d);
  const Mat zero = zero_mat(d, d);

  Mat gens;
  for (const Vec& g : m.generators()) {
    Vec v = g;
    v.resize(2 * d, 0);
    gens.push_back(v);
  }
  for (const Vec& b : m.group_basis())
    for (const Vec& s : {b, neg(b)}) {
      Vec v(d, 0);
      v.insert(v.end(), s.begin(), s.end());
      gens.push_back(v);
    }
  AffineMonoid carrier(2 * d, gens, blocks(w, zero, w, negate(w)));
  AffineMonoid doubled = double_monoid(m);
  MonoidHom theta(doubled, m, hstack(id, id));
  MonoidHom theta_ex(carrier, m, hstack(id, zero));
  MonoidHom eta(doubled, carrier, blocks(id, id, zero, id));
  return ExactifiedMonoid{m, doubled, carrier, theta, theta_ex, eta};
}

Mat IntegralPushout::induced(const Mat& a, const Mat& b) const {
  return compose(hstack(a, b), section);
}

IntegralPushout integral_pushout(const MonoidHom& f, const MonoidHom& g) {
  const AffineMonoid& p = f.target;
  const AffineMonoid& q = g.target;
  if (f.source.ambient_rank() != g.source.ambient_rank() ||
      f.source.generators() != g.source.generators())
    throw std::invalid_argument("integral_pushout: maps have different sources");
  const std::size_t dp = p.ambient_rank(), dq = q.ambient_rank(), dim = dp + dq;

  Mat relations;
  for (const Vec& r : f.source.generators()) {
    Vec row = f(r);
    Vec right = neg(g(r));
    row.insert(row.end(), right.begin(), right.end());
    relations.push_back(row);
  }
  relations = hermite_basis(relations, dim);

  // Torsion of (P^gp (+) Q^gp) / K, measured in lattice coordinates.
  Mat lattice = block_diagonal(p.group_basis(), dp, q.group_basis(), dq);
  if (!relations.empty()) {
    Mat coords;
    for (const Vec& k : relations) {
      auto c = lattice_coordinates(lattice, k);
      if (!c) throw std::logic_error("integral_pushout: relation outside the group lattice");
      coords.push_back(*c);
    }
    for (const BigInt& factor : invariant_factors(BigMatrix::from_rows(coords, lattice.size())))
      if (factor > 1)
        throw PushoutTorsionError("group pushout has torsion of order " + factor.get_str());
  }

  Mat projection, section;
  if (relations.empty()) {
    projection = identity_mat(dim);
    section = identity_mat(dim);
  } else {
    SmithForm snf = smith_normal_form(BigMatrix::from_rows(relations, dim));
    BigMatrix vt = snf.right.transpose();
    Mat vt_m = vt.to_mat();
    Mat vt_inv = unimodular_inverse(vt).to_mat();
    const std::size_t rk = snf.rank;
    projection.assign(vt_m.begin() + static_cast<std::ptrdiff_t>(rk), vt_m.end());
    section.assign(dim, Vec(dim - rk));
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t j = rk; j < dim; ++j) section[r][j - rk] = vt_inv[r][j];
  }
  const std::size_t e = projection.size();
  Mat left(e, Vec(dp)), right(e, Vec(dq));
  for (std::size_t r = 0; r < e; ++r) {
    std::copy_n(projection[r].begin(), dp, left[r].begin());
    std::copy_n(projection[r].begin() + static_cast<std::ptrdiff_t>(dp), dq, right[r].begin());
  }
  Mat gens;
  for (const Vec& x : p.generators()) gens.push_back(mat_vec(left, x));
  for (const Vec& y : q.generators()) gens.push_back(mat_vec(right, y));
  std::optional<Mat> inv;
  if (p.has_involution() && q.has_involution())
    inv = compose(projection, compose(block_diagonal(*p.involution(), dp, *q.involution(), dq), section));
  return IntegralPushout{AffineMonoid(e, gens, inv), left, right, section};
}

CheckReport check_isomorphism(const std::string& name, const AffineMonoid& source,
                              const AffineMonoid& target, const Mat& matrix,
                              std::int64_t window) {
  for (const Vec& g : source.generators())
    if (!target.contains(mat_vec(matrix, g)))
      return CheckReport::fail(name, {{"reason", "generator leaves target"}, {"element", vec_json(g)}});
  Mat images;
  for (const Vec& b : source.group_basis()) images.push_back(mat_vec(matrix, b));
  if (rank_of(images, target.ambient_rank()) != images.size())
    return CheckReport::fail(name, {{"reason", "not injective on group completions"}});
  auto preimage = [&](const Vec& t) -> std::optional<Vec> {
    auto c = lattice_coordinates(images, t);
    if (!c) return std::nullopt;
    Vec x(source.ambient_rank(), 0);
    for (std::size_t j = 0; j < c->size(); ++j) x = add(x, scale((*c)[j], source.group_basis()[j]));
    if (!source.contains(x)) return std::nullopt;
    return x;
  };
  for (const Vec& t : target.generators())
    if (!preimage(t))
      return CheckReport::fail(name, {{"reason", "target generator not hit"}, {"element", vec_json(t)}});

  CheckReport report = CheckReport::pass(name);
  std::size_t checked = 0;
  if (box_size(window, target.ambient_rank()) <= 20000) {
    for (const Vec& t : target.window_elements(window)) {
      if (!preimage(t))
        return CheckReport::fail(name, {{"reason", "window element not hit"}, {"element", vec_json(t)}});
      ++checked;
    }
  }
  report.details["window"] = window;
  report.details["window_elements_checked"] = checked;
  return report;
}

FixedMonoid conjugation_fixed_monoid(const AffineMonoid& q, std::int64_t window) {
  if (!q.has_involution()) throw std::invalid_argument("conjugation_fixed_monoid: no involution");
  const std::size_t d = q.ambient_rank();
  auto in_set = [&](const Vec& y) { return q.in_group(y) && q.contains(add(y, q.involute(y))); };
  auto box = [&](std::int64_t w) {
    std::vector<Vec> out;
    if (d == 0) return std::vector<Vec>{Vec{}};
    Vec y(d, -w);
    for (;;) {
      if (in_set(y)) out.push_back(y);
      std::size_t k = 0;
      while (k < d && y[k] == w) y[k++] = -w;
      if (k == d) break;
      ++y[k];
    }
    return out;
  };
  std::vector<Vec> elems = box(window);
  std::stable_sort(elems.begin(), elems.end(),
                   [](const Vec& a, const Vec& b) { return l1(a) < l1(b); });
  Mat gens;
  AffineMonoid current(d, gens);
  for (const Vec& y : elems) {
    if (is_zero(y) || current.contains(y)) continue;
    gens.push_back(y);
    current = AffineMonoid(d, gens);
  }
  bool certified = true;
  for (const Vec& y : box(2 * window))
    if (!current.contains(y)) {
      certified = false;
      break;
    }
  return FixedMonoid{current, certified, window};
}

MonoidSet MonoidSet::base_change(const MonoidHom& theta) const {
  if (theta.source.generators() != acting.generators())
    throw std::invalid_argument("base_change: homomorphism does not start at the acting monoid");
  return MonoidSet{theta.target, free_orbits, swap_pairs};
}

CheckReport check_pair_base_change(const MonoidHom& theta, std::int64_t window) {
  const std::string name = "pair-base-change";
  const AffineMonoid& p = theta.source;
  const AffineMonoid& q = theta.target;
  MonoidSet pair{p, 0, 1};
  MonoidSet changed = pair.base_change(theta);
  if (changed.orbit_count() != 2 || changed.swap_pairs != 1)
    return CheckReport::fail(name, {{"reason", "orbit structure changed"}});

  const std::vector<Vec> pw = p.window_elements(window);
  const std::vector<Vec> qw = q.window_elements(window);
  // Elements (i, p, q) indexed densely; classes via union-find over the
  // relation (i, p, q) ~ (i, 0, theta(p) + q).
  std::map<Vec, std::size_t> q_index;
  for (std::size_t k = 0; k < qw.size(); ++k) q_index[qw[k]] = k;
  const std::size_t np = pw.size(), nq = qw.size();
  auto id = [&](std::size_t side, std::size_t ip, std::size_t iq) { return (side * np + ip) * nq + iq; };
  std::vector<std::size_t> parent(2 * np * nq);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t zero_p = np;
  for (std::size_t k = 0; k < np; ++k)
    if (is_zero(pw[k])) zero_p = k;
  if (zero_p == np) return CheckReport::inconclusive(name, {{"reason", "window misses 0"}});

  std::map<std::pair<std::size_t, Vec>, std::size_t> class_of_value;
  std::size_t elements = 0;
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t ip = 0; ip < np; ++ip)
      for (std::size_t iq = 0; iq < nq; ++iq) {
        Vec value = add(theta(pw[ip]), qw[iq]);
        auto it = q_index.find(value);
        if (it != q_index.end()) parent[find(id(side, ip, iq))] = find(id(side, zero_p, it->second));
        // Equivariance: (1 - i, w p, w q) maps to (1 - i, w(value)).
        Vec wv = add(theta(p.involute(pw[ip])), q.involute(qw[iq]));
        if (wv != q.involute(value))
          return CheckReport::fail(name, {{"reason", "not equivariant"}, {"element", vec_json(pw[ip])}});
        ++elements;
      }
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t ip = 0; ip < np; ++ip)
      for (std::size_t iq = 0; iq < nq; ++iq) {
        Vec value = add(theta(pw[ip]), qw[iq]);
        if (!q_index.count(value)) continue;
        auto key = std::make_pair(side, value);
        std::size_t root = find(id(side, ip, iq));
        auto [it, inserted] = class_of_value.emplace(key, root);
        if (!inserted && it->second != root)
          return CheckReport::fail(name, {{"reason", "two classes share an image"}, {"element", vec_json(value)}});
      }
  if (class_of_value.size() != 2 * nq)
    return CheckReport::fail(name, {{"reason", "image misses part of Q |_| Q"}});
  CheckReport report = CheckReport::pass(name);
  report.details["window"] = window;
  report.details["elements"] = elements;
  report.details["classes"] = class_of_value.size();
  return report;
}

std::optional<std::string> sharpening_not_iso(const MonoidHom& theta) {
  if (theta.source.unit_quotient_has_torsion() || theta.target.unit_quotient_has_torsion())
    return std::string("unit quotient has torsion");
  Sharpening sp = sharpen(theta.source);
  Sharpening sq = sharpen(theta.target);
  IsoVerdict v = is_isomorphism_sharp(sp.monoid, sq.monoid, sharpened_matrix(theta));
  if (v.iso) return std::nullopt;
  return "sharpened map is not an isomorphism: " + v.reason;
}

CheckReport check_unit_base_change(const MonoidHom& theta, std::int64_t window) {
  const std::string name = "strict.2";
  if (auto why = sharpening_not_iso(theta)) return CheckReport::precondition_failed(name, {{"reason", *why}});
  AffineMonoid p = plain(theta.source), q = plain(theta.target);
  AffineMonoid up = units(p), uq = units(q);
  try {
    IntegralPushout po = integral_pushout(MonoidHom(up, p, identity_mat(p.ambient_rank())),
                                          MonoidHom(up, uq, theta.matrix));
    Mat eta = po.induced(theta.matrix, identity_mat(q.ambient_rank()));
    CheckReport r = check_isomorphism(name, po.monoid, q, eta, window);
    r.details["pushout_rank"] = po.monoid.ambient_rank();
    return r;
  } catch (const PushoutTorsionError& e) {
    return CheckReport::inconclusive(name, {{"reason", e.what()}});
  }
}

CheckReport check_strict3_squares(const MonoidHom& theta, std::int64_t window) {
  const std::string name = "strict.3";
  if (!theta.source.has_involution() || !theta.target.has_involution())
    return CheckReport::precondition_failed(name, {{"reason", "involutions required"}});
  if (auto why = sharpening_not_iso(theta)) return CheckReport::precondition_failed(name, {{"reason", *why}});

  const AffineMonoid p = plain(theta.source), q = plain(theta.target);
  const std::size_t dp = p.ambient_rank(), dq = q.ambient_rank();
  const Mat& t = theta.matrix;
  const Mat tt = block_diagonal(t, dp, t, dp);
  const AffineMonoid up = units(p), uq = units(q);
  const AffineMonoid r = direct_sum(up, up);
  const AffineMonoid b = direct_sum(uq, uq);
  CheckReport report = CheckReport::pass(name);
  try {
    // Left square: P* (+) P* -> P (+) P over Q* (+) Q* -> Q (+) Q.
    IntegralPushout left = integral_pushout(MonoidHom(r, direct_sum(p, p), identity_mat(2 * dp)),
                                            MonoidHom(r, b, tt));
    absorb(report, check_isomorphism("left-square", left.monoid, direct_sum(q, q),
                                     left.induced(tt, identity_mat(2 * dq)), window));

    // Outer square: through eta into P (+) P^gp.
    const AffineMonoid ex_p = plain(exactify(theta.source).carrier);
    const AffineMonoid ex_q = plain(exactify(theta.target).carrier);
    auto eta = [](std::size_t d) {
      Mat id = identity_mat(d), z = zero_mat(d, d);
      return blocks(id, id, z, id);
    };
    IntegralPushout outer =
        integral_pushout(MonoidHom(r, ex_p, eta(dp)), MonoidHom(r, b, tt));
    absorb(report, check_isomorphism("outer-square", outer.monoid, ex_q, outer.induced(tt, eta(dq)),
                                     window));
  } catch (const PushoutTorsionError& e) {
    absorb(report, CheckReport::inconclusive("squares", {{"reason", e.what()}}));
  }

  FixedMonoid fixed_p = conjugation_fixed_monoid(theta.source, window);
  FixedMonoid fixed_q = conjugation_fixed_monoid(theta.target, window);
  report.details["L_generators"] = fixed_p.monoid.generators();
  report.details["M_generators"] = fixed_q.monoid.generators();
  if (!fixed_p.certified || !fixed_q.certified) {
    absorb(report, CheckReport::inconclusive("fixed-point-square",
                                             {{"reason", "fixed monoid generators not certified on window"}}));
    return report;
  }
  try {
    IntegralPushout fixed = integral_pushout(MonoidHom(p, fixed_p.monoid, identity_mat(dp)),
                                             MonoidHom(p, q, t));
    absorb(report, check_isomorphism("fixed-point-square", fixed.monoid, fixed_q.monoid,
                                     fixed.induced(t, identity_mat(dq)), window));
  } catch (const PushoutTorsionError& e) {
    absorb(report, CheckReport::inconclusive("fixed-point-square", {{"reason", e.what()}}));
  }
  return report;
}

std::vector<std::vector<std::size_t>> faces(const AffineMonoid& m) {
  const std::size_t k = m.generators().size();
  if (k > 16) throw std::invalid_argument("faces: more than 16 generators");
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) face.push_back(i);
    if (is_face(m, face)) out.push_back(std::move(face));
  }
  return out;
}

CheckReport check_chart_surjectivity(const MonoidHom& chart) {
  const std::string name = "descent.3";
  const AffineMonoid& q = chart.target;
  if (!is_saturated(q)) return CheckReport::precondition_failed(name, {{"reason", "target is not saturated"}});
  CheckReport report = CheckReport::pass(name);
  std::size_t count = 0;
  for (const auto& face : faces(q)) {
    ++count;
    const Sharpening s = sharpen(face_localization(q, face));
    Mat images;
    for (const Vec& g : chart.source.generators()) images.push_back(s.projection(chart(g)));
    const AffineMonoid image(s.monoid.ambient_rank(), images);
    for (const Vec& g : s.monoid.generators())
      if (!image.contains(g)) {
        nlohmann::ordered_json f = nlohmann::ordered_json::array();
        for (auto i : face) f.push_back(i);
        return CheckReport::fail(name, {{"face", f}, {"missing_generator", g}});
      }
  }
  report.details["faces"] = count;
  return report;
}

}  // namespace rthh
