#include "rthh/monoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace rthh {

namespace {

// phi in Z^e with phi . v >= 1 for every vector; nullopt if none exists.
std::optional<Vec> find_positive_functional(const Mat& vectors, std::size_t e) {
  if (vectors.empty()) return Vec(e, 0);
  const std::size_t n = vectors.size();
  // Unknowns: phi_plus (e), phi_minus (e), slack (n). Rows: one per vector.
  Mat columns;
  for (std::size_t k = 0; k < e; ++k) {
    Vec col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = vectors[j][k];
    columns.push_back(col);
  }
  for (std::size_t k = 0; k < e; ++k) columns.push_back(neg(columns[k]));
  for (std::size_t j = 0; j < n; ++j) {
    Vec col(n, 0);
    col[j] = -1;
    columns.push_back(col);
  }
  auto sol = nonnegative_solution(columns, Vec(n, 1));
  if (!sol) return std::nullopt;
  BigInt denom = 1;
  for (std::size_t k = 0; k < 2 * e; ++k) {
    BigInt d = (*sol)[k].get_den();
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
  }
  Vec phi(e);
  for (std::size_t k = 0; k < e; ++k) {
    Rational v = ((*sol)[k] - (*sol)[k + e]) * denom;
    phi[k] = v.get_num().get_si();
  }
  return phi;
}

std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::shared_ptr<const AffineMonoid::Structure> AffineMonoid::analyze(std::size_t rank,
                                                                    const Mat& gens) {
  auto s = std::make_shared<Structure>();
  s->group_basis = hermite_basis(gens, rank);
  const std::size_t n = gens.size();
  s->unit_mask.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(gens[i])) {
      s->unit_mask[i] = true;
      continue;
    }
    // Is there c >= 0 with c_i = 1 and sum c_j g_j = 0?
    Mat columns;
    for (std::size_t j = 0; j < n; ++j) {
      Vec col = gens[j];
      col.push_back(j == i ? 1 : 0);
      columns.push_back(std::move(col));
    }
    Vec rhs(rank, 0);
    rhs.push_back(1);
    if (auto sol = nonnegative_solution(columns, rhs)) {
      for (std::size_t j = 0; j < n; ++j)
        if ((*sol)[j] > 0) s->unit_mask[j] = true;
    }
  }
  Mat unit_gens;
  for (std::size_t i = 0; i < n; ++i)
    if (s->unit_mask[i] && !is_zero(gens[i])) unit_gens.push_back(gens[i]);
  s->unit_basis = hermite_basis(unit_gens, rank);
  const std::size_t u = s->unit_basis.size();

  BigMatrix b = BigMatrix::from_rows(s->unit_basis, rank);
  SmithForm snf = smith_normal_form(b);
  BigMatrix vt = snf.right.transpose();
  s->coords = vt.to_mat();
  for (std::size_t k = 0; k < u; ++k) {
    std::int64_t dk = snf.diagonal(k, k).get_si();
    s->unit_divisors.push_back(dk);
    if (dk > 1) s->torsion = true;
  }
  Mat vt_inv = unimodular_inverse(vt).to_mat();
  const std::size_t e = rank - u;
  s->projection.assign(s->coords.begin() + static_cast<std::ptrdiff_t>(u), s->coords.end());
  s->section.assign(rank, Vec(e));
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t j = 0; j < e; ++j) s->section[r][j] = vt_inv[r][u + j];

  Mat projected;
  for (std::size_t i = 0; i < n; ++i)
    if (!s->unit_mask[i]) projected.push_back(mat_vec(s->projection, gens[i]));
  auto phi = find_positive_functional(projected, e);
  if (!phi) throw std::logic_error("non-unit generators admit no positive functional");
  s->functional = *phi;
  s->weights.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (!s->unit_mask[i]) s->weights[i] = dot(*phi, mat_vec(s->projection, gens[i]));
  return s;
}

AffineMonoid::AffineMonoid(std::size_t ambient_rank, Mat generators, std::optional<Mat> involution)
    : rank_(ambient_rank), generators_(std::move(generators)), involution_(std::move(involution)) {
  for (const Vec& g : generators_)
    if (g.size() != rank_) throw std::invalid_argument("generator length differs from ambient rank");
  structure_ = analyze(rank_, generators_);
  if (involution_) {
    const Mat& w = *involution_;
    if (w.size() != rank_ || std::any_of(w.begin(), w.end(),
                                         [&](const Vec& row) { return row.size() != rank_; }))
      throw std::invalid_argument("involution has wrong shape");
    if (compose(w, w) != identity_mat(rank_) && rank_ > 0)
      throw std::invalid_argument("involution does not square to the identity");
    for (const Vec& g : generators_)
      if (!contains(mat_vec(w, g)))
        throw std::invalid_argument("involution maps generator " + to_string(g) +
                                    " outside the monoid");
  }
}

AffineMonoid AffineMonoid::zero(std::size_t ambient_rank) { return AffineMonoid(ambient_rank, {}); }

AffineMonoid AffineMonoid::naturals(std::size_t rank) {
  return AffineMonoid(rank, identity_mat(rank));
}

AffineMonoid AffineMonoid::integers(std::size_t rank) {
  Mat gens = identity_mat(rank);
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(neg(gens[i]));
  return AffineMonoid(rank, gens);
}

AffineMonoid AffineMonoid::with_involution(std::optional<Mat> involution) const {
  return AffineMonoid(rank_, generators_, std::move(involution));
}

Vec AffineMonoid::involute(const Vec& x) const {
  return involution_ ? mat_vec(*involution_, x) : x;
}

bool AffineMonoid::in_group(const Vec& x) const {
  if (x.size() != rank_) throw std::invalid_argument("dimension mismatch");
  return echelon_contains(structure_->group_basis, x);
}

bool AffineMonoid::in_unit_lattice(const Vec& x) const {
  const Structure& s = *structure_;
  Vec y = mat_vec(s.coords, x);
  const std::size_t u = s.unit_divisors.size();
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (k < u) {
      if (y[k] % s.unit_divisors[k] != 0) return false;
    } else if (y[k] != 0) {
      return false;
    }
  }
  return true;
}

bool AffineMonoid::is_unit(const Vec& x) const { return contains(x) && contains(neg(x)); }

bool AffineMonoid::contains(const Vec& x) const {
  if (x.size() != rank_) throw std::invalid_argument("contains: dimension mismatch");
  if (!in_group(x)) return false;
  const Structure& s = *structure_;
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (!s.unit_mask[i]) free_idx.push_back(i);
  Vec target = mat_vec(s.projection, x);
  if (free_idx.empty()) return is_zero(target) && in_unit_lattice(x);
  std::int64_t budget = dot(s.functional, target);
  if (budget < 0) return false;

  Vec rest = x;  // x minus the non-unit part chosen so far
  Vec rem = target;
  std::function<bool(std::size_t, std::int64_t)> search = [&](std::size_t k,
                                                             std::int64_t left) -> bool {
    const Vec& g = generators_[free_idx[k]];
    const std::int64_t w = s.weights[free_idx[k]];
    Vec pg = mat_vec(s.projection, g);
    if (k + 1 == free_idx.size()) {
      if (left % w != 0) return false;
      std::int64_t c = left / w;
      if (rem != scale(c, pg)) return false;
      return in_unit_lattice(sub(rest, scale(c, g)));
    }
    for (std::int64_t c = 0; c * w <= left; ++c) {
      if (search(k + 1, left - c * w)) return true;
      rest = sub(rest, g);
      rem = sub(rem, pg);
    }
    // Undo the subtractions performed by the loop.
    std::int64_t taken = left / w + 1;
    rest = add(rest, scale(taken, g));
    rem = add(rem, scale(taken, pg));
    return false;
  };
  bool found = search(0, budget);
  return found;
}

std::vector<Vec> AffineMonoid::window_elements(std::int64_t window) const {
  std::vector<Vec> out;
  Vec x(rank_, -window);
  if (rank_ == 0) return {Vec{}};
  for (;;) {
    if (contains(x)) out.push_back(x);
    std::size_t k = 0;
    while (k < rank_ && x[k] == window) x[k++] = -window;
    if (k == rank_) break;
    ++x[k];
  }
  return out;
}

std::string AffineMonoid::describe() const {
  std::ostringstream os;
  os << "AffineMonoid(rank " << rank_ << ", gens";
  for (const Vec& g : generators_) os << ' ' << to_string(g);
  if (involution_) os << ", with involution";
  os << ')';
  return os.str();
}

MonoidHom::MonoidHom(AffineMonoid src, AffineMonoid tgt, Mat m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.size() != target.ambient_rank())
    throw std::invalid_argument("MonoidHom: matrix row count differs from target rank");
  for (const Vec& row : matrix)
    if (row.size() != source.ambient_rank())
      throw std::invalid_argument("MonoidHom: matrix column count differs from source rank");
  for (const Vec& g : source.generators())
    if (!target.contains(mat_vec(matrix, g)))
      throw std::invalid_argument("MonoidHom: generator " + to_string(g) +
                                  " does not map into the target");
  if (!equivariant()) throw std::invalid_argument("MonoidHom: does not commute with involutions");
}

MonoidHom MonoidHom::identity(const AffineMonoid& m) {
  return MonoidHom(m, m, identity_mat(m.ambient_rank()));
}

bool MonoidHom::equivariant() const {
  if (!source.has_involution() || !target.has_involution()) return true;
  for (const Vec& g : source.generators())
    if (mat_vec(matrix, source.involute(g)) != target.involute(mat_vec(matrix, g))) return false;
  return true;
}

Mat group_completion(const AffineMonoid& m) { return m.group_basis(); }

AffineMonoid units(const AffineMonoid& m) {
  Mat gens = m.unit_basis();
  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < k; ++i) gens.push_back(neg(gens[i]));
  return AffineMonoid(m.ambient_rank(), gens, m.involution());
}

Sharpening sharpen(const AffineMonoid& m) {
  const Mat& pi = m.quotient_projection();
  const std::size_t e = pi.size();
  Mat gens;
  for (std::size_t i = 0; i < m.generators().size(); ++i)
    if (!m.unit_generators()[i]) gens.push_back(mat_vec(pi, m.generators()[i]));
  std::optional<Mat> inv;
  if (m.has_involution()) inv = compose(pi, compose(*m.involution(), m.quotient_section()));
  if (e == 0 && inv) inv = Mat{};
  AffineMonoid sharp(e, gens, inv);
  MonoidHom proj(m, sharp, pi.empty() ? Mat{} : pi);
  return Sharpening{sharp, proj};
}

Mat sharpened_matrix(const MonoidHom& theta) {
  return compose(theta.target.quotient_projection(),
                 compose(theta.matrix, theta.source.quotient_section()));
}

IsoVerdict is_isomorphism_sharp(const AffineMonoid& source, const AffineMonoid& target,
                                const Mat& matrix) {
  for (const Vec& g : source.generators())
    if (!target.contains(mat_vec(matrix, g)))
      return {false, "generator " + to_string(g) + " does not map into target"};
  const Mat& bs = source.group_basis();
  const Mat& bt = target.group_basis();
  if (bs.size() != bt.size()) return {false, "group ranks differ"};
  const std::size_t r = bs.size();
  Mat c(r, Vec(r));
  for (std::size_t j = 0; j < r; ++j) {
    auto coords = lattice_coordinates(bt, mat_vec(matrix, bs[j]));
    if (!coords) return {false, "image of group basis leaves target group"};
    for (std::size_t i = 0; i < r; ++i) c[i][j] = (*coords)[i];
  }
  BigInt det = determinant(c);
  if (abs(det) != 1) return {false, "group map has determinant " + det.get_str()};
  Mat c_inv = r ? unimodular_inverse(BigMatrix::from_rows(c, r)).to_mat() : Mat{};
  for (const Vec& t : target.generators()) {
    Vec tc = *lattice_coordinates(bt, t);
    Vec sc = mat_vec(c_inv, tc);
    Vec x(source.ambient_rank(), 0);
    for (std::size_t j = 0; j < r; ++j) x = add(x, scale(sc[j], bs[j]));
    if (!source.contains(x))
      return {false, "target generator " + to_string(t) + " has no preimage in source"};
  }
  return {true, ""};
}

bool is_saturated(const AffineMonoid& m, std::size_t rank_cap) {
  const std::size_t d = m.ambient_rank();
  if (d > rank_cap)
    throw DimensionCapError("saturation check: ambient rank " + std::to_string(d) +
                            " exceeds dimension cap " + std::to_string(rank_cap));
  Mat gens;
  for (const Vec& g : m.generators())
    if (!is_zero(g)) gens.push_back(g);
  const std::size_t r = m.group_basis().size();
  if (r == 0) return true;
  const std::size_t n = gens.size();
  // Every lattice point of cone(M) is a non-negative integer combination of a
  // linearly independent subset plus a lattice point of the half-open
  // parallelepiped spanned by that subset; maximal subsets suffice.
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    Mat sub_gens;
    for (auto i : pick) sub_gens.push_back(gens[i]);
    if (rank_of(sub_gens, d) == r) {
      Vec lo(d, 0), hi(d, 0);
      std::uint64_t box = 1;
      for (std::size_t k = 0; k < d; ++k) {
        for (const Vec& g : sub_gens) (g[k] < 0 ? lo[k] : hi[k]) += g[k];
        box *= static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
      }
      if (box > 20'000'000)
        throw DimensionCapError("saturation check: parallelepiped too large to enumerate");
      Vec z = lo;
      for (;;) {
        if (m.in_group(z)) {
          auto lambda = rational_solve(sub_gens, z);
          if (lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& q) {
                return q >= 0 && q < 1;
              })) {
            if (!m.contains(z)) return false;
          }
        }
        std::size_t k = 0;
        while (k < d && z[k] == hi[k]) {
          z[k] = lo[k];
          ++k;
        }
        if (k == d) break;
        ++z[k];
      }
    }
    // Next r-subset in lexicographic order.
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

bool is_face(const AffineMonoid& m, const std::vector<std::size_t>& face) {
  const Mat& gens = m.generators();
  std::vector<bool> in_face(gens.size(), false);
  for (auto f : face) {
    if (f >= gens.size()) throw std::out_of_range("face index out of range");
    in_face[f] = true;
  }
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (in_face[j] || m.unit_generators()[j]) continue;
    // g_j lies on the smallest face containing F iff g_j + z in cone(F) for
    // some z in cone(M).
    Mat columns;
    for (auto f : face) columns.push_back(gens[f]);
    for (const Vec& g : gens) columns.push_back(neg(g));
    if (nonnegative_solution(columns, gens[j])) return false;
  }
  return true;
}

AffineMonoid face_localization(const AffineMonoid& m, const std::vector<std::size_t>& face) {
  if (!is_face(m, face)) throw std::invalid_argument("face_localization: generators do not span a face");
  Mat gens = m.generators();
  for (auto f : face) gens.push_back(neg(m.generators()[f]));
  return AffineMonoid(m.ambient_rank(), gens, m.involution());
}

Mat block_diagonal(const Mat& a, std::size_t a_cols, const Mat& b, std::size_t b_cols) {
  Mat out;
  for (const Vec& row : a) {
    Vec r = row;
    r.resize(a_cols + b_cols, 0);
    out.push_back(r);
  }
  for (const Vec& row : b) {
    Vec r(a_cols, 0);
    r.insert(r.end(), row.begin(), row.end());
    out.push_back(r);
  }
  return out;
}

AffineMonoid direct_sum(const AffineMonoid& a, const AffineMonoid& b) {
  const std::size_t da = a.ambient_rank(), db = b.ambient_rank();
  Mat gens;
  for (const Vec& g : a.generators()) {
    Vec v = g;
    v.resize(da + db, 0);
    gens.push_back(v);
  }
  for (const Vec& g : b.generators()) {
    Vec v(da, 0);
    v.insert(v.end(), g.begin(), g.end());
    gens.push_back(v);
  }
  std::optional<Mat> inv;
  if (a.has_involution() || b.has_involution()) {
    inv = block_diagonal(a.involution().value_or(identity_mat(da)), da,
                         b.involution().value_or(identity_mat(db)), db);
  }
  return AffineMonoid(da + db, gens, inv);
}

AffineMonoid double_monoid(const AffineMonoid& m) {
  const std::size_t d = m.ambient_rank();
  Mat gens;
  for (const Vec& g : m.generators()) {
    Vec v = g;
    v.resize(2 * d, 0);
    gens.push_back(v);
    Vec u(d, 0);
    u.insert(u.end(), g.begin(), g.end());
    gens.push_back(u);
  }
  Mat w = m.involution().value_or(identity_mat(d));
  Mat inv(2 * d, Vec(2 * d, 0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      inv[r][d + c] = w[r][c];
      inv[d + r][c] = w[r][c];
    }
  return AffineMonoid(2 * d, gens, inv);
}

namespace {

Vec parse_vector(const nlohmann::ordered_json& j, std::size_t length, const std::string& what) {
  if (!j.is_array() || j.size() != length)
    throw MonoidParseError(what + " must be an array of " + std::to_string(length) + " integers");
  Vec out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw MonoidParseError(what + " must contain integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

AffineMonoid monoid_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw MonoidParseError("monoid must be a JSON object");
  if (!j.contains("ambient_rank") || !j["ambient_rank"].is_number_unsigned())
    throw MonoidParseError("ambient_rank must be a non-negative integer");
  const std::size_t d = j["ambient_rank"].get<std::size_t>();
  if (!j.contains("generators") || !j["generators"].is_array()) throw MonoidParseError("generators must be an array");
  Mat gens;
  for (const auto& g : j["generators"]) gens.push_back(parse_vector(g, d, "generator"));
  std::optional<Mat> w;
  if (j.contains("involution") && !j["involution"].is_null()) {
    if (!j["involution"].is_array() || j["involution"].size() != d)
      throw MonoidParseError("involution must be a d x d matrix");
    Mat m;
    for (const auto& row : j["involution"]) m.push_back(parse_vector(row, d, "involution row"));
    w = m;
  }
  return AffineMonoid(d, gens, w);
}

nlohmann::ordered_json monoid_to_json(const AffineMonoid& m) {
  nlohmann::ordered_json j;
  j["ambient_rank"] = m.ambient_rank();
  j["generators"] = m.generators();
  j["involution"] = m.involution() ? nlohmann::ordered_json(*m.involution()) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace rthh
