#include "rthh/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace rthh {

BigMatrix BigMatrix::identity(std::size_t n) {
  BigMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::from_rows(const Mat& rows, std::size_t cols) {
  BigMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("BigMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("BigMatrix: shape mismatch");
  BigMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

bool BigMatrix::operator==(const BigMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

void BigMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void BigMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void BigMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void BigMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void BigMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void BigMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool BigMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

BigMatrix BigMatrix::transpose() const {
  BigMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat BigMatrix::to_mat() const {
  Mat out(rows_, Vec(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const BigInt& x = (*this)(r, c);
      if (!x.fits_slong_p()) throw std::overflow_error("BigMatrix entry exceeds int64");
      out[r][c] = x.get_si();
    }
  return out;
}

namespace {

// Shared elimination driver. Transforms are tracked only when the pointers
// are non-null.
std::size_t diagonalize(BigMatrix& a, BigMatrix* u, BigMatrix* v, PivotStrategy strategy) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    a.add_row_multiple(dst, src, k);
    if (u) u->add_row_multiple(dst, src, k);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    a.add_col_multiple(dst, src, k);
    if (v) v->add_col_multiple(dst, src, k);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (u) u->swap_rows(x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (v) v->swap_cols(x, y);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Choose a pivot in the trailing block.
    bool found = false;
    std::size_t pr = 0, pc = 0;
    for (std::size_t i = t; i < m && !(found && strategy == PivotStrategy::kFirstNonzero); ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (!found || (strategy == PivotStrategy::kSmallestMagnitude &&
                       abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
          found = true;
          if (strategy == PivotStrategy::kFirstNonzero) break;
        }
      }
    if (!found) break;
    row_swap(t, pr);
    col_swap(t, pc);

    // Euclid on the pivot column and row. Each pass reduces every entry
    // against the pivot, then moves the smallest remainder into the pivot;
    // taking remainders one at a time makes the transforms grow very fast.
    for (;;) {
      std::size_t small = t;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (a(i, t) != 0 && (small == t || abs(a(i, t)) < abs(a(small, t)))) small = i;
      }
      if (small != t) {
        row_swap(t, small);
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (a(t, j) != 0 && (small == t || abs(a(t, j)) < abs(a(t, small)))) small = j;
      }
      if (small != t) {
        col_swap(t, small);
        continue;
      }
      // Row and column are clear; enforce divisibility on the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_add(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
  return t;
}

}  // namespace

SmithForm smith_normal_form(const BigMatrix& a, PivotStrategy strategy) {
  SmithForm out;
  out.diagonal = a;
  out.left = BigMatrix::identity(a.rows());
  out.right = BigMatrix::identity(a.cols());
  out.rank = diagonalize(out.diagonal, &out.left, &out.right, strategy);
  for (std::size_t i = 0; i < out.rank; ++i) out.invariant_factors.push_back(out.diagonal(i, i));
  return out;
}

std::vector<BigInt> invariant_factors(BigMatrix a, PivotStrategy strategy) {
  std::size_t r = diagonalize(a, nullptr, nullptr, strategy);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(a(i, i));
  return out;
}

BigMatrix unimodular_inverse(const BigMatrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unimodular_inverse: not square");
  const std::size_t n = u.rows();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = u(r, c);
    aug[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("unimodular_inverse: singular");
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  BigMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& x = aug[r][n + c];
      if (x.get_den() != 1) throw std::invalid_argument("unimodular_inverse: not unimodular");
      out(r, c) = x.get_num();
    }
  return out;
}

Mat hermite_basis(const Mat& rows, std::size_t dim) {
  BigMatrix a = BigMatrix::from_rows(rows, dim);
  const std::size_t m = a.rows();
  std::size_t cur = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < dim && cur < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t r = cur; r < m; ++r)
        if (a(r, c) != 0 && (best == m || abs(a(r, c)) < abs(a(best, c)))) best = r;
      if (best == m) break;
      a.swap_rows(cur, best);
      bool others = false;
      for (std::size_t r = cur + 1; r < m; ++r) {
        if (a(r, c) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, c).get_mpz_t(), a(cur, c).get_mpz_t());
        a.add_row_multiple(r, cur, -q);
        if (a(r, c) != 0) others = true;
      }
      if (!others) break;
    }
    if (a(cur, c) == 0) continue;
    if (a(cur, c) < 0) a.negate_row(cur);
    for (std::size_t r = 0; r < cur; ++r) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a(r, c).get_mpz_t(), a(cur, c).get_mpz_t());
      a.add_row_multiple(r, cur, -q);
    }
    pivots.push_back(c);
    ++cur;
  }
  Mat out = a.to_mat();
  out.resize(cur);
  return out;
}

bool echelon_contains(const Mat& hnf, const Vec& x) {
  Vec y = x;
  for (const Vec& row : hnf) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    for (std::size_t k = 0; k < p; ++k)
      if (y[k] != 0) return false;
    if (y[p] % row[p] != 0) return false;
    const std::int64_t c = y[p] / row[p];
    for (std::size_t k = p; k < row.size(); ++k) {
      std::int64_t t;
      if (__builtin_mul_overflow(c, row[k], &t) || __builtin_sub_overflow(y[k], t, &y[k]))
        return lattice_contains(hnf, x);
    }
  }
  for (std::int64_t v : y)
    if (v != 0) return false;
  return true;
}

std::size_t rank_of(const Mat& rows, std::size_t dim) {
  if (rows.empty()) return 0;
  return invariant_factors(BigMatrix::from_rows(rows, dim)).size();
}

std::optional<std::vector<Rational>> rational_solve(const Mat& columns, const Vec& b) {
  const std::size_t n = columns.size();
  const std::size_t m = b.size();
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != m) throw std::invalid_argument("rational_solve: ragged columns");
    for (std::size_t i = 0; i < m; ++i) aug[i][j] = static_cast<long>(columns[j][i]);
  }
  for (std::size_t i = 0; i < m; ++i) aug[i][n] = static_cast<long>(b[i]);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[r]);
    Rational inv = 1 / aug[r][c];
    for (auto& x : aug[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t k = c; k <= n; ++k) aug[i][k] -= f * aug[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  std::vector<Rational> sol(n);
  for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = aug[i][n];
  return sol;
}

std::optional<Vec> lattice_coordinates(const Mat& basis, const Vec& x) {
  if (basis.empty()) {
    if (is_zero(x)) return Vec{};
    return std::nullopt;
  }
  auto sol = rational_solve(basis, x);
  if (!sol) return std::nullopt;
  Vec out;
  out.reserve(sol->size());
  for (const Rational& q : *sol) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num().get_si());
  }
  return out;
}

std::optional<std::vector<Rational>> nonnegative_solution(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& b) {
  const std::size_t n = columns.size();
  const std::size_t m = b.size();
  if (m == 0) return std::vector<Rational>(n);
  // Tableau columns: n originals, m artificials, rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -columns[j][i] : columns[j][i];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? -b[i] : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  std::vector<Rational> cost(width);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[width - 1] -= t[i][width - 1];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t k = 0; k < width; ++k) t[i][k] -= f * t[leave][k];
    }
    Rational f = cost[enter];
    for (std::size_t k = 0; k < width; ++k) cost[k] -= f * t[leave][k];
    basis[leave] = enter;
  }
  if (cost[width - 1] != 0) return std::nullopt;
  std::vector<Rational> sol(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol[basis[i]] = t[i][width - 1];
  return sol;
}

std::optional<std::vector<Rational>> nonnegative_solution(const Mat& columns, const Vec& b) {
  std::vector<std::vector<Rational>> cols(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (auto x : columns[j]) cols[j].emplace_back(static_cast<long>(x));
  std::vector<Rational> rhs;
  for (auto x : b) rhs.emplace_back(static_cast<long>(x));
  return nonnegative_solution(cols, rhs);
}

BigInt determinant(const Mat& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  BigMatrix a = BigMatrix::from_rows(square, n);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec neg(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vec scale(std::int64_t k, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  Vec out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != x.size()) throw std::invalid_argument("apply: dimension mismatch");
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
  }
  return out;
}

Mat compose(const Mat& outer, const Mat& inner) {
  const std::size_t cols = inner.empty() ? 0 : inner[0].size();
  Mat out(outer.size(), Vec(cols, 0));
  for (std::size_t i = 0; i < outer.size(); ++i)
    for (std::size_t k = 0; k < inner.size(); ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += outer[i][k] * inner[k][j];
  return out;
}

Mat identity_mat(std::size_t n) {
  Mat out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t max_abs(const Vec& v) {
  std::int64_t m = 0;
  for (auto x : v) m = std::max<std::int64_t>(m, std::llabs(x));
  return m;
}

}  // namespace rthh
