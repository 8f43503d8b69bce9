// Exact integer and rational linear algebra on small dense matrices.
//
// Everything here works over GMP integers/rationals so that intermediate
// growth during elimination never overflows. Matrices are row-major vectors
// of rows; they are small (at most a few hundred rows) in every use.

#ifndef RTHH_INTEGER_MATRIX_HPP
#define RTHH_INTEGER_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rthh {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

using BigInt = mpz_class;
using Rational = mpq_class;

class BigMatrix {
 public:
  BigMatrix() = default;
  BigMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static BigMatrix identity(std::size_t n);
  static BigMatrix from_rows(const Mat& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  BigMatrix operator*(const BigMatrix& other) const;
  bool operator==(const BigMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  bool is_zero() const;
  BigMatrix transpose() const;

  // Converts back to machine integers; throws std::overflow_error when an
  // entry does not fit.
  Mat to_mat() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

enum class PivotStrategy {
  kSmallestMagnitude,  // pivot on the smallest nonzero |entry| remaining
  kFirstNonzero,       // pivot on the first nonzero entry in scan order
};

struct SmithForm {
  BigMatrix left;      // U, unimodular
  BigMatrix diagonal;  // D = U * A * V
  BigMatrix right;     // V, unimodular
  std::size_t rank = 0;
  // Nonzero diagonal entries, each dividing the next.
  std::vector<BigInt> invariant_factors;
};

SmithForm smith_normal_form(const BigMatrix& a,
                            PivotStrategy strategy = PivotStrategy::kSmallestMagnitude);

// Invariant factors only; skips transform bookkeeping.
std::vector<BigInt> invariant_factors(BigMatrix a,
                                      PivotStrategy strategy = PivotStrategy::kSmallestMagnitude);

// Inverse of a unimodular matrix (determinant +-1). Throws otherwise.
BigMatrix unimodular_inverse(const BigMatrix& u);

// Row-style Hermite normal form: the returned rows form a basis of the
// lattice spanned by the input rows, in echelon form with positive pivots
// and reduced entries above each pivot. Zero rows are dropped.
Mat hermite_basis(const Mat& rows, std::size_t dim);

std::size_t rank_of(const Mat& rows, std::size_t dim);

// Integer coordinates of x with respect to a lattice basis (rows), if x lies
// in the lattice. The basis rows must be linearly independent.
std::optional<Vec> lattice_coordinates(const Mat& basis, const Vec& x);

// Membership in the lattice spanned by a hermite_basis result, by back
// substitution along the pivots. Falls back to exact arithmetic on overflow.
bool echelon_contains(const Mat& hnf, const Vec& x);

inline bool lattice_contains(const Mat& basis, const Vec& x) {
  return lattice_coordinates(basis, x).has_value();
}

// Rational solution of sum_j c_j * columns[j] = b (any one), if it exists.
std::optional<std::vector<Rational>> rational_solve(const Mat& columns, const Vec& b);

// Exact feasibility of { c >= 0 : sum_j c_j * columns[j] = b } by a
// two-phase simplex with Bland's rule. Returns a feasible point or nullopt.
std::optional<std::vector<Rational>> nonnegative_solution(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& b);

std::optional<std::vector<Rational>> nonnegative_solution(const Mat& columns, const Vec& b);

// Integer determinant of a square matrix.
BigInt determinant(const Mat& square);

std::string to_string(const Vec& v);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scale(std::int64_t k, const Vec& a);
Vec mat_vec(const Mat& m, const Vec& x);  // m * x, m has rows of length x.size()
Mat compose(const Mat& outer, const Mat& inner);  // outer * inner
Mat identity_mat(std::size_t n);
bool is_zero(const Vec& v);
std::int64_t max_abs(const Vec& v);

}  // namespace rthh

#endif  // RTHH_INTEGER_MATRIX_HPP
