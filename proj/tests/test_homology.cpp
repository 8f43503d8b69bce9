#include <gtest/gtest.h>

#include <random>

#include "rthh/homology.hpp"
#include "rthh/nerves.hpp"

using namespace rthh;

namespace {

AffineMonoid n_triv() { return AffineMonoid(1, {{1}}, Mat{{1}}); }
AffineMonoid n2_swap() { return AffineMonoid(2, {{1, 0}, {0, 1}}, Mat{{0, 1}, {1, 0}}); }

HomologyGroup z(std::size_t betti, std::vector<BigInt> torsion = {}) { return {betti, std::move(torsion)}; }

std::vector<HomologyGroup> groups(const TruncatedDihedralSet& x, bool pointed = false) {
  return homology(normalized_chains(x, pointed).complex).groups;
}

// Boundary ranks read off a dense rational rank computation, an independent
// route to the Betti numbers.
std::size_t dense_rank(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) a[r][c] = static_cast<long>(v);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t p = rank;
    while (p < m.rows && a[p][c] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows; ++r)
      if (r != rank && a[r][c] != 0) {
        Rational f = a[r][c] / a[rank][c];
        for (std::size_t k = c; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
      }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Sparse, InvariantsMatchDenseSmithForm) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), coin(0, 2), size(1, 9);
  for (int trial = 0; trial < 150; ++trial) {
    SparseMatrix m(size(rng), size(rng));
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c)
        if (coin(rng) == 0) m.add(r, c, entry(rng));
    const MatrixInvariants inv = matrix_invariants(m);
    const SmithForm snf = smith_normal_form(m.dense());
    std::vector<BigInt> torsion;
    for (const BigInt& f : snf.invariant_factors)
      if (f != 1) torsion.push_back(f);
    EXPECT_EQ(inv.rank, snf.rank);
    EXPECT_EQ(inv.torsion, torsion);
    EXPECT_EQ(inv.rank, dense_rank(m));
  }
}

TEST(Sparse, Diagonal) {
  SparseMatrix m(2, 2);
  m.add(0, 0, 2);
  m.add(1, 1, 3);
  auto inv = matrix_invariants(m);
  EXPECT_EQ(inv.rank, 2u);
  EXPECT_EQ(inv.torsion, std::vector<BigInt>{6});
}

TEST(ChainComplex, RejectsNonzeroSquare) {
  SparseMatrix d1(1, 1), d2(1, 1);
  d1.add(0, 0, 1);
  d2.add(0, 0, 1);
  EXPECT_THROW(ChainComplex(0, {1, 1, 1}, {SparseMatrix(0, 1), d1, d2}, 1), std::logic_error);
}

TEST(ChainComplex, TorsionComplex) {
  // Z --2--> Z: H_0 = Z/2.
  SparseMatrix d(1, 1);
  d.add(0, 0, 2);
  ChainComplex c(0, {1, 1}, {SparseMatrix(0, 1), d}, 1);
  EXPECT_EQ(homology(c, 0), z(0, {2}));
  EXPECT_EQ(homology(c, 1), z(0));
  EXPECT_EQ(homology(c).at(0).to_string(), "Z/2");
}

TEST(ChainComplex, CertifiedRangeEnforced) {
  auto c = normalized_chains(point_model(3)).complex;
  EXPECT_EQ(c.certified_top(), 2);
  EXPECT_THROW(homology(c, 3), std::out_of_range);
  EXPECT_EQ(homology(c).groups.size(), 3u);
}

TEST(Homology, Point) {
  EXPECT_EQ(groups(point_model(5)), (std::vector<HomologyGroup>{z(1), z(0), z(0), z(0), z(0)}));
  EXPECT_TRUE(homology(normalized_chains(point_model(4), true).complex).acyclic());
}

TEST(Homology, TwoGonCircle) {
  EXPECT_EQ(groups(two_gon_model(5)), (std::vector<HomologyGroup>{z(1), z(1), z(0), z(0), z(0)}));
  auto pointed = groups(two_gon_model(5).with_basepoint({0}), true);
  EXPECT_EQ(pointed[0], z(0));
  EXPECT_EQ(pointed[1], z(1));
}

TEST(Homology, TwoPoints) {
  EXPECT_EQ(groups(two_points_model(3))[0], z(2));
  EXPECT_EQ(groups(two_points_model(3))[1], z(0));
}

TEST(Homology, IntervalIsContractible) {
  EXPECT_EQ(groups(interval_model(5)), (std::vector<HomologyGroup>{z(1), z(0), z(0), z(0), z(0)}));
  EXPECT_EQ(groups(wedge_of_intervals_model(4)), (std::vector<HomologyGroup>{z(1), z(0), z(0), z(0)}));
}

TEST(Homology, DihedralNerveWeightPieces) {
  EXPECT_EQ(groups(dihedral_nerve(n_triv(), 5, Vec{0})), (std::vector<HomologyGroup>{z(1), z(0), z(0), z(0), z(0)}));
  for (std::int64_t d = 1; d <= 4; ++d)
    EXPECT_EQ(groups(dihedral_nerve(n_triv(), 5, Vec{d})), (std::vector<HomologyGroup>{z(1), z(1), z(0), z(0), z(0)}))
        << d;
}

TEST(Homology, DirectSumOfComplexes) {
  // Two disjoint circles as a product with two points: Betti numbers add.
  auto x = product(underlying(two_points_model(5)), underlying(two_gon_model(5)));
  EXPECT_EQ(groups(x), (std::vector<HomologyGroup>{z(2), z(2), z(0), z(0), z(0)}));
}

TEST(Homology, Torus) {
  auto x = product(two_gon_model(5), two_gon_model(5));
  EXPECT_EQ(groups(x), (std::vector<HomologyGroup>{z(1), z(2), z(1), z(0), z(0)}));
}

TEST(Homology, TableRendering) {
  auto t = homology(normalized_chains(two_gon_model(3)).complex);
  EXPECT_EQ(t.to_text(), "   q  H_q\n   0  Z\n   1  Z\n   2  0\n");
  EXPECT_EQ(t.to_json()["degrees"][1]["betti"], 1);
}

TEST(Cone, IdentityIsAcyclic) {
  auto x = two_gon_model(4);
  auto c = normalized_chains(x);
  auto f = induced_chain_map(x, c, x, c, identity_map());
  EXPECT_TRUE(is_chain_map(c.complex, c.complex, f));
  EXPECT_TRUE(homology(mapping_cone(c.complex, c.complex, f)).acyclic());
}

TEST(Certificate, Examples) {
  auto circle = two_gon_model(9);
  EXPECT_EQ(z2_equivalence_certificate("id", circle, circle, identity_map(), 3).status, CheckStatus::kPass);

  SimplicialMap vertex{"vertex", [](std::size_t q, const Cell&) { return Cell(q + 1, 0); }};
  auto r = z2_equivalence_certificate("vertex", point_model(9), circle, vertex, 3);
  EXPECT_EQ(r.status, CheckStatus::kFail);
  EXPECT_EQ(r.witness["part"], "underlying");
  EXPECT_EQ(r.witness["degree"], 1);

  EXPECT_THROW(z2_equivalence_certificate("shallow", circle, circle, identity_map(), 4), std::invalid_argument);
}

TEST(Certificate, SumCollapse) {
  const std::size_t n = 2;
  for (std::int64_t d = 0; d <= 3; ++d) {
    auto x = tensor_interval(n_triv(), 2 * n + 3, Vec{d});
    auto y = constant_object(n_triv(), 2 * n + 3, {{d}});
    EXPECT_EQ(z2_equivalence_certificate("drep.1", x, y, sum_map(1), n).status, CheckStatus::kPass) << d;
  }
  auto m = n2_swap();
  for (const Vec& w : {Vec{1, 0}, Vec{1, 1}, Vec{2, 1}}) {
    auto x = tensor_interval(m, 2 * n + 3, w);
    auto y = constant_object(m, 2 * n + 3, weight_orbit(m, w));
    auto r = z2_equivalence_certificate("drep.1", x, y, sum_map(2), n);
    EXPECT_EQ(r.status, CheckStatus::kPass) << r.to_json().dump(1);
  }
}

TEST(Certificate, SubdividedFixedPointsOfNerve) {
  for (std::int64_t d = 1; d <= 3; ++d) {
    auto fixed = fixed_points(segal_subdivide(dihedral_nerve(n_triv(), 9, Vec{d}), 4));
    EXPECT_EQ(groups(fixed), (std::vector<HomologyGroup>{z(2), z(0), z(0), z(0)})) << d;
  }
}
