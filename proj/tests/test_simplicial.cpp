#include <gtest/gtest.h>

#include "rthh/nerves.hpp"
#include "rthh/simplicial_checks.hpp"

using namespace rthh;

namespace {

AffineMonoid n_triv() { return AffineMonoid(1, {{1}}, Mat{{1}}); }
AffineMonoid n2_swap() { return AffineMonoid(2, {{1, 0}, {0, 1}}, Mat{{0, 1}, {1, 0}}); }
AffineMonoid z_neg() { return AffineMonoid(1, {{1}, {-1}}, Mat{{-1}}); }
AffineMonoid z_triv() { return AffineMonoid(1, {{1}, {-1}}, Mat{{1}}); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void expect_pass(const CheckReport& r) { EXPECT_EQ(r.status, CheckStatus::kPass) << r.to_json().dump(1); }

}  // namespace

TEST(Nerve, WeightOneDegreeOne) {
  auto x = dihedral_nerve(n_triv(), 3, Vec{1});
  EXPECT_EQ(x.cells(1), (std::vector<Cell>{{0, 1}, {1, 0}}));
  EXPECT_EQ(x.cyclic(1, {0, 1}), (Cell{1, 0}));
  EXPECT_EQ(x.involution(1, {0, 1}), (Cell{0, 1}));
  EXPECT_EQ(x.involution(1, {1, 0}), (Cell{1, 0}));
}

TEST(Nerve, CompositionCounts) {
  for (std::int64_t d = 0; d <= 4; ++d) {
    auto x = dihedral_nerve(n_triv(), 6, Vec{d});
    for (std::size_t q = 0; q <= 6; ++q) EXPECT_EQ(x.size(q), binomial(d + q, q)) << d << " " << q;
  }
}

TEST(Nerve, ZeroMonoidPositiveWeightEmpty) {
  auto x = dihedral_nerve(AffineMonoid::zero(1), 4, Vec{2});
  EXPECT_EQ(x.total_size(), 0u);
}

TEST(Nerve, RelationsHold) {
  for (std::int64_t d = 0; d <= 4; ++d) expect_pass(verify_relations(dihedral_nerve(n_triv(), 9, Vec{d})));
  expect_pass(verify_relations(dihedral_nerve(n2_swap(), 5, Vec{2, 1})));
  expect_pass(verify_relations(replete_nerve(n_triv(), 4, CellWindow{3})));
  expect_pass(verify_relations(replete_nerve(n2_swap(), 3, CellWindow{3, CellWindow::Norm::kL1})));
  for (std::int64_t d = 0; d <= 3; ++d) expect_pass(verify_relations(tensor_interval(n_triv(), 7, Vec{d})));
  expect_pass(verify_relations(tensor_interval(n2_swap(), 5, Vec{1, 2})));
  expect_pass(verify_relations(real_nerve(z_neg(), 4, CellWindow{2})));
  expect_pass(verify_relations(replete_splitting(n2_swap(), 4, CellWindow{3, CellWindow::Norm::kL1})));
  expect_pass(verify_relations(repletion_resolution(n2_swap(), 4, CellWindow{3, CellWindow::Norm::kL1})));
}

TEST(Nerve, BrokenConventionIsCaught) {
  // Rotating the wrong way breaks d_0 t = d_q.
  auto x = dihedral_nerve(n_triv(), 3, Vec{2});
  auto ops = std::make_shared<Operators>(x.ops());
  ops->cyclic = [](std::size_t, const Cell& c) {
    Cell out = c;
    std::rotate(out.begin(), out.begin() + 1, out.end());
    return out;
  };
  std::vector<std::vector<Cell>> cells;
  for (std::size_t q = 0; q <= 3; ++q) cells.push_back(x.cells(q));
  TruncatedDihedralSet bad("bad", ops, cells);
  EXPECT_EQ(verify_relations(bad).status, CheckStatus::kFail);
}

TEST(Replete, WindowTwoDegreeOne) {
  auto x = replete_nerve(n_triv(), 1, CellWindow{2});
  std::vector<Cell> expected;
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      if (a + b >= 0) expected.push_back({a, b});
  EXPECT_EQ(x.cells(1), expected);
  auto w0 = replete_nerve(n_triv(), 1, CellWindow{2}, Vec{0});
  EXPECT_TRUE(w0.tabulated(1, {-1, 1}));
}

TEST(Replete, GroupMatchesDihedral) {
  auto r = replete_nerve(z_triv(), 3, CellWindow{2});
  auto d = dihedral_nerve(z_triv(), 3, CellWindow{2});
  for (std::size_t q = 0; q <= 3; ++q) EXPECT_EQ(r.cells(q), d.cells(q));
}

TEST(RealNerve, Examples) {
  auto pt = real_nerve(AffineMonoid::zero(0).with_involution(Mat{}), 3, CellWindow{1});
  for (std::size_t q = 0; q <= 3; ++q) EXPECT_EQ(pt.size(q), 1u);
  auto z = real_nerve(z_neg(), 2, CellWindow{1});
  EXPECT_EQ(z.cells(1), (std::vector<Cell>{{-1}, {0}, {1}}));
  EXPECT_EQ(z.involution(1, {1}), (Cell{-1}));
}

TEST(Tensor, Examples) {
  auto zero = tensor_interval(n_triv(), 4, Vec{0});
  for (std::size_t q = 0; q <= 4; ++q) EXPECT_EQ(zero.size(q), 1u);
  auto one = tensor_interval(n_triv(), 2, Vec{1});
  EXPECT_EQ(one.cells(0), (std::vector<Cell>{{0, 1}, {1, 0}}));
  EXPECT_EQ(one.involution(0, {1, 0}), (Cell{0, 1}));
  auto to_point = constant_object(n_triv(), 2, {{1}});
  expect_pass(check_simplicial_map("sum", one, to_point, sum_map(1)));
}

TEST(SumMap, CommutesOnAllNerves) {
  auto m = n2_swap();
  auto targets = constant_object(m, 4, {{2, 1}, {1, 2}});
  expect_pass(check_simplicial_map("sum", dihedral_nerve(m, 4, Vec{2, 1}), targets, sum_map(2)));
  expect_pass(check_simplicial_map("sum", tensor_interval(m, 4, Vec{2, 1}), targets, sum_map(2)));
  auto all = constant_object(m, 3, m.window_elements(3));
  expect_pass(check_simplicial_map("sum", replete_nerve(m, 3, CellWindow{2, CellWindow::Norm::kL1}), all,
                                   sum_map(2)));
}

TEST(Subdivision, ModelsAndFixedPoints) {
  expect_pass(verify_relations(two_gon_model(7)));
  expect_pass(verify_relations(interval_model(7)));
  expect_pass(verify_relations(wedge_of_intervals_model(3)));
  auto circle = two_gon_model(5);
  for (std::size_t q = 0; q <= 5; ++q) EXPECT_EQ(circle.size(q), 2 + 2 * q);
  auto fixed = fixed_points(segal_subdivide(two_gon_model(7), 3));
  for (std::size_t q = 0; q <= 3; ++q) EXPECT_EQ(fixed.size(q), 2u);
  expect_pass(check_subdivided_interval(3));
  EXPECT_THROW(segal_subdivide(two_gon_model(4), 2), std::invalid_argument);
}

TEST(Subdivision, TrivialInvolutionFixedPointsAreEverything) {
  auto x = dihedral_nerve(n_triv(), 7, Vec{2});
  auto sd = segal_subdivide(x, 3);
  auto fixed = fixed_points(segal_subdivide(underlying(x), 3));
  for (std::size_t q = 0; q <= 3; ++q) EXPECT_EQ(fixed.cells(q), sd.cells(q));
  expect_pass(verify_relations(sd));
}

TEST(Product, PointIsUnit) {
  auto x = dihedral_nerve(n_triv(), 4, Vec{2});
  auto xp = product(x, point_model(4));
  SimplicialMap f{"drop", [](std::size_t, const Cell& c) { return split_product_cell(c).first; }};
  SimplicialMap g{"pair", [](std::size_t q, const Cell& c) { return product_cell(c, Cell(q + 1, 0)); }};
  expect_pass(check_simplicial_iso("unit", xp, x, f, g));
}

TEST(Identities, SimplicialChecks) {
  for (const auto& m : {n_triv(), z_triv(), n2_swap()}) {
    expect_pass(check_drep22(m, 4, 3));
    expect_pass(check_dih25(m, 4, 3));
  }
  expect_pass(check_drep22(AffineMonoid::zero(1).with_involution(Mat{{1}}), 3, 2));
  expect_pass(check_drep4(n_triv(), n2_swap(), 3, 3));
  expect_pass(check_thrlog8(n2_swap(), z_triv(), 3, 3));
  expect_pass(check_dih15(n2_swap(), 2, 3));
  expect_pass(check_dih15(z_neg(), 2, 3));
}

TEST(Dump, Json) {
  auto j = to_json(dihedral_nerve(n_triv(), 2, Vec{1}));
  EXPECT_EQ(j["degrees"][1]["cells"].size(), 2u);
  EXPECT_EQ(j["degrees"][1]["cyclic"], nlohmann::ordered_json::parse("[1,0]"));
  EXPECT_EQ(j["degrees"][1]["faces"][0], nlohmann::ordered_json::parse("[0,0]"));
}
