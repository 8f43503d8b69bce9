#include <gtest/gtest.h>

#include "rthh/cube.hpp"

using namespace rthh;

namespace {

SimplicialChains circle_chains(std::size_t depth = 5) { return normalized_chains(two_gon_model(depth)); }

ChainMap identity_chain_map(const ChainComplex& c) {
  ChainMap f;
  f.lowest = c.lowest();
  for (int k = c.lowest(); k <= c.top(); ++k) {
    SparseMatrix m(c.dim(k), c.dim(k));
    for (std::size_t i = 0; i < c.dim(k); ++i) m.add(i, i, 1);
    f.components.push_back(m);
  }
  return f;
}

ChainMap zero_chain_map(const ChainComplex& from, const ChainComplex& to) {
  ChainMap f;
  f.lowest = from.lowest();
  for (int k = from.lowest(); k <= from.top(); ++k) f.components.emplace_back(to.dim(k), from.dim(k));
  return f;
}

ChainCube one_cube(const ChainComplex& a, const ChainComplex& b, const ChainMap& f) {
  ChainCube cube{1, {a, b}, {{f}, {ChainMap{}}}};
  return cube;
}

}  // namespace

TEST(TotalCofiber, IdentityOneCubeIsAcyclic) {
  const ChainComplex x = circle_chains().complex;
  auto tot = total_cofiber(one_cube(x, x, identity_chain_map(x)));
  EXPECT_TRUE(homology(tot).acyclic());
  EXPECT_TRUE(homology(total_fiber(one_cube(x, x, identity_chain_map(x)))).acyclic());
}

TEST(TotalCofiber, MapToZeroSuspends) {
  const ChainComplex x = circle_chains().complex;
  const ChainComplex zero = ChainComplex::zero(0, x.top(), x.certified_top());
  auto cube = one_cube(x, zero, zero_chain_map(x, zero));
  auto cof = homology(total_cofiber(cube));
  EXPECT_EQ(cof.at(0).betti, 0u);
  EXPECT_EQ(cof.at(1).betti, 1u);
  EXPECT_EQ(cof.at(2).betti, 1u);
  // Fiber of X -> 0 is X itself.
  auto fib = homology(total_fiber(cube));
  EXPECT_EQ(fib.at(0).betti, 1u);
  EXPECT_EQ(fib.at(1).betti, 1u);
}

TEST(TotalCofiber, FiberIsCofiberShiftedDown) {
  auto pt = normalized_chains(point_model(5));
  auto circle = circle_chains();
  SimplicialMap vertex{"vertex", [](std::size_t q, const Cell&) { return Cell(q + 1, 0); }};
  auto f = induced_chain_map(point_model(5), pt, two_gon_model(5), circle, vertex);
  auto cube = one_cube(pt.complex, circle.complex, f);
  auto cof = homology(total_cofiber(cube));
  auto fib = homology(total_fiber(cube));
  for (int k = fib.lowest; k + 1 <= cof.top() && k <= fib.top(); ++k) EXPECT_EQ(fib.at(k), cof.at(k + 1)) << k;
}

TEST(TotalCofiber, SquareWithSingleNonzeroVertex) {
  const ChainComplex x = circle_chains().complex;
  const ChainComplex zero = ChainComplex::zero(0, x.top(), x.certified_top());
  ChainCube cube;
  cube.dimension = 2;
  cube.vertices = {zero, zero, zero, x};
  cube.edges.assign(4, std::vector<ChainMap>(2));
  cube.edges[0][0] = zero_chain_map(zero, zero);
  cube.edges[0][1] = zero_chain_map(zero, zero);
  cube.edges[1][1] = zero_chain_map(zero, x);
  cube.edges[2][0] = zero_chain_map(zero, x);
  auto h = homology(total_cofiber(cube));
  EXPECT_EQ(h.at(0).betti, 1u);
  EXPECT_EQ(h.at(1).betti, 1u);
  EXPECT_EQ(h.at(2).betti, 0u);
  // Dually the total fiber sees X shifted down by two.
  auto f = homology(total_fiber(cube));
  EXPECT_EQ(f.lowest, -2);
  EXPECT_EQ(f.at(-2).betti, 1u);
  EXPECT_EQ(f.at(-1).betti, 1u);
}

TEST(TotalCofiber, IdentityDirectionGivesAcyclicSquare) {
  // X -> Y in direction 1 repeated along an identity in direction 0.
  auto pt = normalized_chains(point_model(5));
  auto circle = circle_chains();
  SimplicialMap vertex{"vertex", [](std::size_t q, const Cell&) { return Cell(q + 1, 0); }};
  auto f = induced_chain_map(point_model(5), pt, two_gon_model(5), circle, vertex);
  ChainCube cube;
  cube.dimension = 2;
  cube.vertices = {pt.complex, pt.complex, circle.complex, circle.complex};
  cube.edges.assign(4, std::vector<ChainMap>(2));
  cube.edges[0][0] = identity_chain_map(pt.complex);
  cube.edges[0][1] = f;
  cube.edges[1][1] = f;
  cube.edges[2][0] = identity_chain_map(circle.complex);
  EXPECT_TRUE(validate_functoriality(cube).passed());
  EXPECT_TRUE(homology(total_cofiber(cube)).acyclic());
}

TEST(TotalCofiber, RejectsNoncommutingSquare) {
  const ChainComplex x = circle_chains().complex;
  ChainCube cube;
  cube.dimension = 2;
  cube.vertices = {x, x, x, x};
  cube.edges.assign(4, std::vector<ChainMap>(2));
  cube.edges[0][0] = identity_chain_map(x);
  cube.edges[0][1] = identity_chain_map(x);
  cube.edges[1][1] = identity_chain_map(x);
  cube.edges[2][0] = zero_chain_map(x, x);
  EXPECT_FALSE(validate_functoriality(cube).passed());
  EXPECT_THROW(total_cofiber(cube), std::logic_error);
}

TEST(PhiCube, Cells) {
  // x = 0: no emptiness; the factor is a point exactly when 1 is in I.
  for (Subset j = 0; j < 4; ++j) {
    auto c = phi_cell(1, j, {0});
    EXPECT_FALSE(c.empty);
    EXPECT_EQ(c.point_factor[0], (j & 2u) != 0);
  }
  // x = 3 lies in P_1 but not in P_0: empty exactly when 0 is not in I.
  for (Subset j = 0; j < 4; ++j) EXPECT_EQ(phi_cell(1, j, {3}).empty, (j & 1u) == 0);
  EXPECT_EQ(homeomorphic_direction({3}), 1u);
  EXPECT_EQ(homeomorphic_direction({-2}), 0u);
  EXPECT_EQ(homeomorphic_direction({0}), 0u);
  // x = (1, -1): sum 0 so in P_0, in P_1, not in P_2; factors stay S^sigma.
  for (Subset j = 0; j < 8; ++j) {
    auto c = phi_cell(2, j, {1, -1});
    EXPECT_EQ(c.empty, (j & 4u) == 0);
    EXPECT_FALSE(c.point_factor[0]);
    EXPECT_FALSE(c.point_factor[1]);
  }
  EXPECT_EQ(homeomorphic_direction({1, -1}), 1u);
}

TEST(PhiCube, HomeomorphicDirectionIsIdentity) {
  for (const Vec& x : {Vec{0}, Vec{2}, Vec{-1}}) {
    const std::size_t i = homeomorphic_direction(x);
    auto cube = build_phi_cube(1, x, 5);
    EXPECT_TRUE(validate_functoriality(cube).passed());
    for (Subset j = 0; j < 4; ++j) {
      if (j & (1u << i)) continue;
      const auto& from = cube.vertices[j];
      const auto& to = cube.vertices[j | (1u << i)];
      ASSERT_EQ(from.has_value(), to.has_value());
      if (!from) continue;
      for (std::size_t q = 0; q <= 5; ++q) {
        EXPECT_EQ(from->cells(q), to->cells(q));
        for (const Cell& c : from->cells(q)) EXPECT_EQ(cube.edges[j][i].apply(q, c), c);
      }
    }
  }
}

TEST(PhiCube, InvalidN) { EXPECT_THROW(build_phi_cube(3, {0, 0, 0}, 5), std::invalid_argument); }

TEST(PhiCube, VanishingAndNegativeControl) {
  EXPECT_EQ(pn_invariance_check(1, 2, 4).status, CheckStatus::kPass);
  EXPECT_EQ(pn_invariance_check(2, 1, 3, 2).status, CheckStatus::kPass);
  auto control = phi_cube_check(1, {0}, 4, PhiVariant::kDirectionZeroCollapsed);
  EXPECT_EQ(control.status, CheckStatus::kFail);
  EXPECT_TRUE(validate_functoriality(build_phi_cube(1, {0}, 5, PhiVariant::kDirectionZeroCollapsed)).passed());
}

TEST(PhiCube, ParallelMatchesSerial) {
  EXPECT_EQ(pn_invariance_check(2, 1, 2, 1).to_json().dump(), pn_invariance_check(2, 1, 2, 4).to_json().dump());
}
