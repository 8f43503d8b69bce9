#include <random>

#include <gtest/gtest.h>

#include "rthh/monoid.hpp"
#include "rthh/monoid_checks.hpp"

using namespace rthh;

namespace {

AffineMonoid p0_n2() { return AffineMonoid(2, {{-1, 0}, {0, -1}, {1, -1}, {-1, 1}}); }
AffineMonoid two_three() { return AffineMonoid(1, {{2}, {3}}); }
AffineMonoid n2_swap() { return AffineMonoid(2, {{1, 0}, {0, 1}}, Mat{{0, 1}, {1, 0}}); }
AffineMonoid n_triv() { return AffineMonoid(1, {{1}}, Mat{{1}}); }

// Oracle: brute-force membership with coefficients up to bound.
bool enumerate_member(const Mat& gens, const Vec& x, int bound) {
  std::vector<int> c(gens.size(), 0);
  for (;;) {
    Vec s(x.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) s = add(s, scale(c[i], gens[i]));
    if (s == x) return true;
    std::size_t k = 0;
    while (k < c.size() && ++c[k] > bound) c[k++] = 0;
    if (k == c.size()) return false;
  }
}

}  // namespace

TEST(Monoid, Contains) {
  EXPECT_TRUE(AffineMonoid::naturals(2).contains({2, 3}));
  EXPECT_FALSE(p0_n2().contains({1, 0}));
  EXPECT_FALSE(two_three().contains({1}));
  EXPECT_TRUE(two_three().contains({5}));
}

TEST(Monoid, ContainsAgreesWithEnumeration) {
  const std::vector<AffineMonoid> ms = {two_three(), p0_n2(), AffineMonoid(2, {{1, 0}, {1, 2}, {0, 3}}),
                                        AffineMonoid(2, {{1, 1}, {-1, 1}, {0, 2}})};
  for (const auto& m : ms)
    for (const Vec& x : AffineMonoid::integers(m.ambient_rank()).window_elements(3))
      EXPECT_EQ(m.contains(x), enumerate_member(m.generators(), x, 6)) << to_string(x);
}

TEST(Monoid, GroupCompletion) {
  EXPECT_EQ(group_completion(AffineMonoid::naturals(1)), (Mat{{1}}));
  EXPECT_EQ(group_completion(two_three()), (Mat{{1}}));
  EXPECT_EQ(group_completion(AffineMonoid(2, {{1, 1}})), (Mat{{1, 1}}));
}

TEST(Monoid, Units) {
  AffineMonoid nz = direct_sum(AffineMonoid::naturals(1), AffineMonoid::integers(1));
  AffineMonoid u = units(nz);
  EXPECT_TRUE(u.contains({0, 5}));
  EXPECT_FALSE(u.contains({1, 0}));
  AffineMonoid f0 = units(p0_n2());
  for (const Vec& x : AffineMonoid::integers(2).window_elements(3))
    EXPECT_EQ(f0.contains(x), x[0] + x[1] == 0);
  EXPECT_TRUE(AffineMonoid::naturals(2).is_sharp());
}

TEST(Monoid, Sharpen) {
  Sharpening s = sharpen(p0_n2());
  EXPECT_EQ(s.monoid.ambient_rank(), 1u);
  EXPECT_TRUE(s.monoid.is_sharp());
  Vec img = s.projection({-1, 0});
  EXPECT_EQ(img.size(), 1u);
  EXPECT_EQ(std::abs(img[0]), 1);
  EXPECT_TRUE(s.monoid.contains(img));
  EXPECT_FALSE(s.monoid.contains(neg(img)));
  Sharpening n2 = sharpen(AffineMonoid::naturals(2));
  EXPECT_EQ(n2.monoid.ambient_rank(), 2u);
}

TEST(Monoid, Saturation) {
  EXPECT_TRUE(is_saturated(AffineMonoid::naturals(2)));
  EXPECT_FALSE(is_saturated(two_three()));
  EXPECT_TRUE(is_saturated(p0_n2()));
  EXPECT_TRUE(is_saturated(AffineMonoid(2, {{2, 0}, {1, 1}, {0, 2}})));
  EXPECT_FALSE(is_saturated(AffineMonoid(2, {{2, 0}, {3, 0}, {0, 1}})));
  EXPECT_THROW(is_saturated(AffineMonoid::naturals(5)), DimensionCapError);
}

TEST(Monoid, FaceLocalization) {
  AffineMonoid n2 = AffineMonoid::naturals(2);
  AffineMonoid zn = face_localization(n2, {0});
  EXPECT_TRUE(zn.contains({-3, 1}));
  EXPECT_FALSE(zn.contains({0, -1}));
  EXPECT_TRUE(face_localization(AffineMonoid::naturals(1), {}).is_sharp());
  EXPECT_TRUE(face_localization(n2, {0, 1}).contains({-1, -1}));
  EXPECT_THROW(face_localization(AffineMonoid(2, {{1, 0}, {0, 1}, {1, 1}}), {0, 1}),
               std::invalid_argument);
}

TEST(Monoid, InvolutionValidation) {
  EXPECT_THROW(AffineMonoid(1, {{1}}, Mat{{2}}), std::invalid_argument);
  EXPECT_THROW(AffineMonoid(1, {{1}}, Mat{{-1}}), std::invalid_argument);
  EXPECT_NO_THROW(AffineMonoid(1, {{1}, {-1}}, Mat{{-1}}));
}

TEST(Monoid, DirectSumAndDouble) {
  AffineMonoid s = direct_sum(n_triv(), n2_swap());
  ASSERT_TRUE(s.involution().has_value());
  EXPECT_EQ(*s.involution(), (Mat{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  AffineMonoid d = double_monoid(AffineMonoid::naturals(1));
  EXPECT_EQ(*d.involution(), (Mat{{0, 1}, {1, 0}}));
  EXPECT_EQ(double_monoid(AffineMonoid::zero(0)).ambient_rank(), 0u);
  EXPECT_EQ(group_completion(s), hermite_basis(identity_mat(3), 3));
}

TEST(Exactify, NaturalsTrivialInvolution) {
  ExactifiedMonoid e = exactify(n_triv());
  EXPECT_EQ(*e.carrier.involution(), (Mat{{1, 0}, {1, -1}}));
  EXPECT_TRUE(e.carrier.contains({0, -4}));
  EXPECT_FALSE(e.carrier.contains({-1, 0}));
  EXPECT_EQ(e.eta({1, 1}), (Vec{2, 1}));
}

TEST(Exactify, TriangleOnSamples) {
  std::mt19937_64 rng(11);
  for (const auto& m : {n_triv(), n2_swap(), AffineMonoid::integers(1).with_involution(Mat{{-1}})}) {
    ExactifiedMonoid e = exactify(m);
    auto elems = e.doubled.window_elements(3);
    for (int i = 0; i < 40; ++i) {
      const Vec& x = elems[rng() % elems.size()];
      EXPECT_EQ(e.theta_ex(e.eta(x)), e.theta(x));
      Vec y = e.eta(x);
      EXPECT_EQ(e.carrier.involute(e.carrier.involute(y)), y);
    }
  }
}

TEST(Pushout, OverZero) {
  AffineMonoid zero = AffineMonoid::zero(0);
  MonoidHom f(zero, AffineMonoid::naturals(1), Mat{{}});
  MonoidHom g(zero, two_three(), Mat{{}});
  IntegralPushout p = integral_pushout(f, g);
  EXPECT_EQ(p.monoid.ambient_rank(), 2u);
  EXPECT_TRUE(p.monoid.contains(add(mat_vec(p.left, {1}), mat_vec(p.right, {3}))));
  EXPECT_FALSE(p.monoid.contains(mat_vec(p.right, {1})));
}

TEST(FixedMonoid, Examples) {
  FixedMonoid n = conjugation_fixed_monoid(n_triv());
  EXPECT_TRUE(n.certified);
  EXPECT_TRUE(n.monoid.contains({2}));
  EXPECT_FALSE(n.monoid.contains({-1}));
  FixedMonoid sw = conjugation_fixed_monoid(n2_swap());
  for (const Vec& x : AffineMonoid::integers(2).window_elements(3))
    EXPECT_EQ(sw.monoid.contains(x), x[0] + x[1] >= 0);
  FixedMonoid z = conjugation_fixed_monoid(AffineMonoid::integers(1).with_involution(Mat{{-1}}));
  EXPECT_TRUE(z.monoid.contains({-2}));
}

TEST(UnitBaseChange, Instances) {
  AffineMonoid n = n_triv();
  AffineMonoid nz = direct_sum(n, AffineMonoid::integers(1).with_involution(Mat{{1}}));
  MonoidHom incl(n, nz, Mat{{1}, {0}});
  EXPECT_EQ(check_unit_base_change(incl).status, CheckStatus::kPass);
  EXPECT_EQ(check_unit_base_change(MonoidHom::identity(n)).status, CheckStatus::kPass);
  MonoidHom twice(n, n, Mat{{2}});
  EXPECT_EQ(check_unit_base_change(twice).status, CheckStatus::kPreconditionFailed);

  EXPECT_EQ(check_strict3_squares(incl).status, CheckStatus::kPass)
      << check_strict3_squares(incl).to_json().dump();
  EXPECT_EQ(check_strict3_squares(MonoidHom::identity(n2_swap())).status, CheckStatus::kPass);
  EXPECT_EQ(check_strict3_squares(twice).status, CheckStatus::kPreconditionFailed);
}

TEST(PairBaseChange, Switch) {
  AffineMonoid n = n_triv();
  AffineMonoid nz = direct_sum(n, AffineMonoid::integers(1).with_involution(Mat{{1}}));
  EXPECT_EQ(check_pair_base_change(MonoidHom(n, nz, Mat{{1}, {0}})).status, CheckStatus::kPass);
  MonoidSet s{n, 1, 1};
  EXPECT_EQ(s.base_change(MonoidHom(n, nz, Mat{{1}, {0}})).orbit_count(), 3u);
}

TEST(ChartSurjectivity, Examples) {
  const AffineMonoid n2 = AffineMonoid::naturals(2);
  EXPECT_EQ(faces(n2).size(), 4u);
  EXPECT_EQ(check_chart_surjectivity(MonoidHom::identity(n2)).status, CheckStatus::kPass);

  const AffineMonoid n = AffineMonoid::naturals(1);
  EXPECT_EQ(check_chart_surjectivity(MonoidHom(n, n, Mat{{2}})).status, CheckStatus::kFail);

  const AffineMonoid p0(2, {{-1, 0}, {0, -1}, {1, -1}, {-1, 1}});
  EXPECT_EQ(check_chart_surjectivity(MonoidHom::identity(p0)).status, CheckStatus::kPass);

  const AffineMonoid nz(2, {{1, 0}, {0, 1}, {0, -1}});
  EXPECT_EQ(check_chart_surjectivity(MonoidHom(n, nz, Mat{{1}, {0}})).status, CheckStatus::kPass);

  const AffineMonoid gaps(1, {{2}, {3}});
  EXPECT_EQ(check_chart_surjectivity(MonoidHom::identity(gaps)).status, CheckStatus::kPreconditionFailed);
}
