#include <gtest/gtest.h>

#include "oracles.hpp"
#include "waldcone/cone.hpp"
#include "waldcone/dp4catalog.hpp"

using namespace waldcone;

namespace {

SurfaceConfig make(int r, std::vector<const char*> curves) {
  SurfaceConfig cfg{r, std::nullopt, {}};
  for (auto c : curves) cfg.neg_curves.push_back(parse_class(c, r));
  return cfg;
}

DivisorClass combine(const std::vector<std::pair<const char*, int>>& terms, int r) {
  DivisorClass s = DivisorClass::zero(r);
  for (auto [c, k] : terms) s = s + Integer(k) * parse_class(c, r);
  return s;
}

DivisorClass sum_of(const std::vector<DivisorClass>& G, const std::vector<Integer>& lam) {
  DivisorClass s = DivisorClass::zero(G.front().rank());
  for (std::size_t i = 0; i < G.size(); ++i) s = s + lam[i] * G[i];
  return s;
}

const SurfaceConfig& d5() {
  static const SurfaceConfig cfg = find_type("(1,D5,1)").config();
  return cfg;
}

}  // namespace

TEST(ConeMembership, ConicThroughD5Points) {
  // Generators in order E_12, E_23, E_34, E_45, L_123, E_5; the system is square and triangular.
  auto gens = effective_generators(d5());
  auto lam = cone_membership(target_class(2, 1, ones(5)), gens);
  ASSERT_TRUE(lam);
  std::vector<Rational> expected{1, 2, 3, 2, 2, 1};
  EXPECT_EQ(*lam, expected);
}

TEST(ConeMembership, LineThroughD5PointsIsAbsent) {
  EXPECT_FALSE(cone_membership(target_class(1, 1, ones(5)), effective_generators(d5())));
}

TEST(ConeMembership, ZeroIsPresent) {
  auto gens = effective_generators(d5());
  auto lam = cone_membership(DivisorClass::zero(5), gens);
  ASSERT_TRUE(lam);
  EXPECT_EQ(*lam, std::vector<Rational>(gens.size()));
}

TEST(MonoidMembership, D5QuinticDecomposition) {
  auto gens = effective_generators(d5());
  auto lam = monoid_membership(target_class(5, 3, ones(5)), gens);
  ASSERT_TRUE(lam);
  // Independent generators: the decomposition is unique.
  EXPECT_EQ(*lam, (std::vector<Integer>{2, 4, 6, 3, 5, 0}));
}

TEST(MonoidMembership, A4SepticDecomposition) {
  auto cfg = find_type("(2,A4,3)(a)").config();
  auto gens = effective_generators(cfg);
  DivisorClass D = target_class(7, 4, ones(5));
  EXPECT_EQ(combine({{"L_124", 6}, {"L_45", 1}, {"E_12", 2}, {"E_23", 4}, {"E_45", 3}}, 5), D);
  auto lam = monoid_membership(D, gens);
  ASSERT_TRUE(lam);
  EXPECT_EQ(sum_of(gens, *lam), D);
}

TEST(MonoidMembership, NonicDecomposition) {
  auto cfg = find_type("(3,2A1A2,4)").config();
  auto gens = effective_generators(cfg);
  DivisorClass D = target_class(9, 5, ones(5));
  EXPECT_EQ(combine({{"L_124", 4}, {"L_345", 3}, {"L_13", 2}, {"E_12", 1}, {"E_45", 2}}, 5), D);
  auto lam = monoid_membership(D, gens);
  ASSERT_TRUE(lam);
  EXPECT_EQ(sum_of(gens, *lam), D);
  for (const auto& x : *lam) EXPECT_GE(x, 0);
}

TEST(MonoidMembership, RejectsBelowTheConstant) {
  EXPECT_FALSE(monoid_membership(target_class(8, 5, ones(5)), effective_generators(d5())));
  EXPECT_FALSE(monoid_membership(target_class(1, 1, ones(5)), effective_generators(d5())));
}

TEST(MonoidMembership, ZeroTargetAndEmptyGenerators) {
  auto lam = monoid_membership(DivisorClass::zero(5), effective_generators(d5()));
  ASSERT_TRUE(lam);
  for (const auto& x : *lam) EXPECT_EQ(x, 0);
  MonoidSolver empty({});
  EXPECT_TRUE(empty.solve(DivisorClass::zero(2)));
  EXPECT_FALSE(empty.solve(DivisorClass::basis(2, 0)));
}

TEST(MonoidMembership, BoundingFailure) {
  // e1 - e2 and e2 - e1 admit no class pairing positively with both.
  std::vector<DivisorClass> gens{parse_class("E_12", 2), DivisorClass{0, -1, 1}};
  EXPECT_THROW(MonoidSolver{gens}, BoundingFailureError);
}

TEST(IsNef, Examples) {
  EXPECT_TRUE(is_nef(-canonical_class(5), d5()));
  auto generic = find_type("(5,∅,16)").config();
  EXPECT_TRUE(is_nef(target_class(5, 2, ones(5)), generic));
  for (const auto& t : catalog()) EXPECT_TRUE(is_nef(DivisorClass::basis(5, 0), t.config())) << t.label();
  EXPECT_FALSE(is_nef(DivisorClass::basis(5, 1), d5()));
  EXPECT_THROW(is_nef(DivisorClass::basis(2, 0), make(2, {"L"})), ConfigurationError);
}

TEST(Waldschmidt, D5Type) {
  auto wr = waldschmidt(d5(), ones(5));
  EXPECT_EQ(wr.value, Rational(5, 3));
  ASSERT_TRUE(wr.certificate);
  EXPECT_TRUE(verify_certificate(*wr.certificate, d5()));
  EXPECT_EQ(wr.dual_value, Rational(5, 3));
}

TEST(Waldschmidt, ZeroMultiplicities) {
  auto wr = waldschmidt(d5(), Multiplicities(5, 0));
  EXPECT_EQ(wr.value, 0);
  EXPECT_FALSE(wr.certificate);
}

TEST(Waldschmidt, ThreeGeneralPoints) {
  auto cfg = make(3, {"E_1", "E_2", "E_3", "L_12", "L_13", "L_23"});
  auto expected = oracle::scan_minimum(effective_generators(cfg), ones(3), 12, 20);
  ASSERT_TRUE(expected);
  EXPECT_EQ(*expected, Rational(3, 2));
  auto wr = waldschmidt(cfg, ones(3));
  EXPECT_EQ(wr.value, *expected);
  EXPECT_TRUE(verify_certificate(*wr.certificate, cfg));
}

TEST(Waldschmidt, TwoGeneralPointsUnequalMultiplicities) {
  auto cfg = make(2, {"E_1", "E_2", "L_12"});
  auto expected = oracle::scan_minimum(effective_generators(cfg), {2, 1}, 12, 20);
  ASSERT_TRUE(expected);
  auto wr = waldschmidt(cfg, {2, 1});
  EXPECT_EQ(wr.value, 2);
  EXPECT_EQ(wr.value, *expected);
  EXPECT_EQ(wr.certificate->nef, parse_class("L_1", 2));
}

TEST(Waldschmidt, SmallRanks) {
  EXPECT_EQ(waldschmidt(SurfaceConfig{1, std::nullopt, {}}, {3}).value, 3);
  EXPECT_EQ(waldschmidt(SurfaceConfig{0, std::nullopt, {}}, {}).value, 0);
}

TEST(Waldschmidt, Errors) {
  auto tangent = make(2, {"E_12", "E_2", "L_12"});
  tangent.proximity = ProximityMatrix(2, {{2, 1}});
  EXPECT_THROW(waldschmidt(tangent, {1, 2}), ProximityViolationError);
  EXPECT_EQ(waldschmidt(tangent, {1, 1}).value, 1);
  EXPECT_THROW(waldschmidt(make(2, {"E_12"}), {1, 1}), InconsistentConfigurationError);
  EXPECT_THROW(waldschmidt(make(2, {"L"}), {1, 1}), ConfigurationError);
  EXPECT_THROW(waldschmidt(d5(), {1, 1}), DimensionError);
  EXPECT_THROW(waldschmidt(d5(), {1, 1, 1, 1, -1}), ArgumentError);
}

TEST(VerifyCertificate, A4Pair) {
  auto cfg = find_type("(2,A4,3)(a)").config();
  Certificate c{ones(5), 7, 4, {}, parse_class("[4,-1,-1,-1,-2,-2]", 5)};
  for (auto [g, k] : std::vector<std::pair<const char*, int>>{{"L_124", 6}, {"L_45", 1}, {"E_12", 2}, {"E_23", 4}, {"E_45", 3}}) {
    c.decomposition.emplace_back(parse_class(g, 5), Rational(k));
  }
  EXPECT_TRUE(verify_certificate(c, cfg));
}

TEST(VerifyCertificate, NonicPair) {
  auto cfg = find_type("(3,2A1A2,4)").config();
  Certificate c{ones(5), 9, 5, {}, parse_class("[5,-2,-2,-3,-1,-1]", 5)};
  for (auto [g, k] : std::vector<std::pair<const char*, int>>{{"L_124", 4}, {"L_345", 3}, {"L_13", 2}, {"E_12", 1}, {"E_45", 2}}) {
    c.decomposition.emplace_back(parse_class(g, 5), Rational(k));
  }
  EXPECT_TRUE(verify_certificate(c, cfg));
}

TEST(VerifyCertificate, RejectsBrokenCertificates) {
  auto wr = waldschmidt(d5(), ones(5));
  Certificate good = *wr.certificate;
  ASSERT_TRUE(verify_certificate(good, d5()));

  Certificate zero_f = good;
  zero_f.nef = DivisorClass::zero(5);
  EXPECT_FALSE(verify_certificate(zero_f, d5()));

  Certificate wrong_sum = good;
  wrong_sum.decomposition.front().second += 1;
  EXPECT_FALSE(verify_certificate(wrong_sum, d5()));

  Certificate foreign = good;
  foreign.decomposition.emplace_back(parse_class("L_45", 5), Rational(0));
  EXPECT_FALSE(verify_certificate(foreign, d5()));

  Certificate not_nef = good;
  not_nef.nef = DivisorClass::basis(5, 1);
  EXPECT_FALSE(verify_certificate(not_nef, d5()));

  Certificate not_orthogonal = good;
  not_orthogonal.nef = DivisorClass::basis(5, 0);
  EXPECT_FALSE(verify_certificate(not_orthogonal, d5()));

  Certificate negative = good;
  negative.d = -negative.d;
  EXPECT_FALSE(verify_certificate(negative, d5()));
}

TEST(AlphaDegree, Examples) {
  EXPECT_EQ(alpha_degree(find_type("(5,∅,16)").config(), ones(5)), 2);
  EXPECT_EQ(alpha_degree(d5(), ones(5)), 2);
  EXPECT_EQ(alpha_degree(d5(), Multiplicities(5, 0)), 0);
  EXPECT_EQ(alpha_degree(d5(), {3, 3, 3, 3, 3}), 5);
}

TEST(Chudnovsky, Examples) {
  EXPECT_TRUE(chudnovsky_check(d5(), ones(5)));
  EXPECT_TRUE(chudnovsky_check(find_type("(5,∅,16)").config(), ones(5)));
  EXPECT_TRUE(chudnovsky_check(d5(), Multiplicities(5, 0)));
}
