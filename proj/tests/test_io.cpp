#include <gtest/gtest.h>

#include "waldcone/io.hpp"

using namespace waldcone;

TEST(ConfigJson, ParsesStringsArraysAndProximity) {
  auto cfg = config_from_json(Json::parse(R"({"r": 2, "proximity": [[2,1]], "negative_curves": ["E_12", [0,0,1], "L_12"]})"));
  EXPECT_EQ(cfg.r, 2);
  ASSERT_TRUE(cfg.proximity);
  EXPECT_TRUE((*cfg.proximity)(2, 1));
  EXPECT_EQ(cfg.neg_curves[1], DivisorClass::basis(2, 2));
  auto back = config_from_json(config_to_json(cfg));
  EXPECT_EQ(back.neg_curves, cfg.neg_curves);
  EXPECT_EQ(*back.proximity, *cfg.proximity);
}

TEST(ConfigJson, Errors) {
  EXPECT_THROW(config_from_json(Json::parse(R"([1,2])")), ParseError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"negative_curves": []})")), ParseError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"r": 9})")), UnsupportedRankError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"r": 2, "negative_curves": ["E_13"]})")), ParseError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"r": 2, "negative_curves": [[0,1]]})")), ParseError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"r": 2, "negative_curves": [7]})")), ParseError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"r": 2, "proximity": [[3,1]]})")), ParseError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"r": 2, "proximity": [[2]]})")), ParseError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ParseError);
}

TEST(CertificateJson, RoundTrip) {
  auto t = find_type("(2,A4,3)(a)");
  auto wr = waldschmidt(t.config(), ones(5));
  Json j = certificate_to_json(*wr.certificate);
  EXPECT_EQ(j["d"], 7);
  EXPECT_EQ(j["m"], 4);
  EXPECT_TRUE(j["nef"].is_string());
  for (const auto& e : j["decomposition"]) EXPECT_TRUE(e["coefficient"].is_string());
  Certificate back = certificate_from_json(j, 5);
  EXPECT_EQ(back.d, wr.certificate->d);
  EXPECT_EQ(back.nef, wr.certificate->nef);
  EXPECT_TRUE(verify_certificate(back, t.config()));
}

TEST(CertificateJson, FractionsAndBigIntegers) {
  Certificate c{{1, 1}, Integer("100000000000000000000"), 3, {{parse_class("L_12", 2), Rational(5, 3)}}, parse_class("L", 2)};
  Json j = certificate_to_json(c);
  EXPECT_EQ(j["d"], "100000000000000000000");
  EXPECT_EQ(j["decomposition"][0]["coefficient"], "5/3");
  EXPECT_EQ(certificate_from_json(j, 2).d, c.d);
  EXPECT_EQ(certificate_from_json(j, 2).decomposition[0].second, Rational(5, 3));
}

TEST(CatalogJson, TypeExport) {
  Json j = type_to_json(find_type("(1,D5,1)"));
  EXPECT_EQ(j["label"], "(1,D5,1)");
  EXPECT_EQ(j["roots"].size(), 5u);
  EXPECT_EQ(j["expected_alpha_hat"], "5/3");
}

TEST(Rationals, TextForms) {
  EXPECT_EQ(to_string(Rational(10, 6)), "5/3");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(parse_rational("9/5"), Rational(9, 5));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_EQ(floor_of(Rational(-5, 3)), -2);
  EXPECT_EQ(ceil_of(Rational(5, 3)), 2);
  EXPECT_EQ(ceil_of(Rational(2)), 2);
}
