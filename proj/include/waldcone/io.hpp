#pragma once

// JSON forms of configurations, certificates and catalog entries.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "waldcone/cone.hpp"
#include "waldcone/config.hpp"
#include "waldcone/dp4catalog.hpp"
#include "waldcone/errors.hpp"
#include "waldcone/lattice.hpp"

namespace waldcone {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline Json integer_to_json(const Integer& z) {
  if (auto v = to_int64(z)) return *v;
  return z.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

inline DivisorClass class_from_json(const Json& j, int r) {
  if (j.is_string()) return parse_class(j.get<std::string>(), r);
  if (j.is_array()) {
    std::vector<Integer> c;
    for (const auto& x : j) c.push_back(integer_from_json(x));
    if (static_cast<int>(c.size()) != r + 1) {
      throw ParseError("class " + j.dump() + " has " + std::to_string(c.size()) + " coordinates, expected " + std::to_string(r + 1));
    }
    return DivisorClass(std::move(c));
  }
  throw ParseError("expected a class string or coordinate array, got " + j.dump());
}

inline SurfaceConfig config_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ParseError("configuration must be a JSON object");
    if (!j.contains("r") || !j["r"].is_number_integer()) throw ParseError("configuration needs an integer \"r\"");
    SurfaceConfig cfg;
    cfg.r = j["r"].get<int>();
    require_rank(cfg.r);
    if (j.contains("proximity") && !j["proximity"].is_null()) {
      ProximityMatrix P(cfg.r);
      for (const auto& pair : j["proximity"]) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("proximity entries are [j,i] pairs, got " + pair.dump());
        P.set(pair[0].get<int>(), pair[1].get<int>());
      }
      cfg.proximity = P;
    }
    if (j.contains("negative_curves")) {
      if (!j["negative_curves"].is_array()) throw ParseError("\"negative_curves\" must be an array");
      for (const auto& c : j["negative_curves"]) cfg.neg_curves.push_back(class_from_json(c, cfg.r));
    }
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed configuration: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

inline SurfaceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open configuration file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

inline Json config_to_json(const SurfaceConfig& cfg) {
  Json j;
  j["r"] = cfg.r;
  if (cfg.proximity) {
    Json p = Json::array();
    for (auto [a, b] : cfg.proximity->pairs()) p.push_back({a, b});
    j["proximity"] = p;
  }
  j["negative_curves"] = Json::array();
  for (const auto& c : cfg.neg_curves) j["negative_curves"].push_back(format_class(c));
  return j;
}

inline Json certificate_to_json(const Certificate& c) {
  Json j;
  j["multiplicities"] = Json::array();
  for (const auto& x : c.multiplicities) j["multiplicities"].push_back(integer_to_json(x));
  j["d"] = integer_to_json(c.d);
  j["m"] = integer_to_json(c.m);
  j["decomposition"] = Json::array();
  for (const auto& [g, lam] : c.decomposition) {
    j["decomposition"].push_back({{"generator", format_class(g)}, {"coefficient", to_string(lam)}});
  }
  j["nef"] = format_class(c.nef);
  return j;
}

inline Certificate certificate_from_json(const Json& j, int r) {
  try {
    Certificate c;
    for (const auto& x : j.at("multiplicities")) c.multiplicities.push_back(integer_from_json(x));
    c.d = integer_from_json(j.at("d"));
    c.m = integer_from_json(j.at("m"));
    for (const auto& e : j.at("decomposition")) {
      c.decomposition.emplace_back(class_from_json(e.at("generator"), r), parse_rational(e.at("coefficient").get<std::string>()));
    }
    c.nef = class_from_json(j.at("nef"), r);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

inline Json type_to_json(const Dp4Type& t) {
  Json j;
  j["label"] = t.label();
  j["n"] = t.n;
  j["sigma"] = t.sigma;
  j["l"] = t.l;
  j["roots"] = Json::array();
  for (const auto& c : t.roots) j["roots"].push_back(format_class(c));
  j["lines"] = Json::array();
  for (const auto& c : t.lines) j["lines"].push_back(format_class(c));
  j["edges"] = Json::array();
  for (const auto& [a, b] : t.edges) j["edges"].push_back({format_class(a), format_class(b)});
  j["expected_alpha_hat"] = to_string(t.expected_alpha_hat);
  return j;
}

}  // namespace waldcone
