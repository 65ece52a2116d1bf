#include "udenom/json_io.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

#include "udenom/errors.hpp"

namespace udenom {

namespace {

using nlohmann::json;

json parse_checked(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void check_schema(const json& doc) {
  if (doc.contains("schema") && doc.at("schema") != 1)
    throw ParseError("unsupported schema version");
}

GroupSpec group_spec_from_doc(const json& doc) {
  if (!doc.is_object()) throw ParseError("group description: object expected");
  check_schema(doc);
  const std::string kind = doc.at("kind").get<std::string>();

  if (kind == "elements") {
    ElementsSpec spec;
    for (const auto& elem : doc.at("eigenvalues")) {
      RootMultiset multiset;
      for (const auto& ev : elem) {
        const long long num = ev.at("num").get<long long>();
        const long long den = ev.at("den").get<long long>();
        const long long mult = ev.value<long long>("mult", 1);
        if (den < 1) throw ParseError("eigenvalue: den must be >= 1");
        if (mult < 1) throw ParseError("eigenvalue: mult must be >= 1");
        multiset[RootFraction::reduced(num, den)] += mult;
      }
      if (multiset.empty()) throw ParseError("element with no eigenvalues");
      spec.elements.push_back(std::move(multiset));
    }
    if (spec.elements.empty()) throw ParseError("elements: empty group");
    return spec;
  }

  if (kind == "permutation") {
    PermSpec spec;
    spec.n = doc.at("n").get<long long>();
    if (spec.n < 1) throw ParseError("permutation: n must be >= 1");
    if (doc.contains("generators"))
      for (const auto& gen : doc.at("generators")) {
        std::vector<long long> images;
        for (const auto& x : gen) images.push_back(x.get<long long>());
        spec.generators.push_back(std::move(images));
      }
    return spec;
  }

  if (kind == "family") {
    FamilySpec spec;
    const std::string name = doc.at("name").get<std::string>();
    if (name == "symmetric")
      spec.family = Family::Symmetric;
    else if (name == "alternating")
      spec.family = Family::Alternating;
    else
      throw ParseError("family: unknown name \"" + name + "\"");
    spec.n = doc.at("n").get<long long>();
    if (spec.n < 1) throw ParseError("family: n must be >= 1");
    return spec;
  }

  throw ParseError("group description: unknown kind \"" + kind + "\"");
}

json factored_to_doc(const CycloFactored& f) {
  json factors = json::array();
  for (const auto& [key, exp] : f.factors()) {
    json degree = json::array();
    for (long long x : key.degree()) degree.push_back(x);
    factors.push_back(json{{"degree", std::move(degree)}, {"exponent", exp}});
  }
  return json{{"arity", f.arity()}, {"factors", std::move(factors)}};
}

}  // namespace

GroupSpec group_spec_from_json(const std::string& text) {
  const json doc = parse_checked(text);
  try {
    return group_spec_from_doc(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("group description: ") + e.what());
  }
}

WeightSystem weight_system_from_json(const std::string& text) {
  const json doc = parse_checked(text);
  try {
    if (!doc.is_object()) throw ParseError("weight system: object expected");
    check_schema(doc);
    const json& w = doc.at("weights");
    if (!w.is_array() || w.empty())
      throw ParseError("weight system: nonempty weights array expected");

    WeightSystem ws;
    if (w.front().is_number()) {
      // Rank-1 shorthand: a flat integer list, graded by total degree.
      ws.l = 1;
      ws.r = 1;
      for (const auto& x : w) ws.weights.push_back({x.get<long long>()});
      ws.degrees.assign(ws.weights.size(), DegreeVector{1});
    } else {
      ws.l = doc.at("l").get<int>();
      ws.r = doc.at("r").get<int>();
      for (const auto& row : w) {
        std::vector<long long> entries;
        for (const auto& x : row) entries.push_back(x.get<long long>());
        ws.weights.push_back(std::move(entries));
      }
      for (const auto& row : doc.at("degrees")) {
        DegreeVector entries;
        for (const auto& x : row) entries.push_back(x.get<long long>());
        ws.degrees.push_back(std::move(entries));
      }
    }
    try {
      ws.validate();
    } catch (const ConsistencyError& e) {
      throw ParseError(e.what());
    }
    return ws;
  } catch (const json::exception& e) {
    throw ParseError(std::string("weight system: ") + e.what());
  }
}

std::string factored_to_json(const CycloFactored& f) {
  json doc = factored_to_doc(f);
  doc["schema"] = 1;
  return doc.dump();
}

CycloFactored factored_from_json(const std::string& text) {
  const json doc = parse_checked(text);
  try {
    if (!doc.is_object()) throw ParseError("factored value: object expected");
    check_schema(doc);
    CycloFactored f;
    for (const auto& item : doc.at("factors")) {
      DegreeVector degree;
      for (const auto& x : item.at("degree")) degree.push_back(x.get<long long>());
      const long long exp = item.at("exponent").get<long long>();
      if (degree.empty()) throw ParseError("factor: empty degree");
      bool nonzero = false;
      for (long long x : degree) {
        if (x < 0) throw ParseError("factor: negative degree entry");
        nonzero |= x > 0;
      }
      if (!nonzero) throw ParseError("factor: zero degree");
      if (exp < 1) throw ParseError("factor: exponent must be >= 1");
      try {
        f.multiply_by(degree, exp);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("factored value: ") + e.what());
  }
}

std::string rational_to_json(const RationalFn& f) {
  json terms = json::array();
  for (const auto& [exps, coeff] : f.numerator.terms()) {
    json e = json::array();
    for (long long x : exps) e.push_back(x);
    terms.push_back(json{{"coefficient", coeff.get_str()}, {"exponents", std::move(e)}});
  }
  json doc{{"schema", 1},
           {"numerator", json{{"terms", std::move(terms)}}},
           {"denominator", factored_to_doc(f.denominator)}};
  return doc.dump();
}

}  // namespace udenom
