#include "phomfly/serialize.hpp"

#include <limits>

namespace phomfly {

using nlohmann::json;

namespace {

json coeff_to_json(const Integer& c) {
  if (mpz_sizeinbase(c.get_mpz_t(), 2) < 63) return json(static_cast<std::int64_t>(c.get_si()));
  return json(c.get_str());
}

Integer coeff_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer c;
    if (c.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient string");
    return c;
  }
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

}  // namespace

json to_json(const MultiPoly& p) {
  json out = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json exps = json::array();
    for (unsigned i = 0; i < kNumVars; ++i) exps.push_back(it->mono.exponent(i));
    out.push_back(json::array({coeff_to_json(it->coeff), exps}));
  }
  return out;
}

json to_json(const RationalFn& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const ExtScalar& s) {
  return json{{"part0", to_json(s.part0())}, {"part1", to_json(s.part1())}};
}

MultiPoly multipoly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array() || t[1].size() != kNumVars)
      throw std::invalid_argument("term must be [coeff, [eq, ez, eX, eY]]");
    unsigned e[kNumVars];
    for (unsigned i = 0; i < kNumVars; ++i) {
      if (!t[1][i].is_number_unsigned() && !(t[1][i].is_number_integer() && t[1][i].get<long>() >= 0))
        throw std::invalid_argument("exponents must be non-negative integers");
      e[i] = t[1][i].get<unsigned>();
    }
    terms.push_back({Monomial::from_exponents(e[0], e[1], e[2], e[3]), coeff_from_json(t[0])});
  }
  return MultiPoly::from_terms(std::move(terms));
}

RationalFn rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("fraction must have num and den");
  return {multipoly_from_json(j.at("num")), multipoly_from_json(j.at("den"))};
}

ExtScalar ext_from_json(const json& j) {
  if (!j.is_object() || !j.contains("part0") || !j.contains("part1"))
    throw std::invalid_argument("scalar must have part0 and part1");
  return {rational_from_json(j.at("part0")), rational_from_json(j.at("part1"))};
}

}  // namespace phomfly
