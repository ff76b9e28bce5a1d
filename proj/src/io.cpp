#include "daha/io.hpp"

#include <algorithm>

namespace daha::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

IVec ivec_from_json(const json& j, std::size_t rank, const char* what) {
  if (!j.is_array() || j.size() != rank)
    throw ParseError(std::string(what) + " must be an array of length " + std::to_string(rank));
  IVec v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = as_int(j[i], what);
  return v;
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
      Rational r(j.get<std::string>());
      if (r.get_den() == 0) throw ParseError("zero denominator");
      r.canonicalize();
      return r;
    }
  } catch (const std::invalid_argument&) {
  }
  throw ParseError("character values must be integers or fraction strings");
}

}  // namespace

json to_json(const AffineWeight& w) { return {{"fin", w.fin.to_vector()}, {"delta", w.delta}, {"omega0", w.omega0}}; }

json to_json(const AffineCoweight& w) { return {{"fin", w.fin.to_vector()}, {"d", w.d}, {"c", w.c}}; }

AffineWeight weight_from_json(const json& j, const RootDatum& rd) {
  AffineWeight w = rd.zero_weight();
  w.fin = ivec_from_json(field(j, "fin"), rd.rank(), "weight.fin");
  if (j.contains("delta")) w.delta = as_int(j.at("delta"), "weight.delta");
  if (j.contains("omega0")) w.omega0 = as_int(j.at("omega0"), "weight.omega0");
  return w;
}

AffineCoweight coweight_from_json(const json& j, const RootDatum& rd) {
  AffineCoweight w = rd.zero_coweight();
  w.fin = ivec_from_json(field(j, "fin"), rd.rank(), "coweight.fin");
  if (j.contains("d")) w.d = as_int(j.at("d"), "coweight.d");
  if (j.contains("c")) w.c = as_int(j.at("c"), "coweight.c");
  return w;
}

json to_json(const AffineWeylGroup& W, const AffineWeylElt& w) { return {{"word", W.reduced_word(w)}}; }

AffineWeylElt element_from_json(const json& j, const AffineWeylGroup& W) {
  const json& word = j.is_array() ? j : field(j, "word");
  if (!word.is_array()) throw ParseError("word must be an array");
  std::vector<std::size_t> idx;
  for (const auto& x : word) {
    int i = as_int(x, "word letter");
    if (i < 0 || static_cast<std::size_t>(i) > W.rank())
      throw ParseError("simple reflection index " + std::to_string(i) + " out of range");
    idx.push_back(static_cast<std::size_t>(i));
  }
  return W.from_word(idx);
}

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"coeff", c}, {"t", m.t_exp}, {"weight", to_json(m.weight)}});
  return out;
}

LaurentPoly poly_from_json(const json& j, const RootDatum& rd) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    const json& c = field(t, "coeff");
    if (!c.is_number_integer()) throw ParseError("coefficient must be an integer");
    LaurentMonomial m{t.contains("t") ? as_int(t.at("t"), "t exponent") : 0,
                      t.contains("weight") ? weight_from_json(t.at("weight"), rd) : rd.zero_weight()};
    terms.emplace_back(m, c.get<std::int64_t>());
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json to_json(const RationalFn& f) {
  json den = json::array();
  for (const auto& [p, k] : f.den_factors()) den.push_back({{"factor", to_json(p)}, {"mult", k}});
  return {{"num", to_json(f.num())}, {"den", den}};
}

RationalFn rational_fn_from_json(const json& j, const RootDatum& rd) {
  RationalFn r(poly_from_json(field(j, "num"), rd));
  if (j.contains("den")) {
    for (const auto& d : j.at("den")) {
      LaurentPoly p = poly_from_json(field(d, "factor"), rd);
      int k = d.contains("mult") ? as_int(d.at("mult"), "mult") : 1;
      if (k < 0) throw ParseError("factor multiplicity must be nonnegative");
      for (int e = 0; e < k; ++e) r *= RationalFn(LaurentPoly::constant(rd.rank(), 1), p);
    }
  }
  return r;
}

json to_json(const AffineWeylGroup& W, const DahaElt& a) {
  std::vector<const DahaElt::Map::value_type*> terms;
  for (const auto& t : a.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](auto* x, auto* y) { return W.canonical_less(x->first, y->first); });
  json out = json::array();
  for (const auto* t : terms) out.push_back({{"T", to_json(W, t->first)}, {"coeff", to_json(t->second)}});
  return out;
}

DahaElt daha_elt_from_json(const json& j, const Daha& H) {
  if (!j.is_array()) throw ParseError("DAHA element must be an array of terms");
  DahaElt out;
  for (const auto& t : j) out.add_term(element_from_json(field(t, "T"), H.group()), poly_from_json(field(t, "coeff"), H.datum()));
  return out;
}

json to_json(const TorusChar<Rational>& h) {
  json om = json::array();
  for (const auto& x : h.omega) om.push_back(x.get_str());
  return {{"omega", om}, {"tau", h.tau.get_str()}, {"omega0", h.omega0.get_str()}, {"zeta", h.zeta.get_str()}};
}

TorusChar<Rational> character_from_json(const json& j, std::size_t rank) {
  TorusChar<Rational> h;
  const json& om = field(j, "omega");
  if (!om.is_array() || om.size() != rank) throw ParseError("omega must list one value per fundamental weight");
  for (const auto& x : om) h.omega.push_back(rational_from_json(x));
  h.tau = rational_from_json(field(j, "tau"));
  h.omega0 = rational_from_json(field(j, "omega0"));
  h.zeta = rational_from_json(field(j, "zeta"));
  auto nonzero = [](const Rational& x) { return sgn(x) != 0; };
  if (!std::all_of(h.omega.begin(), h.omega.end(), nonzero) || !nonzero(h.tau) || !nonzero(h.omega0) || !nonzero(h.zeta))
    throw ParseError("character values must be nonzero");
  return h;
}

RootDatum::Matrix cartan_from_json(const json& j) {
  if (j.is_string()) {
    json parsed;
    try {
      parsed = json::parse(j.get<std::string>());
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("Cartan matrix is not valid JSON: ") + e.what());
    }
    return cartan_from_json(parsed);
  }
  if (!j.is_array() || j.empty()) throw ParseError("Cartan matrix must be a nonempty array of rows");
  RootDatum::Matrix m;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) throw ParseError("Cartan matrix must be square");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(as_int(x, "Cartan entry"));
    m.push_back(std::move(r));
  }
  return m;
}

json datum_report(const RootDatum& rd) {
  json roots = json::array();
  for (const auto& r : rd.positive_roots()) roots.push_back(r.to_vector());
  return {{"rank", rd.rank()},
          {"cartan", rd.cartan()},
          {"symmetrizers", rd.symmetrizers()},
          {"simply_laced", rd.simply_laced()},
          {"positive_roots", roots},
          {"theta", rd.theta().to_vector()},
          {"theta_check", rd.theta_check().to_vector()},
          {"alpha0", to_json(rd.simple_root(0))},
          {"alpha0_check", to_json(rd.simple_coroot(0))},
          {"alpha0_check_formula", "c - theta_check"}};
}

}  // namespace daha::io
