#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "daha/coeff.hpp"
#include "daha/daha.hpp"
#include "daha/root_data.hpp"
#include "daha/torus.hpp"
#include "daha/weyl.hpp"

namespace daha::io {

using nlohmann::json;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weights: {"fin": [...], "delta": k, "omega0": c}; coweights use "d", "c".
json to_json(const AffineWeight& w);
json to_json(const AffineCoweight& w);
AffineWeight weight_from_json(const json& j, const RootDatum& rd);
AffineCoweight coweight_from_json(const json& j, const RootDatum& rd);

// Group elements: {"word": [i, ...]} with the canonical reduced word.  Any
// word (not necessarily reduced) or a bare array is accepted on input.
json to_json(const AffineWeylGroup& W, const AffineWeylElt& w);
AffineWeylElt element_from_json(const json& j, const AffineWeylGroup& W);

// Polynomials: list of {"coeff": n, "t": e, "weight": {...}} in serialization order.
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j, const RootDatum& rd);

// Fractions: {"num": poly, "den": [{"factor": poly, "mult": k}, ...]}.
json to_json(const RationalFn& f);
RationalFn rational_fn_from_json(const json& j, const RootDatum& rd);

// Normal forms: list of {"T": {"word": [...]}, "coeff": poly} in canonical order.
json to_json(const AffineWeylGroup& W, const DahaElt& a);
DahaElt daha_elt_from_json(const json& j, const Daha& H);

// Rational characters with values as decimal fraction strings ("5", "-3/7").
json to_json(const TorusChar<Rational>& h);
TorusChar<Rational> character_from_json(const json& j, std::size_t rank);

/// A Cartan matrix given as a nested array or as a JSON string holding one.
RootDatum::Matrix cartan_from_json(const json& j);

/// Cartan matrix, positive roots, theta, theta^vee and alpha_0^vee = c - theta^vee.
json datum_report(const RootDatum& rd);

}  // namespace daha::io
