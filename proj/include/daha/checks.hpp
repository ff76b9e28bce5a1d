#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "daha/coeff.hpp"
#include "daha/daha.hpp"
#include "daha/fixedpoint.hpp"
#include "daha/repo.hpp"
#include "daha/weyl.hpp"

namespace daha {

/// Outcome of one named property check over a family of cases.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;
  /// Decided by exact arithmetic (no sampling).
  bool exact = true;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    passed = false;
    if (detail.empty()) detail = "first failure: " + what;
  }
};

using CheckList = std::vector<CheckResult>;

/// omega_1..omega_n, delta, omega_0, alpha_0 and omega_0 - omega_1: a
/// Z-spanning set of X~ with a few mixed weights.
std::vector<AffineWeight> relation_test_weights(const RootDatum& rd);

/// Order of s_i s_j, or 0 if infinite.
int coxeter_order(const AffineWeylGroup& W, std::size_t i, std::size_t j);

/// Random normal-form element: up to max_terms terms T_w with l(w) <= max_len
/// and small monomial coefficients.
DahaElt random_element(const Daha& H, const std::vector<AffineWeylElt>& ball, std::mt19937_64& rng,
                       std::size_t max_terms = 3);

/// All products of subwords of the reduced word of w.
std::vector<AffineWeylElt> subword_products(const AffineWeylGroup& W, const AffineWeylElt& w);

// Each suite returns its checks sorted by name.

/// quadratic, braid, inverse, x_delta_q, x_group_law, cross.
CheckList daha_relation_checks(const Daha& H);
/// y_commute, y_group_law, y_zero.
CheckList y_checks(const Daha& H);
/// The same relations for the generator images on a window.
CheckList fp_relation_checks(const FixedPointModel& fp, const WindowPtr& win, const EqualityMode& mode,
                             std::mt19937_64& rng);
/// multiplicativity and injectivity_oracle on random pairs with support
/// length <= max_len (the window margin must be >= 2 max_len).
CheckList fp_homomorphism_checks(const FixedPointModel& fp, const WindowPtr& win, std::size_t pairs,
                                 std::size_t max_len, const EqualityMode& mode, std::mt19937_64& rng);
/// a_{v,w} = 1 and additivity of inversion sets for l(v), l(w) <= maxlen.
CheckList structure_constant_checks(const FixedPointModel& fp, std::size_t maxlen);
/// pairing invariance (ball pairing_len), length_step and inversion_count
/// (ball pairing_len), bruhat_subword (ball bruhat_len).
CheckList combinatorial_checks(const AffineWeylGroup& W, std::size_t pairing_len, std::size_t bruhat_len);
/// s-wall concentration: independence of (lambda, mu) and agreement with -1 - rho(T).
CheckList wall_checks(const FixedPointModel& fp, const WindowPtr& win, const EqualityMode& mode,
                      std::mt19937_64& rng);
/// Triangularity, commutativity, product law, spectrum and weight-space
/// dimensions of a truncated induced module.
CheckList module_checks(const InducedTrunc<Rational>& M, bool expect_generic);
/// modp equality agrees with exact equality on random pairs of fractions.
CheckList equality_mode_checks(std::size_t rank, std::size_t pairs, const EqualityMode& modp, std::mt19937_64& rng);

}  // namespace daha
