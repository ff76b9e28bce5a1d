#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "daha/coeff.hpp"
#include "daha/weyl.hpp"

namespace daha {

/// Element sum_w f_w T_w of the double affine Hecke algebra with left
/// coefficients f_w in R_t = Z[t^+-1] X~.  No zero coefficients are stored,
/// so map equality is equality in the algebra.
class DahaElt {
 public:
  using Map = std::map<AffineWeylElt, LaurentPoly>;

  DahaElt() = default;

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of T_w (zero polynomial if absent).
  LaurentPoly coeff(const AffineWeylElt& w) const;

  void add_term(const AffineWeylElt& w, const LaurentPoly& f);
  DahaElt& operator+=(const DahaElt& o);
  DahaElt& operator-=(const DahaElt& o);
  friend DahaElt operator+(DahaElt a, const DahaElt& b) { return a += b; }
  friend DahaElt operator-(DahaElt a, const DahaElt& b) { return a -= b; }
  friend DahaElt operator-(DahaElt a);
  /// f * a (left multiplication by a coefficient).
  friend DahaElt operator*(const LaurentPoly& f, const DahaElt& a);

  friend bool operator==(const DahaElt&, const DahaElt&) = default;

 private:
  Map terms_;
};

/// The algebra H over a fixed affine Weyl group, in Bernstein normal form.
///
/// Products are computed by moving coefficients left through T_{s_i} with
///   T_s X_l = X_{s l} T_s + (t - 1)(X_l - X_{s l}) / (1 - X_{-a}),
/// where the quotient is the finite geometric sum matching the sign of
/// r = <l, a^vee>, and by the Hecke rule for T_s T_w.
class Daha {
 public:
  explicit Daha(AffineWeylGroupPtr group, std::size_t max_terms = 2'000'000);

  const AffineWeylGroup& group() const { return *group_; }
  const AffineWeylGroupPtr& group_ptr() const { return group_; }
  const RootDatum& datum() const { return group_->datum(); }
  std::size_t rank() const { return group_->rank(); }

  // --- constructors ----------------------------------------------------------
  DahaElt zero() const { return {}; }
  DahaElt one() const;
  DahaElt scalar(const LaurentPoly& f) const;
  DahaElt make_T(const AffineWeylElt& w) const;
  DahaElt make_X(const AffineWeight& lambda) const;
  DahaElt make_X(const LaurentMonomial& m) const;
  /// Y_l = T_{xi_l1} T_{xi_l2}^{-1} with l = l1 - l2, l1 and l2 dominant.
  DahaElt make_Y(const AffineCoweight& lambda) const;
  /// The decomposition used by make_Y: l2 = k * 2 rho^vee with k >= 0 minimal.
  std::pair<IVec, IVec> dominant_decomposition(const IVec& lambda) const;
  bool is_dominant(const IVec& coweight) const;

  LaurentPoly t() const;
  LaurentPoly q() const;
  LaurentPoly poly_one() const { return LaurentPoly::constant(rank(), 1); }

  // --- coefficient operators -------------------------------------------------
  /// s_i applied to the weights of f.
  LaurentPoly reflect(std::size_t i, const LaurentPoly& f) const;
  /// (t - 1)(f - s_i f) / (1 - X_{-alpha_i}), computed termwise as a finite sum.
  LaurentPoly demazure(std::size_t i, const LaurentPoly& f) const;

  // --- arithmetic -------------------------------------------------------------
  /// Normal form of T_{s_i} X_lambda.
  DahaElt straighten(std::size_t i, const AffineWeight& lambda) const;
  /// T_{s_i} * a.
  DahaElt left_mul_T(std::size_t i, const DahaElt& a) const;
  /// T_{s_i}^{-1} * a, with T_s^{-1} = t^{-1} T_s + (t^{-1} - 1).
  DahaElt left_mul_T_inverse(std::size_t i, const DahaElt& a) const;
  DahaElt mul(const DahaElt& a, const DahaElt& b) const;
  DahaElt invert_T(const AffineWeylElt& w) const;
  bool equal(const DahaElt& a, const DahaElt& b) const { return a == b; }

  /// Largest length of an element in the support.
  std::size_t support_length(const DahaElt& a) const;
  std::string pretty(const DahaElt& a) const;

 private:
  void check_size(const DahaElt& a) const;

  AffineWeylGroupPtr group_;
  std::size_t max_terms_;
  std::vector<AffineWeight> simple_roots_;
  std::vector<AffineCoweight> simple_coroots_;
};

using DahaPtr = std::shared_ptr<const Daha>;

}  // namespace daha
