#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "daha/lattice.hpp"

namespace daha {

/// Element of X~ = X^T (+) Z delta (+) Z omega_0.  The finite part is in
/// fundamental-weight coordinates.
struct AffineWeight {
  IVec fin;
  int delta = 0;
  int omega0 = 0;

  AffineWeight& operator+=(const AffineWeight& o) {
    fin += o.fin;
    delta += o.delta;
    omega0 += o.omega0;
    return *this;
  }
  AffineWeight& operator-=(const AffineWeight& o) {
    fin -= o.fin;
    delta -= o.delta;
    omega0 -= o.omega0;
    return *this;
  }
  AffineWeight& operator*=(int k) {
    fin *= k;
    delta *= k;
    omega0 *= k;
    return *this;
  }
  friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
  friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
  friend AffineWeight operator-(AffineWeight a) { return a *= -1; }
  friend AffineWeight operator*(int k, AffineWeight a) { return a *= k; }
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  friend std::strong_ordering operator<=>(const AffineWeight&, const AffineWeight&) = default;

  bool is_zero() const { return delta == 0 && omega0 == 0 && fin.is_zero(); }
  std::size_t hash() const { return fin.hash() * 31u + static_cast<std::size_t>(delta) * 7919u + static_cast<std::size_t>(omega0); }
};

/// Element of Y~ = Y^T (+) Z d (+) Z c.  The finite part is in simple-coroot
/// coordinates.
struct AffineCoweight {
  IVec fin;
  int d = 0;
  int c = 0;

  AffineCoweight& operator+=(const AffineCoweight& o) {
    fin += o.fin;
    d += o.d;
    c += o.c;
    return *this;
  }
  AffineCoweight& operator-=(const AffineCoweight& o) {
    fin -= o.fin;
    d -= o.d;
    c -= o.c;
    return *this;
  }
  AffineCoweight& operator*=(int k) {
    fin *= k;
    d *= k;
    c *= k;
    return *this;
  }
  friend AffineCoweight operator+(AffineCoweight a, const AffineCoweight& b) { return a += b; }
  friend AffineCoweight operator-(AffineCoweight a, const AffineCoweight& b) { return a -= b; }
  friend AffineCoweight operator-(AffineCoweight a) { return a *= -1; }
  friend AffineCoweight operator*(int k, AffineCoweight a) { return a *= k; }
  friend bool operator==(const AffineCoweight&, const AffineCoweight&) = default;
  friend std::strong_ordering operator<=>(const AffineCoweight&, const AffineCoweight&) = default;

  bool is_zero() const { return d == 0 && c == 0 && fin.is_zero(); }
};

/// Thrown when two lattice elements or a lattice element and a datum disagree
/// on rank.
class DatumMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite Cartan data of a simple group together with its affine extension.
///
/// Conventions: a_ij = <alpha_j, alpha_i^vee>, so the j-th simple root in
/// fundamental-weight coordinates is column j of the Cartan matrix.  Roots are
/// stored in simple-root coordinates, coroots in simple-coroot coordinates.
/// The invariant form is normalized by (theta, theta) = 2.
class RootDatum {
 public:
  using Matrix = std::vector<std::vector<int>>;

  const Matrix& cartan() const { return cartan_; }
  std::size_t rank() const { return rank_; }
  const std::vector<int>& symmetrizers() const { return symmetrizers_; }

  /// Positive roots in simple-root coordinates, ordered by height then
  /// lexicographically.
  const std::vector<IVec>& positive_roots() const { return positive_roots_; }
  const IVec& theta() const { return theta_; }
  const IVec& theta_check() const { return theta_check_; }
  bool simply_laced() const;
  /// 1 / max_i d_i: scaling so that (alpha_i, alpha_j) = d_i a_ij * form_norm.
  mpq_class form_norm() const { return mpq_class(1, d_max_); }

  // --- finite root data -------------------------------------------------
  /// <alpha, beta^vee> for roots in simple-root coordinates (beta a root).
  int root_pairing(const IVec& alpha, const IVec& beta) const;
  /// <alpha, mu^vee> for a root alpha (simple-root coordinates) and a coweight
  /// in simple-coroot coordinates.
  long long root_coweight_pairing(const IVec& alpha, const IVec& coweight) const;
  /// (alpha, beta) for elements of the root lattice.
  mpq_class root_form(const IVec& alpha, const IVec& beta) const;
  /// The coroot of a root, in simple-coroot coordinates.
  IVec coroot(const IVec& alpha) const;
  /// Root-lattice element (simple-root coordinates) to fundamental-weight
  /// coordinates.
  IVec root_to_weight(const IVec& alpha) const;
  bool is_root(const IVec& alpha) const;
  static bool is_positive(const IVec& alpha);

  // --- affine lattice elements -------------------------------------------
  AffineWeight zero_weight() const;
  AffineWeight delta() const;
  AffineWeight omega0() const;
  /// Finite fundamental weight omega_i, i in 1..n (a member of X^T).
  AffineWeight omega(std::size_t i) const;
  /// Simple affine root alpha_i, i in 0..n; alpha_0 = delta - theta.
  AffineWeight simple_root(std::size_t i) const;
  /// The weight alpha + level*delta for a finite root in simple-root coordinates.
  AffineWeight affine_root_weight(const IVec& alpha, int level) const;
  /// Z-basis of X~: omega_1..omega_n, delta, omega_0.
  std::vector<AffineWeight> weight_basis() const;

  AffineCoweight zero_coweight() const;
  AffineCoweight c() const;
  AffineCoweight d() const;
  /// Simple affine coroot, i in 0..n; alpha_0^vee = c - theta^vee.
  AffineCoweight simple_coroot(std::size_t i) const;
  /// Z-basis of Y~: alpha_1^vee..alpha_n^vee, d, c.
  std::vector<AffineCoweight> coweight_basis() const;

  // --- pairings ------------------------------------------------------------
  long long pairing(const AffineWeight& lambda, const AffineCoweight& mu) const;
  /// (lambda^vee, mu^vee) = (kappa lambda^vee, kappa mu^vee); c and d are
  /// discarded.
  mpq_class bilinear(const AffineCoweight& lambda, const AffineCoweight& mu) const;
  /// Integer form on Y^T (the form is integral on the coroot lattice).
  long long coroot_form(const IVec& lambda, const IVec& mu) const;
  /// kappa: Y^T -> X^T; c and d are discarded.
  AffineWeight kappa(const AffineCoweight& lambda) const;

  void check_weight(const AffineWeight& w) const;
  void check_coweight(const AffineCoweight& w) const;

  friend std::shared_ptr<const RootDatum> build_root_datum(const Matrix& cartan);

 private:
  RootDatum() = default;

  Matrix cartan_;
  std::size_t rank_ = 0;
  std::vector<int> symmetrizers_;
  long d_max_ = 1;
  std::vector<IVec> positive_roots_;
  IVec theta_;
  IVec theta_check_;
  std::vector<std::vector<long long>> coroot_gram_;  // (alpha_i^vee, alpha_j^vee)
  std::vector<int> kappa_scale_;                     // kappa(alpha_i^vee) = scale_i * alpha_i
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

/// Thrown by build_root_datum for malformed or non-finite-type input.
class InvalidCartan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

RootDatumPtr build_root_datum(const RootDatum::Matrix& cartan);

/// Cartan matrix of a named preset: A1, A2, A3, B2, C2, G2.
RootDatum::Matrix preset_cartan(const std::string& name);
const std::vector<std::string>& preset_names();

}  // namespace daha
