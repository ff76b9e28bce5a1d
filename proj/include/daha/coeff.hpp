#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daha/field.hpp"
#include "daha/root_data.hpp"
#include "daha/torus.hpp"

namespace daha {

/// t^t_exp * theta_weight.  The q-exponent is weight.delta (q = theta_delta).
struct LaurentMonomial {
  int t_exp = 0;
  AffineWeight weight;

  friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
  /// Serialization order: (t_exp, delta, omega0, finite weight lexicographic).
  friend std::strong_ordering operator<=>(const LaurentMonomial& a, const LaurentMonomial& b) {
    if (auto c = a.t_exp <=> b.t_exp; c != 0) return c;
    if (auto c = a.weight.delta <=> b.weight.delta; c != 0) return c;
    if (auto c = a.weight.omega0 <=> b.weight.omega0; c != 0) return c;
    return a.weight.fin <=> b.weight.fin;
  }
  LaurentMonomial operator*(const LaurentMonomial& o) const { return {t_exp + o.t_exp, weight + o.weight}; }
  LaurentMonomial inverse() const { return {-t_exp, -weight}; }

  template <class F>
  F evaluate(const TorusChar<F>& h) const {
    return field_pow(h.zeta, t_exp) * h.value(weight);
  }
};

/// Element of Z[t^+-1] X~ (the group algebra of X~ over Z[t^+-1], q = theta_delta).
/// Terms are kept sorted by monomial with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<LaurentMonomial, std::int64_t>;

  LaurentPoly() = default;
  static LaurentPoly monomial(const AffineWeight& weight, int t_exp = 0, std::int64_t coeff = 1);
  static LaurentPoly monomial(const LaurentMonomial& m, std::int64_t coeff = 1);
  /// The constant c (needs a rank to build the zero weight).
  static LaurentPoly constant(std::size_t rank, std::int64_t c);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of the given monomial (0 if absent).
  std::int64_t coeff(const LaurentMonomial& m) const;
  /// True iff the polynomial is a single monomial with coefficient +-1.
  bool is_unit() const { return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(std::int64_t k) const;
  LaurentPoly times_monomial(const LaurentMonomial& m, std::int64_t coeff = 1) const;

  /// Applies a map to every weight (e.g. a lattice automorphism) and re-sorts.
  LaurentPoly map_weights(const std::function<AffineWeight(const AffineWeight&)>& f) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  template <class F>
  F evaluate(const TorusChar<F>& h) const {
    F s = field_from_int(h.zeta, 0);
    for (const auto& [m, c] : terms_) s += field_from_int(h.zeta, c) * m.evaluate(h);
    return s;
  }

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

std::string monomial_str(const LaurentMonomial& m);

/// Thrown when a rational expression is evaluated at a pole or inverted at 0.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Fraction num / den of Laurent polynomials.  The denominator is kept as a
/// product of unit-normalized factors (no gcd reduction); equality is
/// decided by cross-multiplication.
class RationalFn {
 public:
  using Factor = std::pair<LaurentPoly, int>;

  RationalFn() = default;
  RationalFn(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  /// The denominator as a single polynomial (product of the factors).
  LaurentPoly den(std::size_t rank) const;
  const std::vector<Factor>& den_factors() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator-(RationalFn a) {
    a.num_ = -a.num_;
    return a;
  }
  RationalFn inv() const;

  /// Exact equality: a.num * (L / a.den) == b.num * (L / b.den), L = lcm of
  /// the factored denominators.
  friend bool exact_equal(const RationalFn& a, const RationalFn& b);

  /// Drops factors that occur in the numerator as an exact monomial multiple
  /// (a cheap size-control pass; the value is unchanged).
  void cancel_trivial();

  template <class F>
  F evaluate(const TorusChar<F>& h) const {
    F d = field_from_int(h.zeta, 1);
    for (const auto& [f, k] : den_) d *= field_pow(f.evaluate(h), k);
    if (field_is_zero(d)) throw PoleError("denominator vanishes at this character");
    return num_.evaluate(h) / d;
  }

  std::string str() const;

 private:
  void add_factor(const LaurentPoly& f, int mult);
  LaurentPoly lcm_cofactor(const std::vector<Factor>& lcm, std::size_t rank) const;

  LaurentPoly num_;
  std::vector<Factor> den_;
};

/// The ring homomorphism theta_lambda -> h(lambda), t -> zeta, q -> tau.
template <class F>
F evaluate(const LaurentPoly& p, const TorusChar<F>& h) {
  return p.evaluate(h);
}
template <class F>
F evaluate(const RationalFn& r, const TorusChar<F>& h) {
  return r.evaluate(h);
}

/// Equality test configuration.  In modp mode each sample is a uniformly
/// random character into Z/p; a false "equal" answer for a nonzero
/// difference of total degree D has probability <= D/p per sample.
struct EqualityMode {
  enum class Kind { Exact, ModP };
  Kind kind = Kind::Exact;
  std::uint64_t prime = 2305843009213693951ULL;  // 2^61 - 1
  int samples = 3;

  static EqualityMode exact() { return {}; }
  static EqualityMode modp(std::uint64_t p, int k);
  std::string str() const;
};

/// Uniformly random character with values in (Z/p)^*.
TorusChar<ModP> random_char_modp(std::size_t rank, std::uint64_t p, std::mt19937_64& rng);

bool equal(const RationalFn& a, const RationalFn& b, const EqualityMode& mode, std::size_t rank,
           std::mt19937_64& rng);

/// Multiplication with int64 overflow detection.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace daha
