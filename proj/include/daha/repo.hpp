#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "daha/daha.hpp"
#include "daha/field.hpp"
#include "daha/torus.hpp"
#include "daha/weyl.hpp"

namespace daha {

class NotInIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Straightening produced a term outside the ideal; this is a bug, never a
/// property of the input.
class TriangularityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A finite set of affine Weyl group elements closed downward under the
/// Bruhat order, listed by (length, reduced word).
class BruhatIdeal {
 public:
  static BruhatIdeal ball(const AffineWeylGroupPtr& group, std::size_t max_length);
  static BruhatIdeal generated_by(const AffineWeylGroupPtr& group, const std::vector<AffineWeylElt>& gens);
  /// Validates downward closure; throws std::invalid_argument otherwise.
  static BruhatIdeal from_elements(const AffineWeylGroupPtr& group, std::vector<AffineWeylElt> elements);

  const AffineWeylGroup& group() const { return *group_; }
  const std::vector<AffineWeylElt>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const AffineWeylElt& w) const { return index_.count(w) > 0; }
  std::size_t index_of(const AffineWeylElt& w) const;

 private:
  BruhatIdeal(AffineWeylGroupPtr group, std::vector<AffineWeylElt> elements);

  AffineWeylGroupPtr group_;
  std::vector<AffineWeylElt> elements_;
  std::unordered_map<AffineWeylElt, std::size_t, AffineWeylEltHash> index_;
};

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  const F zero = a.empty() || a[0].empty() ? F() : field_from_int(a[0][0], 0);
  Matrix<F> c(n, std::vector<F>(m, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (field_is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// Basis of {x : C x = 0}, from the reduced row echelon form of C.
template <class F>
std::vector<std::vector<F>> null_space(Matrix<F> c, std::size_t cols, const F& like) {
  const F zero = field_from_int(like, 0), one = field_from_int(like, 1);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < c.size(); ++col) {
    std::size_t p = row;
    while (p < c.size() && field_is_zero(c[p][col])) ++p;
    if (p == c.size()) continue;
    std::swap(c[p], c[row]);
    F inv = field_inverse(c[row][col]);
    for (auto& x : c[row]) x *= inv;
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (r == row || field_is_zero(c[r][col])) continue;
      F f = c[r][col];
      for (std::size_t j = col; j < cols; ++j) c[r][j] -= f * c[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<F> x(cols, zero);
    x[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = zero - c[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Truncation of the induced right module chi_{h,zeta} (x)_{R_t} H to the
/// span of T_v, v in a Bruhat ideal.  Right multiplication by X_lambda maps
/// T_v to sum_u chi(f_u) T_u where T_v X_lambda = sum_u f_u T_u.
template <class F>
class InducedTrunc {
 public:
  InducedTrunc(DahaPtr algebra, BruhatIdeal ideal, TorusChar<F> h)
      : algebra_(std::move(algebra)), ideal_(std::move(ideal)), h_(std::move(h)) {
    if (h_.omega.size() != algebra_->rank()) throw DatumMismatch("character of wrong rank");
  }

  const BruhatIdeal& ideal() const { return ideal_; }
  const TorusChar<F>& character() const { return h_; }
  const Daha& algebra() const { return *algebra_; }

  /// lambda -> h(v lambda): the diagonal of the X-action at T_v.
  TorusChar<F> weight_of_basis(const AffineWeylElt& v) const {
    if (!ideal_.contains(v)) throw NotInIdeal("basis element outside the ideal");
    return algebra_->group().act_on_character(algebra_->group().inverse(v), h_);
  }

  /// Rows are built by induction on length: T_v X = T_s (T_{sv} X), where
  /// s is the first letter of the reduced word of v.  Results are cached.
  const Matrix<F>& x_action_matrix(const AffineWeight& lambda) const {
    if (auto it = cache_.find(lambda); it != cache_.end()) return it->second;
    const AffineWeylGroup& W = algebra_->group();
    const std::size_t n = ideal_.size();
    const F zero = field_from_int(h_.zeta, 0);
    Matrix<F> m(n, std::vector<F>(n, zero));
    std::vector<DahaElt> prods(n);
    for (std::size_t r = 0; r < n; ++r) {
      const AffineWeylElt& v = ideal_.elements()[r];
      if (r == 0) {
        prods[r] = algebra_->make_X(lambda);
      } else {
        const std::size_t s = W.reduced_word(v).front();
        prods[r] = algebra_->left_mul_T(s, prods[ideal_.index_of(W.multiply(W.simple(s), v))]);
      }
      for (const auto& [u, f] : prods[r].terms()) {
        if (!ideal_.contains(u))
          throw TriangularityViolation("T_" + W.word_string(v) + " X_lambda has a term at T_" + W.word_string(u) +
                                       " outside the ideal");
        const std::size_t c = ideal_.index_of(u);
        // the ideal is listed by length, so Bruhat-lower terms sit left of the diagonal
        if (c > r)
          throw TriangularityViolation("T_" + W.word_string(v) + " X_lambda has a term at T_" + W.word_string(u) +
                                       " above the diagonal");
        m[r][c] = f.evaluate(h_);
      }
    }
    return cache_.emplace(lambda, std::move(m)).first->second;
  }

  /// omega_1..omega_n, delta, omega_0.
  std::vector<AffineWeight> spanning_set() const { return algebra_->datum().weight_basis(); }

  /// Row vectors m (coordinates in the T_v basis) with
  /// m (X_lambda - lambda(h'))^N = 0 for every lambda in the spanning set.
  /// The matrices are triangular, so N = number of diagonal entries equal to
  /// lambda(h') suffices.
  std::vector<std::vector<F>> generalized_weight_space(const TorusChar<F>& hp) const {
    const std::size_t n = ideal_.size();
    Matrix<F> stacked;  // rows: columns of each power, so that C x = 0 <=> x B = 0
    for (const AffineWeight& lam : spanning_set()) {
      Matrix<F> a = x_action_matrix(lam);  // copy
      const F c = hp.value(lam);
      std::size_t mult = 0;
      for (std::size_t i = 0; i < n; ++i) {
        a[i][i] -= c;
        mult += field_is_zero(a[i][i]);
      }
      if (mult == 0) return {};
      Matrix<F> p = a;
      for (std::size_t e = 1; e < mult; ++e) p = mat_mul(p, a);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<F> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = p[i][j];
        stacked.push_back(std::move(col));
      }
    }
    return null_space(std::move(stacked), n, h_.zeta);
  }

 private:
  DahaPtr algebra_;
  BruhatIdeal ideal_;
  TorusChar<F> h_;
  mutable std::map<AffineWeight, Matrix<F>> cache_;
};

struct RegularityCertificate {
  bool regular = false;
  int bound = 0;
  /// Set when a relation was found: tau^k = 1 (m = 0) or tau^k = zeta^m.
  std::optional<std::pair<int, int>> witness;
  std::string reason;
};

/// tau is not a root of unity and tau^k != zeta^m for 1 <= k, m <= bound.
RegularityCertificate is_regular_pair(const Rational& tau, const Rational& zeta, int bound);

/// h(omega_i) = i-th prime from 5 on, h(omega_0) the next one; these values
/// are multiplicatively independent, so the W~-action on h is free.
TorusChar<Rational> generic_character(std::size_t rank, const Rational& tau = 2, const Rational& zeta = 3);

/// Reduction of a rational character modulo p; throws std::domain_error if
/// a denominator vanishes.
TorusChar<ModP> reduce_mod_p(const TorusChar<Rational>& h, std::uint64_t p);

/// {w h : l(w) <= L} with duplicates removed, in ball order.
template <class F>
std::vector<TorusChar<F>> orbit_ball(const AffineWeylGroup& group, const TorusChar<F>& h, std::size_t L) {
  std::vector<TorusChar<F>> out;
  for (const AffineWeylElt& w : group.enumerate_ball(L)) {
    TorusChar<F> g = group.act_on_character(w, h);
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace daha
