#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "daha/lattice.hpp"
#include "daha/root_data.hpp"
#include "daha/torus.hpp"

namespace daha {

/// Element (w, lambda^vee) = w xi_{lambda^vee} of W~ = W x| Y^T.  The finite
/// part is an index into the finite Weyl group table of the owning
/// AffineWeylGroup, which makes the pair canonical.
struct AffineWeylElt {
  std::size_t finite = 0;
  IVec tr;

  friend bool operator==(const AffineWeylElt&, const AffineWeylElt&) = default;
  friend std::strong_ordering operator<=>(const AffineWeylElt&, const AffineWeylElt&) = default;
};

struct AffineWeylEltHash {
  std::size_t operator()(const AffineWeylElt& w) const noexcept { return w.tr.hash() * 131u + w.finite; }
};

/// Real affine root alpha + level * delta, alpha a finite root in simple-root
/// coordinates.
struct RealAffineRoot {
  IVec root;
  int level = 0;

  friend bool operator==(const RealAffineRoot&, const RealAffineRoot&) = default;
  friend std::strong_ordering operator<=>(const RealAffineRoot&, const RealAffineRoot&) = default;
};

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The affine Weyl group of a root datum with simple reflections s_0..s_n.
///
/// Multiplication follows (w1, l1)(w2, l2) = (w1 w2, w2^{-1} l1 + l2), so
/// xi_l w = w xi_{w^{-1} l}; s_0 = (s_theta, -theta^vee).
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatumPtr datum);

  const RootDatum& datum() const { return *datum_; }
  const RootDatumPtr& datum_ptr() const { return datum_; }
  /// n; simple indices run over 0..n.
  std::size_t rank() const { return datum_->rank(); }
  std::size_t num_simple() const { return rank() + 1; }

  // --- finite Weyl group ---------------------------------------------------
  std::size_t finite_order() const { return finite_.size(); }
  std::size_t finite_multiply(std::size_t a, std::size_t b) const { return mult_[a * finite_.size() + b]; }
  std::size_t finite_inverse(std::size_t a) const { return finite_[a].inverse; }
  const std::vector<std::size_t>& finite_word(std::size_t a) const { return finite_[a].word; }
  IVec finite_act_weight(std::size_t a, const IVec& x) const { return finite_[a].on_weights * x; }
  IVec finite_act_coweight(std::size_t a, const IVec& x) const { return finite_[a].on_coweights * x; }
  IVec finite_act_root(std::size_t a, const IVec& x) const { return finite_[a].on_roots * x; }

  // --- elements ------------------------------------------------------------
  AffineWeylElt identity() const { return {0, IVec(rank())}; }
  AffineWeylElt simple(std::size_t i) const;
  AffineWeylElt translation(const IVec& coroot) const;
  AffineWeylElt from_word(const std::vector<std::size_t>& word) const;
  /// Element with the given finite word (indices 1..n) and translation.
  AffineWeylElt from_parts(const std::vector<std::size_t>& finite_word, const IVec& tr) const;

  AffineWeylElt multiply(const AffineWeylElt& a, const AffineWeylElt& b) const;
  AffineWeylElt inverse(const AffineWeylElt& a) const;
  void check(const AffineWeylElt& a) const;

  // --- actions -------------------------------------------------------------
  AffineWeight act_on_weight(const AffineWeylElt& w, const AffineWeight& mu) const;
  AffineCoweight act_on_coweight(const AffineWeylElt& w, const AffineCoweight& mu) const;
  RealAffineRoot act_on_root(const AffineWeylElt& w, const RealAffineRoot& r) const;

  /// (w.h)(lambda) = h(w^{-1} lambda); tau and zeta are fixed.
  template <class F>
  TorusChar<F> act_on_character(const AffineWeylElt& w, const TorusChar<F>& h) const {
    AffineWeylElt winv = inverse(w);
    TorusChar<F> out = h;
    for (std::size_t i = 1; i <= rank(); ++i) out.omega[i - 1] = h.value(act_on_weight(winv, datum_->omega(i)));
    out.tau = h.value(act_on_weight(winv, datum_->delta()));
    out.omega0 = h.value(act_on_weight(winv, datum_->omega0()));
    return out;
  }

  // --- roots ---------------------------------------------------------------
  RealAffineRoot simple_affine_root(std::size_t i) const;
  static bool is_positive(const RealAffineRoot& r);
  AffineWeight root_weight(const RealAffineRoot& r) const { return datum_->affine_root_weight(r.root, r.level); }

  // --- Coxeter structure ---------------------------------------------------
  std::size_t length(const AffineWeylElt& w) const;
  bool has_left_descent(const AffineWeylElt& w, std::size_t i) const;
  bool has_right_descent(const AffineWeylElt& w, std::size_t i) const;
  /// Lexicographically least reduced word (greedy smallest left descent).
  std::vector<std::size_t> reduced_word(const AffineWeylElt& w) const;
  /// Roots of w(n^o) cap n: positive roots beta with w^{-1} beta negative.
  std::vector<RealAffineRoot> inversion_set(const AffineWeylElt& w) const;
  /// Positive roots beta with w beta negative.
  std::vector<RealAffineRoot> right_inversion_set(const AffineWeylElt& w) const;
  bool bruhat_leq(const AffineWeylElt& v, const AffineWeylElt& w) const;

  /// All elements of length <= max_length, ordered by (length, reduced word).
  std::vector<AffineWeylElt> enumerate_ball(std::size_t max_length, std::size_t max_size = 2'000'000) const;
  /// Strict comparison in the deterministic (length, lex reduced word) order.
  bool canonical_less(const AffineWeylElt& a, const AffineWeylElt& b) const;

  /// Reduced word rendered as "s0s1s0"; "e" for the identity.
  std::string word_string(const AffineWeylElt& w) const;

 private:
  struct FiniteElt {
    IMat on_weights;
    IMat on_coweights;
    IMat on_roots;
    std::vector<std::size_t> word;  // reduced word in 1..n
    std::size_t inverse = 0;
  };

  std::size_t finite_index(const IMat& on_weights) const;
  template <class Visit>
  void for_each_inversion(const AffineWeylElt& w, Visit&& visit) const;

  RootDatumPtr datum_;
  std::vector<FiniteElt> finite_;
  std::vector<std::size_t> mult_;
  std::map<IMat, std::size_t> index_;
  std::vector<std::size_t> simple_finite_;  // finite index of s_i, i = 1..n (slot 0: s_theta)
  std::vector<IVec> all_roots_;             // positive then negative finite roots
};

using AffineWeylGroupPtr = std::shared_ptr<const AffineWeylGroup>;

}  // namespace daha
