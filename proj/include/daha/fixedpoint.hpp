#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "daha/coeff.hpp"
#include "daha/daha.hpp"
#include "daha/weyl.hpp"

namespace daha {

/// A computation needed rows or columns beyond the window.
class InsufficientMargin : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WindowMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when (lambda, mu) violate lambda + mu = -alpha, <lambda, a^vee> = <mu, a^vee> = -1.
class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index set for truncated fixed-point matrices: the ball of length
/// L0 + margin, whose first inner_size() elements form the inner ball of
/// length L0.
class Window {
 public:
  Window(AffineWeylGroupPtr group, std::size_t L0, std::size_t margin, std::size_t max_size = 200'000);

  const AffineWeylGroup& group() const { return *group_; }
  const AffineWeylGroupPtr& group_ptr() const { return group_; }
  std::size_t L0() const { return L0_; }
  std::size_t margin() const { return margin_; }
  std::size_t full_length() const { return L0_ + margin_; }

  const std::vector<AffineWeylElt>& full() const { return full_; }
  std::size_t size() const { return full_.size(); }
  std::size_t inner_size() const { return inner_size_; }
  const AffineWeylElt& at(std::size_t k) const { return full_[k]; }
  std::size_t length_at(std::size_t k) const { return lengths_[k]; }
  std::optional<std::size_t> index_of(const AffineWeylElt& w) const;

 private:
  AffineWeylGroupPtr group_;
  std::size_t L0_, margin_;
  std::vector<AffineWeylElt> full_;
  std::vector<std::size_t> lengths_;
  std::size_t inner_size_ = 0;
  std::unordered_map<AffineWeylElt, std::size_t, AffineWeylEltHash> index_;
};

using WindowPtr = std::shared_ptr<const Window>;

WindowPtr make_window(AffineWeylGroupPtr group, std::size_t L0, std::size_t margin);

/// Sparse matrix over RationalFn indexed by window elements.
///
/// Truncation bookkeeping: rows of length <= exact_radius() agree with the
/// untruncated matrix on all window columns, and every nonzero entry (w, u)
/// of the untruncated matrix has l(u) <= l(w) + band().
class FPMatrix {
 public:
  using Row = std::map<std::size_t, RationalFn>;

  FPMatrix(WindowPtr win, long exact_radius, std::size_t band);
  static FPMatrix identity(WindowPtr win);
  static FPMatrix zero(WindowPtr win);
  /// The fixed-point class x_{v,w}.
  static FPMatrix unit(WindowPtr win, std::size_t row, std::size_t col);

  const Window& window() const { return *win_; }
  const WindowPtr& window_ptr() const { return win_; }
  long exact_radius() const { return radius_; }
  std::size_t band() const { return band_; }
  void set_bounds(long exact_radius, std::size_t band) {
    radius_ = exact_radius;
    band_ = band;
  }

  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t r) const { return rows_.at(r); }
  /// Entry (r, c); zero if absent.
  RationalFn get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, RationalFn v);
  void add_to(std::size_t r, std::size_t c, const RationalFn& v);
  std::size_t nonzeros() const;

 private:
  WindowPtr win_;
  std::vector<Row> rows_;
  long radius_;
  std::size_t band_;
};

/// Product; only rows of length <= max_row_length are filled.
FPMatrix fp_mul(const FPMatrix& a, const FPMatrix& b,
                std::size_t max_row_length = std::numeric_limits<std::size_t>::max());
FPMatrix fp_add(const FPMatrix& a, const FPMatrix& b);
FPMatrix fp_sub(const FPMatrix& a, const FPMatrix& b);
/// Entrywise product with a W-invariant scalar (t, q, integers).
FPMatrix fp_scale(const FPMatrix& a, const RationalFn& s);

/// Result of comparing two matrices on the inner rows.
struct WindowComparison {
  bool equal = true;
  std::size_t entries_compared = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first_difference;
};

/// Compares rows of length <= L0 over all window columns.  Both operands
/// must be exact there, otherwise InsufficientMargin is thrown.
WindowComparison compare_on_inner(const FPMatrix& a, const FPMatrix& b, const EqualityMode& mode,
                                  std::mt19937_64& rng);
bool equal_on_inner(const FPMatrix& a, const FPMatrix& b, const EqualityMode& mode, std::mt19937_64& rng);

/// A geometric class whose fixed-point expansion concentrate_class computes.
struct ClassSpec {
  enum class Kind { UnitLineBundle, SWall };
  Kind kind = Kind::UnitLineBundle;
  std::size_t simple_index = 0;
  LaurentMonomial lambda;
  LaurentMonomial mu;

  static ClassSpec unit_line_bundle(const LaurentMonomial& lambda) { return {Kind::UnitLineBundle, 0, lambda, {}}; }
  static ClassSpec s_wall(std::size_t i, const LaurentMonomial& lambda, const LaurentMonomial& mu) {
    return {Kind::SWall, i, lambda, mu};
  }
};

/// The concentration model: images of DAHA elements as matrices
/// sum f_{w,u} x_{w,u} over pairs of fixed points.
class FixedPointModel {
 public:
  explicit FixedPointModel(DahaPtr algebra);

  const Daha& algebra() const { return *algebra_; }
  const AffineWeylGroup& group() const { return algebra_->group(); }
  const RootDatum& datum() const { return algebra_->datum(); }

  /// f with theta_lambda replaced by theta_{w lambda}.
  LaurentPoly twist(const AffineWeylElt& w, const LaurentPoly& f) const;

  FPMatrix rho_X(const AffineWeight& lambda, const WindowPtr& win) const;
  FPMatrix rho_X(const LaurentMonomial& lambda, const WindowPtr& win) const;
  /// Diagonal matrix of w-twists of a coefficient.
  FPMatrix rho_coeff(const LaurentPoly& f, const WindowPtr& win) const;
  FPMatrix rho_T(std::size_t i, const WindowPtr& win) const;

  /// (1 - t) theta_{w a} / (1 - theta_{w a}): the (w, w) entry of rho_T(i).
  RationalFn t_diagonal(const AffineWeylElt& w, std::size_t i) const;
  /// -(1 - t theta_{w a}) / (1 - theta_{w a}): the (w, w s_i) entry of rho_T(i).
  RationalFn t_offdiagonal(const AffineWeylElt& w, std::size_t i) const;

  /// Image of a normal-form element.  Rows are computed exactly from the
  /// untruncated generator matrices; only rows of length <= max_row_length
  /// are filled (default: all).  Throws InsufficientMargin if the support
  /// length of a exceeds the margin.
  FPMatrix rho(const DahaElt& a, const WindowPtr& win,
               std::size_t max_row_length = std::numeric_limits<std::size_t>::max()) const;

  /// prod over beta in inversion_set(z) of (1 - t theta_{y beta}) / (1 - theta_{-y beta}).
  RationalFn structure_constant_g(const AffineWeylElt& y, const AffineWeylElt& z) const;

  FPMatrix concentrate_class(const ClassSpec& spec, const WindowPtr& win) const;
  /// Throws ConstraintViolation unless (lambda, mu) is admissible for s_i.
  void check_wall_pair(std::size_t i, const LaurentMonomial& lambda, const LaurentMonomial& mu) const;

 private:
  LaurentPoly theta(const AffineWeight& w, int t_exp = 0) const { return LaurentPoly::monomial(w, t_exp); }
  void check_window(const WindowPtr& win) const;

  DahaPtr algebra_;
  LaurentPoly one_;
};

}  // namespace daha
