#include "daha/fixedpoint.hpp"

#include <algorithm>
#include <set>

namespace daha {

// --- Window ----------------------------------------------------------------------

Window::Window(AffineWeylGroupPtr group, std::size_t L0, std::size_t margin, std::size_t max_size)
    : group_(std::move(group)), L0_(L0), margin_(margin) {
  if (!group_) throw std::invalid_argument("null affine Weyl group");
  full_ = group_->enumerate_ball(L0 + margin, max_size);
  lengths_.reserve(full_.size());
  for (std::size_t k = 0; k < full_.size(); ++k) {
    lengths_.push_back(group_->length(full_[k]));
    index_.emplace(full_[k], k);
    if (lengths_[k] <= L0) inner_size_ = k + 1;
  }
}

std::optional<std::size_t> Window::index_of(const AffineWeylElt& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WindowPtr make_window(AffineWeylGroupPtr group, std::size_t L0, std::size_t margin) {
  return std::make_shared<const Window>(std::move(group), L0, margin);
}

// --- FPMatrix --------------------------------------------------------------------

FPMatrix::FPMatrix(WindowPtr win, long exact_radius, std::size_t band)
    : win_(std::move(win)), rows_(win_->size()), radius_(exact_radius), band_(band) {}

FPMatrix FPMatrix::identity(WindowPtr win) {
  const long r = static_cast<long>(win->full_length());
  FPMatrix m(std::move(win), r, 0);
  const LaurentPoly one = LaurentPoly::constant(m.window().group().rank(), 1);
  for (std::size_t k = 0; k < m.rows_.size(); ++k) m.rows_[k].emplace(k, RationalFn(one));
  return m;
}

FPMatrix FPMatrix::zero(WindowPtr win) {
  const long r = static_cast<long>(win->full_length());
  return FPMatrix(std::move(win), r, 0);
}

FPMatrix FPMatrix::unit(WindowPtr win, std::size_t row, std::size_t col) {
  FPMatrix m = zero(std::move(win));
  std::size_t lr = m.window().length_at(row), lc = m.window().length_at(col);
  m.band_ = lc > lr ? lc - lr : 0;
  m.set(row, col, RationalFn(LaurentPoly::constant(m.window().group().rank(), 1)));
  return m;
}

RationalFn FPMatrix::get(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? RationalFn() : it->second;
}

void FPMatrix::set(std::size_t r, std::size_t c, RationalFn v) {
  Row& row = rows_.at(r);
  if (c >= rows_.size()) throw std::out_of_range("column outside the window");
  if (v.is_zero())
    row.erase(c);
  else
    row[c] = std::move(v);
}

void FPMatrix::add_to(std::size_t r, std::size_t c, const RationalFn& v) {
  if (v.is_zero()) return;
  Row& row = rows_.at(r);
  auto [it, inserted] = row.try_emplace(c, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) row.erase(it);
}

std::size_t FPMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

namespace {

void same_window(const FPMatrix& a, const FPMatrix& b) {
  if (a.window_ptr() == b.window_ptr()) return;
  const Window& x = a.window();
  const Window& y = b.window();
  if (&x.group() != &y.group() || x.L0() != y.L0() || x.margin() != y.margin())
    throw WindowMismatch("fixed-point matrices live on different windows");
}

}  // namespace

FPMatrix fp_mul(const FPMatrix& a, const FPMatrix& b, std::size_t max_row_length) {
  same_window(a, b);
  const long full = static_cast<long>(a.window().full_length());
  const long ba = static_cast<long>(a.band());
  const long limit = static_cast<long>(std::min<std::size_t>(max_row_length, a.window().full_length()));
  long radius = std::min({a.exact_radius(), full - ba, b.exact_radius() - ba, limit});
  FPMatrix out(a.window_ptr(), radius, a.band() + b.band());
  for (std::size_t r = 0; r < a.rows().size(); ++r) {
    if (static_cast<long>(a.window().length_at(r)) > limit) break;
    FPMatrix::Row acc;
    for (const auto& [k, x] : a.rows()[r])
      for (const auto& [c, y] : b.rows()[k]) {
        RationalFn p = x * y;
        auto [it, inserted] = acc.try_emplace(c, p);
        if (!inserted) it->second += p;
      }
    for (auto& [c, v] : acc)
      if (!v.is_zero()) {
        v.cancel_trivial();
        out.set(r, c, std::move(v));
      }
  }
  return out;
}

FPMatrix fp_add(const FPMatrix& a, const FPMatrix& b) {
  same_window(a, b);
  FPMatrix out = a;
  out.set_bounds(std::min(a.exact_radius(), b.exact_radius()), std::max(a.band(), b.band()));
  for (std::size_t r = 0; r < b.rows().size(); ++r)
    for (const auto& [c, v] : b.rows()[r]) out.add_to(r, c, v);
  return out;
}

FPMatrix fp_sub(const FPMatrix& a, const FPMatrix& b) { return fp_add(a, fp_scale(b, RationalFn(LaurentPoly::constant(b.window().group().rank(), -1)))); }

FPMatrix fp_scale(const FPMatrix& a, const RationalFn& s) {
  FPMatrix out(a.window_ptr(), a.exact_radius(), a.band());
  if (s.is_zero()) return out;
  for (std::size_t r = 0; r < a.rows().size(); ++r)
    for (const auto& [c, v] : a.rows()[r]) out.set(r, c, v * s);
  return out;
}

WindowComparison compare_on_inner(const FPMatrix& a, const FPMatrix& b, const EqualityMode& mode,
                                  std::mt19937_64& rng) {
  same_window(a, b);
  const Window& win = a.window();
  const long L0 = static_cast<long>(win.L0());
  if (a.exact_radius() < L0 || b.exact_radius() < L0)
    throw InsufficientMargin("matrix is not exact on the inner window (exact radius " +
                             std::to_string(std::min(a.exact_radius(), b.exact_radius())) + " < L0 = " +
                             std::to_string(L0) + ")");
  WindowComparison res;
  const std::size_t rank = win.group().rank();
  for (std::size_t r = 0; r < win.inner_size(); ++r) {
    std::set<std::size_t> cols;
    for (const auto& [c, v] : a.rows()[r]) cols.insert(c);
    for (const auto& [c, v] : b.rows()[r]) cols.insert(c);
    for (std::size_t c : cols) {
      ++res.entries_compared;
      if (!equal(a.get(r, c), b.get(r, c), mode, rank, rng)) {
        res.equal = false;
        if (!res.first_difference) res.first_difference = std::make_pair(r, c);
        return res;
      }
    }
  }
  return res;
}

bool equal_on_inner(const FPMatrix& a, const FPMatrix& b, const EqualityMode& mode, std::mt19937_64& rng) {
  return compare_on_inner(a, b, mode, rng).equal;
}

// --- FixedPointModel ---------------------------------------------------------------

FixedPointModel::FixedPointModel(DahaPtr algebra)
    : algebra_(std::move(algebra)), one_(LaurentPoly::constant(algebra_->rank(), 1)) {}

void FixedPointModel::check_window(const WindowPtr& win) const {
  if (!win) throw std::invalid_argument("null window");
  if (&win->group() != &group()) throw WindowMismatch("window built over a different affine Weyl group");
}

LaurentPoly FixedPointModel::twist(const AffineWeylElt& w, const LaurentPoly& f) const {
  return f.map_weights([&](const AffineWeight& mu) { return group().act_on_weight(w, mu); });
}

FPMatrix FixedPointModel::rho_X(const AffineWeight& lambda, const WindowPtr& win) const {
  return rho_X(LaurentMonomial{0, lambda}, win);
}

FPMatrix FixedPointModel::rho_X(const LaurentMonomial& lambda, const WindowPtr& win) const {
  return rho_coeff(LaurentPoly::monomial(lambda), win);
}

FPMatrix FixedPointModel::rho_coeff(const LaurentPoly& f, const WindowPtr& win) const {
  check_window(win);
  FPMatrix m = FPMatrix::zero(win);
  for (std::size_t k = 0; k < win->size(); ++k) m.set(k, k, RationalFn(twist(win->at(k), f)));
  return m;
}

RationalFn FixedPointModel::t_diagonal(const AffineWeylElt& w, std::size_t i) const {
  AffineWeight wa = group().act_on_weight(w, datum().simple_root(i));
  return RationalFn(theta(wa) - theta(wa, 1), one_ - theta(wa));
}

RationalFn FixedPointModel::t_offdiagonal(const AffineWeylElt& w, std::size_t i) const {
  AffineWeight wa = group().act_on_weight(w, datum().simple_root(i));
  return RationalFn(theta(wa, 1) - one_, one_ - theta(wa));
}

FPMatrix FixedPointModel::rho_T(std::size_t i, const WindowPtr& win) const {
  check_window(win);
  if (win->margin() < 1) throw InsufficientMargin("generator images need margin >= 1");
  if (i > datum().rank()) throw std::out_of_range("simple index out of range");
  FPMatrix m(win, static_cast<long>(win->full_length()), 1);
  const AffineWeylElt s = group().simple(i);
  for (std::size_t k = 0; k < win->size(); ++k) {
    const AffineWeylElt& w = win->at(k);
    m.set(k, k, t_diagonal(w, i));
    if (auto c = win->index_of(group().multiply(w, s))) m.set(k, *c, t_offdiagonal(w, i));
  }
  return m;
}

FPMatrix FixedPointModel::rho(const DahaElt& a, const WindowPtr& win, std::size_t max_row_length) const {
  check_window(win);
  const std::size_t band = algebra_->support_length(a);
  if (band > win->margin())
    throw InsufficientMargin("support length " + std::to_string(band) + " exceeds the window margin " +
                             std::to_string(win->margin()));
  const std::size_t rows_to = std::min(max_row_length, win->full_length());
  FPMatrix out(win, static_cast<long>(rows_to), band);

  std::vector<std::pair<std::vector<std::size_t>, const LaurentPoly*>> terms;
  for (const auto& [w, f] : a.terms()) terms.emplace_back(group().reduced_word(w), &f);

  using Vec = std::map<AffineWeylElt, RationalFn>;
  for (std::size_t r = 0; r < win->size(); ++r) {
    if (win->length_at(r) > rows_to) break;
    const AffineWeylElt& y = win->at(r);
    Vec total;
    for (const auto& [word, f] : terms) {
      Vec v{{y, RationalFn(twist(y, *f))}};
      for (std::size_t i : word) {
        const AffineWeylElt s = group().simple(i);
        Vec next;
        for (const auto& [u, x] : v) {
          auto put = [&](const AffineWeylElt& col, RationalFn val) {
            auto [it, inserted] = next.try_emplace(col, val);
            if (!inserted) it->second += val;
          };
          put(u, x * t_diagonal(u, i));
          put(group().multiply(u, s), x * t_offdiagonal(u, i));
        }
        v.clear();
        for (auto& [u, x] : next)
          if (!x.is_zero()) v.emplace(u, std::move(x));
      }
      for (auto& [u, x] : v) {
        auto [it, inserted] = total.try_emplace(u, x);
        if (!inserted) it->second += x;
      }
    }
    for (auto& [u, x] : total) {
      if (x.is_zero()) continue;
      auto c = win->index_of(u);
      if (!c) continue;  // only possible for rows whose support leaves the window
      x.cancel_trivial();
      out.set(r, *c, std::move(x));
    }
  }
  return out;
}

RationalFn FixedPointModel::structure_constant_g(const AffineWeylElt& y, const AffineWeylElt& z) const {
  RationalFn g(one_);
  for (const RealAffineRoot& beta : group().inversion_set(z)) {
    AffineWeight yb = group().root_weight(group().act_on_root(y, beta));
    g *= RationalFn(one_ - theta(yb, 1), one_ - theta(-yb));
  }
  return g;
}

void FixedPointModel::check_wall_pair(std::size_t i, const LaurentMonomial& lambda, const LaurentMonomial& mu) const {
  if (i > datum().rank()) throw std::out_of_range("simple index out of range");
  datum().check_weight(lambda.weight);
  datum().check_weight(mu.weight);
  const AffineCoweight& av = datum().simple_coroot(i);
  if (lambda.weight + mu.weight != -datum().simple_root(i) || lambda.t_exp + mu.t_exp != 0)
    throw ConstraintViolation("s-wall class needs lambda + mu = -alpha");
  if (datum().pairing(lambda.weight, av) != -1 || datum().pairing(mu.weight, av) != -1)
    throw ConstraintViolation("s-wall class needs <lambda, alpha^vee> = <mu, alpha^vee> = -1");
}

FPMatrix FixedPointModel::concentrate_class(const ClassSpec& spec, const WindowPtr& win) const {
  check_window(win);
  if (spec.kind == ClassSpec::Kind::UnitLineBundle) return rho_X(spec.lambda, win);

  const std::size_t i = spec.simple_index;
  check_wall_pair(i, spec.lambda, spec.mu);
  if (win->margin() < 1) throw InsufficientMargin("s-wall classes need margin >= 1");
  const AffineWeylElt s = group().simple(i);
  const AffineWeight alpha = datum().simple_root(i);
  FPMatrix m(win, static_cast<long>(win->full_length()), 1);
  for (std::size_t k = 0; k < win->size(); ++k) {
    const AffineWeylElt& w = win->at(k);
    const AffineWeylElt ws = group().multiply(w, s);
    const AffineWeight wa = group().act_on_weight(w, alpha);
    const AffineWeight wl = group().act_on_weight(w, spec.lambda.weight);
    // O(lambda, mu) restricted to (w, u) is theta_{w lambda + u mu}; multiply by
    // (1 - O(alpha + t, 0)) / (1 - O(0, -alpha)) on the same fixed point.
    auto entry = [&](const AffineWeylElt& u) {
      const AffineWeight um = group().act_on_weight(u, spec.mu.weight);
      const AffineWeight ua = group().act_on_weight(u, alpha);
      LaurentPoly sheaf = theta(wl + um, spec.lambda.t_exp + spec.mu.t_exp);
      return RationalFn((one_ - theta(wa, 1)) * sheaf, one_ - theta(-ua));
    };
    m.set(k, k, entry(w));
    if (auto c = win->index_of(ws)) m.set(k, *c, entry(ws));
  }
  return m;
}

}  // namespace daha
