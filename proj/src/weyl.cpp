#include "daha/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace daha {

namespace {

IMat reflection_on_weights(const RootDatum::Matrix& a, std::size_t i) {
  const std::size_t n = a.size();
  IMat m = IMat::identity(n);
  for (std::size_t r = 0; r < n; ++r) m(r, i) -= a[r][i];
  return m;
}

IMat reflection_on_coweights(const RootDatum::Matrix& a, std::size_t i) {
  const std::size_t n = a.size();
  IMat m = IMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) m(i, c) -= a[c][i];
  return m;
}

IMat reflection_on_roots(const RootDatum::Matrix& a, std::size_t i) {
  const std::size_t n = a.size();
  IMat m = IMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) m(i, c) -= a[i][c];
  return m;
}

}  // namespace

AffineWeylGroup::AffineWeylGroup(RootDatumPtr datum) : datum_(std::move(datum)) {
  const auto& a = datum_->cartan();
  const std::size_t n = datum_->rank();

  std::vector<IMat> sw, sc, sr;
  for (std::size_t i = 0; i < n; ++i) {
    sw.push_back(reflection_on_weights(a, i));
    sc.push_back(reflection_on_coweights(a, i));
    sr.push_back(reflection_on_roots(a, i));
  }

  finite_.push_back({IMat::identity(n), IMat::identity(n), IMat::identity(n), {}, 0});
  index_[finite_[0].on_weights] = 0;
  for (std::size_t k = 0; k < finite_.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      IMat w = finite_[k].on_weights * sw[i];
      if (index_.count(w)) continue;
      FiniteElt e;
      e.on_weights = w;
      e.on_coweights = finite_[k].on_coweights * sc[i];
      e.on_roots = finite_[k].on_roots * sr[i];
      e.word = finite_[k].word;
      e.word.push_back(i + 1);
      index_[w] = finite_.size();
      finite_.push_back(std::move(e));
    }
  }
  const std::size_t order = finite_.size();
  mult_.resize(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t z = finite_index(finite_[x].on_weights * finite_[y].on_weights);
      mult_[x * order + y] = z;
      if (z == 0) finite_[x].inverse = y;
    }

  // s_theta on weights: lambda -> lambda - <lambda, theta^vee> theta.
  IVec theta_w = datum_->root_to_weight(datum_->theta());
  const IVec& theta_c = datum_->theta_check();
  IMat st = IMat::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) st(r, c) -= theta_w[r] * theta_c[c];
  simple_finite_.push_back(finite_index(st));
  for (std::size_t i = 0; i < n; ++i) simple_finite_.push_back(finite_index(sw[i]));

  for (const IVec& r : datum_->positive_roots()) all_roots_.push_back(r);
  for (const IVec& r : datum_->positive_roots()) all_roots_.push_back(-r);
}

std::size_t AffineWeylGroup::finite_index(const IMat& on_weights) const {
  auto it = index_.find(on_weights);
  if (it == index_.end()) throw std::logic_error("matrix is not in the finite Weyl group");
  return it->second;
}

void AffineWeylGroup::check(const AffineWeylElt& a) const {
  if (a.tr.size() != rank() || a.finite >= finite_.size())
    throw DatumMismatch("affine Weyl element built over a different root datum");
}

AffineWeylElt AffineWeylGroup::simple(std::size_t i) const {
  if (i > rank()) throw std::out_of_range("simple reflection index out of range");
  if (i == 0) return {simple_finite_[0], -datum_->theta_check()};
  return {simple_finite_[i], IVec(rank())};
}

AffineWeylElt AffineWeylGroup::translation(const IVec& coroot) const {
  if (coroot.size() != rank()) throw DatumMismatch("translation of wrong rank");
  return {0, coroot};
}

AffineWeylElt AffineWeylGroup::from_word(const std::vector<std::size_t>& word) const {
  AffineWeylElt w = identity();
  for (std::size_t i : word) w = multiply(w, simple(i));
  return w;
}

AffineWeylElt AffineWeylGroup::from_parts(const std::vector<std::size_t>& finite_word, const IVec& tr) const {
  AffineWeylElt w = identity();
  for (std::size_t i : finite_word) {
    if (i < 1 || i > rank()) throw std::out_of_range("finite simple reflection index out of range");
    w = multiply(w, simple(i));
  }
  if (tr.size() != rank()) throw DatumMismatch("translation of wrong rank");
  return {w.finite, tr};
}

AffineWeylElt AffineWeylGroup::multiply(const AffineWeylElt& a, const AffineWeylElt& b) const {
  check(a);
  check(b);
  return {finite_multiply(a.finite, b.finite), finite_act_coweight(finite_inverse(b.finite), a.tr) + b.tr};
}

AffineWeylElt AffineWeylGroup::inverse(const AffineWeylElt& a) const {
  check(a);
  return {finite_inverse(a.finite), -finite_act_coweight(a.finite, a.tr)};
}

AffineWeight AffineWeylGroup::act_on_weight(const AffineWeylElt& w, const AffineWeight& mu) const {
  check(w);
  datum_->check_weight(mu);
  AffineWeight out = mu;
  if (!w.tr.is_zero()) {
    const long long norm = datum_->coroot_form(w.tr, w.tr);
    if (mu.omega0 != 0) out.fin += mu.omega0 * datum_->kappa({w.tr, 0, 0}).fin;
    out.delta -= static_cast<int>(dot(mu.fin, w.tr) + norm / 2 * mu.omega0);
  }
  out.fin = finite_act_weight(w.finite, out.fin);
  return out;
}

AffineCoweight AffineWeylGroup::act_on_coweight(const AffineWeylElt& w, const AffineCoweight& mu) const {
  check(w);
  datum_->check_coweight(mu);
  AffineCoweight out = mu;
  if (!w.tr.is_zero()) {
    const long long norm = datum_->coroot_form(w.tr, w.tr);
    out.fin += mu.d * w.tr;
    out.c -= static_cast<int>(datum_->coroot_form(w.tr, mu.fin) + norm / 2 * mu.d);
  }
  out.fin = finite_act_coweight(w.finite, out.fin);
  return out;
}

RealAffineRoot AffineWeylGroup::act_on_root(const AffineWeylElt& w, const RealAffineRoot& r) const {
  check(w);
  const long long p = datum_->root_coweight_pairing(r.root, w.tr);
  return {finite_act_root(w.finite, r.root), r.level - static_cast<int>(p)};
}

RealAffineRoot AffineWeylGroup::simple_affine_root(std::size_t i) const {
  if (i > rank()) throw std::out_of_range("simple root index out of range");
  if (i == 0) return {-datum_->theta(), 1};
  return {IVec::unit(rank(), i - 1), 0};
}

bool AffineWeylGroup::is_positive(const RealAffineRoot& r) {
  return r.level > 0 || (r.level == 0 && RootDatum::is_positive(r.root));
}

template <class Visit>
void AffineWeylGroup::for_each_inversion(const AffineWeylElt& w, Visit&& visit) const {
  // beta + k delta (positive) goes to w(beta) + (k - p) delta with
  // p = <beta, tr>; it is negative iff k < p, or k = p and w(beta) < 0.
  for (const IVec& beta : all_roots_) {
    const long long p = datum_->root_coweight_pairing(beta, w.tr);
    const long long kmin = RootDatum::is_positive(beta) ? 0 : 1;
    for (long long k = kmin; k < p; ++k) visit(beta, static_cast<int>(k));
    if (p >= kmin && !RootDatum::is_positive(finite_act_root(w.finite, beta))) visit(beta, static_cast<int>(p));
  }
}

std::size_t AffineWeylGroup::length(const AffineWeylElt& w) const {
  check(w);
  std::size_t len = 0;
  for (const IVec& beta : all_roots_) {
    const long long p = datum_->root_coweight_pairing(beta, w.tr);
    const long long kmin = RootDatum::is_positive(beta) ? 0 : 1;
    if (p > kmin) len += static_cast<std::size_t>(p - kmin);
    if (p >= kmin && !RootDatum::is_positive(finite_act_root(w.finite, beta))) ++len;
  }
  return len;
}

std::vector<RealAffineRoot> AffineWeylGroup::right_inversion_set(const AffineWeylElt& w) const {
  check(w);
  std::vector<RealAffineRoot> out;
  for_each_inversion(w, [&](const IVec& beta, int k) { out.push_back({beta, k}); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RealAffineRoot> AffineWeylGroup::inversion_set(const AffineWeylElt& w) const {
  return right_inversion_set(inverse(w));
}

bool AffineWeylGroup::has_left_descent(const AffineWeylElt& w, std::size_t i) const {
  return !is_positive(act_on_root(inverse(w), simple_affine_root(i)));
}

bool AffineWeylGroup::has_right_descent(const AffineWeylElt& w, std::size_t i) const {
  return !is_positive(act_on_root(w, simple_affine_root(i)));
}

std::vector<std::size_t> AffineWeylGroup::reduced_word(const AffineWeylElt& w) const {
  check(w);
  std::vector<std::size_t> word;
  AffineWeylElt cur = w;
  while (cur != identity()) {
    AffineWeylElt inv = inverse(cur);
    std::size_t i = 0;
    while (i <= rank() && is_positive(act_on_root(inv, simple_affine_root(i)))) ++i;
    if (i > rank()) throw std::logic_error("non-identity element without a descent");
    word.push_back(i);
    cur = multiply(simple(i), cur);
  }
  return word;
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElt& v, const AffineWeylElt& w) const {
  check(v);
  check(w);
  AffineWeylElt x = v, y = w;
  std::size_t lx = length(x), ly = length(y);
  while (true) {
    if (lx > ly) return false;
    if (lx == ly) return x == y;
    // Here ly > lx >= 0, so y has a left descent s; then
    // x <= y  iff  min(x, s x) <= s y.
    AffineWeylElt yinv = inverse(y);
    std::size_t i = 0;
    while (is_positive(act_on_root(yinv, simple_affine_root(i)))) ++i;
    y = multiply(simple(i), y);
    --ly;
    if (has_left_descent(x, i)) {
      x = multiply(simple(i), x);
      --lx;
    }
  }
}

bool AffineWeylGroup::canonical_less(const AffineWeylElt& a, const AffineWeylElt& b) const {
  std::size_t la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return reduced_word(a) < reduced_word(b);
}

std::vector<AffineWeylElt> AffineWeylGroup::enumerate_ball(std::size_t max_length, std::size_t max_size) const {
  std::vector<AffineWeylElt> out{identity()};
  std::vector<AffineWeylElt> level{identity()};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::unordered_set<AffineWeylElt, AffineWeylEltHash> next_set;
    std::vector<AffineWeylElt> next;
    for (const auto& w : level)
      for (std::size_t i = 0; i <= rank(); ++i) {
        if (has_right_descent(w, i)) continue;
        AffineWeylElt ws = multiply(w, simple(i));
        if (next_set.insert(ws).second) next.push_back(ws);
      }
    if (out.size() + next.size() > max_size)
      throw ResourceCapExceeded("ball of length " + std::to_string(max_length) + " exceeds the cap of " +
                                std::to_string(max_size) + " elements");
    std::vector<std::pair<std::vector<std::size_t>, AffineWeylElt>> keyed;
    keyed.reserve(next.size());
    for (auto& w : next) keyed.emplace_back(reduced_word(w), w);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    level.clear();
    for (auto& [word, w] : keyed) {
      out.push_back(w);
      level.push_back(w);
    }
  }
  return out;
}

std::string AffineWeylGroup::word_string(const AffineWeylElt& w) const {
  auto word = reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i : word) s += "s" + std::to_string(i);
  return s;
}

}  // namespace daha
