#include "daha/coeff.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace daha {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
  return r;
}

// --- LaurentPoly -------------------------------------------------------------

LaurentPoly LaurentPoly::monomial(const AffineWeight& weight, int t_exp, std::int64_t coeff) {
  return monomial(LaurentMonomial{t_exp, weight}, coeff);
}

LaurentPoly LaurentPoly::monomial(const LaurentMonomial& m, std::int64_t coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(m, coeff);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, std::int64_t c) {
  return monomial(AffineWeight{IVec(rank), 0, 0}, 0, c);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second = checked_add(p.terms_.back().second, t.second);
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::int64_t LaurentPoly::coeff(const LaurentMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const LaurentMonomial& x) { return t.first < x; });
  return it != terms_.end() && it->first == m ? it->second : 0;
}

namespace {

std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, std::int64_t sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign * b[j].second);
      ++j;
    } else {
      std::int64_t c = checked_add(a[i].second, sign * b[j].second);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].first, a.terms_[0].second);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].first, b.terms_[0].second);
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, checked_mul(ca, cb));
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly LaurentPoly::scaled(std::int64_t k) const {
  if (k == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = checked_mul(t.second, k);
  return p;
}

LaurentPoly LaurentPoly::times_monomial(const LaurentMonomial& m, std::int64_t coeff) const {
  if (coeff == 0) return {};
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the (group) order.
  for (const auto& [mm, c] : terms_) p.terms_.emplace_back(mm * m, checked_mul(c, coeff));
  return p;
}

LaurentPoly LaurentPoly::map_weights(const std::function<AffineWeight(const AffineWeight&)>& f) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) terms.emplace_back(LaurentMonomial{m.t_exp, f(m.weight)}, c);
  return from_terms(std::move(terms));
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    if (auto c = a.terms_[i].second <=> b.terms_[i].second; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string monomial_str(const LaurentMonomial& m) {
  std::vector<std::string> parts;
  auto pw = [](const std::string& base, long long e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
  };
  if (m.t_exp != 0) parts.push_back(pw("t", m.t_exp));
  if (m.weight.delta != 0) parts.push_back(pw("q", m.weight.delta));
  if (!m.weight.fin.is_zero()) parts.push_back("X" + m.weight.fin.str());
  if (m.weight.omega0 != 0) parts.push_back(pw("Xw0", m.weight.omega0));
  if (parts.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_str(m);
    std::int64_t a = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mono == "1")
      s += std::to_string(a);
    else
      s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
    first = false;
  }
  return s;
}

// --- RationalFn ----------------------------------------------------------------

namespace {

/// Writes a nonzero polynomial as unit * normalized, where the normalized
/// polynomial has lowest monomial 1 with a positive coefficient.
std::pair<LaurentMonomial, std::int64_t> unit_part(const LaurentPoly& f) {
  const auto& [m, c] = f.terms().front();
  return {m, c < 0 ? -1 : 1};
}

/// Exact quotient num / f when f divides num, found by lowest-term division
/// (the monomial order is a group order).  Gives up after a step budget.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& f) {
  if (num.is_zero()) return LaurentPoly{};
  const auto& [fl, fc] = f.terms().front();
  const auto& fh = f.terms().back().first;
  if (num.size() < f.size()) return std::nullopt;
  const LaurentMonomial qmax = num.terms().back().first * fh.inverse();
  const LaurentMonomial fl_inv = fl.inverse();
  std::map<LaurentMonomial, std::int64_t> r(num.terms().begin(), num.terms().end());
  std::vector<LaurentPoly::Term> q;
  std::size_t budget = 64 + 8 * num.size() * f.size();
  while (!r.empty()) {
    const auto [m, c] = *r.begin();
    if (c % fc != 0) return std::nullopt;
    const LaurentMonomial qm = m * fl_inv;
    if (qmax < qm) return std::nullopt;
    const std::int64_t qc = c / fc;
    for (const auto& [fm, fcoef] : f.terms()) {
      auto [it, inserted] = r.try_emplace(qm * fm, 0);
      it->second = checked_add(it->second, -checked_mul(qc, fcoef));
      if (it->second == 0) r.erase(it);
    }
    q.emplace_back(qm, qc);
    if (--budget == 0) return std::nullopt;
  }
  return LaurentPoly::from_terms(std::move(q));
}

}  // namespace

RationalFn::RationalFn(LaurentPoly num) : num_(std::move(num)) {}

RationalFn::RationalFn(LaurentPoly num, const LaurentPoly& den) : num_(std::move(num)) {
  if (den.is_zero()) throw PoleError("rational function with zero denominator");
  add_factor(den, 1);
}

void RationalFn::add_factor(const LaurentPoly& f, int mult) {
  auto [m, sign] = unit_part(f);
  LaurentPoly normalized = f.times_monomial(m.inverse(), sign);
  // value / (sign * m * normalized)^mult
  for (int i = 0; i < mult; ++i) num_ = num_.times_monomial(m.inverse(), sign);
  if (normalized.size() == 1 && normalized.terms()[0].second == 1) return;  // unit
  auto it = std::lower_bound(den_.begin(), den_.end(), normalized,
                             [](const Factor& x, const LaurentPoly& y) { return x.first < y; });
  if (it != den_.end() && it->first == normalized)
    it->second += mult;
  else
    den_.insert(it, {std::move(normalized), mult});
}

LaurentPoly RationalFn::den(std::size_t rank) const {
  LaurentPoly d = LaurentPoly::constant(rank, 1);
  for (const auto& [f, k] : den_)
    for (int i = 0; i < k; ++i) d *= f;
  return d;
}

namespace {

std::vector<RationalFn::Factor> lcm_of(const std::vector<RationalFn::Factor>& a,
                                       const std::vector<RationalFn::Factor>& b) {
  std::vector<RationalFn::Factor> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

/// num * prod(lcm / den).
LaurentPoly lift(const LaurentPoly& num, const std::vector<RationalFn::Factor>& den,
                 const std::vector<RationalFn::Factor>& lcm) {
  LaurentPoly out = num;
  std::size_t j = 0;
  for (const auto& [f, k] : lcm) {
    while (j < den.size() && den[j].first < f) ++j;
    int have = (j < den.size() && den[j].first == f) ? den[j].second : 0;
    for (int e = have; e < k; ++e) out *= f;
  }
  return out;
}

}  // namespace

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    return *this;
  }
  auto l = lcm_of(den_, o.den_);
  num_ = lift(num_, den_, l) + lift(o.num_, o.den_, l);
  den_ = std::move(l);
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (num_.is_zero() || o.num_.is_zero()) {
    *this = RationalFn();
    return *this;
  }
  num_ *= o.num_;
  for (const auto& [f, k] : o.den_) add_factor(f, k);
  return *this;
}

RationalFn RationalFn::inv() const {
  if (num_.is_zero()) throw PoleError("inverse of the zero rational function");
  RationalFn r;
  r.num_ = LaurentPoly::monomial(num_.terms().front().first, 1).times_monomial(
      num_.terms().front().first.inverse());  // 1 of the right rank
  for (const auto& [f, k] : den_)
    for (int i = 0; i < k; ++i) r.num_ *= f;
  r.add_factor(num_, 1);
  return r;
}

bool exact_equal(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  if (a.num_.is_zero() || b.num_.is_zero()) return a.num_.is_zero() && b.num_.is_zero();
  auto l = lcm_of(a.den_, b.den_);
  return lift(a.num_, a.den_, l) == lift(b.num_, b.den_, l);
}

void RationalFn::cancel_trivial() {
  for (std::size_t i = 0; i < den_.size();) {
    auto q = exact_divide(num_, den_[i].first);
    if (!q) {
      ++i;
      continue;
    }
    num_ = std::move(*q);
    if (--den_[i].second == 0) den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

std::string RationalFn::str() const {
  if (den_.empty()) return num_.str();
  std::string s = "(" + num_.str() + ")/(";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i) s += "*";
    s += "(" + den_[i].first.str() + ")";
    if (den_[i].second != 1) s += "^" + std::to_string(den_[i].second);
  }
  return s + ")";
}

// --- equality modes ------------------------------------------------------------

EqualityMode EqualityMode::modp(std::uint64_t p, int k) {
  if (p <= (1ULL << 30)) throw std::invalid_argument("modp equality needs a prime > 2^30");
  if (p >= (1ULL << 63)) throw std::invalid_argument("modp equality needs a prime < 2^63");
  if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("modp equality needs at least one sample");
  EqualityMode m;
  m.kind = Kind::ModP;
  m.prime = p;
  m.samples = k;
  return m;
}

std::string EqualityMode::str() const {
  if (kind == Kind::Exact) return "exact";
  return "modp:" + std::to_string(prime) + ":" + std::to_string(samples);
}

TorusChar<ModP> random_char_modp(std::size_t rank, std::uint64_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
  TorusChar<ModP> h;
  for (std::size_t i = 0; i < rank; ++i) h.omega.emplace_back(dist(rng), p);
  h.tau = ModP(dist(rng), p);
  h.omega0 = ModP(dist(rng), p);
  h.zeta = ModP(dist(rng), p);
  return h;
}

bool equal(const RationalFn& a, const RationalFn& b, const EqualityMode& mode, std::size_t rank,
           std::mt19937_64& rng) {
  if (mode.kind == EqualityMode::Kind::Exact) return exact_equal(a, b);
  constexpr int kMaxRetries = 64;
  int taken = 0, retries = 0;
  while (taken < mode.samples) {
    auto h = random_char_modp(rank, mode.prime, rng);
    ModP da = field_from_int(h.zeta, 1), db = da;
    for (const auto& [f, k] : a.den_factors()) da *= field_pow(f.evaluate(h), k);
    for (const auto& [f, k] : b.den_factors()) db *= field_pow(f.evaluate(h), k);
    if (da.is_zero() || db.is_zero()) {
      if (++retries > kMaxRetries) throw PoleError("could not sample a character avoiding the poles");
      continue;
    }
    if (!(a.num().evaluate(h) * db == b.num().evaluate(h) * da)) return false;
    ++taken;
  }
  return true;
}

}  // namespace daha
