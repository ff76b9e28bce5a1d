#include "daha/daha.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace daha {

LaurentPoly DahaElt::coeff(const AffineWeylElt& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void DahaElt::add_term(const AffineWeylElt& w, const LaurentPoly& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

DahaElt& DahaElt::operator+=(const DahaElt& o) {
  for (const auto& [w, f] : o.terms_) add_term(w, f);
  return *this;
}

DahaElt& DahaElt::operator-=(const DahaElt& o) {
  for (const auto& [w, f] : o.terms_) add_term(w, -f);
  return *this;
}

DahaElt operator-(DahaElt a) {
  for (auto& [w, f] : a.terms_) f = -f;
  return a;
}

DahaElt operator*(const LaurentPoly& f, const DahaElt& a) {
  DahaElt out;
  if (f.is_zero()) return out;
  for (const auto& [w, g] : a.terms_) out.add_term(w, f * g);
  return out;
}

Daha::Daha(AffineWeylGroupPtr group, std::size_t max_terms) : group_(std::move(group)), max_terms_(max_terms) {
  if (!group_) throw std::invalid_argument("null affine Weyl group");
  for (std::size_t i = 0; i <= rank(); ++i) {
    simple_roots_.push_back(datum().simple_root(i));
    simple_coroots_.push_back(datum().simple_coroot(i));
  }
}

DahaElt Daha::one() const { return scalar(poly_one()); }

DahaElt Daha::scalar(const LaurentPoly& f) const {
  DahaElt a;
  a.add_term(group_->identity(), f);
  return a;
}

DahaElt Daha::make_T(const AffineWeylElt& w) const {
  group_->check(w);
  DahaElt a;
  a.add_term(w, poly_one());
  return a;
}

DahaElt Daha::make_X(const AffineWeight& lambda) const {
  datum().check_weight(lambda);
  return scalar(LaurentPoly::monomial(lambda));
}

DahaElt Daha::make_X(const LaurentMonomial& m) const {
  datum().check_weight(m.weight);
  return scalar(LaurentPoly::monomial(m));
}

LaurentPoly Daha::t() const { return LaurentPoly::monomial(datum().zero_weight(), 1); }
LaurentPoly Daha::q() const { return LaurentPoly::monomial(datum().delta()); }

bool Daha::is_dominant(const IVec& coweight) const {
  for (std::size_t i = 1; i <= rank(); ++i)
    if (datum().root_coweight_pairing(IVec::unit(rank(), i - 1), coweight) < 0) return false;
  return true;
}

std::pair<IVec, IVec> Daha::dominant_decomposition(const IVec& lambda) const {
  // <alpha_i, 2 rho^vee> = 2 for every simple root.
  IVec two_rho(rank());
  for (const IVec& beta : datum().positive_roots()) two_rho += datum().coroot(beta);
  long long worst = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    worst = std::min(worst, datum().root_coweight_pairing(IVec::unit(rank(), i), lambda));
  int k = static_cast<int>((-worst + 1) / 2);
  IVec l2 = k * two_rho;
  return {lambda + l2, l2};
}

DahaElt Daha::make_Y(const AffineCoweight& lambda) const {
  datum().check_coweight(lambda);
  if (lambda.c != 0 || lambda.d != 0) throw std::invalid_argument("Y is defined here for finite coweights only (c = d = 0)");
  auto [l1, l2] = dominant_decomposition(lambda.fin);
  return mul(make_T(group_->translation(l1)), invert_T(group_->translation(l2)));
}

LaurentPoly Daha::reflect(std::size_t i, const LaurentPoly& f) const {
  const AffineWeight& a = simple_roots_.at(i);
  const AffineCoweight& av = simple_coroots_.at(i);
  return f.map_weights([&](const AffineWeight& mu) {
    long long r = datum().pairing(mu, av);
    return mu - static_cast<int>(r) * a;
  });
}

LaurentPoly Daha::demazure(std::size_t i, const LaurentPoly& f) const {
  const AffineWeight& a = simple_roots_.at(i);
  const AffineCoweight& av = simple_coroots_.at(i);
  std::vector<LaurentPoly::Term> acc;
  for (const auto& [m, c] : f.terms()) {
    long long r = datum().pairing(m.weight, av);
    // (t - 1) * c * Q, Q = (X_l - X_{l - r a}) / (1 - X_{-a})
    auto push = [&](const AffineWeight& w, std::int64_t sign) {
      acc.push_back({{m.t_exp + 1, w}, sign * c});
      acc.push_back({{m.t_exp, w}, -sign * c});
    };
    if (r > 0) {
      for (long long j = 0; j < r; ++j) push(m.weight - static_cast<int>(j) * a, 1);
    } else if (r < 0) {
      for (long long j = 1; j <= -r; ++j) push(m.weight + static_cast<int>(j) * a, -1);
    }
  }
  return LaurentPoly::from_terms(std::move(acc));
}

DahaElt Daha::straighten(std::size_t i, const AffineWeight& lambda) const { return left_mul_T(i, make_X(lambda)); }

DahaElt Daha::left_mul_T(std::size_t i, const DahaElt& a) const {
  if (i > rank()) throw std::out_of_range("simple index out of range");
  const AffineWeylElt s = group_->simple(i);
  const LaurentPoly tm1 = t() - poly_one();
  DahaElt out;
  for (const auto& [w, f] : a.terms()) {
    // T_s f T_w = s(f) T_s T_w + demazure(f) T_w
    LaurentPoly sf = reflect(i, f);
    AffineWeylElt sw = group_->multiply(s, w);
    if (!group_->has_left_descent(w, i)) {
      out.add_term(sw, sf);
    } else {
      out.add_term(sw, t() * sf);
      out.add_term(w, tm1 * sf);
    }
    out.add_term(w, demazure(i, f));
  }
  check_size(out);
  return out;
}

DahaElt Daha::left_mul_T_inverse(std::size_t i, const DahaElt& a) const {
  LaurentPoly tinv = LaurentPoly::monomial(datum().zero_weight(), -1);
  DahaElt out = tinv * left_mul_T(i, a);
  out += (tinv - poly_one()) * a;
  return out;
}

DahaElt Daha::mul(const DahaElt& a, const DahaElt& b) const {
  // T_u b for every u in supp(a), sharing work along reduced-word suffixes.
  std::unordered_map<AffineWeylElt, DahaElt, AffineWeylEltHash> memo;
  memo.emplace(group_->identity(), b);
  auto tu_b = [&](const AffineWeylElt& u) -> const DahaElt& {
    std::vector<std::size_t> word = group_->reduced_word(u);
    // suffix elements u_k = s_{i_k} ... s_{i_last}
    std::vector<AffineWeylElt> suffix(word.size() + 1, group_->identity());
    for (std::size_t k = word.size(); k-- > 0;) suffix[k] = group_->multiply(group_->simple(word[k]), suffix[k + 1]);
    std::size_t k = 0;
    while (!memo.count(suffix[k])) ++k;
    while (k-- > 0) memo.emplace(suffix[k], left_mul_T(word[k], memo.at(suffix[k + 1])));
    return memo.at(u);
  };
  DahaElt out;
  for (const auto& [u, f] : a.terms()) out += f * tu_b(u);
  check_size(out);
  return out;
}

DahaElt Daha::invert_T(const AffineWeylElt& w) const {
  std::vector<std::size_t> word = group_->reduced_word(w);
  // T_w^{-1} = T_{s_last}^{-1} ... T_{s_first}^{-1}
  DahaElt out = one();
  for (std::size_t k = 0; k < word.size(); ++k) out = left_mul_T_inverse(word[k], out);
  return out;
}

std::size_t Daha::support_length(const DahaElt& a) const {
  std::size_t m = 0;
  for (const auto& [w, f] : a.terms()) m = std::max(m, group_->length(w));
  return m;
}

void Daha::check_size(const DahaElt& a) const {
  std::size_t n = 0;
  for (const auto& [w, f] : a.terms()) n += f.size();
  if (n > max_terms_) throw ResourceCapExceeded("DAHA element exceeds term cap (" + std::to_string(max_terms_) + ")");
}

std::string Daha::pretty(const DahaElt& a) const {
  if (a.is_zero()) return "0";
  std::vector<std::pair<AffineWeylElt, const LaurentPoly*>> items;
  for (const auto& [w, f] : a.terms()) items.emplace_back(w, &f);
  std::sort(items.begin(), items.end(),
            [&](const auto& x, const auto& y) { return group_->canonical_less(x.first, y.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, f] : items) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f->str() << ")*T[" << group_->word_string(w) << "]";
  }
  return os.str();
}

}  // namespace daha
