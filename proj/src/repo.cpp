#include "daha/repo.hpp"

#include <set>

namespace daha {

BruhatIdeal::BruhatIdeal(AffineWeylGroupPtr group, std::vector<AffineWeylElt> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [&](const AffineWeylElt& a, const AffineWeylElt& b) { return group_->canonical_less(a, b); });
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
}

std::size_t BruhatIdeal::index_of(const AffineWeylElt& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw NotInIdeal("element outside the ideal");
  return it->second;
}

BruhatIdeal BruhatIdeal::ball(const AffineWeylGroupPtr& group, std::size_t max_length) {
  return BruhatIdeal(group, group->enumerate_ball(max_length));
}

BruhatIdeal BruhatIdeal::generated_by(const AffineWeylGroupPtr& group, const std::vector<AffineWeylElt>& gens) {
  std::size_t top = 0;
  for (const auto& g : gens) top = std::max(top, group->length(g));
  std::vector<AffineWeylElt> out;
  for (const auto& u : group->enumerate_ball(top))
    for (const auto& g : gens)
      if (group->bruhat_leq(u, g)) {
        out.push_back(u);
        break;
      }
  return BruhatIdeal(group, std::move(out));
}

BruhatIdeal BruhatIdeal::from_elements(const AffineWeylGroupPtr& group, std::vector<AffineWeylElt> elements) {
  std::set<AffineWeylElt> have(elements.begin(), elements.end());
  if (have.size() != elements.size()) throw std::invalid_argument("ideal lists an element twice");
  std::size_t top = 0;
  for (const auto& v : elements) top = std::max(top, group->length(v));
  for (const auto& u : group->enumerate_ball(top)) {
    if (have.count(u)) continue;
    for (const auto& v : elements)
      if (group->bruhat_leq(u, v))
        throw std::invalid_argument("not downward closed: " + group->word_string(u) + " <= " +
                                    group->word_string(v) + " is missing");
  }
  return BruhatIdeal(group, std::move(elements));
}

RegularityCertificate is_regular_pair(const Rational& tau, const Rational& zeta, int bound) {
  RegularityCertificate cert;
  cert.bound = bound;
  if (bound < 1) throw std::invalid_argument("regularity bound must be positive");
  if (sgn(tau) == 0 || sgn(zeta) == 0) {
    cert.reason = "tau and zeta must be nonzero";
    return cert;
  }
  std::map<Rational, int> zeta_powers;
  Rational z = 1;
  for (int m = 1; m <= bound; ++m) {
    z *= zeta;
    zeta_powers.emplace(z, m);
  }
  Rational p = 1;
  for (int k = 1; k <= bound; ++k) {
    p *= tau;
    if (p == 1) {
      cert.witness = std::make_pair(k, 0);
      cert.reason = "tau is a root of unity: tau^" + std::to_string(k) + " = 1";
      return cert;
    }
    auto it = zeta_powers.find(p);
    if (it != zeta_powers.end()) {
      cert.witness = std::make_pair(k, it->second);
      cert.reason = "tau^" + std::to_string(k) + " = zeta^" + std::to_string(it->second);
      return cert;
    }
  }
  cert.regular = true;
  cert.reason = "no relation tau^k = 1 or tau^k = zeta^m with 1 <= k, m <= " + std::to_string(bound);
  return cert;
}

TorusChar<Rational> generic_character(std::size_t rank, const Rational& tau, const Rational& zeta) {
  std::vector<long> primes;
  for (long n = 5; primes.size() < rank + 1; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) prime = false;
    if (prime) primes.push_back(n);
  }
  TorusChar<Rational> h;
  for (std::size_t i = 0; i < rank; ++i) h.omega.emplace_back(primes[i]);
  h.tau = tau;
  h.omega0 = primes[rank];
  h.zeta = zeta;
  return h;
}

TorusChar<ModP> reduce_mod_p(const TorusChar<Rational>& h, std::uint64_t p) {
  auto red = [p](const Rational& x) {
    ModP num(mpz_fdiv_ui(x.get_num_mpz_t(), p), p), den(mpz_fdiv_ui(x.get_den_mpz_t(), p), p);
    if (den.is_zero()) throw std::domain_error("denominator vanishes modulo p");
    return num / den;
  };
  TorusChar<ModP> out;
  for (const auto& x : h.omega) out.omega.push_back(red(x));
  out.tau = red(h.tau);
  out.omega0 = red(h.omega0);
  out.zeta = red(h.zeta);
  return out;
}

}  // namespace daha
