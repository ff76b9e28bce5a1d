#include "daha/root_data.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace daha {

namespace {

constexpr std::size_t kMaxRoots = 4096;

int height(const IVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

void validate_shape(const RootDatum::Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw InvalidCartan("Cartan matrix is empty");
  if (n > kMaxRank) throw InvalidCartan("Cartan matrix rank " + std::to_string(n) + " exceeds maximum 8");
  for (const auto& row : a)
    if (row.size() != n) throw InvalidCartan("Cartan matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw InvalidCartan("diagonal entry a_" + std::to_string(i + 1) + std::to_string(i + 1) + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw InvalidCartan("off-diagonal entry is positive");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw InvalidCartan("a_ij = 0 must imply a_ji = 0");
    }
  }
}

void validate_connected(const RootDatum::Matrix& a) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> todo{0};
  seen[0] = true;
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && a[i][j] != 0) {
        seen[j] = true;
        todo.push_back(j);
      }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InvalidCartan("Cartan matrix is decomposable (Dynkin diagram not connected)");
}

std::vector<int> find_symmetrizers(const RootDatum::Matrix& a) {
  const std::size_t n = a.size();
  std::vector<mpq_class> d(n, 0);
  d[0] = 1;
  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0) continue;
      mpq_class dj = d[i] * a[i][j] / a[j][i];
      if (d[j] == 0) {
        d[j] = dj;
        todo.push_back(j);
      } else if (d[j] != dj) {
        throw InvalidCartan("Cartan matrix is not symmetrizable");
      }
    }
  }
  mpz_class l = 1;
  for (auto& x : d) {
    x.canonicalize();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<mpz_class> di;
  mpz_class g = 0;
  for (auto& x : d) {
    mpz_class v = x.get_num() * (l / x.get_den());
    if (v <= 0) throw InvalidCartan("symmetrizer is not positive");
    di.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  std::vector<int> out;
  for (auto& v : di) out.push_back(static_cast<int>(mpz_class(v / g).get_si()));
  return out;
}

void validate_positive_definite(const RootDatum::Matrix& a, const std::vector<int>& d) {
  const std::size_t n = a.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = d[i] * a[i][j];
    mpq_class det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && m[p][c] == 0) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        mpq_class f = m[r][c] / m[c][c];
        for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
      }
    }
    if (det <= 0)
      throw InvalidCartan("leading principal minor of order " + std::to_string(k) +
                          " of the symmetrized Cartan matrix is " + det.get_str() +
                          " (positive-definiteness test failed: not of finite type)");
  }
}

}  // namespace

RootDatumPtr build_root_datum(const RootDatum::Matrix& cartan) {
  validate_shape(cartan);
  validate_connected(cartan);
  auto sym = find_symmetrizers(cartan);
  validate_positive_definite(cartan, sym);

  std::shared_ptr<RootDatum> rd(new RootDatum());
  rd->cartan_ = cartan;
  rd->rank_ = cartan.size();
  rd->symmetrizers_ = sym;
  rd->d_max_ = *std::max_element(sym.begin(), sym.end());
  const std::size_t n = rd->rank_;

  // Breadth-first closure of the simple roots under simple reflections.
  std::set<IVec> seen;
  std::deque<IVec> todo;
  for (std::size_t i = 0; i < n; ++i) {
    IVec e = IVec::unit(n, i);
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IVec beta = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      long long p = 0;
      for (std::size_t j = 0; j < n; ++j) p += static_cast<long long>(beta[j]) * cartan[i][j];
      IVec img = beta;
      img[i] -= static_cast<int>(p);
      if (!RootDatum::is_positive(img) || seen.count(img)) continue;
      if (seen.size() >= kMaxRoots) throw InvalidCartan("root closure did not terminate");
      seen.insert(img);
      todo.push_back(img);
    }
  }
  rd->positive_roots_.assign(seen.begin(), seen.end());
  std::stable_sort(rd->positive_roots_.begin(), rd->positive_roots_.end(),
                   [](const IVec& x, const IVec& y) {
                     int hx = height(x), hy = height(y);
                     if (hx != hy) return hx < hy;
                     return x < y;
                   });
  rd->theta_ = rd->positive_roots_.back();

  rd->coroot_gram_.assign(n, std::vector<long long>(n, 0));
  rd->kappa_scale_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rd->kappa_scale_[i] = static_cast<int>(rd->d_max_ / sym[i]);
    for (std::size_t j = 0; j < n; ++j)
      rd->coroot_gram_[i][j] = static_cast<long long>(cartan[i][j]) * rd->d_max_ / sym[j];
  }
  rd->theta_check_ = rd->coroot(rd->theta_);
  if (rd->root_form(rd->theta_, rd->theta_) != 2)
    throw InvalidCartan("normalization failed: (theta, theta) != 2");
  return rd;
}

bool RootDatum::simply_laced() const {
  return std::all_of(symmetrizers_.begin(), symmetrizers_.end(),
                     [&](int x) { return x == symmetrizers_.front(); });
}

bool RootDatum::is_positive(const IVec& alpha) {
  bool nonzero = false;
  for (int x : alpha) {
    if (x < 0) return false;
    nonzero |= x != 0;
  }
  return nonzero;
}

bool RootDatum::is_root(const IVec& alpha) const {
  IVec a = is_positive(alpha) ? alpha : -alpha;
  return std::binary_search(positive_roots_.begin(), positive_roots_.end(), a,
                            [](const IVec& x, const IVec& y) {
                              int hx = height(x), hy = height(y);
                              if (hx != hy) return hx < hy;
                              return x < y;
                            });
}

mpq_class RootDatum::root_form(const IVec& alpha, const IVec& beta) const {
  if (alpha.size() != rank_ || beta.size() != rank_) throw DatumMismatch("root of wrong rank");
  mpz_class s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      s += static_cast<long>(alpha[i]) * beta[j] * symmetrizers_[i] * cartan_[i][j];
  mpq_class r(s, d_max_);
  r.canonicalize();
  return r;
}

int RootDatum::root_pairing(const IVec& alpha, const IVec& beta) const {
  mpq_class v = 2 * root_form(alpha, beta) / root_form(beta, beta);
  v.canonicalize();
  if (v.get_den() != 1) throw std::logic_error("non-integral root pairing");
  return static_cast<int>(v.get_num().get_si());
}

long long RootDatum::root_coweight_pairing(const IVec& alpha, const IVec& coweight) const {
  if (alpha.size() != rank_ || coweight.size() != rank_) throw DatumMismatch("vector of wrong rank");
  long long s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      s += static_cast<long long>(alpha[i]) * coweight[j] * cartan_[j][i];
  return s;
}

IVec RootDatum::coroot(const IVec& alpha) const {
  mpq_class norm = root_form(alpha, alpha);
  IVec out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    mpq_class x = mpq_class(2 * symmetrizers_[i] * alpha[i]) / d_max_ / norm;
    x.canonicalize();
    if (x.get_den() != 1) throw std::logic_error("non-integral coroot");
    out[i] = static_cast<int>(x.get_num().get_si());
  }
  return out;
}

IVec RootDatum::root_to_weight(const IVec& alpha) const {
  if (alpha.size() != rank_) throw DatumMismatch("root of wrong rank");
  IVec w(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    int s = 0;
    for (std::size_t j = 0; j < rank_; ++j) s += cartan_[i][j] * alpha[j];
    w[i] = s;
  }
  return w;
}

AffineWeight RootDatum::zero_weight() const { return {IVec(rank_), 0, 0}; }
AffineWeight RootDatum::delta() const { return {IVec(rank_), 1, 0}; }
AffineWeight RootDatum::omega0() const { return {IVec(rank_), 0, 1}; }

AffineWeight RootDatum::omega(std::size_t i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("fundamental weight index out of range");
  return {IVec::unit(rank_, i - 1), 0, 0};
}

AffineWeight RootDatum::simple_root(std::size_t i) const {
  if (i > rank_) throw std::out_of_range("simple root index out of range");
  if (i == 0) return {-root_to_weight(theta_), 1, 0};
  return {root_to_weight(IVec::unit(rank_, i - 1)), 0, 0};
}

AffineWeight RootDatum::affine_root_weight(const IVec& alpha, int level) const {
  return {root_to_weight(alpha), level, 0};
}

std::vector<AffineWeight> RootDatum::weight_basis() const {
  std::vector<AffineWeight> out;
  for (std::size_t i = 1; i <= rank_; ++i) out.push_back(omega(i));
  out.push_back(delta());
  out.push_back(omega0());
  return out;
}

AffineCoweight RootDatum::zero_coweight() const { return {IVec(rank_), 0, 0}; }
AffineCoweight RootDatum::c() const { return {IVec(rank_), 0, 1}; }
AffineCoweight RootDatum::d() const { return {IVec(rank_), 1, 0}; }

AffineCoweight RootDatum::simple_coroot(std::size_t i) const {
  if (i > rank_) throw std::out_of_range("simple coroot index out of range");
  if (i == 0) return {-theta_check_, 0, 1};
  return {IVec::unit(rank_, i - 1), 0, 0};
}

std::vector<AffineCoweight> RootDatum::coweight_basis() const {
  std::vector<AffineCoweight> out;
  for (std::size_t i = 1; i <= rank_; ++i) out.push_back(simple_coroot(i));
  out.push_back(d());
  out.push_back(c());
  return out;
}

void RootDatum::check_weight(const AffineWeight& w) const {
  if (w.fin.size() != rank_) throw DatumMismatch("weight built over a different root datum");
}

void RootDatum::check_coweight(const AffineCoweight& w) const {
  if (w.fin.size() != rank_) throw DatumMismatch("coweight built over a different root datum");
}

long long RootDatum::pairing(const AffineWeight& lambda, const AffineCoweight& mu) const {
  check_weight(lambda);
  check_coweight(mu);
  return dot(lambda.fin, mu.fin) + static_cast<long long>(lambda.delta) * mu.d +
         static_cast<long long>(lambda.omega0) * mu.c;
}

long long RootDatum::coroot_form(const IVec& lambda, const IVec& mu) const {
  long long s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (lambda[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) s += lambda[i] * coroot_gram_[i][j] * mu[j];
  }
  return s;
}

mpq_class RootDatum::bilinear(const AffineCoweight& lambda, const AffineCoweight& mu) const {
  check_coweight(lambda);
  check_coweight(mu);
  return mpq_class(static_cast<long>(coroot_form(lambda.fin, mu.fin)));
}

AffineWeight RootDatum::kappa(const AffineCoweight& lambda) const {
  check_coweight(lambda);
  IVec scaled(rank_);
  for (std::size_t i = 0; i < rank_; ++i) scaled[i] = lambda.fin[i] * kappa_scale_[i];
  return {root_to_weight(scaled), 0, 0};
}

RootDatum::Matrix preset_cartan(const std::string& name) {
  static const std::map<std::string, RootDatum::Matrix> presets = {
      {"A1", {{2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {"B2", {{2, -1}, {-2, 2}}},
      {"C2", {{2, -2}, {-1, 2}}},
      {"G2", {{2, -1}, {-3, 2}}},
  };
  auto it = presets.find(name);
  if (it == presets.end()) throw InvalidCartan("unknown root type preset '" + name + "'");
  return it->second;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"A1", "A2", "A3", "B2", "C2", "G2"};
  return names;
}

}  // namespace daha
