#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace daha;

namespace {

/// Positive roots by brute force: all nonnegative integer vectors of bounded
/// height that are W-conjugate to a simple root.
std::set<IVec> roots_oracle(const RootDatum::Matrix& a) {
  const std::size_t n = a.size();
  std::set<IVec> all;
  std::vector<IVec> frontier;
  for (std::size_t i = 0; i < n; ++i) frontier.push_back(IVec::unit(n, i));
  for (int round = 0; round < 30; ++round) {
    std::vector<IVec> next;
    for (const IVec& b : frontier) {
      if (!all.insert(b).second) continue;
      for (std::size_t i = 0; i < n; ++i) {
        IVec c = b;
        long long p = 0;
        for (std::size_t j = 0; j < n; ++j) p += static_cast<long long>(a[i][j]) * b[j];
        c[i] -= static_cast<int>(p);
        next.push_back(c);
      }
    }
    frontier = next;
  }
  std::set<IVec> pos;
  for (const IVec& r : all)
    if (RootDatum::is_positive(r)) pos.insert(r);
  return pos;
}

}  // namespace

TEST_CASE("preset root systems") {
  auto a1 = testsupport::datum("A1");
  CHECK(a1->positive_roots().size() == 1);
  CHECK(a1->theta() == IVec{1});
  CHECK(a1->symmetrizers() == std::vector<int>{1});

  auto a2 = testsupport::datum("A2");
  CHECK(a2->positive_roots().size() == 3);
  CHECK(a2->theta() == IVec({1, 1}));

  auto b2 = testsupport::datum("B2");
  CHECK(b2->positive_roots().size() == 4);
  auto d = b2->symmetrizers();
  CHECK(((d == std::vector<int>{2, 1}) || (d == std::vector<int>{1, 2})));
  CHECK_FALSE(b2->simply_laced());

  CHECK(testsupport::datum("G2")->positive_roots().size() == 6);
  CHECK(testsupport::datum("A3")->positive_roots().size() == 6);
  CHECK(testsupport::datum("C2")->positive_roots().size() == 4);

  for (const auto& name : preset_names()) {
    auto rd = testsupport::datum(name);
    std::set<IVec> got(rd->positive_roots().begin(), rd->positive_roots().end());
    CHECK(got == roots_oracle(rd->cartan()));
    CHECK(rd->root_form(rd->theta(), rd->theta()) == 2);
  }
}

TEST_CASE("invalid cartan matrices") {
  CHECK_THROWS_AS(build_root_datum({{2, -1}}), InvalidCartan);
  CHECK_THROWS_AS(build_root_datum({}), InvalidCartan);
  CHECK_THROWS_AS(build_root_datum({{2, -1}, {-4, 2}}), InvalidCartan);  // affine A1
  CHECK_THROWS_AS(build_root_datum({{2, 0}, {0, 2}}), InvalidCartan);    // disconnected
  CHECK_THROWS_AS(build_root_datum({{2, 1}, {1, 2}}), InvalidCartan);
  CHECK_THROWS_AS(build_root_datum({{3}}), InvalidCartan);
  try {
    build_root_datum({{2, -2}, {-2, 2}});
    FAIL("expected rejection");
  } catch (const InvalidCartan& e) {
    CHECK(std::string(e.what()).find("positive-definite") != std::string::npos);
  }
  CHECK_THROWS_AS(preset_cartan("E9"), std::invalid_argument);
}

TEST_CASE("pairing conventions") {
  auto rd = testsupport::datum("A1");
  CHECK(rd->pairing(rd->delta(), rd->c()) == 0);
  CHECK(rd->pairing(rd->delta(), rd->d()) == 1);
  CHECK(rd->pairing(rd->omega0(), rd->c()) == 1);
  CHECK(rd->pairing(rd->omega0(), rd->d()) == 0);
  CHECK(rd->pairing(rd->omega(1), rd->d()) == 0);
  CHECK(rd->pairing(rd->omega(1), rd->simple_coroot(1)) == 1);
  CHECK(rd->pairing(rd->simple_root(0), rd->simple_coroot(0)) == 2);
  CHECK(rd->simple_root(0) == rd->delta() - rd->simple_root(1));
  CHECK(rd->simple_coroot(0) == rd->c() - rd->simple_coroot(1));

  for (const auto& name : preset_names()) {
    auto r = testsupport::datum(name);
    const std::size_t n = r->rank();
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        CHECK(r->pairing(r->omega(i), r->simple_coroot(j)) == (i == j ? 1 : 0));
        CHECK(r->pairing(r->simple_root(j), r->simple_coroot(i)) == r->cartan()[i - 1][j - 1]);
      }
    for (std::size_t i = 0; i <= n; ++i) {
      CHECK(r->pairing(r->simple_root(i), r->simple_coroot(i)) == 2);
      CHECK(r->pairing(r->delta(), r->simple_coroot(i)) == 0);
    }
  }
  auto a2 = testsupport::datum("A2");
  CHECK_THROWS_AS(a2->pairing(rd->omega(1), a2->c()), DatumMismatch);
}

TEST_CASE("root pairings agree with brute-force expansion") {
  for (const auto& name : preset_names()) {
    auto r = testsupport::datum(name);
    for (const IVec& a : r->positive_roots())
      for (const IVec& b : r->positive_roots()) {
        // <a, b^vee> = 2 (a, b) / (b, b) computed from the symmetrized Cartan matrix
        mpq_class ab = 0, bb = 0;
        for (std::size_t i = 0; i < r->rank(); ++i)
          for (std::size_t j = 0; j < r->rank(); ++j) {
            ab += mpq_class(a[i] * b[j] * r->symmetrizers()[i] * r->cartan()[i][j]);
            bb += mpq_class(b[i] * b[j] * r->symmetrizers()[i] * r->cartan()[i][j]);
          }
        mpq_class v = 2 * ab / bb;
        CHECK(v.get_den() == 1);
        CHECK(r->root_pairing(a, b) == v.get_num().get_si());
        CHECK(r->root_coweight_pairing(a, r->coroot(b)) == v.get_num().get_si());
      }
  }
}

TEST_CASE("bilinear form and kappa") {
  auto a1 = testsupport::datum("A1");
  CHECK(a1->bilinear(a1->simple_coroot(1), a1->simple_coroot(1)) == 2);
  CHECK(a1->bilinear(a1->zero_coweight(), a1->simple_coroot(1)) == 0);
  CHECK(a1->kappa(a1->simple_coroot(1)).fin == IVec{2});  // alpha_1 = 2 omega_1
  CHECK(a1->kappa(a1->zero_coweight()) == a1->zero_weight());
  // c and d are discarded
  CHECK(a1->bilinear(a1->c() + a1->d(), a1->simple_coroot(1)) == 0);

  auto b2 = testsupport::datum("B2");
  for (const IVec& a : b2->positive_roots()) {
    AffineCoweight av{b2->coroot(a), 0, 0};
    if (b2->root_form(a, a) == 1) {
      CHECK(b2->bilinear(av, av) == 4);
      CHECK(b2->kappa(av).fin == b2->root_to_weight(2 * a));
    } else {
      CHECK(b2->bilinear(av, av) == 2);
      CHECK(b2->kappa(av).fin == b2->root_to_weight(a));
    }
  }
  CHECK(b2->bilinear(b2->simple_coroot(0), b2->simple_coroot(0)) == 2);  // theta^vee part
}

TEST_CASE("kappa is integral, additive and W-equivariant") {
  for (const auto& name : preset_names()) {
    auto rd = testsupport::datum(name);
    auto W = testsupport::group(name);
    const std::size_t n = rd->rank();
    for (std::size_t i = 1; i <= n; ++i) {
      AffineWeight k = rd->kappa(rd->simple_coroot(i));
      IVec ai = IVec::unit(n, i - 1);
      // kappa(alpha_i^vee) = d'_i alpha_i, d'_i a positive integer
      bool found = false;
      for (int m = 1; m <= 3; ++m) found |= k.fin == rd->root_to_weight(m * ai);
      CHECK(found);
    }
    for (std::size_t w = 0; w < W->finite_order(); ++w)
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
          IVec x = rd->simple_coroot(i).fin + 2 * rd->simple_coroot(j).fin;
          CHECK(rd->kappa({W->finite_act_coweight(w, x), 0, 0}).fin ==
                W->finite_act_weight(w, rd->kappa({x, 0, 0}).fin));
          CHECK(rd->kappa({x, 0, 0}) == rd->kappa(rd->simple_coroot(i)) + 2 * rd->kappa(rd->simple_coroot(j)));
        }
  }
}

TEST_CASE("delta coefficient of the translation formula is integral") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> u(-4, 4);
  for (const auto& name : preset_names()) {
    auto rd = testsupport::datum(name);
    const std::size_t n = rd->rank();
    for (int trial = 0; trial < 50; ++trial) {
      IVec l(n), m(n);
      for (std::size_t i = 0; i < n; ++i) {
        l[i] = u(rng);
        m[i] = u(rng);
      }
      AffineCoweight lc{l, 0, 0};
      AffineWeight mu{m, u(rng), u(rng)};
      mpq_class v = rd->bilinear(lc, lc) * static_cast<long>(rd->pairing(mu, rd->c())) / 2 + static_cast<long>(rd->pairing(mu, lc));
      v.canonicalize();
      CHECK(v.get_den() == 1);
      CHECK(rd->coroot_form(l, l) % 2 == 0);
    }
  }
}
