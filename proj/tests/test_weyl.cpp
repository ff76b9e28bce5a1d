#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace daha;

namespace {

/// Lengths by breadth-first search over words in the simple reflections.
std::map<AffineWeylElt, std::size_t> word_bfs(const AffineWeylGroup& W, std::size_t L) {
  std::map<AffineWeylElt, std::size_t> len{{W.identity(), 0}};
  std::vector<AffineWeylElt> frontier{W.identity()};
  for (std::size_t k = 1; k <= L; ++k) {
    std::vector<AffineWeylElt> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i <= W.rank(); ++i) {
        AffineWeylElt x = W.multiply(w, W.simple(i));
        if (len.emplace(x, k).second) next.push_back(x);
      }
    frontier = next;
  }
  return len;
}

/// Positive real affine roots with |level| <= K made negative by w, by direct action.
std::set<RealAffineRoot> inversion_oracle(const AffineWeylGroup& W, const AffineWeylElt& w, int K) {
  std::set<RealAffineRoot> out;
  std::vector<IVec> roots = W.datum().positive_roots();
  for (const IVec& r : W.datum().positive_roots()) roots.push_back(-r);
  for (const IVec& b : roots)
    for (int k = 0; k <= K; ++k) {
      RealAffineRoot r{b, k};
      if (!AffineWeylGroup::is_positive(r)) continue;
      if (!AffineWeylGroup::is_positive(W.act_on_root(w, r))) out.insert(r);
    }
  return out;
}

/// All products of subwords of one reduced word of w.
std::set<AffineWeylElt> subword_oracle(const AffineWeylGroup& W, const AffineWeylElt& w) {
  auto word = W.reduced_word(w);
  std::set<AffineWeylElt> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
    AffineWeylElt x = W.identity();
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1) x = W.multiply(x, W.simple(word[k]));
    out.insert(x);
  }
  return out;
}

}  // namespace

TEST_CASE("action examples in A1") {
  auto W = testsupport::group("A1");
  const RootDatum& rd = W->datum();
  AffineWeylElt xi = W->translation(IVec{1});
  AffineWeight a1 = rd.simple_root(1);
  CHECK(W->act_on_weight(xi, a1) == a1 - 2 * rd.delta());
  CHECK(W->act_on_weight(xi, rd.omega0()) == rd.omega0() + a1 - rd.delta());
  CHECK(W->act_on_coweight(xi, rd.d()) == rd.d() + rd.simple_coroot(1) - rd.c());
  CHECK(W->act_on_coweight(W->simple(1), rd.simple_coroot(1)) == -rd.simple_coroot(1));
  RealAffineRoot r = W->act_on_root(xi, {IVec{1}, 0});
  CHECK(r == RealAffineRoot{IVec{1}, -2});
  CHECK(W->act_on_root(W->simple(1), {IVec{1}, 1}) == RealAffineRoot{IVec{-1}, 1});
  CHECK(W->act_on_root(W->simple(0), W->simple_affine_root(0)) == RealAffineRoot{IVec{1}, -1});
  CHECK(W->length(xi) == 2);
  CHECK(W->length(W->from_word({0, 1, 0})) == 3);
  CHECK(W->reduced_word(W->identity()).empty());
}

TEST_CASE("delta and c are fixed") {
  for (const char* name : {"A2", "B2", "G2"}) {
    auto W = testsupport::group(name);
    for (const auto& w : W->enumerate_ball(3)) {
      CHECK(W->act_on_weight(w, W->datum().delta()) == W->datum().delta());
      CHECK(W->act_on_coweight(w, W->datum().c()) == W->datum().c());
    }
  }
}

TEST_CASE("simple reflections act as affine reflections") {
  for (const auto& name : preset_names()) {
    auto W = testsupport::group(name);
    const RootDatum& rd = W->datum();
    for (std::size_t i = 0; i <= rd.rank(); ++i) {
      AffineWeylElt s = W->simple(i);
      CHECK(W->multiply(s, s) == W->identity());
      for (const auto& mu : rd.weight_basis()) {
        AffineWeight expect = mu - static_cast<int>(rd.pairing(mu, rd.simple_coroot(i))) * rd.simple_root(i);
        CHECK(W->act_on_weight(s, mu) == expect);
      }
      for (const auto& mu : rd.coweight_basis()) {
        AffineCoweight expect = mu - static_cast<int>(rd.pairing(rd.simple_root(i), mu)) * rd.simple_coroot(i);
        CHECK(W->act_on_coweight(s, mu) == expect);
      }
    }
  }
}

TEST_CASE("group laws and action compatibility") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    auto W = testsupport::group(name);
    const RootDatum& rd = W->datum();
    auto ball = W->enumerate_ball(3);
    for (const auto& v : ball) {
      CHECK(W->multiply(v, W->identity()) == v);
      CHECK(W->multiply(v, W->inverse(v)) == W->identity());
      CHECK(W->from_word(W->reduced_word(v)) == v);
      CHECK(W->reduced_word(v).size() == W->length(v));
    }
    for (std::size_t a = 0; a < ball.size(); a += 3)
      for (std::size_t b = 0; b < ball.size(); b += 5) {
        AffineWeylElt vw = W->multiply(ball[a], ball[b]);
        for (const auto& mu : rd.weight_basis())
          CHECK(W->act_on_weight(vw, mu) == W->act_on_weight(ball[a], W->act_on_weight(ball[b], mu)));
        for (const auto& mu : rd.coweight_basis())
          CHECK(W->act_on_coweight(vw, mu) == W->act_on_coweight(ball[a], W->act_on_coweight(ball[b], mu)));
      }
  }
}

TEST_CASE("lengths match word BFS") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    auto W = testsupport::group(name);
    const std::size_t L = 4;
    auto bfs = word_bfs(*W, L);
    auto ball = W->enumerate_ball(L);
    CHECK(ball.size() == bfs.size());
    std::set<AffineWeylElt> uniq(ball.begin(), ball.end());
    CHECK(uniq.size() == ball.size());
    for (const auto& w : ball) {
      REQUIRE(bfs.count(w));
      CHECK(W->length(w) == bfs.at(w));
    }
    for (std::size_t k = 1; k < ball.size(); ++k) CHECK(W->canonical_less(ball[k - 1], ball[k]));
  }
}

TEST_CASE("ball sizes") {
  auto A1 = testsupport::group("A1");
  CHECK(A1->enumerate_ball(0).size() == 1);
  CHECK(A1->enumerate_ball(3).size() == 7);
  // affine A2: 1 + 3 + 6 elements up to length 2
  auto A2 = testsupport::group("A2");
  CHECK(A2->enumerate_ball(2).size() == 10);
  CHECK_THROWS_AS(A2->enumerate_ball(6, 50), ResourceCapExceeded);
}

TEST_CASE("inversion sets") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    auto W = testsupport::group(name);
    for (const auto& w : W->enumerate_ball(4)) {
      auto right = W->right_inversion_set(w);
      std::set<RealAffineRoot> rs(right.begin(), right.end());
      CHECK(rs == inversion_oracle(*W, w, 12));
      CHECK(right.size() == W->length(w));
      auto left = W->inversion_set(w);
      CHECK(left.size() == W->length(w));
      for (const auto& r : left) {
        CHECK(AffineWeylGroup::is_positive(r));
        CHECK_FALSE(AffineWeylGroup::is_positive(W->act_on_root(W->inverse(w), r)));
      }
    }
    for (std::size_t i = 0; i <= W->rank(); ++i) {
      auto inv = W->inversion_set(W->simple(i));
      REQUIRE(inv.size() == 1);
      CHECK(inv[0] == W->simple_affine_root(i));
    }
    CHECK(W->inversion_set(W->identity()).empty());
  }
}

TEST_CASE("inversion sets are additive under length-additive products") {
  auto W = testsupport::group("A2");
  auto ball = W->enumerate_ball(3);
  for (const auto& v : ball)
    for (const auto& w : ball) {
      AffineWeylElt vw = W->multiply(v, w);
      if (W->length(vw) != W->length(v) + W->length(w)) continue;
      std::set<RealAffineRoot> lhs;
      for (const auto& r : W->inversion_set(vw)) lhs.insert(r);
      std::multiset<RealAffineRoot> rhs;
      for (const auto& r : W->inversion_set(v)) rhs.insert(r);
      for (const auto& r : W->inversion_set(w)) rhs.insert(W->act_on_root(v, r));
      CHECK(std::multiset<RealAffineRoot>(lhs.begin(), lhs.end()) == rhs);
    }
}

TEST_CASE("length changes by one under simple reflections") {
  for (const char* name : {"A2", "B2"}) {
    auto W = testsupport::group(name);
    for (const auto& w : W->enumerate_ball(4))
      for (std::size_t i = 0; i <= W->rank(); ++i) {
        std::size_t l = W->length(w), lr = W->length(W->multiply(w, W->simple(i)));
        CHECK((lr == l + 1 || lr + 1 == l));
        CHECK((lr < l) == W->has_right_descent(w, i));
        std::size_t ll = W->length(W->multiply(W->simple(i), w));
        CHECK((ll < l) == W->has_left_descent(w, i));
      }
  }
}

TEST_CASE("Bruhat order") {
  auto A1 = testsupport::group("A1");
  AffineWeylElt s0 = A1->simple(0), s01 = A1->from_word({0, 1}), s10 = A1->from_word({1, 0});
  CHECK(A1->bruhat_leq(s0, s01));
  CHECK_FALSE(A1->bruhat_leq(s10, s01));
  CHECK(A1->bruhat_leq(A1->identity(), s01));

  for (const char* name : {"A1", "A2", "B2"}) {
    auto W = testsupport::group(name);
    auto ball = W->enumerate_ball(4);
    for (const auto& w : ball) {
      auto below = subword_oracle(*W, w);
      for (const auto& v : ball) CHECK(W->bruhat_leq(v, w) == (below.count(v) > 0));
    }
  }
}

TEST_CASE("pairing invariance") {
  for (const char* name : {"A1", "A2"}) {
    auto W = testsupport::group(name);
    const RootDatum& rd = W->datum();
    for (const auto& w : W->enumerate_ball(5))
      for (const auto& l : rd.weight_basis())
        for (const auto& m : rd.coweight_basis())
          CHECK(rd.pairing(W->act_on_weight(w, l), W->act_on_coweight(w, m)) == rd.pairing(l, m));
  }
}

TEST_CASE("action on characters") {
  auto W = testsupport::group("A1");
  const RootDatum& rd = W->datum();
  TorusChar<Rational> h{{Rational(2)}, Rational(3), Rational(5), Rational(7)};
  CHECK(W->act_on_character(W->identity(), h) == h);
  AffineWeylElt xi = W->translation(IVec{1});
  TorusChar<Rational> g = W->act_on_character(xi, h);
  CHECK(g.value(rd.simple_root(1)) == h.value(rd.simple_root(1)) * h.tau * h.tau);
  CHECK(g.tau == h.tau);
  CHECK(g.zeta == h.zeta);
  auto A2 = testsupport::group("A2");
  TorusChar<Rational> h2{{Rational(2), Rational(3)}, Rational(5), Rational(7), Rational(11)};
  auto ball = A2->enumerate_ball(2);
  for (const auto& v : ball)
    for (const auto& w : ball)
      CHECK(A2->act_on_character(A2->multiply(v, w), h2) == A2->act_on_character(v, A2->act_on_character(w, h2)));
}

TEST_CASE("rank mismatch is rejected") {
  auto A1 = testsupport::group("A1");
  auto A2 = testsupport::group("A2");
  CHECK_THROWS_AS(A1->multiply(A1->identity(), A2->identity()), DatumMismatch);
  CHECK_THROWS_AS(A1->act_on_weight(A1->identity(), A2->datum().delta()), DatumMismatch);
}
