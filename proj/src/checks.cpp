#include "daha/checks.hpp"

#include <algorithm>
#include <set>

namespace daha {

namespace {

void sort_by_name(CheckList& list) {
  std::sort(list.begin(), list.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

CheckResult named(const std::string& name, bool exact = true) {
  CheckResult c;
  c.name = name;
  c.exact = exact;
  return c;
}

std::string idx(std::size_t i) { return std::to_string(i); }

/// Relation operations on normal forms.
struct DahaBackend {
  using Elt = DahaElt;
  const Daha& H;
  Elt T(std::size_t i) const { return H.make_T(H.group().simple(i)); }
  Elt X(const AffineWeight& l) const { return H.make_X(l); }
  Elt one() const { return H.one(); }
  Elt mul(const Elt& a, const Elt& b) const { return H.mul(a, b); }
  Elt add(Elt a, const Elt& b) const { return a += b; }
  Elt sub(Elt a, const Elt& b) const { return a -= b; }
  Elt scale(const LaurentPoly& f, const Elt& a) const { return f * a; }
  Elt Tinv(std::size_t i) const { return H.invert_T(H.group().simple(i)); }
  bool eq(const Elt& a, const Elt& b) const { return H.equal(a, b); }
  bool exact() const { return true; }
};

/// Relation operations on fixed-point matrices.
struct FPBackend {
  using Elt = FPMatrix;
  const FixedPointModel& fp;
  WindowPtr win;
  const EqualityMode& mode;
  std::mt19937_64& rng;
  Elt T(std::size_t i) const { return fp.rho_T(i, win); }
  Elt X(const AffineWeight& l) const { return fp.rho_X(l, win); }
  Elt one() const { return FPMatrix::identity(win); }
  Elt mul(const Elt& a, const Elt& b) const { return fp_mul(a, b); }
  Elt add(const Elt& a, const Elt& b) const { return fp_add(a, b); }
  Elt sub(const Elt& a, const Elt& b) const { return fp_sub(a, b); }
  Elt scale(const LaurentPoly& f, const Elt& a) const { return fp_scale(a, RationalFn(f)); }
  Elt Tinv(std::size_t i) const {
    const Daha& H = fp.algebra();
    LaurentPoly tinv = LaurentPoly::monomial(fp.datum().zero_weight(), -1);
    return add(scale(tinv, T(i)), scale(tinv - H.poly_one(), one()));
  }
  bool eq(const Elt& a, const Elt& b) const { return equal_on_inner(a, b, mode, rng); }
  bool exact() const { return mode.kind == EqualityMode::Kind::Exact; }
};

template <class B>
void guarded(CheckResult& c, const std::string& what, B&& body) {
  try {
    c.record(body(), what);
  } catch (const InsufficientMargin& e) {
    c.record(false, what + " (" + e.what() + ")");
  }
}

template <class B>
CheckList relation_suite(const B& b, const Daha& H) {
  const RootDatum& rd = H.datum();
  const AffineWeylGroup& W = H.group();
  const LaurentPoly one = H.poly_one(), t = H.t(), tm1 = H.t() - H.poly_one();
  const auto weights = relation_test_weights(rd);
  CheckResult quad = named("quadratic", b.exact()), braid = named("braid", b.exact()),
              inv = named("inverse", b.exact()), xq = named("x_delta_q", b.exact()),
              xgl = named("x_group_law", b.exact()), cross = named("cross", b.exact());

  std::vector<typename B::Elt> T;
  for (std::size_t i = 0; i <= rd.rank(); ++i) T.push_back(b.T(i));
  for (std::size_t i = 0; i <= rd.rank(); ++i) {
    guarded(quad, "i=" + idx(i),
            [&] { return b.eq(b.mul(T[i], T[i]), b.add(b.scale(tm1, T[i]), b.scale(t, b.one()))); });
    guarded(inv, "i=" + idx(i), [&] { return b.eq(b.mul(T[i], b.Tinv(i)), b.one()); });
    for (std::size_t j = i + 1; j <= rd.rank(); ++j) {
      int m = coxeter_order(W, i, j);
      if (m == 0) continue;
      guarded(braid, "i=" + idx(i) + " j=" + idx(j), [&] {
        auto l = b.one(), r = b.one();
        for (int k = 0; k < m; ++k) {
          l = b.mul(l, T[k % 2 == 0 ? i : j]);
          r = b.mul(r, T[k % 2 == 0 ? j : i]);
        }
        return b.eq(l, r);
      });
    }
    // X_l T_i - T_i X_{l - r a} = (t - 1) sum_{k<r} X_{l - k a}, with r = <l, a_i^vee> >= 0
    for (const AffineWeight& w : weights) {
      long long r0 = rd.pairing(w, rd.simple_coroot(i));
      AffineWeight l = r0 >= 0 ? w : w - static_cast<int>(r0) * rd.simple_root(i);
      int r = static_cast<int>(r0 >= 0 ? r0 : -r0);
      guarded(cross, "i=" + idx(i) + " lambda=" + l.fin.str(), [&] {
        auto lhs = b.sub(b.mul(b.X(l), T[i]), b.mul(T[i], b.X(l - r * rd.simple_root(i))));
        auto rhs = b.scale(one, b.X(rd.zero_weight()));
        rhs = b.sub(rhs, rhs);
        for (int k = 0; k < r; ++k) rhs = b.add(rhs, b.scale(tm1, b.X(l - k * rd.simple_root(i))));
        return b.eq(lhs, rhs);
      });
    }
  }
  guarded(xq, "X_delta", [&] { return b.eq(b.X(rd.delta()), b.scale(H.q(), b.one())); });
  for (std::size_t a = 0; a < weights.size(); ++a)
    for (std::size_t c = a; c < weights.size(); ++c)
      guarded(xgl, "pair " + idx(a) + "," + idx(c),
              [&] { return b.eq(b.mul(b.X(weights[a]), b.X(weights[c])), b.X(weights[a] + weights[c])); });
  CheckList out{quad, braid, inv, xq, xgl, cross};
  sort_by_name(out);
  return out;
}

LaurentPoly random_poly(std::size_t rank, std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), small(-2, 2), texp(-1, 1), coeff(1, 3), sign(0, 1);
  std::vector<LaurentPoly::Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    AffineWeight w;
    w.fin = IVec(rank);
    for (std::size_t i = 0; i < rank; ++i) w.fin[i] = small(rng);
    w.delta = small(rng);
    w.omega0 = small(rng) / 2;
    terms.push_back({LaurentMonomial{texp(rng), w}, sign(rng) ? coeff(rng) : -coeff(rng)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly random_nonzero_poly(std::size_t rank, std::mt19937_64& rng, int max_terms) {
  for (;;) {
    LaurentPoly p = random_poly(rank, rng, max_terms);
    if (!p.is_zero()) return p;
  }
}

}  // namespace

std::vector<AffineWeight> relation_test_weights(const RootDatum& rd) {
  std::vector<AffineWeight> out = rd.weight_basis();
  out.push_back(rd.simple_root(0));
  out.push_back(rd.omega0() - rd.omega(1));
  return out;
}

int coxeter_order(const AffineWeylGroup& W, std::size_t i, std::size_t j) {
  const AffineWeylElt st = W.multiply(W.simple(i), W.simple(j));
  AffineWeylElt p = st;
  for (int m = 1; m <= 6; ++m) {
    if (p == W.identity()) return m;
    p = W.multiply(p, st);
  }
  return 0;
}

DahaElt random_element(const Daha& H, const std::vector<AffineWeylElt>& ball, std::mt19937_64& rng,
                       std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1), nterms(1, max_terms);
  DahaElt a;
  while (a.terms().empty()) {
    const std::size_t n = nterms(rng);
    for (std::size_t k = 0; k < n; ++k) a.add_term(ball[pick(rng)], random_poly(H.rank(), rng, 2));
  }
  return a;
}

std::vector<AffineWeylElt> subword_products(const AffineWeylGroup& W, const AffineWeylElt& w) {
  const auto word = W.reduced_word(w);
  std::set<AffineWeylElt> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
    AffineWeylElt x = W.identity();
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1) x = W.multiply(x, W.simple(word[k]));
    out.insert(x);
  }
  return {out.begin(), out.end()};
}

CheckList daha_relation_checks(const Daha& H) { return relation_suite(DahaBackend{H}, H); }

CheckList y_checks(const Daha& H) {
  const RootDatum& rd = H.datum();
  std::vector<AffineCoweight> ys;
  for (std::size_t i = 1; i <= rd.rank(); ++i) ys.push_back(rd.simple_coroot(i));
  ys.push_back(rd.simple_coroot(1) - rd.simple_coroot(rd.rank()) - rd.simple_coroot(1));
  CheckResult comm = named("y_commute"), law = named("y_group_law"), zero = named("y_zero");
  zero.record(H.make_Y(rd.zero_coweight()) == H.one(), "Y_0");
  for (std::size_t a = 0; a < ys.size(); ++a)
    for (std::size_t b = a; b < ys.size(); ++b) {
      DahaElt ya = H.make_Y(ys[a]), yb = H.make_Y(ys[b]);
      DahaElt ab = H.mul(ya, yb);
      comm.record(ab == H.mul(yb, ya), "pair " + idx(a) + "," + idx(b));
      law.record(ab == H.make_Y(ys[a] + ys[b]), "pair " + idx(a) + "," + idx(b));
    }
  CheckList out{comm, law, zero};
  sort_by_name(out);
  return out;
}

CheckList fp_relation_checks(const FixedPointModel& fp, const WindowPtr& win, const EqualityMode& mode,
                             std::mt19937_64& rng) {
  return relation_suite(FPBackend{fp, win, mode, rng}, fp.algebra());
}

CheckList fp_homomorphism_checks(const FixedPointModel& fp, const WindowPtr& win, std::size_t pairs,
                                 std::size_t max_len, const EqualityMode& mode, std::mt19937_64& rng) {
  const Daha& H = fp.algebra();
  const bool exact = mode.kind == EqualityMode::Kind::Exact;
  CheckResult mult = named("multiplicativity", exact), oracle = named("injectivity_oracle", exact);
  const auto ball = H.group().enumerate_ball(max_len);
  std::uniform_int_distribution<std::size_t> simple(0, H.rank());
  std::size_t equal_pairs = 0;
  for (std::size_t p = 0; p < pairs; ++p) {
    DahaElt a = random_element(H, ball, rng), b;
    switch (p % 4) {
      case 0: {  // the same element, recomputed through T_s T_s^{-1}
        const AffineWeylElt s = H.group().simple(simple(rng));
        b = H.mul(H.mul(a, H.make_T(s)), H.invert_T(s));
        break;
      }
      case 1:
        b = a + H.scalar(H.t() - H.poly_one());
        break;
      default:
        b = random_element(H, ball, rng);
    }
    const std::string what = "pair " + idx(p);
    // only the rows that reach the inner window are computed
    const std::size_t L0 = win->L0();
    FPMatrix ra = fp.rho(a, win, L0), rb = fp.rho(b, win, L0 + H.support_length(a));
    guarded(mult, what, [&] { return equal_on_inner(fp.rho(H.mul(a, b), win, L0), fp_mul(ra, rb, L0), mode, rng); });
    const bool same = H.equal(a, b);
    equal_pairs += same;
    guarded(oracle, what, [&] { return same == equal_on_inner(ra, rb, mode, rng); });
  }
  oracle.detail += (oracle.detail.empty() ? "" : "; ") + std::to_string(equal_pairs) + " equal pairs";
  return {oracle, mult};
}

CheckList structure_constant_checks(const FixedPointModel& fp, std::size_t maxlen) {
  const AffineWeylGroup& W = fp.group();
  CheckResult avw = named("a_vw_equals_one"), add = named("inversion_additivity");
  const auto ball = W.enumerate_ball(maxlen);
  for (const auto& v : ball)
    for (const auto& w : ball) {
      const AffineWeylElt vw = W.multiply(v, w);
      if (W.length(vw) != W.length(v) + W.length(w)) continue;
      const std::string what = "v=" + W.word_string(v) + " w=" + W.word_string(w);
      RationalFn lhs = fp.structure_constant_g(v, w) * fp.structure_constant_g(W.identity(), v);
      avw.record(exact_equal(lhs, fp.structure_constant_g(W.identity(), vw)), what);

      std::vector<RealAffineRoot> expect = W.inversion_set(v);
      for (const auto& b : W.inversion_set(w)) expect.push_back(W.act_on_root(v, b));
      std::set<RealAffineRoot> as_set(expect.begin(), expect.end());
      auto got = W.inversion_set(vw);
      add.record(as_set.size() == expect.size() && std::set<RealAffineRoot>(got.begin(), got.end()) == as_set &&
                     got.size() == expect.size(),
                 what);
    }
  return {avw, add};
}

CheckList combinatorial_checks(const AffineWeylGroup& W, std::size_t pairing_len, std::size_t bruhat_len) {
  const RootDatum& rd = W.datum();
  CheckResult pairing = named("pairing_invariance"), step = named("length_step"), invc = named("inversion_count"),
              bruhat = named("bruhat_subword");
  for (const auto& w : W.enumerate_ball(pairing_len)) {
    const std::string what = W.word_string(w);
    for (const auto& l : rd.weight_basis())
      for (const auto& m : rd.coweight_basis())
        pairing.record(rd.pairing(W.act_on_weight(w, l), W.act_on_coweight(w, m)) == rd.pairing(l, m), what);
    const std::size_t len = W.length(w);
    for (std::size_t i = 0; i <= rd.rank(); ++i) {
      const std::size_t l2 = W.length(W.multiply(w, W.simple(i)));
      step.record((l2 == len + 1 || l2 + 1 == len) && ((l2 < len) == W.has_right_descent(w, i)), what);
    }
    invc.record(W.inversion_set(w).size() == len, what);
  }
  const auto ball = W.enumerate_ball(bruhat_len);
  for (const auto& w : ball) {
    const auto below = subword_products(W, w);
    for (const auto& v : ball)
      bruhat.record(W.bruhat_leq(v, w) == std::binary_search(below.begin(), below.end(), v),
                    W.word_string(v) + " vs " + W.word_string(w));
  }
  CheckList out{pairing, step, invc, bruhat};
  sort_by_name(out);
  return out;
}

CheckList wall_checks(const FixedPointModel& fp, const WindowPtr& win, const EqualityMode& mode,
                      std::mt19937_64& rng) {
  const RootDatum& rd = fp.datum();
  const bool exact = mode.kind == EqualityMode::Kind::Exact;
  CheckResult indep = named("wall_independence", exact), gen = named("wall_vs_generator", exact),
              count = named("wall_admissible_pairs"), reject = named("wall_constraint");
  const LaurentPoly minus_one = LaurentPoly::constant(rd.rank(), -1);
  for (std::size_t i = 0; i <= rd.rank(); ++i) {
    const AffineWeight alpha = rd.simple_root(i);
    const AffineWeight base = i == 0 ? -rd.omega0() : -rd.omega(i);
    std::vector<LaurentMonomial> lambdas{{0, base}, {2, base + rd.delta()}, {-1, base - 3 * rd.delta()}};
    if (rd.rank() > 1) {
      AffineWeight flat = rd.zero_weight();
      if (i == 0) {
        const IVec& tc = rd.theta_check();
        flat = tc[1] * rd.omega(1) - tc[0] * rd.omega(2);
      } else {
        flat = rd.omega(i == 1 ? 2 : 1);
      }
      lambdas.push_back({1, base + flat - rd.delta()});
    }
    const FPMatrix expect = fp_sub(fp_scale(FPMatrix::identity(win), RationalFn(minus_one)), fp.rho_T(i, win));
    std::vector<FPMatrix> images;
    std::size_t admissible = 0;
    for (const auto& l : lambdas) {
      const LaurentMonomial mu{-l.t_exp, -alpha - l.weight};
      try {
        fp.check_wall_pair(i, l, mu);
        ++admissible;
      } catch (const ConstraintViolation&) {
        continue;
      }
      images.push_back(fp.concentrate_class(ClassSpec::s_wall(i, l, mu), win));
      const std::string what = "i=" + idx(i) + " lambda=" + l.weight.fin.str() + " delta=" +
                               std::to_string(l.weight.delta) + " t^" + std::to_string(l.t_exp);
      guarded(gen, what, [&] { return equal_on_inner(images.back(), expect, mode, rng); });
      if (images.size() > 1) guarded(indep, what, [&] { return equal_on_inner(images.back(), images.front(), mode, rng); });
    }
    count.record(admissible >= 3, "i=" + idx(i) + " has " + std::to_string(admissible) + " admissible pairs");
    bool threw = false;
    try {
      fp.check_wall_pair(i, {0, rd.zero_weight()}, {0, -alpha});
    } catch (const ConstraintViolation&) {
      threw = true;
    }
    reject.record(threw, "i=" + idx(i) + " accepted lambda = 0");
  }
  CheckList out{indep, gen, count, reject};
  sort_by_name(out);
  return out;
}

CheckList module_checks(const InducedTrunc<Rational>& M, bool expect_generic) {
  const Daha& H = M.algebra();
  const AffineWeylGroup& W = H.group();
  const RootDatum& rd = H.datum();
  const auto& el = M.ideal().elements();
  const std::size_t n = el.size();
  CheckResult tri = named("triangular"), diag = named("diagonal_weights"), comm = named("commute"),
              prod = named("product_law"), spec = named("spectrum"), dims = named("weight_space_dims"),
              total = named("weight_space_total");
  std::size_t top = 0;
  for (const auto& v : el) top = std::max(top, W.length(v));
  const auto ball = W.enumerate_ball(top);

  const auto weights = relation_test_weights(rd);
  std::vector<Matrix<Rational>> mats;
  for (const auto& lam : weights) {
    mats.push_back(M.x_action_matrix(lam));
    const auto& A = mats.back();
    std::vector<Rational> orbit_values;
    for (const auto& w : ball) orbit_values.push_back(M.character().value(W.act_on_weight(w, lam)));
    for (std::size_t r = 0; r < n; ++r) {
      const std::string what = "T_" + W.word_string(el[r]) + " lambda=" + lam.fin.str();
      diag.record(A[r][r] == M.weight_of_basis(el[r]).value(lam), what);
      spec.record(std::find(orbit_values.begin(), orbit_values.end(), A[r][r]) != orbit_values.end(), what);
      for (std::size_t c = 0; c < n; ++c)
        if (!field_is_zero(A[r][c])) tri.record(W.bruhat_leq(el[c], el[r]), what + " column " + W.word_string(el[c]));
    }
  }
  for (std::size_t a = 0; a < weights.size(); ++a)
    for (std::size_t b = a; b < weights.size(); ++b) {
      const std::string what = "pair " + idx(a) + "," + idx(b);
      const auto ab = mat_mul(mats[a], mats[b]);
      comm.record(ab == mat_mul(mats[b], mats[a]), what);
      prod.record(ab == M.x_action_matrix(weights[a] + weights[b]), what);
    }
  std::vector<TorusChar<Rational>> seen;
  std::size_t sum = 0;
  for (const auto& v : el) {
    auto wv = M.weight_of_basis(v);
    if (std::find(seen.begin(), seen.end(), wv) != seen.end()) continue;
    seen.push_back(wv);
    std::size_t mult = 0;
    for (const auto& u : el) mult += M.weight_of_basis(u) == wv;
    const std::size_t d = M.generalized_weight_space(wv).size();
    sum += d;
    dims.record(d == mult && (!expect_generic || d == 1), "weight of T_" + W.word_string(v) + ": dim " +
                                                              std::to_string(d) + ", multiplicity " +
                                                              std::to_string(mult));
  }
  total.record(sum == n, "sum " + std::to_string(sum) + " != " + std::to_string(n));
  CheckList out{tri, diag, comm, prod, spec, dims, total};
  sort_by_name(out);
  return out;
}

CheckList equality_mode_checks(std::size_t rank, std::size_t pairs, const EqualityMode& modp, std::mt19937_64& rng) {
  CheckResult agree = named("modp_agrees_with_exact", false), truth = named("exact_matches_construction");
  std::size_t equal_pairs = 0;
  for (std::size_t p = 0; p < pairs; ++p) {
    const LaurentPoly a = random_poly(rank, rng, 3), q = random_nonzero_poly(rank, rng, 2),
                      r = random_nonzero_poly(rank, rng, 2), s = random_nonzero_poly(rank, rng, 2);
    RationalFn x, y;
    bool expect = false;
    switch (p % 4) {
      case 0:  // common factor
        x = RationalFn(a, q);
        y = RationalFn(a * r, q * r);
        expect = true;
        break;
      case 1:  // sum over a common denominator
        x = RationalFn(a, q) + RationalFn(r, s);
        y = RationalFn(a * s + r * q, q * s);
        expect = true;
        break;
      case 2:  // off by a monomial
        x = RationalFn(a, q);
        y = RationalFn(a * r + LaurentPoly::monomial(AffineWeight{IVec(rank), 1, 0}), q * r);
        break;
      default:
        x = RationalFn(a, q);
        y = RationalFn(r, s);
        expect = a * s == r * q;
    }
    const std::string what = "pair " + idx(p);
    const bool ex = exact_equal(x, y);
    equal_pairs += ex;
    truth.record(ex == expect, what);
    agree.record(equal(x, y, modp, rank, rng) == ex, what);
  }
  agree.detail += (agree.detail.empty() ? "" : "; ") + modp.str() + ", " + std::to_string(equal_pairs) + " equal pairs";
  return {truth, agree};
}

}  // namespace daha
