// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "daha/checks.hpp"

using namespace daha;

namespace {

// Pinned parameters.  All equality is exact (zero tolerance) except
// criterion 8, which compares the modp mode against exact arithmetic.
constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kRelWindowL0 = 4, kRelWindowMargin = 3;
constexpr std::size_t kHomPairs = 200, kHomMaxLen = 3, kHomWindowL0 = 3, kHomWindowMargin = 2 * kHomMaxLen;
constexpr std::size_t kStructMaxLen = 4;
constexpr std::size_t kPairingLen = 5, kBruhatLen = 4;
constexpr int kRegularBound = 50;
constexpr std::size_t kMaxIdeal = 30;
constexpr std::size_t kWallWindowL0 = 3, kWallWindowMargin = 2;
constexpr std::size_t kModpPairs = 100;
constexpr std::uint64_t kModpPrime = 2305843009213693951ULL;  // 2^61 - 1
constexpr int kModpSamples = 3;

// Time budgets in seconds.
constexpr double kBudget1PerType = 30, kBudget2PerType = 120, kBudget3 = 300, kBudget4 = 60, kBudget5 = 60,
                 kBudget6 = 120, kBudget7 = 60;

using clk = std::chrono::steady_clock;

struct Model {
  AffineWeylGroupPtr W;
  DahaPtr H;
  std::shared_ptr<FixedPointModel> fp;
};

Model model(const std::string& type) {
  Model m;
  m.W = std::make_shared<const AffineWeylGroup>(build_root_datum(preset_cartan(type)));
  m.H = std::make_shared<const Daha>(m.W);
  m.fp = std::make_shared<FixedPointModel>(m.H);
  return m;
}

double seconds_since(clk::time_point t0) { return std::chrono::duration<double>(clk::now() - t0).count(); }

struct Verdict {
  bool ok = true;
  std::string note;

  void absorb(const std::string& tag, const CheckList& list) {
    for (const auto& c : list)
      if (!c.passed) fail(tag + " " + c.name + ": " + c.detail);
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    ok = false;
    if (note.empty()) note = what;
  }
  void timed(const std::string& tag, double elapsed, double budget) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %.1fs", tag.c_str(), elapsed);
    if (!note.empty() && ok) note += ", ";
    if (ok) note += buf;
    require(elapsed <= budget, tag + " exceeded " + std::to_string(static_cast<int>(budget)) + "s");
  }
};

bool report(int id, const std::string& title, const std::function<Verdict()>& body) {
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.ok = false;
    v.note = std::string("exception: ") + e.what();
  }
  std::cout << (v.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << v.note << ")" << std::endl;
  return v.ok;
}

const std::vector<std::string> kTypes = {"A1", "A2", "B2"};

Verdict relations() {
  Verdict v;
  for (const auto& t : kTypes) {
    auto m = model(t);
    auto t0 = clk::now();
    auto list = daha_relation_checks(*m.H);
    v.absorb(t, list);
    std::size_t cases = 0;
    for (const auto& c : list) cases += c.cases;
    v.require(cases > 0, t + " ran no cases");
    v.timed(t, seconds_since(t0), kBudget1PerType);
  }
  return v;
}

Verdict fp_relations() {
  Verdict v;
  std::mt19937_64 rng(kSeed);
  for (const auto& t : kTypes) {
    auto m = model(t);
    auto t0 = clk::now();
    v.absorb(t, fp_relation_checks(*m.fp, make_window(m.W, kRelWindowL0, kRelWindowMargin), EqualityMode::exact(), rng));
    v.timed(t, seconds_since(t0), kBudget2PerType);
  }
  return v;
}

Verdict homomorphism() {
  Verdict v;
  std::mt19937_64 rng(kSeed);
  auto m = model("A1");
  auto t0 = clk::now();
  auto list = fp_homomorphism_checks(*m.fp, make_window(m.W, kHomWindowL0, kHomWindowMargin), kHomPairs, kHomMaxLen,
                                     EqualityMode::exact(), rng);
  v.absorb("A1", list);
  for (const auto& c : list) v.require(c.cases == kHomPairs, c.name + " ran " + std::to_string(c.cases) + " pairs");
  v.timed("A1 " + std::to_string(kHomPairs) + " pairs", seconds_since(t0), kBudget3);
  return v;
}

Verdict structure_constants() {
  Verdict v;
  auto t0 = clk::now();
  for (const std::string t : {"A1", "A2"}) {
    auto m = model(t);
    v.absorb(t, structure_constant_checks(*m.fp, kStructMaxLen));
  }
  v.timed("A1+A2", seconds_since(t0), kBudget4);
  return v;
}

Verdict combinatorics() {
  Verdict v;
  auto t0 = clk::now();
  for (const auto& t : kTypes) v.absorb(t, combinatorial_checks(*model(t).W, kPairingLen, kBruhatLen));
  v.timed("A1+A2+B2", seconds_since(t0), kBudget5);
  return v;
}

Verdict modules() {
  Verdict v;
  auto t0 = clk::now();
  // Largest balls with at most kMaxIdeal elements.
  const std::vector<std::pair<std::string, std::size_t>> ideals = {{"A1", 14}, {"A2", 3}, {"B2", 3}};
  for (const auto& [t, len] : ideals) {
    auto m = model(t);
    auto h = generic_character(m.W->rank());
    auto cert = is_regular_pair(h.tau, h.zeta, kRegularBound);
    v.require(cert.regular, t + " character is not regular: " + cert.reason);
    InducedTrunc<Rational> M(m.H, BruhatIdeal::ball(m.W, len), h);
    v.require(M.ideal().size() <= kMaxIdeal, t + " ideal too large");
    v.absorb(t, module_checks(M, true));
  }
  v.timed("A1(29)+A2(19)+B2(17)", seconds_since(t0), kBudget6);
  return v;
}

Verdict walls() {
  Verdict v;
  std::mt19937_64 rng(kSeed);
  auto t0 = clk::now();
  for (const auto& t : kTypes) {
    auto m = model(t);
    auto list = wall_checks(*m.fp, make_window(m.W, kWallWindowL0, kWallWindowMargin), EqualityMode::exact(), rng);
    v.absorb(t, list);
    for (const auto& c : list)
      if (c.name == "wall_admissible_pairs")
        // one case per simple root, each needing at least three admissible pairs
        v.require(c.cases == m.W->rank() + 1, t + " did not visit every simple root");
  }
  v.timed("A1+A2+B2", seconds_since(t0), kBudget7);
  return v;
}

Verdict equality_modes() {
  Verdict v;
  std::mt19937_64 rng(kSeed);
  auto t0 = clk::now();
  const EqualityMode modp = EqualityMode::modp(kModpPrime, kModpSamples);
  for (std::size_t rank : {1, 2}) {
    auto list = equality_mode_checks(rank, kModpPairs, modp, rng);
    v.absorb("rank " + std::to_string(rank), list);
    for (const auto& c : list) v.require(c.cases == kModpPairs, c.name + " case count");
  }
  v.timed("2x" + std::to_string(kModpPairs) + " pairs", seconds_since(t0), 1e9);
  return v;
}

}  // namespace

int main() {
  int failed = 0;
  failed += !report(1, "normal-form relation suite A1/A2/B2", relations);
  failed += !report(2, "fixed-point generator relations on windows (4,3)", fp_relations);
  failed += !report(3, "homomorphism and injectivity oracle, 200 pairs", homomorphism);
  failed += !report(4, "structure constants a_vw = 1 and inversion additivity", structure_constants);
  failed += !report(5, "combinatorial suite", combinatorics);
  failed += !report(6, "induced module suite", modules);
  failed += !report(7, "s-wall concentration consistency", walls);
  failed += !report(8, "modp / exact equality coherence", equality_modes);
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << 8 - failed << "/8 criteria" << std::endl;
  return failed ? 1 : 0;
}
