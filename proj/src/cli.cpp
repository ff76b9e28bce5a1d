#include "daha/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "daha/checks.hpp"
#include "daha/fixedpoint.hpp"
#include "daha/repo.hpp"

namespace daha::cli {

using io::json;

namespace {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t parse_uint(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ConfigError(std::string(what) + " must be a nonnegative integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw ConfigError(std::string(what) + " is out of range");
  }
}

Rational parse_rational(const std::string& s, const char* what) {
  Rational r;
  try {
    r = Rational(s);
  } catch (const std::invalid_argument&) {
    throw ConfigError(std::string(what) + " must be an integer or a fraction p/q, got '" + s + "'");
  }
  if (r.get_den() == 0) throw ConfigError(std::string(what) + " has a zero denominator");
  r.canonicalize();
  if (sgn(r) == 0) throw ConfigError(std::string(what) + " must be nonzero");
  return r;
}

json parse_json(const std::string& s, const char* what) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw io::ParseError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

json config_json(const RunConfig& c) {
  json j = {{"mode", c.mode.str()},
            {"seed", c.seed},
            {"window", std::to_string(c.window_L0) + "/" + std::to_string(c.window_margin)},
            {"maxlen", c.maxlen},
            {"samples", c.samples},
            {"tau", c.tau},
            {"zeta", c.zeta},
            {"bound", c.bound}};
  if (c.cartan)
    j["cartan"] = *c.cartan;
  else
    j["type"] = c.type;
  if (c.character) j["character"] = *c.character;
  if (c.lhs) j["lhs"] = *c.lhs;
  if (c.rhs) j["rhs"] = *c.rhs;
  return j;
}

json check_json(const CheckResult& c, const std::string& prefix = "") {
  return {{"name", prefix + c.name},
          {"status", c.passed ? "PASS" : "FAIL"},
          {"detail", c.detail},
          {"cases", c.cases},
          {"failures", c.failures},
          {"verified_exact", c.exact}};
}

json root_json(const RealAffineRoot& r) { return {{"root", r.root.to_vector()}, {"level", r.level}}; }

json matrix_json(const FPMatrix& m) {
  const Window& win = m.window();
  const AffineWeylGroup& W = win.group();
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows().size(); ++r) {
    if (m.row(r).empty()) continue;
    json entries = json::array();
    for (const auto& [c, v] : m.row(r)) entries.push_back({{"col", W.reduced_word(win.at(c))}, {"value", io::to_json(v)}});
    rows.push_back({{"row", W.reduced_word(win.at(r))}, {"entries", entries}});
  }
  return {{"exact_radius", m.exact_radius()}, {"band", m.band()}, {"rows", rows}};
}

/// Everything a command needs, built lazily from the config.
struct Context {
  const RunConfig& cfg;
  std::mt19937_64 rng;
  RootDatumPtr datum;
  AffineWeylGroupPtr group;
  DahaPtr algebra;
  json data = json::object();
  std::vector<json> checks;

  explicit Context(const RunConfig& c) : cfg(c), rng(c.seed) {
    RootDatum::Matrix m = c.cartan ? io::cartan_from_json(json(*c.cartan)) : preset_cartan(c.type);
    datum = build_root_datum(m);
    group = std::make_shared<const AffineWeylGroup>(datum);
    algebra = std::make_shared<const Daha>(group);
  }

  WindowPtr window() const {
    if (cfg.window_margin < 1) throw ConfigError("fixed-point commands need a window margin >= 1");
    return make_window(group, cfg.window_L0, cfg.window_margin);
  }

  void add(const CheckList& list, const std::string& prefix = "") {
    for (const auto& c : list) checks.push_back(check_json(c, prefix));
  }

  AffineWeylElt operand(const std::optional<std::string>& s, const char* flag) const {
    if (!s) throw ConfigError(std::string("missing ") + flag);
    return io::element_from_json(parse_json(*s, flag), *group);
  }

  DahaElt daha_operand(const std::optional<std::string>& s, const char* flag) const {
    if (!s) throw ConfigError(std::string("missing ") + flag);
    return io::daha_elt_from_json(parse_json(*s, flag), *algebra);
  }
};

CheckResult single(const std::string& name, bool ok, const std::string& what) {
  CheckResult c;
  c.name = name;
  c.record(ok, what);
  return c;
}

void cmd_roots(Context& ctx) {
  const RootDatum& rd = *ctx.datum;
  ctx.data["datum"] = io::datum_report(rd);
  AffineCoweight theta_check = rd.zero_coweight();
  theta_check.fin = rd.theta_check();
  ctx.add({single("alpha0_check_is_c_minus_theta_check", rd.simple_coroot(0) == rd.c() - theta_check,
                  "alpha0_check differs")});
  CheckResult highest;
  highest.name = "theta_is_highest_root";
  highest.record(rd.is_root(rd.theta()), "theta is not a root");
  for (std::size_t i = 0; i < rd.rank(); ++i)
    highest.record(!rd.is_root(rd.theta() + IVec::unit(rd.rank(), i)), "theta + alpha_" + std::to_string(i + 1));
  CheckResult affine;
  affine.name = "affine_cartan";
  for (std::size_t i = 0; i <= rd.rank(); ++i) {
    affine.record(rd.pairing(rd.delta(), rd.simple_coroot(i)) == 0, "delta on coroot " + std::to_string(i));
    affine.record(rd.pairing(rd.simple_root(i), rd.simple_coroot(i)) == 2, "diagonal " + std::to_string(i));
    for (std::size_t j = 0; j <= rd.rank(); ++j)
      if (i != j) affine.record(rd.pairing(rd.simple_root(j), rd.simple_coroot(i)) <= 0, "off-diagonal sign");
  }
  ctx.add({affine, highest});
}

void cmd_weyl_ball(Context& ctx) {
  const AffineWeylGroup& W = *ctx.group;
  json els = json::array();
  std::map<std::size_t, std::size_t> by_length;
  for (const auto& w : W.enumerate_ball(ctx.cfg.maxlen)) {
    els.push_back({{"word", W.reduced_word(w)}, {"length", W.length(w)}});
    ++by_length[W.length(w)];
  }
  json counts = json::array();
  for (const auto& [l, n] : by_length) counts.push_back({{"length", l}, {"count", n}});
  ctx.data["size"] = els.size();
  ctx.data["counts"] = counts;
  ctx.data["elements"] = els;
  ctx.add(combinatorial_checks(W, ctx.cfg.maxlen, std::min<std::size_t>(ctx.cfg.maxlen, 4)));
}

void cmd_weyl_len(Context& ctx) {
  const AffineWeylGroup& W = *ctx.group;
  const AffineWeylElt w = ctx.operand(ctx.cfg.lhs, "--lhs");
  ctx.data["word"] = W.reduced_word(w);
  ctx.data["length"] = W.length(w);
  ctx.add({single("inversion_count", W.inversion_set(w).size() == W.length(w), "|inversion_set| != length"),
           single("reduced_word_length", W.reduced_word(w).size() == W.length(w), "reduced word length")});
}

void cmd_weyl_bruhat(Context& ctx) {
  const AffineWeylGroup& W = *ctx.group;
  const AffineWeylElt v = ctx.operand(ctx.cfg.lhs, "--lhs"), w = ctx.operand(ctx.cfg.rhs, "--rhs");
  if (W.length(w) > 20) throw ResourceCapExceeded("subword oracle limited to length 20");
  const bool leq = W.bruhat_leq(v, w);
  ctx.data["lhs"] = W.reduced_word(v);
  ctx.data["rhs"] = W.reduced_word(w);
  ctx.data["leq"] = leq;
  const auto below = subword_products(W, w);
  ctx.add({single("bruhat_subword", leq == std::binary_search(below.begin(), below.end(), v),
                  "disagrees with the subword oracle")});
}

void cmd_weyl_inv(Context& ctx) {
  const AffineWeylGroup& W = *ctx.group;
  const AffineWeylElt w = ctx.operand(ctx.cfg.lhs, "--lhs");
  json inv = json::array(), rinv = json::array();
  const auto left = W.inversion_set(w);
  for (const auto& r : left) inv.push_back(root_json(r));
  for (const auto& r : W.right_inversion_set(w)) rinv.push_back(root_json(r));
  ctx.data["word"] = W.reduced_word(w);
  ctx.data["length"] = W.length(w);
  ctx.data["inversion_set"] = inv;
  ctx.data["right_inversion_set"] = rinv;
  CheckResult neg;
  neg.name = "inversions_are_sent_negative";
  const AffineWeylElt winv = W.inverse(w);
  for (const auto& r : left)
    neg.record(W.is_positive(r) && !W.is_positive(W.act_on_root(winv, r)), "root " + r.root.str());
  ctx.add({single("inversion_count", left.size() == W.length(w), "|inversion_set| != length"), neg});
}

void cmd_daha_mul(Context& ctx) {
  const Daha& H = *ctx.algebra;
  const DahaElt a = ctx.daha_operand(ctx.cfg.lhs, "--lhs"), b = ctx.daha_operand(ctx.cfg.rhs, "--rhs");
  const DahaElt ab = H.mul(a, b);
  ctx.data["product"] = io::to_json(H.group(), ab);
  ctx.data["pretty"] = H.pretty(ab);
  ctx.add({single("unit_law", H.mul(H.one(), ab) == ab && H.mul(ab, H.one()) == ab, "1 * ab or ab * 1 differs")});
}

void cmd_daha_verify(Context& ctx) {
  ctx.add(daha_relation_checks(*ctx.algebra), "normal_form.");
  FixedPointModel fp(ctx.algebra);
  ctx.add(fp_relation_checks(fp, ctx.window(), ctx.cfg.mode, ctx.rng), "window.");
}

void cmd_daha_y(Context& ctx) { ctx.add(y_checks(*ctx.algebra)); }

void cmd_fp_generators(Context& ctx) {
  FixedPointModel fp(ctx.algebra);
  const WindowPtr win = ctx.window();
  const RootDatum& rd = *ctx.datum;
  json gens = json::object();
  for (std::size_t i = 0; i <= rd.rank(); ++i) gens["T" + std::to_string(i)] = matrix_json(fp.rho_T(i, win));
  for (std::size_t i = 1; i <= rd.rank(); ++i) gens["X_omega" + std::to_string(i)] = matrix_json(fp.rho_X(rd.omega(i), win));
  ctx.data["window_size"] = win->size();
  ctx.data["inner_size"] = win->inner_size();
  ctx.data["generators"] = gens;
  ctx.add(fp_relation_checks(fp, win, ctx.cfg.mode, ctx.rng));
}

void cmd_fp_homomorphism(Context& ctx) {
  if (ctx.cfg.window_margin < 2 * ctx.cfg.maxlen)
    throw InsufficientMargin("check-homomorphism needs a window margin >= 2 * maxlen");
  FixedPointModel fp(ctx.algebra);
  ctx.add(fp_homomorphism_checks(fp, ctx.window(), ctx.cfg.samples, ctx.cfg.maxlen, ctx.cfg.mode, ctx.rng));
}

void cmd_fp_structure(Context& ctx) {
  FixedPointModel fp(ctx.algebra);
  const AffineWeylGroup& W = *ctx.group;
  json table = json::array();
  const auto ball = W.enumerate_ball(ctx.cfg.maxlen);
  for (const auto& v : ball)
    for (const auto& w : ball) {
      const AffineWeylElt vw = W.multiply(v, w);
      if (W.length(vw) != W.length(v) + W.length(w)) continue;
      const bool one = exact_equal(fp.structure_constant_g(v, w) * fp.structure_constant_g(W.identity(), v),
                                   fp.structure_constant_g(W.identity(), vw));
      table.push_back({{"v", W.reduced_word(v)}, {"w", W.reduced_word(w)}, {"a_vw_is_one", one}});
    }
  ctx.data["table"] = table;
  ctx.add(structure_constant_checks(fp, ctx.cfg.maxlen));
}

void cmd_repo_weights(Context& ctx) {
  const std::size_t rank = ctx.datum->rank();
  TorusChar<Rational> h = ctx.cfg.character ? io::character_from_json(parse_json(*ctx.cfg.character, "--character"), rank)
                                            : generic_character(rank, parse_rational(ctx.cfg.tau, "--tau"),
                                                                parse_rational(ctx.cfg.zeta, "--zeta"));
  if (ctx.cfg.bound < 1) throw ConfigError("--bound must be >= 1");
  const RegularityCertificate cert = is_regular_pair(h.tau, h.zeta, ctx.cfg.bound);
  InducedTrunc<Rational> M(ctx.algebra, BruhatIdeal::ball(ctx.group, ctx.cfg.maxlen), h);
  const AffineWeylGroup& W = *ctx.group;

  json table = json::array();
  std::map<std::string, std::size_t> dim_of;
  for (const auto& v : M.ideal().elements()) {
    const auto wv = M.weight_of_basis(v);
    const std::string key = io::to_json(wv).dump();
    if (!dim_of.count(key)) dim_of[key] = M.generalized_weight_space(wv).size();
    table.push_back({{"v", W.reduced_word(v)}, {"weight", io::to_json(wv)}, {"weight_space_dim", dim_of[key]}});
  }
  ctx.data["character"] = io::to_json(h);
  ctx.data["ideal_size"] = M.ideal().size();
  ctx.data["weights"] = table;
  json c = {{"regular", cert.regular}, {"bound", cert.bound}, {"reason", cert.reason}};
  if (cert.witness) c["witness"] = {cert.witness->first, cert.witness->second};
  ctx.data["regularity"] = c;
  ctx.add(module_checks(M, !ctx.cfg.character && cert.regular));
}

void cmd_repo_regular(Context& ctx) {
  const Rational tau = parse_rational(ctx.cfg.tau, "--tau"), zeta = parse_rational(ctx.cfg.zeta, "--zeta");
  if (ctx.cfg.bound < 1) throw ConfigError("--bound must be >= 1");
  const RegularityCertificate cert = is_regular_pair(tau, zeta, ctx.cfg.bound);
  json c = {{"regular", cert.regular}, {"bound", cert.bound}, {"reason", cert.reason}};
  if (cert.witness) c["witness"] = {cert.witness->first, cert.witness->second};
  ctx.data["regularity"] = c;
  bool ok = true;
  if (cert.witness) {
    const auto [k, m] = *cert.witness;
    ok = field_pow(tau, k) == field_pow(zeta, m);
  }
  ctx.add({single("witness_valid", ok && cert.regular != cert.witness.has_value(), "witness relation does not hold")});
}

const std::map<std::string, std::function<void(Context&)>>& table() {
  static const std::map<std::string, std::function<void(Context&)>> t = {
      {"roots", cmd_roots},
      {"weyl ball", cmd_weyl_ball},
      {"weyl len", cmd_weyl_len},
      {"weyl bruhat", cmd_weyl_bruhat},
      {"weyl inv", cmd_weyl_inv},
      {"daha mul", cmd_daha_mul},
      {"daha verify-relations", cmd_daha_verify},
      {"daha y-check", cmd_daha_y},
      {"fp generators", cmd_fp_generators},
      {"fp check-homomorphism", cmd_fp_homomorphism},
      {"fp structure-constants", cmd_fp_structure},
      {"repo weights", cmd_repo_weights},
      {"repo regular", cmd_repo_regular},
  };
  return t;
}

}  // namespace

EqualityMode parse_mode(const std::string& s) {
  if (s == "exact") return EqualityMode::exact();
  if (s.rfind("modp:", 0) == 0) {
    const std::string rest = s.substr(5);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ConfigError("mode must be exact or modp:p:k");
    const std::uint64_t p = parse_uint(rest.substr(0, colon), "modp prime");
    const std::uint64_t k = parse_uint(rest.substr(colon + 1), "modp samples");
    if (k > 1000) throw ConfigError("modp samples must be <= 1000");
    return EqualityMode::modp(p, static_cast<int>(k));
  }
  throw ConfigError("mode must be exact or modp:p:k, got '" + s + "'");
}

std::pair<std::size_t, std::size_t> parse_window(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw ConfigError("window must be L0/m, got '" + s + "'");
  return {parse_uint(s.substr(0, slash), "window L0"), parse_uint(s.substr(slash + 1), "window margin")};
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : table()) out.push_back(k);
    return out;
  }();
  return names;
}

namespace {

Outcome empty_report(const std::string& command, const RunConfig& config) {
  Outcome out;
  out.report["schema_version"] = kSchemaVersion;
  out.report["command"] = command;
  out.report["config"] = config_json(config);
  out.report["checks"] = json::array();
  return out;
}

}  // namespace

Outcome invalid_config(const std::string& command, const RunConfig& config, const std::string& message) {
  Outcome out = empty_report(command, config);
  out.exit_code = kInvalidConfig;
  out.report["error"] = {{"kind", "invalid_config"}, {"message", message}};
  return out;
}

Outcome run(const std::string& command, const RunConfig& config) {
  Outcome out = empty_report(command, config);
  json& r = out.report;
  auto fail = [&](int code, const char* kind, const std::string& msg) {
    out.exit_code = code;
    r["error"] = {{"kind", kind}, {"message", msg}};
  };
  try {
    const auto it = table().find(command);
    if (it == table().end()) throw ConfigError("unknown command '" + command + "'");
    Context ctx(config);
    r["simply_laced"] = ctx.datum->simply_laced();
    if (!ctx.datum->simply_laced())
      r["warnings"] = json::array({"non-simply-laced root datum: computed with the normalization (theta, theta) = 2"});
    it->second(ctx);
    std::stable_sort(ctx.checks.begin(), ctx.checks.end(),
                     [](const json& a, const json& b) { return a["name"].get<std::string>() < b["name"].get<std::string>(); });
    std::size_t failed = 0;
    for (const auto& c : ctx.checks) failed += c["status"] == "FAIL";
    r["checks"] = ctx.checks;
    r["data"] = ctx.data;
    r["summary"] = {{"passed", ctx.checks.size() - failed}, {"failed", failed}};
    out.exit_code = failed ? kCheckFailure : kPass;
  } catch (const ResourceCapExceeded& e) {
    fail(kResourceCap, "resource_cap", e.what());
  } catch (const InsufficientMargin& e) {
    fail(kInvalidConfig, "insufficient_margin", e.what());
  } catch (const InvalidCartan& e) {
    fail(kInvalidConfig, "invalid_cartan", e.what());
  } catch (const io::ParseError& e) {
    fail(kInvalidConfig, "parse_error", e.what());
  } catch (const std::invalid_argument& e) {
    fail(kInvalidConfig, "invalid_config", e.what());
  } catch (const std::out_of_range& e) {
    fail(kInvalidConfig, "invalid_config", e.what());
  } catch (const json::exception& e) {
    fail(kInvalidConfig, "parse_error", e.what());
  } catch (const std::exception& e) {
    fail(kCheckFailure, "internal_error", e.what());
  }
  return out;
}

}  // namespace daha::cli
