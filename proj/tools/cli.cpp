#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <memory>

#include "CLI11.hpp"
#include "gdet/acceptance.hpp"
#include "gdet/errors.hpp"
#include "gdet/extend.hpp"
#include "gdet/hardy.hpp"
#include "gdet/json_io.hpp"
#include "gdet/variety.hpp"

namespace gdet::cli {

using gdet::json::json;
namespace js = gdet::json;

double RunConfig::tol(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

int RunConfig::grid(const std::string& name, int fallback) const {
  const auto it = grids.find(name);
  return it == grids.end() ? fallback : it->second;
}

void RunConfig::validate() const {
  for (const auto& [k, v] : tolerances) {
    if (!(v > 0.0)) throw PreconditionError("tolerance '" + k + "' must be positive");
  }
  for (const auto& [k, v] : grids) {
    if (v < 1) throw PreconditionError("grid '" + k + "' must be a positive integer");
  }
}

const std::vector<OpRoute>& op_routes() {
  static const std::vector<OpRoute> routes = {
      {"bipoly", "poly_arith", "extend"},
      {"bipoly", "poly_eval", "extend"},
      {"bipoly", "bidegree", "distinguished"},
      {"bipoly", "reflect", "distinguished"},
      {"bipoly", "compose_pi", "distinguished"},
      {"bipoly", "decompose_symmetric", "extend"},
      {"bipoly", "slice_roots", "distinguished"},
      {"geometry", "pi_map", "classify"},
      {"geometry", "fiber", "classify"},
      {"geometry", "classify_point", "classify"},
      {"geometry", "mobius_eval", "determining-set"},
      {"geometry", "disk_point", "determining-set"},
      {"geometry", "disk_intersection_params", "determining-set"},
      {"geometry", "find_epsilon", "determining-set"},
      {"variety", "is_distinguished", "distinguished"},
      {"variety", "self_reflection_constant", "distinguished"},
      {"variety", "variety_samples", "distinguished"},
      {"variety", "has_boundary_singularity", "distinguished"},
      {"variety", "is_regular", "regular"},
      {"inner", "make_inner", "eps-family"},
      {"inner", "eval_inner", "eps-family"},
      {"inner", "verify_inner", "eps-family"},
      {"inner", "choose_epsilon", "eps-family"},
      {"inner", "make_eps_family", "eps-family"},
      {"inner", "eval_eps", "eps-family"},
      {"pick", "pick_matrix", "pick-test"},
      {"pick", "singularity_test", "pick-test"},
      {"pick", "propagate_value", "propagate"},
      {"pick", "uniqueness_region_member", "propagate"},
      {"pick", "determining_set", "determining-set"},
      {"pick", "check_agreement", "determining-set"},
      {"hardy", "hinner_poly", "hardy-ip"},
      {"hardy", "hinner_quadrature", "hardy-ip"},
      {"hardy", "main4_condition", "main4"},
      {"extend", "symmetrize_rational", "extend"},
      {"extend", "extend_polynomial", "extend"},
      {"extend", "estimate_alpha", "extend"},
      {"cli", "acceptance", "selfcheck"},
  };
  return routes;
}

const std::vector<std::string_view>& subcommands() {
  static const std::vector<std::string_view> names = {
      "classify", "determining-set", "pick-test", "propagate", "eps-family", "hardy-ip",
      "main4",    "distinguished",   "regular",   "extend",    "selfcheck"};
  return names;
}

namespace {

struct Ctx {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;

  // Accepts inline JSON text or a path; bare paths fall back to the fixture directory.
  json load(const std::string& arg, const std::string& what) const {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
      try {
        return json::parse(arg);
      } catch (const json::parse_error& e) {
        throw PreconditionError("malformed JSON for " + what + ": " + e.what());
      }
    }
    namespace fs = std::filesystem;
    if (!fs::exists(arg) && !cfg.fixtures.empty() && fs::exists(fs::path(cfg.fixtures) / arg)) {
      return js::parse_file((fs::path(cfg.fixtures) / arg).string());
    }
    return js::parse_file(arg);
  }

  void emit(const json& j) const { out << js::dump(j, 2) << '\n'; }
};

json complex_list(const std::vector<cplx>& v) {
  json a = json::array();
  for (const cplx& c : v) a.push_back(js::from_complex(c));
  return a;
}

json point_list(const std::vector<PointG>& v) {
  json a = json::array();
  for (const PointG& p : v) a.push_back(js::from_point(p));
  return a;
}

json bidegree_json(const BiPoly& p) {
  const auto b = p.bidegree();
  if (!b) return nullptr;
  return json::array({b->d1, b->d2});
}

BiPoly sp_poly(const json& j, const std::string& field) {
  BiPoly p = js::to_poly(j, field);
  if (p.space() != Space::SP) throw SpaceMismatch(field + " must be an (s,p) polynomial");
  return p;
}

PointG read_point(const json& j, const std::string& field) {
  if (j.is_object() && j.contains("z")) {
    return pi_map(js::to_complex(j["z"], field + ".z"), js::to_complex(j.value("w", json()), field + ".w"));
  }
  return js::to_point(j, field);
}

int cmd_classify(const Ctx& c, const std::string& point) {
  const json in = c.load(point, "point");
  const PointG pt = read_point(in, "point");
  const PointClass cls = classify_point(pt, c.cfg.tol("boundary", kDefaultBoundaryTol));
  const auto [z, w] = fiber(pt);
  c.emit(json{{"class", std::string(to_string(cls))},
              {"point", js::from_point(pt)},
              {"fiber", json::array({js::from_complex(z), js::from_complex(w)})}});
  c.err << "classify: " << to_string(cls) << '\n';
  return 0;
}

int cmd_determining_set(const Ctx& c, const std::string& input, const std::string& f_arg,
                        const std::string& g_arg) {
  const json in = c.load(input, "input");
  if (!in.is_object() || !in.contains("N")) throw PreconditionError("malformed input at 'N': missing");
  if (!in["N"].is_number_integer()) throw PreconditionError("malformed input at 'N': expected an integer");
  const int n = in["N"].get<int>();
  auto list = [&](const char* key) {
    if (!in.contains(key) || !in[key].is_array()) {
      throw PreconditionError(std::string("malformed input at '") + key + "': expected an array");
    }
    std::vector<cplx> v;
    for (std::size_t i = 0; i < in[key].size(); ++i) {
      v.push_back(js::to_complex(in[key][i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return v;
  };
  const std::vector<cplx> lambdas = list("lambdas");
  const std::vector<cplx> betas = list("betas");
  const std::vector<PointG> pts = determining_set(n, lambdas, betas);
  json result{{"N", n}, {"count", pts.size()}, {"points", point_list(pts)}};

  if (!f_arg.empty() || !g_arg.empty()) {
    if (f_arg.empty() || g_arg.empty()) throw PreconditionError("--f and --g must be given together");
    const InnerFun f = js::to_inner(c.load(f_arg, "f"), "f");
    const InnerFun g = js::to_inner(c.load(g_arg, "g"), "g");
    const AgreementReport r = check_agreement([&](const PointG& x) { return f(x); },
                                              [&](const PointG& x) { return g(x); }, pts,
                                              c.cfg.tol("agreement", 1e-10));
    result["agreement"] = json{{"agree", r.agree}, {"max_gap", r.max_gap}, {"argmax", js::from_point(r.argmax)}};
  }

  if (in.contains("epsilon_center")) {
    const cplx center = js::to_complex(in["epsilon_center"], "epsilon_center");
    EpsilonGrid grid;
    grid.points = c.cfg.grid("epsilon", grid.points);
    const EpsilonCertificate cert = find_epsilon(betas, center, grid);
    // Re-derive one witness per beta through the public geometry operations.
    json samples = json::array();
    for (const cplx& beta : betas) {
      for (const CertifiedIntersection& w : cert.witnesses) {
        if (w.beta != beta) continue;
        const MobiusParam m(w.zeta, w.a);
        const std::vector<cplx> roots = disk_intersection_params(beta, m);
        const PointG on_family = disk_point_general(m, w.root);
        const PointG on_disk = disk_point(DiskSpec(beta), w.root);
        samples.push_back(json{{"beta", js::from_complex(beta)},
                               {"zeta", js::from_complex(w.zeta)},
                               {"a", js::from_complex(w.a)},
                               {"roots", complex_list(roots)},
                               {"mobius_at_root", js::from_complex(mobius_eval(m, w.root))},
                               {"point", js::from_point(on_disk)},
                               {"point_gap", std::abs(on_family.s - on_disk.s) + std::abs(on_family.p - on_disk.p)}});
        break;
      }
    }
    result["disk_family"] = json{{"epsilon", cert.epsilon}, {"witness_count", cert.witnesses.size()},
                                 {"witnesses", samples}};
  }
  c.emit(result);
  c.err << "determining-set: " << pts.size() << " points\n";
  return 0;
}

json pick_report(const PickProblem& p, double rel_tol) {
  const Eigen::MatrixXcd m = pick_matrix(p);
  const SingularityResult s = singularity_test(m, rel_tol);
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ri = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  json nv = nullptr;
  if (s.null_vector) {
    nv = json::array();
    for (Eigen::Index i = 0; i < s.null_vector->size(); ++i) nv.push_back(js::from_complex((*s.null_vector)(i)));
  }
  return json{{"kernel", p.kernel->name()}, {"matrix", re},         {"matrix_imag", im},
              {"singular", s.singular},     {"smin", s.smin},       {"smax", s.smax},
              {"rank", s.rank},             {"rel_tol", rel_tol},   {"singular_values", s.singular_values},
              {"null_vector", nv}};
}

int cmd_pick_test(const Ctx& c, const std::string& input) {
  const PickProblem p = js::to_pick_problem(c.load(input, "input"));
  const json r = pick_report(p, c.cfg.tol("singular", kSingularRelTol));
  c.emit(r);
  c.err << "pick-test: " << (r["singular"].get<bool>() ? "singular" : "non-singular")
        << ", smin " << r["smin"].get<double>() << '\n';
  return 0;
}

int cmd_propagate(const Ctx& c, const std::string& input, const std::string& target_arg) {
  const PickProblem p = js::to_pick_problem(c.load(input, "input"));
  const json tj = c.load(target_arg, "target");
  const Node target = p.kernel->dimension() == 1 ? Node::disk(js::to_complex(tj, "target"))
                                                 : Node::g(read_point(tj, "target"));
  if (!p.kernel->contains(target)) throw PreconditionError("target lies outside the domain");
  const SingularityResult s = singularity_test(pick_matrix(p), c.cfg.tol("singular", kSingularRelTol));
  if (!s.null_vector) throw CertificateError("Pick matrix is non-singular; no value is forced");
  const double tol = c.cfg.tol("propagate", 1e-10);
  const bool member = uniqueness_region_member(p, *s.null_vector, target, tol);
  const auto v = propagate_value(p, *s.null_vector, target, tol);
  c.emit(json{{"in_region", member},
              {"value", v ? js::from_complex(*v) : json(nullptr)},
              {"smin", s.smin}});
  c.err << "propagate: " << (v ? "value forced" : "target outside uniqueness region") << '\n';
  return 0;
}

int cmd_eps_family(const Ctx& c, const std::string& input, const std::string& at_arg) {
  const json in = c.load(input, "input");
  const json* fj = in.is_object() && in.contains("f") ? &in["f"] : nullptr;
  if (!fj) throw PreconditionError("malformed input at 'f': missing");
  const json& fo = *fj;
  if (!fo.is_object() || !fo.contains("m") || !fo.contains("eta")) {
    throw PreconditionError("malformed input at 'f': expected {m, eta}");
  }
  if (!fo["m"].is_number_integer()) throw PreconditionError("malformed input at 'f.m': expected an integer");
  const cplx phase = fo.contains("phase") ? js::to_complex(fo["phase"], "f.phase") : cplx(1.0);
  const InnerFun f = make_inner(fo["m"].get<int>(), sp_poly(fo["eta"], "f.eta"), phase);
  if (!in.contains("xi")) throw PreconditionError("malformed input at 'xi': missing");
  const VarietySpec v(sp_poly(in["xi"], "xi"));
  const int grid_n = c.cfg.grid("eps_family", 64);
  const EpsilonChoice choice = choose_epsilon(f, v, grid_n);
  double eps = choice.epsilon;
  if (in.contains("epsilon")) {
    if (!in["epsilon"].is_number()) throw PreconditionError("malformed input at 'epsilon': expected a number");
    eps = in["epsilon"].get<double>();
  }
  const EpsFamily g = make_eps_family(f, v, eps);
  const InnerReport inner = inner_scan(f, c.cfg.grid("inner", 64), c.cfg.tol("inner", 1e-8));
  json result{{"epsilon", g.epsilon()},
              {"epsilon_bound", g.epsilon_bound()},
              {"delta", choice.delta},
              {"numerator", js::from_poly(g.numerator())},
              {"denominator", js::from_poly(g.denominator())},
              {"f_inner", verify_inner(f, c.cfg.grid("inner", 64), c.cfg.tol("inner", 1e-8))},
              {"f_inner_deviation", inner.max_deviation}};
  if (!at_arg.empty()) {
    const PointG pt = read_point(c.load(at_arg, "at"), "at");
    result["at"] = js::from_point(pt);
    result["f_value"] = js::from_complex(eval_inner(f, pt));
    result["g_value"] = js::from_complex(eval_eps(g, pt));
  }
  c.emit(result);
  c.err << "eps-family: epsilon " << g.epsilon() << " (bound " << g.epsilon_bound() << ")\n";
  return 0;
}

// A polynomial or rational function in (s,p) coordinates.
RatFun read_sp_function(const json& j, const std::string& field) {
  RatFun r = j.is_object() && j.contains("num") ? js::to_ratfun(j, field) : RatFun(js::to_poly(j, field));
  if (r.space() != Space::SP) throw SpaceMismatch(field + " must be in (s,p) coordinates");
  return r;
}

int cmd_hardy_ip(const Ctx& c, const std::string& f_arg, const std::string& g_arg) {
  const RatFun f = read_sp_function(c.load(f_arg, "f"), "f");
  const RatFun g = read_sp_function(c.load(g_arg, "g"), "g");
  auto is_poly = [](const RatFun& r) {
    const auto b = r.den().bidegree();
    return b && b->d1 == 0 && b->d2 == 0;
  };
  json result;
  if (is_poly(f) && is_poly(g)) {
    const BiPoly fp = f.num() * (1.0 / f.den().coeff(0, 0));
    const BiPoly gp = g.num() * (1.0 / g.den().coeff(0, 0));
    result = json{{"inner_product", js::from_complex(hinner_poly(fp, gp))}, {"error_estimate", 0.0}, {"method", "coeff"}};
  } else {
    HardyConfig cfg;
    cfg.grid_n = c.cfg.grid("hardy", cfg.grid_n);
    cfg.validate();
    const auto fl = lift([f](const PointG& pt) { return f(pt.s, pt.p); });
    const auto gl = lift([g](const PointG& pt) { return g(pt.s, pt.p); });
    const QuadratureResult q = hinner_quadrature(fl, gl, cfg);
    result = json{{"inner_product", js::from_complex(q.value)}, {"error_estimate", q.error_estimate}, {"method", "quad"}};
  }
  c.emit(result);
  c.err << "hardy-ip: method " << result["method"].get<std::string>() << '\n';
  return 0;
}

int cmd_main4(const Ctx& c, const std::string& inner_arg, const std::string& variety_arg,
              const std::string& h_arg) {
  const InnerFun f = js::to_inner(c.load(inner_arg, "inner"), "inner");
  const VarietySpec v(sp_poly(c.load(variety_arg, "variety"), "variety"));
  const BiPoly h = sp_poly(c.load(h_arg, "h"), "h");
  HardyConfig cfg;
  cfg.grid_n = c.cfg.grid("hardy", cfg.grid_n);
  const Main4Result r = main4_condition(f, v, h, c.cfg.tol("main4", 1e-12), cfg);
  c.emit(json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"strict", r.strict}, {"method", r.method},
              {"error_estimate", r.error_estimate}});
  c.err << "main4: " << (r.strict ? "strict" : "not strict") << '\n';
  return 0;
}

int cmd_distinguished(const Ctx& c, const std::string& variety_arg, int samples,
                      const std::string& slice_arg) {
  const VarietySpec v(sp_poly(c.load(variety_arg, "variety"), "variety"));
  const double tol = c.cfg.tol("distinguished", kBoundaryModulusTol);
  const int grid_n = c.cfg.grid("distinguished", 64);
  const DistinguishedReport r = is_distinguished(v, grid_n, tol);
  json result{{"distinguished", r.passes},
              {"meets_domain", r.meets_domain},
              {"bidegree", bidegree_json(v.xi())},
              {"xi_pi", js::from_poly(v.xi_pi())},
              {"xi_pi_reflection", js::from_poly(reflect(v.xi_pi()))}};
  if (r.witness) {
    result["witness"] = js::from_point(*r.witness);
    result["witness_class"] = std::string(to_string(classify_point(*r.witness, tol)));
  } else {
    result["witness"] = nullptr;
  }
  try {
    result["reflection_constant"] = js::from_complex(self_reflection_constant(v));
  } catch (const CertificateError&) {
    result["reflection_constant"] = nullptr;
  }
  result["boundary_singularity"] = has_boundary_singularity(v, grid_n);
  if (samples > 0) result["samples"] = point_list(variety_samples(v, samples, c.cfg.seed));
  if (!slice_arg.empty()) {
    const cplx z = js::to_complex(c.load(slice_arg, "slice"), "slice");
    result["slice"] = json{{"z", js::from_complex(z)},
                           {"w_roots", complex_list(slice_roots(v.xi_pi(), SliceVar::FirstFixed, z))}};
  }
  c.emit(result);
  c.err << "distinguished: " << (r.passes ? "passes" : "fails") << '\n';
  return 0;
}

int cmd_regular(const Ctx& c, const std::string& input) {
  const RatFun f = read_sp_function(c.load(input, "input"), "input");
  const double tol = c.cfg.tol("regularity", kRegularityMargin);
  const int grid_n = c.cfg.grid("regularity", 64);
  const RegularityReport r = regularity_scan(f, grid_n, tol);
  const bool regular = is_regular(f, grid_n, tol);
  c.emit(json{{"regular", regular}, {"min_den", r.min_den}, {"witness", js::from_point(r.witness)}});
  c.err << "regular: " << (regular ? "yes" : "no") << '\n';
  return 0;
}

int cmd_extend(const Ctx& c, const std::string& variety_arg, const std::string& poly_arg,
               const std::string& provider_arg, const std::string& at_arg) {
  const VarietySpec v(sp_poly(c.load(variety_arg, "variety"), "variety"));
  const BiPoly f = sp_poly(c.load(poly_arg, "poly"), "poly");
  std::unique_ptr<ExtensionProvider> provider;
  if (provider_arg == "trivial") {
    provider = std::make_unique<TrivialProvider>();
  } else if (provider_arg.rfind("file:", 0) == 0) {
    const json g = c.load(provider_arg.substr(5), "provider");
    RatFun gr = g.is_object() && g.contains("num") ? js::to_ratfun(g, "provider") : RatFun(js::to_poly(g, "provider"));
    provider = std::make_unique<FixedProvider>(std::move(gr), provider_arg.substr(5));
  } else {
    throw PreconditionError("malformed input at 'provider': expected trivial or file:<path>");
  }
  const ExtensionResult r = extend_polynomial(v, f, *provider, c.cfg.seed);
  const AlphaEstimate a = estimate_alpha(v, f, r.F, c.cfg.grid("alpha", 64));
  json result{{"F", js::from_ratfun(r.F)},
              {"alpha_hat", a.alpha_hat},
              {"sup_G", a.sup_G},
              {"sup_W", a.sup_W},
              {"hypothesis_ok", r.hypothesis_ok},
              {"provider_gap", r.provider_gap},
              {"agreement_gap", r.agreement_gap}};
  if (!at_arg.empty()) {
    const PointG pt = read_point(c.load(at_arg, "at"), "at");
    // F - f as a single rational expression, evaluated directly.
    const BiPoly diff_num = poly_arith(r.F.num(), poly_arith(f, r.F.den(), ArithOp::Mul), ArithOp::Sub);
    result["at"] = js::from_point(pt);
    result["F_value"] = js::from_complex(r.F(pt.s, pt.p));
    result["f_value"] = js::from_complex(f(pt.s, pt.p));
    result["difference"] = js::from_complex(diff_num(pt.s, pt.p) / r.F.den()(pt.s, pt.p));
  }
  c.emit(result);
  c.err << "extend: alpha_hat " << a.alpha_hat << '\n';
  return 0;
}

int cmd_selfcheck(const Ctx& c) {
  json rows = json::array();
  bool all = true;
  for (int id = 1; id <= acceptance::kCriterionCount; ++id) {
    const acceptance::Outcome o = acceptance::run_criterion(id, c.cfg.seed);
    c.err << acceptance::format(o) << '\n';
    all = all && o.pass;
    rows.push_back(json{{"criterion", o.id}, {"name", o.name}, {"pass", o.pass}});
  }
  c.emit(json{{"all_pass", all}, {"criteria", rows}});
  return all ? 0 : 3;
}

void load_config(const std::string& path, RunConfig& cfg) {
  const json j = js::parse_file(path);
  if (!j.is_object()) throw PreconditionError("malformed input at 'config': expected an object");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw PreconditionError("malformed input at 'config.seed': expected a nonnegative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("tolerances")) {
    if (!j["tolerances"].is_object()) throw PreconditionError("malformed input at 'config.tolerances': expected an object");
    for (auto it = j["tolerances"].begin(); it != j["tolerances"].end(); ++it) {
      if (!it->is_number()) throw PreconditionError("malformed input at 'config.tolerances." + it.key() + "': expected a number");
      cfg.tolerances[it.key()] = it->get<double>();
    }
  }
  if (j.contains("grids")) {
    if (!j["grids"].is_object()) throw PreconditionError("malformed input at 'config.grids': expected an object");
    for (auto it = j["grids"].begin(); it != j["grids"].end(); ++it) {
      if (!it->is_number_integer()) throw PreconditionError("malformed input at 'config.grids." + it.key() + "': expected an integer");
      cfg.grids[it.key()] = it->get<int>();
    }
  }
  if (j.contains("fixtures")) {
    if (!j["fixtures"].is_string()) throw PreconditionError("malformed input at 'config.fixtures': expected a string");
    cfg.fixtures = j["fixtures"].get<std::string>();
  }
}

std::pair<std::string, std::string> split_assignment(const std::string& s, const char* flag) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) {
    throw PreconditionError(std::string("malformed input at '") + flag + "': expected name=value, got '" + s + "'");
  }
  return {s.substr(0, eq), s.substr(eq + 1)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determining sets and related computations on the symmetrized bidisk", "gdet"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> tol_args;
  std::vector<std::string> grid_args;
  std::string fixtures;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--seed", seed, "random seed (default 0)");
  app.add_option("--tol", tol_args, "tolerance override name=value (repeatable)");
  app.add_option("--grid", grid_args, "grid size override name=int (repeatable)");
  app.add_option("--fixtures", fixtures, "directory searched for relative input paths");

  std::string point, input, f_arg, g_arg, target, at, inner_arg, variety, h_arg, poly, provider, slice;
  int samples = 0;

  auto* classify = app.add_subcommand("classify", "classify a point of C^2 relative to G");
  classify->add_option("point", point, "point JSON {s,p} or {z,w}, inline or file")->required();

  auto* dset = app.add_subcommand("determining-set", "build a determining set");
  dset->add_option("input", input, "{N, lambdas, betas[, epsilon_center]}")->required();
  dset->add_option("--f", f_arg, "inner function compared on the set");
  dset->add_option("--g", g_arg, "second inner function");

  auto* pick = app.add_subcommand("pick-test", "Pick matrix and singularity test");
  pick->add_option("input", input, "Pick problem JSON")->required();

  auto* prop = app.add_subcommand("propagate", "value forced at a target by singular Pick data");
  prop->add_option("input", input, "Pick problem JSON")->required();
  prop->add_option("--target", target, "target node (complex or point)")->required();

  auto* eps = app.add_subcommand("eps-family", "perturbed inner family agreeing with f on a variety");
  eps->add_option("input", input, "{f, xi[, epsilon]}")->required();
  eps->add_option("--at", at, "evaluation point");

  auto* hip = app.add_subcommand("hardy-ip", "H^2 inner product on G");
  hip->add_option("--f", f_arg, "polynomial or rational function in (s,p)")->required();
  hip->add_option("--g", g_arg, "polynomial or rational function in (s,p)")->required();

  auto* m4 = app.add_subcommand("main4", "orthogonality criterion 2 Re<f, xi h> < ||xi h||^2");
  m4->add_option("--inner", inner_arg, "inner function JSON")->required();
  m4->add_option("--variety", variety, "variety polynomial JSON")->required();
  m4->add_option("--multiplier", h_arg, "polynomial h multiplying xi")->required();

  auto* dist = app.add_subcommand("distinguished", "certify a distinguished variety");
  dist->add_option("variety", variety, "variety polynomial JSON")->required();
  dist->add_option("--samples", samples, "also emit this many interior variety points");
  dist->add_option("--slice", slice, "list the w-roots of xi o pi at this z");

  auto* reg = app.add_subcommand("regular", "regularity of a rational function on the closure of G");
  reg->add_option("input", input, "rational function JSON")->required();

  auto* ext = app.add_subcommand("extend", "extend a polynomial from a variety to G");
  ext->add_option("--variety", variety, "variety polynomial JSON")->required();
  ext->add_option("--poly", poly, "polynomial f in (s,p)")->required();
  ext->add_option("--provider", provider, "trivial or file:<G.json>")->default_val("trivial");
  ext->add_option("--at", at, "also evaluate F - f at this point");

  auto* self = app.add_subcommand("selfcheck", "run the acceptance criteria");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) load_config(config_path, cfg);
    if (seed) cfg.seed = *seed;
    if (!fixtures.empty()) cfg.fixtures = fixtures;
    for (const std::string& t : tol_args) {
      const auto [k, v] = split_assignment(t, "--tol");
      try {
        std::size_t used = 0;
        cfg.tolerances[k] = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
      } catch (const std::logic_error&) {
        throw PreconditionError("malformed input at '--tol " + k + "': not a number");
      }
    }
    for (const std::string& g : grid_args) {
      const auto [k, v] = split_assignment(g, "--grid");
      try {
        std::size_t used = 0;
        cfg.grids[k] = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
      } catch (const std::logic_error&) {
        throw PreconditionError("malformed input at '--grid " + k + "': not an integer");
      }
    }
    cfg.validate();
    const Ctx c{cfg, out, err};

    if (*classify) return cmd_classify(c, point);
    if (*dset) return cmd_determining_set(c, input, f_arg, g_arg);
    if (*pick) return cmd_pick_test(c, input);
    if (*prop) return cmd_propagate(c, input, target);
    if (*eps) return cmd_eps_family(c, input, at);
    if (*hip) return cmd_hardy_ip(c, f_arg, g_arg);
    if (*m4) return cmd_main4(c, inner_arg, variety, h_arg);
    if (*dist) return cmd_distinguished(c, variety, samples, slice);
    if (*reg) return cmd_regular(c, input);
    if (*ext) return cmd_extend(c, variety, poly, provider, at);
    if (*self) return cmd_selfcheck(c);
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return 2;
  } catch (const CertificateError& e) {
    err << "certificate failure: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace gdet::cli
