// gendiv: exact divisor calculus on singular rational curves.
//
// Subcommands: info, eval, omega, paper-examples, prop, theta.
// Exit codes: 0 success, 1 validation error, 2 property violation,
// 3 parse error.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "gendiv/curvefile.hpp"
#include "gendiv/expr.hpp"
#include "gendiv/suites.hpp"

using namespace gendiv;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240817;

std::uint64_t env_seed() {
  if (const char* s = std::getenv("GENDIV_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw ValidationError("GENDIV_SEED must be an unsigned integer");
    }
  }
  return kDefaultSeed;
}

json generators_json(const FracModule& m) {
  json arr = json::array();
  for (const auto& g : m.minimal_generators()) arr.push_back(g.str());
  return arr;
}

std::string generators_text(const FracModule& m) {
  std::string out;
  for (const auto& g : m.minimal_generators()) {
    if (!out.empty()) out += ", ";
    out += g.str();
  }
  return out;
}

// ---------------------------------------------------------------- info ----

int cmd_info(const std::string& file, bool as_json) {
  Curve c = load_curve_file(file);
  KernelReport kernel = jacobian_kernel_report(c);
  Sheaf om = omega_sheaf(c);
  bool gor = is_gorenstein(c);

  if (as_json) {
    json j;
    j["genus"] = c.genus();
    j["conductor"] = c.conductor().str();
    j["gorenstein"] = gor;
    j["omega"] = {{"generators", generators_json(om.m1)},
                  {"inf_order", om.inf_order},
                  {"degree", degree(om)},
                  {"h0", h0(om)}};
    json cl = json::array();
    for (std::size_t i = 0; i < kernel.clusters.size(); ++i) {
      const auto& inv = kernel.clusters[i];
      cl.push_back({{"delta", inv.delta},
                    {"branches", inv.branches},
                    {"toric_rank", inv.toric_rank},
                    {"unipotent_dim", inv.unipotent_dim},
                    {"gorenstein", is_gorenstein_at(c, static_cast<long>(i))}});
    }
    j["clusters"] = cl;
    j["kernel"] = {{"dim", kernel.total_delta},
                   {"toric", kernel.total_toric},
                   {"unipotent", kernel.total_unipotent}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "genus:      " << c.genus() << "\n";
  std::cout << "conductor:  " << c.conductor().str() << "\n";
  std::cout << "gorenstein: " << (gor ? "yes" : "no") << "\n";
  std::cout << "omega:      <" << generators_text(om.m1) << ">, vanishing order "
            << om.inf_order << " at infinity, degree " << degree(om) << ", h0 " << h0(om)
            << "\n";
  for (std::size_t i = 0; i < kernel.clusters.size(); ++i) {
    const auto& inv = kernel.clusters[i];
    std::cout << "cluster " << i << ":  delta " << inv.delta << ", branches " << inv.branches
              << ", toric " << inv.toric_rank << ", unipotent " << inv.unipotent_dim
              << (is_gorenstein_at(c, static_cast<long>(i)) ? " (gorenstein)" : "") << "\n";
  }
  std::cout << "kernel of J0(X) -> J0(X~): dim " << kernel.total_delta << " = G_m^"
            << kernel.total_toric << " x G_a^" << kernel.total_unipotent << "\n";
  return 0;
}

// ---------------------------------------------------------------- eval ----

struct EvalResult {
  json record;
  bool violated = false;
};

template <class Div>
EvalResult run_query(const Curve& c, const Div& d, const std::string& query,
                     const std::string& expr2) {
  EvalResult out;
  out.record["query"] = query;
  if (query == "deg") {
    out.record["value"] = degree(d);
  } else if (query == "h0") {
    out.record["value"] = h0(dual_sheaf(d));
  } else if (query == "h1") {
    out.record["value"] = h1(dual_sheaf(d));
  } else if (query == "dim") {
    out.record["value"] = linear_system(d).dim;
  } else if (query == "linsys") {
    LinearSystem sys = linear_system(d);
    out.record["value"] = sys.dim;
    json basis = json::array();
    for (const auto& f : sys.basis) basis.push_back(f.str());
    out.record["witnesses"] = basis;
  } else if (query == "cartier") {
    out.record["value"] = is_cartier(d);
  } else if (query == "effective") {
    out.record["value"] = is_effective(d);
  } else if (query == "equiv") {
    if (expr2.empty()) throw ValidationError("equiv needs --expr2");
    auto other = eval_div_expr(c, parse_div_expr(expr2));
    if (!std::holds_alternative<Div>(other))
      throw ValidationError("equiv compares divisors of the same kind");
    auto w = lin_equiv(d, std::get<Div>(other));
    out.record["value"] = w.has_value();
    if (w) out.record["witnesses"] = json::array({w->str()});
  } else if (query == "rr") {
    RRReport rr = riemann_roch_check(d);
    out.record["value"] = rr.pass;
    out.record["lhs"] = rr.lhs;
    out.record["rhs"] = rr.rhs;
    out.record["dim"] = rr.dim_d;
    out.record["dim_adj"] = rr.dim_adj;
    out.record["deg"] = rr.deg;
    out.violated = !rr.pass;
  } else {
    throw ValidationError("unknown query '" + query +
                          "' (deg, h0, h1, dim, linsys, cartier, effective, equiv, rr)");
  }
  return out;
}

int cmd_eval(const std::string& file, const std::string& expr, const std::string& query,
             const std::string& expr2, bool as_json) {
  Curve c = load_curve_file(file);
  auto d = eval_div_expr(c, parse_div_expr(expr));
  EvalResult res = std::holds_alternative<GDivisor>(d)
                       ? run_query(c, std::get<GDivisor>(d), query, expr2)
                       : run_query(c, std::get<OmegaDivisor>(d), query, expr2);
  res.record["expr"] = expr;
  if (as_json) {
    std::cout << res.record.dump(2) << "\n";
  } else {
    std::cout << query << "(" << expr << ") = " << res.record["value"].dump() << "\n";
    if (res.record.contains("witnesses"))
      std::cout << "witnesses: " << res.record["witnesses"].dump() << "\n";
    if (query == "rr")
      std::cout << "dim|D| - dim|adj D| = " << res.record["lhs"].dump() << ", deg+1-g = "
                << res.record["rhs"].dump() << "\n";
  }
  return res.violated ? 2 : 0;
}

// --------------------------------------------------------------- omega ----

int cmd_omega(const std::string& file, bool dual, bool bidual, bool as_json) {
  Curve c = load_curve_file(file);
  OmegaBidualReport rep = omega_bidual_report(c);
  Sheaf om = omega_sheaf(c);
  json j;
  j["omega"] = {{"generators", generators_json(om.m1)}, {"inf_order", om.inf_order}};
  if (dual)
    j["dual"] = {{"generators", generators_json(rep.dual.m1)},
                 {"inf_order", rep.dual.inf_order}};
  if (bidual)
    j["bidual"] = {{"generators", generators_json(rep.bidual.m1)},
                   {"inf_order", rep.bidual.inf_order}};
  j["reflexive"] = rep.reflexive;
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "omega  = <" << generators_text(om.m1) << ">  (inf order " << om.inf_order
            << ")\n";
  if (dual)
    std::cout << "dual   = <" << generators_text(rep.dual.m1) << ">  (inf order "
              << rep.dual.inf_order << ")\n";
  if (bidual)
    std::cout << "bidual = <" << generators_text(rep.bidual.m1) << ">  (inf order "
              << rep.bidual.inf_order << ")\n";
  std::cout << "reflexive: " << (rep.reflexive ? "yes" : "no") << "\n";
  return 0;
}

// ------------------------------------------------------- paper-examples ----

struct GoldenRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::vector<GoldenRow> golden_rows() {
  std::vector<GoldenRow> rows;
  auto add = [&](const std::string& name, const std::string& expected, auto&& fn) {
    GoldenRow row;
    row.name = name;
    row.expected = expected;
    try {
      auto [computed, ok] = fn();
      row.computed = computed;
      row.pass = ok;
    } catch (const std::exception& e) {
      row.computed = std::string("exception: ") + e.what();
      row.pass = false;
    }
    rows.push_back(row);
  };
  auto tp = [](long e) { return RatFun::t_power(e); };

  Curve c345 = curve_from_semigroup({3, 4, 5});
  Curve cusp = curve_from_clusters({cusp_cluster(Rat(0))});
  Curve node = curve_from_clusters({node_cluster(Rat(1), Rat(-1))});
  Curve tac = curve_from_clusters({tacnode_cluster(Rat(1), Rat(-1))});
  Curve twonode =
      curve_from_clusters({node_cluster(Rat(1), Rat(-1)), node_cluster(Rat(2), Rat(-2))});
  Curve sg25 = curve_from_semigroup({2, 5});

  add("genus-345", "2", [&] {
    return std::pair(std::to_string(c345.genus()), c345.genus() == 2);
  });
  add("omega-generators-345", "<t^-3, t^-2>", [&] {
    Sheaf om = omega_sheaf(c345);
    bool ok = om.m1 == FracModule::from_generators(c345, {tp(-3), tp(-2)}) && om.inf_order == 2;
    return std::pair("<" + generators_text(om.m1) + ">", ok);
  });
  add("omega-dual-345", "<t^6, t^7, t^8>", [&] {
    OmegaBidualReport rep = omega_bidual_report(c345);
    bool ok = rep.dual.m1 == FracModule::from_generators(c345, {tp(6), tp(7), tp(8)}) &&
              rep.dual.inf_order == -2;
    return std::pair("<" + generators_text(rep.dual.m1) + ">", ok);
  });
  add("omega-bidual-345", "<t^-3, t^-2, t^-1>, not reflexive", [&] {
    OmegaBidualReport rep = omega_bidual_report(c345);
    bool ok = rep.bidual.m1 ==
                  FracModule::from_generators(c345, {tp(-3), tp(-2), tp(-1)}) &&
              rep.bidual.inf_order == 2 && !rep.reflexive;
    return std::pair("<" + generators_text(rep.bidual.m1) + ">" +
                         (rep.reflexive ? ", reflexive" : ", not reflexive"),
                     ok);
  });
  add("deg-p0", "1", [&] {
    long d = degree(point_divisor(c345, Point::singular(0)));
    return std::pair(std::to_string(d), d == 1);
  });
  add("deg-minus-p0", "-2", [&] {
    long d = degree(dminus(point_divisor(c345, Point::singular(0))));
    return std::pair(std::to_string(d), d == -2);
  });
  add("deg-L-p0", "2", [&] {
    long d = degree(dual_sheaf(point_divisor(c345, Point::singular(0))));
    return std::pair(std::to_string(d), d == 2);
  });
  add("colength-O-in-L-p0", "2", [&] {
    Sheaf l = dual_sheaf(point_divisor(c345, Point::singular(0)));
    long len = length_between(l.m1, FracModule::structure(c345));
    return std::pair(std::to_string(len), len == 2);
  });
  add("h0-L(p0+p1)", "2", [&] {
    GDivisor d = dsum(point_divisor(c345, Point::singular(0)),
                      point_divisor(c345, Point::infinity()));
    long h = h0(dual_sheaf(d));
    return std::pair(std::to_string(h), h == 2);
  });
  add("L(p0+p1)-is-pushforward-O(1)", "witness found", [&] {
    GDivisor d = dsum(point_divisor(c345, Point::singular(0)),
                      point_divisor(c345, Point::infinity()));
    auto w = is_isomorphic(dual_sheaf(d), pushforward_line_bundle(c345, 1));
    return std::pair(w ? "witness " + w->str() : "none", w.has_value());
  });
  add("member-(t4,t5,t6)", "ideal (t^4, t^5, t^6)", [&] {
    GDivisor d = dsum(point_divisor(c345, Point::singular(0)),
                      point_divisor(c345, Point::infinity()));
    LinearSystem sys = linear_system(d);
    if (sys.dim != 1) return std::pair(std::string("dim != 1"), false);
    Vec pick = Vec::Constant(2, Rat(0));
    pick(0) = Rat(1);  // the section t
    GDivisor d0 = member(d, pick);
    bool ok = d0.ideal.m1 == FracModule::from_generators(c345, {tp(4), tp(5), tp(6)}) &&
              d0.ideal.inf_order == 0 &&
              dsum(d, principal_divisor(c345, RatFun(Poly::t()))) == d0;
    return std::pair("ideal <" + generators_text(d0.ideal.m1) + ">", ok);
  });
  add("p0+p-equiv-p0+q", "witnesses found", [&] {
    GDivisor base = dsum(point_divisor(c345, Point::singular(0)),
                         point_divisor(c345, Point::smooth(Rat(2))));
    for (long q : {3, 4, 5}) {
      GDivisor other = dsum(point_divisor(c345, Point::singular(0)),
                            point_divisor(c345, Point::smooth(Rat(q))));
      auto w = lin_equiv(base, other);
      if (!w) return std::pair(std::string("missing witness"), false);
      if (!(dsum(other, principal_divisor(c345, *w)) == base))
        return std::pair(std::string("bad witness"), false);
    }
    return std::pair(std::string("witnesses found"), true);
  });
  add("dim-Kw-345", "1", [&] {
    long d = linear_system(canonical_omega_divisor(c345)).dim;
    return std::pair(std::to_string(d), d == 1);
  });
  add("omega-fiber-at-p0", "2", [&] {
    long d = fiber_dim(omega_sheaf(c345).m1, 0);
    return std::pair(std::to_string(d), d == 2);
  });
  add("dim|p0+p1+p2|", "2", [&] {
    GDivisor d = dsum(point_divisor(c345, Point::singular(0)),
                      dsum(point_divisor(c345, Point::smooth(Rat(2))),
                           point_divisor(c345, Point::smooth(Rat(3)))));
    long dim = linear_system(d).dim;
    return std::pair(std::to_string(dim), dim == 2);
  });
  auto kernel_row = [&](const std::string& name, const Curve& c, ClusterInvariants want) {
    add(name,
        "(" + std::to_string(want.delta) + "," + std::to_string(want.branches) + "," +
            std::to_string(want.toric_rank) + "," + std::to_string(want.unipotent_dim) + ")",
        [&, want] {
          ClusterInvariants inv = singularity_invariants(c, 0);
          std::string got = "(" + std::to_string(inv.delta) + "," +
                            std::to_string(inv.branches) + "," + std::to_string(inv.toric_rank) +
                            "," + std::to_string(inv.unipotent_dim) + ")";
          bool ok = inv.delta == want.delta && inv.branches == want.branches &&
                    inv.toric_rank == want.toric_rank &&
                    inv.unipotent_dim == want.unipotent_dim;
          return std::pair(got, ok);
        });
  };
  kernel_row("kernel-node", node, ClusterInvariants{1, 2, 1, 0});
  kernel_row("kernel-cusp", cusp, ClusterInvariants{1, 1, 0, 1});
  kernel_row("kernel-tacnode", tac, ClusterInvariants{2, 2, 1, 1});
  add("theta-genus1-O", "1", [&] {
    long m = theta_multiplicity(node, make_sheaf_class(structure_sheaf(node)));
    return std::pair(std::to_string(m), m == 1);
  });
  add("theta-formula-n1-h2", "4", [&] {
    long m = theta_multiplicity_formula(1, 2);
    return std::pair(std::to_string(m), m == 4);
  });
  add("theta-two-node-pushforward", "4", [&] {
    SheafClass cls = make_sheaf_class(pushforward_line_bundle(twonode, 0));
    bool shape = cls.h0 == 1 && cls.non_free_clusters.size() == 2;
    long m = theta_multiplicity_formula(static_cast<long>(cls.non_free_clusters.size()), cls.h0);
    return std::pair(std::to_string(m), shape && m == 4);
  });
  add("gorenstein-flags", "345: no; node, cusp, tacnode, [2,5]: yes", [&] {
    bool ok = !is_gorenstein(c345) && is_gorenstein(node) && is_gorenstein(cusp) &&
              is_gorenstein(tac) && is_gorenstein(sg25);
    return std::pair(ok ? std::string("as expected") : std::string("mismatch"), ok);
  });
  add("canonical-divisor-345-fails", "error naming the obstruction", [&] {
    try {
      canonical_divisor(c345);
      return std::pair(std::string("no error"), false);
    } catch (const ValidationError& e) {
      std::string msg = e.what();
      bool ok = msg.find("does not admit a canonical divisor") != std::string::npos;
      return std::pair(std::string("error raised"), ok);
    }
  });
  add("L(K)-equals-omega", "module equality on node, cusp, tacnode, [2,5]", [&] {
    for (const Curve& c : {node, cusp, tac, sg25}) {
      GDivisor k = canonical_divisor(c);
      if (!(dual_sheaf(k) == omega_sheaf(c))) return std::pair(std::string("mismatch"), false);
      if (degree(k) != 2 * c.genus() - 2) return std::pair(std::string("bad degree"), false);
    }
    return std::pair(std::string("as expected"), true);
  });
  add("cusp-omega", "t^-2 * O, degree 0", [&] {
    Sheaf om = omega_sheaf(cusp);
    bool ok = om.m1 == FracModule::principal(cusp, tp(-2)) && degree(om) == 0;
    return std::pair("<" + generators_text(om.m1) + ">, degree " +
                         std::to_string(degree(om)),
                     ok);
  });
  add("genus-2-classification", "single moving class", [&] {
    Degree2Report rep = classify_degree2_example(c345, env_seed(), 6);
    return std::pair("samples " + std::to_string(rep.samples) + ", movers " +
                         std::to_string(rep.movers),
                     rep.pass);
  });
  return rows;
}

int cmd_paper_examples(bool as_json) {
  auto rows = golden_rows();
  bool all = true;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"name", r.name},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"pass", r.pass}});
      all = all && r.pass;
    }
    std::cout << json({{"rows", arr}, {"pass", all}}).dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      all = all && r.pass;
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": expected " << r.expected
                << ", computed " << r.computed << "\n";
    }
    std::cout << (all ? "all rows pass" : "FAILURES present") << "\n";
  }
  return all ? 0 : 2;
}

// ---------------------------------------------------------------- prop ----

int cmd_prop(const std::string& suite, long trials, std::uint64_t seed, bool as_json) {
  SuiteReport rep = run_suite(suite, trials, seed);
  if (as_json) {
    json j;
    j["suite"] = rep.suite;
    j["checks"] = rep.checks;
    json v = json::array(), e = json::array();
    for (const auto& x : rep.violations) v.push_back({{"curve", x.curve}, {"what", x.what}});
    for (const auto& x : rep.expected_failures)
      e.push_back({{"curve", x.curve}, {"what", x.what}});
    j["violations"] = v;
    j["expected_failures"] = e;
    j["pass"] = rep.pass();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "suite " << rep.suite << ": " << rep.checks << " checks, "
              << rep.violations.size() << " violations, " << rep.expected_failures.size()
              << " expected failures\n";
    for (const auto& x : rep.violations)
      std::cout << "VIOLATION [" << x.curve << "] " << x.what << "\n";
    for (const auto& x : rep.expected_failures)
      std::cout << "expected  [" << x.curve << "] " << x.what << "\n";
  }
  return rep.pass() ? 0 : 2;
}

// --------------------------------------------------------------- theta ----

int cmd_theta(const std::string& file, const std::string& expr, bool as_json) {
  Curve c = load_curve_file(file);
  auto d = eval_div_expr(c, parse_div_expr(expr));
  Sheaf ideal = std::holds_alternative<GDivisor>(d) ? std::get<GDivisor>(d).ideal
                                                    : std::get<OmegaDivisor>(d).ideal;
  SheafClass cls = make_sheaf_class(ideal);
  long mult = theta_multiplicity(c, cls);
  if (as_json) {
    json j;
    j["expr"] = expr;
    j["degree"] = cls.degree;
    j["h0"] = cls.h0;
    j["non_free_clusters"] = cls.non_free_clusters;
    j["multiplicity"] = mult;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "class of I_(" << expr << "): degree " << cls.degree << ", h0 " << cls.h0
              << ", non-free at " << cls.non_free_clusters.size() << " node(s)\n";
    std::cout << "mult_Theta = " << mult << "\n";
  }
  return 0;
}

}  // namespace

// Expressions like "-S(0)" would otherwise be read as flags; move them
// behind a "--" separator so they stay positional.  Tokens that are values
// of an option expecting one are left alone.
std::vector<std::string> rescue_expression_args(int argc, char** argv) {
  std::vector<std::string> head, tail;
  bool after_value_option = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    bool looks_like_expr = !after_value_option && a.size() > 1 && a[0] == '-' &&
                           a.find('(') != std::string::npos;
    if (looks_like_expr) {
      tail.push_back(a);
    } else {
      head.push_back(a);
    }
    after_value_option = (a == "--query" || a == "--expr2" || a == "--trials" || a == "--seed");
  }
  if (!tail.empty()) {
    head.push_back("--");
    for (auto& t : tail) head.push_back(std::move(t));
  }
  return head;
}

int main(int argc, char** argv) {
  CLI::App app{"exact generalized-divisor calculus on singular rational curves"};
  app.require_subcommand(1);

  std::string file, expr, expr2, query = "deg", suite;
  bool as_json = false, dual = false, bidual = false;
  long trials = 100;
  std::uint64_t seed = 0;
  bool seed_set = false;

  auto* info = app.add_subcommand("info", "genus, singularity and kernel invariants");
  info->add_option("file", file)->required();
  info->add_flag("--json", as_json);

  auto* eval = app.add_subcommand("eval", "evaluate a divisor expression query");
  eval->add_option("file", file)->required();
  eval->add_option("expr", expr)->required();
  eval->add_option("--query", query, "deg|h0|h1|dim|linsys|cartier|effective|equiv|rr");
  eval->add_option("--expr2", expr2, "second expression for equiv");
  eval->add_flag("--json", as_json);

  auto* omega = app.add_subcommand("omega", "dualizing sheaf and its dual chain");
  omega->add_option("file", file)->required();
  omega->add_flag("--dual", dual);
  omega->add_flag("--bidual", bidual);
  omega->add_flag("--json", as_json);

  auto* paper = app.add_subcommand("paper-examples", "golden table of the worked examples");
  paper->add_flag("--json", as_json);

  auto* prop = app.add_subcommand("prop", "property suites");
  prop->add_option("suite", suite,
                   "monoid|reflexivity|riemann-roch|duality|general-position")
      ->required();
  prop->add_option("--trials", trials);
  prop->add_option("--seed", seed)->each([&](const std::string&) { seed_set = true; });
  prop->add_flag("--json", as_json);

  auto* theta = app.add_subcommand("theta", "theta multiplicity of a divisor class");
  theta->add_option("file", file)->required();
  theta->add_option("expr", expr)->required();
  theta->add_flag("--json", as_json);

  try {
    auto args = rescue_expression_args(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 parses back to front
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (info->parsed()) return cmd_info(file, as_json);
    if (eval->parsed()) return cmd_eval(file, expr, query, expr2, as_json);
    if (omega->parsed()) return cmd_omega(file, dual, bidual, as_json);
    if (paper->parsed()) return cmd_paper_examples(as_json);
    if (prop->parsed()) return cmd_prop(suite, trials, seed_set ? seed : env_seed(), as_json);
    if (theta->parsed()) return cmd_theta(file, expr, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
