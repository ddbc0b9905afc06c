#include "ktf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "ktf/json_io.hpp"
#include "ktf/oracle.hpp"
#include "ktf/realize.hpp"
#include "ktf/verify.hpp"

namespace ktf::cli {

namespace {

const char *const kTrivialGroup = R"({"free_rank":0,"torsion":[]})";

using nlohmann::json;
namespace kj = ktf::json;

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream &in;
  std::ostream &out;
  std::string format; // "" = command default
  std::string output_path;
};

json read_input(const std::string &arg, Context &ctx) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>());
  } else {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
      text = arg;
    } else {
      std::ifstream f(arg);
      if (!f)
        throw InputError("cannot open input file '" + arg + "'");
      text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError("malformed JSON in '" + (arg.size() > 60 ? arg.substr(0, 60) + "..." : arg) +
                     "': " + e.what());
  }
}

Integer max_enum() {
  const char *env = std::getenv("KTF_MAX_ENUM");
  if (env == nullptr || *env == '\0')
    return oracle::kDefaultMaxEnum;
  Integer v;
  if (v.set_str(env, 10) != 0 || v < 1)
    throw InputError(std::string("KTF_MAX_ENUM must be a positive integer, got '") + env + "'");
  return v;
}

void emit(Context &ctx, const json &j, const std::string &table) {
  const bool as_table = ctx.format == "table";
  std::string text = as_table ? table : j.dump(2) + "\n";
  if (ctx.output_path.empty()) {
    ctx.out << text;
  } else {
    std::ofstream f(ctx.output_path);
    if (!f)
      throw InputError("cannot write output file '" + ctx.output_path + "'");
    f << text;
  }
}

std::string report_table(const verify::SweepReport &rep) {
  std::ostringstream os;
  os << rep.title << '\n';
  for (const auto &c : rep.cases)
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  " << c.detail << '\n';
  os << (rep.all_pass() ? "all " : "") << rep.cases.size() - rep.failures() << "/"
     << rep.cases.size() << " passed\n";
  return os.str();
}

json report_json(const verify::SweepReport &rep) {
  json cases = json::array();
  for (const auto &c : rep.cases)
    cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"title", rep.title}, {"cases", cases}, {"all_pass", rep.all_pass()}};
}

std::string ext_line(const char *name, const ExtensionK &e) {
  std::ostringstream os;
  os << name << " = " << e.group.to_string() << "  [" << to_string(e.status) << "]  0 -> "
     << e.sub.to_string() << " -> " << name << " -> " << e.quot.to_string() << " -> 0\n";
  return os.str();
}

std::string sign_table(Sign s) { return to_string(s) + "\n"; }

} // namespace

int run(int argc, const char *const *argv, std::istream &in, std::ostream &out,
        std::ostream &err) {
  Context ctx{in, out, "", ""};
  CLI::App app{"Exact K-theory of crossed products and orbit-breaking subalgebras", "ktf"};
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("-o,--output", ctx.output_path, "Write output to a file instead of stdout");

  int exit_code = kOk;
  std::function<void()> action;

  // snf
  std::string snf_input;
  auto *snf_cmd = app.add_subcommand("snf", "Smith/Hermite normal forms, kernel, cokernel of a matrix");
  snf_cmd->add_option("matrix", snf_input, "Matrix JSON (file, '-' or inline)")->required();
  snf_cmd->callback([&] {
    action = [&] {
      const IntMatrix m = kj::matrix_from(read_input(snf_input, ctx));
      const SnfResult s = snf(m);
      const HnfResult h = hnf(m);
      json j = kj::to_json(s);
      j["rank"] = h.rank;
      j["hnf"] = {{"h", kj::to_json(h.h)}, {"u", kj::to_json(h.u)}};
      j["kernel_basis"] = kj::to_json(kernel_basis(m));
      j["cokernel"] = kj::to_json(cokernel(m));
      std::ostringstream t;
      t << "diagonal:";
      for (const auto &x : s.diagonal())
        t << ' ' << x.get_str();
      t << "\nrank: " << h.rank << "\ncokernel: " << cokernel(m).to_string() << '\n';
      emit(ctx, j, t.str());
    };
  });

  // group
  auto *group_cmd = app.add_subcommand("group", "Finitely generated abelian group operations");
  group_cmd->require_subcommand(1);
  std::string g_a, g_b;
  auto add_group_op = [&](const char *name, const char *help, int arity,
                          std::function<void()> body) {
    auto *c = group_cmd->add_subcommand(name, help);
    c->add_option("a", g_a, "First input JSON")->required();
    if (arity == 2)
      c->add_option("b", g_b, "Second input JSON")->required();
    c->callback([&action, body] { action = body; });
  };
  add_group_op("normalize", "Canonical form of a presentation", 1, [&] {
    const Normalized n = normalize(kj::presentation_from(read_input(g_a, ctx)));
    emit(ctx, {{"group", kj::to_json(n.group)}, {"iso", kj::to_json(n.iso.matrix)}},
         n.group.to_string() + "\n");
  });
  add_group_op("kernel", "Kernel of a homomorphism", 1, [&] {
    const FgAbGroup g = hom_kernel(kj::hom_from(read_input(g_a, ctx)));
    emit(ctx, kj::to_json(g), g.to_string() + "\n");
  });
  add_group_op("cokernel", "Cokernel of a homomorphism", 1, [&] {
    const FgAbGroup g = hom_cokernel(kj::hom_from(read_input(g_a, ctx)));
    emit(ctx, kj::to_json(g), g.to_string() + "\n");
  });
  add_group_op("well-defined", "Whether a homomorphism respects the relations", 1, [&] {
    const bool ok = is_well_defined(kj::hom_from(read_input(g_a, ctx)));
    emit(ctx, {{"well_defined", ok}}, ok ? "true\n" : "false\n");
  });
  add_group_op("order-stats", "Element-order counts of a finite group", 1, [&] {
    const auto stats = order_statistics(kj::group_from(read_input(g_a, ctx)), max_enum());
    json j = json::object();
    std::ostringstream t;
    for (const auto &[o, c] : stats) {
      j[o.get_str()] = c.get_str();
      t << o.get_str() << ": " << c.get_str() << '\n';
    }
    emit(ctx, j, t.str());
  });
  add_group_op("ext1", "Ext^1(a, b)", 2, [&] {
    const FgAbGroup g = ext1(kj::group_from(read_input(g_a, ctx), "a"),
                             kj::group_from(read_input(g_b, ctx), "b"));
    emit(ctx, kj::to_json(g), g.to_string() + "\n");
  });
  add_group_op("sum", "Direct sum a + b", 2, [&] {
    const FgAbGroup g = direct_sum(kj::group_from(read_input(g_a, ctx), "a"),
                                   kj::group_from(read_input(g_b, ctx), "b"));
    emit(ctx, kj::to_json(g), g.to_string() + "\n");
  });
  add_group_op("iso", "Whether a and b are isomorphic", 2, [&] {
    const bool ok = iso_check(kj::group_from(read_input(g_a, ctx), "a"),
                              kj::group_from(read_input(g_b, ctx), "b"));
    emit(ctx, {{"isomorphic", ok}}, ok ? "true\n" : "false\n");
  });

  // pv
  std::string pv_input;
  auto *pv_cmd = app.add_subcommand("pv", "Crossed-product K-theory of a space model");
  pv_cmd->add_option("model", pv_input, "Model JSON")->required();
  pv_cmd->callback([&] {
    action = [&] {
      const CrossedProductK r = pv_compute(kj::model_from(read_input(pv_input, ctx)));
      emit(ctx, kj::to_json(r), ext_line("K0", r.k0) + ext_line("K1", r.k1));
      if (!r.split())
        exit_code = kAmbiguousExtension;
    };
  });

  // realize
  std::size_t r_d = 0;
  std::string r_f0 = R"({"free_rank":0,"torsion":[]})", r_f1 = r_f0;
  auto *realize_cmd = app.add_subcommand("realize", "Model with K_0 = Z^d + F0, K_1 = Z^d + F1");
  realize_cmd->add_option("--d", r_d, "Free rank d >= 1")->required();
  realize_cmd->add_option("--f0", r_f0, "Finite group JSON for F0");
  realize_cmd->add_option("--f1", r_f1, "Finite group JSON for F1");
  realize_cmd->callback([&] {
    action = [&] {
      const SpaceKModel m = realize(r_d, kj::group_from(read_input(r_f0, ctx), "f0"),
                                    kj::group_from(read_input(r_f1, ctx), "f1"));
      const json j = kj::to_json(m);
      emit(ctx, j, j.dump(2) + "\n");
    };
  });

  // orbit-break
  std::string ob_regime, ob_ambient, ob_g0, ob_g1, ob_t, ob_unit;
  std::size_t ob_traces = 1;
  auto *ob_cmd = app.add_subcommand("orbit-break", "K-theory of an orbit-breaking subalgebra");
  ob_cmd->add_option("--regime", ob_regime, "point | pointlike | rr0")
      ->required()
      ->check(CLI::IsMember({"point", "pointlike", "rr0"}));
  auto *opt_ambient = ob_cmd->add_option("--ambient", ob_ambient, "Crossed-product K-theory JSON (point)");
  auto *opt_unit = ob_cmd->add_option("--unit", ob_unit, "Ambient unit class (point)");
  auto *opt_g0 = ob_cmd->add_option("--g0", ob_g0, "Group JSON (pointlike) or dimension group JSON (rr0)");
  auto *opt_g1 = ob_cmd->add_option("--g1", ob_g1, "Group JSON for K^1(Y)");
  auto *opt_t = ob_cmd->add_option("--t", ob_t, "Group JSON for the torsion summand T (rr0)");
  ob_cmd->add_option("--traces", ob_traces, "Extreme points of the trace simplex");
  ob_cmd->callback([&] {
    action = [&] {
      auto forbid = [&](CLI::Option *o) {
        if (o->count() > 0)
          throw InputError("option " + o->get_name() + " is not used by regime " + ob_regime);
      };
      auto need = [&](CLI::Option *o) {
        if (o->count() == 0)
          throw InputError("regime " + ob_regime + " needs " + o->get_name());
      };
      OrbitBreakK r;
      if (ob_regime == "point") {
        need(opt_ambient);
        forbid(opt_g0);
        forbid(opt_g1);
        forbid(opt_t);
        std::optional<IntVector> unit;
        if (opt_unit->count() > 0)
          unit = kj::vector_from(read_input(ob_unit, ctx), "unit");
        r = solve_point(kj::crossed_product_from(read_input(ob_ambient, ctx), "ambient"),
                        ob_traces, unit);
      } else if (ob_regime == "pointlike") {
        forbid(opt_ambient);
        forbid(opt_unit);
        forbid(opt_t);
        if (opt_g0->count() == 0)
          ob_g0 = kTrivialGroup;
        if (opt_g1->count() == 0)
          ob_g1 = kTrivialGroup;
        r = solve_pointlike(kj::group_from(read_input(ob_g0, ctx), "g0"),
                            kj::group_from(read_input(ob_g1, ctx), "g1"), ob_traces);
      } else {
        forbid(opt_ambient);
        forbid(opt_unit);
        need(opt_g0);
        if (opt_g1->count() == 0)
          ob_g1 = kTrivialGroup;
        if (opt_t->count() == 0)
          ob_t = kTrivialGroup;
        r = solve_rr0(kj::group_from(read_input(ob_t, ctx), "t"),
                      kj::dimgroup_from(read_input(ob_g0, ctx), "g0"),
                      kj::group_from(read_input(ob_g1, ctx), "g1"), ob_traces);
      }
      std::ostringstream t;
      t << "K0 = " << r.k0.to_string() << "  cone " << to_string(r.cone.tag) << "\nK1 = "
        << r.k1.to_string() << '\n';
      for (const auto &d : r.derivation)
        t << "  - " << d << '\n';
      emit(ctx, kj::to_json(r), t.str());
    };
  });

  // dimgroup
  auto *dg_cmd = app.add_subcommand("dimgroup", "Stationary dimension group queries");
  dg_cmd->require_subcommand(1);
  std::string dg_input, dg_element;
  std::size_t dg_depth = 20;
  auto *dg_pos = dg_cmd->add_subcommand("positivity", "Order sign of an element");
  dg_pos->add_option("group", dg_input, "Dimension group JSON")->required();
  dg_pos->add_option("--element", dg_element, "Element JSON {level, vector} or vector")->required();
  dg_pos->add_option("--max-iter", dg_depth, "Iterations of the step matrix");
  dg_pos->callback([&] {
    action = [&] {
      const DimensionGroup g = kj::dimgroup_from(read_input(dg_input, ctx));
      const Sign s = positivity(g, kj::element_from(read_input(dg_element, ctx)), dg_depth);
      emit(ctx, {{"sign", to_string(s)}}, sign_table(s));
      if (s == Sign::Undetermined)
        exit_code = kUndeterminedPositivity;
    };
  });
  auto *dg_state = dg_cmd->add_subcommand("state", "Rational bracket of the normalized state");
  dg_state->add_option("group", dg_input, "Dimension group JSON")->required();
  dg_state->add_option("--element", dg_element, "Element JSON {level, vector} or vector")->required();
  dg_state->add_option("--depth", dg_depth, "Iterations of the step matrix");
  dg_state->callback([&] {
    action = [&] {
      const DimensionGroup g = kj::dimgroup_from(read_input(dg_input, ctx));
      const RationalInterval r =
          state_value(g, kj::element_from(read_input(dg_element, ctx)), dg_depth);
      emit(ctx, kj::to_json(r),
           "[" + kj::rational_string(r.lo) + ", " + kj::rational_string(r.hi) + "]\n");
    };
  });
  auto *dg_under = dg_cmd->add_subcommand("underlying", "Underlying abelian group of the limit");
  dg_under->add_option("group", dg_input, "Dimension group JSON")->required();
  dg_under->callback([&] {
    action = [&] {
      const UnderlyingGroup u = underlying(kj::dimgroup_from(read_input(dg_input, ctx)));
      json j = {{"finitely_generated", u.finitely_generated}, {"det", u.det.get_str()}};
      if (u.finitely_generated)
        j["group"] = kj::to_json(u.group);
      emit(ctx, j,
           u.finitely_generated ? u.group.to_string() + "\n"
                                : "not finitely generated (det " + u.det.get_str() + ")\n");
    };
  });

  // elliott
  auto *el_cmd = app.add_subcommand("elliott", "Elliott invariant construction and comparison");
  el_cmd->require_subcommand(1);
  std::string el_a, el_b, el_element;
  std::string el_g0 = kTrivialGroup, el_g1 = el_g0, el_k = "1";
  std::size_t el_traces = 1;
  auto *el_cmp = el_cmd->add_subcommand("compare", "Exit 0 iff the invariants are equal");
  el_cmp->add_option("a", el_a, "Invariant JSON")->required();
  el_cmp->add_option("b", el_b, "Invariant JSON")->required();
  el_cmp->callback([&] {
    action = [&] {
      const bool eq = invariant_equal(kj::elliott_from(read_input(el_a, ctx), "a"),
                                      kj::elliott_from(read_input(el_b, ctx), "b"));
      emit(ctx, {{"equal", eq}}, eq ? "equal\n" : "different\n");
      if (!eq)
        exit_code = kNegativeResult;
    };
  });
  auto *el_build = el_cmd->add_subcommand("build", "Invariant (Z + G0, SimpleCone, (k,0), G1, traces, n/k)");
  el_build->add_option("--g0", el_g0, "Group JSON");
  el_build->add_option("--g1", el_g1, "Group JSON");
  el_build->add_option("--k", el_k, "Unit multiplicity k >= 1");
  el_build->add_option("--traces", el_traces, "Extreme points of the trace simplex");
  el_build->callback([&] {
    action = [&] {
      const ElliottData e = build_pointlike_invariant(
          kj::group_from(read_input(el_g0, ctx), "g0"),
          kj::group_from(read_input(el_g1, ctx), "g1"), kj::integer_from(el_k, "k"),
          el_traces);
      const json j = kj::to_json(e);
      emit(ctx, j, j.dump(2) + "\n");
    };
  });
  auto *el_pair = el_cmd->add_subcommand("pair", "Value of the pairing on an element");
  el_pair->add_option("invariant", el_a, "Invariant JSON")->required();
  el_pair->add_option("--element", el_element, "Element as an integer array")->required();
  el_pair->callback([&] {
    action = [&] {
      const ElliottData e = kj::elliott_from(read_input(el_a, ctx));
      const mpq_class v = pairing_eval(e, kj::vector_from(read_input(el_element, ctx), "element"));
      emit(ctx, {{"value", kj::rational_string(v)}}, kj::rational_string(v) + "\n");
    };
  });
  auto *el_proj = el_cmd->add_subcommand("projectionless", "Whether only 0 and 1 are projections");
  el_proj->add_option("invariant", el_a, "Invariant JSON")->required();
  el_proj->callback([&] {
    action = [&] {
      const bool p = projectionless_check(kj::elliott_from(read_input(el_a, ctx)));
      emit(ctx, {{"projectionless", p}}, p ? "true\n" : "false\n");
    };
  });

  // verify
  auto *v_cmd = app.add_subcommand("verify", "Run verification sweeps");
  v_cmd->require_subcommand(1);
  std::size_t v_max_n = 64, v_count = 100, v_max_d = 3;
  std::uint64_t v_seed = 1;
  auto run_sweep = [&](std::function<verify::SweepReport()> sweep) {
    return [&, sweep] {
      const verify::SweepReport rep = sweep();
      if (ctx.format.empty())
        ctx.format = "table";
      emit(ctx, report_json(rep), report_table(rep));
      if (!rep.all_pass())
        exit_code = kNegativeResult;
    };
  };
  auto *v_comp = v_cmd->add_subcommand("companion", "Companion-block sweep");
  v_comp->add_option("--max-n", v_max_n, "Largest n");
  v_comp->callback([&] { action = run_sweep([&] { return verify::companion_sweep(v_max_n); }); });
  auto *v_snf = v_cmd->add_subcommand("snf", "Random SNF certificate sweep");
  v_snf->add_option("--count", v_count, "Number of matrices");
  v_snf->add_option("--seed", v_seed, "RNG seed");
  v_snf->callback([&] {
    action = run_sweep([&] { return verify::snf_certificate_sweep(v_count, v_seed); });
  });
  auto *v_or = v_cmd->add_subcommand("oracle", "SNF cokernel vs enumeration oracle");
  v_or->add_option("--count", v_count, "Number of matrices");
  v_or->add_option("--seed", v_seed, "RNG seed");
  v_or->callback([&] {
    action = run_sweep([&] {
      const Integer bound = max_enum();
      const long max_det = bound.fits_slong_p() ? std::min(512L, bound.get_si()) : 512L;
      return verify::oracle_sweep(v_count, v_seed, max_det);
    });
  });
  auto *v_rt = v_cmd->add_subcommand("roundtrip", "Realization round trip over the catalog");
  v_rt->add_option("--max-d", v_max_d, "Largest free rank d");
  v_rt->callback([&] { action = run_sweep([&] { return verify::realize_roundtrip_sweep(v_max_d); }); });
  auto *v_du = v_cmd->add_subcommand("duality", "Rank duality on random models");
  v_du->add_option("--count", v_count, "Number of models");
  v_du->add_option("--seed", v_seed, "RNG seed");
  v_du->callback([&] {
    action = run_sweep([&] { return verify::rank_duality_sweep(v_count, v_seed); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (action)
      action();
    return exit_code;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

} // namespace ktf::cli
