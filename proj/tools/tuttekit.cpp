// Command-line front end: tutte, char, coboundary, invariants, poset,
// multivariate and check on arrangement files; family catalog; arithmetic
// and toric computations on integer vector files.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "tuttekit/arithmetic.hpp"
#include "tuttekit/checks.hpp"
#include "tuttekit/error.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/finite_field.hpp"
#include "tuttekit/io.hpp"
#include "tuttekit/poset.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

namespace {

struct Options {
  std::string input;
  std::string method = "auto";
  std::string primes = "auto";
  std::string reduction;
  std::string format = "text";
  std::string dump_profiles;
  std::uint64_t budget = 0;
  unsigned threads = 1;

  std::string tag;
  std::string what = "tutte";
  std::string base;
  std::string graph;
  std::size_t n = 0, d = 0, m = 0;
  std::uint64_t p = 0;
  unsigned k = 1;

  std::string arith_what;
  std::uint64_t q = 0;
};

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text == "auto") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse, "bad prime list '" + text + "'");
    }
  }
  return out;
}

class Runner {
 public:
  explicit Runner(Options o) : opt_(std::move(o)), format_(output_format_from_name(opt_.format)) {
    if (opt_.method != "auto" && opt_.method != "subset" && opt_.method != "delcon" && opt_.method != "activity" &&
        opt_.method != "finite-field") {
      throw Error(ErrorCode::parse, "unknown method '" + opt_.method + "'");
    }
    if (!opt_.reduction.empty() && opt_.reduction != "bound" && opt_.reduction != "verified") {
      throw Error(ErrorCode::parse, "unknown reduction mode '" + opt_.reduction + "'");
    }
  }

  int run_arrangement_verb(const std::string& verb, const Arrangement& a, const std::string& source) {
    ResultContext ctx{verb, source, opt_.method, 0, a.size()};
    if (verb == "tutte") {
      const auto [t, r, method] = tutte(a);
      ctx.rank = r;
      ctx.method = method;
      emit(format_polynomial(t, format_, ctx));
    } else if (verb == "char") {
      const auto [chi, method] = characteristic(a);
      ctx.rank = rank(a);
      ctx.method = method;
      emit(format_polynomial(chi, format_, ctx));
    } else if (verb == "coboundary") {
      const auto [cob, r, method] = coboundary(a);
      ctx.rank = r;
      ctx.method = method;
      emit(format_polynomial(cob, format_, ctx));
    } else if (verb == "invariants") {
      return invariants(a, ctx);
    } else if (verb == "poset") {
      return poset(a, ctx);
    } else if (verb == "multivariate") {
      const MultivariateTutte mv = multivariate_tutte(a);
      ctx.rank = mv.rank;
      ctx.method = "subset";
      emit(format_polynomial(mv.poly, format_, ctx));
    } else if (verb == "check") {
      return report(check_arrangement(a, check_options()), ctx);
    } else if (verb == "arrangement") {
      emit(arrangement_to_json(a));
    } else {
      throw Error(ErrorCode::parse, "unknown request '" + verb + "'");
    }
    return 0;
  }

  int run_family() {
    const FamilySpec spec = family_spec();
    const std::string& what = opt_.what;
    if (what.rfind("oracle-", 0) == 0) {
      OracleResult o = what == "oracle-char"         ? oracle_char(spec)
                       : what == "oracle-coboundary" ? oracle_coboundary(spec)
                       : what == "oracle-tutte"      ? oracle_tutte(spec)
                                                     : throw Error(ErrorCode::parse, "unknown oracle '" + what + "'");
      ResultContext ctx{what, spec.describe(), o.provenance, family_rank(spec), 0};
      emit(format_polynomial(o.value, format_, ctx));
      return 0;
    }
    if (what == "check") {
      ResultContext ctx{what, spec.describe(), "all", family_rank(spec), 0};
      return report(check_family(spec, check_options()), ctx);
    }
    return run_arrangement_verb(what, build_family(spec), spec.describe());
  }

  int run_arith(const std::string& what) {
    if (opt_.input.empty()) throw Error(ErrorCode::parse, "arith needs --input");
    const VectorConfig c = read_vector_config(opt_.input);
    const std::size_t r = config_rank(c);
    ResultContext ctx{"arith " + what, opt_.input, "subset", r, c.size()};
    if (what == "tutte") {
      emit(format_polynomial(arithmetic_tutte(c), format_, ctx));
    } else if (what == "char") {
      emit(format_polynomial(arithmetic_char_poly(arithmetic_tutte(c), r, c.dim), format_, ctx));
    } else if (what == "zonotope") {
      const ZonotopeEvaluations z = zonotope_evaluations(arithmetic_tutte(c), r);
      emit(format_record({{"volume", to_string(z.volume)},
                          {"lattice_points", to_string(z.lattice_points)},
                          {"interior_points", to_string(z.interior_points)},
                          {"ehrhart", render(z.ehrhart)}},
                         format_, ctx));
    } else if (what == "toric") {
      if (opt_.q == 0) throw Error(ErrorCode::parse, "toric needs --q");
      const ToricProfile t = toric_point_profile(c, opt_.q, {opt_.budget, worker_count(opt_.threads)});
      std::string counts;
      for (std::size_t i = 0; i < t.counts.size(); ++i) counts += (i ? ", " : "") + std::to_string(t.counts[i]);
      const MultiPoly m = arithmetic_tutte(c);
      emit(format_record({{"q", std::to_string(t.q)},
                          {"counts", counts},
                          {"complement", std::to_string(t.counts[0])},
                          {"profile_polynomial", render(toric_profile_polynomial(m, r, c.dim))},
                          {"identity", t.checked ? "holds" : "not checked (q is not a multiple of every multiplicity)"}},
                         format_, ctx));
    } else {
      throw Error(ErrorCode::parse, "unknown arith request '" + what + "'");
    }
    return 0;
  }

  Arrangement input_arrangement() const {
    if (opt_.input.empty()) throw Error(ErrorCode::parse, "--input is required");
    return read_arrangement(opt_.input);
  }

  const Options& options() const { return opt_; }

 private:
  void emit(const std::string& s) const { std::cout << s << '\n'; }

  std::string render(const MultiPoly& p) const { return format_ == OutputFormat::latex ? p.to_latex() : p.to_string(); }

  bool use_finite_field(const Arrangement& a) const {
    if (opt_.method == "finite-field") return true;
    return opt_.method == "auto" && a.size() > 10 && a.characteristic() == 0;
  }

  FfmResult run_ffm(const Arrangement& a) const {
    FfmOptions f;
    f.primes = parse_primes(opt_.primes);
    if (opt_.reduction == "bound") f.mode = ReductionMode::bound;
    if (opt_.reduction == "verified") f.mode = ReductionMode::verified;
    f.budget = opt_.budget;
    f.threads = worker_count(opt_.threads);
    FfmResult res = coboundary_ffm(a, f);
    if (!opt_.dump_profiles.empty()) {
      std::ofstream out(opt_.dump_profiles);
      if (!out) throw Error(ErrorCode::parse, "cannot write '" + opt_.dump_profiles + "'");
      for (const auto& profile : res.profiles) write_profile(out, profile);
    }
    return res;
  }

  std::tuple<MultiPoly, std::size_t, std::string> tutte(const Arrangement& a) const {
    if (use_finite_field(a)) {
      const FfmResult res = run_ffm(a);
      return {tutte_from_coboundary(res.coboundary, res.rank), res.rank, "finite-field"};
    }
    if (opt_.method == "delcon") {
      const TutteResult t = tutte_delcon(a);
      return {t.tutte, t.rank, "delcon"};
    }
    if (opt_.method == "activity") {
      const TutteResult t = tutte_activity(a).first;
      return {t.tutte, t.rank, "activity"};
    }
    const TutteResult t = tutte_subset(a);
    return {t.tutte, t.rank, "subset"};
  }

  std::tuple<MultiPoly, std::size_t, std::string> coboundary(const Arrangement& a) const {
    if (use_finite_field(a)) {
      const FfmResult res = run_ffm(a);
      return {res.coboundary, res.rank, "finite-field"};
    }
    const auto [t, r, method] = tutte(a);
    return {coboundary_from_tutte(t, r), r, method};
  }

  std::pair<MultiPoly, std::string> characteristic(const Arrangement& a) const {
    if (opt_.method == "auto") {
      if (a.size() <= 10) return {char_poly(a), "mobius+whitney"};
      return {char_poly_mobius(a), "mobius"};
    }
    if (opt_.method == "finite-field") {
      const FfmResult res = run_ffm(a);
      const MultiPoly X = MultiPoly::variable("X");
      const MultiPoly chi =
          (res.coboundary.substitute("Y", MultiPoly(0)) * X.pow(static_cast<unsigned>(a.dim() - res.rank)))
              .renamed({{"X", "q"}})
              .with_variables({"q"});
      return {chi, "finite-field"};
    }
    const auto [t, r, method] = tutte(a);
    return {char_poly_whitney(t, r, a.dim()), method + "+whitney"};
  }

  int invariants(const Arrangement& a, ResultContext& ctx) const {
    const auto [t, r, method] = tutte(a);
    const MultiPoly chi = char_poly_whitney(t, r, a.dim());
    const ScalarInvariants inv = scalar_invariants(t, chi, a.dim(), r, a.size());
    const ChiShapeReport shape = validate_chi_shape(chi);
    std::string shape_text = shape.ok() ? "ok" : "";
    for (const auto& v : shape.violations) shape_text += (shape_text.empty() ? "" : "; ") + v;
    std::vector<std::pair<std::string, std::string>> fields{
        {"dim", std::to_string(a.dim())},
        {"rank", std::to_string(r)},
        {"hyperplanes", std::to_string(a.size())},
        {"central", is_central(a) ? "true" : "false"},
        {"tutte", render(t)},
        {"char", render(chi)},
        {"regions", to_string(inv.regions)},
        {"bounded_regions", to_string(inv.bounded_regions)},
        {"poincare", render(inv.poincare)},
        {"complement_size", render(inv.complement_size)},
        {"general_position_bounded", to_string(inv.general_position_bounded)}};
    if (inv.beta) {
      fields.emplace_back("beta", to_string(*inv.beta));
      fields.emplace_back("beta_y", to_string(*inv.beta_y));
    }
    fields.emplace_back("chi_shape", shape_text);
    ctx.rank = r;
    ctx.method = method;
    emit(format_record(fields, format_, ctx));
    return 0;
  }

  int poset(const Arrangement& a, ResultContext& ctx) const {
    const IntersectionPoset poset = intersection_poset(a);
    ctx.rank = poset.height();
    ctx.method = "closure";
    auto join = [](const auto& values) {
      std::string s;
      for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
      return s;
    };
    std::vector<std::pair<std::string, std::string>> fields{
        {"flats", std::to_string(poset.size())},
        {"rank_sizes", join(poset.rank_sizes())},
        {"mobius_level_sums", join(poset.mobius_level_sums())}};
    for (std::size_t i = 0; i < poset.size(); ++i) {
      const Flat& f = poset.flats()[i];
      std::string members;
      for (std::size_t h = 0; h < a.size(); ++h) {
        if (f.hyperplanes >> h & 1) members += (members.empty() ? "" : ",") + std::to_string(h);
      }
      fields.emplace_back("flat " + std::to_string(i), "rank " + std::to_string(f.rank) + " dim " +
                                                           std::to_string(f.dim) + " mobius " +
                                                           std::to_string(poset.mobius(i)) + " hyperplanes {" +
                                                           members + "} covered_by [" + join(poset.covers(i)) + "]");
    }
    emit(format_record(fields, format_, ctx));
    return 0;
  }

  CheckOptions check_options() const {
    CheckOptions c;
    c.budget = opt_.budget;
    c.threads = worker_count(opt_.threads);
    c.finite_field = opt_.method == "auto" || opt_.method == "finite-field";
    return c;
  }

  int report(const std::vector<CheckResult>& results, const ResultContext& ctx) const {
    bool all = true;
    std::vector<std::pair<std::string, std::string>> fields;
    for (const auto& r : results) {
      all = all && r.passed;
      fields.emplace_back(r.name, r.passed ? "PASS" : "FAIL " + r.detail);
    }
    emit(format_record(fields, format_, ctx));
    if (!all) {
      std::cerr << "error: inconsistent: some checks failed\n";
      return 2;
    }
    return 0;
  }

  FamilySpec family_spec() const { return spec_for(opt_.tag, true); }

  FamilySpec spec_for(const std::string& tag_name, bool allow_thickened) const {
    const FamilyTag tag = family_tag_from_name(tag_name);
    switch (tag) {
      case FamilyTag::thickened: {
        if (!allow_thickened || opt_.base.empty()) throw Error(ErrorCode::parse, "thickened needs --base <tag>");
        return thickened_family(spec_for(opt_.base, false), opt_.k);
      }
      case FamilyTag::generic:
        return generic_family(opt_.n, opt_.d);
      case FamilyTag::all_linear:
        return all_linear_family(opt_.p, opt_.n);
      case FamilyTag::graphical: {
        if (!opt_.graph.empty()) {
          auto [vertices, edges] = read_graph(opt_.graph);
          return graphical_family(std::max(vertices, opt_.n), std::move(edges));
        }
        if (opt_.m > 0) return bipartite_family(opt_.m, opt_.n);
        throw Error(ErrorCode::parse, "graphical needs --graph or --m/--n for K_{m,n}");
      }
      default:
        return family(tag, opt_.n);
    }
  }

  Options opt_;
  OutputFormat format_;
};

void add_engine_flags(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "arrangement file");
  sub->add_option("--method", o.method, "auto|subset|delcon|activity|finite-field");
  sub->add_option("--primes", o.primes, "auto or a comma-separated prime list");
  sub->add_option("--reduction", o.reduction, "bound|verified");
  sub->add_option("--budget", o.budget, "maximum number of enumerated points");
  sub->add_option("--threads", o.threads, "worker threads for point enumeration (0: all cores)");
  sub->add_option("--format", o.format, "text|structured|latex");
  sub->add_option("--dump-profiles", o.dump_profiles, "write 'p, c_0, ..., c_n' rows to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte, characteristic and coboundary polynomials of hyperplane arrangements"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> arrangement_verbs{"tutte", "char", "coboundary", "invariants",
                                                   "poset", "multivariate", "check"};
  for (const auto& verb : arrangement_verbs) add_engine_flags(app.add_subcommand(verb), o);

  auto* fam = app.add_subcommand("family", "build a named family and compute with it");
  fam->add_option("tag", o.tag, "coordinate|braid|graphical|bc|dn|generic|catalan|shi|threshold|all_linear|thickened")
      ->required();
  fam->add_option("what", o.what,
                  "tutte|char|coboundary|invariants|poset|multivariate|check|arrangement|"
                  "oracle-char|oracle-coboundary|oracle-tutte");
  fam->add_option("--n", o.n, "size parameter");
  fam->add_option("--d", o.d, "dimension (generic)");
  fam->add_option("--m", o.m, "first side of K_{m,n} (graphical)");
  fam->add_option("--p", o.p, "prime (all_linear)");
  fam->add_option("--k", o.k, "copies per hyperplane (thickened)");
  fam->add_option("--graph", o.graph, "edge file, one 'i j' per line, 1-indexed");
  fam->add_option("--base", o.base, "base family tag (thickened)");
  add_engine_flags(fam, o);

  auto* arith = app.add_subcommand("arith", "arithmetic Tutte polynomial of integer vectors");
  arith->add_option("what", o.arith_what, "tutte|char|zonotope|toric")->required();
  arith->add_option("--q", o.q, "torus (F_{q+1}^*)^d, q+1 prime");
  add_engine_flags(arith, o);

  auto* toric = app.add_subcommand("toric", "toric point profile over (F_{q+1}^*)^d");
  toric->add_option("--q", o.q, "q with q+1 prime");
  add_engine_flags(toric, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: parse_error: " << e.what() << '\n';
    return 1;
  }

  try {
    Runner runner(o);
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "family") return runner.run_family();
    if (name == "arith") return runner.run_arith(o.arith_what);
    if (name == "toric") return runner.run_arith("toric");
    const Arrangement a = runner.input_arrangement();
    return runner.run_arrangement_verb(name, a, o.input);
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::parse ? 1 : 2;
  }
}
