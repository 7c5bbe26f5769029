#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ajc/ajcheck.hpp"
#include "ajc/degrees.hpp"
#include "ajc/errors.hpp"
#include "ajc/json_io.hpp"
#include "ajc/knot_table.hpp"
#include "ajc/pipeline.hpp"
#include "ajc/recurrence.hpp"

using namespace ajc;
using Json = jsonio::Json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 0x5EED0001;
  int workers = 1;
  bool pretty() const { return format == "pretty"; }
};

// One printed result: JSON, or pretty lines built by the caller.
void emit(const Globals& g, const Json& j, const std::string& pretty) {
  if (g.pretty())
    std::cout << pretty << (pretty.empty() || pretty.back() == '\n' ? "" : "\n");
  else
    std::cout << j.dump(2) << "\n";
}

std::vector<KnotRecord> table() {
  std::vector<std::string> warnings;
  auto t = load_table(&warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return t;
}

// "a..b" or a single color.
std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const long n = std::stol(s);
      return {n, n};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidInput("malformed color range \"" + s + "\"; expected a..b");
  }
}

// Inline JSON, or @path to read it from a file.
Json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidInput("cannot open " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON argument: ") + e.what());
  }
}

Rat parse_rat(const std::string& s) {
  Rat v;
  if (v.set_str(s, 10) != 0 || v.get_den() == 0) throw InvalidInput("malformed rational \"" + s + "\"");
  v.canonicalize();
  return v;
}

int parse_eps(const std::string& s) {
  if (s == "plus" || s == "+") return 1;
  if (s == "minus" || s == "-") return -1;
  throw InvalidInput("eps must be plus or minus");
}

struct SeqSpec {
  std::string knot = "trefoil";
  bool odd = false;
  bool mirror = false;
  std::optional<int> cable;

  void add(CLI::App* c) {
    c->add_option("--knot", knot, "knot name or alias from the table");
    c->add_flag("--odd", odd, "use the odd part J(2n+1)");
    c->add_flag("--mirror", mirror, "use the mirror image (t -> 1/t)");
    c->add_option("--cable", cable, "use the (r,2)-cable, r odd");
  }
  JonesSeq build() const {
    JonesSeq j = jones_source(find_knot(table(), knot));
    if (mirror) j = mirror_seq(j);
    if (cable) j = cable_jones(j, *cable);
    if (odd) j = odd_part(j);
    return j;
  }
  std::string label() const {
    std::string s = knot;
    if (mirror) s = "mirror(" + s + ")";
    if (cable) s += " (" + std::to_string(*cable) + ",2)-cable";
    if (odd) s += " odd part";
    return s;
  }
};

std::string verdict_pretty(const AJVerdict& v) {
  std::string s = std::string(verdict_name(v.status)) + " (" + v.convention + " convention)";
  if (v.status == Verdict::Match)
    s += "\ncofactor: (" + v.cofactor_num.to_string() + ") / (" + v.cofactor_den.to_string() + ")";
  else if (!v.diagnostic.empty())
    s += "\n" + v.diagnostic;
  return s;
}

std::string candidate_pretty(const RecurrenceCandidate& c) {
  std::ostringstream os;
  os << "order " << c.op.max_l() << " candidate (" << c.engine << " engine), guessed on " << c.guess_lo << ".."
     << c.guess_hi << ", verified on " << c.verify_lo << ".." << c.verify_hi << "\n"
     << c.op.to_string();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Jones cabling, recurrences and the AJ comparison"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--seed", g.seed, "seed for randomized steps");
  app.add_option("--workers", g.workers, "parallel knots in pipeline runs")->check(CLI::PositiveNumber);

  std::function<int()> action;

  // jones
  auto* jones = app.add_subcommand("jones", "colored Jones polynomials");
  jones->require_subcommand(1);
  SeqSpec j_eval_spec;
  long j_n = 2;
  auto* j_eval = jones->add_subcommand("eval", "J_K(n)");
  j_eval_spec.add(j_eval);
  j_eval->add_option("--n", j_n, "color")->required();
  j_eval->callback([&] {
    action = [&] {
      const LaurentT v = j_eval_spec.build()(j_n);
      emit(g, {{"knot", j_eval_spec.label()}, {"n", j_n}, {"value", jsonio::to_json(v)}}, v.to_string());
      return kOk;
    };
  });
  std::string jc_knot = "trefoil";
  int jc_r = 1;
  long jc_n = 2;
  auto* j_cable = jones->add_subcommand("cable", "J of the (r,2)-cable at color n");
  j_cable->add_option("--knot", jc_knot, "knot name");
  j_cable->add_option("--r", jc_r, "odd cabling parameter")->required();
  j_cable->add_option("--n", jc_n, "color")->required();
  j_cable->callback([&] {
    action = [&] {
      const LaurentT v = cable_jones(jones_source(find_knot(table(), jc_knot)), jc_r)(jc_n);
      emit(g, {{"knot", jc_knot}, {"r", jc_r}, {"n", jc_n}, {"value", jsonio::to_json(v)}}, v.to_string());
      return kOk;
    };
  });

  // qtorus
  auto* qt = app.add_subcommand("qtorus", "quantum torus arithmetic");
  qt->require_subcommand(1);
  std::string qa, qb;
  auto* q_mul = qt->add_subcommand("mul", "normal-form product a*b of two TorusOp JSON values (inline or @file)");
  q_mul->add_option("a", qa)->required();
  q_mul->add_option("b", qb)->required();
  q_mul->callback([&] {
    action = [&] {
      const TorusOp p = jsonio::torus_from_json(read_json_arg(qa)) * jsonio::torus_from_json(read_json_arg(qb));
      emit(g, jsonio::to_json(p), p.to_string());
      return kOk;
    };
  });

  // degrees
  auto* deg = app.add_subcommand("degrees", "degree quasi-polynomials");
  deg->require_subcommand(1);
  std::string df_knot = "trefoil", df_eps = "plus";
  long df_max_n = 20;
  int df_period = 4;
  auto* d_fit = deg->add_subcommand("fit", "fit d_+ or d_- of J_K(n), n = 1..max-n");
  d_fit->add_option("--knot", df_knot, "knot name");
  d_fit->add_option("--eps", df_eps, "plus or minus");
  d_fit->add_option("--max-n", df_max_n, "largest color");
  d_fit->add_option("--max-period", df_period, "largest period tried");
  d_fit->callback([&] {
    action = [&] {
      const int eps = parse_eps(df_eps);
      const QuasiPoly q = fit_quasi(degree_samples(jones_source(find_knot(table(), df_knot)), 1, df_max_n, eps), df_period);
      Json out = jsonio::to_json(q);
      std::ostringstream os;
      os << "period " << q.period << ", valid for n >= " << q.N << "\n";
      for (int i = 0; i < q.period; ++i)
        os << "  n = " << i << " mod " << q.period << ": " << q.a[i].get_str() << " n^2 + " << q.b[i].get_str() << " n + "
           << q.c[i].get_str() << "\n";
      if (q.mono_sloped()) {
        const RInvariants ri = r_invariants(q, eps);
        out["r"] = ri.r.get_str();
        os << "r = " << ri.r.get_str() << "\n";
      }
      emit(g, out, os.str());
      return kOk;
    };
  });
  int dp_m = 2;
  long dp_n = 1;
  std::string dp_eps = "minus", dp_rseq;
  auto* d_pretzel = deg->add_subcommand("pretzel", "closed-form degree of the pretzel knot K(m)");
  d_pretzel->add_option("--m", dp_m, "pretzel parameter")->required();
  d_pretzel->add_option("--n", dp_n, "color")->required();
  d_pretzel->add_option("--eps", dp_eps, "plus or minus");
  d_pretzel->add_option("--r-seq", dp_rseq, "comma-separated periodic r_k values, |r_k| <= 1/2");
  d_pretzel->callback([&] {
    action = [&] {
      std::vector<Rat> rs;
      std::stringstream ss(dp_rseq);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) rs.push_back(parse_rat(item));
      const DegQ d = pretzel_degree(dp_m, dp_n, parse_eps(dp_eps), rs);
      emit(g, {{"m", dp_m}, {"n", dp_n}, {"eps", dp_eps}, {"degree", d.to_string()}}, d.to_string());
      return kOk;
    };
  });

  // recur
  auto* rec = app.add_subcommand("recur", "recurrence guessing and checks");
  rec->require_subcommand(1);
  SeqSpec rg_spec;
  int rg_max_l = 3, rg_max_m = 0, rg_max_t = 0;
  std::string rg_range, rg_engine = "auto";
  auto* r_guess = rec->add_subcommand("guess", "guess an annihilator of minimal L-degree");
  rg_spec.add(r_guess);
  r_guess->add_option("--maxL", rg_max_l, "largest L-degree");
  r_guess->add_option("--maxM", rg_max_m, "M-degree bound; omitted means automatic");
  r_guess->add_option("--maxT", rg_max_t, "t-degree cap; default 8 maxM + 64");
  r_guess->add_option("--n", rg_range, "guessing colors a..b; required with --maxM");
  r_guess->add_option("--engine", rg_engine, "auto, window or specialize")
      ->check(CLI::IsMember({"auto", "window", "specialize"}));
  r_guess->callback([&] {
    action = [&] {
      GuessOptions o;
      o.seed = g.seed;
      o.engine = rg_engine == "window" ? GuessEngine::Window
                 : rg_engine == "specialize" ? GuessEngine::Specialize
                                             : GuessEngine::Auto;
      const JonesSeq j = rg_spec.build();
      std::optional<RecurrenceCandidate> c;
      if (rg_max_m > 0) {
        if (rg_range.empty()) throw InvalidInput("--maxM needs --n a..b");
        const auto [lo, hi] = parse_range(rg_range);
        c = guess(j, rg_max_l, rg_max_m, rg_max_t > 0 ? rg_max_t : 8 * rg_max_m + 64, lo, hi, o);
      } else {
        const long lo = rg_range.empty() ? (rg_spec.odd ? 0 : 1) : parse_range(rg_range).first;
        c = guess_auto(j, rg_max_l, lo, 256, o);
      }
      Json out = {{"sequence", rg_spec.label()}};
      out["candidate"] = c ? jsonio::to_json(*c) : Json(nullptr);
      emit(g, out, c ? candidate_pretty(*c) : "none");
      return c ? kOk : kMismatch;
    };
  });
  SeqSpec rv_spec;
  std::string rv_op, rv_range = "1..10";
  auto* r_verify = rec->add_subcommand("verify", "check op J = 0 exactly on a color range");
  rv_spec.add(r_verify);
  r_verify->add_option("--op", rv_op, "TorusOp JSON, or a candidate object, inline or @file")->required();
  r_verify->add_option("--n", rv_range, "colors a..b");
  r_verify->callback([&] {
    action = [&] {
      Json j = read_json_arg(rv_op);
      if (j.is_object() && j.contains("candidate")) j = j["candidate"];
      if (j.is_object() && j.contains("op")) j = j["op"];
      const TorusOp op = jsonio::torus_from_json(j);
      const auto [lo, hi] = parse_range(rv_range);
      const bool ok = verify(op, rv_spec.build(), lo, hi);
      emit(g, {{"sequence", rv_spec.label()}, {"range", Json::array({lo, hi})}, {"annihilates", ok}},
           ok ? "annihilates" : "does not annihilate");
      return ok ? kOk : kMismatch;
    };
  });
  std::string rc_knot = "trefoil";
  int rc_r = 13, rc_max_l = 5;
  auto* r_cable = rec->add_subcommand("cable-check", "guess the cable recurrence and divide by M^r (L + t^{-2r} M^{-2r})");
  r_cable->add_option("--knot", rc_knot, "knot name");
  r_cable->add_option("--r", rc_r, "odd cabling parameter");
  r_cable->add_option("--maxL", rc_max_l, "largest L-degree of the cable recurrence");
  r_cable->callback([&] {
    action = [&] {
      GuessOptions o;
      o.seed = g.seed;
      const auto c = guess_auto(cable_jones(jones_source(find_knot(table(), rc_knot)), rc_r), rc_max_l, 1, 256, o);
      if (!c) {
        emit(g, {{"knot", rc_knot}, {"r", rc_r}, {"candidate", nullptr}}, "no cable recurrence found");
        return kMismatch;
      }
      const LeftDivision div = left_divide(c->op, cable_factor(rc_r));
      const bool zero = div.remainder.is_zero();
      Json out = {{"knot", rc_knot}, {"r", rc_r}, {"candidate", jsonio::to_json(*c)}};
      out["remainder_zero"] = zero;
      out["quotient"] = jsonio::to_json(div.quotient);
      out["denominator"] = jsonio::to_json(div.denominator);
      emit(g, out, std::string("order ") + std::to_string(c->op.max_l()) + " cable recurrence; remainder " +
                       (zero ? "zero" : "nonzero"));
      return zero ? kOk : kMismatch;
    };
  });

  // apoly
  auto* ap = app.add_subcommand("apoly", "A-polynomial computations");
  ap->require_subcommand(1);
  std::string ac_knot = "trefoil";
  int ac_r = 13;
  auto require_a = [](const KnotRecord& k) -> CommPoly {
    if (!k.apoly) throw MissingData("knot " + k.name + ": missing field \"apoly\" (A-polynomial)");
    return k.apoly->normalized();
  };
  auto* a_cable = ap->add_subcommand("cable", "(L - 1) R(L, M^2) (L + M^{-2r}), unit-cleared");
  a_cable->add_option("--knot", ac_knot, "knot name");
  a_cable->add_option("--r", ac_r, "odd cabling parameter")->required();
  a_cable->callback([&] {
    action = [&] {
      const CommPoly c = cable_a(require_a(find_knot(table(), ac_knot)), ac_r).normalized();
      emit(g, {{"knot", ac_knot}, {"r", ac_r}, {"A_cable", jsonio::to_json(c)}}, c.to_string());
      return kOk;
    };
  });
  std::string an_knot = "5_2";
  auto* a_newton = ap->add_subcommand("newton", "Newton polygon of the A-polynomial");
  a_newton->add_option("--knot", an_knot, "knot name");
  a_newton->callback([&] {
    action = [&] {
      const NewtonPolygon p = newton_polygon(require_a(find_knot(table(), an_knot)));
      std::string s;
      for (const auto& [l, m] : p.vertices) s += "(" + std::to_string(l) + ", " + std::to_string(m) + ") ";
      emit(g, {{"knot", an_knot}, {"vertices", jsonio::to_json(p)}}, s);
      return kOk;
    };
  });

  // ajcheck
  auto* aj = app.add_subcommand("ajcheck", "AJ comparison for cables and the published r-ranges");
  aj->require_subcommand(1);
  std::string ar_knot = "trefoil";
  int ar_r = 13, ar_max_l = 4;
  auto* a_run = aj->add_subcommand("run", "guess the odd-part recurrence and compare its cable with the cabled A-polynomial");
  a_run->add_option("--knot", ar_knot, "knot name");
  a_run->add_option("--r", ar_r, "odd cabling parameter")->required();
  a_run->add_option("--maxL", ar_max_l, "largest L-degree of the odd-part recurrence");
  a_run->callback([&] {
    action = [&] {
      const KnotRecord k = find_knot(table(), ar_knot);
      const CommPoly a = require_a(k);
      GuessOptions o;
      o.seed = g.seed;
      const auto c = guess_auto(odd_part(jones_source(k)), ar_max_l, 0, 256, o);
      if (!c) throw InsufficientData("no odd-part recurrence within the bounds");
      const AJVerdict v = cable_aj_assemble(c->op, a, ar_r);
      Json out = jsonio::to_json(v);
      out["knot"] = ar_knot;
      out["r"] = ar_r;
      emit(g, out, verdict_pretty(v));
      return v.status == Verdict::Match ? kOk : kMismatch;
    };
  });
  std::string rg_class = "two-bridge";
  int rg_cp = 0, rg_cm = 0, rg_k = 0, rg_l = 0, rg_m = 0, rg_r = 1;
  auto* a_range = aj->add_subcommand("range", "evaluate the published r-range for a knot class");
  a_range->add_option("--class", rg_class, "two-bridge, double-twist or pretzel")
      ->check(CLI::IsMember({"two-bridge", "double-twist", "pretzel"}));
  a_range->add_option("--c-plus", rg_cp, "positive crossings (two-bridge)");
  a_range->add_option("--c-minus", rg_cm, "negative crossings (two-bridge)");
  a_range->add_option("--k", rg_k, "double twist parameter k");
  a_range->add_option("--l", rg_l, "double twist parameter l");
  a_range->add_option("--m", rg_m, "pretzel parameter m");
  a_range->add_option("--r", rg_r, "odd cabling parameter")->required();
  a_range->callback([&] {
    action = [&] {
      KnotClass cls;
      cls.kind = rg_class == "pretzel" ? KnotClass::Pretzel
                 : rg_class == "double-twist" ? KnotClass::DoubleTwist
                                              : KnotClass::TwoBridge;
      cls.c_plus = rg_cp, cls.c_minus = rg_cm, cls.k = rg_k, cls.l = rg_l, cls.m = rg_m;
      const bool holds = theorem_range(cls, rg_r);
      emit(g, {{"class", rg_class}, {"r", rg_r}, {"holds", holds}}, holds ? "true" : "false");
      return holds ? kOk : kMismatch;
    };
  });

  // pipeline
  auto* pl = app.add_subcommand("pipeline", "run every stage for one knot or the whole table");
  std::string pl_knot = "trefoil";
  int pl_r = 13;
  PipelineConfig pcfg;
  bool pl_no_cable = false;
  pl->add_option("--knot", pl_knot, "knot name, or all");
  pl->add_option("--r", pl_r, "odd cabling parameter");
  pl->add_option("--n", pcfg.identity_colors, "colors 1..n for the cabling identity");
  pl->add_option("--degree-colors", pcfg.degree_colors, "colors 1..n for the degree fit");
  pl->add_option("--maxL", pcfg.max_order, "largest L-degree of the odd-part recurrence");
  pl->add_option("--maxM", pcfg.max_deg_m, "largest M-degree bound tried by the recurrence stages")
      ->check(CLI::PositiveNumber);
  pl->add_flag("--no-cable-recurrence", pl_no_cable, "skip guessing the cable recurrence directly");
  pl->add_flag("--timings", pcfg.timings, "include stage timings (reports are then run-dependent)");
  pl->callback([&] {
    action = [&] {
      pcfg.seed = g.seed;
      pcfg.workers = g.workers;
      pcfg.cable_recurrence = !pl_no_cable;
      const auto t = table();
      std::vector<KnotRecord> knots;
      if (pl_knot == "all")
        knots = t;
      else
        knots.push_back(find_knot(t, pl_knot));
      const auto reps = run_pipelines(knots, pl_r, pcfg);
      Json out = Json::array();
      std::string pretty;
      bool all_match = true;
      for (const auto& rep : reps) {
        out.push_back(rep.to_json());
        pretty += rep.pretty();
        all_match = all_match && rep.verdict == Verdict::Match;
      }
      emit(g, reps.size() == 1 ? out[0] : out, pretty);
      return all_match ? kOk : kMismatch;
    };
  });

  // ingest
  auto* ing = app.add_subcommand("ingest", "validate a knot table");
  std::string ing_path;
  ing->add_option("table", ing_path, "table path; omitted means the bundled table merged with $" + std::string(kTableEnv));
  ing->callback([&] {
    action = [&] {
      std::vector<std::string> warnings;
      const auto recs = ing_path.empty() ? load_table(&warnings) : ingest_table(ing_path, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      Json out = Json::array();
      std::string pretty;
      for (const auto& k : recs) {
        Json r = {{"name", k.name},
                  {"engine", engine_name(k.engine)},
                  {"pd", k.pd.has_value()},
                  {"apoly", k.apoly ? Json(k.apoly->to_string()) : Json(nullptr)}};
        r["c_plus"] = k.c_plus ? Json(*k.c_plus) : Json(nullptr);
        r["c_minus"] = k.c_minus ? Json(*k.c_minus) : Json(nullptr);
        out.push_back(r);
        pretty += k.name + ": engine " + engine_name(k.engine) + (k.pd ? ", PD" : "") + (k.apoly ? ", A-polynomial" : "") + "\n";
      }
      emit(g, {{"records", out}, {"count", recs.size()}}, pretty + std::to_string(recs.size()) + " records");
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MissingData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
