#include "ajc/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <thread>

#include "ajc/degrees.hpp"
#include "ajc/errors.hpp"
#include "ajc/recurrence.hpp"

namespace ajc {

namespace {

using Json = jsonio::Json;

Json op_summary(const TorusOp& op) {
  int mlo = 0, mhi = 0, tlo = 0, thi = 0;
  bool first = true;
  for (const auto& [k, a] : op.coeffs()) {
    if (first) {
      mlo = a.min_m(), mhi = a.max_m(), tlo = a.min_t(), thi = a.max_t();
      first = false;
    }
    mlo = std::min(mlo, a.min_m()), mhi = std::max(mhi, a.max_m());
    tlo = std::min(tlo, a.min_t()), thi = std::max(thi, a.max_t());
  }
  return {{"order", op.max_l() - op.min_l()},
          {"m_range", Json::array({mlo, mhi})},
          {"t_range", Json::array({tlo, thi})},
          {"terms", op.term_count()}};
}

// Runs one stage, recording its status, error and time.
class StageRunner {
 public:
  explicit StageRunner(PipelineReport& rep) : rep_(rep) {}

  template <class F>
  StageReport& run(const std::string& name, F body) {
    StageReport s;
    s.stage = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      s.status = "ok";
      body(s);
    } catch (const std::exception& e) {
      s.status = "error";
      s.error = e.what();
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep_.stages.push_back(std::move(s));
    return rep_.stages.back();
  }

  void skip(const std::string& name, const std::string& why) {
    StageReport s;
    s.stage = name;
    s.status = "skipped";
    s.error = why;
    rep_.stages.push_back(std::move(s));
  }

 private:
  PipelineReport& rep_;
};

}  // namespace

Json PipelineConfig::to_json() const {
  return {{"seed", seed},
          {"identity_colors", identity_colors},
          {"degree_colors", degree_colors},
          {"max_period", max_period},
          {"max_order", max_order},
          {"max_deg_m", max_deg_m},
          {"cable_recurrence", cable_recurrence},
          {"workers", workers}};
}

PipelineReport run_pipeline(const KnotRecord& knot, int r, const PipelineConfig& cfg) {
  if (r % 2 == 0) throw InvalidInput("pipeline: r must be odd");
  PipelineReport rep;
  rep.config = cfg;
  rep.knot = knot.name;
  rep.r = r;
  StageRunner runner(rep);
  GuessOptions gopt;
  gopt.seed = cfg.seed;

  std::optional<JonesSeq> j, cable;
  std::optional<Rat> r_plus, r_minus;
  std::optional<RecurrenceCandidate> alpha;
  bool counted_mismatch = false;

  // Colored Jones of the knot and its cable, and the cabling identity.
  runner.run("jones", [&](StageReport& s) {
    s.inputs["source"] = knot.engine != KnotRecord::Engine::None ? engine_name(knot.engine) : "pd";
    s.inputs["colors"] = Json::array({1, cfg.identity_colors});
    j = jones_source(knot);
    cable = cable_jones(*j, r);
    const TorusOp factor = cable_factor(r);
    bool identity = true;
    Json degs = Json::array();
    for (long n = 1; n <= cfg.identity_colors; ++n) {
      identity = identity && apply(factor, *cable, n) == (*j)(2 * n + 1);
      const LaurentT v = (*cable)(n);
      degs.push_back(Json::array({n, d_plus(v).to_string(), d_minus(v).to_string()}));
    }
    s.outputs["cable_identity"] = identity;
    s.outputs["cable_degrees"] = degs;
    if (!identity) {
      s.status = "mismatch";
      counted_mismatch = true;
    }
  });
  if (!j) {
    for (const char* st : {"degrees", "recurrence", "cable_recurrence", "apoly", "ajcheck"})
      runner.skip(st, "needs the colored Jones stage");
    rep.verdict = Verdict::Inconclusive;
    return rep;
  }

  // Degree quasi-polynomials, slopes and the cable degree law.
  runner.run("degrees", [&](StageReport& s) {
    s.inputs["colors"] = Json::array({1, cfg.degree_colors});
    s.inputs["max_period"] = cfg.max_period;
    const SlopeData sd = slope_data(*j, 1, cfg.degree_colors, cfg.max_period);
    s.outputs["plus"] = jsonio::to_json(sd.plus);
    s.outputs["minus"] = jsonio::to_json(sd.minus);
    s.outputs["in_K"] = membership_K(sd);
    if (sd.plus.mono_sloped()) r_plus = r_invariants(sd.plus, 1).r;
    if (sd.minus.mono_sloped()) r_minus = r_invariants(sd.minus, -1).r;
    s.outputs["r_plus"] = r_plus ? Json(r_plus->get_str()) : Json(nullptr);
    s.outputs["r_minus"] = r_minus ? Json(r_minus->get_str()) : Json(nullptr);
    if (knot.c_plus && knot.c_minus && r_plus && r_minus)
      s.outputs["slopes_match_crossings"] = *r_plus == 4 * *knot.c_plus && *r_minus == -4 * *knot.c_minus;

    // d_eps of the cable equals r(n^2 - 1)/2 once r lies beyond r^eps.
    int eps = 0;
    if (r_plus && r > *r_plus) eps = 1;
    if (r_minus && r < *r_minus) eps = -1;
    Json law;
    law["window"] = Json::array({3, cfg.identity_colors + 2});
    if (eps == 0) {
      law["hypothesis"] = "unmet";
    } else {
      law["hypothesis"] = eps > 0 ? "r > r_plus" : "r < r_minus";
      bool holds = true;
      for (long n = 3; n <= cfg.identity_colors + 2; ++n) {
        const LaurentT v = (*cable)(n);
        const DegQ d = eps > 0 ? d_plus(v) : d_minus(v);
        holds = holds && d.value() == frac(r * (n * n - 1), 2);
      }
      law["holds"] = holds;
      if (!holds) {
        s.status = "mismatch";
        counted_mismatch = true;
      }
    }
    s.outputs["cable_degree_law"] = law;
  });

  runner.run("recurrence", [&](StageReport& s) {
    s.inputs["sequence"] = "odd part J(2n+1)";
    s.inputs["max_order"] = cfg.max_order;
    s.inputs["max_deg_m"] = cfg.max_deg_m;
    alpha = guess_auto(odd_part(*j), cfg.max_order, 0, cfg.max_deg_m, gopt);
    if (!alpha) throw InsufficientData("no recurrence within the configured bounds");
    s.outputs["candidate"] = jsonio::to_json(*alpha);
    s.outputs["summary"] = op_summary(alpha->op);
    s.outputs["lower_orders"] = "none";
    const TorusOp product = cable_factorize(alpha->op, r);
    s.outputs["cable_product_annihilates"] = verify(product, *cable, 1, cfg.identity_colors);
    if (!s.outputs["cable_product_annihilates"].get<bool>()) {
      s.status = "mismatch";
      counted_mismatch = true;
    }
  });

  if (!cfg.cable_recurrence) {
    runner.skip("cable_recurrence", "disabled by configuration");
  } else {
    runner.run("cable_recurrence", [&](StageReport& s) {
      std::optional<Rat> lo = r_minus, hi = r_plus;
      if (!hi && knot.c_plus) hi = Rat(4 * *knot.c_plus);
      if (!lo && knot.c_minus) lo = Rat(-4 * *knot.c_minus);
      const bool hyp = (hi && r > *hi) || (lo && r < *lo);
      s.inputs["hypothesis"] = hyp ? "met" : "unmet";
      if (!hyp) s.outputs["note"] = "outside the divisibility hypothesis; outcome recorded only";
      const auto c = guess_auto(*cable, cfg.max_order + 1, 1, cfg.max_deg_m, gopt);
      if (!c) throw InsufficientData("no cable recurrence within the configured bounds");
      s.outputs["summary"] = op_summary(c->op);
      s.outputs["engine"] = c->engine;
      const LeftDivision div = left_divide(c->op, cable_factor(r));
      s.outputs["remainder_zero"] = div.remainder.is_zero();
      s.outputs["quotient"] = op_summary(div.quotient);
      s.status = div.remainder.is_zero() ? "match" : "mismatch";
      if (hyp && !div.remainder.is_zero()) counted_mismatch = true;
    });
  }

  bool have_a = false;
  runner.run("apoly", [&](StageReport& s) {
    if (!knot.apoly) throw MissingData("knot " + knot.name + ": missing field \"apoly\" (A-polynomial)");
    const CommPoly a = knot.apoly->normalized();
    s.inputs["A"] = a.to_string();
    s.inputs["source_note"] = knot.apoly_source;
    s.outputs["R"] = r_poly(a).normalized().to_string();
    s.outputs["cable_A"] = cable_a(a, r).normalized().to_string();
    s.outputs["newton_polygon"] = jsonio::to_json(newton_polygon(a));
    s.outputs["even_m_symmetry"] = even_m_symmetry(a);
    s.outputs["odd_L_term"] = odd_L_term_exists(a);
    have_a = true;
  });

  if (!alpha || !have_a) {
    runner.skip("ajcheck", !alpha ? "needs the recurrence stage" : "needs the apoly stage");
  } else {
    runner.run("ajcheck", [&](StageReport& s) {
      const AJVerdict c3 = c3_check(alpha->op, *knot.apoly);
      const AJVerdict cab = cable_aj_assemble(alpha->op, *knot.apoly, r);
      s.outputs["c3"] = jsonio::to_json(c3);
      s.outputs["cable"] = jsonio::to_json(cab);
      if (knot.two_bridge && knot.c_plus && knot.c_minus) {
        KnotClass cls;
        cls.c_plus = *knot.c_plus;
        cls.c_minus = *knot.c_minus;
        s.outputs["theorem_range"] = {{"class", "two_bridge"}, {"holds", theorem_range(cls, r)}};
      }
      if (c3.status == Verdict::Match && cab.status == Verdict::Match)
        s.status = "match";
      else if (c3.status == Verdict::Mismatch || cab.status == Verdict::Mismatch)
        s.status = "mismatch";
      else
        s.status = "inconclusive";
    });
  }

  const StageReport& last = rep.stages.back();
  if (counted_mismatch || last.status == "mismatch")
    rep.verdict = Verdict::Mismatch;
  else if (last.status == "match")
    rep.verdict = Verdict::Match;
  else
    rep.verdict = Verdict::Inconclusive;
  return rep;
}

std::vector<PipelineReport> run_pipelines(const std::vector<KnotRecord>& knots, int r, const PipelineConfig& cfg) {
  std::vector<PipelineReport> out(knots.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < knots.size(); i = next++) out[i] = run_pipeline(knots[i], r, cfg);
  };
  const std::size_t n = std::max<std::size_t>(1, std::min<std::size_t>(cfg.workers, knots.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

Json PipelineReport::to_json() const {
  Json out;
  out["config"] = config.to_json();
  out["knot"] = knot;
  out["r"] = r;
  Json stages_json = Json::array();
  for (const auto& s : stages) {
    Json sj;
    sj["stage"] = s.stage;
    sj["status"] = s.status;
    sj["inputs"] = s.inputs;
    sj["outputs"] = s.outputs;
    if (!s.error.empty()) sj["error"] = s.error;
    if (config.timings) sj["seconds"] = s.seconds;
    stages_json.push_back(sj);
  }
  out["stages"] = stages_json;
  out["verdict"] = verdict_name(verdict);
  return out;
}

std::string PipelineReport::pretty() const {
  std::ostringstream os;
  os << "knot " << knot << ", r = " << r << "\n";
  for (const auto& s : stages) {
    os << "  " << s.stage << ": " << s.status;
    if (!s.error.empty()) os << " (" << s.error << ")";
    if (config.timings) os << " [" << s.seconds << " s]";
    os << "\n";
  }
  os << "verdict: " << verdict_name(verdict) << "\n";
  return os.str();
}

}  // namespace ajc
