#include "divcert/report.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "divcert/error.hpp"
#include "divcert/parser.hpp"

namespace divcert {

namespace {

const std::set<std::string> kTasks{"membership", "minimal-degree", "regularity", "resolution",
                                   "hypotheses", "bounds",         "theorem"};

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json polys(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

MonomialOrder order_of(const std::string& name) {
  if (name == "grevlex") return MonomialOrder(OrderKind::GradedReverseLex);
  if (name == "grlex") return MonomialOrder(OrderKind::GradedLex);
  throw Error(ErrorKind::InvalidParameter, "order must be grevlex or grlex");
}

InstanceOptions options_of(const TaskSpec& spec) {
  InstanceOptions o;
  if (spec.c_infinity) {
    if (*spec.c_infinity == "-inf") {
      o.c_infinity = CInfinity::minus_infinity();
    } else {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(*spec.c_infinity, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != spec.c_infinity->size())
        throw Error(ErrorKind::InvalidParameter, "c-infinity must be an integer or -inf");
      o.c_infinity = CInfinity::of(v);
    }
  }
  o.mu_0 = spec.mu_0;
  o.assert_smooth = spec.assert_smooth;
  o.assert_pure = spec.assert_pure;
  return o;
}

Theorem theorem_of(const std::string& id) {
  auto t = parse_theorem(id);
  if (!t) throw Error(ErrorKind::InvalidParameter, "unknown theorem '" + id + "'");
  return *t;
}

Json bound_inputs(const BoundParams& p) {
  Json j;
  j["deg_phi"] = p.deg_phi;
  j["degrees"] = p.degrees;
  j["m"] = p.m();
  j["n"] = p.n;
  j["N"] = p.ambient;
  j["mu"] = p.mu();
  j["reg_X"] = p.reg_x;
  j["reg_J_f"] = p.reg_jf ? Json(*p.reg_jf) : Json(nullptr);
  j["d"] = p.d;
  j["deg_X"] = p.deg_x;
  j["c_infinity"] = p.c_infinity.is_minus_infinity() ? Json("-inf") : Json(p.c_infinity.value());
  j["mu_0"] = p.mu_0 ? Json(*p.mu_0) : Json(nullptr);
  return j;
}

Ideal generator_ideal(const ProblemInstance& inst, const VarietyData& vd) {
  return Ideal(vd.projective_ring, homogenized_generators(inst, vd.projective_ring)) + vd.closure;
}

bool smooth_closure(const ProblemInstance& inst, const VarietyData& vd) {
  if (vd.closure.is_zero()) return true;
  if (inst.options.assert_pure)
    return is_projectively_empty(singular_locus(vd.closure, inst.ambient() - vd.dimension));
  return inst.options.assert_smooth;
}

int task_membership(const TaskSpec& spec, const ProblemInstance& inst, Json& report) {
  SolveOutcome out = DivisionSolver(inst).solve(*spec.degree);
  report["result"] = {{"status", out.feasible ? "feasible" : "infeasible"}, {"rho", out.rho}};
  if (out.certificate) report["certificate"] = to_json(*out.certificate);
  return out.feasible ? 0 : 2;
}

int task_minimal_degree(const TaskSpec& spec, const ProblemInstance& inst, Json& report) {
  const int cap = spec.cap.value_or(default_cap(inst));
  try {
    MinimalDegree md = minimal_feasible_degree(inst, cap);
    report["result"] = {{"status", "found"}, {"minimal_degree", md.degree}, {"cap", cap}};
    report["certificate"] = to_json(md.certificate);
    return 0;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInIdeal) {
      report["result"] = {{"status", "not-in-ideal"}, {"cap", cap}};
      return 2;
    }
    if (e.kind() == ErrorKind::NotFoundBelowCap) {
      report["result"] = {{"status", "not-found-below-cap"}, {"cap", cap}, {"message", e.what()}};
      return 2;
    }
    throw;
  }
}

int task_regularity(const ProblemInstance& inst, Json& report) {
  VarietyData vd = analyze_variety(inst);
  Ideal j = generator_ideal(inst, vd);
  Json r;
  r["N"] = inst.ambient();
  r["n"] = vd.dimension;
  r["deg_X"] = vd.degree;
  r["reg_X"] = vd.regularity;
  r["cohen_macaulay_X"] = vd.cohen_macaulay;
  r["betti_X"] = to_json(betti_table(vd.resolution));
  if (j.is_unit()) {
    r["reg_J_f"] = nullptr;
  } else {
    FreeResolution res = free_resolution(j);
    r["reg_J_f"] = regularity(res);
    r["betti_J_f"] = to_json(betti_table(res));
  }
  Json bounds = Json::array();
  for (const auto& b : regularity_upper_bounds(vd.dimension, inst.ambient(), vd.degree, smooth_closure(inst, vd),
                                               vd.cohen_macaulay))
    bounds.push_back({{"name", b.name}, {"value", integer_json(b.value)}, {"applicable", b.applicable}, {"note", b.note}});
  r["regularity_upper_bounds"] = bounds;
  report["result"] = r;
  return 0;
}

int task_resolution(const ProblemInstance& inst, Json& report) {
  VarietyData vd = analyze_variety(inst);
  Ideal j = generator_ideal(inst, vd);
  FreeResolution res = free_resolution(j);
  Json maps = Json::array();
  for (const auto& m : res.maps) {
    Json rows = Json::array();
    for (const auto& row : m.entries) rows.push_back(polys(row));
    maps.push_back({{"row_twists", m.row_twists}, {"column_twists", m.column_twists}, {"entries", rows}});
  }
  report["result"] = {{"ideal", polys(j.generators())},
                      {"length", res.length()},
                      {"ranks", res.ranks()},
                      {"expected_ranks", expected_ranks(res)},
                      {"regularity", regularity(res)},
                      {"betti", to_json(betti_table(res))},
                      {"maps", maps}};
  return 0;
}

int task_hypotheses(const TaskSpec& spec, const ProblemInstance& inst, Json& report) {
  VarietyData vd = analyze_variety(inst);
  std::vector<Theorem> which;
  if (spec.theorem)
    which.push_back(theorem_of(*spec.theorem));
  else
    which = {Theorem::Macaulay,           Theorem::NoetherSmooth, Theorem::NoetherSingular,
             Theorem::AssociatedVarieties, Theorem::CommonDegree,  Theorem::BrianconSkoda};
  Json reports = Json::array();
  bool refuted = false;
  for (Theorem t : which) {
    HypothesisReport r = check_hypotheses(inst, vd, t);
    refuted = refuted || r.any_refuted();
    reports.push_back(to_json(r));
  }
  report["result"] = {{"status", refuted ? "refuted" : "no-refutation"}};
  report["hypothesis_report"] = reports;
  return refuted ? 2 : 0;
}

int task_bounds(const TaskSpec& spec, const ProblemInstance& inst, Json& report) {
  TheoremResult r = evaluate_theorem_bound(inst, theorem_of(*spec.theorem));
  Json res = {{"rho", integer_json(r.bound.rho)}, {"guaranteed", r.guaranteed}};
  const int d = inst.max_degree();
  if (d >= 1 && inst.ambient() <= 6) res["hermann_bound"] = integer_json(hermann_bound(d, inst.ambient()));
  report["result"] = res;
  report["hypothesis_report"] = to_json(r.hypotheses);
  report["bound_report"] = to_json(r.bound);
  return 0;
}

int task_theorem(const TaskSpec& spec, const ProblemInstance& inst, Json& report) {
  TheoremResult r = solve_with_theorem(inst, theorem_of(*spec.theorem));
  std::string status = !r.solved ? "bound-exceeds-safety-cap" : r.outcome.feasible ? "feasible" : "infeasible";
  report["result"] = {{"status", status},
                      {"rho", integer_json(r.bound.rho)},
                      {"target_in_ideal", r.target_in_ideal},
                      {"guaranteed", r.guaranteed},
                      {"soundness_failure", r.soundness_failure}};
  if (r.outcome.certificate) report["certificate"] = to_json(*r.outcome.certificate);
  report["hypothesis_report"] = to_json(r.hypotheses);
  report["bound_report"] = to_json(r.bound);
  if (!r.solved || r.soundness_failure) return 1;
  return r.outcome.feasible ? 0 : 2;
}

}  // namespace

bool is_known_task(const std::string& task) { return kTasks.count(task) > 0; }

void validate(const TaskSpec& spec) {
  if (!is_known_task(spec.task)) throw Error(ErrorKind::InvalidParameter, "unknown task '" + spec.task + "'");
  auto only = [&](bool present, const char* option, std::initializer_list<const char*> tasks) {
    if (!present) return;
    for (const char* t : tasks)
      if (spec.task == t) return;
    throw Error(ErrorKind::InvalidParameter, std::string("--") + option + " does not apply to task '" + spec.task + "'");
  };
  only(spec.degree.has_value(), "degree", {"membership"});
  only(spec.cap.has_value(), "cap", {"minimal-degree"});
  only(spec.theorem.has_value(), "theorem", {"hypotheses", "bounds", "theorem"});
  const bool theory = spec.c_infinity || spec.mu_0 || spec.assert_smooth || spec.assert_pure;
  only(theory, "c-infinity/--mu-0/--assert-*", {"hypotheses", "bounds", "theorem", "regularity"});
  if (spec.task == "membership" && !spec.degree) throw Error(ErrorKind::InvalidParameter, "membership needs --degree");
  if ((spec.task == "bounds" || spec.task == "theorem") && !spec.theorem)
    throw Error(ErrorKind::InvalidParameter, spec.task + " needs --theorem");
  if (spec.theorem) theorem_of(*spec.theorem);
  order_of(spec.order);
}

RunResult run_text(const TaskSpec& spec, const std::string& text) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  out.report["task"] = spec.task;
  try {
    validate(spec);
    ProblemInstance inst = parse_instance(text, order_of(spec.order), options_of(spec));
    out.report["instance"] = to_json(inst);
    if (spec.task == "membership") out.exit_code = task_membership(spec, inst, out.report);
    else if (spec.task == "minimal-degree") out.exit_code = task_minimal_degree(spec, inst, out.report);
    else if (spec.task == "regularity") out.exit_code = task_regularity(inst, out.report);
    else if (spec.task == "resolution") out.exit_code = task_resolution(inst, out.report);
    else if (spec.task == "hypotheses") out.exit_code = task_hypotheses(spec, inst, out.report);
    else if (spec.task == "bounds") out.exit_code = task_bounds(spec, inst, out.report);
    else out.exit_code = task_theorem(spec, inst, out.report);
  } catch (const Error& e) {
    out.report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    out.exit_code = 1;
  } catch (const std::exception& e) {
    out.report["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    out.exit_code = 1;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.report["timings"] = {{"total_ms", ms}};
  return out;
}

RunResult run(const TaskSpec& spec) {
  std::ifstream in(spec.input_path);
  if (!in) {
    RunResult out;
    out.report["task"] = spec.task;
    out.report["error"] = {{"kind", "InvalidParameter"}, {"message", "cannot read input file '" + spec.input_path + "'"}};
    out.report["timings"] = {{"total_ms", 0.0}};
    out.exit_code = 1;
    return out;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return run_text(spec, buf.str());
}

std::string canonical_body(const Json& report) {
  Json copy = report;
  copy.erase("timings");
  return copy.dump();
}

Json to_json(const Polynomial& p) { return to_string(p); }

Json to_json(const Certificate& c) {
  return {{"rho", c.rho},
          {"verified", c.verified},
          {"quotients", polys(c.quotients)},
          {"variety_generators", polys(c.variety_generators)},
          {"variety_multipliers", polys(c.variety_multipliers)}};
}

Json to_json(const HypothesisReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j = {{"name", e.name}, {"status", to_string(e.status)}, {"detail", e.detail}};
    if (e.witness) j["witness"] = to_json(*e.witness);
    entries.push_back(j);
  }
  Json out = {{"theorem", r.theorem}, {"guaranteed", r.guaranteed()}, {"entries", entries}};
  if (r.c_infinity) out["c_infinity"] = r.c_infinity->to_string();
  return out;
}

Json to_json(const BoundReport& b) {
  return {{"theorem", b.theorem},
          {"rho", integer_json(b.rho)},
          {"formula", b.formula},
          {"note", b.note},
          {"inputs", bound_inputs(b.inputs)}};
}

Json to_json(const BettiTable& t) { return {{"twists", t.twists}, {"table", t.to_string()}}; }

Json to_json(const ProblemInstance& inst) {
  return {{"ring", inst.ring->names()},
          {"order", inst.ring->order().name()},
          {"variety", polys(inst.variety)},
          {"generators", polys(inst.generators)},
          {"permutation", inst.permutation},
          {"target", to_json(inst.target)}};
}

Certificate certificate_from_json(const Json& j, const ProblemInstance& inst) {
  auto read = [&](const char* key) {
    std::vector<Polynomial> out;
    for (const auto& s : j.at(key)) out.push_back(parse_polynomial(s.get<std::string>(), inst.ring));
    return out;
  };
  Certificate c;
  c.rho = j.at("rho").get<int>();
  c.quotients = read("quotients");
  c.variety_generators = read("variety_generators");
  c.variety_multipliers = read("variety_multipliers");
  return c;
}

}  // namespace divcert
