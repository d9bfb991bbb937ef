#include "divcert/division.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "divcert/error.hpp"

namespace divcert {

namespace {

std::vector<int> key_of(const Monomial& m, int n) {
  std::vector<int> k(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = m[i];
  return k;
}

int target_degree(const ProblemInstance& inst) { return inst.target.is_zero() ? 0 : inst.target.degree(); }

std::vector<Polynomial> affine_variety_basis(const ProblemInstance& inst) {
  if (inst.variety.empty()) return {};
  Ideal iv(inst.ring, inst.variety);
  if (iv.is_unit()) throw Error(ErrorKind::InvalidInstance, "the variety is empty");
  return iv.groebner().elements();
}

}  // namespace

int max_degree_cap() {
  if (const char* env = std::getenv("DIVCERT_MAX_DEGREE")) {
    try {
      int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidParameter, "DIVCERT_MAX_DEGREE must be a non-negative integer");
  }
  return 30;
}

DivisionSolver::DivisionSolver(const ProblemInstance& inst)
    : inst_(inst),
      variety_gens_(affine_variety_basis(inst)),
      hring_(inst.ring->with_variable_prepended(kHomogenizingVariable)),
      ideal_(Ideal::zero(hring_)) {
  for (const auto& f : inst_.generators) homogeneous_.push_back(homogenize(lift_to_prepended(f, hring_), 0, f.degree()));
  for (const auto& g : variety_gens_) homogeneous_.push_back(homogenize(lift_to_prepended(g, hring_), 0, g.degree()));
  ideal_ = Ideal(hring_, homogeneous_);
}

void DivisionSolver::check_degree(int rho) const {
  if (rho < target_degree(inst_))
    throw Error(ErrorKind::DegreeTooLow, "rho = " + std::to_string(rho) + " is below deg Phi");
  if (rho > max_degree_cap())
    throw Error(ErrorKind::InvalidParameter,
                "rho = " + std::to_string(rho) + " exceeds the degree safety cap " + std::to_string(max_degree_cap()));
}

Certificate DivisionSolver::finish(std::vector<Polynomial> all, int rho) const {
  Certificate c;
  const std::size_t m = inst_.generators.size();
  for (std::size_t j = 0; j < all.size(); ++j) (j < m ? c.quotients : c.variety_multipliers).push_back(std::move(all[j]));
  c.variety_generators = variety_gens_;
  c.rho = rho;
  if (!verify_certificate(inst_, c)) throw std::logic_error("solver produced a certificate that does not verify");
  return c;
}

SolveOutcome DivisionSolver::solve(int rho) const {
  check_degree(rho);
  Polynomial phi = homogenize(lift_to_prepended(inst_.target, hring_), 0, rho);
  const GroebnerBasis& gb = ideal_.groebner();
  NormalFormResult nf = normal_form(phi, gb);
  if (!nf.remainder.is_zero()) return {false, rho, std::nullopt};

  std::vector<Polynomial> all;
  for (std::size_t j = 0; j < homogeneous_.size(); ++j) {
    Polynomial q(hring_);
    for (std::size_t i = 0; i < gb.elements().size(); ++i) {
      const Polynomial& c = gb.cofactors()[i][j];
      if (!c.is_zero() && !nf.cofactors[i].is_zero()) q += nf.cofactors[i] * c;
    }
    // phi is homogeneous of degree rho, so only this component of q survives.
    const int want = rho - homogeneous_[j].degree();
    Polynomial part = want < 0 ? Polynomial(hring_) : q.homogeneous_component(want);
    all.push_back(dehomogenize(part, 0).in_ring(inst_.ring));
  }
  return {true, rho, finish(std::move(all), rho)};
}

SolveOutcome DivisionSolver::solve_dense(int rho) const {
  check_degree(rho);
  const int n = inst_.ambient();
  std::vector<Polynomial> gens = inst_.generators;
  gens.insert(gens.end(), variety_gens_.begin(), variety_gens_.end());

  std::map<std::vector<int>, std::size_t> row_of;
  for (const auto& mono : monomials_up_to_degree(n, rho)) row_of.emplace(key_of(mono, n), row_of.size());

  struct Column {
    std::size_t generator;
    Monomial multiplier;
  };
  std::vector<Column> columns;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const int room = rho - gens[j].degree();
    if (room < 0) continue;
    for (const auto& mono : monomials_up_to_degree(n, room)) columns.push_back({j, mono});
  }

  RationalMatrix a(row_of.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& t : gens[columns[c].generator].terms())
      a(row_of.at(key_of(t.monomial * columns[c].multiplier, n)), c) = t.coefficient;
  std::vector<Rational> b(row_of.size());
  for (const auto& t : inst_.target.terms()) b[row_of.at(key_of(t.monomial, n))] = t.coefficient;

  auto x = solve_linear(a, b);
  if (!x) return {false, rho, std::nullopt};
  std::vector<std::vector<Term>> terms(gens.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (sgn((*x)[c]) != 0) terms[columns[c].generator].push_back({columns[c].multiplier, (*x)[c]});
  std::vector<Polynomial> all;
  for (auto& t : terms) all.push_back(Polynomial::from_terms(inst_.ring, std::move(t)));
  return {true, rho, finish(std::move(all), rho)};
}

SolveOutcome solve_at_degree(const ProblemInstance& inst, int rho, SolvePath path) {
  DivisionSolver solver(inst);
  return path == SolvePath::Groebner ? solver.solve(rho) : solver.solve_dense(rho);
}

int default_cap(const ProblemInstance& inst) { return target_degree(inst) + 20; }

MinimalDegree minimal_feasible_degree(const ProblemInstance& inst, int cap) {
  const int low = target_degree(inst);
  if (cap < low) throw Error(ErrorKind::InvalidParameter, "cap is below deg Phi");
  if (!target_in_ideal(inst)) throw Error(ErrorKind::NotInIdeal, "Phi is not in (F) + I_V");
  DivisionSolver solver(inst);
  const int top = std::min(cap, max_degree_cap());
  for (int rho = low; rho <= top; ++rho) {
    SolveOutcome out = solver.solve(rho);
    if (out.feasible) return {rho, std::move(*out.certificate)};
  }
  throw Error(ErrorKind::NotFoundBelowCap, "no representation with degree <= " + std::to_string(top));
}

bool verify_certificate(const ProblemInstance& inst, Certificate& cert) {
  cert.verified = false;
  if (cert.quotients.size() != inst.generators.size()) return false;
  if (cert.variety_multipliers.size() != cert.variety_generators.size()) return false;
  if (inst.variety.empty() && !cert.variety_generators.empty()) return false;
  auto in_ring = [&](const Polynomial& p) { return same_ring(p.ring(), inst.ring); };
  for (const auto& p : cert.quotients)
    if (!in_ring(p)) return false;
  for (std::size_t k = 0; k < cert.variety_generators.size(); ++k)
    if (!in_ring(cert.variety_generators[k]) || !in_ring(cert.variety_multipliers[k])) return false;
  if (!cert.variety_generators.empty()) {
    Ideal iv(inst.ring, inst.variety);
    for (const auto& g : cert.variety_generators)
      if (!iv.contains(g)) return false;
  }

  Polynomial sum(inst.ring);
  auto add = [&](const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return true;
    Polynomial prod = a * b;
    if (prod.degree() > cert.rho) return false;
    sum += prod;
    return true;
  };
  for (std::size_t j = 0; j < cert.quotients.size(); ++j)
    if (!add(inst.generators[j], cert.quotients[j])) return false;
  for (std::size_t k = 0; k < cert.variety_generators.size(); ++k)
    if (!add(cert.variety_generators[k], cert.variety_multipliers[k])) return false;
  cert.verified = sum == inst.target;
  return cert.verified;
}

namespace {

BettiTable betti_of(const Ideal& j) {
  if (j.is_unit()) return BettiTable{{{0}, {0}}};
  return betti_table(free_resolution(j));
}

TheoremResult evaluate(const ProblemInstance& inst, Theorem theorem, const VarietyData& vd) {
  TheoremResult r;
  r.hypotheses = check_hypotheses(inst, vd, theorem);
  r.reg_x = vd.regularity;

  BoundParams p;
  p.deg_phi = target_degree(inst);
  p.degrees = inst.degrees();
  p.n = vd.dimension;
  p.ambient = inst.ambient();
  p.reg_x = vd.regularity;
  p.d = inst.max_degree();
  p.deg_x = vd.degree;
  p.c_infinity = r.hypotheses.c_infinity.value_or(CInfinity::minus_infinity());
  p.mu_0 = inst.options.mu_0;

  switch (theorem) {
    case Theorem::Macaulay:
      r.bound = macaulay_bound(p);
      break;
    case Theorem::NoetherSmooth:
    case Theorem::NoetherSingular:
      if (p.m() <= p.n) {
        r.bound = noether_bound(p, vd.cohen_macaulay);
      } else {
        r.bound = macaulay_bound(p);
        r.bound.note = "m > n: Noether form unavailable, truncated Macaulay form used";
      }
      r.bound.theorem = theorem_id(theorem);
      break;
    case Theorem::AssociatedVarieties: {
      Ideal j(vd.projective_ring, homogenized_generators(inst, vd.projective_ring));
      j = j + vd.closure;
      BettiTable betti = betti_of(j);
      if (!j.is_unit()) r.reg_jf = regularity(free_resolution(j));
      p.reg_jf = r.reg_jf;
      r.bound = shiffman_beta(p, betti);
      break;
    }
    case Theorem::CommonDegree:
      r.bound = common_degree_bound(p, vd.cohen_macaulay);
      if (inst.options.c_infinity) r.bound.note = "conditional on c_infinity";
      break;
    case Theorem::BrianconSkoda:
      r.bound = briancon_skoda_bound(p);
      break;
  }
  r.target_in_ideal = target_in_ideal(inst);
  r.guaranteed = r.hypotheses.guaranteed() && r.target_in_ideal;
  return r;
}

}  // namespace

TheoremResult evaluate_theorem_bound(const ProblemInstance& inst, Theorem theorem) {
  return evaluate(inst, theorem, analyze_variety(inst));
}

TheoremResult solve_with_theorem(const ProblemInstance& inst, Theorem theorem) {
  TheoremResult r = evaluate(inst, theorem, analyze_variety(inst));
  if (r.bound.rho > max_degree_cap()) {
    r.outcome = {false, 0, std::nullopt};
    return r;
  }
  const int rho = static_cast<int>(r.bound.rho.get_si());
  r.outcome = DivisionSolver(inst).solve(rho);
  r.solved = true;
  r.soundness_failure = r.guaranteed && !r.outcome.feasible;
  return r;
}

}  // namespace divcert
