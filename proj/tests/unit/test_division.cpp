#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "divcert/division.hpp"
#include "divcert/error.hpp"
#include "divcert/parser.hpp"
#include "oracles.hpp"

using namespace divcert;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::Syntax;
}

bool oracle_feasible(const ProblemInstance& inst, const std::vector<Polynomial>& variety_gens, int rho) {
  std::vector<oracle::Poly> gens;
  for (const auto& f : inst.generators) gens.push_back(oracle::from(f));
  for (const auto& g : variety_gens) gens.push_back(oracle::from(g));
  return oracle::member_at_degree(gens, oracle::from(inst.target), inst.ambient(), rho);
}

}  // namespace

TEST(SolveAtDegree, NoetherExample) {
  auto inst = parse_instance("ring x y; gens x, y; target x^2 + x*y;");
  auto out = solve_at_degree(inst, 2);
  ASSERT_TRUE(out.feasible);
  EXPECT_TRUE(out.certificate->verified);
  EXPECT_EQ(out.certificate->rho, 2);
  EXPECT_EQ(kind_of([&] { solve_at_degree(inst, 1); }), ErrorKind::DegreeTooLow);
}

TEST(SolveAtDegree, ConverseExample) {
  auto inst = parse_instance("ring x y; gens x^2, x^2 + x; target x*y;");
  EXPECT_FALSE(solve_at_degree(inst, 2).feasible);
  EXPECT_FALSE(solve_at_degree(inst, 2, SolvePath::Dense).feasible);
  auto out = solve_at_degree(inst, 3);
  ASSERT_TRUE(out.feasible);
  // x^2 comes first after sorting (both have degree 2; input order kept)
  Certificate c;
  RingPtr r = inst.ring;
  Polynomial y = Polynomial::variable(r, 1);
  c.quotients = {-y, y};
  c.rho = 3;
  EXPECT_TRUE(verify_certificate(inst, c));
  EXPECT_TRUE(c.verified);
}

TEST(SolveAtDegree, DenseAndGroebnerAgreeWithOracle) {
  std::mt19937 rng(101);
  int feasible = 0, total = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 3;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(static_cast<std::size_t>(n));
    RingPtr ring = Ring::make(names);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 1 + t % 3; ++k) {
      Polynomial g = oracle::random_polynomial(rng, ring, 2, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Polynomial phi(ring);
    for (const auto& g : gens) phi += g * oracle::random_polynomial(rng, ring, 1, 2);
    auto inst = make_instance(ring, {}, gens, phi);
    DivisionSolver solver(inst);
    const int low = phi.is_zero() ? 0 : phi.degree();
    for (int rho = low; rho <= std::min(low + 3, n == 3 ? 6 : 8); ++rho) {
      bool fast = solver.solve(rho).feasible;
      bool dense = solver.solve_dense(rho).feasible;
      bool brute = oracle_feasible(inst, {}, rho);
      EXPECT_EQ(fast, brute);
      EXPECT_EQ(dense, brute);
      feasible += brute;
      ++total;
    }
  }
  EXPECT_GT(total, 60);
  EXPECT_GT(feasible, 10);
}

TEST(SolveAtDegree, OnAVariety) {
  // parabola y = x^2; on it, y - x^2 vanishes, so x^2 is y modulo I_V
  auto inst = parse_instance("ring x y; variety y - x^2; gens y; target x^2;");
  DivisionSolver solver(inst);
  for (int rho = 2; rho <= 4; ++rho) {
    auto fast = solver.solve(rho), dense = solver.solve_dense(rho);
    EXPECT_EQ(fast.feasible, dense.feasible);
    EXPECT_EQ(fast.feasible, oracle_feasible(inst, solver.variety_generators(), rho));
    if (fast.feasible) {
      EXPECT_TRUE(fast.certificate->verified);
      EXPECT_EQ(fast.certificate->variety_generators.size(), 1u);
    }
  }
  EXPECT_TRUE(solver.solve(2).feasible);
}

TEST(SolveAtDegree, Monotone) {
  auto inst = parse_instance("ring x y; gens x^2, x^2 + x; target x*y^2;");
  DivisionSolver solver(inst);
  bool seen = false;
  for (int rho = 3; rho <= 8; ++rho) {
    bool f = solver.solve(rho).feasible;
    if (seen) EXPECT_TRUE(f);
    seen = seen || f;
  }
  EXPECT_TRUE(seen);
}

TEST(MinimalDegree, ConverseFamily) {
  for (int l = 0; l <= 5; ++l) {
    std::string text = "ring x y; gens x^2, x^2 + x; target x*y^" + std::to_string(l) + ";";
    auto inst = parse_instance(text);
    auto md = minimal_feasible_degree(inst, default_cap(inst));
    EXPECT_EQ(md.degree, l + 2);
    EXPECT_TRUE(md.certificate.verified);
    EXPECT_FALSE(oracle_feasible(inst, {}, l + 1));
    EXPECT_TRUE(oracle_feasible(inst, {}, l + 2));
  }
}

TEST(MinimalDegree, Examples) {
  auto noether = parse_instance("ring x y; gens x, y; target x^2 + x*y;");
  EXPECT_EQ(minimal_feasible_degree(noether, 10).degree, 2);
  auto unit = parse_instance("ring x y; gens x, y; target 1;");
  EXPECT_EQ(kind_of([&] { minimal_feasible_degree(unit, 10); }), ErrorKind::NotInIdeal);
  auto far = parse_instance("ring x y; gens x^2, x^2 + x; target x*y^5;");
  EXPECT_EQ(kind_of([&] { minimal_feasible_degree(far, 6); }), ErrorKind::NotFoundBelowCap);
  EXPECT_EQ(kind_of([&] { minimal_feasible_degree(far, 2); }), ErrorKind::InvalidParameter);
}

TEST(VerifyCertificate, DetectsTampering) {
  auto inst = parse_instance("ring x y; gens x^2, y; target x^2;");
  Certificate c;
  c.quotients = {Polynomial::constant(inst.ring, 1), Polynomial(inst.ring)};
  c.rho = 2;
  EXPECT_TRUE(verify_certificate(inst, c));
  c.quotients[0] = Polynomial::constant(inst.ring, 2);
  EXPECT_FALSE(verify_certificate(inst, c));
  EXPECT_FALSE(c.verified);
  c.quotients[0] = Polynomial::constant(inst.ring, 1);
  c.rho = 1;
  EXPECT_FALSE(verify_certificate(inst, c));
}

TEST(VerifyCertificate, RejectsForeignVarietyGenerators) {
  auto inst = parse_instance("ring x y; variety y; gens x; target x + y;");
  Certificate c;
  c.quotients = {Polynomial::constant(inst.ring, 1)};
  c.variety_generators = {Polynomial::variable(inst.ring, 1)};
  c.variety_multipliers = {Polynomial::constant(inst.ring, 1)};
  c.rho = 1;
  EXPECT_TRUE(verify_certificate(inst, c));
  c.variety_generators = {Polynomial::variable(inst.ring, 1) + Polynomial::constant(inst.ring, 1)};
  c.variety_multipliers = {Polynomial::constant(inst.ring, 1)};
  EXPECT_FALSE(verify_certificate(inst, c));
}

TEST(SolveWithTheorem, MacaulayPipeline) {
  auto r = solve_with_theorem(parse_instance("ring x y; gens x^2, y^2, x+y+1; target 1;"), Theorem::Macaulay);
  EXPECT_EQ(r.bound.rho, 3);
  EXPECT_TRUE(r.guaranteed);
  ASSERT_TRUE(r.outcome.feasible);
  EXPECT_TRUE(r.outcome.certificate->verified);
}

TEST(SolveWithTheorem, NoetherPipeline) {
  auto r = solve_with_theorem(parse_instance("ring x y; gens x, y; target x^2 + x*y;"), Theorem::NoetherSmooth);
  EXPECT_EQ(r.bound.rho, 2);
  EXPECT_TRUE(r.guaranteed);
  EXPECT_TRUE(r.outcome.feasible);
}

TEST(SolveWithTheorem, NoetherConverse) {
  auto r = solve_with_theorem(parse_instance("ring x y; gens x^2, x^2 + x; target x;"), Theorem::NoetherSmooth);
  EXPECT_FALSE(r.guaranteed);
  EXPECT_EQ(r.bound.rho, 1);
  EXPECT_TRUE(r.solved);
  EXPECT_FALSE(r.outcome.feasible);
  EXPECT_FALSE(r.soundness_failure);
  EXPECT_TRUE(solve_at_degree(parse_instance("ring x y; gens x^2, x^2 + x; target x;"), 2).feasible);
}

TEST(SolveWithTheorem, OtherTheorems) {
  auto inst = parse_instance("ring x y; gens x, y; target x^2 + x*y;");
  for (Theorem t : {Theorem::NoetherSingular, Theorem::AssociatedVarieties, Theorem::CommonDegree}) {
    auto r = solve_with_theorem(inst, t);
    EXPECT_TRUE(r.guaranteed) << theorem_id(t);
    EXPECT_TRUE(r.outcome.feasible) << theorem_id(t);
    EXPECT_EQ(r.bound.theorem, theorem_id(t));
  }
  EXPECT_EQ(kind_of([&] { solve_with_theorem(inst, Theorem::BrianconSkoda); }), ErrorKind::InsufficientData);
}

TEST(SafetyCap, EnvironmentOverride) {
  auto inst = parse_instance("ring x; gens x; target x;");
  setenv("DIVCERT_MAX_DEGREE", "3", 1);
  EXPECT_EQ(max_degree_cap(), 3);
  EXPECT_EQ(kind_of([&] { solve_at_degree(inst, 4); }), ErrorKind::InvalidParameter);
  unsetenv("DIVCERT_MAX_DEGREE");
  EXPECT_EQ(max_degree_cap(), 30);
  EXPECT_TRUE(solve_at_degree(inst, 4).feasible);
}
