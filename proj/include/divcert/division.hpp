#pragma once

// Degree-bounded division on V:
//
//   F_1 Q_1 + ... + F_m Q_m + G_1 Q'_1 + ... + G_r Q'_r = Phi,
//   deg(F_j Q_j) <= rho,  deg(G_k Q'_k) <= rho,
//
// decided by homogenizing everything (Phi to degree rho) and testing
// membership in the homogeneous ideal. The G_k are the reduced graded basis
// of I_V, whose homogenizations generate the projective closure.

#include <optional>
#include <string>
#include <vector>

#include "divcert/bounds.hpp"
#include "divcert/hypotheses.hpp"

namespace divcert {

struct Certificate {
  std::vector<Polynomial> quotients;            // Q_j, aligned with inst.generators
  std::vector<Polynomial> variety_multipliers;  // Q'_k
  std::vector<Polynomial> variety_generators;   // G_k
  int rho = 0;
  bool verified = false;
};

struct SolveOutcome {
  bool feasible = false;
  int rho = 0;
  std::optional<Certificate> certificate;
};

/// Global degree safety cap: DIVCERT_MAX_DEGREE, default 30.
int max_degree_cap();

/// Holds the homogenized generators and their Groebner basis across degrees.
class DivisionSolver {
 public:
  explicit DivisionSolver(const ProblemInstance& inst);

  const ProblemInstance& instance() const { return inst_; }
  const std::vector<Polynomial>& variety_generators() const { return variety_gens_; }

  /// Normal form path.
  SolveOutcome solve(int rho) const;
  /// Dense linear algebra over the monomials of degree <= rho.
  SolveOutcome solve_dense(int rho) const;

 private:
  void check_degree(int rho) const;
  Certificate finish(std::vector<Polynomial> all, int rho) const;

  ProblemInstance inst_;
  std::vector<Polynomial> variety_gens_;
  RingPtr hring_;
  std::vector<Polynomial> homogeneous_;  // f^_1..f^_m, g^_1..g^_r
  Ideal ideal_;
};

enum class SolvePath { Groebner, Dense };

SolveOutcome solve_at_degree(const ProblemInstance& inst, int rho, SolvePath path = SolvePath::Groebner);

/// Default search cap: deg Phi + 20.
int default_cap(const ProblemInstance& inst);

struct MinimalDegree {
  int degree;
  Certificate certificate;
};

MinimalDegree minimal_feasible_degree(const ProblemInstance& inst, int cap);

/// Bit-exact identity and degree check; sets cert.verified.
bool verify_certificate(const ProblemInstance& inst, Certificate& cert);

struct TheoremResult {
  HypothesisReport hypotheses;
  BoundReport bound;
  SolveOutcome outcome;
  bool solved = false;            // false when rho exceeds the safety cap
  bool target_in_ideal = false;
  bool guaranteed = false;        // all hypotheses verified or user-asserted, and Phi in the ideal
  bool soundness_failure = false; // guaranteed yet infeasible at the bound
  int reg_x = 1;
  std::optional<int> reg_jf;
};

TheoremResult solve_with_theorem(const ProblemInstance& inst, Theorem theorem);

/// The bound only, with the same hypothesis report; no solving.
TheoremResult evaluate_theorem_bound(const ProblemInstance& inst, Theorem theorem);

}  // namespace divcert
