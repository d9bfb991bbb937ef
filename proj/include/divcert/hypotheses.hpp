#pragma once

// Problem instances and executable checks of the preconditions behind each
// degree bound. Affine data lives in C^N with coordinates x_1..x_N; all
// projective work happens in the ring with the homogenizing variable `_h0`
// prepended as variable 0.

#include <optional>
#include <string>
#include <vector>

#include "divcert/bounds.hpp"
#include "divcert/ideal.hpp"
#include "divcert/resolution.hpp"

namespace divcert {

inline constexpr const char* kHomogenizingVariable = "_h0";

struct InstanceOptions {
  std::optional<CInfinity> c_infinity;
  std::optional<int> mu_0;
  bool assert_smooth = false;
  bool assert_pure = false;
};

struct ProblemInstance {
  RingPtr ring;                          // affine coordinates
  std::vector<Polynomial> variety;       // generators of I_V; empty for V = C^N
  std::vector<Polynomial> generators;    // F_1..F_m, degrees descending
  std::vector<std::size_t> permutation;  // generators[k] is input generator permutation[k]
  Polynomial target;
  InstanceOptions options;

  int ambient() const { return ring->num_variables(); }
  int m() const { return static_cast<int>(generators.size()); }
  std::vector<int> degrees() const;
  int max_degree() const;
};

/// Validates and stable-sorts the generators by descending degree.
ProblemInstance make_instance(RingPtr ring, std::vector<Polynomial> variety, std::vector<Polynomial> generators,
                              Polynomial target, InstanceOptions options = {});

/// Everything derived from V alone.
struct VarietyData {
  RingPtr projective_ring;
  std::vector<Polynomial> affine_basis;  // reduced graded basis of I_V: the G_k of certificates
  Ideal closure;                         // J_X, generated by the homogenized affine basis
  int dimension = 0;                     // n = dim V
  long long degree = 1;                  // deg X
  int regularity = 1;                    // reg X
  bool cohen_macaulay = true;
  FreeResolution resolution;
};

VarietyData analyze_variety(const ProblemInstance& inst);

/// F_j homogenized to their own degrees (or all to `common_degree`) in the projective ring.
std::vector<Polynomial> homogenized_generators(const ProblemInstance& inst, const RingPtr& projective_ring,
                                               std::optional<int> common_degree = std::nullopt);

enum class Theorem { Macaulay, NoetherSmooth, NoetherSingular, AssociatedVarieties, CommonDegree, BrianconSkoda };

/// External ids: 1.1, 1.2, 1.3, 1.4, 1.5, BS.
std::string theorem_id(Theorem t);
std::optional<Theorem> parse_theorem(const std::string& id);

enum class HypothesisStatus { Verified, Refuted, NotVerified, UserAsserted };
std::string to_string(HypothesisStatus s);

struct HypothesisEntry {
  std::string name;
  HypothesisStatus status;
  std::string detail;
  std::optional<Polynomial> witness;
};

struct HypothesisReport {
  std::string theorem;
  std::vector<HypothesisEntry> entries;
  std::optional<CInfinity> c_infinity;  // value the bound should use, when relevant

  bool guaranteed() const;
  bool any_refuted() const;
  const HypothesisEntry* find(const std::string& name) const;
};

HypothesisReport check_macaulay_hypothesis(const ProblemInstance& inst);
HypothesisReport check_macaulay_hypothesis(const ProblemInstance& inst, const VarietyData& vd);

/// Smooth variant checks smoothness of X; singular variant checks the
/// codimension conditions against the intrinsic BEF loci X^l.
HypothesisReport check_noether_hypothesis(const ProblemInstance& inst, Theorem variant = Theorem::NoetherSmooth);
HypothesisReport check_noether_hypothesis(const ProblemInstance& inst, const VarietyData& vd, Theorem variant);

HypothesisReport check_associated_variety_hypothesis(const ProblemInstance& inst);
HypothesisReport check_associated_variety_hypothesis(const ProblemInstance& inst, const VarietyData& vd);

HypothesisReport check_common_degree_hypothesis(const ProblemInstance& inst, int d);
HypothesisReport check_common_degree_hypothesis(const ProblemInstance& inst, const VarietyData& vd, int d);

HypothesisReport check_briancon_skoda_hypothesis(const ProblemInstance& inst);
HypothesisReport check_briancon_skoda_hypothesis(const ProblemInstance& inst, const VarietyData& vd);

HypothesisReport check_hypotheses(const ProblemInstance& inst, const VarietyData& vd, Theorem t);

/// Affine membership of the target in (F_j) + I_V.
bool target_in_ideal(const ProblemInstance& inst);

}  // namespace divcert
