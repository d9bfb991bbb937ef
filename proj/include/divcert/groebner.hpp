#pragma once

// Buchberger's algorithm over free modules S^r with cofactor tracking.
//
// Ideals are the rank-1 case. Every basis element carries a row of cofactors
// expressing it in the original generators, so membership answers come with
// an explicit certificate. Module elements are compared term-over-position:
// (degree + twist, ring order, lower component first). For graded ring orders
// and homogeneous input every intermediate vector stays homogeneous.

#include <vector>

#include "divcert/ring.hpp"

namespace divcert {

using ModuleVector = std::vector<Polynomial>;

class FreeModule {
 public:
  FreeModule(RingPtr ring, std::vector<int> twists);
  static FreeModule of_rank(RingPtr ring, int rank);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  int twist(int component) const { return twists_[static_cast<std::size_t>(component)]; }
  const std::vector<int>& twists() const { return twists_; }

  int compare(int comp_a, const Monomial& a, int comp_b, const Monomial& b) const;
  ModuleVector zero() const;
  ModuleVector basis_vector(int component) const;

 private:
  RingPtr ring_;
  std::vector<int> twists_;
};

struct LeadTerm {
  int component = -1;  // -1 for the zero vector
  Monomial monomial;
  Rational coefficient;
};

LeadTerm leading_term(const FreeModule& module, const ModuleVector& v);
bool is_zero(const ModuleVector& v);
/// deg(entry) + twist of the highest such sum; kDegreeOfZero for zero vectors.
int vector_degree(const FreeModule& module, const ModuleVector& v);

struct ModuleGroebnerBasis {
  FreeModule module;
  std::vector<ModuleVector> generators;
  std::vector<ModuleVector> elements;  // reduced, monic, sorted by increasing lead
  std::vector<LeadTerm> leads;
  std::vector<std::vector<Polynomial>> cofactors;  // elements[i] = sum_j cofactors[i][j] * generators[j]
};

ModuleGroebnerBasis module_groebner_basis(const FreeModule& module, std::vector<ModuleVector> generators);

struct ModuleReduction {
  ModuleVector remainder;
  std::vector<Polynomial> quotients;  // one per basis element
};

/// Full reduction: v = sum quotients[i] * elements[i] + remainder.
ModuleReduction reduce(const ModuleVector& v, const ModuleGroebnerBasis& gb);

/// Generators of the syzygies of gb.elements, as vectors in S^{#elements}.
std::vector<ModuleVector> schreyer_syzygies(const ModuleGroebnerBasis& gb);

/// Generators of the syzygies of arbitrary `generators`, as vectors in
/// S^{#generators}; built from the Schreyer syzygies of their Groebner basis.
std::vector<ModuleVector> syzygies(const FreeModule& module, const std::vector<ModuleVector>& generators);

/// Free module whose basis vectors map to `generators` (twists = their degrees).
FreeModule syzygy_source(const FreeModule& module, const std::vector<ModuleVector>& generators);

// ------------------------------------------------------------- ideal case

class GroebnerBasis {
 public:
  explicit GroebnerBasis(ModuleGroebnerBasis core);

  const RingPtr& ring() const { return core_.module.ring(); }
  const MonomialOrder& order() const { return ring()->order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  /// cofactors()[i][j]: coefficient of generator j in element i.
  const std::vector<std::vector<Polynomial>>& cofactors() const { return core_.cofactors; }
  const ModuleGroebnerBasis& core() const { return core_; }

  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;

 private:
  ModuleGroebnerBasis core_;
  std::vector<Polynomial> elements_;
  std::vector<Polynomial> generators_;
};

/// Reduced Groebner basis of the ideal generated by `generators` under `order`.
/// Generators are moved into a copy of their ring carrying `order`.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators, const MonomialOrder& order);
GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators);

struct NormalFormResult {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // one per basis element
};

NormalFormResult normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Schreyer generators of the first syzygy module of gb.elements().
std::vector<std::vector<Polynomial>> syzygy_module(const GroebnerBasis& gb);

}  // namespace divcert
