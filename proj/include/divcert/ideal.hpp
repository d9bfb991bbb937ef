#pragma once

// Ideals with a lazily computed, shared Groebner basis, and the ideal-theoretic
// predicates built on it: quotients, saturations, intersections, Krull
// dimension, Hilbert series and the associated-prime test at infinity.

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "divcert/groebner.hpp"

namespace divcert {

/// Codimension reported for the empty variety, above any real codimension.
inline constexpr int kInfiniteCodimension = 1 << 20;

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_homogeneous() const;
  bool is_zero() const { return generators_.empty(); }

  /// Reduced basis under the ring's order, computed once and shared by copies.
  const GroebnerBasis& groebner() const;
  bool is_unit() const { return groebner().is_unit(); }
  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;

  /// Ideal generated by the reduced Groebner basis elements.
  Ideal canonical() const;
  Ideal operator+(const Ideal& other) const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;  // nonzero only
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);

struct Saturation {
  Ideal ideal;
  int exponent;  // least k with (I : f^k) = (I : f^(k+1))
};

Saturation saturate(const Ideal& ideal, const Polynomial& f);

Ideal intersect(const Ideal& a, const Ideal& b);

/// I : (x_0, ..., x_N)^infinity, computed as the intersection of I : x_i^infinity.
Ideal saturate_irrelevant(const Ideal& ideal);

/// Krull dimension of S/I; -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);

/// Number of variables minus Krull dimension; kInfiniteCodimension for (1).
int codimension(const Ideal& ideal);

/// Dimension of the projective zero set of a homogeneous ideal; -1 when empty.
int projective_dimension(const Ideal& ideal);

struct HilbertData {
  std::vector<long long> numerator;  // Hilbert series = numerator(t) / (1 - t)^nvars
  int dimension = 0;                 // Krull dimension of S/I
  long long degree = 0;

  int projective_dimension() const { return dimension - 1; }
};

HilbertData hilbert_data(const Ideal& ideal);

/// Numerator of the Hilbert series of S/(monomials), by the colon recursion.
std::vector<long long> hilbert_numerator(std::vector<Monomial> monomials, int num_variables);

struct AtInfinityTest {
  bool holds = true;
  std::optional<Polynomial> witness;  // in (I_sat : z_h) but not in I_sat
  Ideal saturated;                    // I_sat
};

AtInfinityTest no_associated_component_at_infinity(const Ideal& ideal, int h);

/// Exact radical membership via the auxiliary-variable trick.
bool in_radical(const Ideal& ideal, const Polynomial& g);

}  // namespace divcert
