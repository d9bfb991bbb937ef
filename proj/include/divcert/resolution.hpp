#pragma once

// Minimal graded free resolutions of S/I and the invariants read off them.
//
//   0 <- S <- F_1 <- F_2 <- ... <- F_L <- 0,   F_k = sum_i S(-d_k^i)
//
// maps[k-1] is the matrix of F_k -> F_{k-1}; its column twists are the d_k^i.

#include <string>
#include <vector>

#include "divcert/ideal.hpp"
#include "divcert/kernels.hpp"

namespace divcert {

struct GradedMatrix {
  RingPtr ring;
  std::vector<int> row_twists;
  std::vector<int> column_twists;
  PolynomialMatrix entries;  // [row][column]

  std::size_t rows() const { return row_twists.size(); }
  std::size_t cols() const { return column_twists.size(); }
  ModuleVector column(std::size_t j) const;
  bool is_graded() const;
  bool has_unit_entry() const;
};

/// Product a * b; throws RingMismatch on dimension mismatch.
PolynomialMatrix multiply(const GradedMatrix& a, const GradedMatrix& b);

struct FreeResolution {
  RingPtr ring;
  std::vector<GradedMatrix> maps;
  bool minimal = false;

  int length() const { return static_cast<int>(maps.size()); }
  /// Ranks of F_0, ..., F_L.
  std::vector<int> ranks() const;
};

struct BettiTable {
  std::vector<std::vector<int>> twists;  // level k -> sorted d_k^i; level 0 is {0}

  int length() const { return static_cast<int>(twists.size()) - 1; }
  /// Graded Betti number beta_{k, j}: multiplicity of twist j at level k.
  int betti(int level, int degree) const;
  /// Macaulay-style table: rows are j - k, columns are k.
  std::string to_string() const;
};

FreeResolution free_resolution(const Ideal& ideal);
BettiTable betti_table(const FreeResolution& resolution);

/// Regularity of the ideal: max_{k>=1,i} (d_k^i - k) + 1; 1 for the zero ideal.
int regularity(const FreeResolution& resolution);

bool is_cohen_macaulay(const Ideal& ideal);

/// Expected ranks r_1..r_L (index 0 is r_1), by alternating sums of free ranks.
std::vector<int> expected_ranks(const FreeResolution& resolution);

/// For k = 1..L, I + (r_k x r_k minors of the k-th map). Index 0 is level 1.
std::vector<Ideal> bef_loci(const Ideal& ideal);
std::vector<Ideal> bef_loci(const Ideal& ideal, const FreeResolution& resolution);

/// Jacobian criterion: J_X + (c x c minors of the Jacobian of its generators),
/// saturated by the irrelevant ideal.
Ideal singular_locus(const Ideal& variety_ideal, int codim);

/// X^0, X^1, ..., X^{n-1} (at least X^0) for X = V(J_X) of dimension n.
std::vector<Ideal> intrinsic_bef(const Ideal& variety_ideal, int n);

/// True when the homogeneous ideal cuts out nothing in projective space.
bool is_projectively_empty(const Ideal& ideal);

}  // namespace divcert
