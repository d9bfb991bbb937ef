#pragma once

// Evaluators for the degree bounds on deg(F_j Q_j). All arithmetic is in
// arbitrary precision; nothing here touches polynomials.

#include <optional>
#include <string>
#include <vector>

#include "divcert/resolution.hpp"
#include "divcert/ring.hpp"

namespace divcert {

/// Maximal codimension of the distinguished varieties at infinity, or -infinity
/// when there are none; d^(-infinity) is taken to be 0.
class CInfinity {
 public:
  static CInfinity minus_infinity() { return CInfinity(); }
  static CInfinity of(int value) {
    CInfinity c;
    c.finite_ = true;
    c.value_ = value;
    return c;
  }

  bool is_minus_infinity() const { return !finite_; }
  int value() const { return value_; }
  /// d^c, with d^(-infinity) = 0.
  Integer power_of(int d) const;
  std::string to_string() const;

  friend bool operator==(const CInfinity& a, const CInfinity& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

 private:
  CInfinity() = default;
  bool finite_ = false;
  int value_ = 0;
};

struct BoundParams {
  int deg_phi = 0;
  std::vector<int> degrees;  // d_1 >= ... >= d_m
  int n = 0;                 // dim V
  int ambient = 0;           // N
  int reg_x = 1;
  std::optional<int> reg_jf;
  int d = 0;                 // common degree for the common-degree bounds
  long long deg_x = 1;
  CInfinity c_infinity = CInfinity::minus_infinity();
  std::optional<int> mu_0;

  int m() const { return static_cast<int>(degrees.size()); }
  int mu() const { return std::min(m(), n); }
  void validate() const;
};

struct BoundReport {
  std::string theorem;
  Integer rho;
  std::string formula;
  BoundParams inputs;
  std::string note;
};

Integer hermann_bound(int d, int N);

BoundReport macaulay_bound(const BoundParams& p);
BoundReport noether_bound(const BoundParams& p, bool cohen_macaulay);

/// beta := max_i d_{N+1}^i - N when the resolution of S/J reaches level N+1,
/// else 0; the Betti table is of S/J in the N+1 homogeneous variables.
BoundReport shiffman_beta(const BoundParams& p, const BettiTable& betti);
/// V = C^N: beta = reg J_f (requires p.reg_jf).
BoundReport shiffman_beta(const BoundParams& p);
/// Both J_f and J_X Cohen-Macaulay with transversal BEF loci: beta = reg J_f + reg X - 1.
BoundReport shiffman_beta_cohen_macaulay(const BoundParams& p, int reg_jf_hat);

BoundReport common_degree_bound(const BoundParams& p, bool cohen_macaulay);
BoundReport briancon_skoda_bound(const BoundParams& p);

struct RegularityBound {
  std::string name;
  Integer value;
  bool applicable;
  std::string note;
};

std::vector<RegularityBound> regularity_upper_bounds(int n, int N, long long deg_x, bool smooth, bool cohen_macaulay);

Integer multiplicity_bound(int d, int codim_z, long long deg_x);

}  // namespace divcert
