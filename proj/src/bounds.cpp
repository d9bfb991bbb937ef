#include "divcert/bounds.hpp"

#include <algorithm>

#include "divcert/error.hpp"

namespace divcert {

namespace {

Integer power(long long base, unsigned long exponent) {
  Integer out;
  Integer b(static_cast<long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

Integer max_of(const Integer& a, const Integer& b) { return a < b ? b : a; }

Integer leading_degree_sum(const BoundParams& p, int count) {
  Integer s = 0;
  for (int j = 0; j < count; ++j) s += p.degrees[static_cast<std::size_t>(j)];
  return s;
}

}  // namespace

Integer CInfinity::power_of(int d) const {
  if (!finite_) return 0;
  return power(d, static_cast<unsigned long>(value_));
}

std::string CInfinity::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

void BoundParams::validate() const {
  for (std::size_t j = 1; j < degrees.size(); ++j)
    if (degrees[j - 1] < degrees[j]) throw Error(ErrorKind::InvalidParameter, "degrees must be sorted descending");
  if (reg_x < 1) throw Error(ErrorKind::InvalidParameter, "reg X must be at least 1");
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "dimension must be non-negative");
}

Integer hermann_bound(int d, int N) {
  if (d < 1 || N < 1) throw Error(ErrorKind::InvalidParameter, "hermann_bound needs d >= 1 and N >= 1");
  if (N > 24) throw Error(ErrorKind::InvalidParameter, "hermann_bound exponent too large to materialize");
  return 2 * power(2LL * d, (1UL << N) - 1);
}

BoundReport macaulay_bound(const BoundParams& p) {
  p.validate();
  const int k = std::min(p.m(), p.n + 1);
  Integer second = leading_degree_sum(p, k) - k + p.reg_x;
  return {"1.1", max_of(p.deg_phi, second), "max(deg Phi, d_1+...+d_k - k + reg X), k = min(m, n+1)", p, ""};
}

BoundReport noether_bound(const BoundParams& p, bool cohen_macaulay) {
  p.validate();
  if (p.m() > p.n) throw Error(ErrorKind::InvalidParameter, "Noether-type bound needs m <= n");
  if (cohen_macaulay) return {"1.2", Integer(p.deg_phi), "deg Phi (X Cohen-Macaulay)", p, ""};
  Integer second = leading_degree_sum(p, p.m()) - p.m() + p.reg_x;
  return {"1.2", max_of(p.deg_phi, second), "max(deg Phi, d_1+...+d_m - m + reg X)", p, ""};
}

BoundReport shiffman_beta(const BoundParams& p, const BettiTable& betti) {
  const int top = p.ambient + 1;
  Integer beta = 0;
  if (betti.length() >= top) {
    const auto& tw = betti.twists[static_cast<std::size_t>(top)];
    beta = *std::max_element(tw.begin(), tw.end()) - p.ambient;
  }
  return {"1.4", max_of(p.deg_phi, beta), "max(deg Phi, beta), beta = max_i d_{N+1}^i - N (0 if shorter)", p,
          "beta = " + beta.get_str()};
}

BoundReport shiffman_beta(const BoundParams& p) {
  if (!p.reg_jf) throw Error(ErrorKind::InsufficientData, "beta needs a Betti table or reg J_f");
  Integer beta = *p.reg_jf;
  return {"1.4", max_of(p.deg_phi, beta), "max(deg Phi, reg J_f) (V = C^N)", p, "beta = " + beta.get_str()};
}

BoundReport shiffman_beta_cohen_macaulay(const BoundParams& p, int reg_jf_hat) {
  Integer beta = Integer(reg_jf_hat) + p.reg_x - 1;
  return {"1.4", max_of(p.deg_phi, beta), "max(deg Phi, reg J_f + reg X - 1)", p, "beta = " + beta.get_str()};
}

namespace {

void check_common_degree(const BoundParams& p) {
  p.validate();
  if (!p.degrees.empty() && p.d < p.degrees.front())
    throw Error(ErrorKind::InvalidParameter, "common degree d is below max deg F_j");
  if (!p.c_infinity.is_minus_infinity() && (p.c_infinity.value() < 0 || p.c_infinity.value() > p.mu()))
    throw Error(ErrorKind::InvalidParameter, "c_infinity must lie in [0, min(m, n)] or be -inf");
}

Integer smooth_part(const BoundParams& p) { return Integer(p.d - 1) * std::min(p.m(), p.n + 1) + p.reg_x; }

}  // namespace

BoundReport common_degree_bound(const BoundParams& p, bool cohen_macaulay) {
  check_common_degree(p);
  Integer dc = p.c_infinity.power_of(p.d);
  if (cohen_macaulay && p.m() <= p.n) {
    Integer rho = Integer(p.deg_phi) + Integer(p.m()) * dc * Integer(static_cast<long>(p.deg_x));
    return {"1.5", rho, "deg Phi + m d^c deg X (locally Cohen-Macaulay, m <= n)", p, ""};
  }
  Integer first = Integer(p.deg_phi) + Integer(p.mu()) * dc * Integer(static_cast<long>(p.deg_x));
  return {"1.5", max_of(first, smooth_part(p)), "max(deg Phi + mu d^c deg X, (d-1) min(m, n+1) + reg X)", p, ""};
}

BoundReport briancon_skoda_bound(const BoundParams& p) {
  check_common_degree(p);
  if (!p.mu_0) throw Error(ErrorKind::InsufficientData, "the Briancon-Skoda bound needs mu_0");
  Integer dc = p.c_infinity.power_of(p.d);
  Integer first = Integer(p.deg_phi) + Integer(p.mu() + *p.mu_0) * dc * Integer(static_cast<long>(p.deg_x));
  return {"BS", max_of(first, smooth_part(p)), "max(deg Phi + (mu + mu_0) d^c deg X, (d-1) min(m, n+1) + reg X)", p,
          "conditional on mu_0"};
}

std::vector<RegularityBound> regularity_upper_bounds(int n, int N, long long deg_x, bool smooth, bool cohen_macaulay) {
  if (deg_x < 1) throw Error(ErrorKind::InvalidParameter, "deg X must be positive");
  std::vector<RegularityBound> out;
  out.push_back({"mumford", Integer(n + 1) * Integer(static_cast<long>(deg_x - 1)) + 1, smooth, "X smooth"});
  Integer cm = Integer(static_cast<long>(deg_x)) - (N - n);
  out.push_back({"cohen-macaulay", max_of(cm, 1), cohen_macaulay,
                 "X Cohen-Macaulay and N minimal (nondegenerate embedding)"});
  out.push_back({"linear", 1, deg_x == 1, "deg X = 1: X is a linear space, reg X = 1 exactly"});
  return out;
}

Integer multiplicity_bound(int d, int codim_z, long long deg_x) {
  if (d < 1 || codim_z < 0 || deg_x < 1) throw Error(ErrorKind::InvalidParameter, "multiplicity_bound needs positive inputs");
  return power(d, static_cast<unsigned long>(codim_z)) * Integer(static_cast<long>(deg_x));
}

}  // namespace divcert
