#pragma once

// Exact multivariate polynomials over the rationals.
//
// A Polynomial is an immutable-by-convention value: a ring handle plus a list
// of terms kept sorted in strictly decreasing monomial order with no zero
// coefficients. Rings are shared, immutable, and compared structurally, so two
// separately constructed rings with the same variables and order interoperate.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divcert {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxVariables = 16;

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min() / 4;

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int index, int power = 1);

  int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  void set(int i, int exponent);
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Bitmask of variables with positive exponent.
  std::uint32_t support() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exponents_{};
  int degree_ = 0;
};

enum class OrderKind { GradedReverseLex, GradedLex, Lex };

class MonomialOrder {
 public:
  /// `significance[k]` is the variable ranked k-th; empty means identity.
  explicit MonomialOrder(OrderKind kind = OrderKind::GradedReverseLex,
                         std::vector<int> significance = {});

  OrderKind kind() const { return kind_; }
  const std::vector<int>& significance() const { return significance_; }
  bool is_graded() const { return kind_ != OrderKind::Lex; }

  /// Three-way comparison on monomials in `num_variables` variables.
  int compare(const Monomial& a, const Monomial& b, int num_variables) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.significance_ == b.significance_;
  }

 private:
  int variable_at(int rank) const {
    return significance_.empty() ? rank : significance_[static_cast<std::size_t>(rank)];
  }

  OrderKind kind_;
  std::vector<int> significance_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr make(std::vector<std::string> names, MonomialOrder order = MonomialOrder{});

  int num_variables() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;
  const MonomialOrder& order() const { return order_; }

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, num_variables());
  }

  RingPtr with_order(MonomialOrder order) const;
  /// New ring with `name` inserted as variable 0; other indices shift by one.
  RingPtr with_variable_prepended(const std::string& name) const;
  /// New ring with `name` appended as the last variable.
  RingPtr with_variable_appended(const std::string& name) const;
  RingPtr without_variable(int index) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  Ring(std::vector<std::string> names, MonomialOrder order);

  std::vector<std::string> names_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Rational coefficient;
};

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& value);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, const Monomial& monomial, const Rational& coefficient);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_homogeneous() const;
  /// Total degree; kDegreeOfZero for the zero polynomial.
  int degree() const;
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }
  bool uses_variable(int index) const;

  Polynomial homogeneous_component(int degree) const;
  Polynomial derivative(int index) const;
  /// Same polynomial re-sorted in `target`, which must have the same variables.
  Polynomial in_ring(RingPtr target) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  /// coefficient * monomial * this
  Polynomial times_term(const Rational& coefficient, const Monomial& monomial) const;
  /// this -= coefficient * monomial * other, in one merge pass.
  void subtract_scaled(const Rational& coefficient, const Monomial& monomial, const Polynomial& other);
  /// Removes and returns the leading term.
  Term pop_leading();
  void push_trailing(Term term);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& base, int exponent);

/// Multiplies `P` by z_h^(rho - deg P) after homogenizing it to its own degree.
/// `h` must be a variable of P's ring that P does not use.
Polynomial homogenize(const Polynomial& p, int h, int rho);

/// Sets z_h = 1 and drops the variable from the ring.
Polynomial dehomogenize(const Polynomial& p, int h);

/// Maps a polynomial into `target` sending variable i to `variable_map[i]`.
Polynomial embed(const Polynomial& p, const RingPtr& target, const std::vector<int>& variable_map);

/// Embeds into `target` = ring.with_variable_prepended(...), i.e. index i -> i + 1.
Polynomial lift_to_prepended(const Polynomial& p, const RingPtr& target);

/// Serialization in the input grammar with terms in graded reverse lex order.
std::string to_string(const Polynomial& p);
std::string to_string(const Rational& q);

/// Monomial basis of the degree-`degree` piece (or all degrees <= `degree`).
std::vector<Monomial> monomials_of_degree(int num_variables, int degree);
std::vector<Monomial> monomials_up_to_degree(int num_variables, int degree);

}  // namespace divcert
