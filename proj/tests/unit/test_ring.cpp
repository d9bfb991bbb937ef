#include <gtest/gtest.h>

#include <random>

#include "divcert/error.hpp"
#include "divcert/ring.hpp"
#include "oracles.hpp"

using namespace divcert;

namespace {

struct Vars {
  RingPtr ring = Ring::make({"z0", "x", "y"});
  Polynomial z0 = Polynomial::variable(ring, 0);
  Polynomial x = Polynomial::variable(ring, 1);
  Polynomial y = Polynomial::variable(ring, 2);
  Polynomial one = Polynomial::constant(ring, 1);
};

}  // namespace

TEST(Monomial, DegreeDivisionAndLcm) {
  Monomial a = Monomial::variable(0, 2) * Monomial::variable(1);
  Monomial b = Monomial::variable(1, 3);
  EXPECT_EQ(a.degree(), 3);
  EXPECT_FALSE(a.divides(b));
  EXPECT_TRUE(Monomial::variable(1).divides(a));
  Monomial l = Monomial::lcm(a, b);
  EXPECT_EQ(l[0], 2);
  EXPECT_EQ(l[1], 3);
  EXPECT_EQ((l / a)[1], 2);
  EXPECT_TRUE(Monomial::variable(0).coprime(b));
}

TEST(MonomialOrder, GradedOrdersAndLex) {
  Monomial x2 = Monomial::variable(0, 2), xy = Monomial::variable(0) * Monomial::variable(1);
  Monomial y2 = Monomial::variable(1, 2), xz = Monomial::variable(0) * Monomial::variable(2);
  Monomial y3 = Monomial::variable(1, 3);
  MonomialOrder grevlex(OrderKind::GradedReverseLex), grlex(OrderKind::GradedLex), lex(OrderKind::Lex);
  EXPECT_GT(grevlex.compare(x2, xy, 3), 0);
  EXPECT_GT(grevlex.compare(y2, xz, 3), 0);  // grevlex: xz < y^2
  EXPECT_LT(grlex.compare(y2, xz, 3), 0);    // grlex: xz > y^2
  EXPECT_GT(grevlex.compare(y3, x2, 3), 0);
  EXPECT_LT(lex.compare(y3, x2, 3), 0);
  EXPECT_EQ(grevlex.compare(xy, xy, 3), 0);
}

TEST(MonomialOrder, SignificancePermutation) {
  MonomialOrder swapped(OrderKind::Lex, {1, 0});
  EXPECT_GT(swapped.compare(Monomial::variable(1), Monomial::variable(0, 5), 2), 0);
}

TEST(MonomialOrder, RefinesDivisibility) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 3);
  for (OrderKind kind : {OrderKind::GradedReverseLex, OrderKind::GradedLex, OrderKind::Lex}) {
    MonomialOrder order(kind);
    for (int t = 0; t < 300; ++t) {
      Monomial a, b;
      for (int i = 0; i < 4; ++i) {
        a.set(i, e(rng));
        b.set(i, e(rng));
      }
      Monomial ab = a * b;
      if (b.is_one()) continue;
      EXPECT_LT(order.compare(a, ab, 4), 0);
    }
  }
}

TEST(Polynomial, ArithmeticAndCanonicalForm) {
  Vars v;
  Polynomial p = (v.x + v.y) * (v.x - v.y);
  EXPECT_EQ(to_string(p), "x^2 - y^2");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((v.x * Rational(3, 2) + v.one).leading_coefficient(), Rational(3, 2));
  EXPECT_EQ(to_string(v.x * Rational(-3, 2) + v.one), "-3/2*x + 1");
  EXPECT_EQ(Polynomial(v.ring).degree(), kDegreeOfZero);
  EXPECT_EQ(to_string(Polynomial(v.ring)), "0");
}

TEST(Polynomial, RingMismatchThrows) {
  Vars v;
  RingPtr other = Ring::make({"a", "b"});
  EXPECT_THROW(v.x + Polynomial::variable(other, 0), Error);
}

TEST(Polynomial, DerivativeAndHomogeneousComponent) {
  Vars v;
  Polynomial p = pow(v.x, 3) * v.y + v.x + v.one;
  EXPECT_EQ(p.derivative(1), pow(v.x, 2) * v.y * Rational(3) + v.one);
  EXPECT_EQ(p.homogeneous_component(1), v.x);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_TRUE(p.homogeneous_component(4).is_homogeneous());
}

TEST(Homogenize, Examples) {
  Vars v;
  EXPECT_EQ(homogenize(v.x + v.one, 0, 2), v.x * v.z0 + v.z0 * v.z0);
  EXPECT_EQ(homogenize(v.x * v.x, 0, 2), v.x * v.x);
  try {
    homogenize(v.x * v.x, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooLow);
  }
  try {
    homogenize(v.z0 + v.x, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VariableClash);
  }
}

TEST(Dehomogenize, Examples) {
  Vars v;
  RingPtr affine = Ring::make({"x", "y"});
  Polynomial ax = Polynomial::variable(affine, 0);
  EXPECT_EQ(dehomogenize(v.x * v.z0 + v.z0 * v.z0, 0).in_ring(affine), ax + Polynomial::constant(affine, 1));
  EXPECT_EQ(dehomogenize(v.x * v.x, 0).in_ring(affine), ax * ax);
  EXPECT_EQ(dehomogenize(pow(v.z0, 3), 0).in_ring(affine), Polynomial::constant(affine, 1));
}

TEST(Homogenize, RoundTripAndShift) {
  RingPtr affine = Ring::make({"x", "y", "z"});
  RingPtr hring = affine->with_variable_prepended("_h0");
  Polynomial h = Polynomial::variable(hring, 0);
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    Polynomial p = oracle::random_polynomial(rng, affine, 4, 5);
    if (p.is_zero()) continue;
    for (int rho = p.degree(); rho <= p.degree() + 2; ++rho) {
      Polynomial hp = homogenize(lift_to_prepended(p, hring), 0, rho);
      EXPECT_TRUE(hp.is_homogeneous());
      EXPECT_EQ(hp.degree(), rho);
      EXPECT_EQ(dehomogenize(hp, 0).in_ring(affine), p);
      EXPECT_EQ(homogenize(lift_to_prepended(p, hring), 0, rho + 1), h * hp);
    }
  }
}

TEST(Polynomial, RingAxiomsOnRandomTriples) {
  RingPtr ring = Ring::make({"x", "y", "z"});
  std::mt19937 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    Polynomial a = oracle::random_polynomial(rng, ring, 3, 4);
    Polynomial b = oracle::random_polynomial(rng, ring, 3, 4);
    Polynomial c = oracle::random_polynomial(rng, ring, 3, 4);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(oracle::from(a * b), oracle::mul(oracle::from(a), oracle::from(b)));
  }
}

TEST(Polynomial, SubtractScaledMatchesNaive) {
  RingPtr ring = Ring::make({"x", "y"});
  std::mt19937 rng(9);
  for (int t = 0; t < 200; ++t) {
    Polynomial a = oracle::random_polynomial(rng, ring, 3, 5);
    Polynomial b = oracle::random_polynomial(rng, ring, 3, 5);
    Monomial m = Monomial::variable(1, t % 3);
    Polynomial expected = a - b.times_term(Rational(t % 5 + 1) / 2, m);
    a.subtract_scaled(Rational(t % 5 + 1) / 2, m, b);
    EXPECT_EQ(a, expected);
  }
}

TEST(Ring, PrependAndRemoveVariables) {
  RingPtr r = Ring::make({"x", "y"}, MonomialOrder(OrderKind::GradedLex));
  RingPtr h = r->with_variable_prepended("_h0");
  EXPECT_EQ(h->num_variables(), 3);
  EXPECT_EQ(h->name(0), "_h0");
  EXPECT_TRUE(same_ring(h->without_variable(0), r));
  EXPECT_EQ(*h->index_of("y"), 2);
  EXPECT_FALSE(h->index_of("q"));
}

TEST(Monomials, Counts) {
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(monomials_up_to_degree(3, 2).size(), 10u);
  EXPECT_EQ(monomials_of_degree(2, 0).size(), 1u);
}
