#include <gtest/gtest.h>

#include <random>

#include "divcert/bounds.hpp"
#include "divcert/error.hpp"

using namespace divcert;

namespace {

BoundParams params(int deg_phi, std::vector<int> degrees, int n, int reg_x) {
  BoundParams p;
  p.deg_phi = deg_phi;
  p.degrees = std::move(degrees);
  p.n = n;
  p.ambient = n;
  p.reg_x = reg_x;
  p.d = p.degrees.empty() ? 1 : p.degrees.front();
  return p;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::Syntax;
}

}  // namespace

TEST(Hermann, Values) {
  EXPECT_EQ(hermann_bound(2, 2), 128);
  EXPECT_EQ(hermann_bound(1, 1), 4);
  EXPECT_EQ(hermann_bound(3, 3), 559872);
  EXPECT_EQ(kind_of([] { hermann_bound(0, 2); }), ErrorKind::InvalidParameter);
}

TEST(Macaulay, Values) {
  EXPECT_EQ(macaulay_bound(params(0, {2, 2, 1}, 2, 1)).rho, 3);
  EXPECT_EQ(macaulay_bound(params(10, {2, 2, 1}, 2, 1)).rho, 10);
  EXPECT_EQ(macaulay_bound(params(0, {3, 2, 2}, 2, 4)).rho, 8);
  // m < n + 1 truncates the sum at m
  EXPECT_EQ(macaulay_bound(params(0, {3, 3}, 4, 1)).rho, 5);
}

TEST(Noether, Values) {
  EXPECT_EQ(noether_bound(params(2, {1, 1}, 2, 1), true).rho, 2);
  EXPECT_EQ(noether_bound(params(0, {3, 2}, 2, 2), false).rho, 5);
  EXPECT_EQ(kind_of([] { noether_bound(params(0, {1, 1, 1}, 2, 1), false); }), ErrorKind::InvalidParameter);
  // Cohen-Macaulay form ignores the degrees and reg X.
  EXPECT_EQ(noether_bound(params(4, {9, 9}, 3, 7), true).rho, 4);
}

TEST(Shiffman, Values) {
  BoundParams p = params(3, {2, 2}, 2, 1);
  BettiTable short_table{{{0}, {2, 2}, {4}}};
  EXPECT_EQ(shiffman_beta(p, short_table).rho, 3);  // length 2 <= N = 2
  BettiTable long_table{{{0}, {1, 1, 1}, {2, 2, 2}, {3, 7}}};
  EXPECT_EQ(shiffman_beta(p, long_table).rho, 5);  // 7 - 2
  p.reg_jf = 5;
  EXPECT_EQ(shiffman_beta(p).rho, 5);
  p.reg_jf.reset();
  EXPECT_EQ(kind_of([&] { shiffman_beta(p); }), ErrorKind::InsufficientData);
  BoundParams q = params(0, {1}, 1, 2);
  EXPECT_EQ(shiffman_beta_cohen_macaulay(q, 3).rho, 4);
}

TEST(CommonDegree, Values) {
  BoundParams p = params(4, {3, 3}, 2, 1);
  p.d = 3;
  p.c_infinity = CInfinity::of(1);
  p.deg_x = 2;
  EXPECT_EQ(common_degree_bound(p, false).rho, 16);
  p.c_infinity = CInfinity::minus_infinity();
  p.deg_x = 1;
  EXPECT_EQ(common_degree_bound(p, false).rho, 5);
  BoundParams j = params(0, {3, 3}, 2, 1);
  j.d = 3;
  j.c_infinity = CInfinity::of(2);
  EXPECT_EQ(common_degree_bound(j, false).rho, 18);
  j.c_infinity = CInfinity::of(3);
  EXPECT_EQ(kind_of([&] { common_degree_bound(j, false); }), ErrorKind::InvalidParameter);
  j.c_infinity = CInfinity::of(0);
  j.d = 2;
  EXPECT_EQ(kind_of([&] { common_degree_bound(j, false); }), ErrorKind::InvalidParameter);
}

TEST(CommonDegree, CohenMacaulayForm) {
  BoundParams p = params(2, {2, 2}, 3, 1);
  p.d = 2;
  p.c_infinity = CInfinity::of(1);
  p.deg_x = 3;
  EXPECT_EQ(common_degree_bound(p, true).rho, 2 + 2 * 2 * 3);
}

TEST(BrianconSkoda, Values) {
  BoundParams p = params(2, {2}, 1, 1);
  p.d = 2;
  p.c_infinity = CInfinity::of(1);
  p.deg_x = 3;
  p.mu_0 = 1;
  EXPECT_EQ(briancon_skoda_bound(p).rho, 14);
  p.c_infinity = CInfinity::minus_infinity();
  EXPECT_EQ(briancon_skoda_bound(p).rho, std::max(2, (2 - 1) * 1 + 1));
  p.mu_0.reset();
  EXPECT_EQ(kind_of([&] { briancon_skoda_bound(p); }), ErrorKind::InsufficientData);
}

TEST(RegularityBounds, Values) {
  auto smooth = regularity_upper_bounds(1, 3, 3, true, true);
  ASSERT_EQ(smooth.size(), 3u);
  EXPECT_EQ(smooth[0].value, 5);
  EXPECT_TRUE(smooth[0].applicable);
  EXPECT_EQ(smooth[1].value, 1);
  EXPECT_FALSE(smooth[1].note.empty());
  auto plane = regularity_upper_bounds(2, 2, 1, true, true);
  EXPECT_TRUE(plane[2].applicable);
  EXPECT_EQ(plane[2].value, 1);
  EXPECT_EQ(plane[0].value, 1);
}

TEST(Multiplicity, Values) {
  EXPECT_EQ(multiplicity_bound(3, 2, 2), 18);
  EXPECT_EQ(multiplicity_bound(1, 1, 1), 1);
  EXPECT_EQ(multiplicity_bound(2, 0, 5), 5);
}

TEST(BoundProperties, MaxFormAtLeastDegPhiAndMonotone) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> small(0, 5), deg(1, 4), m(1, 4), n(1, 4);
  for (int t = 0; t < 300; ++t) {
    std::vector<int> d(static_cast<std::size_t>(m(rng)));
    for (auto& x : d) x = deg(rng);
    std::sort(d.rbegin(), d.rend());
    BoundParams p = params(small(rng), d, n(rng), 1 + small(rng));
    p.d = d.front() + small(rng) % 2;
    p.deg_x = 1 + small(rng);
    p.c_infinity = small(rng) % 2 ? CInfinity::minus_infinity() : CInfinity::of(small(rng) % (p.mu() + 1));
    p.mu_0 = small(rng);
    EXPECT_GE(macaulay_bound(p).rho, p.deg_phi);
    EXPECT_GE(common_degree_bound(p, false).rho, p.deg_phi);
    EXPECT_GE(briancon_skoda_bound(p).rho, p.deg_phi);
    if (p.m() <= p.n) EXPECT_GE(noether_bound(p, false).rho, p.deg_phi);

    BoundParams q = p;
    q.deg_phi += 1;
    q.reg_x += 1;
    q.deg_x += 1;
    q.degrees.front() += 1;
    q.d = std::max(q.d, q.degrees.front());
    EXPECT_GE(macaulay_bound(q).rho, macaulay_bound(p).rho);
    EXPECT_GE(common_degree_bound(q, false).rho, common_degree_bound(p, false).rho);
  }
}
