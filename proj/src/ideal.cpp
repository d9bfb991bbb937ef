#include "divcert/ideal.hpp"

#include <algorithm>

#include "divcert/error.hpp"

namespace divcert {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "ideal generator lives in a different ring");
    if (!g.is_zero()) generators_.push_back(g.ring() == ring_ ? std::move(g) : g.in_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    std::vector<ModuleVector> gens;
    for (const auto& g : generators_) gens.push_back({g});
    cache_->basis.emplace(module_groebner_basis(FreeModule::of_rank(ring_, 1), std::move(gens)));
  });
  return *cache_->basis;
}

bool Ideal::contains(const Polynomial& p) const {
  if (p.is_zero()) return true;
  return normal_form(p, groebner()).remainder.is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(), [this](const Polynomial& p) { return contains(p); });
}

Ideal Ideal::canonical() const { return Ideal(ring_, groebner().elements()); }

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> gens = generators_;
  for (const auto& g : other.generators_) gens.push_back(g.in_ring(ring_));
  return Ideal(ring_, std::move(gens));
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  const auto& ea = a.groebner().elements();
  const auto& eb = b.groebner().elements();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (!(ea[i] == eb[i].in_ring(a.ring_))) return false;
  return true;
}

// ------------------------------------------------------- quotient & friends

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroDivisorArgument, "quotient by the zero polynomial");
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero()) return Ideal::zero(ring);
  std::vector<ModuleVector> gens;
  gens.push_back({f.in_ring(ring)});
  for (const auto& g : ideal.generators()) gens.push_back({g});
  std::vector<Polynomial> firsts;
  for (auto& syz : syzygies(FreeModule::of_rank(ring, 1), gens))
    if (!syz[0].is_zero()) firsts.push_back(std::move(syz[0]));
  return Ideal(ring, std::move(firsts)).canonical();
}

Saturation saturate(const Ideal& ideal, const Polynomial& f) {
  Ideal current = ideal.canonical();
  int k = 0;
  while (true) {
    Ideal next = ideal_quotient(current, f);
    if (next == current) return {std::move(current), k};
    current = std::move(next);
    ++k;
  }
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  std::vector<ModuleVector> gens;
  for (const auto& g : a.generators()) gens.push_back({g});
  for (const auto& g : b.generators()) gens.push_back({g.in_ring(ring)});
  const std::size_t r = a.generators().size();
  std::vector<Polynomial> out;
  for (const auto& syz : syzygies(FreeModule::of_rank(ring, 1), gens)) {
    Polynomial p(ring);
    for (std::size_t i = 0; i < r; ++i)
      if (!syz[i].is_zero()) p += syz[i] * a.generators()[i];
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return Ideal(ring, std::move(out)).canonical();
}

Ideal saturate_irrelevant(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_zero()) return ideal;
  std::optional<Ideal> acc;
  for (int v = 0; v < ring->num_variables(); ++v) {
    Ideal piece = saturate(ideal, Polynomial::variable(ring, v)).ideal;
    acc = acc ? intersect(*acc, piece) : piece;
  }
  return acc ? *acc : ideal.canonical();
}

// --------------------------------------------------------------- dimension

namespace {

std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
  std::vector<Monomial> out;
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (const auto& m : ms) {
    bool divisible = std::any_of(out.begin(), out.end(), [&m](const Monomial& d) { return d.divides(m); });
    if (!divisible) out.push_back(m);
  }
  return out;
}

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

}  // namespace

int krull_dimension(const Ideal& ideal) {
  const int n = ideal.ring()->num_variables();
  const GroebnerBasis& gb = ideal.groebner();
  if (gb.is_unit()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : minimal_monomials(gb.leading_monomials())) supports.push_back(m.support());
  int best = 0;
  const std::uint32_t all = n == 0 ? 0u : ((1u << n) - 1u);
  for (std::uint32_t subset = 0; subset <= all; ++subset) {
    int size = popcount(subset);
    if (size <= best) {
      if (subset == all) break;
      continue;
    }
    bool independent = std::none_of(supports.begin(), supports.end(), [subset](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
    if (subset == all) break;
  }
  return best;
}

int codimension(const Ideal& ideal) {
  int d = krull_dimension(ideal);
  return d < 0 ? kInfiniteCodimension : ideal.ring()->num_variables() - d;
}

int projective_dimension(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "projective dimension needs a homogeneous ideal");
  return std::max(krull_dimension(ideal) - 1, -1);
}

// ----------------------------------------------------------------- Hilbert

namespace {

using Series = std::vector<long long>;

void add_into(Series& a, const Series& b, long long sign, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += sign * b[i];
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series numerator_of(std::vector<Monomial> gens) {
  gens = minimal_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); })) return {};
  // Pairwise coprime generators: product of (1 - t^deg).
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!gens[i].coprime(gens[j])) coprime = false;
  if (coprime) {
    Series s{1};
    for (const auto& m : gens) {
      Series next = s;
      add_into(next, s, -1, m.degree());
      s = std::move(next);
    }
    trim(s);
    return s;
  }
  Monomial last = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) colon.push_back(Monomial::lcm(m, last) / last);
  Series s = numerator_of(gens);
  add_into(s, numerator_of(std::move(colon)), -1, last.degree());
  trim(s);
  return s;
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Monomial> monomials, int) { return numerator_of(std::move(monomials)); }

HilbertData hilbert_data(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "Hilbert series needs a homogeneous ideal");
  const int n = ideal.ring()->num_variables();
  HilbertData data;
  data.numerator = numerator_of(ideal.groebner().leading_monomials());
  if (data.numerator.empty()) {
    data.dimension = -1;
    data.degree = 0;
    return data;
  }
  Series h = data.numerator;
  int k = 0;
  auto value_at_one = [](const Series& s) {
    long long v = 0;
    for (long long c : s) v += c;
    return v;
  };
  while (!h.empty() && value_at_one(h) == 0) {
    // h(t) = (1 - t) q(t): q_i = sum_{j<=i} h_j.
    Series q(h.size() - 1);
    long long run = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      run += h[i];
      q[i] = run;
    }
    h = std::move(q);
    ++k;
  }
  data.dimension = n - k;
  data.degree = value_at_one(h);
  return data;
}

// ------------------------------------------------------------ at infinity

AtInfinityTest no_associated_component_at_infinity(const Ideal& ideal, int h) {
  if (!ideal.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "at-infinity test needs a homogeneous ideal");
  if (h < 0 || h >= ideal.ring()->num_variables()) throw Error(ErrorKind::InvalidParameter, "homogenizing variable out of range");
  Ideal sat = saturate_irrelevant(ideal);
  Ideal colon = ideal_quotient(sat, Polynomial::variable(ideal.ring(), h));
  AtInfinityTest out{true, std::nullopt, sat};
  for (const auto& g : colon.generators()) {
    if (!sat.contains(g)) {
      out.holds = false;
      out.witness = g;
      break;
    }
  }
  return out;
}

bool in_radical(const Ideal& ideal, const Polynomial& g) {
  RingPtr ext = ideal.ring()->with_variable_appended("_r0");
  std::vector<int> map(static_cast<std::size_t>(ideal.ring()->num_variables()));
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  std::vector<Polynomial> gens;
  for (const auto& p : ideal.generators()) gens.push_back(embed(p, ext, map));
  Polynomial t = Polynomial::variable(ext, ext->num_variables() - 1);
  gens.push_back(Polynomial::constant(ext, 1) - t * embed(g, ext, map));
  return Ideal(ext, std::move(gens)).is_unit();
}

}  // namespace divcert
