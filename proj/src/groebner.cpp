#include "divcert/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "divcert/error.hpp"

namespace divcert {

// -------------------------------------------------------------- FreeModule

FreeModule::FreeModule(RingPtr ring, std::vector<int> twists) : ring_(std::move(ring)), twists_(std::move(twists)) {}

FreeModule FreeModule::of_rank(RingPtr ring, int rank) {
  return FreeModule(std::move(ring), std::vector<int>(static_cast<std::size_t>(rank), 0));
}

int FreeModule::compare(int comp_a, const Monomial& a, int comp_b, const Monomial& b) const {
  if (ring_->order().is_graded()) {
    int da = a.degree() + twist(comp_a);
    int db = b.degree() + twist(comp_b);
    if (da != db) return da < db ? -1 : 1;
  }
  int c = ring_->compare(a, b);
  if (c != 0) return c;
  if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
  return 0;
}

ModuleVector FreeModule::zero() const { return ModuleVector(static_cast<std::size_t>(rank()), Polynomial(ring_)); }

ModuleVector FreeModule::basis_vector(int component) const {
  ModuleVector v = zero();
  v[static_cast<std::size_t>(component)] = Polynomial::constant(ring_, 1);
  return v;
}

LeadTerm leading_term(const FreeModule& module, const ModuleVector& v) {
  LeadTerm lead;
  for (int c = 0; c < static_cast<int>(v.size()); ++c) {
    const Polynomial& p = v[static_cast<std::size_t>(c)];
    if (p.is_zero()) continue;
    if (lead.component < 0 || module.compare(c, p.leading_monomial(), lead.component, lead.monomial) > 0) {
      lead.component = c;
      lead.monomial = p.leading_monomial();
    }
  }
  if (lead.component >= 0) lead.coefficient = v[static_cast<std::size_t>(lead.component)].leading_coefficient();
  return lead;
}

bool is_zero(const ModuleVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int vector_degree(const FreeModule& module, const ModuleVector& v) {
  int d = kDegreeOfZero;
  for (int c = 0; c < static_cast<int>(v.size()); ++c) {
    const Polynomial& p = v[static_cast<std::size_t>(c)];
    if (!p.is_zero()) d = std::max(d, p.degree() + module.twist(c));
  }
  return d;
}

namespace {

using Row = std::vector<Polynomial>;

Row zero_row(const RingPtr& ring, std::size_t n) { return Row(n, Polynomial(ring)); }

void scale(ModuleVector& v, const Rational& s) {
  for (auto& p : v) p *= s;
}

void subtract_row_multiple(Row& target, const Polynomial& multiplier, const Row& source) {
  if (multiplier.is_zero()) return;
  for (std::size_t j = 0; j < target.size(); ++j)
    if (!source[j].is_zero()) target[j] -= multiplier * source[j];
}

struct Workspace {
  const FreeModule& module;
  std::vector<ModuleVector> elements;
  std::vector<LeadTerm> leads;
  std::vector<Row> rows;
};

// Full reduction of v against the listed elements; quotients are indexed like
// `elements`. Elements with index == skip are not used.
ModuleReduction reduce_against(const FreeModule& module, const std::vector<ModuleVector>& elements,
                               const std::vector<LeadTerm>& leads, ModuleVector v, std::size_t skip) {
  const RingPtr& ring = module.ring();
  ModuleReduction out{module.zero(), std::vector<Polynomial>(elements.size(), Polynomial(ring))};
  std::vector<std::vector<Term>> quotient_terms(elements.size());
  while (true) {
    LeadTerm lead = leading_term(module, v);
    if (lead.component < 0) break;
    std::size_t divisor = elements.size();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (i == skip || leads[i].component != lead.component) continue;
      if (leads[i].monomial.divides(lead.monomial)) {
        divisor = i;
        break;
      }
    }
    auto& comp = v[static_cast<std::size_t>(lead.component)];
    if (divisor == elements.size()) {
      out.remainder[static_cast<std::size_t>(lead.component)].push_trailing(comp.pop_leading());
      continue;
    }
    Rational c = lead.coefficient / leads[divisor].coefficient;
    Monomial m = lead.monomial / leads[divisor].monomial;
    for (std::size_t k = 0; k < v.size(); ++k) v[k].subtract_scaled(c, m, elements[divisor][k]);
    quotient_terms[divisor].push_back({m, c});
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!quotient_terms[i].empty()) out.quotients[i] = Polynomial::from_terms(ring, std::move(quotient_terms[i]));
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

}  // namespace

ModuleGroebnerBasis module_groebner_basis(const FreeModule& module, std::vector<ModuleVector> generators) {
  const RingPtr& ring = module.ring();
  const std::size_t m = generators.size();
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != module.rank()) throw Error(ErrorKind::InvalidParameter, "vector has wrong rank");
    for (const auto& p : g)
      if (!same_ring(p.ring(), ring)) throw Error(ErrorKind::RingMismatch, "generator lives in a different ring");
  }
  const bool use_product_criterion = module.rank() == 1;

  std::vector<ModuleVector> elements;
  std::vector<LeadTerm> leads;
  std::vector<Row> rows;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto insert = [&](ModuleReduction red, Row base_row) {
    for (std::size_t k = 0; k < red.quotients.size(); ++k) subtract_row_multiple(base_row, red.quotients[k], rows[k]);
    LeadTerm lead = leading_term(module, red.remainder);
    Rational inv = 1 / lead.coefficient;
    scale(red.remainder, inv);
    for (auto& p : base_row) p *= inv;
    lead.coefficient = 1;
    const std::size_t idx = elements.size();
    for (std::size_t i = 0; i < idx; ++i) {
      if (leads[i].component != lead.component) continue;
      Monomial l = Monomial::lcm(leads[i].monomial, lead.monomial);
      pairs.push_back({i, idx, l, l.degree() + module.twist(lead.component)});
      pending.insert({i, idx});
    }
    elements.push_back(std::move(red.remainder));
    leads.push_back(std::move(lead));
    rows.push_back(std::move(base_row));
  };

  for (std::size_t g = 0; g < m; ++g) {
    if (is_zero(generators[g])) continue;
    ModuleReduction red = reduce_against(module, elements, leads, generators[g], static_cast<std::size_t>(-1));
    if (is_zero(red.remainder)) continue;
    Row row = zero_row(ring, m);
    row[g] = Polynomial::constant(ring, 1);
    insert(std::move(red), std::move(row));
  }

  while (!pairs.empty()) {
    // Normal strategy: least lcm degree, ties broken by pair index.
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    });
    Pair pair = *best;
    pairs.erase(best);
    pending.erase({pair.i, pair.j});

    if (use_product_criterion && leads[pair.i].monomial.coprime(leads[pair.j].monomial)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < elements.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j || leads[k].component != leads[pair.i].component) continue;
      if (!leads[k].monomial.divides(pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!pending.count(key(pair.i, k)) && !pending.count(key(pair.j, k))) chain = true;
    }
    if (chain) continue;

    Monomial mi = pair.lcm / leads[pair.i].monomial;
    Monomial mj = pair.lcm / leads[pair.j].monomial;
    ModuleVector s = module.zero();
    for (std::size_t k = 0; k < s.size(); ++k) {
      s[k] = elements[pair.i][k].times_term(1, mi);
      s[k].subtract_scaled(1, mj, elements[pair.j][k]);
    }
    Row row = zero_row(ring, m);
    for (std::size_t k = 0; k < m; ++k) {
      row[k] = rows[pair.i][k].times_term(1, mi);
      row[k].subtract_scaled(1, mj, rows[pair.j][k]);
    }
    ModuleReduction red = reduce_against(module, elements, leads, std::move(s), static_cast<std::size_t>(-1));
    if (is_zero(red.remainder)) continue;
    insert(std::move(red), std::move(row));
  }

  // Minimalize: drop elements whose lead is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < elements.size() && !redundant; ++j) {
      if (i == j || leads[j].component != leads[i].component) continue;
      if (!leads[j].monomial.divides(leads[i].monomial)) continue;
      if (!(leads[j].monomial == leads[i].monomial) || j < i) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<ModuleVector> min_elements;
  std::vector<LeadTerm> min_leads;
  std::vector<Row> min_rows;
  for (std::size_t i : keep) {
    min_elements.push_back(std::move(elements[i]));
    min_leads.push_back(std::move(leads[i]));
    min_rows.push_back(std::move(rows[i]));
  }

  // Interreduce tails.
  for (std::size_t i = 0; i < min_elements.size(); ++i) {
    ModuleReduction red = reduce_against(module, min_elements, min_leads, min_elements[i], i);
    for (std::size_t k = 0; k < red.quotients.size(); ++k) subtract_row_multiple(min_rows[i], red.quotients[k], min_rows[k]);
    min_elements[i] = std::move(red.remainder);
  }

  std::vector<std::size_t> order(min_elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return module.compare(min_leads[a].component, min_leads[a].monomial, min_leads[b].component, min_leads[b].monomial) < 0;
  });

  ModuleGroebnerBasis gb{module, std::move(generators), {}, {}, {}};
  for (std::size_t i : order) {
    gb.elements.push_back(std::move(min_elements[i]));
    gb.leads.push_back(std::move(min_leads[i]));
    gb.cofactors.push_back(std::move(min_rows[i]));
  }
  return gb;
}

ModuleReduction reduce(const ModuleVector& v, const ModuleGroebnerBasis& gb) {
  return reduce_against(gb.module, gb.elements, gb.leads, v, static_cast<std::size_t>(-1));
}

std::vector<ModuleVector> schreyer_syzygies(const ModuleGroebnerBasis& gb) {
  const RingPtr& ring = gb.module.ring();
  const std::size_t n = gb.elements.size();
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gb.leads[i].component != gb.leads[j].component) continue;
      Monomial l = Monomial::lcm(gb.leads[i].monomial, gb.leads[j].monomial);
      Monomial mi = l / gb.leads[i].monomial;
      Monomial mj = l / gb.leads[j].monomial;
      Rational ci = 1 / gb.leads[i].coefficient;
      Rational cj = 1 / gb.leads[j].coefficient;
      ModuleVector s = gb.module.zero();
      for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] = gb.elements[i][k].times_term(ci, mi);
        s[k].subtract_scaled(cj, mj, gb.elements[j][k]);
      }
      ModuleReduction red = reduce(s, gb);
      if (!is_zero(red.remainder)) throw std::logic_error("S-vector of a Groebner basis did not reduce to zero");
      ModuleVector syz(n, Polynomial(ring));
      for (std::size_t k = 0; k < n; ++k) syz[k] = -red.quotients[k];
      syz[i] += Polynomial::term(ring, mi, ci);
      syz[j] -= Polynomial::term(ring, mj, cj);
      out.push_back(std::move(syz));
    }
  }
  return out;
}

FreeModule syzygy_source(const FreeModule& module, const std::vector<ModuleVector>& generators) {
  std::vector<int> twists;
  twists.reserve(generators.size());
  for (const auto& g : generators) {
    int d = vector_degree(module, g);
    twists.push_back(d == kDegreeOfZero ? 0 : d);
  }
  return FreeModule(module.ring(), std::move(twists));
}

std::vector<ModuleVector> syzygies(const FreeModule& module, const std::vector<ModuleVector>& generators) {
  const RingPtr& ring = module.ring();
  const std::size_t m = generators.size();
  ModuleGroebnerBasis gb = module_groebner_basis(module, generators);
  std::vector<ModuleVector> out;
  auto push = [&](ModuleVector v) {
    if (!is_zero(v)) out.push_back(std::move(v));
  };
  for (const auto& sigma : schreyer_syzygies(gb)) {
    ModuleVector tau(m, Polynomial(ring));
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!gb.cofactors[i][j].is_zero()) tau[j] += sigma[i] * gb.cofactors[i][j];
    }
    push(std::move(tau));
  }
  for (std::size_t g = 0; g < m; ++g) {
    ModuleReduction red = reduce(generators[g], gb);
    if (!is_zero(red.remainder)) throw std::logic_error("generator does not reduce to zero modulo its own basis");
    ModuleVector tau(m, Polynomial(ring));
    tau[g] = Polynomial::constant(ring, 1);
    for (std::size_t k = 0; k < red.quotients.size(); ++k) {
      if (red.quotients[k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!gb.cofactors[k][j].is_zero()) tau[j] -= red.quotients[k] * gb.cofactors[k][j];
    }
    push(std::move(tau));
  }
  return out;
}

// -------------------------------------------------------------- ideal case

GroebnerBasis::GroebnerBasis(ModuleGroebnerBasis core) : core_(std::move(core)) {
  for (auto& e : core_.elements) elements_.push_back(e[0]);
  for (auto& g : core_.generators) generators_.push_back(g[0]);
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const Polynomial& p) { return !p.is_zero() && p.is_constant(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : elements_) out.push_back(e.leading_monomial());
  return out;
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
  if (generators.empty()) throw Error(ErrorKind::InvalidParameter, "groebner_basis needs at least one generator");
  RingPtr base = generators.front().ring();
  RingPtr ring = base->order() == order ? base : base->with_order(order);
  std::vector<ModuleVector> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), base)) throw Error(ErrorKind::RingMismatch, "generators live in different rings");
    gens.push_back({g.ring() == ring ? g : g.in_ring(ring)});
  }
  return GroebnerBasis(module_groebner_basis(FreeModule::of_rank(ring, 1), std::move(gens)));
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidParameter, "groebner_basis needs at least one generator");
  return groebner_basis(generators, generators.front().ring()->order());
}

NormalFormResult normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.ring()->names() != gb.ring()->names()) throw Error(ErrorKind::RingMismatch, "normal_form across rings");
  Polynomial q = same_ring(p.ring(), gb.ring()) ? p : p.in_ring(gb.ring());
  ModuleReduction red = reduce({q}, gb.core());
  return {std::move(red.remainder[0]), std::move(red.quotients)};
}

std::vector<std::vector<Polynomial>> syzygy_module(const GroebnerBasis& gb) { return schreyer_syzygies(gb.core()); }

}  // namespace divcert
