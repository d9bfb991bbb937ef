#include "divcert/hypotheses.hpp"

#include <algorithm>
#include <numeric>

#include "divcert/error.hpp"

namespace divcert {

std::vector<int> ProblemInstance::degrees() const {
  std::vector<int> d;
  for (const auto& f : generators) d.push_back(f.degree());
  return d;
}

int ProblemInstance::max_degree() const { return generators.empty() ? 0 : generators.front().degree(); }

ProblemInstance make_instance(RingPtr ring, std::vector<Polynomial> variety, std::vector<Polynomial> generators,
                              Polynomial target, InstanceOptions options) {
  if (!ring) throw Error(ErrorKind::InvalidInstance, "missing ring");
  if (ring->num_variables() < 1) throw Error(ErrorKind::InvalidInstance, "the ring needs at least one variable");
  if (ring->num_variables() + 2 > kMaxVariables)
    throw Error(ErrorKind::InvalidInstance, "at most " + std::to_string(kMaxVariables - 2) + " affine variables");
  if (ring->index_of(kHomogenizingVariable))
    throw Error(ErrorKind::VariableClash, std::string(kHomogenizingVariable) + " is reserved");
  if (!ring->order().is_graded()) throw Error(ErrorKind::InvalidParameter, "instances need a graded monomial order");
  if (generators.empty()) throw Error(ErrorKind::InvalidInstance, "at least one generator is required");
  auto check = [&](const Polynomial& p) {
    if (!same_ring(p.ring(), ring)) throw Error(ErrorKind::RingMismatch, "all polynomials must share the instance ring");
  };
  for (const auto& g : variety) check(g);
  for (const auto& f : generators) {
    check(f);
    if (f.is_zero()) throw Error(ErrorKind::InvalidInstance, "generators must be nonzero");
  }
  check(target);

  std::vector<std::size_t> perm(generators.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return generators[a].degree() > generators[b].degree(); });
  std::vector<Polynomial> sorted;
  for (std::size_t i : perm) sorted.push_back(generators[i]);

  std::vector<Polynomial> nonzero_variety;
  for (auto& g : variety)
    if (!g.is_zero()) nonzero_variety.push_back(std::move(g));

  if (options.mu_0 && *options.mu_0 < 0) throw Error(ErrorKind::InvalidParameter, "mu_0 must be non-negative");
  return {std::move(ring), std::move(nonzero_variety), std::move(sorted), std::move(perm), std::move(target), options};
}

namespace {

Polynomial homogenized(const Polynomial& p, const RingPtr& hring, int degree) {
  return homogenize(lift_to_prepended(p, hring), 0, degree);
}

int codim_on(const Ideal& j, int n) {
  int pd = projective_dimension(j);
  return pd < 0 ? kInfiniteCodimension : n - pd;
}

std::string codim_text(int c) { return c >= kInfiniteCodimension ? "inf" : std::to_string(c); }

std::vector<Polynomial> joined(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Ideal projective_ideal(const std::vector<Polynomial>& fhat, const VarietyData& vd) {
  return Ideal(vd.projective_ring, joined(fhat, vd.closure.generators()));
}

HypothesisEntry m_at_most_n(const ProblemInstance& inst, const VarietyData& vd) {
  const bool ok = inst.m() <= vd.dimension;
  return {"m<=n", ok ? HypothesisStatus::Verified : HypothesisStatus::Refuted,
          "m = " + std::to_string(inst.m()) + ", n = " + std::to_string(vd.dimension), std::nullopt};
}

HypothesisEntry affine_codimension(const ProblemInstance& inst, const VarietyData& vd) {
  Ideal k(inst.ring, joined(inst.generators, inst.variety));
  int dim = krull_dimension(k);
  int codim = dim < 0 ? kInfiniteCodimension : vd.dimension - dim;
  return {"codim-Z-in-V", codim >= inst.m() ? HypothesisStatus::Verified : HypothesisStatus::Refuted,
          "codim(Z^f in V) = " + codim_text(codim) + ", m = " + std::to_string(inst.m()), std::nullopt};
}

HypothesisEntry projective_codimension(const std::string& name, const Ideal& j, const VarietyData& vd, int needed) {
  int codim = codim_on(j, vd.dimension);
  return {name, codim >= needed ? HypothesisStatus::Verified : HypothesisStatus::Refuted,
          "codim in X = " + codim_text(codim) + ", needed " + std::to_string(needed), std::nullopt};
}

// Strong test first; when it fails, the exact radical test tells an embedded
// prime at infinity (strong-test-failed) from a minimal one (refuted).
HypothesisEntry at_infinity(const std::string& name, const Ideal& j, bool embedded_allowed) {
  AtInfinityTest t = no_associated_component_at_infinity(j, 0);
  if (t.holds) return {name, HypothesisStatus::Verified, "no associated prime inside z0 = 0", std::nullopt};
  if (!embedded_allowed)
    return {name, HypothesisStatus::Refuted, "associated prime inside z0 = 0", t.witness};
  Ideal outside = saturate(t.saturated, Polynomial::variable(j.ring(), 0)).ideal;
  for (const auto& g : outside.groebner().elements())
    if (!in_radical(t.saturated, g))
      return {name, HypothesisStatus::Refuted, "irreducible component inside z0 = 0", g};
  return {name, HypothesisStatus::NotVerified, "strong-test-failed: embedded associated prime inside z0 = 0",
          t.witness};
}

HypothesisEntry smoothness(const ProblemInstance& inst, const VarietyData& vd) {
  const std::string name = "X-smooth";
  if (vd.closure.is_zero()) return {name, HypothesisStatus::Verified, "X = P^N", std::nullopt};
  const int codim = inst.ambient() - vd.dimension;
  Ideal sing = singular_locus(vd.closure, codim);
  const bool empty = is_projectively_empty(sing);
  if (inst.options.assert_pure) {
    return {name, empty ? HypothesisStatus::Verified : HypothesisStatus::Refuted,
            empty ? "Jacobian criterion (purity asserted)" : "Jacobian criterion finds singular points (purity asserted)",
            std::nullopt};
  }
  if (inst.options.assert_smooth) return {name, HypothesisStatus::UserAsserted, "asserted by the user", std::nullopt};
  return {name, HypothesisStatus::NotVerified,
          std::string("Jacobian criterion ") + (empty ? "finds no singular points" : "finds singular points") +
              "; needs --assert-pure to conclude",
          std::nullopt};
}

// (kraxa)/(paxa): codim(Z intersect X^l) >= m + l + 1 for every nonempty X^l.
void bef_codimensions(const ProblemInstance& inst, const VarietyData& vd, const Ideal& j, const std::string& prefix,
                      std::vector<HypothesisEntry>& out) {
  std::vector<Ideal> loci = intrinsic_bef(vd.closure, vd.dimension);
  for (std::size_t l = 0; l < loci.size(); ++l) {
    const std::string name = prefix + std::to_string(l);
    const int needed = inst.m() + static_cast<int>(l) + 1;
    if (is_projectively_empty(loci[l])) {
      out.push_back({name, HypothesisStatus::Verified, "vacuous: X^" + std::to_string(l) + " is empty", std::nullopt});
      continue;
    }
    HypothesisEntry e = projective_codimension(name, j + loci[l], vd, needed);
    if (e.status == HypothesisStatus::Verified && !inst.options.assert_pure) {
      e.status = HypothesisStatus::NotVerified;
      e.detail += "; intrinsic loci need --assert-pure";
    }
    out.push_back(std::move(e));
  }
}

void check_common_degree_inputs(const ProblemInstance& inst, const VarietyData& vd, int d) {
  if (d < inst.max_degree()) throw Error(ErrorKind::InvalidParameter, "common degree d is below max deg F_j");
  if (const auto& c = inst.options.c_infinity; c && !c->is_minus_infinity()) {
    const int mu = std::min(inst.m(), vd.dimension);
    if (c->value() < 0 || c->value() > mu)
      throw Error(ErrorKind::InvalidParameter, "c_infinity must lie in [0, min(m, n)] = [0, " + std::to_string(mu) + "]");
  }
}

void common_degree_entries(const ProblemInstance& inst, const VarietyData& vd, int d, HypothesisReport& report) {
  check_common_degree_inputs(inst, vd, d);
  Ideal j = projective_ideal(homogenized_generators(inst, vd.projective_ring, d), vd);
  HypothesisEntry krax2 = projective_codimension("codim-Z~-in-X", j, vd, inst.m());
  const bool krax2_ok = krax2.status == HypothesisStatus::Verified;
  report.entries.push_back(std::move(krax2));
  bef_codimensions(inst, vd, j, "codim-Z~-in-X^", report.entries);

  const int mu = std::min(inst.m(), vd.dimension);
  if (inst.options.c_infinity) {
    report.c_infinity = *inst.options.c_infinity;
    report.entries.push_back({"c_infinity", HypothesisStatus::UserAsserted,
                              "c_infinity = " + report.c_infinity->to_string() + " (user-supplied)", std::nullopt});
    return;
  }
  if (krax2_ok && no_associated_component_at_infinity(j, 0).holds) {
    report.c_infinity = CInfinity::minus_infinity();
    report.entries.push_back({"c_infinity", HypothesisStatus::Verified,
                              "c_infinity = -inf: Z~ has no associated prime at infinity", std::nullopt});
    return;
  }
  report.c_infinity = CInfinity::of(mu);
  report.entries.push_back({"c_infinity", HypothesisStatus::Verified,
                            "c_infinity not supplied; using its upper bound mu = " + std::to_string(mu), std::nullopt});
}

// Products of `power` generators (with repetition), for (F)^power.
std::vector<Polynomial> power_generators(const std::vector<Polynomial>& f, int power) {
  std::vector<Polynomial> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(power), 0);
  if (power == 0) return {Polynomial::constant(f.front().ring(), 1)};
  while (true) {
    Polynomial p = f[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) p = p * f[idx[k]];
    out.push_back(std::move(p));
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == f.size() - 1) --k;
    if (k == 0) break;
    std::size_t v = idx[k - 1] + 1;
    for (std::size_t t = k - 1; t < idx.size(); ++t) idx[t] = v;
  }
  return out;
}

}  // namespace

VarietyData analyze_variety(const ProblemInstance& inst) {
  RingPtr hring = inst.ring->with_variable_prepended(kHomogenizingVariable);
  VarietyData vd{hring, {}, Ideal::zero(hring), inst.ambient(), 1, 1, true, FreeResolution{hring, {}, true}};
  if (inst.variety.empty()) return vd;

  Ideal iv(inst.ring, inst.variety);
  if (iv.is_unit()) throw Error(ErrorKind::InvalidInstance, "the variety is empty");
  vd.affine_basis = iv.groebner().elements();
  std::vector<Polynomial> closure;
  for (const auto& g : vd.affine_basis) closure.push_back(homogenized(g, hring, g.degree()));
  vd.closure = Ideal(hring, std::move(closure));
  vd.dimension = krull_dimension(iv);
  vd.degree = hilbert_data(vd.closure).degree;
  vd.resolution = free_resolution(vd.closure);
  vd.regularity = regularity(vd.resolution);
  vd.cohen_macaulay = vd.resolution.length() == codimension(vd.closure);
  return vd;
}

std::vector<Polynomial> homogenized_generators(const ProblemInstance& inst, const RingPtr& projective_ring,
                                               std::optional<int> common_degree) {
  std::vector<Polynomial> out;
  for (const auto& f : inst.generators) out.push_back(homogenized(f, projective_ring, common_degree.value_or(f.degree())));
  return out;
}

std::string theorem_id(Theorem t) {
  switch (t) {
    case Theorem::Macaulay: return "1.1";
    case Theorem::NoetherSmooth: return "1.2";
    case Theorem::NoetherSingular: return "1.3";
    case Theorem::AssociatedVarieties: return "1.4";
    case Theorem::CommonDegree: return "1.5";
    case Theorem::BrianconSkoda: return "BS";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(const std::string& id) {
  for (Theorem t : {Theorem::Macaulay, Theorem::NoetherSmooth, Theorem::NoetherSingular, Theorem::AssociatedVarieties,
                    Theorem::CommonDegree, Theorem::BrianconSkoda})
    if (theorem_id(t) == id) return t;
  return std::nullopt;
}

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Verified: return "verified";
    case HypothesisStatus::Refuted: return "refuted";
    case HypothesisStatus::NotVerified: return "not-verified";
    case HypothesisStatus::UserAsserted: return "user-asserted";
  }
  return "?";
}

bool HypothesisReport::guaranteed() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const HypothesisEntry& e) {
    return e.status == HypothesisStatus::Verified || e.status == HypothesisStatus::UserAsserted;
  });
}

bool HypothesisReport::any_refuted() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const HypothesisEntry& e) { return e.status == HypothesisStatus::Refuted; });
}

const HypothesisEntry* HypothesisReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

HypothesisReport check_macaulay_hypothesis(const ProblemInstance& inst, const VarietyData& vd) {
  Ideal j = projective_ideal(homogenized_generators(inst, vd.projective_ring), vd);
  int dim = krull_dimension(j);
  HypothesisReport r{"1.1", {}, std::nullopt};
  r.entries.push_back({"no-common-zeros-on-X", dim <= 0 ? HypothesisStatus::Verified : HypothesisStatus::Refuted,
                       dim <= 0 ? "Z^f meets X nowhere in P^N"
                                : "Z^f meets X in dimension " + std::to_string(dim - 1),
                       std::nullopt});
  return r;
}

HypothesisReport check_macaulay_hypothesis(const ProblemInstance& inst) {
  return check_macaulay_hypothesis(inst, analyze_variety(inst));
}

HypothesisReport check_noether_hypothesis(const ProblemInstance& inst, const VarietyData& vd, Theorem variant) {
  if (variant != Theorem::NoetherSmooth && variant != Theorem::NoetherSingular)
    throw Error(ErrorKind::InvalidParameter, "Noether check needs theorem 1.2 or 1.3");
  HypothesisReport r{theorem_id(variant), {}, std::nullopt};
  Ideal j = projective_ideal(homogenized_generators(inst, vd.projective_ring), vd);
  r.entries.push_back(m_at_most_n(inst, vd));
  r.entries.push_back(affine_codimension(inst, vd));
  r.entries.push_back(at_infinity("no-component-at-infinity", j, true));
  if (variant == Theorem::NoetherSmooth)
    r.entries.push_back(smoothness(inst, vd));
  else
    bef_codimensions(inst, vd, j, "codim-Z-in-X^", r.entries);
  return r;
}

HypothesisReport check_noether_hypothesis(const ProblemInstance& inst, Theorem variant) {
  return check_noether_hypothesis(inst, analyze_variety(inst), variant);
}

HypothesisReport check_associated_variety_hypothesis(const ProblemInstance& inst, const VarietyData& vd) {
  HypothesisReport r{"1.4", {}, std::nullopt};
  Ideal j = projective_ideal(homogenized_generators(inst, vd.projective_ring), vd);
  r.entries.push_back(at_infinity("no-associated-variety-at-infinity", j, false));
  return r;
}

HypothesisReport check_associated_variety_hypothesis(const ProblemInstance& inst) {
  return check_associated_variety_hypothesis(inst, analyze_variety(inst));
}

HypothesisReport check_common_degree_hypothesis(const ProblemInstance& inst, const VarietyData& vd, int d) {
  HypothesisReport r{"1.5", {}, std::nullopt};
  common_degree_entries(inst, vd, d, r);
  return r;
}

HypothesisReport check_common_degree_hypothesis(const ProblemInstance& inst, int d) {
  return check_common_degree_hypothesis(inst, analyze_variety(inst), d);
}

HypothesisReport check_briancon_skoda_hypothesis(const ProblemInstance& inst, const VarietyData& vd) {
  HypothesisReport r{"BS", {}, std::nullopt};
  common_degree_entries(inst, vd, inst.max_degree(), r);
  if (!inst.options.mu_0) {
    r.entries.push_back({"mu_0", HypothesisStatus::NotVerified, "mu_0 not supplied", std::nullopt});
    return r;
  }
  const int mu0 = *inst.options.mu_0;
  r.entries.push_back({"mu_0", HypothesisStatus::UserAsserted, "mu_0 = " + std::to_string(mu0), std::nullopt});
  const int power = std::min(inst.m(), vd.dimension) + mu0;
  Ideal growth(inst.ring, joined(power_generators(inst.generators, power), inst.variety));
  const bool member = growth.contains(inst.target);
  r.entries.push_back({"phi-in-power", member ? HypothesisStatus::Verified : HypothesisStatus::NotVerified,
                       "Phi " + std::string(member ? "lies" : "does not lie") + " in (F)^" + std::to_string(power) +
                           " + I_V",
                       std::nullopt});
  return r;
}

HypothesisReport check_briancon_skoda_hypothesis(const ProblemInstance& inst) {
  return check_briancon_skoda_hypothesis(inst, analyze_variety(inst));
}

HypothesisReport check_hypotheses(const ProblemInstance& inst, const VarietyData& vd, Theorem t) {
  switch (t) {
    case Theorem::Macaulay: return check_macaulay_hypothesis(inst, vd);
    case Theorem::NoetherSmooth:
    case Theorem::NoetherSingular: return check_noether_hypothesis(inst, vd, t);
    case Theorem::AssociatedVarieties: return check_associated_variety_hypothesis(inst, vd);
    case Theorem::CommonDegree: return check_common_degree_hypothesis(inst, vd, inst.max_degree());
    case Theorem::BrianconSkoda: return check_briancon_skoda_hypothesis(inst, vd);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown theorem");
}

bool target_in_ideal(const ProblemInstance& inst) {
  return Ideal(inst.ring, joined(inst.generators, inst.variety)).contains(inst.target);
}

}  // namespace divcert
