#include "divcert/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "divcert/error.hpp"

namespace divcert {

ModuleVector GradedMatrix::column(std::size_t j) const {
  ModuleVector v;
  v.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) v.push_back(entries[i][j]);
  return v;
}

bool GradedMatrix::is_graded() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const Polynomial& p = entries[i][j];
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || p.degree() != column_twists[j] - row_twists[i]) return false;
    }
  return true;
}

bool GradedMatrix::has_unit_entry() const {
  for (const auto& row : entries)
    for (const auto& p : row)
      if (!p.is_zero() && p.is_constant()) return true;
  return false;
}

PolynomialMatrix multiply(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::RingMismatch, "matrix dimensions do not compose");
  PolynomialMatrix out(a.rows(), std::vector<Polynomial>(b.cols(), Polynomial(a.ring)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a.entries[i][k].is_zero() && !b.entries[k][j].is_zero()) out[i][j] += a.entries[i][k] * b.entries[k][j];
  return out;
}

std::vector<int> FreeResolution::ranks() const {
  std::vector<int> r{1};
  for (const auto& m : maps) r.push_back(static_cast<int>(m.cols()));
  return r;
}

int BettiTable::betti(int level, int degree) const {
  if (level < 0 || level >= static_cast<int>(twists.size())) return 0;
  const auto& t = twists[static_cast<std::size_t>(level)];
  return static_cast<int>(std::count(t.begin(), t.end(), degree));
}

std::string BettiTable::to_string() const {
  int lo = 0, hi = 0;
  for (std::size_t k = 0; k < twists.size(); ++k)
    for (int d : twists[k]) {
      lo = std::min(lo, d - static_cast<int>(k));
      hi = std::max(hi, d - static_cast<int>(k));
    }
  std::ostringstream out;
  out << "      ";
  for (std::size_t k = 0; k < twists.size(); ++k) out << ' ' << k;
  out << '\n';
  for (int row = lo; row <= hi; ++row) {
    out << (row < 10 ? " " : "") << row << ":   ";
    for (std::size_t k = 0; k < twists.size(); ++k) {
      int b = betti(static_cast<int>(k), row + static_cast<int>(k));
      out << ' ' << (b == 0 ? std::string("-") : std::to_string(b));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Removes unit entries of `next` (the syzygies of `current`'s columns) by
// change of basis, dropping the redundant generator of `current` each time.
void prune(GradedMatrix& current, GradedMatrix& next) {
  while (true) {
    std::size_t pi = next.rows(), pj = next.cols();
    for (std::size_t i = 0; i < next.rows() && pi == next.rows(); ++i)
      for (std::size_t j = 0; j < next.cols(); ++j) {
        const Polynomial& p = next.entries[i][j];
        if (!p.is_zero() && p.is_constant()) {
          pi = i;
          pj = j;
          break;
        }
      }
    if (pi == next.rows()) break;

    Rational pivot = next.entries[pi][pj].leading_coefficient();
    for (std::size_t j = 0; j < next.cols(); ++j) {
      if (j == pj || next.entries[pi][j].is_zero()) continue;
      Polynomial factor = next.entries[pi][j] * Rational(1 / pivot);
      for (std::size_t i = 0; i < next.rows(); ++i)
        if (!next.entries[i][pj].is_zero()) next.entries[i][j] -= factor * next.entries[i][pj];
    }
    next.entries.erase(next.entries.begin() + static_cast<long>(pi));
    next.row_twists.erase(next.row_twists.begin() + static_cast<long>(pi));
    for (auto& row : next.entries) row.erase(row.begin() + static_cast<long>(pj));
    next.column_twists.erase(next.column_twists.begin() + static_cast<long>(pj));
    for (auto& row : current.entries) row.erase(row.begin() + static_cast<long>(pi));
    current.column_twists.erase(current.column_twists.begin() + static_cast<long>(pi));

    // Drop columns that became zero.
    for (std::size_t j = next.cols(); j-- > 0;) {
      bool zero = std::all_of(next.entries.begin(), next.entries.end(), [j](const auto& row) { return row[j].is_zero(); });
      if (!zero) continue;
      for (auto& row : next.entries) row.erase(row.begin() + static_cast<long>(j));
      next.column_twists.erase(next.column_twists.begin() + static_cast<long>(j));
    }
  }
}

GradedMatrix syzygy_matrix(const GradedMatrix& m) {
  std::vector<ModuleVector> columns;
  for (std::size_t j = 0; j < m.cols(); ++j) columns.push_back(m.column(j));
  FreeModule target(m.ring, m.row_twists);
  FreeModule source(m.ring, m.column_twists);
  auto syz = syzygies(target, columns);
  GradedMatrix s{m.ring, m.column_twists, {}, PolynomialMatrix(m.cols())};
  for (auto& v : syz) {
    s.column_twists.push_back(vector_degree(source, v));
    for (std::size_t i = 0; i < m.cols(); ++i) s.entries[i].push_back(std::move(v[i]));
  }
  return s;
}

}  // namespace

FreeResolution free_resolution(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "free resolution needs a homogeneous ideal");
  FreeResolution res{ideal.ring(), {}, true};
  if (ideal.is_zero()) return res;
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/I is zero for the unit ideal");

  GradedMatrix first{ideal.ring(), {0}, {}, PolynomialMatrix(1)};
  for (const auto& g : ideal.generators()) {
    first.column_twists.push_back(g.degree());
    first.entries[0].push_back(g);
  }
  res.maps.push_back(std::move(first));
  const int bound = ideal.ring()->num_variables() + 1;
  while (true) {
    GradedMatrix next = syzygy_matrix(res.maps.back());
    prune(res.maps.back(), next);
    if (next.cols() == 0) break;
    if (res.length() > bound) throw std::logic_error("resolution exceeded the Hilbert syzygy bound");
    res.maps.push_back(std::move(next));
  }
  return res;
}

BettiTable betti_table(const FreeResolution& resolution) {
  BettiTable t;
  t.twists.push_back({0});
  for (const auto& m : resolution.maps) {
    auto tw = m.column_twists;
    std::sort(tw.begin(), tw.end());
    t.twists.push_back(std::move(tw));
  }
  return t;
}

int regularity(const FreeResolution& resolution) {
  if (!resolution.minimal) throw Error(ErrorKind::NotMinimal, "regularity needs a minimal resolution");
  int reg = kDegreeOfZero;
  for (std::size_t k = 0; k < resolution.maps.size(); ++k)
    for (int d : resolution.maps[k].column_twists) reg = std::max(reg, d - static_cast<int>(k + 1));
  return reg == kDegreeOfZero ? 1 : reg + 1;
}

bool is_cohen_macaulay(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "Cohen-Macaulay test needs a homogeneous ideal");
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "Cohen-Macaulay test needs a proper ideal");
  return free_resolution(ideal).length() == codimension(ideal);
}

std::vector<int> expected_ranks(const FreeResolution& resolution) {
  auto ranks = resolution.ranks();
  std::vector<int> out;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    int r = 0;
    for (std::size_t j = k; j < ranks.size(); ++j) r += ((j - k) % 2 == 0 ? 1 : -1) * ranks[j];
    out.push_back(r);
  }
  return out;
}

std::vector<Ideal> bef_loci(const Ideal& ideal, const FreeResolution& resolution) {
  auto expected = expected_ranks(resolution);
  std::vector<Ideal> out;
  for (std::size_t k = 0; k < resolution.maps.size(); ++k) {
    std::vector<Polynomial> gens = ideal.generators();
    for (auto& m : minors_parallel(resolution.maps[k].entries, ideal.ring(), expected[k]))
      if (!m.is_zero()) gens.push_back(std::move(m));
    out.emplace_back(ideal.ring(), std::move(gens));
  }
  return out;
}

std::vector<Ideal> bef_loci(const Ideal& ideal) { return bef_loci(ideal, free_resolution(ideal)); }

Ideal singular_locus(const Ideal& variety_ideal, int codim) {
  const RingPtr& ring = variety_ideal.ring();
  const auto& gens = variety_ideal.generators();
  PolynomialMatrix jacobian;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (int v = 0; v < ring->num_variables(); ++v) row.push_back(g.derivative(v));
    jacobian.push_back(std::move(row));
  }
  std::vector<Polynomial> locus = gens;
  for (auto& m : minors_parallel(jacobian, ring, codim))
    if (!m.is_zero()) locus.push_back(std::move(m));
  return saturate_irrelevant(Ideal(ring, std::move(locus)));
}

std::vector<Ideal> intrinsic_bef(const Ideal& variety_ideal, int n) {
  if (!variety_ideal.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "intrinsic BEF loci need a homogeneous ideal");
  const RingPtr& ring = variety_ideal.ring();
  const int codim = ring->num_variables() - 1 - n;
  std::vector<Ideal> out;
  if (variety_ideal.is_zero()) {
    for (int l = 0; l < std::max(n, 1); ++l) out.push_back(Ideal::unit(ring));
    return out;
  }
  out.push_back(singular_locus(variety_ideal, codim));
  if (n <= 1) return out;
  FreeResolution res = free_resolution(variety_ideal);
  std::vector<Ideal> loci = bef_loci(variety_ideal, res);
  for (int l = 1; l < n; ++l) {
    int level = codim + l;
    out.push_back(level <= res.length() ? loci[static_cast<std::size_t>(level - 1)] : Ideal::unit(ring));
  }
  return out;
}

bool is_projectively_empty(const Ideal& ideal) { return krull_dimension(ideal) <= 0; }

}  // namespace divcert
