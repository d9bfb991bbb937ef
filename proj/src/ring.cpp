#include "divcert/ring.hpp"

#include <algorithm>
#include <sstream>

#include "divcert/error.hpp"

namespace divcert {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(int i, int exponent) {
  if (i < 0 || i >= kMaxVariables) throw Error(ErrorKind::InvalidParameter, "variable index out of range");
  if (exponent < 0 || exponent > std::numeric_limits<std::uint16_t>::max())
    throw Error(ErrorKind::InvalidParameter, "exponent out of range");
  auto& slot = exponents_[static_cast<std::size_t>(i)];
  degree_ += exponent - slot;
  slot = static_cast<std::uint16_t>(exponent);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < kMaxVariables; ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  return (support() & other.support()) == 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) {
    int e = exponents_[i] + other.exponents_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw Error(ErrorKind::InvalidParameter, "exponent overflow");
    r.exponents_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) r.exponents_[i] = static_cast<std::uint16_t>(exponents_[i] - divisor.exponents_[i]);
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int deg = 0;
  for (int i = 0; i < kMaxVariables; ++i) {
    r.exponents_[i] = std::max(a.exponents_[i], b.exponents_[i]);
    deg += r.exponents_[i];
  }
  r.degree_ = deg;
  return r;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVariables; ++i)
    if (exponents_[i] != 0) mask |= (1u << i);
  return mask;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> significance)
    : kind_(kind), significance_(std::move(significance)) {
  std::vector<int> sorted = significance_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw Error(ErrorKind::InvalidParameter, "order significance is not a permutation");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, int n) const {
  if (kind_ != OrderKind::Lex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (kind_ == OrderKind::GradedReverseLex) {
    for (int rank = n - 1; rank >= 0; --rank) {
      int v = variable_at(rank);
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
  }
  for (int rank = 0; rank < n; ++rank) {
    int v = variable_at(rank);
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::GradedReverseLex: return "grevlex";
    case OrderKind::GradedLex: return "grlex";
    case OrderKind::Lex: return "lex";
  }
  return "?";
}

// -------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(std::move(order)) {}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  if (static_cast<int>(names.size()) > kMaxVariables)
    throw Error(ErrorKind::InvalidParameter, "too many variables (max " + std::to_string(kMaxVariables) + ")");
  if (!order.significance().empty() && order.significance().size() != names.size())
    throw Error(ErrorKind::InvalidParameter, "order permutation length does not match variable count");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error(ErrorKind::InvalidParameter, "duplicate variable " + names[i]);
  return RingPtr(new Ring(std::move(names), std::move(order)));
}

std::optional<int> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(names_, std::move(order)); }

RingPtr Ring::with_variable_prepended(const std::string& name) const {
  std::vector<std::string> names{name};
  names.insert(names.end(), names_.begin(), names_.end());
  std::vector<int> sig;
  if (!order_.significance().empty()) {
    sig.push_back(0);
    for (int v : order_.significance()) sig.push_back(v + 1);
  }
  return make(std::move(names), MonomialOrder(order_.kind(), std::move(sig)));
}

RingPtr Ring::with_variable_appended(const std::string& name) const {
  std::vector<std::string> names = names_;
  names.push_back(name);
  std::vector<int> sig = order_.significance();
  if (!sig.empty()) sig.push_back(num_variables());
  return make(std::move(names), MonomialOrder(order_.kind(), std::move(sig)));
}

RingPtr Ring::without_variable(int index) const {
  std::vector<std::string> names = names_;
  names.erase(names.begin() + index);
  std::vector<int> sig;
  for (int v : order_.significance()) {
    if (v == index) continue;
    sig.push_back(v > index ? v - 1 : v);
  }
  return make(std::move(names), MonomialOrder(order_.kind(), std::move(sig)));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
  Polynomial p(std::move(ring));
  if (value != 0) p.terms_.push_back({Monomial{}, value});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->num_variables()) throw Error(ErrorKind::InvalidParameter, "variable index out of range");
  return term(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& monomial, const Rational& coefficient) {
  Polynomial p(std::move(ring));
  if (coefficient != 0) p.terms_.push_back({monomial, coefficient});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const Ring& r = *p.ring_;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

int Polynomial::degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::uses_variable(int index) const {
  for (const auto& t : terms_)
    if (t.monomial[index] != 0) return true;
  return false;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial p(ring_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::derivative(int index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    out.push_back({m, t.coefficient * e});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (target->names() != ring_->names()) throw Error(ErrorKind::RingMismatch, "in_ring requires identical variables");
  return from_terms(std::move(target), terms_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  Rational inv = 1 / leading_coefficient();
  return p *= inv;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw Error(ErrorKind::RingMismatch, "polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

namespace {

// Merges sorted term lists a and sign*b.
std::vector<Term> merge_terms(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = ring.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational s = negate_b ? Rational(a[i].coefficient - b[j].coefficient) : Rational(a[i].coefficient + b[j].coefficient);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  if (other.is_zero()) return *this;
  terms_ = merge_terms(*ring_, terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  if (other.is_zero()) return *this;
  terms_ = merge_terms(*ring_, terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  Polynomial acc(a.ring_);
  for (const auto& t : small.terms_) acc += big.times_term(t.coefficient, t.monomial);
  return acc;
}

Polynomial Polynomial::times_term(const Rational& coefficient, const Monomial& monomial) const {
  Polynomial p(ring_);
  if (coefficient == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * monomial, t.coefficient * coefficient});
  return p;
}

void Polynomial::subtract_scaled(const Rational& coefficient, const Monomial& monomial, const Polynomial& other) {
  check_ring(other);
  if (coefficient == 0 || other.is_zero()) return;
  const Ring& ring = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool have_shifted = false;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j < other.terms_.size() && !have_shifted) {
      shifted = other.terms_[j].monomial * monomial;
      have_shifted = true;
    }
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == other.terms_.size()) c = 1;
    else c = ring.compare(terms_[i].monomial, shifted);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back({shifted, -(coefficient * other.terms_[j].coefficient)});
      ++j;
      have_shifted = false;
    } else {
      Rational s = terms_[i].coefficient - coefficient * other.terms_[j].coefficient;
      if (s != 0) out.push_back({shifted, std::move(s)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  terms_ = std::move(out);
}

Term Polynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::push_trailing(Term term) { terms_.push_back(std::move(term)); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
  return true;
}

Polynomial pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidParameter, "negative exponent");
  Polynomial result = Polynomial::constant(base.ring(), 1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

// ------------------------------------------------------ (de)homogenization

Polynomial homogenize(const Polynomial& p, int h, int rho) {
  if (h < 0 || h >= p.ring()->num_variables())
    throw Error(ErrorKind::InvalidParameter, "homogenizing variable is not in the ring");
  if (p.uses_variable(h))
    throw Error(ErrorKind::VariableClash, "homogenizing variable " + p.ring()->name(h) + " occurs in the polynomial");
  if (p.is_zero()) return p;
  if (rho < p.degree())
    throw Error(ErrorKind::DegreeTooLow,
                "target degree " + std::to_string(rho) + " is below degree " + std::to_string(p.degree()));
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    m.set(h, rho - m.degree());
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial dehomogenize(const Polynomial& p, int h) {
  if (h < 0 || h >= p.ring()->num_variables())
    throw Error(ErrorKind::InvalidParameter, "dehomogenizing variable is not in the ring");
  RingPtr target = p.ring()->without_variable(h);
  const int n = p.ring()->num_variables();
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int i = 0, k = 0; i < n; ++i) {
      if (i == h) continue;
      m.set(k++, t.monomial[i]);
    }
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(std::move(target), std::move(out));
}

Polynomial embed(const Polynomial& p, const RingPtr& target, const std::vector<int>& variable_map) {
  const int n = p.ring()->num_variables();
  if (static_cast<int>(variable_map.size()) != n) throw Error(ErrorKind::InvalidParameter, "variable map has wrong length");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < n; ++i)
      if (t.monomial[i] != 0) m.set(variable_map[static_cast<std::size_t>(i)], m[variable_map[static_cast<std::size_t>(i)]] + t.monomial[i]);
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial lift_to_prepended(const Polynomial& p, const RingPtr& target) {
  std::vector<int> map(static_cast<std::size_t>(p.ring()->num_variables()));
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i) + 1;
  return embed(p, target, map);
}

// ----------------------------------------------------------- serialization

std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const RingPtr& ring = p.ring();
  const int n = ring->num_variables();
  MonomialOrder grevlex(OrderKind::GradedReverseLex);
  std::vector<Term> terms = p.terms();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return grevlex.compare(a.monomial, b.monomial, n) > 0; });
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coefficient;
    if (c < 0) {
      out << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      out << " + ";
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.monomial.is_one()) {
      out << to_string(c);
      wrote = true;
    }
    for (int i = 0; i < n; ++i) {
      int e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) out << "*";
      out << ring->name(i);
      if (e > 1) out << "^" << e;
      wrote = true;
    }
  }
  return out.str();
}

// ------------------------------------------------------- monomial bases

namespace {

void enumerate(int n, int var, int remaining, Monomial& current, std::vector<Monomial>& out) {
  if (var == n - 1) {
    current.set(var, remaining);
    out.push_back(current);
    current.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.set(var, e);
    enumerate(n, var + 1, remaining - e, current, out);
  }
  current.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int num_variables, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (num_variables == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial current;
  enumerate(num_variables, 0, degree, current, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int num_variables, int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d) {
    auto piece = monomials_of_degree(num_variables, d);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

}  // namespace divcert
