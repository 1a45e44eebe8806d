#include "f4rigid/qpoly.hpp"

#include "f4rigid/rootdata.hpp"
#include "f4rigid/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace f4rigid {

IntPolynomial::IntPolynomial(const BigInt& constant) {
  if (constant != 0) terms_[0] = constant;
}

IntPolynomial IntPolynomial::monomial(int degree, const BigInt& coeff) {
  IntPolynomial p;
  if (coeff != 0) p.terms_[degree] = coeff;
  return p;
}

IntPolynomial IntPolynomial::from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
  IntPolynomial p;
  for (const auto& [d, c] : terms) p.terms_[d] += c;
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::q_power_minus_one(int d) {
  return from_terms({{d, 1}, {0, -1}});
}

void IntPolynomial::trim() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

int IntPolynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

BigInt IntPolynomial::coeff(int degree) const {
  const auto it = terms_.find(degree);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt IntPolynomial::leading_coeff() const {
  return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

bool IntPolynomial::is_monic() const { return leading_coeff() == 1; }

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [d, c] : o.terms_) terms_[d] += c;
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [d, c] : o.terms_) terms_[d] -= c;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p(*this);
  for (auto& [d, c] : p.terms_) c = -c;
  return p;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial p;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) p.terms_[da + db] += ca * cb;
  p.trim();
  return p;
}

BigInt IntPolynomial::eval(const BigInt& point) const {
  // Horner over the sparse terms, highest degree first.
  BigInt acc = 0;
  int prev_degree = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (prev_degree >= 0)
      for (int k = 0; k < prev_degree - it->first; ++k) acc *= point;
    else
      acc = 0;
    acc += it->second;
    prev_degree = it->first;
  }
  if (prev_degree > 0)
    for (int k = 0; k < prev_degree; ++k) acc *= point;
  return acc;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const BigInt lead = divisor.leading_coeff();
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("divide_exact requires a +-1 leading coefficient");
  IntPolynomial rem(*this);
  IntPolynomial quot;
  const int dd = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const BigInt factor = rem.leading_coeff() * lead;  // lead is +-1
    const IntPolynomial term = monomial(shift, factor);
    quot += term;
    rem -= term * divisor;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [d, c] = *it;
    const BigInt abs = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs != 1 || d == 0) os << abs.str();
    if (d > 0) {
      if (abs != 1) os << "*";
      os << "q";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

IntPolynomial cyclotomic_poly(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly needs n >= 1");
  // Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
  std::map<int, IntPolynomial> known;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    IntPolynomial p = IntPolynomial::q_power_minus_one(d);
    for (const auto& [e, phi] : known) {
      if (d % e != 0) continue;
      auto q = p.divide_exact(phi);
      if (!q) throw std::logic_error("cyclotomic polynomial division failed");
      p = *q;
    }
    known.emplace(d, std::move(p));
  }
  return known.at(n);
}

namespace {

IntPolynomial poly_det(const std::vector<std::vector<IntPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial(BigInt(1));
  if (n == 1) return m[0][0];
  IntPolynomial sum;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[0][k].is_zero()) continue;
    std::vector<std::vector<IntPolynomial>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<IntPolynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != k) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    IntPolynomial term = m[0][k] * poly_det(minor);
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

IntPolynomial char_poly(const IMat& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<IntPolynomial>> qm(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      qm[i][j] = IntPolynomial(BigInt(-m[i][j]));
      if (i == j) qm[i][j] += IntPolynomial::monomial(1);
    }
  return poly_det(qm);
}

IntPolynomial FactoredPoly::expand() const {
  IntPolynomial p(BigInt(1));
  for (const auto& [base, mult] : factors)
    for (int k = 0; k < mult; ++k) p = p * base;
  return p;
}

std::string FactoredPoly::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [base, mult] : factors) {
    if (!first) os << " * ";
    first = false;
    const bool monomial_base = base.terms().size() == 1;
    if (monomial_base)
      os << base.to_string();
    else
      os << "(" << base.to_string() << ")";
    if (mult > 1) os << "^" << mult;
  }
  return os.str();
}

std::optional<FactoredPoly> cyclotomic_factorization(const IntPolynomial& p,
                                                     const std::vector<int>& orders) {
  if (p.is_zero()) return std::nullopt;
  std::vector<int> sorted(orders);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  FactoredPoly out;
  IntPolynomial rest = p;
  for (int d : sorted) {
    const IntPolynomial phi = cyclotomic_poly(d);
    int mult = 0;
    while (true) {
      auto q = rest.divide_exact(phi);
      if (!q) break;
      rest = *q;
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(phi, mult);
  }
  if (rest.degree() != 0 || rest.leading_coeff() != 1) return std::nullopt;
  return out;
}

IntPolynomial group_order_poly(const RootDatum& datum) {
  return group_order_factored(datum).expand();
}

FactoredPoly group_order_factored(const RootDatum& datum) {
  if (!datum.generated) throw std::invalid_argument("group_order_poly needs generated roots");
  const CoxeterData cox = coxeter_data(datum);
  FactoredPoly out;
  const int n_pos = static_cast<int>(datum.positive_count());
  if (n_pos > 0) out.factors.emplace_back(IntPolynomial::monomial(n_pos), 1);
  std::map<int, int> degree_mult;
  const int central = datum.rank - datum.node_count();
  if (central > 0) degree_mult[1] += central;  // (q-1) per central torus dimension
  for (int d : cox.degrees) ++degree_mult[d];
  for (const auto& [d, mult] : degree_mult)
    out.factors.emplace_back(IntPolynomial::q_power_minus_one(d), mult);
  return out;
}

IntPolynomial torus_order_poly(const WeylElement& w) { return char_poly(w.my); }

FactoredPoly torus_order_factored(const WeylElement& w) {
  const IntPolynomial p = torus_order_poly(w);
  const int n = w.order();
  std::vector<int> divisors;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  auto f = cyclotomic_factorization(p, divisors);
  if (!f) throw std::logic_error("torus order polynomial must split into cyclotomics");
  return *f;
}

IntPolynomial poincare_poly(const WeylGroup& group) {
  IntPolynomial p;
  for (const auto& w : group.elements) p += IntPolynomial::monomial(length(group, w));
  return p;
}

}  // namespace f4rigid
