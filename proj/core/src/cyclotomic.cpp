#include "f4rigid/cyclotomic.hpp"

#include "f4rigid/qpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace f4rigid {

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi needs n >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::vector<Rat> dense_phi(int n) {
  const IntPolynomial phi = cyclotomic_poly(n);
  std::vector<Rat> p(static_cast<std::size_t>(phi.degree()) + 1, Rat(0));
  for (const auto& [d, c] : phi.terms()) p[static_cast<std::size_t>(d)] = Rat(c);
  return p;
}

}  // namespace

void Cyclotomic::reduce() {
  const std::vector<Rat> phi = dense_phi(conductor_);
  const std::size_t dphi = phi.size() - 1;  // phi is monic
  while (coeffs_.size() > dphi) {
    const Rat lead = coeffs_.back();
    const std::size_t shift = coeffs_.size() - 1 - dphi;
    if (lead != 0)
      for (std::size_t k = 0; k <= dphi; ++k) coeffs_[shift + k] -= lead * phi[k];
    coeffs_.pop_back();
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Cyclotomic::Cyclotomic(const Rat& value) : conductor_(1) {
  if (value != 0) coeffs_.push_back(value);
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, std::int64_t exponent) {
  return from_terms(conductor, {{exponent, Rat(1)}});
}

Cyclotomic Cyclotomic::from_terms(int conductor,
                                  const std::vector<std::pair<std::int64_t, Rat>>& terms) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  Cyclotomic c;
  c.conductor_ = conductor;
  c.coeffs_.assign(static_cast<std::size_t>(conductor), Rat(0));
  for (const auto& [e, coeff] : terms) {
    std::int64_t folded = e % conductor;
    if (folded < 0) folded += conductor;
    c.coeffs_[static_cast<std::size_t>(folded)] += coeff;
  }
  c.reduce();
  return c;
}

Rat Cyclotomic::to_rational() const {
  if (coeffs_.empty()) return Rat(0);
  if (coeffs_.size() == 1) return coeffs_[0];
  throw std::domain_error("cyclotomic value is not rational: " + to_string());
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<std::pair<std::int64_t, Rat>> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0)
      terms.emplace_back(static_cast<std::int64_t>((conductor_ - k) % conductor_), coeffs_[k]);
  return from_terms(conductor_, terms);
}

Cyclotomic Cyclotomic::promoted(int new_conductor) const {
  if (new_conductor % conductor_ != 0)
    throw std::invalid_argument("promotion target must be a multiple of the conductor");
  const int stride = new_conductor / conductor_;
  std::vector<std::pair<std::int64_t, Rat>> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) terms.emplace_back(static_cast<std::int64_t>(k) * stride, coeffs_[k]);
  return from_terms(new_conductor, terms);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic c(*this);
  for (auto& x : c.coeffs_) x = -x;
  return c;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = std::lcm(a.conductor_, b.conductor_);
  Cyclotomic pa = a.promoted(n);
  const Cyclotomic pb = b.promoted(n);
  if (pa.coeffs_.size() < pb.coeffs_.size()) pa.coeffs_.resize(pb.coeffs_.size(), Rat(0));
  for (std::size_t k = 0; k < pb.coeffs_.size(); ++k) pa.coeffs_[k] += pb.coeffs_[k];
  while (!pa.coeffs_.empty() && pa.coeffs_.back() == 0) pa.coeffs_.pop_back();
  return pa;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const int n = std::lcm(a.conductor_, b.conductor_);
  const Cyclotomic pa = a.promoted(n);
  const Cyclotomic pb = b.promoted(n);
  Cyclotomic out;
  out.conductor_ = n;
  if (pa.coeffs_.empty() || pb.coeffs_.empty()) return out;
  out.coeffs_.assign(pa.coeffs_.size() + pb.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < pa.coeffs_.size(); ++i) {
    if (pa.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < pb.coeffs_.size(); ++j)
      out.coeffs_[i + j] += pa.coeffs_[i] * pb.coeffs_[j];
  }
  out.reduce();
  return out;
}

Cyclotomic Cyclotomic::scaled(const Rat& factor) const {
  Cyclotomic c(*this);
  if (factor == 0) {
    c.coeffs_.clear();
    return c;
  }
  for (auto& x : c.coeffs_) x *= factor;
  return c;
}

Cyclotomic Cyclotomic::divided(const Rat& divisor) const {
  if (divisor == 0) throw std::invalid_argument("division by zero");
  return scaled(Rat(1) / divisor);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  const int n = std::lcm(conductor_, o.conductor_);
  return promoted(n).coeffs_ == o.promoted(n).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rat abs = negative ? Rat(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool unit = (abs == 1);
    if (!unit || k == 0) {
      os << numerator(abs).str();
      if (denominator(abs) != 1) os << "/" << denominator(abs).str();
    }
    if (k > 0) {
      if (!unit) os << "*";
      os << "z" << conductor_;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace f4rigid
