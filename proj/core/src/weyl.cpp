#include "f4rigid/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace f4rigid {

WeylElement WeylElement::identity_element(int rank) {
  return {identity_matrix(rank), identity_matrix(rank)};
}

WeylElement WeylElement::from_x_matrix(const IMat& m) {
  return {m, mat_transpose(mat_inverse_unimodular(m))};
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  return {mat_mul(mx, o.mx), mat_mul(my, o.my)};
}

WeylElement WeylElement::inverse() const { return {mat_transpose(my), mat_transpose(mx)}; }

int WeylElement::order() const {
  const IMat id = identity_matrix(static_cast<int>(mx.size()));
  IMat acc = mx;
  int n = 1;
  while (acc != id) {
    acc = mat_mul(acc, mx);
    if (++n > 10'000) throw std::runtime_error("element order cap exceeded");
  }
  return n;
}

std::optional<std::size_t> WeylGroup::index_of(const WeylElement& w) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), w);
  if (it == elements.end() || !(*it == w)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<WeylElement> simple_reflections(const RootDatum& datum) {
  std::vector<WeylElement> out;
  const int n = datum.rank;
  for (int k = 0; k < datum.node_count(); ++k) {
    const IVec& alpha = datum.simple_roots[k];
    const IVec& coroot = datum.simple_coroots[k];
    WeylElement s;
    s.mx.assign(n, IVec(n, 0));
    s.my.assign(n, IVec(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        s.mx[a][b] = (a == b ? 1 : 0) - coroot[a] * alpha[b];
        s.my[a][b] = (a == b ? 1 : 0) - alpha[a] * coroot[b];
      }
    out.push_back(std::move(s));
  }
  return out;
}

WeylGroup enumerate_weyl(const RootDatum& datum) {
  if (!datum.generated) throw std::invalid_argument("enumerate_weyl needs generated roots");
  WeylGroup g;
  g.datum = datum;
  g.generators = simple_reflections(datum);
  const WeylElement id = WeylElement::identity_element(datum.rank);
  std::map<IMat, WeylElement> seen;
  seen.emplace(id.mx, id);
  std::vector<WeylElement> work{id};
  while (!work.empty()) {
    const WeylElement w = work.back();
    work.pop_back();
    for (const auto& s : g.generators) {
      WeylElement next = w * s;
      if (seen.emplace(next.mx, next).second) {
        if (seen.size() > kWeylEnumerationCap)
          throw std::runtime_error("Weyl enumeration cap exceeded for " + datum.label);
        work.push_back(std::move(next));
      }
    }
  }
  g.elements.reserve(seen.size());
  for (auto& [mx, w] : seen) g.elements.push_back(std::move(w));
  return g;
}

std::vector<IVec> weyl_orbit_x(const std::vector<WeylElement>& generators, const IVec& point) {
  return orbit_closure(generators, point,
                       [](const IVec& v, const WeylElement& w) { return row_apply(v, w.mx); });
}

std::vector<IVec> weyl_orbit_y(const std::vector<WeylElement>& generators, const IVec& point) {
  return orbit_closure(generators, point,
                       [](const IVec& v, const WeylElement& w) { return row_apply(v, w.my); });
}

std::vector<WeylClass> conjugacy_classes(const WeylGroup& group) {
  const std::size_t n = group.size();
  std::vector<bool> visited(n, false);
  std::vector<WeylClass> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    // elements are sorted, so the first unvisited member is the class minimum
    WeylClass cls;
    cls.representative = group.elements[i];
    std::vector<std::size_t> work{i};
    visited[i] = true;
    cls.size = 1;
    while (!work.empty()) {
      const WeylElement w = group.elements[work.back()];
      work.pop_back();
      for (const auto& s : group.generators) {
        const WeylElement conj = s * w * s;  // simple reflections are involutions
        const auto idx = group.index_of(conj);
        if (!idx) throw std::logic_error("conjugate left the enumerated group");
        if (!visited[*idx]) {
          visited[*idx] = true;
          ++cls.size;
          work.push_back(*idx);
        }
      }
    }
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const WeylClass& a, const WeylClass& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });
  return out;
}

namespace {

// Exponents of one component from the cyclotomic factors of the Coxeter
// element's characteristic polynomial: a primitive d-th root of unity
// e^(2 pi i k / d) contributes the exponent k * h / d.
std::vector<int> exponents_from_char_poly(const IntPolynomial& p, int h, int fixed_dims,
                                          const std::string& label) {
  std::vector<int> divisors;
  for (int d = 1; d <= h; ++d)
    if (h % d == 0) divisors.push_back(d);
  const auto factored = cyclotomic_factorization(p, divisors);
  if (!factored)
    throw std::logic_error("Coxeter element characteristic polynomial did not split for " + label);
  std::vector<int> exps;
  int ones_seen = 0;
  for (const auto& [base, mult] : factored->factors) {
    // recover d from the factor by matching Phi_d
    int d = 0;
    for (int cand : divisors)
      if (cyclotomic_poly(cand) == base) {
        d = cand;
        break;
      }
    if (d == 0) throw std::logic_error("unexpected factor in Coxeter characteristic polynomial");
    if (d == 1) {
      ones_seen = mult;  // eigenvalue 1 comes only from directions fixed by the component
      continue;
    }
    for (int k = 1; k <= d; ++k)
      if (std::gcd(k, d) == 1)
        for (int copy = 0; copy < mult; ++copy) exps.push_back(k * (h / d));
  }
  if (ones_seen != fixed_dims)
    throw std::logic_error("unexpected unit eigenvalues of the Coxeter element for " + label);
  std::sort(exps.begin(), exps.end());
  return exps;
}

}  // namespace

CoxeterData coxeter_data(const RootDatum& datum) {
  const auto refl = simple_reflections(datum);
  const int m = datum.node_count();

  // connected components of the Dynkin graph
  std::vector<int> comp(m, -1);
  int n_comp = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = n_comp;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < m; ++j)
        if (comp[j] < 0 && datum.cartan[i][j] != 0) {
          comp[j] = n_comp;
          stack.push_back(j);
        }
    }
    ++n_comp;
  }

  CoxeterData out;
  for (int c = 0; c < n_comp; ++c) {
    WeylElement cox = WeylElement::identity_element(datum.rank);
    int comp_rank = 0;
    for (int k = 0; k < m; ++k)
      if (comp[k] == c) {
        cox = cox * refl[k];
        ++comp_rank;
      }
    const int h = cox.order();
    const auto exps = exponents_from_char_poly(char_poly(cox.mx), h, datum.rank - comp_rank,
                                               datum.label);
    out.exponents.insert(out.exponents.end(), exps.begin(), exps.end());
  }

  // order of the full Coxeter element s_1 ... s_m in node order
  WeylElement full = WeylElement::identity_element(datum.rank);
  for (int k = 0; k < m; ++k) full = full * refl[k];
  out.coxeter_number = full.order();

  std::sort(out.exponents.begin(), out.exponents.end());
  out.degrees.reserve(out.exponents.size());
  for (int e : out.exponents) out.degrees.push_back(e + 1);
  return out;
}

int length(const WeylGroup& group, const WeylElement& w) {
  if (!group.contains(w)) throw std::invalid_argument("element is not in the group");
  int count = 0;
  for (const auto& p : group.datum.roots) {
    if (!p.positive()) continue;
    const IVec image = row_apply(p.root, w.mx);
    const auto idx = group.datum.root_index(image);
    if (!idx) throw std::logic_error("Weyl element does not permute the roots");
    if (!group.datum.roots[*idx].positive()) ++count;
  }
  return count;
}

}  // namespace f4rigid
