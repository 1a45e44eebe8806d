#include "f4rigid/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace f4rigid {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation degree mismatch");
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

Perm perm_conjugate(const Perm& x, const Perm& g) {
  return perm_compose(perm_compose(perm_inverse(g), x), g);
}

int perm_order(const Perm& a) {
  const Perm id = perm_identity(static_cast<int>(a.size()));
  Perm acc = a;
  int n = 1;
  while (acc != id) {
    acc = perm_compose(acc, a);
    ++n;
  }
  return n;
}

bool is_permutation(const Perm& a) {
  std::vector<bool> hit(a.size(), false);
  for (int img : a) {
    if (img < 0 || img >= static_cast<int>(a.size()) || hit[static_cast<std::size_t>(img)])
      return false;
    hit[static_cast<std::size_t>(img)] = true;
  }
  return true;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 1) throw std::invalid_argument("degree must be >= 1");
  if (generators_.empty()) generators_.push_back(perm_identity(degree_));
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != degree_)
      throw std::invalid_argument("generator degree mismatch");
    if (!is_permutation(g)) throw std::invalid_argument("generator is not a bijection");
  }
}

const std::vector<Perm>& PermGroup::elements() const {
  if (!elements_.empty()) return elements_;
  std::set<Perm> seen{perm_identity(degree_)};
  std::vector<Perm> work(seen.begin(), seen.end());
  while (!work.empty()) {
    const Perm p = work.back();
    work.pop_back();
    for (const auto& g : generators_) {
      Perm q = perm_compose(p, g);
      if (seen.insert(q).second) {
        if (seen.size() > kPermOrderCap)
          throw std::runtime_error("permutation group enumeration cap exceeded");
        work.push_back(std::move(q));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  return elements_;
}

std::size_t PermGroup::index_of(const Perm& p) const {
  const auto& els = elements();
  const auto it = std::lower_bound(els.begin(), els.end(), p);
  if (it == els.end() || *it != p) throw std::out_of_range("permutation is not in the group");
  return static_cast<std::size_t>(it - els.begin());
}

bool PermGroup::contains(const Perm& p) const {
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), p);
}

int ClassPartition::index_of_name(const std::string& name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name) return static_cast<int>(i);
  throw std::out_of_range("no conjugacy class named " + name);
}

ClassPartition conjugacy_classes_perm(const PermGroup& g) {
  const auto& els = g.elements();
  const std::size_t n = els.size();
  ClassPartition part;
  part.class_of.assign(n, -1);

  struct RawClass {
    std::size_t rep_index;
    std::vector<std::size_t> members;
    int element_order;
  };
  std::vector<RawClass> raw;
  for (std::size_t i = 0; i < n; ++i) {
    if (part.class_of[i] >= 0) continue;
    RawClass cls;
    cls.rep_index = i;  // ascending scan: first unvisited member is the minimum
    cls.element_order = perm_order(els[i]);
    std::vector<std::size_t> work{i};
    part.class_of[i] = static_cast<int>(raw.size());
    cls.members.push_back(i);
    while (!work.empty()) {
      const Perm p = els[work.back()];
      work.pop_back();
      for (const auto& gen : g.generators()) {
        const std::size_t j = g.index_of(perm_conjugate(p, gen));
        if (part.class_of[j] < 0) {
          part.class_of[j] = static_cast<int>(raw.size());
          cls.members.push_back(j);
          work.push_back(j);
        }
      }
    }
    raw.push_back(std::move(cls));
  }

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].element_order != raw[b].element_order)
      return raw[a].element_order < raw[b].element_order;
    return els[raw[a].rep_index] < els[raw[b].rep_index];
  });

  std::vector<int> relabel(raw.size());
  int previous_order = 0;
  int letter = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const RawClass& cls = raw[order[k]];
    letter = (cls.element_order == previous_order) ? letter + 1 : 0;
    previous_order = cls.element_order;
    ConjClass out;
    out.name = std::to_string(cls.element_order) + static_cast<char>('a' + letter);
    out.representative = els[cls.rep_index];
    out.size = cls.members.size();
    out.element_order = cls.element_order;
    out.centralizer_order = n / cls.members.size();
    relabel[order[k]] = static_cast<int>(k);
    part.classes.push_back(std::move(out));
  }
  for (auto& c : part.class_of) c = relabel[static_cast<std::size_t>(c)];
  return part;
}

long long count_triples(const PermGroup& g, const ClassPartition& part, int c1, int c2, int c3) {
  const auto& els = g.elements();
  std::vector<std::size_t> m1, m2;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (part.class_of[i] == c1) m1.push_back(i);
    if (part.class_of[i] == c2) m2.push_back(i);
  }
  long long count = 0;
  for (const std::size_t xi : m1)
    for (const std::size_t yi : m2) {
      const Perm z = perm_inverse(perm_compose(els[xi], els[yi]));
      if (part.class_of[g.index_of(z)] == c3) ++count;
    }
  return count;
}

bool class_is_rational(const PermGroup& g, const ClassPartition& part, int c) {
  const ConjClass& cls = part.classes[static_cast<std::size_t>(c)];
  const int m = cls.element_order;
  Perm power = perm_identity(g.degree());
  for (int k = 1; k < m; ++k) {
    power = perm_compose(power, cls.representative);
    if (std::gcd(k, m) != 1) continue;
    if (part.class_of[g.index_of(power)] != c) return false;
  }
  return true;
}

}  // namespace f4rigid
