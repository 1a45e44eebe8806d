#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace f4rigid {

/// Permutation of {0..n-1} as an image array.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
/// Apply a, then b: (a*b)[i] = b[a[i]].
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
/// g^-1 * x * g
Perm perm_conjugate(const Perm& x, const Perm& g);
int perm_order(const Perm& a);
bool is_permutation(const Perm& a);

inline constexpr std::size_t kPermOrderCap = 200'000;

/// Small permutation group enumerated by generator closure.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  /// All elements, sorted lexicographically (enumerated on first use).
  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }
  std::size_t index_of(const Perm& p) const;  // throws when absent
  bool contains(const Perm& p) const;

 private:
  int degree_;
  std::vector<Perm> generators_;
  mutable std::vector<Perm> elements_;
};

struct ConjClass {
  std::string name;     // "1a", "2a", ...
  Perm representative;  // lexicographically least member
  std::size_t size = 0;
  int element_order = 0;
  std::size_t centralizer_order = 0;
};

struct ClassPartition {
  std::vector<ConjClass> classes;
  std::vector<int> class_of;  // element index -> class index
  int index_of_name(const std::string& name) const;  // throws when absent
};

/// Full class partition by direct conjugation; classes sorted by
/// (element order, representative) and named <order><letter>.
ClassPartition conjugacy_classes_perm(const PermGroup& g);

/// |{(x,y) in c1 x c2 : (xy)^-1 in c3}| by direct double loop.
long long count_triples(const PermGroup& g, const ClassPartition& part, int c1, int c2, int c3);

/// Whether k-th powers stay in the class for every k coprime to the element order.
bool class_is_rational(const PermGroup& g, const ClassPartition& part, int c);

}  // namespace f4rigid
