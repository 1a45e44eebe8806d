#include "f4rigid/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace f4rigid {

namespace {

constexpr std::size_t kRootGenerationCap = 100'000;

// Canonical component order: letter ascending, then rank descending,
// matching the usual rendering of mixed types such as "A1+C3" and "A2+A1".
bool component_less(const std::pair<char, int>& a, const std::pair<char, int>& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second > b.second;
}

}  // namespace

SubsystemType SubsystemType::single(char letter, int rank) {
  SubsystemType t;
  t.components.emplace_back(letter, rank);
  return t;
}

SubsystemType SubsystemType::parse(const std::string& text) {
  SubsystemType t;
  if (text.empty() || text == "1") return t;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.size() < 2) throw std::invalid_argument("malformed type component: " + part);
    const char letter = part[0];
    const int rank = std::stoi(part.substr(1));
    t.components.emplace_back(letter, rank);
  }
  t.canonicalize();
  return t;
}

void SubsystemType::canonicalize() {
  std::sort(components.begin(), components.end(), component_less);
}

int SubsystemType::total_rank() const {
  int r = 0;
  for (const auto& [letter, rank] : components) r += rank;
  return r;
}

std::string SubsystemType::to_string() const {
  if (components.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) os << "+";
    os << components[i].first << components[i].second;
  }
  return os.str();
}

bool RootPair::positive() const {
  for (auto c : simple_coeffs)
    if (c != 0) return c > 0;
  return false;
}

int RootDatum::node_position(int node) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == node) return static_cast<int>(i);
  throw std::out_of_range("node " + std::to_string(node) + " is not in datum " + label);
}

std::optional<std::size_t> RootDatum::root_index(const IVec& root) const {
  const auto it = std::lower_bound(roots.begin(), roots.end(), root,
                                   [](const RootPair& p, const IVec& v) { return p.root < v; });
  if (it == roots.end() || it->root != root) return std::nullopt;
  return static_cast<std::size_t>(it - roots.begin());
}

std::size_t RootDatum::positive_count() const {
  std::size_t n = 0;
  for (const auto& p : roots)
    if (p.positive()) ++n;
  return n;
}

RootDatum build_root_datum(const IMat& cartan, const std::string& label) {
  const std::size_t n = cartan.size();
  if (n == 0) throw std::invalid_argument("empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i].size() != n) throw std::invalid_argument("Cartan matrix is not square");
    if (cartan[i][i] != 2)
      throw std::invalid_argument("cartan[" + std::to_string(i + 1) + "][" +
                                  std::to_string(i + 1) + "] = " + std::to_string(cartan[i][i]) +
                                  ", expected 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0)
        throw std::invalid_argument("cartan[" + std::to_string(i + 1) + "][" +
                                    std::to_string(j + 1) + "] = " + std::to_string(cartan[i][j]) +
                                    " must be non-positive");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw std::invalid_argument("cartan[" + std::to_string(i + 1) + "][" +
                                    std::to_string(j + 1) + "] and its mirror must vanish together");
    }
  }
  RootDatum d;
  d.label = label;
  d.rank = static_cast<int>(n);
  d.nodes.resize(n);
  std::iota(d.nodes.begin(), d.nodes.end(), 1);
  d.cartan = cartan;
  d.simple_roots = cartan;  // rows are the simple roots in X coordinates
  for (std::size_t i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    d.simple_coroots.push_back(std::move(e));
  }
  return d;
}

std::int64_t pairing(const IVec& x, const IVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pairing: length mismatch");
  return dot(x, y);
}

RootDatum generate_roots(RootDatum datum) {
  if (datum.generated) return datum;
  const int m = datum.node_count();
  std::map<IVec, RootPair> seen;
  std::vector<RootPair> work;
  for (int k = 0; k < m; ++k) {
    RootPair p;
    p.root = datum.simple_roots[k];
    p.coroot = datum.simple_coroots[k];
    p.simple_coeffs.assign(m, 0);
    p.simple_coeffs[k] = 1;
    if (seen.emplace(p.root, p).second) work.push_back(p);
  }
  while (!work.empty()) {
    const RootPair p = work.back();
    work.pop_back();
    for (int k = 0; k < m; ++k) {
      const std::int64_t cx = pairing(p.root, datum.simple_coroots[k]);
      const std::int64_t cy = pairing(datum.simple_roots[k], p.coroot);
      RootPair q;
      q.root = vec_sub(p.root, vec_scale(datum.simple_roots[k], cx));
      q.coroot = vec_sub(p.coroot, vec_scale(datum.simple_coroots[k], cy));
      q.simple_coeffs = p.simple_coeffs;
      q.simple_coeffs[k] -= cx;
      if (seen.emplace(q.root, q).second) {
        if (seen.size() > kRootGenerationCap)
          throw std::runtime_error("root generation cap exceeded for " + datum.label);
        work.push_back(std::move(q));
      }
    }
  }
  datum.roots.clear();
  datum.roots.reserve(seen.size());
  for (auto& [root, pair] : seen) datum.roots.push_back(std::move(pair));
  // closure sanity: negation-closed, pairing(root, coroot) = 2
  for (const auto& p : datum.roots) {
    if (pairing(p.root, p.coroot) != 2)
      throw std::logic_error("generated pair with pairing != 2 in " + datum.label);
    if (!seen.count(vec_neg(p.root)))
      throw std::logic_error("generated root set is not negation-closed in " + datum.label);
  }
  datum.generated = true;
  return datum;
}

RootDatum levi_datum(const RootDatum& datum, int removed_node) {
  const int pos = datum.node_position(removed_node);  // throws when out of range
  RootDatum sub;
  sub.label = "L" + std::to_string(removed_node);
  sub.rank = datum.rank;
  for (int k = 0; k < datum.node_count(); ++k) {
    if (k == pos) continue;
    sub.nodes.push_back(datum.nodes[k]);
    sub.simple_roots.push_back(datum.simple_roots[k]);
    sub.simple_coroots.push_back(datum.simple_coroots[k]);
  }
  const int m = sub.node_count();
  sub.cartan.assign(m, IVec(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sub.cartan[i][j] = pairing(sub.simple_roots[i], sub.simple_coroots[j]);
  return sub;
}

namespace {

struct CatalogueEntry {
  char letter;
  int rank;
  IMat cartan;
};

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = [] {
    std::vector<CatalogueEntry> v;
    for (int r = 1; r <= 4; ++r) v.push_back({'A', r, irreducible_cartan('A', r)});
    for (int r = 2; r <= 4; ++r) v.push_back({'B', r, irreducible_cartan('B', r)});
    for (int r = 3; r <= 4; ++r) v.push_back({'C', r, irreducible_cartan('C', r)});
    v.push_back({'D', 4, irreducible_cartan('D', 4)});
    v.push_back({'F', 4, irreducible_cartan('F', 4)});
    v.push_back({'G', 2, irreducible_cartan('G', 2)});
    return v;
  }();
  return entries;
}

bool matches_under_permutation(const IMat& block, const IMat& target) {
  const std::size_t n = block.size();
  if (target.size() != n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = 0; ok && j < n; ++j)
        if (block[perm[i]][perm[j]] != target[i][j]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

IMat irreducible_cartan(char letter, int rank) {
  auto chain = [](int r) {
    IMat m(r, IVec(r, 0));
    for (int i = 0; i < r; ++i) {
      m[i][i] = 2;
      if (i + 1 < r) {
        m[i][i + 1] = -1;
        m[i + 1][i] = -1;
      }
    }
    return m;
  };
  switch (letter) {
    case 'A':
      if (rank >= 1) return chain(rank);
      break;
    case 'B':
      // last simple root short: <alpha_{r-1}, alpha_r^vee> = -2
      if (rank >= 2) {
        IMat m = chain(rank);
        m[rank - 2][rank - 1] = -2;
        return m;
      }
      break;
    case 'C':
      // last simple root long: <alpha_r, alpha_{r-1}^vee> = -2
      if (rank >= 3) {
        IMat m = chain(rank);
        m[rank - 1][rank - 2] = -2;
        return m;
      }
      break;
    case 'D':
      if (rank == 4) {
        IMat m(4, IVec(4, 0));
        for (int i = 0; i < 4; ++i) m[i][i] = 2;
        for (int leaf : {0, 2, 3}) {
          m[1][leaf] = -1;
          m[leaf][1] = -1;
        }
        return m;
      }
      break;
    case 'F':
      if (rank == 4)
        return IMat{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
      break;
    case 'G':
      if (rank == 2) return IMat{{2, -1}, {-3, 2}};
      break;
    default:
      break;
  }
  throw std::invalid_argument(std::string("no catalogue Cartan matrix for type ") + letter +
                              std::to_string(rank));
}

RootDatum catalogue_datum(const SubsystemType& type, const std::string& label) {
  if (type.components.empty()) throw std::invalid_argument("catalogue_datum: empty type");
  const int total = type.total_rank();
  IMat big(total, IVec(total, 0));
  int off = 0;
  for (const auto& [letter, rank] : type.components) {
    const IMat block = irreducible_cartan(letter, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) big[off + i][off + j] = block[i][j];
    off += rank;
  }
  return build_root_datum(big, label.empty() ? type.to_string() : label);
}

SubsystemType classify_subsystem(const RootDatum& datum, const std::vector<RootPair>& subset) {
  (void)datum;
  SubsystemType result;
  if (subset.empty()) return result;

  std::set<IVec> all;
  for (const auto& p : subset) all.insert(p.root);
  for (const auto& p : subset)
    if (!all.count(vec_neg(p.root)))
      throw std::invalid_argument("subset is not closed under negation (offending root " +
                                  vec_to_string(p.root) + ")");

  // positive half under the lexicographic order, then the simple system:
  // positives that are not sums of two positives
  std::vector<const RootPair*> positives;
  std::set<IVec> positive_set;
  for (const auto& p : subset)
    if (lex_positive(p.root)) {
      positives.push_back(&p);
      positive_set.insert(p.root);
    }
  std::vector<const RootPair*> simples;
  for (const auto* p : positives) {
    bool decomposable = false;
    for (const auto* q : positives) {
      if (q->root == p->root) continue;
      if (positive_set.count(vec_sub(p->root, q->root))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(p);
  }

  const std::size_t m = simples.size();
  IMat cartan(m, IVec(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      cartan[i][j] = pairing(simples[i]->root, simples[j]->coroot);

  // connected components of the Dynkin graph
  std::vector<int> comp(m, -1);
  int n_comp = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = n_comp;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < m; ++j)
        if (comp[j] < 0 && cartan[i][j] != 0) {
          comp[j] = n_comp;
          stack.push_back(j);
        }
    }
    ++n_comp;
  }

  for (int c = 0; c < n_comp; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if (comp[i] == c) idx.push_back(i);
    IMat block(idx.size(), IVec(idx.size(), 0));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) block[i][j] = cartan[idx[i]][idx[j]];
    bool matched = false;
    for (const auto& entry : catalogue()) {
      if (entry.rank != static_cast<int>(idx.size())) continue;
      if (matches_under_permutation(block, entry.cartan)) {
        result.components.emplace_back(entry.letter, entry.rank);
        matched = true;
        break;
      }
    }
    if (!matched)
      throw std::invalid_argument("unrecognized Cartan block " + mat_to_string(block) +
                                  " (subset is not a subsystem of catalogue type)");
  }
  result.canonicalize();
  return result;
}

}  // namespace f4rigid
