#include "f4rigid/chartable.hpp"

#include <sstream>
#include <stdexcept>

namespace f4rigid {

int CharacterTable::class_index(const std::string& name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name) return static_cast<int>(i);
  throw std::out_of_range("no table class named " + name);
}

TableValidation validate_table(const CharacterTable& t) {
  TableValidation v;
  auto fail = [&v](const std::string& msg) { v.violations.push_back(msg); };

  if (t.order <= 0) fail("group order must be positive");
  if (t.classes.empty()) fail("no classes");
  if (t.chars.size() != t.classes.size())
    fail("character count differs from class count (" + std::to_string(t.chars.size()) + " vs " +
         std::to_string(t.classes.size()) + ")");
  for (const auto& row : t.chars)
    if (row.size() != t.classes.size()) fail("ragged character row");
  if (!v.violations.empty()) return v;  // shape errors make the rest meaningless

  if (t.classes[0].size != 1 || t.classes[0].element_order != 1)
    fail("first class must be the identity class");

  long long size_sum = 0;
  for (const auto& c : t.classes) size_sum += c.size;
  if (size_sum != t.order)
    fail("class sizes sum to " + std::to_string(size_sum) + ", not |G| = " +
         std::to_string(t.order));

  Rat degree_square_sum(0);
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    const Cyclotomic& deg = t.chars[i][0];
    if (!deg.is_rational() || deg.to_rational() <= 0 || denominator(deg.to_rational()) != 1) {
      fail("degree of character " + std::to_string(i + 1) + " is not a positive integer");
      continue;
    }
    const Rat d = deg.to_rational();
    degree_square_sum += d * d;
  }
  if (degree_square_sum != t.order)
    fail("sum of squared degrees is " + frac_string(degree_square_sum) + ", not |G|");

  // row orthogonality: sum_c |c| chi_i(c) conj(chi_j(c)) = |G| delta_ij
  for (std::size_t i = 0; i < t.chars.size(); ++i)
    for (std::size_t j = i; j < t.chars.size(); ++j) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < t.classes.size(); ++c)
        sum = sum + (t.chars[i][c] * t.chars[j][c].conj()).scaled(Rat(t.classes[c].size));
      const Cyclotomic expected(i == j ? Rat(t.order) : Rat(0));
      if (!(sum == expected))
        fail("row orthogonality fails for characters " + std::to_string(i + 1) + " and " +
             std::to_string(j + 1));
    }

  // column orthogonality: sum_chi chi(c) conj(chi(c')) = delta |C_G(c)|
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    for (std::size_t d = c; d < t.classes.size(); ++d) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < t.chars.size(); ++i)
        sum = sum + t.chars[i][c] * t.chars[i][d].conj();
      const Cyclotomic expected(c == d ? Rat(t.order, t.classes[c].size) : Rat(0));
      if (!(sum == expected))
        fail("column orthogonality fails for classes " + t.classes[c].name + " and " +
             t.classes[d].name);
    }

  v.valid = v.violations.empty();
  return v;
}

Cyclotomic structure_constant(const CharacterTable& t, int c1, int c2, int c3) {
  for (int c : {c1, c2, c3})
    if (c < 0 || c >= static_cast<int>(t.classes.size()))
      throw std::out_of_range("class index out of range");
  const Rat order(t.order);
  Rat z_product(1);
  for (int c : {c1, c2, c3}) {
    if (t.order % t.classes[static_cast<std::size_t>(c)].size != 0)
      throw std::invalid_argument("class size does not divide the group order");
    z_product *= Rat(t.order / t.classes[static_cast<std::size_t>(c)].size);
  }
  Cyclotomic sum;
  for (const auto& chi : t.chars) {
    const Rat degree = chi[0].to_rational();
    const Cyclotomic term = chi[static_cast<std::size_t>(c1)] *
                            chi[static_cast<std::size_t>(c2)] *
                            chi[static_cast<std::size_t>(c3)];
    sum = sum + term.divided(degree);
  }
  return sum.scaled(order / z_product);
}

std::optional<std::string> table_class_mismatch(const CharacterTable& t,
                                                const ClassPartition& part) {
  if (t.classes.size() != part.classes.size()) {
    std::ostringstream os;
    os << "table has " << t.classes.size() << " classes, group has " << part.classes.size();
    return os.str();
  }
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    const TableClass& tc = t.classes[i];
    const ConjClass& gc = part.classes[i];
    if (tc.name != gc.name || tc.size != static_cast<long long>(gc.size) ||
        tc.element_order != gc.element_order) {
      std::ostringstream os;
      os << "class " << i + 1 << ": table has (" << tc.name << ", size " << tc.size << ", order "
         << tc.element_order << "), group has (" << gc.name << ", size " << gc.size << ", order "
         << gc.element_order << ")";
      return os.str();
    }
  }
  return std::nullopt;
}

}  // namespace f4rigid
