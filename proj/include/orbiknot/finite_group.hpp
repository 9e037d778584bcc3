#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbiknot {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite group stored as a full multiplication table over 0..N-1 with the
// identity at 0.
class FiniteGroup {
 public:
  using Element = std::uint16_t;

  static constexpr std::size_t kDefaultCap = 2000;

  /// Validates identity and inverse axioms fully and associativity on a
  /// fixed sample of triples. `table[a*N + b]` is a*b.
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
              std::vector<Element> generators);

  std::string const &name() const { return name_; }
  std::size_t order() const { return order_; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  int element_order(Element a) const { return element_order_[a]; }
  std::vector<Element> const &generators() const { return generators_; }
  std::vector<Element> const &involutions() const { return involutions_; }

  /// Size of the subgroup generated by `elements`.
  std::size_t subgroup_order(std::span<Element const> elements) const;
  bool generates(std::span<Element const> elements) const {
    return subgroup_order(elements) == order_;
  }

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> generators_;
  std::vector<Element> inverse_;
  std::vector<int> element_order_;
  std::vector<Element> involutions_;
};

// Permutation of {0..k-1}; p[i] is the image of i. Products apply the left
// factor first.
using Permutation = std::vector<int>;

/// Permutation from 1-based cycles on k points, e.g. {{1,2,3},{4,5}}.
Permutation from_cycles(int points, std::vector<std::vector<int>> const &cycles);

/// Cayley closure under right multiplication. Throws GroupError above `cap`.
FiniteGroup group_from_permutations(std::vector<Permutation> const &gens,
                                    std::size_t cap = FiniteGroup::kDefaultCap,
                                    std::string name = "");

/// D_2n of order 2n: rotations 0..n-1, reflections n..2n-1. dihedral(1) is Z/2.
FiniteGroup dihedral(int n);
FiniteGroup cyclic(int n);
FiniteGroup symmetric(int k);
FiniteGroup alternating(int k);
FiniteGroup direct_product(FiniteGroup const &a, FiniteGroup const &b);

/// "D6", "Z2", "S4", "A5", "S3xZ2", "trivial".
FiniteGroup named_group(std::string const &name);

/// dihedral(2..13), A4, S4, A5, S3xZ2.
std::vector<FiniteGroup> default_battery();

}  // namespace orbiknot
