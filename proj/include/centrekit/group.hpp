#pragma once

#include <memory>
#include <vector>

#include "centrekit/numerics.hpp"

namespace centrekit {

/// A finite group given by its full Cayley table. Index 0 is always the
/// identity. Conjugacy classes, inverses and the exponent are derived and
/// cached at construction; associativity is checked exhaustively.
class FiniteGroup {
 public:
  FiniteGroup() = default;  // empty placeholder; factories produce valid groups

  static constexpr int kIdentity = 0;

  int order() const { return n_; }
  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g) * n_ + h]; }
  int inv(int g) const { return inv_[g]; }
  int conjugate(int h, int g) const { return mul(mul(h, g), inv(h)); }  // h g h^-1
  int power(int g, int k) const;
  int element_order(int g) const;
  int exponent() const { return exponent_; }

  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_index(int g) const { return class_of_[g]; }
  std::vector<int> class_representatives() const;
  std::vector<int> class_sizes() const;

  bool is_central(int g) const;

  bool operator==(const FiniteGroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

  friend FiniteGroup group_from_cayley(const std::vector<std::vector<int>>& table);

 private:
  void derive();  // inverses, classes, exponent; validates group axioms

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;  // ordered by minimal element
  std::vector<int> class_of_;
  int exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroup group_from_cayley(const std::vector<std::vector<int>>& table);

/// Closure of permutation generators on {0..m-1}; identity becomes index 0,
/// remaining elements are numbered in breadth-first discovery order.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                    int cap = 1024);

enum class GroupFamily { Cyclic, Dihedral, Symmetric, Quaternion, ProductCyclic };

FiniteGroup builtin_group(GroupFamily family, const std::vector<int>& params = {});

/// All x with x^2 = e, x central, x != e.
std::vector<int> central_involutions(const FiniteGroup& g);

struct Subgroup {
  std::vector<int> elements;  // ascending; elements[i] realises subgroup index i
  FiniteGroup group;
};

Subgroup centralizer(const FiniteGroup& g, int x);

/// A finite super-group (G, omega): omega central of order dividing two.
/// omega = 0 (the identity) is the degenerate case and recovers the plain
/// model everywhere downstream.
struct SuperGroup {
  GroupPtr group;
  int omega = 0;
};

SuperGroup make_super_group(GroupPtr group, int omega);

}  // namespace centrekit
