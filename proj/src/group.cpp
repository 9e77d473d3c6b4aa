#include "centrekit/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace centrekit {

int FiniteGroup::power(int g, int k) const {
  int acc = kIdentity;
  for (int i = 0; i < k; ++i) acc = mul(acc, g);
  return acc;
}

int FiniteGroup::element_order(int g) const {
  int acc = g;
  int ord = 1;
  while (acc != kIdentity) {
    acc = mul(acc, g);
    ++ord;
  }
  return ord;
}

std::vector<int> FiniteGroup::class_representatives() const {
  std::vector<int> reps;
  reps.reserve(classes_.size());
  for (const auto& c : classes_) reps.push_back(c.front());
  return reps;
}

std::vector<int> FiniteGroup::class_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(classes_.size());
  for (const auto& c : classes_) sizes.push_back(static_cast<int>(c.size()));
  return sizes;
}

bool FiniteGroup::is_central(int g) const {
  for (int h = 0; h < n_; ++h) {
    if (mul(g, h) != mul(h, g)) return false;
  }
  return true;
}

void FiniteGroup::derive() {
  // identity row/column
  for (int g = 0; g < n_; ++g) {
    if (mul(kIdentity, g) != g || mul(g, kIdentity) != g) {
      throw Error(ErrorCode::NoIdentity, "row/column 0 is not the identity");
    }
  }
  // inverses: each row must contain the identity exactly once
  inv_.assign(n_, -1);
  for (int g = 0; g < n_; ++g) {
    for (int h = 0; h < n_; ++h) {
      if (mul(g, h) == kIdentity) {
        if (inv_[g] != -1) throw Error(ErrorCode::NoInverse, "non-unique inverse");
        inv_[g] = h;
      }
    }
    if (inv_[g] == -1) throw Error(ErrorCode::NoInverse, "element without inverse");
  }
  // associativity: exhaustive up to order 256, sampled above that
  if (n_ <= 256) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw Error(ErrorCode::NotAssociative, "Cayley table is not associative");
          }
  } else {
    Rng rng(Seed{0xa550c});
    for (int trial = 0; trial < 1 << 20; ++trial) {
      const int a = rng.uniform_int(0, n_ - 1);
      const int b = rng.uniform_int(0, n_ - 1);
      const int c = rng.uniform_int(0, n_ - 1);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
        throw Error(ErrorCode::NotAssociative, "Cayley table is not associative");
      }
    }
  }
  // conjugacy classes, ordered by minimal element
  class_of_.assign(n_, -1);
  classes_.clear();
  for (int g = 0; g < n_; ++g) {
    if (class_of_[g] != -1) continue;
    std::set<int> orbit;
    for (int h = 0; h < n_; ++h) orbit.insert(conjugate(h, g));
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int x : cls) class_of_[x] = static_cast<int>(classes_.size());
    classes_.push_back(std::move(cls));
  }
  // exponent = lcm of element orders
  long long ex = 1;
  for (int g = 0; g < n_; ++g) {
    const long long o = element_order(g);
    ex = std::lcm(ex, o);
  }
  exponent_ = static_cast<int>(ex);
}

FiniteGroup group_from_cayley(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::BadIndex, "empty table");
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw Error(ErrorCode::BadIndex, "table is not square");
    }
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n) throw Error(ErrorCode::BadIndex, "entry out of range");
      g.table_[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  g.derive();
  return g;
}

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a o b)(x) = a(b(x))
  std::vector<int> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

}  // namespace

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                    int cap) {
  if (generators.empty()) throw Error(ErrorCode::NotBijective, "no generators");
  const std::size_t m = generators[0].size();
  for (const auto& p : generators) {
    if (p.size() != m) throw Error(ErrorCode::NotBijective, "mixed ground sets");
    std::vector<bool> seen(m, false);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(m) || seen[v]) {
        throw Error(ErrorCode::NotBijective, "generator is not a permutation");
      }
      seen[v] = true;
    }
  }
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = compose(gen, elements[head]);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        if (static_cast<int>(elements.size()) >= cap) {
          throw Error(ErrorCode::TooLarge, "closure exceeds cap");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index.at(compose(elements[i], elements[j]));
  return group_from_cayley(table);
}

namespace {

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::UnsupportedParams, "cyclic order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return group_from_cayley(table);
}

FiniteGroup dihedral_group(int n) {
  if (n < 3) throw Error(ErrorCode::UnsupportedParams, "dihedral parameter must be >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return group_from_permutations({rot, refl});
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw Error(ErrorCode::UnsupportedParams, "symmetric parameter in [1,5]");
  if (n == 1) return cyclic_group(1);
  std::vector<int> cycle(n), swap01(n);
  for (int i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap01[i] = i;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return group_from_permutations({cycle, swap01});
}

FiniteGroup quaternion_group() {
  // elements: index = 2*axis + sign with axes (1, i, j, k); 0 is +1
  // axis multiplication table with result sign
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ax = a / 2, sa = a % 2, bx = b / 2, sb = b % 2;
      const int cx = axis_mul[ax][bx];
      const int sc = (sa + sb + sign_mul[ax][bx]) % 2;
      table[a][b] = 2 * cx + sc;
    }
  return group_from_cayley(table);
}

FiniteGroup product_cyclic_group(const std::vector<int>& factors) {
  if (factors.empty()) throw Error(ErrorCode::UnsupportedParams, "need at least one factor");
  long long n = 1;
  for (int f : factors) {
    if (f < 1) throw Error(ErrorCode::UnsupportedParams, "factors must be >= 1");
    n *= f;
    if (n > 1024) throw Error(ErrorCode::TooLarge, "product order exceeds cap");
  }
  const int order = static_cast<int>(n);
  auto decode = [&factors](int idx) {
    std::vector<int> digits(factors.size());
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      digits[i] = idx % factors[i];
      idx /= factors[i];
    }
    return digits;
  };
  auto encode = [&factors](const std::vector<int>& digits) {
    int idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + digits[i];
    return idx;
  };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      auto da = decode(a), db = decode(b);
      std::vector<int> dc(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) dc[i] = (da[i] + db[i]) % factors[i];
      table[a][b] = encode(dc);
    }
  return group_from_cayley(table);
}

}  // namespace

FiniteGroup builtin_group(GroupFamily family, const std::vector<int>& params) {
  switch (family) {
    case GroupFamily::Cyclic:
      if (params.size() != 1) throw Error(ErrorCode::UnsupportedParams, "cyclic:n");
      return cyclic_group(params[0]);
    case GroupFamily::Dihedral:
      if (params.size() != 1) throw Error(ErrorCode::UnsupportedParams, "dihedral:n");
      return dihedral_group(params[0]);
    case GroupFamily::Symmetric:
      if (params.size() != 1) throw Error(ErrorCode::UnsupportedParams, "symmetric:n");
      return symmetric_group(params[0]);
    case GroupFamily::Quaternion:
      if (!params.empty()) throw Error(ErrorCode::UnsupportedParams, "quaternion takes none");
      return quaternion_group();
    case GroupFamily::ProductCyclic:
      return product_cyclic_group(params);
  }
  throw Error(ErrorCode::UnsupportedParams, "unknown family");
}

std::vector<int> central_involutions(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 1; x < g.order(); ++x) {
    if (g.mul(x, x) == FiniteGroup::kIdentity && g.is_central(x)) out.push_back(x);
  }
  return out;
}

Subgroup centralizer(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order()) throw Error(ErrorCode::BadIndex, "element out of range");
  Subgroup sub;
  for (int h = 0; h < g.order(); ++h) {
    if (g.mul(h, x) == g.mul(x, h)) sub.elements.push_back(h);
  }
  std::map<int, int> local;
  for (std::size_t i = 0; i < sub.elements.size(); ++i) local[sub.elements[i]] = static_cast<int>(i);
  const int m = static_cast<int>(sub.elements.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = local.at(g.mul(sub.elements[i], sub.elements[j]));
  sub.group = group_from_cayley(table);
  return sub;
}

SuperGroup make_super_group(GroupPtr group, int omega) {
  if (!group) throw Error(ErrorCode::BadIndex, "null group");
  if (omega < 0 || omega >= group->order()) throw Error(ErrorCode::BadIndex, "omega out of range");
  if (group->mul(omega, omega) != FiniteGroup::kIdentity) {
    throw Error(ErrorCode::UnsupportedParams, "omega^2 != identity");
  }
  if (!group->is_central(omega)) {
    throw Error(ErrorCode::UnsupportedParams, "omega is not central");
  }
  return SuperGroup{std::move(group), omega};
}

}  // namespace centrekit
