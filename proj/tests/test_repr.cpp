#include <doctest.h>

#include <cmath>
#include <memory>

#include "centrekit/repr.hpp"

using namespace centrekit;

namespace {

std::vector<int> sorted_dims(const std::vector<Irrep>& list) {
  std::vector<int> dims;
  for (const auto& irr : list) dims.push_back(irr.dim);
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace

TEST_CASE("irreps of small groups") {
  SUBCASE("C2") {
    auto g = builtin_group(GroupFamily::Cyclic, {2});
    auto list = irreps(g);
    REQUIRE(list.size() == 2);
    CHECK(sorted_dims(list) == std::vector<int>{1, 1});
    // characters (1,1) and (1,-1)
    bool found_sign = false;
    for (const auto& irr : list) {
      if (std::abs(irr.character[1] + Complex(1, 0)) < 1e-8) found_sign = true;
    }
    CHECK(found_sign);
  }
  SUBCASE("S3: dims 1,1,2 derived from the regular representation") {
    auto g = builtin_group(GroupFamily::Symmetric, {3});
    auto list = irreps(g);
    REQUIRE(list.size() == 3);
    CHECK(sorted_dims(list) == std::vector<int>{1, 1, 2});
  }
  SUBCASE("Q8: dims 1,1,1,1,2") {
    auto g = builtin_group(GroupFamily::Quaternion);
    auto list = irreps(g);
    REQUIRE(list.size() == 5);
    CHECK(sorted_dims(list) == std::vector<int>{1, 1, 1, 1, 2});
  }
}

TEST_CASE("irrep matrices are unitary homomorphisms with class-constant characters") {
  auto g = builtin_group(GroupFamily::Symmetric, {3});
  for (const auto& irr : irreps(g)) {
    CHECK(is_representation(g, irr.rep, Tolerance{1e-9}));
    for (int x = 0; x < g.order(); ++x) {
      CHECK(max_abs_diff(CMatrix(irr.rep.at(x) * irr.rep.at(x).adjoint()), identity(irr.dim)) <
            1e-9);
      CHECK(std::abs(irr.rep.at(x).trace() - irr.character[g.class_index(x)]) < 1e-9);
    }
  }
}

TEST_CASE("character tables") {
  SUBCASE("C3 characters are the cube roots of unity") {
    auto g = builtin_group(GroupFamily::Cyclic, {3});
    auto table = character_table(g);
    REQUIRE(table.rows.size() == 3);
    const Complex zeta(std::cos(2 * M_PI / 3), std::sin(2 * M_PI / 3));
    // one row all ones, the others valued in {1, zeta, zeta^2}
    int trivial_rows = 0;
    for (const auto& row : table.rows) {
      bool all_one = true;
      for (const auto& v : row.values)
        if (std::abs(v - Complex(1, 0)) > 1e-8) all_one = false;
      if (all_one) ++trivial_rows;
      for (const auto& v : row.values) {
        const bool is_root = std::abs(v - Complex(1, 0)) < 1e-8 || std::abs(v - zeta) < 1e-8 ||
                             std::abs(v - zeta * zeta) < 1e-8;
        CHECK(is_root);
      }
    }
    CHECK(trivial_rows == 1);
  }
  SUBCASE("row orthogonality and global dimension") {
    for (auto g : {builtin_group(GroupFamily::Symmetric, {3}), builtin_group(GroupFamily::Quaternion),
                   builtin_group(GroupFamily::Dihedral, {4})}) {
      auto table = character_table(g);
      CHECK(global_dimension(table) == doctest::Approx(g.order()));
      for (std::size_t i = 0; i < table.rows.size(); ++i)
        for (std::size_t j = 0; j < table.rows.size(); ++j) {
          const Complex ip = character_inner_product(g, table.rows[i].values, table.rows[j].values);
          CHECK(std::abs(ip - (i == j ? Complex(1, 0) : Complex(0, 0))) < 1e-8);
        }
      // column orthogonality at (e, e): sum of d_i^2 = |G|
      double d2 = 0;
      for (const auto& row : table.rows) d2 += row.dim * row.dim;
      CHECK(d2 == doctest::Approx(g.order()));
    }
  }
  SUBCASE("S3 standard character is -1 on the 3-cycle class") {
    auto g = builtin_group(GroupFamily::Symmetric, {3});
    auto table = character_table(g);
    for (std::size_t c = 0; c < table.class_representatives.size(); ++c) {
      if (table.class_sizes[c] == 2) {
        for (const auto& row : table.rows) {
          if (row.dim == 2) CHECK(std::abs(row.values[c] + Complex(1, 0)) < 1e-8);
        }
      }
    }
  }
  SUBCASE("trivial group") {
    auto table = character_table(builtin_group(GroupFamily::Cyclic, {1}));
    REQUIRE(table.rows.size() == 1);
    CHECK(global_dimension(table) == doctest::Approx(1.0));
  }
}

TEST_CASE("irrep order is deterministic across seeds") {
  auto g = builtin_group(GroupFamily::Quaternion);
  auto a = irreps(g, Seed{1});
  auto b = irreps(g, Seed{99});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].dim == b[i].dim);
    for (std::size_t c = 0; c < a[i].character.size(); ++c) {
      CHECK(std::abs(a[i].character[c] - b[i].character[c]) < 1e-8);
    }
  }
}

TEST_CASE("parity of irreps under a central involution") {
  auto g = builtin_group(GroupFamily::Quaternion);
  const int w = central_involutions(g).at(0);
  int odd = 0;
  for (const auto& irr : irreps(g)) {
    const int p = parity_sign(irr, w);
    if (p == 1) {
      CHECK(irr.dim == 2);  // only the 2-dim irrep of Q8 is odd
      ++odd;
    }
  }
  CHECK(odd == 1);
}

TEST_CASE("twist scalars") {
  auto g = builtin_group(GroupFamily::Quaternion);
  const int w = central_involutions(g).at(0);
  for (const auto& irr : irreps(g)) {
    const Complex plain = twist_scalar(g, 0, irr);
    CHECK(std::abs(plain - Complex(1, 0)) < 1e-12);
    const Complex super = twist_scalar(g, w, irr);
    const double expected = parity_sign(irr, w) == 0 ? 1.0 : -1.0;
    CHECK(std::abs(super - Complex(expected, 0)) < 1e-12);
    CHECK(std::abs(super * super - Complex(1, 0)) < 1e-12);
  }
}

TEST_CASE("hom bases and Schur's lemma") {
  auto g = builtin_group(GroupFamily::Symmetric, {3});
  auto simples = irreps(g);
  const int triv = trivial_irrep_index(g, simples);
  int sgn = -1, std_idx = -1;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    if (simples[i].dim == 2) std_idx = static_cast<int>(i);
    else if (static_cast<int>(i) != triv) sgn = static_cast<int>(i);
  }
  REQUIRE(std_idx >= 0);
  REQUIRE(sgn >= 0);

  SUBCASE("hom(i, i) is one-dimensional, spanned by the identity") {
    for (const auto& irr : simples) {
      auto basis = hom_basis(g, irr.rep, irr.rep);
      REQUIRE(basis.size() == 1);
      // proportional to the identity
      const Complex lead = basis[0](0, 0);
      CHECK(max_abs_diff(basis[0], CMatrix(lead * identity(irr.dim))) < 1e-9);
    }
  }
  SUBCASE("hom(std (x) std, triv) is one-dimensional") {
    auto basis = hom_basis(g, rep_tensor(simples[std_idx].rep, simples[std_idx].rep),
                           simples[triv].rep);
    CHECK(basis.size() == 1);
  }
  SUBCASE("hom(triv, sgn) vanishes") {
    CHECK(hom_basis(g, simples[triv].rep, simples[sgn].rep).empty());
  }
  SUBCASE("dimension equals the character inner product") {
    for (const auto& a : simples)
      for (const auto& b : simples) {
        auto chi = rep_character_by_class(g, rep_tensor(a.rep, b.rep));
        for (const auto& k : simples) {
          const auto ip = character_inner_product(g, chi, k.character);
          auto basis = hom_basis(g, rep_tensor(a.rep, b.rep), k.rep);
          CHECK(static_cast<double>(basis.size()) == doctest::Approx(ip.real()));
        }
      }
  }
}

TEST_CASE("dual bases pair to delta") {
  auto g = builtin_group(GroupFamily::Symmetric, {3});
  auto simples = irreps(g);
  for (const auto& a : simples)
    for (const auto& b : simples)
      for (const auto& k : simples) {
        auto ib = intertwiner_basis(g, rep_tensor(a.rep, b.rep), k.rep);
        for (std::size_t p = 0; p < ib.basis.size(); ++p)
          for (std::size_t q = 0; q < ib.basis.size(); ++q) {
            const CMatrix comp = ib.basis[p] * ib.dual[q];
            const CMatrix want = (p == q) ? identity(k.dim) : zero(k.dim, k.dim);
            CHECK(max_abs_diff(comp, want) < 1e-8);
          }
      }
}

TEST_CASE("dual basis with genuine multiplicity") {
  // source triv + triv over C2, target triv: a 2-dimensional hom space
  auto g = builtin_group(GroupFamily::Cyclic, {2});
  auto simples = irreps(g);
  const int triv = trivial_irrep_index(g, simples);
  Rep doubled = rep_direct_sum(simples[triv].rep, simples[triv].rep);
  auto ib = intertwiner_basis(g, doubled, simples[triv].rep);
  REQUIRE(ib.basis.size() == 2);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) {
      const CMatrix comp = ib.basis[p] * ib.dual[q];
      CHECK(max_abs_diff(comp, (p == q) ? identity(1) : zero(1, 1)) < 1e-8);
    }
}

TEST_CASE("resolution of the identity on i (x) j") {
  for (auto g : {builtin_group(GroupFamily::Symmetric, {3}), builtin_group(GroupFamily::Quaternion)}) {
    auto simples = irreps(g);
    for (const auto& i : simples)
      for (const auto& j : simples) {
        Rep source = rep_tensor(i.rep, j.rep);
        CMatrix sum = zero(source.dim(), source.dim());
        for (const auto& k : simples) {
          auto ib = intertwiner_basis(g, source, k.rep);
          for (std::size_t p = 0; p < ib.basis.size(); ++p) sum += ib.dual[p] * ib.basis[p];
        }
        CHECK(max_abs_diff(sum, identity(source.dim())) < 1e-8);
      }
  }
}

TEST_CASE("fusion coefficients") {
  auto g = builtin_group(GroupFamily::Symmetric, {3});
  auto simples = irreps(g);
  const int triv = trivial_irrep_index(g, simples);
  for (const auto& i : simples) {
    CHECK(fusion_coefficient(g, simples[triv], i, i) == 1);
  }
  int sgn = -1, std_idx = -1;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    if (simples[i].dim == 2) std_idx = static_cast<int>(i);
    else if (static_cast<int>(i) != triv) sgn = static_cast<int>(i);
  }
  CHECK(fusion_coefficient(g, simples[std_idx], simples[std_idx], simples[std_idx]) == 1);
  CHECK(fusion_coefficient(g, simples[sgn], simples[sgn], simples[triv]) == 1);
}

TEST_CASE("dual morphism star") {
  SUBCASE("a trivial: phi = id_i gives phi* = id_{i*}") {
    // phi: triv (x) i -> i the identity; phi_t: i -> triv (x) i also the identity
    const int di = 2;
    CMatrix phi_t = identity(di);
    CMatrix star = dual_morphism_star(phi_t, 1, di, di);
    CHECK(max_abs_diff(star, identity(di)) < 1e-12);
  }
  SUBCASE("over C2: sgn (x) sgn -> triv") {
    CMatrix phi_t = identity(1);
    CMatrix star = dual_morphism_star(phi_t, 1, 1, 1);
    CHECK(std::abs(star(0, 0) - Complex(1, 0)) < 1e-12);
  }
  SUBCASE("norm preserved by the bent-strand transpose") {
    Rng rng(Seed{5});
    CMatrix phi_t = random_matrix(6, 2, rng);  // a (x) i with d_a = 3, d_i = 2 into d_j = 2
    CMatrix star = dual_morphism_star(phi_t, 3, 2, 2);
    CHECK(phi_t.norm() == doctest::Approx(star.norm()));
  }
}

TEST_CASE("regular character identity") {
  // sum_i (d_i / D) chi_i(x) is the delta at the identity
  for (auto g : {builtin_group(GroupFamily::Symmetric, {3}), builtin_group(GroupFamily::Cyclic, {5})}) {
    auto simples = irreps(g);
    for (int x = 0; x < g.order(); ++x) {
      Complex acc = 0;
      for (const auto& irr : simples) {
        acc += static_cast<double>(irr.dim) / g.order() * irr.character[g.class_index(x)];
      }
      const Complex want = x == 0 ? Complex(1, 0) : Complex(0, 0);
      CHECK(std::abs(acc - want) < 1e-8);
    }
  }
}
