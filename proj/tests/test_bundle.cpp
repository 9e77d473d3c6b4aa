#include <doctest.h>

#include <memory>

#include "centrekit/bundle.hpp"

using namespace centrekit;

namespace {

GroupPtr make(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

GroupPtr s3() { return make(builtin_group(GroupFamily::Symmetric, {3})); }
GroupPtr c2() { return make(builtin_group(GroupFamily::Cyclic, {2})); }
GroupPtr q8() { return make(builtin_group(GroupFamily::Quaternion)); }

bool bundles_equal(const EquivariantBundle& a, const EquivariantBundle& b, double eps = 1e-9) {
  if (a.fibres != b.fibres) return false;
  for (int h = 0; h < a.group->order(); ++h)
    for (const auto& [g, d] : a.fibres)
      if (max_abs_diff(a.rho(h, g), b.rho(h, g)) > eps) return false;
  return true;
}

}  // namespace

TEST_CASE("constructed bundles validate") {
  auto g = s3();
  Rng rng(Seed{21});
  for (int i = 0; i < 4; ++i) {
    auto v = random_bundle(g, rng);
    v.validate(Tolerance{1e-9});
  }
  unit_bundle(g).validate();
  constant_line_bundle(g).validate();
}

TEST_CASE("convolution tensor") {
  auto g = s3();
  Rng rng(Seed{3});
  auto w = random_bundle(g, rng);

  SUBCASE("unit bundle is a left unit on fibre data") {
    auto prod = convolution_tensor(unit_bundle(g), w);
    CHECK(bundles_equal(prod, w));
  }
  SUBCASE("dimension is multiplicative under the forgetful functor") {
    auto v = random_bundle(g, rng);
    auto prod = convolution_tensor(v, w);
    prod.validate(Tolerance{1e-9});
    CHECK(prod.total_dim() == v.total_dim() * w.total_dim());
  }
  SUBCASE("line bundle over C2 squared has fibre dims 2 and 2") {
    auto h = c2();
    auto line = constant_line_bundle(h);
    auto sq = convolution_tensor(line, line);
    CHECK(sq.dim(0) == 2);
    CHECK(sq.dim(1) == 2);
  }
  SUBCASE("group mismatch is rejected") {
    auto h = c2();
    CHECK_THROWS_AS(convolution_tensor(w, unit_bundle(h)), Error);
  }
}

TEST_CASE("fibrewise tensor") {
  auto g = s3();
  Rng rng(Seed{4});
  auto w = random_bundle(g, rng);
  SUBCASE("constant line bundle is the unit") {
    auto prod = fibrewise_tensor(constant_line_bundle(g), w);
    CHECK(bundles_equal(prod, w));
  }
  SUBCASE("disjoint supports give the zero bundle") {
    auto simples = irreps(*g);
    auto at_e = include_rep_plain(g, simples[0].rep);
    int transposition = -1;
    for (int x = 1; x < g->order(); ++x)
      if (g->element_order(x) == 2) {
        transposition = x;
        break;
      }
    auto cent = centralizer(*g, transposition);
    auto off_e = induced_bundle(g, transposition, irreps(cent.group)[0].rep);
    CHECK(fibrewise_tensor(at_e, off_e).is_zero());
    // pointwise product of dims on common support
    auto prod = fibrewise_tensor(off_e, off_e);
    CHECK(prod.fibres == off_e.fibres);  // dims 1 on the three transpositions
    prod.validate(Tolerance{1e-9});
  }
}

TEST_CASE("braiding") {
  auto g = s3();
  Rng rng(Seed{5});
  auto v = random_bundle(g, rng);
  auto w = random_bundle(g, rng);

  SUBCASE("equivariance and invertibility") {
    auto b = braiding(v, w);
    b.validate(Tolerance{1e-8});
    for (const auto& [fibre, block] : b.blocks) {
      if (block.rows() > 0) {
        Eigen::FullPivLU<CMatrix> lu(block);
        CHECK(lu.isInvertible());
      }
    }
  }
  SUBCASE("both factors at the identity element gives a plain switch") {
    auto simples = irreps(*g);
    auto a = include_rep_plain(g, simples[1].rep);
    auto b = include_rep_plain(g, simples[2].rep);
    auto beta = braiding(a, b);
    const CMatrix want = switch_matrix(a.dim(0), b.dim(0));
    CHECK(max_abs_diff(beta.blocks.at(0), want) < 1e-9);
  }
  SUBCASE("transparency at [e]: double braiding is the identity") {
    auto simples = irreps(*g);
    auto a = include_rep_plain(g, simples[2].rep);
    auto b = include_rep_plain(g, simples[1].rep);
    auto round = compose(braiding(b, a), braiding(a, b));
    CHECK(max_abs_diff(round.blocks.at(0), identity(a.dim(0) * b.dim(0))) < 1e-9);
  }
  SUBCASE("double braiding detects noncommutativity over Q8") {
    auto h = q8();
    int x = -1;
    for (int y = 1; y < h->order(); ++y)
      if (!h->is_central(y)) {
        x = y;
        break;
      }
    auto cent = centralizer(*h, x);
    auto vv = induced_bundle(h, x, irreps(cent.group)[1].rep);
    auto ww = induced_bundle(h, x, irreps(cent.group)[2].rep);
    auto round = compose(braiding(ww, vv), braiding(vv, ww));
    double diff = 0;
    for (const auto& [fibre, block] : round.blocks) {
      diff = std::max(diff, max_abs_diff(block, identity(static_cast<int>(block.rows()))));
    }
    CHECK(diff > 1e-6);
  }
}

TEST_CASE("braiding is natural in both arguments") {
  auto g = s3();
  Rng rng(Seed{61});
  auto v = random_bundle(g, rng, 2);
  auto w = random_bundle(g, rng, 2);
  auto f = random_endomorphism(v, rng);
  auto h = random_endomorphism(w, rng);
  const CMatrix beta = forgetful_morphism(braiding(v, w));
  const CMatrix phi_f = forgetful_morphism(f);
  const CMatrix phi_h = forgetful_morphism(h);
  // conv-order matrices for f (x) h on V (x) W and on W (x) V
  auto conv_matrix = [&](const BundleMorphism& a, const BundleMorphism& b) {
    ConvLayout layout(a.source, b.source);
    const int n = layout.total;
    CMatrix m = zero(n, n);
    for (const auto& s : layout.summands) {
      const CMatrix block = kron(a.blocks.at(s.g1), b.blocks.at(s.g2));
      m.block(s.offset_global, s.offset_global, block.rows(), block.cols()) = block;
    }
    return m;
  };
  const CMatrix lhs = conv_matrix(h, f) * beta;
  const CMatrix rhs = beta * conv_matrix(f, h);
  CHECK(max_abs_diff(lhs, rhs) < 1e-9);
  (void)phi_f;
  (void)phi_h;
}

TEST_CASE("forgetful functor") {
  auto g = s3();
  SUBCASE("bundle at [e] carrying an irrep returns the irrep") {
    auto simples = irreps(*g);
    auto v = include_rep_plain(g, simples[2].rep);
    Rep phi = forgetful(v);
    for (int x = 0; x < g->order(); ++x) CHECK(max_abs_diff(phi.at(x), simples[2].rep.at(x)) < 1e-12);
  }
  SUBCASE("constant line bundle gives the conjugation permutation representation") {
    Rep phi = forgetful(constant_line_bundle(g));
    CHECK(is_representation(*g, phi, Tolerance{1e-12}));
    for (int h = 0; h < g->order(); ++h) {
      CMatrix want = zero(g->order(), g->order());
      for (int x = 0; x < g->order(); ++x) want(g->conjugate(h, x), x) = 1.0;
      CHECK(max_abs_diff(phi.at(h), want) < 1e-12);
    }
  }
  SUBCASE("dimension is the sum of fibre dims") {
    Rng rng(Seed{8});
    auto v = random_bundle(g, rng);
    CHECK(forgetful(v).dim() == v.total_dim());
  }
  SUBCASE("functoriality on morphisms") {
    Rng rng(Seed{9});
    auto v = random_bundle(g, rng);
    auto f1 = random_endomorphism(v, rng);
    auto f2 = random_endomorphism(v, rng);
    f1.validate(Tolerance{1e-8});
    CMatrix lhs = forgetful_morphism(compose(f2, f1));
    CMatrix rhs = forgetful_morphism(f2) * forgetful_morphism(f1);
    CHECK(max_abs_diff(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("Peter-Weyl consistency of the constant line bundle") {
  for (auto g : {s3(), q8()}) {
    Rep phi = forgetful(constant_line_bundle(g));
    for (int h = 0; h < g->order(); ++h) {
      const double centralizer_size = static_cast<double>(centralizer(*g, h).group.order());
      CHECK(std::abs(phi.at(h).trace() - Complex(centralizer_size, 0)) < 1e-9);
    }
  }
}

TEST_CASE("include_rep in the super model") {
  auto g = q8();
  const int w = central_involutions(*g).at(0);
  auto sg = make_super_group(g, w);
  auto simples = irreps(*g);
  for (const auto& irr : simples) {
    auto v = include_rep(sg, irr.rep);
    const int p = parity_sign(irr, w);
    CHECK(v.dim(p == 0 ? 0 : w) == irr.dim);
    CHECK(parity_of(sg, v) == (p == 0 ? BundleParity::Even : BundleParity::Odd));
    v.validate(Tolerance{1e-9});
  }
  // a mixed-parity rep is rejected
  const Irrep* ev = nullptr;
  const Irrep* od = nullptr;
  for (const auto& irr : simples) {
    if (parity_sign(irr, w) == 0) ev = &irr;
    if (parity_sign(irr, w) == 1) od = &irr;
  }
  CHECK_THROWS_AS(include_rep(sg, rep_direct_sum(ev->rep, od->rep)), Error);
}

TEST_CASE("braiding of two included odd lines is minus the switch") {
  auto g = c2();
  auto sg = make_super_group(g, 1);
  auto simples = irreps(*g);
  const Irrep* odd = nullptr;
  for (const auto& irr : simples)
    if (parity_sign(irr, 1) == 1) odd = &irr;
  REQUIRE(odd != nullptr);
  auto v = include_rep(sg, odd->rep);
  auto b = braiding(v, v);
  CHECK(max_abs_diff(b.blocks.at(0), CMatrix(-identity(1))) < 1e-12);
}

TEST_CASE("simple bundles") {
  auto g = s3();
  SUBCASE("x = e reduces to include_rep") {
    auto simples = irreps(*g);
    auto v = simple_bundle(g, 0, simples[2]);
    CHECK(bundles_equal(v, include_rep_plain(g, simples[2].rep)));
  }
  SUBCASE("transposition class with the sign of C2") {
    int x = -1;
    for (int y = 1; y < 6; ++y)
      if (g->element_order(y) == 2) {
        x = y;
        break;
      }
    auto cent = centralizer(*g, x);
    REQUIRE(cent.group.order() == 2);
    auto cirr = irreps(cent.group);
    auto v = simple_bundle(g, x, cirr[1]);
    v.validate(Tolerance{1e-9});
    CHECK(v.total_dim() == 3);
    CHECK(bundle_endomorphism_dimension(v) == 1);
  }
  SUBCASE("global dimension of the centre") {
    long long acc = 0;
    for (std::size_t c = 0; c < g->conjugacy_classes().size(); ++c) {
      const int x = g->conjugacy_classes()[c].front();
      const int size = static_cast<int>(g->conjugacy_classes()[c].size());
      auto cent = centralizer(*g, x);
      for (const auto& pi : irreps(cent.group)) {
        auto v = simple_bundle(g, x, pi);
        CHECK(bundle_endomorphism_dimension(v) == 1);
        acc += static_cast<long long>(size * pi.dim) * (size * pi.dim);
      }
    }
    CHECK(acc == static_cast<long long>(g->order()) * g->order());
  }
}

TEST_CASE("parity decomposition") {
  auto g = q8();
  const int w = central_involutions(*g).at(0);
  auto sg = make_super_group(g, w);
  auto simples = irreps(*g);
  const Irrep* even = nullptr;
  const Irrep* odd = nullptr;
  for (const auto& irr : simples) {
    if (parity_sign(irr, w) == 0 && irr.dim == 1) even = &irr;
    if (parity_sign(irr, w) == 1) odd = &irr;
  }
  REQUIRE(even != nullptr);
  REQUIRE(odd != nullptr);
  auto sum = direct_sum(include_rep(sg, even->rep), include_rep(sg, odd->rep));
  CHECK(parity_of(sg, sum) == BundleParity::Mixed);
  auto bases = parity_bases(sg, sum);
  CHECK(bases.rank(0, 0) == 1);
  CHECK(bases.rank(1, w) == 2);
  auto even_part = homogeneous_part(sg, sum, bases, 0);
  auto odd_part = homogeneous_part(sg, sum, bases, 1);
  even_part.validate(Tolerance{1e-9});
  odd_part.validate(Tolerance{1e-9});
  CHECK(even_part.total_dim() == 1);
  CHECK(odd_part.total_dim() == 2);
}

TEST_CASE("fibrewise super tensor") {
  SUBCASE("omega = e coincides with the fibrewise tensor") {
    auto g = s3();
    auto sg = make_super_group(g, 0);
    Rng rng(Seed{12});
    auto v = random_bundle(g, rng, 2);
    auto w = random_bundle(g, rng, 2);
    CHECK(bundles_equal(fibrewise_super_tensor(sg, v, w), fibrewise_tensor(v, w)));
  }
  SUBCASE("two odd lines at omega give an even line at e") {
    auto g = c2();
    auto sg = make_super_group(g, 1);
    auto simples = irreps(*g);
    const Irrep* odd = nullptr;
    for (const auto& irr : simples)
      if (parity_sign(irr, 1) == 1) odd = &irr;
    auto v = include_rep(sg, odd->rep);
    auto prod = fibrewise_super_tensor(sg, v, v);
    CHECK(prod.dim(0) == 1);
    CHECK(prod.dim(1) == 0);
    CHECK(parity_of(sg, prod) == BundleParity::Even);
  }
  SUBCASE("both parities even reduces to plain fibrewise") {
    auto g = q8();
    const int w = central_involutions(*g).at(0);
    auto sg = make_super_group(g, w);
    Rng rng(Seed{13});
    auto a = random_homogeneous_bundle(sg, rng, 0, 2);
    auto b = random_homogeneous_bundle(sg, rng, 0, 2);
    CHECK(bundles_equal(fibrewise_super_tensor(sg, a, b), fibrewise_tensor(a, b)));
  }
}

TEST_CASE("fibrewise switch is an equivariant involution") {
  auto g = s3();
  Rng rng(Seed{14});
  auto v = random_bundle(g, rng, 2);
  auto w = random_bundle(g, rng, 2);
  auto vw = fibrewise_tensor(v, w);
  auto wv = fibrewise_tensor(w, v);
  BundleMorphism s;
  s.source = vw;
  s.target = wv;
  for (const auto& [x, d] : vw.fibres) s.blocks[x] = switch_matrix(v.dim(x), w.dim(x));
  s.validate(Tolerance{1e-9});
  BundleMorphism s_back;
  s_back.source = wv;
  s_back.target = vw;
  for (const auto& [x, d] : wv.fibres) s_back.blocks[x] = switch_matrix(w.dim(x), v.dim(x));
  auto round = compose(s_back, s);
  for (const auto& [x, block] : round.blocks) {
    CHECK(max_abs_diff(block, identity(static_cast<int>(block.rows()))) < 1e-12);
  }
}

TEST_CASE("random homogeneous bundles have the requested parity") {
  auto g = q8();
  const int w = central_involutions(*g).at(0);
  auto sg = make_super_group(g, w);
  Rng rng(Seed{15});
  for (int i = 0; i < 3; ++i) {
    CHECK(parity_of(sg, random_homogeneous_bundle(sg, rng, 0)) == BundleParity::Even);
    auto odd = random_homogeneous_bundle(sg, rng, 1);
    CHECK(parity_of(sg, odd) == BundleParity::Odd);
  }
}
