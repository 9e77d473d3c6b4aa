#include "centrekit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace centrekit {

namespace {

// Bent summands of the induced resolutions, built from the standard duality
// maps (one inclusion/projection pair per basis intertwiner).
CMatrix helpful_proj(const CMatrix& phi, int di, int dj, int dk) {
  // k* (x) i -> j*
  const CMatrix step0 = kron(identity(dk * di), coevaluation(dj));
  const CMatrix step1 = kron(identity(dk), kron(phi, identity(dj)));
  const CMatrix step2 = kron(evaluation(dk), identity(dj));
  return step2 * step1 * step0;
}

CMatrix helpful_incl(const CMatrix& phi_t, int di, int dj, int dk) {
  // j* -> k* (x) i
  const CMatrix step0 = kron(coevaluation_rev(dk), identity(dj));
  const CMatrix step1 = kron(identity(dk), kron(phi_t, identity(dj)));
  const CMatrix step2 = kron(identity(dk * di), evaluation_rev(dj));
  return step2 * step1 * step0;
}

CMatrix directsum_proj(const CMatrix& phi_t, int di, int dj, int dk) {
  // k (x) j* -> i
  (void)dk;
  const CMatrix step1 = kron(phi_t, identity(dj));
  const CMatrix step2 = kron(identity(di), evaluation_rev(dj));
  return step2 * step1;
}

CMatrix directsum_incl(const CMatrix& phi, int di, int dj, int dk) {
  // i -> k (x) j*
  (void)dk;
  const CMatrix step0 = kron(identity(di), coevaluation(dj));
  const CMatrix step1 = kron(phi, identity(dj));
  return step1 * step0;
}

double check_orthogonality(const SymContext& ctx, Rng&) {
  const auto& g = *ctx.group;
  double err = 0.0;
  if (ctx.simples.size() != g.conjugacy_classes().size()) return 1.0;
  long long d2 = 0;
  for (const auto& irr : ctx.simples) d2 += static_cast<long long>(irr.dim) * irr.dim;
  err = std::max(err, std::abs(static_cast<double>(d2 - g.order())));
  for (std::size_t i = 0; i < ctx.simples.size(); ++i)
    for (std::size_t j = 0; j < ctx.simples.size(); ++j) {
      const Complex ip =
          character_inner_product(g, ctx.simples[i].character, ctx.simples[j].character);
      err = std::max(err, std::abs(ip - (i == j ? Complex(1, 0) : Complex(0, 0))));
    }
  // regular character identity: sum_i (d_i / D) chi_i(x) = delta_{x,e}
  for (int x = 0; x < g.order(); ++x) {
    Complex acc = 0;
    for (const auto& irr : ctx.simples)
      acc += static_cast<double>(irr.dim) / ctx.global_dim * irr.character[g.class_index(x)];
    err = std::max(err, std::abs(acc - (x == 0 ? Complex(1, 0) : Complex(0, 0))));
  }
  return err;
}

double check_resolution_identity(const SymContext& ctx, Rng&) {
  const auto& g = *ctx.group;
  double err = 0.0;
  for (const auto& i : ctx.simples)
    for (const auto& j : ctx.simples) {
      const Rep source = rep_tensor(i.rep, j.rep);
      CMatrix sum = zero(source.dim(), source.dim());
      for (const auto& k : ctx.simples) {
        auto basis = intertwiner_basis(g, source, k.rep, ctx.tol);
        for (std::size_t b = 0; b < basis.basis.size(); ++b)
          sum += basis.dual[b] * basis.basis[b];
      }
      err = std::max(err, max_abs_diff(sum, identity(source.dim())));
    }
  return err;
}

double check_helpful_identity(const SymContext& ctx, Rng&) {
  const auto& g = *ctx.group;
  double err = 0.0;
  for (const auto& i : ctx.simples)
    for (const auto& k : ctx.simples) {
      const int di = i.dim, dk = k.dim;
      CMatrix sum = zero(dk * di, dk * di);
      for (const auto& j : ctx.simples) {
        auto basis = intertwiner_basis(g, rep_tensor(i.rep, j.rep), k.rep, ctx.tol);
        const double weight = static_cast<double>(j.dim) / dk;
        for (std::size_t b = 0; b < basis.basis.size(); ++b) {
          sum += weight * helpful_incl(basis.dual[b], di, j.dim, dk) *
                 helpful_proj(basis.basis[b], di, j.dim, dk);
        }
      }
      err = std::max(err, max_abs_diff(sum, identity(dk * di)));
    }
  return err;
}

double check_directsum_version(const SymContext& ctx, Rng&) {
  const auto& g = *ctx.group;
  double err = 0.0;
  for (const auto& j : ctx.simples)
    for (const auto& k : ctx.simples) {
      const int dj = j.dim, dk = k.dim;
      CMatrix sum = zero(dk * dj, dk * dj);
      for (const auto& i : ctx.simples) {
        auto basis = intertwiner_basis(g, rep_tensor(i.rep, j.rep), k.rep, ctx.tol);
        const double weight = static_cast<double>(i.dim) / dk;
        for (std::size_t b = 0; b < basis.basis.size(); ++b) {
          sum += weight * directsum_incl(basis.basis[b], i.dim, dj, dk) *
                 directsum_proj(basis.dual[b], i.dim, dj, dk);
        }
      }
      err = std::max(err, max_abs_diff(sum, identity(dk * dj)));
    }
  return err;
}

double check_twist_square(const SymContext& ctx, Rng&) {
  double err = 0.0;
  for (std::size_t s = 0; s < ctx.simples.size(); ++s) {
    const Complex theta = twist_scalar(*ctx.group, ctx.omega, ctx.simples[s], ctx.tol);
    const double expected = ctx.parities[s] == 0 ? 1.0 : -1.0;
    err = std::max(err, std::abs(theta - Complex(expected, 0)));
    err = std::max(err, std::abs(theta * theta - Complex(1, 0)));
  }
  return err;
}

double check_pi_idempotent(const SymContext& ctx, Rng& rng) {
  auto v = random_bundle(ctx.group, rng);
  auto w = random_bundle(ctx.group, rng);
  const CMatrix pi = pi_categorical(ctx, v, w);
  double err = max_abs_diff(CMatrix(pi * pi), pi);
  const Rep conv_rep = forgetful(convolution_tensor(v, w));
  for (int h = 0; h < ctx.group->order(); ++h) {
    err = std::max(err, max_abs_diff(CMatrix(pi * conv_rep.at(h)), CMatrix(conv_rep.at(h) * pi)));
  }
  return err;
}

double check_pi_oracle(const SymContext& ctx, Rng& rng) {
  auto v = random_bundle(ctx.group, rng);
  auto w = random_bundle(ctx.group, rng);
  return max_abs_diff(pi_categorical(ctx, v, w), pi_closed_form(ctx, v, w));
}

double check_ring_switch(const SymContext& ctx, Rng& rng) {
  auto v = random_bundle(ctx.group, rng);
  auto w = random_bundle(ctx.group, rng);
  return max_abs_diff(pi_categorical(ctx, v, w), pi_categorical(ctx, v, w, true));
}

double check_cloaking(const SymContext& ctx, Rng& rng) {
  auto b = bundle_centre_object(ctx, random_bundle(ctx.group, rng, 2));
  auto c = bundle_centre_object(ctx, random_bundle(ctx.group, rng, 2));
  double err = 0.0;
  for (std::size_t s = 0; s < ctx.simples.size(); ++s) {
    const auto probe = probe_of_simple(ctx, static_cast<int>(s));
    err = std::max(err, max_abs_diff(cloaking_side(ctx, probe, b, c, true),
                                     cloaking_side(ctx, probe, b, c, false)));
  }
  return err;
}

double check_key_property(const SymContext& ctx, Rng& rng) {
  auto v = random_bundle(ctx.group, rng, 2);
  auto w = random_bundle(ctx.group, rng, 2);
  auto split = split_pi_bundle(ctx, v, w);
  double err = 0.0;
  for (std::size_t s = 0; s < ctx.simples.size(); ++s) {
    const auto probe = probe_of_simple(ctx, static_cast<int>(s));
    err = std::max(err, max_abs_diff(symmetric_half_braiding(ctx, v, w, split, probe, 1),
                                     symmetric_half_braiding(ctx, v, w, split, probe, 2)));
  }
  return err;
}

double check_slicing(const SymContext& ctx, Rng& rng) {
  auto v = random_bundle(ctx.group, rng, 2);
  auto w = random_bundle(ctx.group, rng, 2);
  auto split = split_pi_bundle(ctx, v, w);
  const CMatrix perm = conv_from_kron(v, w);
  const CMatrix incl_k = perm.adjoint() * split.incl;
  const CMatrix proj_k = split.proj * perm;
  auto x = bundle_centre_object(ctx, v);
  auto y = bundle_centre_object(ctx, w);
  double err = 0.0;
  for (std::size_t s = 0; s < ctx.simples.size(); ++s) {
    const auto probe = probe_of_simple(ctx, static_cast<int>(s));
    const int dc = probe.rep.dim();
    const CMatrix beta = symmetric_half_braiding(ctx, v, w, split, probe, 1);
    for (int res = 1; res <= 2; ++res) {
      const CMatrix cross = crossing_resolution(ctx, x, y, probe, res);
      err = std::max(err, max_abs_diff(CMatrix(kron(incl_k, identity(dc)) * beta),
                                       CMatrix(cross * kron(identity(dc), incl_k))));
      err = std::max(err, max_abs_diff(CMatrix(beta * kron(identity(dc), proj_k)),
                                       CMatrix(kron(proj_k, identity(dc)) * cross)));
    }
  }
  return err;
}

double check_hexagon(const SymContext& ctx, Rng& rng) {
  auto v = random_bundle(ctx.group, rng, 2);
  auto w = random_bundle(ctx.group, rng, 2);
  auto split = split_pi_bundle(ctx, v, w);
  double err = 0.0;
  for (std::size_t a = 0; a < ctx.simples.size(); ++a)
    for (std::size_t b = 0; b < ctx.simples.size(); ++b) {
      const auto pa = probe_of_simple(ctx, static_cast<int>(a));
      const auto pb = probe_of_simple(ctx, static_cast<int>(b));
      const ProbeRep pab{rep_tensor(pa.rep, pb.rep), (pa.parity + pb.parity) % 2};
      const CMatrix lhs = symmetric_half_braiding(ctx, v, w, split, pab, 1);
      const CMatrix rhs =
          kron(symmetric_half_braiding(ctx, v, w, split, pa, 1), identity(pb.rep.dim())) *
          kron(identity(pa.rep.dim()), symmetric_half_braiding(ctx, v, w, split, pb, 1));
      err = std::max(err, max_abs_diff(lhs, rhs));
    }
  return err;
}

double check_symmetry_inverse(const SymContext& ctx, Rng& rng) {
  auto v = random_bundle(ctx.group, rng, 2);
  auto w = random_bundle(ctx.group, rng, 2);
  auto svw = split_pi_bundle(ctx, v, w);
  auto swv = split_pi_bundle(ctx, w, v);
  const CMatrix fwd = symmetry_iso_bundle(ctx, v, w, svw, swv);
  const CMatrix bwd = symmetry_iso_bundle(ctx, w, v, swv, svw);
  double err = max_abs_diff(CMatrix(bwd * fwd), identity(svw.rank));
  err = std::max(err, max_abs_diff(CMatrix(fwd * bwd), identity(swv.rank)));
  for (std::size_t s = 0; s < ctx.simples.size(); ++s) {
    const auto probe = probe_of_simple(ctx, static_cast<int>(s));
    const int dc = probe.rep.dim();
    const CMatrix beta_vw = symmetric_half_braiding(ctx, v, w, svw, probe, 1);
    const CMatrix beta_wv = symmetric_half_braiding(ctx, w, v, swv, probe, 1);
    err = std::max(err, max_abs_diff(CMatrix(kron(fwd, identity(dc)) * beta_vw),
                                     CMatrix(beta_wv * kron(identity(dc), fwd))));
  }
  return err;
}

double check_triple_idempotent(const SymContext& ctx, Rng& rng) {
  // the line-bundle summand keeps supports overlapping, so the nested
  // products never degenerate to zero
  auto a = bundle_centre_object(
      ctx, direct_sum(random_bundle(ctx.group, rng, 2), constant_line_bundle(ctx.group)));
  auto b = bundle_centre_object(ctx, random_bundle(ctx.group, rng, 2));
  auto c = bundle_centre_object(ctx, random_bundle(ctx.group, rng, 2));
  auto left = triple_product_left(ctx, a, b, c);
  auto right = triple_product_right(ctx, a, b, c);
  const CMatrix two_rings = kron(identity(a.dim()), ring_idempotent(ctx, b, c)) *
                            kron(ring_idempotent(ctx, a, b), identity(c.dim()));
  double err = max_abs_diff(left.total_idempotent(), two_rings);
  err = std::max(err, max_abs_diff(right.total_idempotent(), two_rings));
  // the induced associator is invertible, with inverse the reverse transport
  const CMatrix assoc = associator_iso(ctx, left, right);
  const CMatrix assoc_inv = left.total_proj * right.total_incl;
  err = std::max(err, max_abs_diff(CMatrix(assoc_inv * assoc), identity(left.outer.rank)));
  err = std::max(err, max_abs_diff(CMatrix(assoc * assoc_inv), identity(right.outer.rank)));
  return err;
}

struct Built {
  CentreObject object;
  CMatrix incl;
  CMatrix proj;
};

Built built_leaf(const CentreObject& x) {
  return Built{x, identity(x.dim()), identity(x.dim())};
}

Built built_pair(const SymContext& ctx, const Built& x, const Built& y) {
  auto p = centre_tensor(ctx, x.object, y.object);
  Built out;
  out.object = p.object;
  out.incl = kron(x.incl, y.incl) * p.incl;
  out.proj = p.proj * kron(x.proj, y.proj);
  return out;
}

CMatrix built_transport(const Built& from, const Built& to) { return to.proj * from.incl; }

double check_pentagon(const SymContext& ctx, Rng& rng) {
  // every leaf is anchored at the identity element so the four-fold
  // intersection of supports, and with it the nested products, stay nonzero
  std::vector<Built> leaves;
  for (int i = 0; i < 4; ++i) {
    leaves.push_back(built_leaf(bundle_centre_object(
        ctx, direct_sum(random_bundle(ctx.group, rng, 2), unit_bundle(ctx.group)))));
  }
  auto w_xy_z =
      built_pair(ctx, built_pair(ctx, built_pair(ctx, leaves[0], leaves[1]), leaves[2]), leaves[3]);
  auto w_x_yz =
      built_pair(ctx, built_pair(ctx, leaves[0], built_pair(ctx, leaves[1], leaves[2])), leaves[3]);
  auto x_yz_w =
      built_pair(ctx, leaves[0], built_pair(ctx, built_pair(ctx, leaves[1], leaves[2]), leaves[3]));
  auto xy_zw =
      built_pair(ctx, built_pair(ctx, leaves[0], leaves[1]), built_pair(ctx, leaves[2], leaves[3]));
  auto x_y_zw =
      built_pair(ctx, leaves[0], built_pair(ctx, leaves[1], built_pair(ctx, leaves[2], leaves[3])));
  const CMatrix route1 = built_transport(x_yz_w, x_y_zw) * built_transport(w_x_yz, x_yz_w) *
                         built_transport(w_xy_z, w_x_yz);
  const CMatrix route2 = built_transport(xy_zw, x_y_zw) * built_transport(w_xy_z, xy_zw);
  double err = max_abs_diff(route1, route2);
  // invertibility of one transport, both ways (conjugate idempotents)
  const CMatrix t = built_transport(w_xy_z, w_x_yz);
  const CMatrix t_inv = built_transport(w_x_yz, w_xy_z);
  err = std::max(err, max_abs_diff(CMatrix(t_inv * t), identity(w_xy_z.object.dim())));
  err = std::max(err, max_abs_diff(CMatrix(t * t_inv), identity(w_x_yz.object.dim())));
  return err;
}

double check_unit_isos(const SymContext& ctx, Rng& rng) {
  auto unit = unit_object(ctx);
  auto b = bundle_centre_object(ctx, random_bundle(ctx.group, rng, 2));
  double err = 0.0;
  for (bool left : {true, false}) {
    auto product = left ? centre_tensor(ctx, unit.object, b) : centre_tensor(ctx, b, unit.object);
    const CMatrix fwd = unitor(ctx, unit, b, product, left, true);
    const CMatrix bwd = unitor(ctx, unit, b, product, left, false);
    err = std::max(err, max_abs_diff(CMatrix(fwd * bwd), identity(b.dim())));
    err = std::max(err, max_abs_diff(CMatrix(bwd * fwd), identity(product.rank)));
  }
  return err;
}

double check_snapping(const SymContext& ctx, Rng& rng) {
  auto unit = unit_object(ctx);
  auto c = bundle_centre_object(ctx, random_bundle(ctx.group, rng, 2));
  return max_abs_diff(snapping_lhs(ctx, unit, c), snapping_rhs(ctx, unit, c));
}

double check_triangle(const SymContext& ctx, Rng& rng) {
  auto unit = unit_object(ctx);
  auto a = bundle_centre_object(
      ctx, direct_sum(random_bundle(ctx.group, rng, 2), constant_line_bundle(ctx.group)));
  auto b = bundle_centre_object(ctx, random_bundle(ctx.group, rng, 2));
  const int na = a.dim(), nb = b.dim();

  auto a_u = centre_tensor(ctx, a, unit.object);
  auto u_b = centre_tensor(ctx, unit.object, b);
  auto ab = centre_tensor(ctx, a, b);
  auto left_nested = centre_tensor(ctx, a_u.object, b);   // (a I) b
  auto right_nested = centre_tensor(ctx, a, u_b.object);  // a (I b)

  // transport (a I) b -> a (I b) through the common ambient space
  const CMatrix total_incl_left = kron(a_u.incl, identity(nb)) * left_nested.incl;
  const CMatrix total_proj_right = right_nested.proj * kron(identity(na), CMatrix(u_b.proj));
  const CMatrix transport = total_proj_right * total_incl_left;

  // id_a (x)_s L_b after the transport vs the direct route R_a (x)_s id_b
  const CMatrix l_b = unitor(ctx, unit, b, u_b, true, true);
  const CMatrix step2 = tensor_morphism_matrix(identity(na), l_b, right_nested, ab);
  const CMatrix r_a = unitor(ctx, unit, a, a_u, false, true);
  const CMatrix direct = tensor_morphism_matrix(r_a, identity(nb), left_nested, ab);

  return max_abs_diff(CMatrix(step2 * transport), direct);
}

double check_functoriality(const SymContext& ctx, Rng& rng) {
  auto v = direct_sum(random_bundle(ctx.group, rng, 2), constant_line_bundle(ctx.group));
  auto w = random_bundle(ctx.group, rng, 2);
  auto split = split_pi_bundle(ctx, v, w);
  auto f1 = random_endomorphism(v, rng);
  auto f2 = random_endomorphism(v, rng);
  auto g1 = random_endomorphism(w, rng);
  auto g2 = random_endomorphism(w, rng);
  double err =
      max_abs_diff(tensor_morphism(ctx, identity_morphism(v), identity_morphism(w), split, split),
                   identity(split.rank));
  const CMatrix lhs = tensor_morphism(ctx, compose(f2, f1), compose(g2, g1), split, split);
  const CMatrix rhs =
      tensor_morphism(ctx, f2, g2, split, split) * tensor_morphism(ctx, f1, g1, split, split);
  err = std::max(err, max_abs_diff(lhs, rhs));
  return err;
}

double theorem_error(const SymContext& ctx, const EquivariantBundle& v,
                     const EquivariantBundle& w) {
  auto splitting = split_pi_bundle(ctx, v, w);
  SuperGroup sg{ctx.group, ctx.omega};
  auto fib = ctx.is_super() ? fibrewise_super_tensor(sg, v, w) : fibrewise_tensor(v, w);
  // equal fibre dimensions, read through the grading
  BundleLayout layout(fib);
  if (splitting.rank != layout.total) return 1.0;
  for (int k = 0; k < splitting.rank; ++k) {
    int expected = -1;
    for (std::size_t e = 0; e < layout.elements.size(); ++e) {
      if (k >= layout.offsets[e] && k < layout.offsets[e] + fib.dim(layout.elements[e])) {
        expected = layout.elements[e];
      }
    }
    if (splitting.grading[k] != expected) return 1.0;
  }
  double err = 0.0;
  // equal action blocks
  const Rep conv_rep = forgetful(convolution_tensor(v, w));
  const Rep fib_rep = forgetful(fib);
  for (int h = 0; h < ctx.group->order(); ++h) {
    err = std::max(err, max_abs_diff(CMatrix(splitting.proj * conv_rep.at(h) * splitting.incl),
                                     fib_rep.at(h)));
  }
  // equal half-braiding samples at every irrep probe
  auto fib_obj = bundle_centre_object(ctx, fib);
  for (std::size_t s = 0; s < ctx.simples.size(); ++s) {
    const auto probe = probe_of_simple(ctx, static_cast<int>(s));
    err = std::max(err, max_abs_diff(symmetric_half_braiding(ctx, v, w, splitting, probe, 1),
                                     fib_obj.half_braiding(probe)));
  }
  return err;
}

double check_thm_fibrewise(const SymContext& ctx, Rng& rng) {
  auto v = direct_sum(random_bundle(ctx.group, rng, 2), constant_line_bundle(ctx.group));
  auto w = random_bundle(ctx.group, rng, 2);
  return theorem_error(ctx, v, w);
}

double check_thm_super(const SymContext& ctx, Rng& rng) {
  SuperGroup sg{ctx.group, ctx.omega};
  // one homogeneous pair and one unrestricted pair per instance
  auto v1 = random_homogeneous_bundle(sg, rng, rng.uniform_int(0, 1), 2);
  auto w1 = random_homogeneous_bundle(sg, rng, rng.uniform_int(0, 1), 2);
  double err = theorem_error(ctx, v1, w1);
  auto v2 = direct_sum(random_bundle(ctx.group, rng, 2), constant_line_bundle(ctx.group));
  auto w2 = random_bundle(ctx.group, rng, 2);
  err = std::max(err, theorem_error(ctx, v2, w2));
  return err;
}

double check_peter_weyl_unit(const SymContext& ctx, Rng&) {
  auto unit = unit_object(ctx);
  double err = std::abs(static_cast<double>(unit.object.dim() - ctx.group->order()));
  auto bundle = bundle_from_centre_object(ctx, unit.object);
  for (int x = 0; x < ctx.group->order(); ++x) {
    err = std::max(err, std::abs(static_cast<double>(bundle.dim(x) - 1)));
  }
  const Rep phi = forgetful(bundle);
  for (int h = 0; h < ctx.group->order(); ++h) {
    const double oracle = static_cast<double>(centralizer(*ctx.group, h).group.order());
    err = std::max(err, std::abs(phi.at(h).trace() - Complex(oracle, 0)));
  }
  return err;
}

using CheckFn = double (*)(const SymContext&, Rng&);

struct CheckDef {
  const char* name;
  CheckFn fn;
  bool randomized;    // repeated over `scale` instances
  int applicability;  // 0 both models, 1 plain only, 2 super only
};

const CheckDef kChecks[] = {
    {"orthogonality", check_orthogonality, false, 0},
    {"resolution_identity", check_resolution_identity, false, 0},
    {"helpful_identity", check_helpful_identity, false, 0},
    {"directsum_version", check_directsum_version, false, 0},
    {"twist_square", check_twist_square, false, 0},
    {"pi_idempotent", check_pi_idempotent, true, 0},
    {"pi_oracle", check_pi_oracle, true, 0},
    {"ring_switch", check_ring_switch, true, 0},
    {"cloaking", check_cloaking, true, 0},
    {"key_property", check_key_property, true, 0},
    {"slicing", check_slicing, true, 0},
    {"hexagon", check_hexagon, true, 0},
    {"symmetry_inverse", check_symmetry_inverse, true, 0},
    {"triple_idempotent", check_triple_idempotent, true, 0},
    {"pentagon", check_pentagon, true, 0},
    {"unit_isos", check_unit_isos, true, 0},
    {"snapping", check_snapping, true, 0},
    {"triangle", check_triangle, true, 0},
    {"functoriality", check_functoriality, true, 0},
    {"thm_fibrewise", check_thm_fibrewise, true, 1},
    {"thm_super", check_thm_super, true, 2},
    {"peter_weyl_unit", check_peter_weyl_unit, false, 0},
};

const CheckDef* find_check(const std::string& name) {
  for (const auto& def : kChecks) {
    if (name == def.name) return &def;
  }
  return nullptr;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : kChecks) out.push_back(def.name);
    return out;
  }();
  return names;
}

bool is_known_check(const std::string& name) { return find_check(name) != nullptr; }

bool check_applicable(const std::string& name, bool is_super) {
  const CheckDef* def = find_check(name);
  if (def == nullptr) return false;
  if (def->applicability == 1) return !is_super;
  if (def->applicability == 2) return is_super;
  return true;
}

CheckReport run_check(const std::string& name, const ModelSpec& model, Seed seed, Tolerance tol,
                      int scale) {
  const CheckDef* def = find_check(name);
  if (def == nullptr) {
    throw Error(ErrorCode::UnknownCheck, "no check named '" + name + "'");
  }
  CheckReport report;
  report.check_name = name;
  report.group_name = model.name;
  report.omega = model.omega;
  report.seed = seed.value;
  const auto start = std::chrono::steady_clock::now();
  try {
    SymContext ctx = make_context(model.group, model.omega, seed, tol);
    double err = 0.0;
    const int instances = def->randomized ? std::max(1, scale) : 1;
    for (int inst = 0; inst < instances; ++inst) {
      std::ostringstream tag;
      tag << name << ':' << model.name << ':' << model.omega << ':' << inst;
      Rng rng(derive_seed(seed, tag.str()));
      err = std::max(err, def->fn(ctx, rng));
    }
    report.max_error = err;
    report.status = err <= tol.eps ? "pass" : "fail";
  } catch (const std::exception& e) {
    report.status = "error";
    report.max_error = std::numeric_limits<double>::infinity();
    report.details = e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

std::vector<CheckReport> run_suite(const std::vector<ModelSpec>& models, Seed seed, Tolerance tol,
                                   int scale) {
  std::vector<CheckReport> reports;
  for (const auto& model : models) {
    const bool is_super = model.omega != FiniteGroup::kIdentity;
    for (const auto& name : check_names()) {
      if (!check_applicable(name, is_super)) continue;
      reports.push_back(run_check(name, model, seed, tol, scale));
    }
  }
  return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.status == "pass"; });
}

}  // namespace centrekit
