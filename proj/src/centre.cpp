#include "centrekit/centre.hpp"

#include <algorithm>
#include <cmath>

namespace centrekit {

SymContext make_context(GroupPtr group, int omega, Seed seed, Tolerance tol) {
  SymContext ctx;
  ctx.group = std::move(group);
  ctx.omega = make_super_group(ctx.group, omega).omega;  // validates
  ctx.tol = tol;
  ctx.seed = seed;
  ctx.simples = irreps(*ctx.group, seed, tol);
  ctx.parities.reserve(ctx.simples.size());
  for (const auto& irr : ctx.simples) ctx.parities.push_back(parity_sign(irr, omega, tol));
  ctx.global_dim = static_cast<double>(ctx.group->order());
  return ctx;
}

ProbeRep probe_of_simple(const SymContext& ctx, int index) {
  return ProbeRep{ctx.simples[index].rep, ctx.parities[index]};
}

ProbeRep probe_dual(const ProbeRep& probe) { return ProbeRep{rep_dual(probe.rep), probe.parity}; }

CentreObject bundle_centre_object(const SymContext& ctx, const EquivariantBundle& v) {
  (void)ctx;
  CentreObject obj;
  obj.underlying = forgetful(v);
  EquivariantBundle copy = v;
  const int total = obj.dim();
  obj.half_braiding = [copy, total](const ProbeRep& c) {
    // blockwise on c (x) V_g: switch o (rho^c(g) (x) id)
    BundleLayout layout(copy);
    const int dc = c.rep.dim();
    CMatrix out = zero(total * dc, dc * total);
    for (const auto& [g, d] : copy.fibres) {
      const int off = layout.offset(g);
      const CMatrix block = switch_matrix(dc, d) * kron(c.rep.at(g), identity(d));
      for (int lr = 0; lr < d * dc; ++lr)
        for (int lc = 0; lc < dc * d; ++lc) {
          const int k = lr / dc, vout = lr % dc;
          const int vin = lc / d, l = lc % d;
          out((off + k) * dc + vout, vin * total + off + l) = block(lr, lc);
        }
    }
    return out;
  };
  return obj;
}

CMatrix base_symmetry(const SymContext& ctx, const ProbeRep& c, const CentreObject& x) {
  const int dc = c.rep.dim();
  const int nx = x.dim();
  CMatrix g_pow = identity(nx);
  if (ctx.is_super() && c.parity == 1) g_pow = x.grading_operator(ctx.omega);
  return switch_matrix(dc, nx) * kron(identity(dc), g_pow);
}

CMatrix half_braiding_at(const SymContext& ctx, const CentreObject& x, const Rep& probe) {
  if (!ctx.is_super()) return x.half_braiding(ProbeRep{probe, 0});
  const int n = probe.dim();
  const int nx = x.dim();
  CMatrix out = zero(nx * n, n * nx);
  const CMatrix omega_mat = probe.at(ctx.omega);
  for (int p = 0; p < 2; ++p) {
    const double sign = p == 0 ? 1.0 : -1.0;
    CMatrix projector = 0.5 * (identity(n) + sign * omega_mat);
    auto split = split_idempotent_canonical(projector, ctx.tol);
    if (split.rank == 0) continue;
    Rep part;
    part.mats.reserve(probe.mats.size());
    for (const auto& m : probe.mats) part.mats.push_back(split.proj * m * split.incl);
    const CMatrix beta_p = x.half_braiding(ProbeRep{part, p});
    out += kron(identity(nx), CMatrix(split.incl)) * beta_p *
           kron(CMatrix(split.proj), identity(nx));
  }
  return out;
}

namespace {

// Net crossings of the two ring strands: the outgoing pass of the ring past
// an object uses the base symmetry and the return pass the object's
// half-braiding; `swapped` exchanges over and under, turning the
// half-braiding contribution into its inverse.
CMatrix ring_net_left(const SymContext& ctx, const CentreObject& x, const ProbeRep& probe,
                      bool swapped) {
  const int nx = x.dim();
  const int di = probe.rep.dim();
  CMatrix g_pow = identity(nx);
  if (ctx.is_super() && probe.parity == 1) g_pow = x.grading_operator(ctx.omega);
  const CMatrix beta = x.half_braiding(probe);
  if (!swapped) {
    // X (x) i -> i (x) X by the symmetry, back by beta
    return beta * (switch_matrix(nx, di) * kron(g_pow, identity(di)));
  }
  // X (x) i -> i (x) X by beta^-1, back by the symmetry
  return (switch_matrix(di, nx) * kron(identity(di), g_pow)) * beta.inverse();
}

CMatrix ring_net_right(const SymContext& ctx, const CentreObject& y, const ProbeRep& dual_probe,
                       bool swapped) {
  const int ny = y.dim();
  const int di = dual_probe.rep.dim();
  CMatrix g_pow = identity(ny);
  if (ctx.is_super() && dual_probe.parity == 1) g_pow = y.grading_operator(ctx.omega);
  const CMatrix beta = y.half_braiding(dual_probe);
  if (!swapped) {
    // i* (x) Y -> Y (x) i* by beta, back by the symmetry
    return (switch_matrix(ny, di) * kron(g_pow, identity(di))) * beta;
  }
  // i* (x) Y -> Y (x) i* by the symmetry, back by beta^-1
  return beta.inverse() * (switch_matrix(di, ny) * kron(identity(di), g_pow));
}

}  // namespace

CMatrix ring_idempotent(const SymContext& ctx, const CentreObject& x, const CentreObject& y,
                        bool swapped) {
  const int nx = x.dim();
  const int ny = y.dim();
  CMatrix acc = zero(nx * ny, nx * ny);
  for (std::size_t s = 0; s < ctx.simples.size(); ++s) {
    const ProbeRep probe = probe_of_simple(ctx, static_cast<int>(s));
    const ProbeRep dual = probe_dual(probe);
    const int di = probe.rep.dim();
    const CMatrix net_left = ring_net_left(ctx, x, probe, swapped);
    const CMatrix net_right = ring_net_right(ctx, y, dual, swapped);
    const CMatrix up = kron(identity(nx), kron(coevaluation(di), identity(ny)));
    const CMatrix down = kron(identity(nx), kron(evaluation_rev(di), identity(ny)));
    const CMatrix mv = kron(net_left, identity(di * ny));
    const CMatrix mw = kron(identity(nx * di), net_right);
    acc += (ctx.simples[s].dim / ctx.global_dim) * (down * (mw * (mv * up)));
  }
  return acc;
}

CMatrix conv_from_kron(const EquivariantBundle& v, const EquivariantBundle& w) {
  ConvLayout conv(v, w);
  BundleLayout lv(v), lw(w);
  CMatrix p = zero(conv.total, lv.total * lw.total);
  for (const auto& s : conv.summands)
    for (int i = 0; i < s.dim1; ++i)
      for (int j = 0; j < s.dim2; ++j)
        p(s.offset_global + i * s.dim2 + j,
          (lv.offset(s.g1) + i) * lw.total + lw.offset(s.g2) + j) = 1.0;
  return p;
}

CMatrix pi_categorical(const SymContext& ctx, const EquivariantBundle& v,
                       const EquivariantBundle& w, bool swapped) {
  require_same_group(v, w);
  const auto& g = *ctx.group;
  ConvLayout conv(v, w);
  CMatrix out = zero(conv.total, conv.total);
  for (const auto& s : conv.summands) {
    const int d1 = s.dim1, d2 = s.dim2;
    CMatrix block = zero(d1 * d2, d1 * d2);
    for (std::size_t idx = 0; idx < ctx.simples.size(); ++idx) {
      const Irrep& irr = ctx.simples[idx];
      const int di = irr.dim;
      const int par = ctx.parities[idx];
      const int g1 = swapped ? g.inv(s.g1) : s.g1;
      const int g2 = swapped ? g.inv(s.g2) : s.g2;
      const CMatrix mv = par == 1 ? v.rho(ctx.omega, s.g1) : identity(d1);
      const CMatrix mw = par == 1 ? w.rho(ctx.omega, s.g2) : identity(d2);
      const CMatrix rho_i = irr.rep.at(g1);
      const CMatrix rho_i_dual = irr.rep.at(g2).conjugate();
      const CMatrix up = kron(identity(d1), kron(coevaluation(di), identity(d2)));
      const CMatrix m1 = kron(mv, kron(identity(di), kron(rho_i_dual, identity(d2))));
      const CMatrix m2 = kron(identity(d1), kron(rho_i, kron(identity(di), mw)));
      const CMatrix down = kron(identity(d1), kron(evaluation_rev(di), identity(d2)));
      block += (di / ctx.global_dim) * (down * (m2 * (m1 * up)));
    }
    out.block(s.offset_global, s.offset_global, d1 * d2, d1 * d2) = block;
  }
  return out;
}

CMatrix pi_closed_form(const SymContext& ctx, const EquivariantBundle& v,
                       const EquivariantBundle& w) {
  require_same_group(v, w);
  const auto& g = *ctx.group;
  ConvLayout conv(v, w);
  CMatrix out = zero(conv.total, conv.total);
  for (const auto& s : conv.summands) {
    const int ratio = g.mul(g.inv(s.g2), s.g1);
    CMatrix block = zero(s.dim1 * s.dim2, s.dim1 * s.dim2);
    const CMatrix omega_v = v.rho(ctx.omega, s.g1);
    const CMatrix omega_w = w.rho(ctx.omega, s.g2);
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        if (ratio != g.power(ctx.omega, (p + q) % 2)) continue;
        const CMatrix pv = 0.5 * (identity(s.dim1) + (p == 0 ? 1.0 : -1.0) * omega_v);
        const CMatrix pw = 0.5 * (identity(s.dim2) + (q == 0 ? 1.0 : -1.0) * omega_w);
        block += kron(pv, pw);
      }
    out.block(s.offset_global, s.offset_global, block.rows(), block.cols()) = block;
  }
  return out;
}

PiSplitting split_pi_bundle(const SymContext& ctx, const EquivariantBundle& v,
                            const EquivariantBundle& w) {
  require_same_group(v, w);
  const auto& g = *ctx.group;
  SuperGroup sg{ctx.group, ctx.omega};
  ConvLayout conv(v, w);
  auto vb = parity_bases(sg, v, ctx.tol);
  auto wb = parity_bases(sg, w, ctx.tol);

  struct Piece {
    int x, p, q, g1, g2, rv, rw;
    int conv_offset, d1, d2;
  };
  std::vector<Piece> pieces;
  int rank = 0;
  for (int x = 0; x < g.order(); ++x) {
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        const int g1 = g.mul(g.power(ctx.omega, q), x);
        const int g2 = g.mul(g.power(ctx.omega, p), x);
        const int rv = vb.rank(p, g1);
        const int rw = wb.rank(q, g2);
        if (rv == 0 || rw == 0) continue;
        int conv_offset = -1;
        for (const auto& s : conv.summands) {
          if (s.g1 == g1 && s.g2 == g2) {
            conv_offset = s.offset_global;
            break;
          }
        }
        pieces.push_back({x, p, q, g1, g2, rv, rw, conv_offset, v.dim(g1), w.dim(g2)});
        rank += rv * rw;
      }
  }

  PiSplitting out;
  out.source = convolution_tensor(v, w);
  out.rank = rank;
  out.incl = zero(conv.total, rank);
  out.proj = zero(rank, conv.total);
  out.grading.reserve(rank);
  int col = 0;
  for (const auto& piece : pieces) {
    const CMatrix bi = kron(vb.incl[piece.p].at(piece.g1), wb.incl[piece.q].at(piece.g2));
    const CMatrix bp = kron(vb.proj[piece.p].at(piece.g1), wb.proj[piece.q].at(piece.g2));
    out.incl.block(piece.conv_offset, col, piece.d1 * piece.d2, piece.rv * piece.rw) = bi;
    out.proj.block(col, piece.conv_offset, piece.rv * piece.rw, piece.d1 * piece.d2) = bp;
    for (int k = 0; k < piece.rv * piece.rw; ++k) out.grading.push_back(piece.x);
    col += piece.rv * piece.rw;
  }
  out.pi = out.incl * out.proj;
  return out;
}

CMatrix crossing_resolution(const SymContext& ctx, const CentreObject& x, const CentreObject& y,
                            const ProbeRep& c, int resolution) {
  const int nx = x.dim();
  const int ny = y.dim();
  if (resolution == 1) {
    // braid through x, then pass y by the base symmetry
    const CMatrix a = kron(x.half_braiding(c), identity(ny));
    const CMatrix b = kron(identity(nx), base_symmetry(ctx, c, y));
    return b * a;
  }
  // pass x by the base symmetry, then braid through y
  const CMatrix a = kron(base_symmetry(ctx, c, x), identity(ny));
  const CMatrix b = kron(identity(nx), y.half_braiding(c));
  return b * a;
}

CMatrix symmetric_half_braiding(const SymContext& ctx, const EquivariantBundle& v,
                                const EquivariantBundle& w, const PiSplitting& splitting,
                                const ProbeRep& c, int resolution) {
  const CMatrix p = conv_from_kron(v, w);
  const CMatrix incl_k = p.adjoint() * splitting.incl;
  const CMatrix proj_k = splitting.proj * p;
  const CentreObject x = bundle_centre_object(ctx, v);
  const CentreObject y = bundle_centre_object(ctx, w);
  const CMatrix res = crossing_resolution(ctx, x, y, c, resolution);
  const int dc = c.rep.dim();
  return kron(proj_k, identity(dc)) * res * kron(identity(dc), incl_k);
}

std::vector<CMatrix> grading_projectors(const SymContext& ctx, const CentreObject& x) {
  const auto& g = *ctx.group;
  const int n = g.order();
  const int nx = x.dim();
  const Rep reg = regular_representation(g);
  const CMatrix beta = half_braiding_at(ctx, x, reg);
  std::vector<CMatrix> out;
  out.reserve(n);
  for (int gg = 0; gg < n; ++gg) {
    CMatrix s = zero(nx, nx);
    for (int k = 0; k < nx; ++k)
      for (int l = 0; l < nx; ++l) s(k, l) = beta(k * n + gg, l);
    out.push_back(std::move(s));
  }
  return out;
}

EquivariantBundle bundle_from_centre_object(const SymContext& ctx, const CentreObject& x) {
  const auto& g = *ctx.group;
  auto projs = grading_projectors(ctx, x);
  CMatrix sum = zero(x.dim(), x.dim());
  for (const auto& s : projs) sum += s;
  if (max_abs_diff(sum, identity(x.dim())) > ctx.tol.eps) {
    throw Error(ErrorCode::DecompositionFailed, "grading projectors do not resolve the identity");
  }
  std::map<int, IdempotentSplitting> splits;
  EquivariantBundle out;
  out.group = ctx.group;
  for (int gg = 0; gg < g.order(); ++gg) {
    auto split = split_idempotent_canonical(projs[gg], ctx.tol);
    if (split.rank > 0) {
      out.fibres[gg] = split.rank;
      splits[gg] = std::move(split);
    }
  }
  for (int h = 0; h < g.order(); ++h) {
    for (const auto& [gg, d] : out.fibres) {
      const int target = g.conjugate(h, gg);
      out.action[h][gg] = splits.at(target).proj * x.underlying.at(h) * splits.at(gg).incl;
    }
  }
  out.validate(ctx.tol);
  return out;
}

SymmetricProduct symmetric_tensor(const SymContext& ctx, const EquivariantBundle& v,
                                  const EquivariantBundle& w) {
  require_same_group(v, w);
  SymmetricProduct out;
  out.splitting = split_pi_bundle(ctx, v, w);
  SuperGroup sg{ctx.group, ctx.omega};
  out.bundle = ctx.is_super() ? fibrewise_super_tensor(sg, v, w) : fibrewise_tensor(v, w);

  // the split subobject must realise the fibrewise product blockwise
  const Rep conv_rep = forgetful(out.splitting.source);
  const Rep result_rep = forgetful(out.bundle);
  for (int h = 0; h < ctx.group->order(); ++h) {
    const CMatrix restricted = out.splitting.proj * conv_rep.at(h) * out.splitting.incl;
    if (max_abs_diff(restricted, result_rep.at(h)) > ctx.tol.eps) {
      throw Error(ErrorCode::DecompositionFailed,
                  "split subobject disagrees with the fibrewise product");
    }
  }

  // grading read back from the half-braiding at the regular representation
  if (out.splitting.rank > 0) {
    CentreObject split_obj;
    split_obj.underlying = result_rep;
    const PiSplitting s = out.splitting;
    SymContext ctx_copy = ctx;
    EquivariantBundle vc = v, wc = w;
    split_obj.half_braiding = [ctx_copy, vc, wc, s](const ProbeRep& c) {
      return symmetric_half_braiding(ctx_copy, vc, wc, s, c, 1);
    };
    auto projs = grading_projectors(ctx, split_obj);
    for (int gg = 0; gg < ctx.group->order(); ++gg) {
      CMatrix expected = zero(s.rank, s.rank);
      for (int k = 0; k < s.rank; ++k)
        if (s.grading[k] == gg) expected(k, k) = 1.0;
      if (max_abs_diff(projs[gg], expected) > ctx.tol.eps) {
        throw Error(ErrorCode::DecompositionFailed,
                    "recovered grading disagrees with the splitting");
      }
    }
  }
  return out;
}

CentreProduct centre_tensor(const SymContext& ctx, const CentreObject& x, const CentreObject& y) {
  CentreProduct out;
  out.pi = ring_idempotent(ctx, x, y);
  auto split = split_idempotent(out.pi, ctx.tol);
  out.rank = split.rank;
  out.incl = split.incl;
  out.proj = split.proj;

  CentreObject obj;
  obj.underlying.mats.reserve(ctx.group->order());
  for (int g = 0; g < ctx.group->order(); ++g) {
    obj.underlying.mats.push_back(out.proj * kron(x.underlying.at(g), y.underlying.at(g)) *
                                  out.incl);
  }
  SymContext ctx_copy = ctx;
  CentreObject xc = x, yc = y;
  CMatrix incl = out.incl, proj = out.proj;
  obj.half_braiding = [ctx_copy, xc, yc, incl, proj](const ProbeRep& c) -> CMatrix {
    const CMatrix res = crossing_resolution(ctx_copy, xc, yc, c, 1);
    const int dc = c.rep.dim();
    return kron(proj, identity(dc)) * res * kron(identity(dc), incl);
  };
  out.object = std::move(obj);
  return out;
}

CMatrix tensor_morphism_matrix(const CMatrix& f, const CMatrix& g, const CentreProduct& source,
                               const CentreProduct& target) {
  if (f.cols() * g.cols() != source.incl.rows() || f.rows() * g.rows() != target.proj.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "morphism factors do not match the splittings");
  }
  return target.proj * kron(f, g) * source.incl;
}

CMatrix tensor_morphism(const SymContext& ctx, const BundleMorphism& f, const BundleMorphism& g,
                        const PiSplitting& source, const PiSplitting& target) {
  (void)ctx;
  const CMatrix p_src = conv_from_kron(f.source, g.source);
  const CMatrix p_dst = conv_from_kron(f.target, g.target);
  const CMatrix big = kron(forgetful_morphism(f), forgetful_morphism(g));
  return target.proj * p_dst * big * p_src.adjoint() * source.incl;
}

namespace {

CMatrix super_switch(const SymContext& ctx, const CentreObject& x, const CentreObject& y) {
  const int nx = x.dim();
  const int ny = y.dim();
  CMatrix sign_op = identity(nx * ny);
  if (ctx.is_super()) {
    const CMatrix gx = x.grading_operator(ctx.omega);
    const CMatrix gy = y.grading_operator(ctx.omega);
    const CMatrix px[2] = {0.5 * (identity(nx) + gx), 0.5 * (identity(nx) - gx)};
    const CMatrix py[2] = {0.5 * (identity(ny) + gy), 0.5 * (identity(ny) - gy)};
    sign_op = zero(nx * ny, nx * ny);
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) sign_op += (p == 1 && q == 1 ? -1.0 : 1.0) * kron(px[p], py[q]);
  }
  return switch_matrix(nx, ny) * sign_op;
}

}  // namespace

CMatrix symmetry_iso(const SymContext& ctx, const CentreObject& x, const CentreObject& y,
                     const CentreProduct& xy, const CentreProduct& yx) {
  return yx.proj * super_switch(ctx, x, y) * xy.incl;
}

TripleProduct triple_product_left(const SymContext& ctx, const CentreObject& u,
                                  const CentreObject& v, const CentreObject& w) {
  TripleProduct out;
  out.inner = centre_tensor(ctx, u, v);
  out.outer = centre_tensor(ctx, out.inner.object, w);
  out.total_incl = kron(out.inner.incl, identity(w.dim())) * out.outer.incl;
  out.total_proj = out.outer.proj * kron(out.inner.proj, identity(w.dim()));
  return out;
}

TripleProduct triple_product_right(const SymContext& ctx, const CentreObject& u,
                                   const CentreObject& v, const CentreObject& w) {
  TripleProduct out;
  out.inner = centre_tensor(ctx, v, w);
  out.outer = centre_tensor(ctx, u, out.inner.object);
  out.total_incl = kron(identity(u.dim()), CMatrix(out.inner.incl)) * out.outer.incl;
  out.total_proj = out.outer.proj * kron(identity(u.dim()), CMatrix(out.inner.proj));
  return out;
}

CMatrix associator_iso(const SymContext& ctx, const TripleProduct& left,
                       const TripleProduct& right) {
  (void)ctx;
  return right.total_proj * left.total_incl;
}

CMatrix symmetry_iso_bundle(const SymContext& ctx, const EquivariantBundle& v,
                            const EquivariantBundle& w, const PiSplitting& vw,
                            const PiSplitting& wv) {
  const CMatrix p_vw = conv_from_kron(v, w);
  const CMatrix p_wv = conv_from_kron(w, v);
  const CentreObject x = bundle_centre_object(ctx, v);
  const CentreObject y = bundle_centre_object(ctx, w);
  return wv.proj * p_wv * super_switch(ctx, x, y) * p_vw.adjoint() * vw.incl;
}

UnitObject unit_object(const SymContext& ctx) {
  const auto& g = *ctx.group;
  UnitObject unit;
  int total = 0;
  for (const auto& irr : ctx.simples) {
    unit.block_offset.push_back(total);
    total += irr.dim * irr.dim;
  }
  unit.collapse = zero(1, total);
  unit.expand = zero(total, 1);
  for (std::size_t i = 0; i < ctx.simples.size(); ++i) {
    const int d = ctx.simples[i].dim;
    for (int a = 0; a < d; ++a) {
      unit.collapse(0, unit.block_offset[i] + a * d + a) = 1.0;
      unit.expand(unit.block_offset[i] + a * d + a, 0) = d / ctx.global_dim;
    }
  }

  CentreObject obj;
  obj.underlying.mats.reserve(g.order());
  for (int h = 0; h < g.order(); ++h) {
    CMatrix m = zero(total, total);
    for (std::size_t i = 0; i < ctx.simples.size(); ++i) {
      const int d = ctx.simples[i].dim;
      m.block(unit.block_offset[i], unit.block_offset[i], d * d, d * d) =
          kron(ctx.simples[i].rep.at(h), ctx.simples[i].rep.at(h).conjugate());
    }
    obj.underlying.mats.push_back(std::move(m));
  }

  SymContext ctx_copy = ctx;
  std::vector<int> offsets = unit.block_offset;
  obj.half_braiding = [ctx_copy, offsets, total](const ProbeRep& c) {
    const auto& grp = *ctx_copy.group;
    const int dc = c.rep.dim();
    CMatrix out = zero(total * dc, dc * total);
    for (std::size_t i = 0; i < ctx_copy.simples.size(); ++i) {
      const int di = ctx_copy.simples[i].dim;
      const Rep source = rep_tensor(c.rep, ctx_copy.simples[i].rep);
      for (std::size_t j = 0; j < ctx_copy.simples.size(); ++j) {
        const int dj = ctx_copy.simples[j].dim;
        auto basis = hom_basis(grp, source, ctx_copy.simples[j].rep, ctx_copy.tol);
        if (basis.empty()) continue;
        auto duals = dual_basis(basis, ctx_copy.tol);
        CMatrix block = zero(dj * dj * dc, dc * di * di);
        const CMatrix step0 = kron(identity(dc * di * di), coevaluation_rev(dc));
        for (std::size_t b = 0; b < basis.size(); ++b) {
          const CMatrix phi_star = dual_morphism_star(duals[b], dc, di, dj);
          const CMatrix step1 = kron(basis[b], identity(di * dc * dc));
          const CMatrix step2 = kron(identity(dj), kron(phi_star, identity(dc)));
          block += step2 * (step1 * step0);
        }
        for (int r = 0; r < dj * dj; ++r)
          for (int vq = 0; vq < dc; ++vq)
            for (int vp = 0; vp < dc; ++vp)
              for (int cidx = 0; cidx < di * di; ++cidx)
                out((offsets[j] + r) * dc + vq, vp * total + offsets[i] + cidx) +=
                    block(r * dc + vq, vp * di * di + cidx);
      }
    }
    return out;
  };
  unit.object = std::move(obj);
  return unit;
}

CMatrix unit_cap(const SymContext& ctx, const UnitObject& unit, const CentreObject& b,
                 bool left) {
  const int nb = b.dim();
  const int nu = unit.object.dim();
  CMatrix cap = zero(nb, nu * nb);
  for (std::size_t i = 0; i < ctx.simples.size(); ++i) {
    const int di = ctx.simples[i].dim;
    const int off = unit.block_offset[i];
    if (left) {
      const CMatrix net = ring_net_right(ctx, b, probe_dual(probe_of_simple(ctx, static_cast<int>(i))), true);
      const CMatrix local = kron(evaluation_rev(di), identity(nb)) * kron(identity(di), net);
      for (int r = 0; r < nb; ++r)
        for (int ab = 0; ab < di * di; ++ab)
          for (int y = 0; y < nb; ++y) cap(r, (off + ab) * nb + y) += local(r, ab * nb + y);
    } else {
      const CMatrix net = ring_net_left(ctx, b, probe_of_simple(ctx, static_cast<int>(i)), false);
      const CMatrix local = kron(identity(nb), evaluation_rev(di)) * kron(net, identity(di));
      for (int r = 0; r < nb; ++r)
        for (int y = 0; y < nb; ++y)
          for (int ab = 0; ab < di * di; ++ab)
            cap(r, y * nu + off + ab) += local(r, y * di * di + ab);
    }
  }
  return cap;
}

CMatrix unit_cup(const SymContext& ctx, const UnitObject& unit, const CentreObject& b,
                 bool left) {
  const int nb = b.dim();
  const int nu = unit.object.dim();
  CMatrix cup = zero(nu * nb, nb);
  for (std::size_t j = 0; j < ctx.simples.size(); ++j) {
    const int dj = ctx.simples[j].dim;
    const int off = unit.block_offset[j];
    const double weight = ctx.simples[j].dim / ctx.global_dim;
    if (left) {
      const CMatrix net = ring_net_right(ctx, b, probe_dual(probe_of_simple(ctx, static_cast<int>(j))), false);
      const CMatrix local = weight * (kron(identity(dj), net) * kron(coevaluation(dj), identity(nb)));
      for (int ab = 0; ab < dj * dj; ++ab)
        for (int y = 0; y < nb; ++y)
          for (int col = 0; col < nb; ++col)
            cup((off + ab) * nb + y, col) += local(ab * nb + y, col);
    } else {
      const CMatrix net = ring_net_left(ctx, b, probe_of_simple(ctx, static_cast<int>(j)), true);
      const CMatrix local = weight * (kron(net, identity(dj)) * kron(identity(nb), coevaluation(dj)));
      for (int y = 0; y < nb; ++y)
        for (int ab = 0; ab < dj * dj; ++ab)
          for (int col = 0; col < nb; ++col)
            cup(y * nu + off + ab, col) += local(y * dj * dj + ab, col);
    }
  }
  return cup;
}

CMatrix unitor(const SymContext& ctx, const UnitObject& unit, const CentreObject& b,
               const CentreProduct& product, bool left, bool forward) {
  if (left) {
    if (forward) return unit_cap(ctx, unit, b, true) * product.incl;
    return product.proj * unit_cup(ctx, unit, b, true);
  }
  if (forward) return unit_cap(ctx, unit, b, false) * product.incl;
  return product.proj * unit_cup(ctx, unit, b, false);
}

CMatrix cloaking_side(const SymContext& ctx, const ProbeRep& a, const CentreObject& b,
                      const CentreObject& c, bool left) {
  const int da = a.rep.dim();
  const int nb = b.dim();
  const int nc = c.dim();
  const CMatrix pi = ring_idempotent(ctx, b, c);
  if (left) {
    // ring first, then cross b by its half-braiding and c by the base symmetry
    const CMatrix step1 = kron(b.half_braiding(a), identity(nc));
    const CMatrix step2 = kron(identity(nb), base_symmetry(ctx, a, c));
    return step2 * step1 * kron(identity(da), pi);
  }
  // cross b by the base symmetry and c by its half-braiding, then the ring
  const CMatrix step1 = kron(base_symmetry(ctx, a, b), identity(nc));
  const CMatrix step2 = kron(identity(nb), c.half_braiding(a));
  return kron(pi, identity(da)) * step2 * step1;
}

CMatrix snapping_lhs(const SymContext& ctx, const UnitObject& unit, const CentreObject& c) {
  return ring_idempotent(ctx, unit.object, c);
}

CMatrix snapping_rhs(const SymContext& ctx, const UnitObject& unit, const CentreObject& c) {
  return unit_cup(ctx, unit, c, true) * unit_cap(ctx, unit, c, true);
}

}  // namespace centrekit
