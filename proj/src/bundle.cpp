#include "centrekit/bundle.hpp"

#include <algorithm>

namespace centrekit {

int EquivariantBundle::total_dim() const {
  int total = 0;
  for (const auto& [g, d] : fibres) total += d;
  return total;
}

std::vector<int> EquivariantBundle::support() const {
  std::vector<int> out;
  out.reserve(fibres.size());
  for (const auto& [g, d] : fibres) out.push_back(g);
  return out;
}

void EquivariantBundle::validate(Tolerance tol) const {
  if (!group) throw Error(ErrorCode::BadIndex, "bundle without group");
  const int n = group->order();
  for (const auto& [g, d] : fibres) {
    if (g < 0 || g >= n || d <= 0) throw Error(ErrorCode::BadIndex, "bad fibre");
  }
  for (int h = 0; h < n; ++h) {
    for (const auto& [g, d] : fibres) {
      const CMatrix& block = rho(h, g);
      const int target = group->conjugate(h, g);
      if (block.rows() != dim(target) || block.cols() != d) {
        throw Error(ErrorCode::ShapeMismatch, "action block has wrong shape");
      }
    }
  }
  for (const auto& [g, d] : fibres) {
    if (max_abs_diff(rho(FiniteGroup::kIdentity, g), identity(d)) > tol.eps) {
      throw Error(ErrorCode::ShapeMismatch, "rho_e is not the identity");
    }
  }
  for (int h2 = 0; h2 < n; ++h2)
    for (int h1 = 0; h1 < n; ++h1)
      for (const auto& [g, d] : fibres) {
        const int mid = group->conjugate(h1, g);
        if (max_abs_diff(rho(h2, mid) * rho(h1, g), rho(group->mul(h2, h1), g)) > tol.eps) {
          throw Error(ErrorCode::ShapeMismatch, "action data is not multiplicative");
        }
      }
}

void BundleMorphism::validate(Tolerance tol) const {
  require_same_group(source, target);
  for (const auto& [g, block] : blocks) {
    if (block.rows() != target.dim(g) || block.cols() != source.dim(g)) {
      throw Error(ErrorCode::ShapeMismatch, "morphism block has wrong shape");
    }
  }
  const int n = source.group->order();
  for (int h = 0; h < n; ++h) {
    for (const auto& [g, d] : source.fibres) {
      const int gp = source.group->conjugate(h, g);
      CMatrix lhs = zero(target.dim(gp), d);
      auto it = blocks.find(gp);
      if (it != blocks.end() && target.dim(gp) > 0) lhs = it->second * source.rho(h, g);
      CMatrix rhs = zero(target.dim(gp), d);
      auto jt = blocks.find(g);
      if (jt != blocks.end() && target.dim(g) > 0) rhs = target.rho(h, g) * jt->second;
      if (max_abs_diff(lhs, rhs) > tol.eps) {
        throw Error(ErrorCode::ShapeMismatch, "morphism is not equivariant");
      }
    }
  }
}

BundleLayout::BundleLayout(const EquivariantBundle& v) {
  for (const auto& [g, d] : v.fibres) {
    elements.push_back(g);
    offsets.push_back(total);
    total += d;
  }
}

int BundleLayout::offset(int g) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == g) return offsets[i];
  }
  throw Error(ErrorCode::BadIndex, "element not in support");
}

ConvLayout::ConvLayout(const EquivariantBundle& v, const EquivariantBundle& w) {
  require_same_group(v, w);
  const auto& g = *v.group;
  std::map<int, std::vector<Summand>> by_fibre;
  for (const auto& [g1, d1] : v.fibres) {
    for (const auto& [g2, d2] : w.fibres) {
      Summand s;
      s.fibre = g.mul(g1, g2);
      s.g1 = g1;
      s.g2 = g2;
      s.dim1 = d1;
      s.dim2 = d2;
      by_fibre[s.fibre].push_back(s);
    }
  }
  for (auto& [fibre, list] : by_fibre) {
    std::sort(list.begin(), list.end(), [](const Summand& a, const Summand& b) { return a.g1 < b.g1; });
    int off = 0;
    for (auto& s : list) {
      s.offset_in_fibre = off;
      off += s.dim1 * s.dim2;
    }
    fibre_dims[fibre] = off;
  }
  for (auto& [fibre, d] : fibre_dims) {
    fibre_offsets[fibre] = total;
    total += d;
  }
  for (auto& [fibre, list] : by_fibre) {
    for (auto& s : list) {
      s.offset_global = fibre_offsets.at(fibre) + s.offset_in_fibre;
      summands.push_back(s);
    }
  }
  std::sort(summands.begin(), summands.end(),
            [](const Summand& a, const Summand& b) { return a.offset_global < b.offset_global; });
}

void require_same_group(const EquivariantBundle& v, const EquivariantBundle& w) {
  if (!v.group || !w.group || !(*v.group == *w.group)) {
    throw Error(ErrorCode::GroupMismatch, "bundles live over different groups");
  }
}

EquivariantBundle unit_bundle(GroupPtr group) {
  EquivariantBundle v;
  v.group = std::move(group);
  v.fibres[FiniteGroup::kIdentity] = 1;
  for (int h = 0; h < v.group->order(); ++h) v.action[h][FiniteGroup::kIdentity] = identity(1);
  return v;
}

EquivariantBundle constant_line_bundle(GroupPtr group) {
  EquivariantBundle v;
  v.group = std::move(group);
  for (int g = 0; g < v.group->order(); ++g) v.fibres[g] = 1;
  for (int h = 0; h < v.group->order(); ++h)
    for (int g = 0; g < v.group->order(); ++g) v.action[h][g] = identity(1);
  return v;
}

EquivariantBundle direct_sum(const EquivariantBundle& v, const EquivariantBundle& w) {
  require_same_group(v, w);
  EquivariantBundle out;
  out.group = v.group;
  for (int g = 0; g < v.group->order(); ++g) {
    const int d = v.dim(g) + w.dim(g);
    if (d > 0) out.fibres[g] = d;
  }
  for (int h = 0; h < v.group->order(); ++h) {
    for (const auto& [g, d] : out.fibres) {
      CMatrix block = zero(out.dim(v.group->conjugate(h, g)), d);
      if (v.dim(g) > 0) block.topLeftCorner(v.dim(v.group->conjugate(h, g)), v.dim(g)) = v.rho(h, g);
      if (w.dim(g) > 0)
        block.bottomRightCorner(w.dim(v.group->conjugate(h, g)), w.dim(g)) = w.rho(h, g);
      out.action[h][g] = std::move(block);
    }
  }
  return out;
}

EquivariantBundle convolution_tensor(const EquivariantBundle& v, const EquivariantBundle& w) {
  require_same_group(v, w);
  const auto& g = *v.group;
  ConvLayout layout(v, w);
  EquivariantBundle out;
  out.group = v.group;
  out.fibres = layout.fibre_dims;
  for (int h = 0; h < g.order(); ++h) {
    for (const auto& [fibre, d] : out.fibres) {
      out.action[h][fibre] = zero(layout.fibre_dims.at(g.conjugate(h, fibre)), d);
    }
    for (const auto& s : layout.summands) {
      const int tg1 = g.conjugate(h, s.g1);
      const int tg2 = g.conjugate(h, s.g2);
      const int tfibre = g.conjugate(h, s.fibre);
      // locate target summand offset
      int toff = -1;
      for (const auto& t : layout.summands) {
        if (t.fibre == tfibre && t.g1 == tg1 && t.g2 == tg2) {
          toff = t.offset_in_fibre;
          break;
        }
      }
      CMatrix block = kron(v.rho(h, s.g1), w.rho(h, s.g2));
      out.action[h][s.fibre].block(toff, s.offset_in_fibre, block.rows(), block.cols()) = block;
    }
  }
  return out;
}

EquivariantBundle fibrewise_tensor(const EquivariantBundle& v, const EquivariantBundle& w) {
  require_same_group(v, w);
  EquivariantBundle out;
  out.group = v.group;
  for (const auto& [g, d1] : v.fibres) {
    const int d2 = w.dim(g);
    if (d2 > 0) out.fibres[g] = d1 * d2;
  }
  for (int h = 0; h < v.group->order(); ++h) {
    for (const auto& [g, d] : out.fibres) {
      out.action[h][g] = kron(v.rho(h, g), w.rho(h, g));
    }
  }
  return out;
}

BundleMorphism braiding(const EquivariantBundle& v, const EquivariantBundle& w) {
  require_same_group(v, w);
  const auto& g = *v.group;
  ConvLayout source(v, w);
  ConvLayout target(w, v);
  BundleMorphism out;
  out.source = convolution_tensor(v, w);
  out.target = convolution_tensor(w, v);
  for (const auto& [fibre, d] : source.fibre_dims) {
    out.blocks[fibre] = zero(target.fibre_dims.count(fibre) ? target.fibre_dims.at(fibre) : 0, d);
  }
  for (const auto& s : source.summands) {
    const int wg = g.conjugate(s.g1, s.g2);  // g1 g2 g1^-1
    int toff = -1;
    for (const auto& t : target.summands) {
      if (t.fibre == s.fibre && t.g1 == wg && t.g2 == s.g1) {
        toff = t.offset_in_fibre;
        break;
      }
    }
    if (toff < 0) throw Error(ErrorCode::ShapeMismatch, "braiding target summand missing");
    CMatrix block = switch_matrix(s.dim1, w.dim(wg)) * kron(identity(s.dim1), w.rho(s.g1, s.g2));
    out.blocks[s.fibre].block(toff, s.offset_in_fibre, block.rows(), block.cols()) = block;
  }
  return out;
}

Rep forgetful(const EquivariantBundle& v) {
  const auto& g = *v.group;
  BundleLayout layout(v);
  Rep rep;
  rep.mats.reserve(g.order());
  for (int h = 0; h < g.order(); ++h) {
    CMatrix m = zero(layout.total, layout.total);
    for (const auto& [x, d] : v.fibres) {
      const int tx = g.conjugate(h, x);
      m.block(layout.offset(tx), layout.offset(x), v.dim(tx), d) = v.rho(h, x);
    }
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

EquivariantBundle include_rep_plain(GroupPtr group, const Rep& rep) {
  EquivariantBundle v;
  v.group = std::move(group);
  if (rep.dim() == 0) return v;
  v.fibres[FiniteGroup::kIdentity] = rep.dim();
  for (int h = 0; h < v.group->order(); ++h) v.action[h][FiniteGroup::kIdentity] = rep.at(h);
  return v;
}

EquivariantBundle include_rep(const SuperGroup& sg, const Rep& rep, Tolerance tol) {
  if (rep.dim() == 0) {
    EquivariantBundle v;
    v.group = sg.group;
    return v;
  }
  const CMatrix& omega_mat = rep.at(sg.omega);
  int support = FiniteGroup::kIdentity;
  if (max_abs_diff(omega_mat, identity(rep.dim())) <= tol.eps) {
    support = FiniteGroup::kIdentity;
  } else if (max_abs_diff(omega_mat, CMatrix(-identity(rep.dim()))) <= tol.eps) {
    support = sg.omega;
  } else {
    throw Error(ErrorCode::MixedParity, "representation has no definite parity");
  }
  EquivariantBundle v;
  v.group = sg.group;
  v.fibres[support] = rep.dim();
  for (int h = 0; h < sg.group->order(); ++h) v.action[h][support] = rep.at(h);
  return v;
}

EquivariantBundle induced_bundle(GroupPtr group, int x, const Rep& centralizer_rep) {
  const auto& g = *group;
  Subgroup cent = centralizer(g, x);
  if (static_cast<int>(centralizer_rep.mats.size()) != cent.group.order()) {
    throw Error(ErrorCode::ShapeMismatch, "representation is not of the centralizer");
  }
  auto local_index = [&cent](int h) {
    auto it = std::lower_bound(cent.elements.begin(), cent.elements.end(), h);
    if (it == cent.elements.end() || *it != h) {
      throw Error(ErrorCode::BadIndex, "element outside centralizer");
    }
    return static_cast<int>(it - cent.elements.begin());
  };
  // minimal-index coset representative per class element: t_y x t_y^-1 = y
  const auto& cls = g.conjugacy_classes()[g.class_index(x)];
  std::map<int, int> coset_rep;
  for (int y : cls) {
    for (int t = 0; t < g.order(); ++t) {
      if (g.conjugate(t, x) == y) {
        coset_rep[y] = t;
        break;
      }
    }
  }
  const int d = centralizer_rep.dim();
  EquivariantBundle v;
  v.group = group;
  for (int y : cls) v.fibres[y] = d;
  for (int h = 0; h < g.order(); ++h) {
    for (int y : cls) {
      const int yp = g.conjugate(h, y);
      const int c = g.mul(g.inv(coset_rep.at(yp)), g.mul(h, coset_rep.at(y)));
      v.action[h][y] = centralizer_rep.at(local_index(c));
    }
  }
  return v;
}

EquivariantBundle simple_bundle(GroupPtr group, int x, const Irrep& pi) {
  return induced_bundle(std::move(group), x, pi.rep);
}

CMatrix omega_operator(const SuperGroup& sg, const EquivariantBundle& v, int g) {
  return v.rho(sg.omega, g);
}

BundleParity parity_of(const SuperGroup& sg, const EquivariantBundle& v, Tolerance tol) {
  bool all_even = true, all_odd = true;
  for (const auto& [g, d] : v.fibres) {
    const CMatrix op = omega_operator(sg, v, g);
    if (max_abs_diff(op, identity(d)) > tol.eps) all_even = false;
    if (max_abs_diff(op, CMatrix(-identity(d))) > tol.eps) all_odd = false;
  }
  if (all_even) return BundleParity::Even;
  if (all_odd) return BundleParity::Odd;
  return BundleParity::Mixed;
}

int ParityBases::rank(int p, int g) const {
  auto it = incl[p].find(g);
  return it == incl[p].end() ? 0 : static_cast<int>(it->second.cols());
}

ParityBases parity_bases(const SuperGroup& sg, const EquivariantBundle& v, Tolerance tol) {
  ParityBases out;
  for (const auto& [g, d] : v.fibres) {
    const CMatrix op = omega_operator(sg, v, g);
    for (int p = 0; p < 2; ++p) {
      const double sign = p == 0 ? 1.0 : -1.0;
      CMatrix projector = 0.5 * (identity(d) + sign * op);
      auto split = split_idempotent_canonical(projector, tol);
      if (split.rank > 0) {
        out.incl[p][g] = split.incl;
        out.proj[p][g] = split.proj;
      }
    }
  }
  return out;
}

EquivariantBundle homogeneous_part(const SuperGroup& sg, const EquivariantBundle& v,
                                   const ParityBases& bases, int p) {
  EquivariantBundle out;
  out.group = v.group;
  for (const auto& [g, d] : v.fibres) {
    const int r = bases.rank(p, g);
    if (r > 0) out.fibres[g] = r;
  }
  const auto& grp = *v.group;
  for (int h = 0; h < grp.order(); ++h) {
    for (const auto& [g, r] : out.fibres) {
      const int gp = grp.conjugate(h, g);
      out.action[h][g] = bases.proj[p].at(gp) * v.rho(h, g) * bases.incl[p].at(g);
    }
  }
  (void)sg;
  return out;
}

EquivariantBundle fibrewise_super_tensor(const SuperGroup& sg, const EquivariantBundle& v,
                                         const EquivariantBundle& w) {
  require_same_group(v, w);
  const auto& g = *v.group;
  auto vb = parity_bases(sg, v);
  auto wb = parity_bases(sg, w);
  EquivariantBundle parts[2][2];
  for (int p = 0; p < 2; ++p) {
    EquivariantBundle vp = homogeneous_part(sg, v, vb, p);
    for (int q = 0; q < 2; ++q) {
      EquivariantBundle wq = homogeneous_part(sg, w, wb, q);
      // (V_p (x)_f^w W_q)_x = (V_p)_{w^q x} (x) (W_q)_{w^p x}
      EquivariantBundle piece;
      piece.group = v.group;
      for (int x = 0; x < g.order(); ++x) {
        const int xv = g.mul(g.power(sg.omega, q), x);
        const int xw = g.mul(g.power(sg.omega, p), x);
        const int d = vp.dim(xv) * wq.dim(xw);
        if (d > 0) piece.fibres[x] = d;
      }
      for (int h = 0; h < g.order(); ++h) {
        for (const auto& [x, d] : piece.fibres) {
          const int xv = g.mul(g.power(sg.omega, q), x);
          const int xw = g.mul(g.power(sg.omega, p), x);
          piece.action[h][x] = kron(vp.rho(h, xv), wq.rho(h, xw));
        }
      }
      parts[p][q] = std::move(piece);
    }
  }
  EquivariantBundle out = parts[0][0];
  if (!out.group) out.group = v.group;
  out = direct_sum(direct_sum(parts[0][0], parts[0][1]), direct_sum(parts[1][0], parts[1][1]));
  return out;
}

int bundle_endomorphism_dimension(const EquivariantBundle& v, Tolerance tol) {
  // dim End = sum over supported classes of <chi_x, chi_x> over C(x)
  const auto& g = *v.group;
  double total = 0.0;
  std::vector<int> seen_classes;
  for (const auto& [x, d] : v.fibres) {
    const int c = g.class_index(x);
    if (std::find(seen_classes.begin(), seen_classes.end(), c) != seen_classes.end()) continue;
    seen_classes.push_back(c);
    const int rep = g.conjugacy_classes()[c].front();
    Subgroup cent = centralizer(g, rep);
    double acc = 0.0;
    for (int j = 0; j < cent.group.order(); ++j) {
      // character of the centralizer action on the fibre over rep
      acc += std::norm(v.rho(cent.elements[j], rep).trace());
    }
    total += acc / cent.group.order();
  }
  (void)tol;
  return static_cast<int>(std::llround(total));
}

namespace {

Rep conjugated_sum_of_irreps(const FiniteGroup& cent, const std::vector<Irrep>& simples,
                             const std::vector<int>& picks, Rng& rng) {
  Rep sum;
  for (std::size_t idx = 0; idx < picks.size(); ++idx) {
    const Rep& next = simples[picks[idx]].rep;
    sum = idx == 0 ? next : rep_direct_sum(sum, next);
  }
  CMatrix u = random_unitary(sum.dim(), rng);
  Rep out;
  out.mats.reserve(cent.order());
  for (const auto& m : sum.mats) out.mats.push_back(u * m * u.adjoint());
  return out;
}

EquivariantBundle random_bundle_impl(GroupPtr group, Rng& rng, int max_classes,
                                     const SuperGroup* homog, int parity) {
  const auto& g = *group;
  const int n_classes = static_cast<int>(g.conjugacy_classes().size());
  const int k = rng.uniform_int(1, std::min(max_classes, n_classes));
  std::vector<int> class_ids;
  while (static_cast<int>(class_ids.size()) < k) {
    const int c = rng.uniform_int(0, n_classes - 1);
    if (std::find(class_ids.begin(), class_ids.end(), c) == class_ids.end()) class_ids.push_back(c);
  }
  std::sort(class_ids.begin(), class_ids.end());
  EquivariantBundle out;
  out.group = group;
  for (int c : class_ids) {
    const int x = g.conjugacy_classes()[c].front();
    Subgroup cent = centralizer(g, x);
    auto cent_irreps = irreps(cent.group, Seed{0x5eedu + static_cast<unsigned>(x)});
    // restrict the choice set by parity of rho(omega) when homogeneity is asked
    std::vector<int> allowed;
    for (std::size_t i = 0; i < cent_irreps.size(); ++i) {
      if (homog != nullptr) {
        const int local_omega = [&]() {
          for (std::size_t j = 0; j < cent.elements.size(); ++j) {
            if (cent.elements[j] == homog->omega) return static_cast<int>(j);
          }
          throw Error(ErrorCode::BadIndex, "omega missing from centralizer");
        }();
        if (parity_sign(cent_irreps[i], local_omega) != parity) continue;
      }
      allowed.push_back(static_cast<int>(i));
    }
    if (allowed.empty()) continue;
    const int want_dim = rng.uniform_int(1, 2);
    std::vector<int> picks;
    int have = 0;
    while (have < want_dim) {
      const int pick = allowed[rng.uniform_int(0, static_cast<int>(allowed.size()) - 1)];
      if (cent_irreps[pick].dim + have > want_dim) {
        if (have > 0) break;  // settle for what fits
        // only larger irreps available; take one and stop
        picks.push_back(pick);
        have += cent_irreps[pick].dim;
        break;
      }
      picks.push_back(pick);
      have += cent_irreps[pick].dim;
    }
    if (picks.empty()) continue;
    Rep fibre_rep = conjugated_sum_of_irreps(cent.group, cent_irreps, picks, rng);
    EquivariantBundle piece = induced_bundle(group, x, fibre_rep);
    out = out.fibres.empty() ? piece : direct_sum(out, piece);
  }
  if (out.fibres.empty()) {
    // at least the unit so downstream checks have something to chew on
    out = unit_bundle(group);
    if (homog != nullptr && parity == 1) {
      // odd fallback: a line at [omega] if omega != e, else keep the unit
      if (homog->omega != FiniteGroup::kIdentity) {
        // find an odd centralizer irrep of omega's centralizer (= G)
        auto gi = irreps(g, Seed{0xadd});
        for (const auto& irr : gi) {
          if (parity_sign(irr, homog->omega) == 1) {
            out = include_rep(*homog, irr.rep);
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

EquivariantBundle random_bundle(GroupPtr group, Rng& rng, int max_classes) {
  return random_bundle_impl(std::move(group), rng, max_classes, nullptr, 0);
}

EquivariantBundle random_homogeneous_bundle(const SuperGroup& sg, Rng& rng, int parity,
                                            int max_classes) {
  return random_bundle_impl(sg.group, rng, max_classes, &sg, parity);
}

BundleMorphism identity_morphism(const EquivariantBundle& v) {
  BundleMorphism f;
  f.source = v;
  f.target = v;
  for (const auto& [g, d] : v.fibres) f.blocks[g] = identity(d);
  return f;
}

BundleMorphism random_endomorphism(const EquivariantBundle& v, Rng& rng) {
  const auto& g = *v.group;
  BundleMorphism f;
  f.source = v;
  f.target = v;
  std::map<int, CMatrix> raw;
  for (const auto& [x, d] : v.fibres) raw[x] = random_matrix(d, d, rng);
  for (const auto& [x, d] : v.fibres) {
    CMatrix acc = zero(d, d);
    for (int h = 0; h < g.order(); ++h) {
      const int hx = g.conjugate(h, x);
      acc += v.rho(g.inv(h), hx) * raw.at(hx) * v.rho(h, x);
    }
    f.blocks[x] = acc / static_cast<double>(g.order());
  }
  return f;
}

BundleMorphism compose(const BundleMorphism& second, const BundleMorphism& first) {
  BundleMorphism out;
  out.source = first.source;
  out.target = second.target;
  for (const auto& [g, d] : first.source.fibres) {
    if (second.target.dim(g) == 0) continue;
    CMatrix b = zero(second.target.dim(g), d);
    auto f1 = first.blocks.find(g);
    auto f2 = second.blocks.find(g);
    if (f1 != first.blocks.end() && f2 != second.blocks.end()) b = f2->second * f1->second;
    out.blocks[g] = std::move(b);
  }
  return out;
}

CMatrix forgetful_morphism(const BundleMorphism& f) {
  BundleLayout src(f.source);
  BundleLayout dst(f.target);
  CMatrix m = zero(dst.total, src.total);
  for (const auto& [g, block] : f.blocks) {
    if (f.source.dim(g) == 0 || f.target.dim(g) == 0) continue;
    m.block(dst.offset(g), src.offset(g), block.rows(), block.cols()) = block;
  }
  return m;
}

}  // namespace centrekit
