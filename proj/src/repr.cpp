#include "centrekit/repr.hpp"

#include <algorithm>
#include <cmath>

namespace centrekit {

Rep trivial_rep(const FiniteGroup& g) {
  Rep rep;
  rep.mats.assign(g.order(), identity(1));
  return rep;
}

Rep regular_representation(const FiniteGroup& g) {
  const int n = g.order();
  Rep rep;
  rep.mats.reserve(n);
  for (int x = 0; x < n; ++x) {
    CMatrix m = zero(n, n);
    for (int h = 0; h < n; ++h) m(g.mul(x, h), h) = 1.0;
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

Rep rep_tensor(const Rep& a, const Rep& b) {
  Rep rep;
  rep.mats.reserve(a.mats.size());
  for (std::size_t g = 0; g < a.mats.size(); ++g) rep.mats.push_back(kron(a.mats[g], b.mats[g]));
  return rep;
}

Rep rep_dual(const Rep& a) {
  Rep rep;
  rep.mats.reserve(a.mats.size());
  for (const auto& m : a.mats) rep.mats.push_back(m.conjugate());
  return rep;
}

Rep rep_direct_sum(const Rep& a, const Rep& b) {
  Rep rep;
  rep.mats.reserve(a.mats.size());
  for (std::size_t g = 0; g < a.mats.size(); ++g) {
    CMatrix m = zero(a.dim() + b.dim(), a.dim() + b.dim());
    m.topLeftCorner(a.dim(), a.dim()) = a.mats[g];
    m.bottomRightCorner(b.dim(), b.dim()) = b.mats[g];
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

bool is_representation(const FiniteGroup& g, const Rep& rep, Tolerance tol) {
  const int n = g.order();
  if (static_cast<int>(rep.mats.size()) != n) return false;
  if (max_abs_diff(rep.at(FiniteGroup::kIdentity), identity(rep.dim())) > tol.eps) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (max_abs_diff(rep.at(a) * rep.at(b), rep.at(g.mul(a, b))) > tol.eps) return false;
  return true;
}

int parity_sign(const Irrep& irrep, int omega, Tolerance tol) {
  if (omega == FiniteGroup::kIdentity) return 0;
  const CMatrix& m = irrep.rep.at(omega);
  if (max_abs_diff(m, identity(irrep.dim)) <= tol.eps) return 0;
  if (max_abs_diff(m, CMatrix(-identity(irrep.dim))) <= tol.eps) return 1;
  throw Error(ErrorCode::MixedParity, "rho(omega) is not +-I on an irreducible");
}

namespace {

Rep restrict_rep(const Rep& rep, const CMatrix& basis) {
  Rep out;
  out.mats.reserve(rep.mats.size());
  for (const auto& m : rep.mats) out.mats.push_back(basis.adjoint() * m * basis);
  return out;
}

double self_inner_product(const FiniteGroup& g, const Rep& rep) {
  double acc = 0.0;
  for (int x = 0; x < g.order(); ++x) acc += std::norm(rep.at(x).trace());
  return acc / g.order();
}

// Invariant subspaces of an equivariant Hermitian operator, as orthonormal
// column blocks grouped by eigenvalue cluster.
std::vector<CMatrix> eigenspace_blocks(const CMatrix& t, double gap) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(t);
  const auto& vals = es.eigenvalues();
  std::vector<CMatrix> blocks;
  int start = 0;
  for (int i = 1; i <= vals.size(); ++i) {
    if (i == vals.size() || vals(i) - vals(i - 1) > gap) {
      blocks.push_back(es.eigenvectors().middleCols(start, i - start));
      start = i;
    }
  }
  return blocks;
}

std::vector<Complex> snap_character(const std::vector<Complex>& chi) {
  std::vector<Complex> out(chi.size());
  const double grid = 1e-6;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    out[i] = Complex(std::round(chi[i].real() / grid) * grid,
                     std::round(chi[i].imag() / grid) * grid);
  }
  return out;
}

bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<Complex> rep_character_by_class(const FiniteGroup& g, const Rep& rep) {
  std::vector<Complex> chi;
  chi.reserve(g.conjugacy_classes().size());
  for (int r : g.class_representatives()) chi.push_back(rep.at(r).trace());
  return chi;
}

Complex character_inner_product(const FiniteGroup& g, const std::vector<Complex>& a,
                                const std::vector<Complex>& b) {
  Complex acc = 0.0;
  const auto sizes = g.class_sizes();
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    acc += static_cast<double>(sizes[c]) * a[c] * std::conj(b[c]);
  }
  return acc / static_cast<double>(g.order());
}

std::vector<Irrep> irreps(const FiniteGroup& g, Seed seed, Tolerance tol) {
  const int n = g.order();
  const Rep reg = regular_representation(g);
  Rng rng(derive_seed(seed, "irreps"));

  struct Pending {
    CMatrix basis;  // n x m orthonormal, invariant
    int attempts = 0;
  };
  std::vector<Pending> pending{{identity(n), 0}};
  std::vector<Rep> found;

  while (!pending.empty()) {
    Pending cur = std::move(pending.back());
    pending.pop_back();
    Rep sub = restrict_rep(reg, cur.basis);
    const double norm2 = self_inner_product(g, sub);
    if (std::abs(norm2 - 1.0) < 0.1) {
      found.push_back(std::move(sub));
      continue;
    }
    if (cur.attempts >= 8) {
      throw Error(ErrorCode::DecompositionFailed, "invariant subspace refuses to split");
    }
    const int m = static_cast<int>(cur.basis.cols());
    CMatrix h = random_hermitian(m, rng);
    CMatrix t = zero(m, m);
    for (int x = 0; x < n; ++x) t += sub.at(x) * h * sub.at(x).adjoint();
    t = CMatrix(0.5 * (t + t.adjoint()) / static_cast<double>(n));
    auto blocks = eigenspace_blocks(t, 1e-6);
    if (blocks.size() == 1) {
      pending.push_back({cur.basis, cur.attempts + 1});
      continue;
    }
    for (const auto& b : blocks) pending.push_back({CMatrix(cur.basis * b), 0});
  }

  // deduplicate isomorphism classes by character
  std::vector<Irrep> result;
  for (auto& rep : found) {
    auto chi = rep_character_by_class(g, rep);
    bool known = false;
    for (const auto& have : result) {
      double diff = 0.0;
      for (std::size_t c = 0; c < chi.size(); ++c) {
        diff = std::max(diff, std::abs(chi[c] - have.character[c]));
      }
      if (diff < 1e-4) {
        known = true;
        break;
      }
    }
    if (known) continue;
    Irrep irr;
    irr.dim = rep.dim();
    irr.rep = std::move(rep);
    for (auto& m : irr.rep.mats) m = polar_unitary(m);
    irr.character = rep_character_by_class(g, irr.rep);
    result.push_back(std::move(irr));
  }

  long long dim_sum = 0;
  for (const auto& irr : result) dim_sum += static_cast<long long>(irr.dim) * irr.dim;
  if (dim_sum != n || result.size() != g.conjugacy_classes().size()) {
    throw Error(ErrorCode::DecompositionFailed, "irreducible list is incomplete");
  }

  // canonical order: dimension, then characters on classes sorted by
  // (class size, minimal element)
  std::vector<int> class_order(g.conjugacy_classes().size());
  for (std::size_t i = 0; i < class_order.size(); ++i) class_order[i] = static_cast<int>(i);
  const auto sizes = g.class_sizes();
  const auto reps = g.class_representatives();
  std::sort(class_order.begin(), class_order.end(), [&](int a, int b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return reps[a] < reps[b];
  });
  std::sort(result.begin(), result.end(), [&](const Irrep& a, const Irrep& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    auto ca = snap_character(a.character);
    auto cb = snap_character(b.character);
    for (int c : class_order) {
      if (ca[c] != cb[c]) return complex_less(ca[c], cb[c]);
    }
    return false;
  });
  (void)tol;
  return result;
}

CharacterTable character_table(const FiniteGroup& g, int omega, Seed seed, Tolerance tol) {
  CharacterTable table;
  table.group_order = g.order();
  table.class_representatives = g.class_representatives();
  table.class_sizes = g.class_sizes();
  auto simples = irreps(g, seed, tol);
  double d2 = 0.0;
  for (const auto& irr : simples) {
    CharacterTable::Row row;
    row.dim = irr.dim;
    row.parity = parity_sign(irr, omega, tol);
    row.values = irr.character;
    table.rows.push_back(std::move(row));
    d2 += static_cast<double>(irr.dim) * irr.dim;
  }
  table.global_dimension = d2;
  return table;
}

double global_dimension(const CharacterTable& table) { return table.global_dimension; }

Complex twist_scalar(const FiniteGroup& g, int omega, const Irrep& irrep, Tolerance tol) {
  const int d = irrep.dim;
  CMatrix c = switch_matrix(d, d);
  if (omega != FiniteGroup::kIdentity && parity_sign(irrep, omega, tol) == 1) c = -c;
  (void)g;
  return c.trace() / static_cast<double>(d);
}

std::vector<CMatrix> hom_basis(const FiniteGroup& g, const Rep& source, const Rep& target,
                               Tolerance tol) {
  const int ds = source.dim();
  const int dt = target.dim();
  if (ds == 0 || dt == 0) return {};
  CMatrix proj = zero(ds * dt, ds * dt);
  for (int x = 0; x < g.order(); ++x) {
    proj += kron(source.at(x).conjugate(), target.at(x));
  }
  proj /= static_cast<double>(g.order());
  auto split = split_idempotent(proj, tol);
  std::vector<CMatrix> basis;
  basis.reserve(split.rank);
  for (int k = 0; k < split.rank; ++k) {
    // column-major unvec of a dt x ds matrix
    CMatrix t(dt, ds);
    for (int j = 0; j < ds; ++j)
      for (int i = 0; i < dt; ++i) t(i, j) = split.incl(j * dt + i, k);
    basis.push_back(std::move(t));
  }
  return basis;
}

std::vector<CMatrix> dual_basis(const std::vector<CMatrix>& basis, Tolerance tol) {
  if (basis.empty()) return {};
  const int dk = static_cast<int>(basis[0].rows());
  const int m = static_cast<int>(basis.size());
  CMatrix gram(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) gram(a, b) = (basis[a] * basis[b].adjoint()).trace() / static_cast<double>(dk);
  Eigen::FullPivLU<CMatrix> lu(gram);
  lu.setThreshold(tol.eps);
  if (lu.rank() < m) throw Error(ErrorCode::SingularPairing, "composition pairing is singular");
  CMatrix inv = lu.inverse();
  std::vector<CMatrix> duals;
  duals.reserve(m);
  for (int b = 0; b < m; ++b) {
    CMatrix d = zero(basis[0].cols(), dk);
    for (int c = 0; c < m; ++c) d += basis[c].adjoint() * inv(c, b);
    duals.push_back(std::move(d));
  }
  return duals;
}

IntertwinerBasis intertwiner_basis(const FiniteGroup& g, const Rep& source, const Rep& target,
                                   Tolerance tol) {
  IntertwinerBasis out;
  out.source = source;
  out.target = target;
  out.basis = hom_basis(g, source, target, tol);
  if (!out.basis.empty()) out.dual = dual_basis(out.basis, tol);
  return out;
}

CMatrix dual_morphism_star(const CMatrix& phi_t, int dim_a, int dim_i, int dim_j) {
  if (phi_t.rows() != dim_a * dim_i || phi_t.cols() != dim_j) {
    throw Error(ErrorCode::ShapeMismatch, "phi_t must be (a i) x j");
  }
  // bend every leg of phi_t: j -> a (x) i  becomes  i* (x) a* -> j*
  CMatrix star = zero(dim_j, dim_i * dim_a);
  for (int gamma = 0; gamma < dim_j; ++gamma)
    for (int alpha = 0; alpha < dim_a; ++alpha)
      for (int beta = 0; beta < dim_i; ++beta)
        star(gamma, beta * dim_a + alpha) = phi_t(alpha * dim_i + beta, gamma);
  return star;
}

int fusion_coefficient(const FiniteGroup& g, const Irrep& i, const Irrep& j, const Irrep& k) {
  std::vector<Complex> prod(i.character.size());
  for (std::size_t c = 0; c < prod.size(); ++c) prod[c] = i.character[c] * j.character[c];
  const Complex n = character_inner_product(g, prod, k.character);
  const long long rounded = std::llround(n.real());
  if (std::abs(n - Complex(static_cast<double>(rounded), 0.0)) > 1e-6 || rounded < 0) {
    throw Error(ErrorCode::DecompositionFailed, "fusion coefficient is not a nonneg integer");
  }
  return static_cast<int>(rounded);
}

int trivial_irrep_index(const FiniteGroup& g, const std::vector<Irrep>& simples, Tolerance tol) {
  for (std::size_t idx = 0; idx < simples.size(); ++idx) {
    if (simples[idx].dim != 1) continue;
    bool all_one = true;
    for (const auto& v : simples[idx].character) {
      if (std::abs(v - Complex(1.0, 0.0)) > tol.eps) {
        all_one = false;
        break;
      }
    }
    if (all_one) return static_cast<int>(idx);
  }
  (void)g;
  throw Error(ErrorCode::DecompositionFailed, "trivial irrep missing");
}

}  // namespace centrekit
