#pragma once

#include <map>
#include <vector>

#include "centrekit/group.hpp"
#include "centrekit/repr.hpp"

namespace centrekit {

/// A G-equivariant vector bundle over G (with the conjugation action): one
/// fibre per supported element, plus action blocks rho_h: V_g -> V_{hgh^-1}
/// satisfying rho_{h'} rho_h = rho_{h'h}. Zero fibres are omitted.
struct EquivariantBundle {
  GroupPtr group;
  std::map<int, int> fibres;                       // g -> dim
  std::map<int, std::map<int, CMatrix>> action;    // h -> g -> block

  int dim(int g) const {
    auto it = fibres.find(g);
    return it == fibres.end() ? 0 : it->second;
  }
  const CMatrix& rho(int h, int g) const { return action.at(h).at(g); }
  int total_dim() const;
  std::vector<int> support() const;
  bool is_zero() const { return fibres.empty(); }

  void validate(Tolerance tol = {}) const;
};

struct BundleMorphism {
  EquivariantBundle source;
  EquivariantBundle target;
  std::map<int, CMatrix> blocks;  // g -> target_dim(g) x source_dim(g)

  void validate(Tolerance tol = {}) const;
};

enum class BundleParity { Even, Odd, Mixed };

/// Layout of Phi(V) = direct sum of fibres, elements ascending.
struct BundleLayout {
  std::vector<int> elements;
  std::vector<int> offsets;
  int total = 0;

  explicit BundleLayout(const EquivariantBundle& v);
  int offset(int g) const;
};

/// Layout of one convolution product: per fibre of V (x) W, the list of
/// summands V_{g1} (x) W_{g2} with g1 ascending, plus offsets into
/// Phi(V (x)_c W) (fibres ascending, summands in order).
struct ConvLayout {
  struct Summand {
    int fibre = 0;          // g1 g2
    int g1 = 0, g2 = 0;
    int dim1 = 0, dim2 = 0;
    int offset_in_fibre = 0;
    int offset_global = 0;
  };
  std::vector<Summand> summands;
  std::map<int, int> fibre_dims;
  std::map<int, int> fibre_offsets;
  int total = 0;

  ConvLayout(const EquivariantBundle& v, const EquivariantBundle& w);
};

EquivariantBundle unit_bundle(GroupPtr group);
/// The constant line bundle: C on every element, conjugation-trivial action.
EquivariantBundle constant_line_bundle(GroupPtr group);
EquivariantBundle direct_sum(const EquivariantBundle& v, const EquivariantBundle& w);

EquivariantBundle convolution_tensor(const EquivariantBundle& v, const EquivariantBundle& w);
EquivariantBundle fibrewise_tensor(const EquivariantBundle& v, const EquivariantBundle& w);
EquivariantBundle fibrewise_super_tensor(const SuperGroup& sg, const EquivariantBundle& v,
                                         const EquivariantBundle& w);

/// Braiding V (x)_c W -> W (x)_c V: switch o (id (x) rho^W_{g1}) on each
/// summand, landing in W_{g1 g2 g1^-1} (x) V_{g1}.
BundleMorphism braiding(const EquivariantBundle& v, const EquivariantBundle& w);

/// Phi: assemble the direct sum of fibres into a representation of G.
Rep forgetful(const EquivariantBundle& v);

/// A representation included as a bundle at [e] (plain / even) or at [omega]
/// (odd in the super model).
EquivariantBundle include_rep(const SuperGroup& sg, const Rep& rep, Tolerance tol = {});
EquivariantBundle include_rep_plain(GroupPtr group, const Rep& rep);

/// Simple bundle supported on class(x) induced from an irrep of the
/// centralizer of x, with minimal-index coset representatives.
EquivariantBundle simple_bundle(GroupPtr group, int x, const Irrep& pi);

/// Bundle supported on class(x) induced from any centralizer representation.
EquivariantBundle induced_bundle(GroupPtr group, int x, const Rep& centralizer_rep);

BundleParity parity_of(const SuperGroup& sg, const EquivariantBundle& v, Tolerance tol = {});

/// The fibrewise involution rho_omega(g): V_g -> V_g (omega central).
CMatrix omega_operator(const SuperGroup& sg, const EquivariantBundle& v, int g);

/// Orthonormal bases of the +-1 eigenspaces of rho_omega per fibre; used for
/// the canonical homogeneous decomposition. parity p in {0, 1}.
struct ParityBases {
  std::map<int, CMatrix> incl[2];  // g -> dim(g) x rank_p columns
  std::map<int, CMatrix> proj[2];  // g -> rank_p x dim(g) rows
  int rank(int p, int g) const;
};

ParityBases parity_bases(const SuperGroup& sg, const EquivariantBundle& v, Tolerance tol = {});

/// Homogeneous part of V for parity p, in the canonical eigenbasis.
EquivariantBundle homogeneous_part(const SuperGroup& sg, const EquivariantBundle& v,
                                   const ParityBases& bases, int p);

int bundle_endomorphism_dimension(const EquivariantBundle& v, Tolerance tol = {});

/// Random test bundle: fibre dims <= 2 over <= max_classes supported classes,
/// induced from random unitary conjugates of centralizer irreps.
EquivariantBundle random_bundle(GroupPtr group, Rng& rng, int max_classes = 3);
/// Same, but rho_omega = +-1 uniformly (homogeneous in the super model).
EquivariantBundle random_homogeneous_bundle(const SuperGroup& sg, Rng& rng, int parity,
                                            int max_classes = 3);

BundleMorphism random_endomorphism(const EquivariantBundle& v, Rng& rng);
BundleMorphism identity_morphism(const EquivariantBundle& v);
BundleMorphism compose(const BundleMorphism& second, const BundleMorphism& first);

/// Phi(f): the morphism assembled as a matrix on the forgetful layouts.
CMatrix forgetful_morphism(const BundleMorphism& f);

void require_same_group(const EquivariantBundle& v, const EquivariantBundle& w);

}  // namespace centrekit
