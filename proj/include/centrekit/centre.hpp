#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "centrekit/bundle.hpp"
#include "centrekit/repr.hpp"

namespace centrekit {

/// Everything the ring sums need: the group, the central involution (0 for
/// the plain model), and a canonically ordered complete list of simples with
/// their parities. D = sum of squared dimensions = |G|.
struct SymContext {
  GroupPtr group;
  int omega = 0;
  Tolerance tol;
  Seed seed;
  std::vector<Irrep> simples;
  std::vector<int> parities;
  double global_dim = 0.0;

  bool is_super() const { return omega != FiniteGroup::kIdentity; }
};

SymContext make_context(GroupPtr group, int omega = 0, Seed seed = {}, Tolerance tol = {});

/// A homogeneous probe object of the base symmetric category. The parity is
/// ignored in the plain model.
struct ProbeRep {
  Rep rep;
  int parity = 0;
};

ProbeRep probe_of_simple(const SymContext& ctx, int index);
ProbeRep probe_dual(const ProbeRep& probe);

/// An object of the centre presented by its underlying representation
/// together with a half-braiding sampler c (x) X -> X (x) c for homogeneous
/// probes. Bundles, the symmetric unit and split tensor products all fit.
struct CentreObject {
  Rep underlying;
  std::function<CMatrix(const ProbeRep&)> half_braiding;

  int dim() const { return underlying.dim(); }
  CMatrix grading_operator(int omega) const { return underlying.at(omega); }
};

CentreObject bundle_centre_object(const SymContext& ctx, const EquivariantBundle& v);

/// Half-braiding at an arbitrary (possibly inhomogeneous) representation,
/// assembled by decomposing the probe into parity-homogeneous parts.
CMatrix half_braiding_at(const SymContext& ctx, const CentreObject& x, const Rep& probe);

/// The super-symmetry crossing c (x) X -> X (x) c of the base category
/// (plain switch when either side is even): switch o (id_c (x) G_X^{|c|}).
CMatrix base_symmetry(const SymContext& ctx, const ProbeRep& c, const CentreObject& x);

// ---------------------------------------------------------------------------
// The ring idempotent Pi
// ---------------------------------------------------------------------------

/// Pi_{x,y} on Phi(x) (x) Phi(y), assembled from the half-braiding crossings
/// of the ring with both strands, weighted d_i / D over all simples. With
/// `swapped` the over/under pattern of the two braiding passes is exchanged.
CMatrix ring_idempotent(const SymContext& ctx, const CentreObject& x, const CentreObject& y,
                        bool swapped = false);

/// Bundle specialisation of the ring, on Phi(V (x)_c W) in convolution order,
/// assembled summand-by-summand as literal coev / braid / ev composites.
CMatrix pi_categorical(const SymContext& ctx, const EquivariantBundle& v,
                       const EquivariantBundle& w, bool swapped = false);

/// The delta projector of the closed form: identity on V_{g1} (x) W_{g2}
/// parity components with g2^-1 g1 = omega^{p+q}, zero otherwise.
CMatrix pi_closed_form(const SymContext& ctx, const EquivariantBundle& v,
                       const EquivariantBundle& w);

/// Permutation Phi(V) (x) Phi(W) -> Phi(V (x)_c W) between the kron ordering
/// and the convolution-fibre ordering.
CMatrix conv_from_kron(const EquivariantBundle& v, const EquivariantBundle& w);

// ---------------------------------------------------------------------------
// Splitting Pi over bundles: the symmetric tensor product
// ---------------------------------------------------------------------------

struct PiSplitting {
  EquivariantBundle source;  // V (x)_c W
  CMatrix pi;                // on Phi(source), convolution order
  CMatrix incl;              // N x r, canonical columns ordered by (grading, parity piece)
  CMatrix proj;              // r x N
  int rank = 0;
  std::vector<int> grading;  // group element per split basis vector
};

PiSplitting split_pi_bundle(const SymContext& ctx, const EquivariantBundle& v,
                            const EquivariantBundle& w);

struct SymmetricProduct {
  EquivariantBundle bundle;
  PiSplitting splitting;
};

/// Split Pi, read the G-grading off the half-braiding, and return the result
/// as a bundle. Asserts that the outcome coincides with the fibrewise
/// (super-)tensor product, blockwise.
SymmetricProduct symmetric_tensor(const SymContext& ctx, const EquivariantBundle& v,
                                  const EquivariantBundle& w);

/// The half-braiding of V (x)_s W sampled at a probe, via either resolution:
/// 1 braids the probe through V and passes W by the base symmetry, 2 the
/// other way around. Both agree on the split subobject.
CMatrix symmetric_half_braiding(const SymContext& ctx, const EquivariantBundle& v,
                                const EquivariantBundle& w, const PiSplitting& splitting,
                                const ProbeRep& c, int resolution = 1);

/// The two crossing composites c (x) X (x) Y -> X (x) Y (x) c used above,
/// before sandwiching between proj and incl.
CMatrix crossing_resolution(const SymContext& ctx, const CentreObject& x, const CentreObject& y,
                            const ProbeRep& c, int resolution);

// ---------------------------------------------------------------------------
// Tensor products of general centre objects
// ---------------------------------------------------------------------------

struct CentreProduct {
  CentreObject object;
  CMatrix pi;    // on Phi(x) (x) Phi(y), kron order
  CMatrix incl;  // (Nx Ny) x r
  CMatrix proj;
  int rank = 0;
};

CentreProduct centre_tensor(const SymContext& ctx, const CentreObject& x, const CentreObject& y);

/// f (x)_s g = proj' o (f (x) g) o incl for morphisms between split products.
CMatrix tensor_morphism_matrix(const CMatrix& f, const CMatrix& g, const CentreProduct& source,
                               const CentreProduct& target);

/// Bundle version; f, g are Phi-level matrices and the splittings live in
/// convolution order.
CMatrix tensor_morphism(const SymContext& ctx, const BundleMorphism& f, const BundleMorphism& g,
                        const PiSplitting& source, const PiSplitting& target);

/// proj_{y,x} o s o incl_{x,y} with s the base symmetry on underlying spaces.
CMatrix symmetry_iso(const SymContext& ctx, const CentreObject& x, const CentreObject& y,
                     const CentreProduct& xy, const CentreProduct& yx);

/// An iterated product together with its total inclusion into (and
/// projection from) the ambient space Phi(u) (x) Phi(v) (x) Phi(w).
struct TripleProduct {
  CentreProduct inner;  // u (x)_s v when left-bracketed, v (x)_s w otherwise
  CentreProduct outer;
  CMatrix total_incl;
  CMatrix total_proj;
  /// The composite idempotent on the ambient space whose image is the
  /// triple product; equal for both bracketings and to the two-ring form.
  CMatrix total_idempotent() const { return total_incl * total_proj; }
};

TripleProduct triple_product_left(const SymContext& ctx, const CentreObject& u,
                                  const CentreObject& v, const CentreObject& w);
TripleProduct triple_product_right(const SymContext& ctx, const CentreObject& u,
                                   const CentreObject& v, const CentreObject& w);

/// The associator transport (U (x)_s V) (x)_s W -> U (x)_s (V (x)_s W):
/// total projection of the right bracketing after total inclusion of the
/// left one. Its inverse is the reverse transport.
CMatrix associator_iso(const SymContext& ctx, const TripleProduct& left,
                       const TripleProduct& right);

/// Bundle version on convolution-order splittings.
CMatrix symmetry_iso_bundle(const SymContext& ctx, const EquivariantBundle& v,
                            const EquivariantBundle& w, const PiSplitting& vw,
                            const PiSplitting& wv);

// ---------------------------------------------------------------------------
// The symmetric unit
// ---------------------------------------------------------------------------

struct UnitObject {
  CentreObject object;
  std::vector<int> block_offset;  // per simple i: offset of the i (x) i* block
  CMatrix collapse;               // Phi(I_s) -> C, evaluation on each block
  CMatrix expand;                 // C -> Phi(I_s), sum_i (d_i / D) coev_i
};

/// I_s = sum_i i (x) i* with the half-braiding built from the intertwiner
/// bases B(a i, j), their transposes and the bent duals phi*.
UnitObject unit_object(const SymContext& ctx);

/// Dressed evaluation Phi(I_s) (x) Phi(b) -> Phi(b) (left) or its mirror:
/// each unit pair is closed by the evaluation after its inner strand passes
/// the b strand and back.
CMatrix unit_cap(const SymContext& ctx, const UnitObject& unit, const CentreObject& b, bool left);

/// Dressed coevaluation Phi(b) -> Phi(I_s) (x) Phi(b) (left) or its mirror,
/// with the opposite crossing pattern and weights d_j / D.
CMatrix unit_cup(const SymContext& ctx, const UnitObject& unit, const CentreObject& b, bool left);

/// Unitor for I_s (x)_s b (left = true) or b (x)_s I_s: the forward map is
/// the dressed evaluation after including, the inverse the dressed
/// coevaluation before projecting.
CMatrix unitor(const SymContext& ctx, const UnitObject& unit, const CentreObject& b,
               const CentreProduct& product, bool left, bool forward);

/// The grading projectors S_g recovered from the half-braiding at the
/// regular representation: S_g is the projection of Phi(X) onto the part
/// sitting over g. Row k, column l of the returned list entry g.
std::vector<CMatrix> grading_projectors(const SymContext& ctx, const CentreObject& x);

/// Reassemble a centre object into an equivariant bundle through its grading
/// projectors (canonical bases per fibre). Fails if the projectors do not
/// decompose the identity.
EquivariantBundle bundle_from_centre_object(const SymContext& ctx, const CentreObject& x);

// ---------------------------------------------------------------------------
// Named diagram identities (cloaking, snapping)
// ---------------------------------------------------------------------------

/// The two sides of the cloaking move: a homogeneous probe passes the ringed
/// pair b, c either left (crossing b by the half-braiding, c by the base
/// symmetry, after the ring) or right (the mirrored crossings, before the
/// ring). Both are maps a (x) B (x) C -> B (x) C (x) a.
CMatrix cloaking_side(const SymContext& ctx, const ProbeRep& a, const CentreObject& b,
                      const CentreObject& c, bool left);

/// The two sides of snapping: the ring around the unit strand and a probe
/// object equals the strand cut by a dressed evaluation and re-created by a
/// dressed coevaluation. Both act on Phi(I_s) (x) Phi(c).
CMatrix snapping_lhs(const SymContext& ctx, const UnitObject& unit, const CentreObject& c);
CMatrix snapping_rhs(const SymContext& ctx, const UnitObject& unit, const CentreObject& c);

}  // namespace centrekit
