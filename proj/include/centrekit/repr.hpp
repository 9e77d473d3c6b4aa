#pragma once

#include <optional>
#include <vector>

#include "centrekit/group.hpp"
#include "centrekit/numerics.hpp"

namespace centrekit {

/// A finite-dimensional representation by one matrix per group element.
struct Rep {
  std::vector<CMatrix> mats;

  int dim() const { return mats.empty() ? 0 : static_cast<int>(mats[0].rows()); }
  const CMatrix& at(int g) const { return mats[g]; }
};

Rep trivial_rep(const FiniteGroup& g);
Rep regular_representation(const FiniteGroup& g);
Rep rep_tensor(const Rep& a, const Rep& b);
Rep rep_dual(const Rep& a);  // for unitary reps: entrywise conjugate
Rep rep_direct_sum(const Rep& a, const Rep& b);
bool is_representation(const FiniteGroup& g, const Rep& rep, Tolerance tol = {});

struct Irrep {
  int dim = 0;
  Rep rep;
  std::vector<Complex> character;  // indexed by conjugacy class
};

/// Parity of an irrep with respect to a central involution: 0 if rho(omega)
/// is +I, 1 if -I. omega = identity gives 0. Throws MixedParity otherwise.
int parity_sign(const Irrep& irrep, int omega, Tolerance tol = {});

/// Complete list of irreducibles, extracted numerically from the regular
/// representation and sorted canonically (dimension, then character values on
/// classes ordered by size and minimal element).
std::vector<Irrep> irreps(const FiniteGroup& g, Seed seed = {}, Tolerance tol = {});

struct CharacterTable {
  struct Row {
    int dim = 0;
    int parity = 0;  // 0 even, 1 odd; always 0 in the plain model
    std::vector<Complex> values;
  };
  std::vector<int> class_representatives;
  std::vector<int> class_sizes;
  std::vector<Row> rows;
  double global_dimension = 0.0;
  int group_order = 0;
};

CharacterTable character_table(const FiniteGroup& g, int omega = 0, Seed seed = {},
                               Tolerance tol = {});
double global_dimension(const CharacterTable& table);

/// theta_i from the trace of the model's symmetry on i (x) i: +1 always in the
/// plain model, (-1)^parity in the super model.
Complex twist_scalar(const FiniteGroup& g, int omega, const Irrep& irrep, Tolerance tol = {});

/// Orthonormal basis (Frobenius) of the intertwiner space Hom(source, target),
/// computed as the image of the averaging projector T -> 1/|G| sum rho_t T rho_s^-1.
std::vector<CMatrix> hom_basis(const FiniteGroup& g, const Rep& source, const Rep& target,
                               Tolerance tol = {});

/// Duals phi^t with phi o phi^t = id and psi o phi^t = 0, for a basis of maps
/// onto a simple target; Gram matrix of the composition pairing is inverted.
std::vector<CMatrix> dual_basis(const std::vector<CMatrix>& basis, Tolerance tol = {});

struct IntertwinerBasis {
  Rep source;
  Rep target;
  std::vector<CMatrix> basis;
  std::vector<CMatrix> dual;
};

IntertwinerBasis intertwiner_basis(const FiniteGroup& g, const Rep& source, const Rep& target,
                                   Tolerance tol = {});

/// phi*: i* (x) a* -> j* for phi: a (x) i -> j, the transpose phi^t with all
/// legs bent by the standard (co)evaluations of dual vector spaces.
CMatrix dual_morphism_star(const CMatrix& phi_t, int dim_a, int dim_i, int dim_j);

int fusion_coefficient(const FiniteGroup& g, const Irrep& i, const Irrep& j, const Irrep& k);

Complex character_inner_product(const FiniteGroup& g, const std::vector<Complex>& chi_by_class_a,
                                const std::vector<Complex>& chi_by_class_b);

std::vector<Complex> rep_character_by_class(const FiniteGroup& g, const Rep& rep);

/// Index of the trivial irrep in a canonical irrep list.
int trivial_irrep_index(const FiniteGroup& g, const std::vector<Irrep>& simples,
                        Tolerance tol = {});

}  // namespace centrekit
