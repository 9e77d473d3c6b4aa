#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace centrekit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Absolute entrywise tolerance used by every comparison in the toolkit.
struct Tolerance {
  double eps = 1e-8;
};

struct Seed {
  std::uint64_t value = 42;
};

enum class ErrorCode {
  NotIdempotent,
  RankMismatch,
  NotAssociative,
  NoIdentity,
  NoInverse,
  BadIndex,
  NotBijective,
  TooLarge,
  UnsupportedParams,
  DecompositionFailed,
  SingularPairing,
  MixedParity,
  GroupMismatch,
  ShapeMismatch,
  UnknownCheck,
  BadFormat,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Deterministic splitmix64-based generator. All randomness in the toolkit
/// flows through this so results are reproducible across platforms.
class Rng {
 public:
  explicit Rng(Seed seed) : state_(seed.value) {}

  std::uint64_t next_u64();
  double uniform();    // [0, 1)
  double gaussian();   // standard normal, Box-Muller
  Complex gaussian_complex();
  int uniform_int(int lo, int hi);  // inclusive bounds

 private:
  std::uint64_t state_;
};

/// Mix a textual tag into a master seed (FNV-1a). Used to give every check
/// and instance its own reproducible stream.
Seed derive_seed(Seed master, std::string_view tag);

double max_abs(const CMatrix& a);
/// Returns +inf when shapes differ.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_eq(const CMatrix& a, const CMatrix& b, Tolerance tol = {});

CMatrix identity(int n);
CMatrix zero(int rows, int cols);
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Switch map V ⊗ W -> W ⊗ V on coordinates (first factor indexes slower).
CMatrix switch_matrix(int dim_v, int dim_w);

// Duality maps for C^d with its standard dual basis.
CMatrix evaluation(int d);         // V* ⊗ V -> C
CMatrix coevaluation(int d);       // C -> V ⊗ V*
CMatrix evaluation_rev(int d);     // V ⊗ V* -> C
CMatrix coevaluation_rev(int d);   // C -> V* ⊗ V

/// kron(I_{before}, op, I_{after}) for an operator acting on one slot of a
/// tensor word; `op` may be rectangular and changes that slot's dimension.
CMatrix apply_at(const std::vector<int>& slot_dims, int slot, const CMatrix& op);

struct IdempotentSplitting {
  int rank = 0;
  CMatrix incl;  // n x r
  CMatrix proj;  // r x n
};

/// Factor an idempotent p as incl1proj with proj1incl = I_r. Hermitian
/// idempotents are split by eigendecomposition, general ones through the SVD
/// of p; the rank must match round(Re tr p) or RankMismatch is thrown.
IdempotentSplitting split_idempotent(const CMatrix& p, Tolerance tol = {});

/// Like split_idempotent but with a canonical image basis: Gram-Schmidt over
/// the columns of p in order. A diagonal 0/1 projector splits along standard
/// basis vectors exactly, which downstream bundle comparisons rely on.
IdempotentSplitting split_idempotent_canonical(const CMatrix& p, Tolerance tol = {});

CMatrix random_matrix(int rows, int cols, Rng& rng);
CMatrix random_hermitian(int n, Rng& rng);
CMatrix random_unitary(int n, Rng& rng);
CMatrix random_unitary(int n, Seed seed);

/// Nearest unitary in Frobenius norm (polar factor).
CMatrix polar_unitary(const CMatrix& m);

}  // namespace centrekit
