#include "centrekit/numerics.hpp"

#include <cmath>
#include <limits>

namespace centrekit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedParams: return "UnsupportedParams";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::SingularPairing: return "SingularPairing";
    case ErrorCode::MixedParity: return "MixedParity";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::BadFormat: return "BadFormat";
  }
  return "Unknown";
}

std::uint64_t Rng::next_u64() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  double u1 = uniform();
  double u2 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex Rng::gaussian_complex() {
  double re = gaussian();
  double im = gaussian();
  return Complex(re, im) / std::sqrt(2.0);
}

int Rng::uniform_int(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

Seed derive_seed(Seed master, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  for (int shift = 0; shift < 64; shift += 8) mix((master.value >> shift) & 0xff);
  for (char c : tag) mix(static_cast<unsigned char>(c));
  return Seed{h};
}

double max_abs(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return max_abs(a - b);
}

bool approx_eq(const CMatrix& a, const CMatrix& b, Tolerance tol) {
  return max_abs_diff(a, b) <= tol.eps;
}

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

CMatrix zero(int rows, int cols) { return CMatrix::Zero(rows, cols); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix switch_matrix(int dim_v, int dim_w) {
  CMatrix s = zero(dim_v * dim_w, dim_v * dim_w);
  for (int v = 0; v < dim_v; ++v)
    for (int w = 0; w < dim_w; ++w) s(w * dim_v + v, v * dim_w + w) = 1.0;
  return s;
}

CMatrix evaluation(int d) {
  CMatrix e = zero(1, d * d);
  for (int k = 0; k < d; ++k) e(0, k * d + k) = 1.0;
  return e;
}

CMatrix coevaluation(int d) {
  CMatrix c = zero(d * d, 1);
  for (int k = 0; k < d; ++k) c(k * d + k, 0) = 1.0;
  return c;
}

CMatrix evaluation_rev(int d) { return evaluation(d); }

CMatrix coevaluation_rev(int d) { return coevaluation(d); }

CMatrix apply_at(const std::vector<int>& slot_dims, int slot, const CMatrix& op) {
  int before = 1, after = 1;
  for (int i = 0; i < slot; ++i) before *= slot_dims[i];
  for (int i = slot + 1; i < static_cast<int>(slot_dims.size()); ++i) after *= slot_dims[i];
  return kron(kron(identity(before), op), identity(after));
}

IdempotentSplitting split_idempotent(const CMatrix& p, Tolerance tol) {
  if (p.rows() != p.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "idempotent must be square");
  }
  const int n = static_cast<int>(p.rows());
  if (n == 0) return IdempotentSplitting{0, zero(0, 0), zero(0, 0)};
  if (max_abs_diff(p * p, p) > tol.eps) {
    throw Error(ErrorCode::NotIdempotent, "p*p differs from p beyond tolerance");
  }
  const int trace_rank = static_cast<int>(std::llround(p.trace().real()));
  if (trace_rank < 0 || trace_rank > n) {
    throw Error(ErrorCode::RankMismatch, "trace outside [0, n]");
  }

  IdempotentSplitting out;
  const bool hermitian = max_abs_diff(p, p.adjoint()) <= tol.eps;
  if (hermitian) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(CMatrix(0.5 * (p + p.adjoint())));
    int r = 0;
    for (int i = 0; i < n; ++i) {
      const double lam = es.eigenvalues()(i);
      if (std::abs(lam) > 0.5 + tol.eps && std::abs(lam - 1.0) > tol.eps) {
        throw Error(ErrorCode::RankMismatch, "eigenvalue not clustered near {0,1}");
      }
      if (lam > 0.5) ++r;
    }
    if (r != trace_rank) {
      throw Error(ErrorCode::RankMismatch, "eigenvalue count disagrees with trace");
    }
    // ascending eigenvalues: image vectors are the last r columns
    out.rank = r;
    out.incl = es.eigenvectors().rightCols(r);
    out.proj = out.incl.adjoint();
  } else {
    Eigen::JacobiSVD<CMatrix> svd(p, Eigen::ComputeThinU);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > 0.5) ++r;
    }
    if (r != trace_rank) {
      throw Error(ErrorCode::RankMismatch, "singular value count disagrees with trace");
    }
    out.rank = r;
    out.incl = svd.matrixU().leftCols(r);
    out.proj = out.incl.adjoint() * p;
  }
  return out;
}

IdempotentSplitting split_idempotent_canonical(const CMatrix& p, Tolerance tol) {
  if (p.rows() != p.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "idempotent must be square");
  }
  const int n = static_cast<int>(p.rows());
  if (n == 0) return IdempotentSplitting{0, zero(0, 0), zero(0, 0)};
  if (max_abs_diff(p * p, p) > tol.eps) {
    throw Error(ErrorCode::NotIdempotent, "p*p differs from p beyond tolerance");
  }
  const int trace_rank = static_cast<int>(std::llround(p.trace().real()));
  std::vector<CVector> basis;
  for (int j = 0; j < n && static_cast<int>(basis.size()) < trace_rank; ++j) {
    CVector col = p.col(j);
    for (const auto& b : basis) col -= b.dot(col) * b;
    // second pass for numerical orthogonality
    for (const auto& b : basis) col -= b.dot(col) * b;
    const double norm = col.norm();
    if (norm > 1e-6) basis.push_back(col / norm);
  }
  if (static_cast<int>(basis.size()) != trace_rank) {
    throw Error(ErrorCode::RankMismatch, "column span disagrees with trace");
  }
  IdempotentSplitting out;
  out.rank = trace_rank;
  out.incl = zero(n, trace_rank);
  for (int k = 0; k < trace_rank; ++k) out.incl.col(k) = basis[k];
  out.proj = out.incl.adjoint() * p;
  return out;
}

CMatrix random_matrix(int rows, int cols, Rng& rng) {
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian_complex();
  return m;
}

CMatrix random_hermitian(int n, Rng& rng) {
  CMatrix m = random_matrix(n, n, rng);
  return 0.5 * (m + m.adjoint());
}

CMatrix random_unitary(int n, Rng& rng) {
  CMatrix m = random_matrix(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(m);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix column phases so the result is Haar-distributed and unique
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMatrix random_unitary(int n, Seed seed) {
  Rng rng(seed);
  return random_unitary(n, rng);
}

CMatrix polar_unitary(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace centrekit
