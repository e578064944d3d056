#pragma once

#include <array>
#include <vector>

#include "fzd/matrix.hpp"

/// su(2) structure data: the skew-Hermitian basis E_j (i times the Pauli
/// matrices), irreducible representations labelled by highest weight,
/// Casimir images, superoperators on the vectorized matrix algebra, the
/// isotypic decomposition under the adjoint action, and the bi-invariant
/// length function on SU(2).

namespace fzd {

/// Input is not (close enough to) a lifted group element.
struct NotGroupElement : std::runtime_error {
    explicit NotGroupElement(const std::string& what) : std::runtime_error(what) {}
};

/// Casimir eigenvalue clusters could not be separated.
struct DegenerateSpectrum : std::runtime_error {
    explicit DegenerateSpectrum(const std::string& what) : std::runtime_error(what) {}
};

/// Input is not in SU(2) to tolerance (unitary with determinant 1).
struct NotSU2 : std::runtime_error {
    explicit NotSU2(const std::string& what) : std::runtime_error(what) {}
};

/// The three generators E_1 = [[0,i],[i,0]], E_2 = [[0,-1],[1,0]],
/// E_3 = [[i,0],[0,-i]], satisfying E_1 E_2 = E_3 cyclically, E_j^2 = -I,
/// and [E_1,E_2] = 2 E_3 cyclically.
struct LieBasis {
    std::array<Matrix, 3> E;
};

LieBasis su2_basis();

/// The invariant pairing <X,Y> = -trace(XY)/2; the E_j are orthonormal.
double lie_inner(const Matrix& x, const Matrix& y);

/// Irreducible representation with highest weight n on C^{n+1}. The
/// weight basis is ordered n, n-2, ..., -n, so the highest-weight
/// projector P is the (0,0) matrix unit.
struct Irrep {
    int n = 0;
    std::array<Matrix, 3> U;  ///< skew-Hermitian images of E_1, E_2, E_3
    Matrix H, E, F;           ///< ladder data: [H,E] = 2E, [H,F] = -2F, [E,F] = H
    Matrix P;                 ///< rank-1 projector onto the highest-weight line

    int dim() const { return n + 1; }
};

Irrep irrep(int n);

/// Sum of the squared generators; equals -n(n+2) times the identity.
Matrix casimir_image(const Irrep& rep);

/// Superoperators act on the vectorization of B^n = M_{n+1} with
/// vec(T)[r*(n+1)+c] = T[r][c], so vec(A T B) = (A (x) B^T) vec(T).
Matrix left_mult_op(const Matrix& a);
Matrix right_mult_op(const Matrix& b);

/// Derivation superoperator T -> [U_X, T] for X = sum_j x_j E_j.
Matrix derivation(const Irrep& rep, const std::array<double, 3>& x);

/// Decomposition g = exp(t X) with X a unit Lie element; t in [0, pi].
struct Su2Log {
    std::array<double, 3> axis;
    double t = 0.0;
};

/// Logarithm on SU(2). Throws NotSU2.
Su2Log su2_log(const Matrix& g);

/// Lift of g in SU(2) through the irrep: exp of the same Lie element
/// in the level-n generators. Throws NotGroupElement.
Matrix lift(const Irrep& rep, const Matrix& g);

/// Conjugation superoperator T -> U_g T U_g^{-1} for g in SU(2).
Matrix conjugation(const Irrep& rep, const Matrix& g);

/// Orthogonal projectors onto the spin-k isotypic components of B^n
/// under the adjoint action, k = 0..n; component k is the eigenspace of
/// the Casimir superoperator with eigenvalue -2k(2k+2) and dimension
/// 2k+1. Throws DegenerateSpectrum if the clusters cannot be separated.
std::vector<Matrix> isotypic_projectors(int n);

/// Bi-invariant length l(g) = arccos(Re trace(g)/2) in [0, pi].
double length_function(const Matrix& g);

}  // namespace fzd
