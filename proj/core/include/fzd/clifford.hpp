#pragma once

#include <vector>

#include "fzd/matrix.hpp"

/// Complex Clifford algebra machinery: spinor representations whose
/// generators are skew-Hermitian square roots of -1, the chirality
/// element, the norm of Clifford-coefficient tuples, and charge
/// conjugation for the three-dimensional case.

namespace fzd {

/// Irreducible spinor representation of Cl(R^m) on dimension
/// 2^floor(m/2). The generators satisfy
/// kappa_j kappa_k + kappa_k kappa_j = -2 delta_jk I, each kappa_j is
/// skew-Hermitian with kappa_j^2 = -I. For odd m the product
/// kappa_1 ... kappa_m is a scalar and `sign` selects which of the two
/// inequivalent representations is realized; the chirality element is
/// then represented by sign * I.
struct CliffordRep {
    int m = 0;
    int sign = +1;
    std::vector<Matrix> gammas;
    Matrix chirality;

    int spinor_dim() const { return gammas.empty() ? 0 : gammas[0].rows(); }
};

/// Builds the generators by the standard 2x2 tensor-block recursion.
/// For m = 3 the generators are placed in the gauge kappa_j = -sign * E_j
/// (the su(2) basis matrices), where the level identities downstream
/// hold exactly.
CliffordRep clifford_gammas(int m, int sign);

/// gamma = zeta * kappa_1 ... kappa_m with zeta a fourth root of unity
/// chosen (by direct search in the order 1, i, -1, -i) so that
/// gamma^2 = I and gamma = gamma^*. For representations built with odd
/// m the result is sign * I.
Matrix chirality(const CliffordRep& rep);

/// Norm of sum_j a_j (x) kappa_j over m = coeffs.size() generators.
/// For odd m the value does not depend on the representation choice;
/// it is computed in the sign = -1 representation.
double clifford_norm(const std::vector<Matrix>& coeffs);

/// Antilinear operator v -> matrix * conj(v). `matrix` is expected to
/// be unitary.
struct AntilinearMap {
    Matrix matrix;

    /// Composition with another antilinear map; the result is linear.
    Matrix compose(const AntilinearMap& o) const;
    /// The linear map C X C^{-1} for linear X.
    Matrix conjugate_linear(const Matrix& x) const;
};

/// Charge conjugation C_S on the spinor space for m = 3:
/// v -> sigma_2 * conj(v). Squares to -I, respects the inner product,
/// and fixes each kappa_j under conjugation.
AntilinearMap charge_conj_3d();

}  // namespace fzd
