#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fzd/clifford.hpp"
#include "fzd/matrix.hpp"
#include "fzd/su2.hpp"

/// The Dirac operator on B^n (x) S for the level-n matrix algebra:
/// construction, certified spectrum, the commutator / derivation /
/// translation seminorms, and the algebraic identity suite (Casimir
/// form, square, equivariance, real structure).

namespace fzd {

/// A computed eigenvalue deviates from the predicted table beyond
/// tolerance.
struct SpectrumMismatch : std::runtime_error {
    explicit SpectrumMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// D = sum_j deriv_j (x) kappa_j acting on B^n (x) S, with the
/// vectorization index ((row * (n+1)) + col) * 2 + spinor. The two
/// spinor choices give D(-sign) = -D(sign).
struct DiracOp {
    int n = 0;
    int sign = +1;
    Matrix matrix;
    Irrep rep;
    CliffordRep cliff;

    int dim() const { return 2 * (n + 1) * (n + 1); }
};

DiracOp build_dirac(int n, int sign);

/// One predicted eigenvalue of the shifted operator together with the
/// deviation of its observed cluster.
struct SpectrumCluster {
    double predicted = 0.0;
    int multiplicity = 0;
    double max_deviation = 0.0;
};

/// Eigenvalues of the orientation-corrected shift sign * D + 2, which
/// are {+-2k with multiplicity 2k, 1 <= k <= n} together with {2(n+1)
/// with multiplicity 2(n+1)}.
struct SpectrumReport {
    int n = 0;
    int sign = +1;
    std::vector<double> shifted_eigenvalues;  ///< ascending
    std::vector<SpectrumCluster> clusters;    ///< ascending by predicted value
    double max_deviation = 0.0;

    int total_multiplicity() const;
};

/// Closed-form shifted spectrum as (value, multiplicity), ascending.
std::vector<std::pair<double, int>> predicted_shifted_spectrum(int n);

/// Diagonalizes the shifted operator and matches it against the
/// closed-form table. Throws SpectrumMismatch beyond `tol`.
SpectrumReport spectrum(const DiracOp& d, double tol = 1e-9);

/// L^D(a) = ||[D, M_a]|| with M_a left multiplication by a on
/// B^n (x) S.
double lip_seminorm(const DiracOp& d, const Matrix& a);
/// Convenience overload that builds the sign = +1 operator.
double lip_seminorm(int n, const Matrix& a);

/// Estimate of L_d(a) = sup over unit Lie directions X of ||[U_X, a]||:
/// golden-spiral directional grid plus local pattern-search refinement.
/// Deterministic, and never above the true supremum.
double ld_seminorm(const Irrep& rep, const Matrix& a);
double ld_seminorm(int n, const Matrix& a);

/// Lower bound of L_l(a) = sup over group elements of
/// ||alpha_g(a) - a|| / l(g): sampled directions, geometric ladder of
/// step lengths down to 1e-4. Grows monotonically with `samples`.
double lell_estimate(int n, const Matrix& a, int samples);

/// Residuals of the Casimir realization of D. `residual` is the worst
/// case over both spinor signs of || D - s * (1/2)(big Casimir
/// - level Casimir - spinor Casimir) || minimized over s in {+1, -1};
/// `s_for_sign` records the minimizing s per spinor sign, and
/// `pair_expansion_residual` checks the cross-term expansion
/// (big - level - spinor) = 2 sum_j deriv_j (x) E_j.
struct CasimirIdentity {
    double residual = 0.0;
    double pair_expansion_residual = 0.0;
    int s_for_sign_plus = 0;
    int s_for_sign_minus = 0;
};

CasimirIdentity check_casimir_identity(int n);

/// || D^2 - (-Casimir (x) I + sum_{j<k} deriv_{[E_j, E_k]} (x)
/// kappa_j kappa_k) || in the Frobenius norm.
double check_square(int n);

/// Max over random group elements g of || S_g D S_g^H - D || with
/// S_g = conjugation (x) defining representation.
double check_equivariance(int n, int trials, std::uint64_t seed = 0);

/// Real-structure residuals. C(a (x) psi) = a^* (x) sigma_2 conj(psi)
/// is realized as v -> M_C conj(v); all norms are Frobenius.
/// `zeroth_residual`: max over matrix-unit pairs (a, b) of
/// ||[M_a, C M_{b*} C^{-1}]||. `first_residual`: same for
/// [[D, M_a], C M_{b*} C^{-1}]. `conjugated_right_mult_residual`:
/// deviation of C M_{b*} C^{-1} from right multiplication by b, the
/// structural identity behind the first two. `cd_sign`, `cd_residual`:
/// the sign s and residual of C D = s D C.
struct FirstOrderReport {
    double zeroth_residual = 0.0;
    double first_residual = 0.0;
    double conjugated_right_mult_residual = 0.0;
    double cd_residual = 0.0;
    int cd_sign = 0;
};

FirstOrderReport check_first_order(int n);

}  // namespace fzd
