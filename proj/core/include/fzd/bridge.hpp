#pragma once

#include <cstdint>
#include <vector>

#include "fzd/dirac.hpp"
#include "fzd/matrix.hpp"
#include "fzd/sphere.hpp"
#include "fzd/su2.hpp"

/// Convergence machinery joining the level-m matrix algebra to the
/// band-limited sphere model: contravariant symbols, the Berezin
/// transform with its sector eigenvalues, the pivot bridge norm, reach
/// and height estimators, the linking operator, and tunnel maps.

namespace fzd {

/// The quadrature grid cannot integrate the requested product exactly.
struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// The Berezin transform failed to act as a scalar on an isotypic
/// sector (or to commute with the sampled conjugations).
struct SectorNotScalar : std::runtime_error {
    explicit SectorNotScalar(const std::string& what) : std::runtime_error(what) {}
};

/// The pivot of a linking operator violates its norm or spectrum
/// conditions, or the blocks do not fit together.
struct BadPivot : std::runtime_error {
    explicit BadPivot(const std::string& what) : std::runtime_error(what) {}
};

/// The band-limited model is too small to contain the image of the
/// level being tunneled.
struct BandTooSmall : std::runtime_error {
    explicit BandTooSmall(const std::string& what) : std::runtime_error(what) {}
};

/// Pivot data for one level: the coherent family alpha_x(P) is
/// realized lazily through coherent states; the grid integrates every
/// product of symbols up to degree 2 m + work_level exactly.
struct Bridge {
    int m = 0;
    int work_level = 0;  ///< band limit of the A-side model
    QuadratureGrid grid;
};

/// Negative work_level selects the default m + 4.
Bridge make_bridge(int m, int work_level = -1);

/// sigma^B(f) = (m+1) sum_x w_x f(x) alpha_x(P): unital, Hermitian-
/// and positivity-preserving. Throws DegreeOverflow when the grid
/// degree is below f.level + m.
Matrix symbol_contravariant(const BandLimited& f, const Bridge& bridge);
/// Convenience overload with a grid of exactly the required degree.
Matrix symbol_contravariant(const BandLimited& f, int m);

/// Sector eigenvalues of the Berezin transform sigma^B o sigma^A.
struct BerezinSpectrum {
    int m = 0;
    std::vector<double> eigenvalues;  ///< per isotypic sector k = 0..m

    /// Distance from the unital fixed point to the first nontrivial
    /// sector, 1 - lambda_1; this is the quantity whose decrease in m
    /// witnesses convergence.
    double gap() const;
    double lambda_min() const;
};

/// The transform as a superoperator on vec(B^m) plus its spectrum and
/// the residuals of the structural checks performed while extracting
/// it.
struct BerezinMap {
    Matrix op;
    BerezinSpectrum spectrum;
    double conjugation_residual = 0.0;   ///< worst commutator with sampled rotations
    double max_sector_variance = 0.0;    ///< worst within-sector deviation from scalar
};

/// Assembles the transform by quadrature, verifies it commutes with
/// sampled conjugations and acts as a scalar on every isotypic sector.
/// Throws SectorNotScalar when either check fails.
BerezinMap berezin_map(int m);

/// sup over the sphere (grid plus refinement) of
/// op_norm(f(x) alpha_x(P) - alpha_x(P) b): the norm of f omega -
/// omega b in the algebra of B^m-valued functions.
double bridge_norm(const Bridge& bridge, const BandLimited& f, const Matrix& b);
double bridge_norm(int m, const BandLimited& f, const Matrix& b);

/// Seeded lower-bound estimates of the two one-sided reaches.
struct ReachEstimate {
    double gamma_b = 0.0;  ///< sup over the commutator-seminorm unit ball of B
    double gamma_a = 0.0;  ///< sup over the gradient-seminorm unit ball of the model
};

/// Random-start ascent: gamma_b maximizes bridge_norm(m, symbol(b), b)
/// over self-adjoint b with lip_seminorm <= 1; gamma_a maximizes over
/// band-limited self-adjoint f with cont_seminorm <= 1, paired with
/// b = sigma^B(f) pulled back into the unit ball. Monotone in budget,
/// reproducible for a fixed (budget, seed).
ReachEstimate reach_estimate(int m, int budget, std::uint64_t seed);

/// Seeded lower-bound estimate of the height: ascent of
/// ||b - sigma^B(sigma^A(b))|| over the derivation-seminorm unit ball,
/// using the exact Berezin superoperator for the objective.
struct HeightEstimate {
    double delta_hat = 0.0;
    /// max_k (1 - lambda_k) ||b_k|| for the best b found, decomposed
    /// into isotypic components; a sector-driven surrogate of the same
    /// quantity.
    double sector_surrogate = 0.0;
};

HeightEstimate height_estimate(int m, int budget, std::uint64_t seed);

/// Block operator D_r = DA (+) r^{-1} D_omega (+) DB acting on four
/// copies of the container C^d; the pair (a, b) acts as
/// diag(a, a, b, b), so the commutator norm equals
/// max(||[DA, a]||, r^{-1} max(||a omega - omega b||,
/// ||a* omega - omega b*||), ||[DB, b]||) exactly.
struct LinkingOperator {
    int d = 0;
    std::vector<Matrix> a_basis;
    std::vector<Matrix> b_basis;
    Matrix omega;
    double r = 1.0;
    Matrix d_omega;  ///< 2d x 2d block matrix [[0, omega], [omega, 0]]
    Matrix d_r;      ///< assembled 4d x 4d block operator
    Matrix da, db;

    /// ||[D_r, diag(a, a, b, b)]||.
    double commutator_norm(const Matrix& a, const Matrix& b) const;
};

/// Validates the pivot (self-adjoint, norm 1, 1 in the spectrum), the
/// block dimensions, r > 0, and Hermiticity of DA, DB; throws BadPivot
/// otherwise.
LinkingOperator linking_dirac(const std::vector<Matrix>& a_basis,
                              const std::vector<Matrix>& b_basis, const Matrix& omega, double r,
                              const Matrix& da, const Matrix& db);

/// The concrete demo instance: A = diagonal matrices in M_4, B = M_4,
/// omega the projection onto the normalized all-ones vector,
/// DA = diag(0, 1, 2, 3), DB a fixed tridiagonal Hermitian matrix,
/// r = 1/2.
LinkingOperator linking_demo_m4();

/// One eigenvalue cluster of the level operator inside the low band,
/// with the worst relative defect ||eta - theta_b theta_a eta|| over
/// its eigenvectors.
struct TunnelCluster {
    double eigenvalue = 0.0;
    int multiplicity = 0;
    double contraction_defect = 0.0;
};

/// The two tunnel maps theta_a = R (x) I_S (level to band-limited
/// model) and theta_b (compression back, carrying the same inverse
/// Berezin sector factors so that it is the adjoint of theta_a), with
/// their diagnostics. Norms and adjointness are taken with the
/// trace-normalized inner products on both levels.
struct TunnelMaps {
    int m = 0;
    int band_level = 0;
    Matrix theta_a;
    Matrix theta_b;
    double intertwine_a = 0.0;      ///< ||D^band theta_a - theta_a D^m||
    double intertwine_b = 0.0;      ///< ||D^m theta_b - theta_b D^band||
    double norm_a = 0.0;
    double norm_b = 0.0;
    double adjoint_residual = 0.0;  ///< <theta_a eta, xi> vs <eta, theta_b xi>
    double transport_residual = 0.0;
    std::vector<TunnelCluster> low_band;  ///< clusters with |eigenvalue| <= band
};

/// Builds both maps on a shared exact grid; sector components are
/// rescaled by the inverse Berezin factors of the band level so that
/// the function represented by theta_a(b) is exactly the symbol of b.
/// Throws BandTooSmall when band_level < m.
TunnelMaps tunnel_maps(int m, int band_level, double band = 4.0);

/// One row of the convergence study.
struct BridgeReport {
    int m = 0;
    double lambda_min = 0.0;
    double gap = 0.0;
    double gamma_a = 0.0;
    double gamma_b = 0.0;
    double delta_hat = 0.0;
    double sector_surrogate = 0.0;
    double runtime_ms = 0.0;
};

/// One row: Berezin spectrum plus the seeded reach and height
/// estimates at level m, with wall-clock timing. Rows for different m
/// are independent (each draws from streams derived only from the
/// seed), so they may be computed in any order or concurrently.
BridgeReport bridge_report(int m, int budget, std::uint64_t seed);

/// Verifies the expected trends on consecutive rows: gap and delta_hat
/// strictly decreasing, both reach columns nonincreasing within a 5%
/// band. Throws std::runtime_error naming the first violation.
void check_trends(const std::vector<BridgeReport>& rows);

/// Reports for m = 1..m_max at a fixed budget and seed, then
/// check_trends on the result.
std::vector<BridgeReport> convergence_study(int m_max, int budget, std::uint64_t seed);

}  // namespace fzd
