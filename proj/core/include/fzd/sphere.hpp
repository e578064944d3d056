#pragma once

#include <vector>

#include "fzd/matrix.hpp"
#include "fzd/su2.hpp"

/// The round sphere as SU(2)/torus: points as rotations, coherent-state
/// projectors, quadrature that is exact on band-limited integrands,
/// band-limited functions as covariant symbols of matrices, and the
/// continuous gradient seminorm.

namespace fzd {

/// A gradient was requested for a function that is not real-valued
/// (its representing matrix is not Hermitian).
struct NotSelfAdjoint : std::runtime_error {
    explicit NotSelfAdjoint(const std::string& what) : std::runtime_error(what) {}
};

/// A point of the sphere with its rotation R(theta, phi) =
/// exp((phi/2) E_3) exp((theta/2) E_2); the half angles compensate the
/// generators rotating at double speed. The coset modulo the diagonal
/// torus depends only on (theta, phi).
struct GroupPoint {
    double theta = 0.0;
    double phi = 0.0;
    Matrix g;
};

/// Wraps the angles into [0, pi] x [0, 2 pi) and caches the rotation.
GroupPoint group_point(double theta, double phi);

/// Rank-1 projector U_R P U_R^H in B^n; the north pole gives P itself.
Matrix coherent_projector(int n, const GroupPoint& p);

/// Product grid that integrates every product of two coherent symbols
/// of levels n + n' <= degree exactly: Gauss-Legendre in cos(theta)
/// with ceil((degree+2)/2) nodes, uniform phi with degree+1 nodes.
/// Weights sum to 1.
struct QuadratureGrid {
    int degree = 0;
    std::vector<GroupPoint> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
};

QuadratureGrid quadrature_grid(int degree);

/// Band-limited function f(x) = tr(b . alpha_x(P)) determined by its
/// representing matrix b at a fixed level. The map b -> f is injective
/// and f is real-valued exactly when b is Hermitian.
struct BandLimited {
    int level = 0;
    Matrix b;
};

/// Wraps a square matrix as the band-limited function it represents;
/// the identity gives the constant 1.
BandLimited symbol_covariant(const Matrix& b);

/// f(p) = tr(b . coherent_projector(level, p)).
cx eval(const BandLimited& f, const GroupPoint& p);

/// Pointwise norm of the differential: sqrt of the sum over the
/// orthonormal Lie directions of (d/dt f(exp(t E_j) p))^2, computed as
/// symbols of the commutators [U_{E_j}, b]. Throws NotSelfAdjoint
/// unless f is real-valued.
double grad_norm(const BandLimited& f, const GroupPoint& p);

/// Sup of grad_norm over a (resolution x 2 resolution) grid followed
/// by local refinement; deterministic lower bound of the true sup.
/// Throws NotSelfAdjoint unless f is real-valued.
double cont_seminorm(const BandLimited& f, int resolution = 64);

}  // namespace fzd
