#include "fzd/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fzd {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Gauss-Legendre nodes and weights on (-1, 1) by Newton iteration on
/// the Legendre recurrence.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendre gauss_legendre(int count) {
    GaussLegendre out;
    out.nodes.resize(count);
    out.weights.resize(count);
    for (int i = 0; i < count; i++) {
        double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
        double slope = 1.0;
        for (int iter = 0; iter < 100; iter++) {
            double prev = 1.0;
            double value = x;
            for (int k = 2; k <= count; k++) {
                const double next = ((2.0 * k - 1.0) * x * value - (k - 1.0) * prev) / k;
                prev = value;
                value = next;
            }
            slope = count * (x * value - prev) / (x * x - 1.0);
            const double shift = value / slope;
            x -= shift;
            if (std::abs(shift) < 1e-15) break;
        }
        out.nodes[i] = x;
        out.weights[i] = 2.0 / ((1.0 - x * x) * slope * slope);
    }
    return out;
}

/// U_R P U_R^H built from the two rotation factors of the level-n
/// representation; avoids the group logarithm entirely.
Matrix projector_at(const Irrep& rep, double theta, double phi) {
    const Matrix u = expm_skew(rep.U[2], 0.5 * phi) * expm_skew(rep.U[1], 0.5 * theta);
    return u * rep.P * u.adjoint();
}

/// Cached data for many gradient evaluations of one function: the
/// commutators with the generators and the eigendecomposition of the
/// polar rotation generator, so each point costs a few small
/// matrix-vector products.
struct GradientEvaluator {
    Irrep rep;
    std::array<Matrix, 3> k;
    Matrix vectors;               ///< eigenvectors of i U_{E_2}
    std::vector<double> freqs;    ///< eigenvalues of i U_{E_2}
    Matrix start;                 ///< vectors^H e_0

    explicit GradientEvaluator(const BandLimited& f) : rep(irrep(f.level)) {
        for (int j = 0; j < 3; j++) k[j] = commutator(rep.U[j], f.b);
        const EigResult eig = herm_eig(rep.U[1] * cx(0.0, 1.0));
        vectors = eig.eigenvectors;
        freqs = eig.eigenvalues;
        Matrix e0(rep.dim(), 1);
        e0(0, 0) = 1.0;
        start = vectors.adjoint() * e0;
    }

    /// Coherent state exp((phi/2) U_3) exp((theta/2) U_2) e_0.
    Matrix state(double theta, double phi) const {
        const int dim = rep.dim();
        Matrix phased(dim, 1);
        for (int r = 0; r < dim; r++)
            phased(r, 0) = std::exp(cx(0.0, -0.5 * theta * freqs[r])) * start(r, 0);
        Matrix xi = vectors * phased;
        for (int r = 0; r < dim; r++)
            xi(r, 0) *= std::exp(cx(0.0, 0.5 * phi * (rep.n - 2 * r)));
        return xi;
    }

    double operator()(double theta, double phi) const {
        const Matrix xi = state(theta, phi);
        double sum = 0.0;
        for (int j = 0; j < 3; j++) {
            const double val = (xi.adjoint() * (k[j] * xi))(0, 0).real();
            sum += val * val;
        }
        return std::sqrt(sum);
    }
};

}  // namespace

GroupPoint group_point(double theta, double phi) {
    const double two_pi = 2.0 * kPi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    if (theta > kPi) {
        theta = two_pi - theta;
        phi += kPi;
    }
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;

    const LieBasis basis = su2_basis();
    GroupPoint p;
    p.theta = theta;
    p.phi = phi;
    p.g = expm_skew(basis.E[2], 0.5 * phi) * expm_skew(basis.E[1], 0.5 * theta);
    return p;
}

Matrix coherent_projector(int n, const GroupPoint& p) {
    if (n < 0) throw std::invalid_argument("coherent_projector: negative level");
    return projector_at(irrep(n), p.theta, p.phi);
}

QuadratureGrid quadrature_grid(int degree) {
    if (degree < 0) throw std::invalid_argument("quadrature_grid: negative degree");
    const int n_theta = (degree + 3) / 2;
    const int n_phi = degree + 1;
    const GaussLegendre gl = gauss_legendre(n_theta);

    QuadratureGrid grid;
    grid.degree = degree;
    grid.points.reserve(n_theta * n_phi);
    grid.weights.reserve(n_theta * n_phi);
    for (int i = 0; i < n_theta; i++) {
        const double theta = std::acos(std::clamp(gl.nodes[i], -1.0, 1.0));
        const double weight = 0.5 * gl.weights[i] / n_phi;
        for (int j = 0; j < n_phi; j++) {
            grid.points.push_back(group_point(theta, (2.0 * kPi * j) / n_phi));
            grid.weights.push_back(weight);
        }
    }
    return grid;
}

BandLimited symbol_covariant(const Matrix& b) {
    if (b.rows() != b.cols() || b.rows() == 0)
        throw DimensionMismatch("symbol_covariant: representing matrix must be square");
    return BandLimited{b.rows() - 1, b};
}

cx eval(const BandLimited& f, const GroupPoint& p) {
    return (f.b * coherent_projector(f.level, p)).trace();
}

double grad_norm(const BandLimited& f, const GroupPoint& p) {
    if (!is_hermitian(f.b))
        throw NotSelfAdjoint("grad_norm: representing matrix is not Hermitian");
    const Irrep rep = irrep(f.level);
    const Matrix q = projector_at(rep, p.theta, p.phi);
    double sum = 0.0;
    for (int j = 0; j < 3; j++) {
        const double val = (commutator(rep.U[j], f.b) * q).trace().real();
        sum += val * val;
    }
    return std::sqrt(sum);
}

double cont_seminorm(const BandLimited& f, int resolution) {
    if (resolution < 1) throw std::invalid_argument("cont_seminorm: resolution must be positive");
    if (!is_hermitian(f.b))
        throw NotSelfAdjoint("cont_seminorm: representing matrix is not Hermitian");

    const GradientEvaluator value(f);

    double best = 0.0;
    double at_theta = 0.0;
    double at_phi = 0.0;
    for (int i = 0; i < resolution; i++) {
        const double theta = (i + 0.5) * kPi / resolution;
        for (int j = 0; j < 2 * resolution; j++) {
            const double phi = j * kPi / resolution;
            const double v = value(theta, phi);
            if (v > best) {
                best = v;
                at_theta = theta;
                at_phi = phi;
            }
        }
    }

    double step = kPi / resolution;
    while (step > 1e-6) {
        bool moved = false;
        const double cands[4][2] = {
            {std::min(at_theta + step, kPi), at_phi},
            {std::max(at_theta - step, 0.0), at_phi},
            {at_theta, at_phi + step},
            {at_theta, at_phi - step},
        };
        for (const auto& cand : cands) {
            const double v = value(cand[0], cand[1]);
            if (v > best) {
                best = v;
                at_theta = cand[0];
                at_phi = cand[1];
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }
    return best;
}

}  // namespace fzd
