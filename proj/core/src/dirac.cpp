#include "fzd/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fzd {

namespace {

constexpr double kPi = 3.14159265358979323846;

int vec_index(int r, int c, int s, int dim1) { return (r * dim1 + c) * 2 + s; }

std::array<double, 3> basis_direction(int j) {
    std::array<double, 3> e{0.0, 0.0, 0.0};
    e[j] = 1.0;
    return e;
}

/// Matrix of the antilinear v -> M conj(v) realizing
/// a (x) psi -> a^* (x) sigma_2 conj(psi) on the vectorized space.
Matrix spinor_conjugation_matrix(int dim1) {
    const int dim = 2 * dim1 * dim1;
    Matrix mc = Matrix::zero(dim, dim);
    for (int r = 0; r < dim1; r++) {
        for (int c = 0; c < dim1; c++) {
            mc(vec_index(c, r, 1, dim1), vec_index(r, c, 0, dim1)) = cx(0.0, 1.0);
            mc(vec_index(c, r, 0, dim1), vec_index(r, c, 1, dim1)) = cx(0.0, -1.0);
        }
    }
    return mc;
}

/// [M_a, y] for a = e_{pq}, with M_a acting by left multiplication on
/// the level factor and trivially on the spinor factor.
Matrix unit_left_commutator(const Matrix& y, int p, int q, int dim1) {
    const int dim = y.rows();
    Matrix out = Matrix::zero(dim, dim);
    for (int c = 0; c < dim1; c++) {
        for (int s = 0; s < 2; s++) {
            const int row_p = vec_index(p, c, s, dim1);
            const int row_q = vec_index(q, c, s, dim1);
            for (int k = 0; k < dim; k++) out(row_p, k) += y(row_q, k);
            for (int k = 0; k < dim; k++) out(k, row_q) -= y(k, row_p);
        }
    }
    return out;
}

/// [y, R_b] for b = e_{uv}, with R_b acting by right multiplication on
/// the level factor and trivially on the spinor factor.
Matrix unit_right_commutator(const Matrix& y, int u, int v, int dim1) {
    const int dim = y.rows();
    Matrix out = Matrix::zero(dim, dim);
    for (int r = 0; r < dim1; r++) {
        for (int s = 0; s < 2; s++) {
            const int col_u = vec_index(r, u, s, dim1);
            const int col_v = vec_index(r, v, s, dim1);
            for (int k = 0; k < dim; k++) out(k, col_u) += y(k, col_v);
            for (int k = 0; k < dim; k++) out(col_v, k) -= y(col_u, k);
        }
    }
    return out;
}

struct SphereDirection {
    double theta = 0.0;
    double phi = 0.0;

    std::array<double, 3> coords() const {
        const double st = std::sin(theta);
        return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
    }
};

/// Golden-spiral grid of `count` directions on the unit sphere.
std::vector<SphereDirection> sphere_grid(int count) {
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    std::vector<SphereDirection> dirs;
    dirs.reserve(count);
    for (int i = 0; i < count; i++) {
        const double z = 1.0 - 2.0 * (i + 0.5) / count;
        dirs.push_back({std::acos(std::clamp(z, -1.0, 1.0)), golden_angle * i});
    }
    return dirs;
}

/// Derivative-free local ascent of `value` over the sphere starting
/// from the best of `dirs`; deterministic, evaluates only feasible
/// points, so the result is a lower bound of the supremum.
template <typename F>
double refine_over_sphere(const std::vector<SphereDirection>& dirs, F&& value) {
    double best = 0.0;
    SphereDirection at;
    for (const auto& dir : dirs) {
        const double v = value(dir);
        if (v > best) {
            best = v;
            at = dir;
        }
    }
    double step = 0.25;
    while (step > 1e-6) {
        bool moved = false;
        const SphereDirection candidates[4] = {
            {std::min(at.theta + step, kPi), at.phi},
            {std::max(at.theta - step, 0.0), at.phi},
            {at.theta, at.phi + step},
            {at.theta, at.phi - step},
        };
        for (const auto& cand : candidates) {
            const double v = value(cand);
            if (v > best) {
                best = v;
                at = cand;
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }
    return best;
}

}  // namespace

DiracOp build_dirac(int n, int sign) {
    if (n < 0) throw std::invalid_argument("build_dirac: negative level");
    if (sign != 1 && sign != -1) throw std::invalid_argument("build_dirac: sign must be +1 or -1");
    DiracOp d;
    d.n = n;
    d.sign = sign;
    d.rep = irrep(n);
    d.cliff = clifford_gammas(3, sign);
    const int dim = d.dim();
    d.matrix = Matrix::zero(dim, dim);
    for (int j = 0; j < 3; j++)
        d.matrix += kron(derivation(d.rep, basis_direction(j)), d.cliff.gammas[j]);
    return d;
}

int SpectrumReport::total_multiplicity() const {
    int total = 0;
    for (const auto& cl : clusters) total += cl.multiplicity;
    return total;
}

std::vector<std::pair<double, int>> predicted_shifted_spectrum(int n) {
    std::vector<std::pair<double, int>> table;
    for (int k = n; k >= 1; k--) table.emplace_back(-2.0 * k, 2 * k);
    for (int k = 1; k <= n; k++) table.emplace_back(2.0 * k, 2 * k);
    table.emplace_back(2.0 * (n + 1), 2 * (n + 1));
    return table;
}

SpectrumReport spectrum(const DiracOp& d, double tol) {
    const int dim = d.dim();
    Matrix shifted = d.matrix * cx(double(d.sign));
    shifted += Matrix::identity(dim) * cx(2.0);

    SpectrumReport report;
    report.n = d.n;
    report.sign = d.sign;
    report.shifted_eigenvalues = herm_eigvals(shifted);

    std::size_t idx = 0;
    for (const auto& [value, mult] : predicted_shifted_spectrum(d.n)) {
        SpectrumCluster cl{value, mult, 0.0};
        for (int i = 0; i < mult; i++, idx++) {
            cl.max_deviation =
                std::max(cl.max_deviation, std::abs(report.shifted_eigenvalues[idx] - value));
        }
        report.max_deviation = std::max(report.max_deviation, cl.max_deviation);
        report.clusters.push_back(cl);
    }
    if (idx != report.shifted_eigenvalues.size())
        throw SpectrumMismatch("spectrum: multiplicity table does not cover the space");

    if (report.max_deviation > tol) {
        std::ostringstream msg;
        msg << "spectrum: level " << d.n << " sign " << d.sign << " deviates by "
            << report.max_deviation << " (tolerance " << tol << ")";
        throw SpectrumMismatch(msg.str());
    }
    return report;
}

double lip_seminorm(const DiracOp& d, const Matrix& a) {
    Matrix lifted = kron(left_mult_op(a), Matrix::identity(2));
    return op_norm(commutator(d.matrix, lifted));
}

double lip_seminorm(int n, const Matrix& a) { return lip_seminorm(build_dirac(n, +1), a); }

double ld_seminorm(const Irrep& rep, const Matrix& a) {
    std::array<Matrix, 3> k;
    for (int j = 0; j < 3; j++) k[j] = commutator(rep.U[j], a);
    const auto value = [&](const SphereDirection& dir) {
        const auto x = dir.coords();
        return op_norm(k[0] * x[0] + k[1] * x[1] + k[2] * x[2]);
    };
    return refine_over_sphere(sphere_grid(233), value);
}

double ld_seminorm(int n, const Matrix& a) { return ld_seminorm(irrep(n), a); }

double lell_estimate(int n, const Matrix& a, int samples) {
    if (samples < 1) throw std::invalid_argument("lell_estimate: need at least one sample");
    const Irrep rep = irrep(n);
    const LieBasis basis = su2_basis();
    double best = 0.0;
    for (const auto& dir : sphere_grid(samples)) {
        const auto x = dir.coords();
        const Matrix spin = basis.E[0] * x[0] + basis.E[1] * x[1] + basis.E[2] * x[2];
        const Matrix gen = rep.U[0] * x[0] + rep.U[1] * x[1] + rep.U[2] * x[2];
        for (double t = 1.0; t >= 1e-4; t *= 0.5) {
            const Matrix u = expm_skew(gen, t);
            const double num = op_norm(u * a * u.adjoint() - a);
            const double len = length_function(expm_skew(spin, t));
            best = std::max(best, num / len);
        }
    }
    return best;
}

CasimirIdentity check_casimir_identity(int n) {
    const Irrep rep = irrep(n);
    const LieBasis basis = su2_basis();
    const int sup_dim = rep.dim() * rep.dim();
    const Matrix id2 = Matrix::identity(2);
    const Matrix id_sup = Matrix::identity(sup_dim);

    std::array<Matrix, 3> derivs;
    for (int j = 0; j < 3; j++) derivs[j] = derivation(rep, basis_direction(j));

    Matrix coupled_casimir = Matrix::zero(2 * sup_dim, 2 * sup_dim);
    for (int j = 0; j < 3; j++) {
        const Matrix t = kron(derivs[j], id2) + kron(id_sup, basis.E[j]);
        coupled_casimir += t * t;
    }
    Matrix level_casimir = Matrix::zero(sup_dim, sup_dim);
    for (int j = 0; j < 3; j++) level_casimir += derivs[j] * derivs[j];
    Matrix spin_casimir = Matrix::zero(2, 2);
    for (int j = 0; j < 3; j++) spin_casimir += basis.E[j] * basis.E[j];

    const Matrix difference =
        coupled_casimir - kron(level_casimir, id2) - kron(id_sup, spin_casimir);

    Matrix cross_terms = Matrix::zero(2 * sup_dim, 2 * sup_dim);
    for (int j = 0; j < 3; j++) cross_terms += kron(derivs[j], basis.E[j]);

    CasimirIdentity result;
    result.pair_expansion_residual = fro_norm(difference - cross_terms * cx(2.0));

    const Matrix half_difference = difference * cx(0.5);
    for (int sign : {+1, -1}) {
        const DiracOp d = build_dirac(n, sign);
        const double plus = fro_norm(d.matrix - half_difference);
        const double minus = fro_norm(d.matrix + half_difference);
        const int s = (plus <= minus) ? +1 : -1;
        if (sign == +1)
            result.s_for_sign_plus = s;
        else
            result.s_for_sign_minus = s;
        result.residual = std::max(result.residual, std::min(plus, minus));
    }
    return result;
}

double check_square(int n) {
    const Irrep rep = irrep(n);
    const LieBasis basis = su2_basis();
    const DiracOp d = build_dirac(n, +1);
    const int sup_dim = rep.dim() * rep.dim();

    Matrix level_casimir = Matrix::zero(sup_dim, sup_dim);
    for (int j = 0; j < 3; j++) {
        const Matrix dj = derivation(rep, basis_direction(j));
        level_casimir += dj * dj;
    }
    Matrix rhs = kron(-level_casimir, Matrix::identity(2));
    for (int j = 0; j < 3; j++) {
        for (int k = j + 1; k < 3; k++) {
            const Matrix bracket = commutator(basis.E[j], basis.E[k]);
            std::array<double, 3> coeff{};
            for (int l = 0; l < 3; l++) coeff[l] = lie_inner(basis.E[l], bracket);
            rhs += kron(derivation(rep, coeff), d.cliff.gammas[j] * d.cliff.gammas[k]);
        }
    }
    return fro_norm(d.matrix * d.matrix - rhs);
}

double check_equivariance(int n, int trials, std::uint64_t seed) {
    const Irrep rep = irrep(n);
    const LieBasis basis = su2_basis();
    const DiracOp d = build_dirac(n, +1);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kPi);

    double worst = 0.0;
    for (int trial = 0; trial < trials; trial++) {
        std::array<double, 3> x{};
        double norm = 0.0;
        do {
            for (double& c : x) c = normal(rng);
            norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        } while (norm < 1e-8);
        for (double& c : x) c /= norm;

        const Matrix spin = basis.E[0] * x[0] + basis.E[1] * x[1] + basis.E[2] * x[2];
        const Matrix g = expm_skew(spin, angle(rng));
        const Matrix action = kron(conjugation(rep, g), g);
        worst = std::max(worst, fro_norm(action * d.matrix * action.adjoint() - d.matrix));
    }
    return worst;
}

FirstOrderReport check_first_order(int n) {
    const Irrep rep = irrep(n);
    const int dim1 = rep.dim();
    const DiracOp d = build_dirac(n, +1);
    const Matrix mc = spinor_conjugation_matrix(dim1);

    FirstOrderReport report;

    const Matrix cd = mc * d.matrix.conj();
    const Matrix dc = d.matrix * mc;
    const double plus = fro_norm(cd - dc);
    const double minus = fro_norm(cd + dc);
    report.cd_sign = (plus <= minus) ? +1 : -1;
    report.cd_residual = std::min(plus, minus);

    // [D, M_a] for every matrix unit a = e_{pq}, assembled by row and
    // column transfers instead of dense products.
    std::vector<Matrix> first_order(dim1 * dim1);
    for (int p = 0; p < dim1; p++)
        for (int q = 0; q < dim1; q++)
            first_order[p * dim1 + q] = -unit_left_commutator(d.matrix, p, q, dim1);

    const Matrix id2 = Matrix::identity(2);
    for (int u = 0; u < dim1; u++) {
        for (int v = 0; v < dim1; v++) {
            // b = e_{uv}; conjugating M_{b*} by the real structure gives
            // right multiplication by b, which the slice passes below rely
            // on; record how exactly the identity holds.
            const Matrix left_bstar = kron(left_mult_op(Matrix::unit(dim1, v, u)), id2);
            const Matrix conjugated = mc * left_bstar.conj() * mc.adjoint();
            const Matrix right_b = kron(right_mult_op(Matrix::unit(dim1, u, v)), id2);
            report.conjugated_right_mult_residual =
                std::max(report.conjugated_right_mult_residual, max_abs(conjugated - right_b));

            for (int p = 0; p < dim1; p++) {
                for (int q = 0; q < dim1; q++) {
                    report.zeroth_residual =
                        std::max(report.zeroth_residual,
                                 fro_norm(unit_left_commutator(conjugated, p, q, dim1)));
                    report.first_residual = std::max(
                        report.first_residual,
                        fro_norm(unit_right_commutator(first_order[p * dim1 + q], u, v, dim1)));
                }
            }
        }
    }
    return report;
}

}  // namespace fzd
