#include "fzd/su2.hpp"

#include <algorithm>
#include <cmath>

namespace fzd {

namespace {

const cx kI(0.0, 1.0);

Matrix make2(cx a, cx b, cx c, cx d) {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

}  // namespace

LieBasis su2_basis() {
    LieBasis basis;
    basis.E[0] = make2(0.0, kI, kI, 0.0);
    basis.E[1] = make2(0.0, -1.0, 1.0, 0.0);
    basis.E[2] = make2(kI, 0.0, 0.0, -kI);
    return basis;
}

double lie_inner(const Matrix& x, const Matrix& y) { return -0.5 * (x * y).trace().real(); }

Irrep irrep(int n) {
    if (n < 0) throw DimensionMismatch("irrep: highest weight must be nonnegative");
    const int d = n + 1;
    Irrep rep;
    rep.n = n;
    rep.H = Matrix(d, d);
    for (int k = 0; k < d; k++) rep.H(k, k) = double(n - 2 * k);
    rep.E = Matrix(d, d);
    for (int k = 1; k < d; k++) rep.E(k - 1, k) = std::sqrt(double(k) * double(n - k + 1));
    rep.F = rep.E.transpose();
    rep.U[0] = kI * (rep.E + rep.F);
    rep.U[1] = rep.F - rep.E;
    rep.U[2] = kI * rep.H;
    rep.P = Matrix::unit(d, 0, 0);
    return rep;
}

Matrix casimir_image(const Irrep& rep) {
    return rep.U[0] * rep.U[0] + rep.U[1] * rep.U[1] + rep.U[2] * rep.U[2];
}

Matrix left_mult_op(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("left_mult_op: matrix not square");
    return kron(a, Matrix::identity(a.rows()));
}

Matrix right_mult_op(const Matrix& b) {
    if (b.rows() != b.cols()) throw DimensionMismatch("right_mult_op: matrix not square");
    return kron(Matrix::identity(b.rows()), b.transpose());
}

Matrix derivation(const Irrep& rep, const std::array<double, 3>& x) {
    const int d = rep.dim();
    Matrix ux(d, d);
    for (int j = 0; j < 3; j++) ux += cx(x[j]) * rep.U[j];
    return kron(ux, Matrix::identity(d)) - kron(Matrix::identity(d), ux.transpose());
}

Su2Log su2_log(const Matrix& g) {
    if (g.rows() != 2 || g.cols() != 2 || !is_unitary(g, 1e-8))
        throw NotSU2("su2_log: input is not a 2x2 unitary");
    const cx det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    if (std::abs(det - cx(1.0)) > 1e-8) throw NotSU2("su2_log: determinant is not 1");

    const double c = 0.5 * (g(0, 0) + g(1, 1)).real();
    const Matrix skew = (g - g.adjoint()) * cx(0.5);
    const double s = fro_norm(skew) / std::sqrt(2.0);
    Su2Log out;
    out.t = std::atan2(s, c);
    if (s < 1e-14) {
        out.axis = {0.0, 0.0, 1.0};
        return out;
    }
    const LieBasis basis = su2_basis();
    for (int j = 0; j < 3; j++) out.axis[j] = lie_inner(skew, basis.E[j]) / s;
    return out;
}

Matrix lift(const Irrep& rep, const Matrix& g) {
    if (g.rows() != 2 || g.cols() != 2 || !is_unitary(g, 1e-8))
        throw NotGroupElement("lift: input is not a 2x2 unitary");
    Su2Log lg;
    try {
        lg = su2_log(g);
    } catch (const NotSU2& e) {
        throw NotGroupElement(e.what());
    }
    const int d = rep.dim();
    Matrix ux(d, d);
    for (int j = 0; j < 3; j++) ux += cx(lg.axis[j]) * rep.U[j];
    return expm_skew(ux, lg.t);
}

Matrix conjugation(const Irrep& rep, const Matrix& g) {
    const Matrix ug = lift(rep, g);
    return kron(ug, ug.conj());
}

std::vector<Matrix> isotypic_projectors(int n) {
    const Irrep rep = irrep(n);
    const int d2 = rep.dim() * rep.dim();
    Matrix cas(d2, d2);
    for (int j = 0; j < 3; j++) {
        std::array<double, 3> x{};
        x[j] = 1.0;
        const Matrix dj = derivation(rep, x);
        cas += dj * dj;
    }
    const EigResult eig = herm_eig(cas);

    const double tol = 1e-6 * std::max(1.0, 2.0 * n * (2.0 * n + 2.0));
    std::vector<std::vector<int>> members(n + 1);
    for (int i = 0; i < d2; i++) {
        int hit = -1;
        for (int k = 0; k <= n; k++) {
            if (std::abs(eig.eigenvalues[i] + 2.0 * k * (2.0 * k + 2.0)) < tol) {
                hit = k;
                break;
            }
        }
        if (hit < 0)
            throw DegenerateSpectrum("isotypic_projectors: stray Casimir eigenvalue " +
                                     std::to_string(eig.eigenvalues[i]));
        members[hit].push_back(i);
    }

    std::vector<Matrix> projectors;
    projectors.reserve(n + 1);
    for (int k = 0; k <= n; k++) {
        if (int(members[k].size()) != 2 * k + 1)
            throw DegenerateSpectrum("isotypic_projectors: component " + std::to_string(k) +
                                     " has dimension " + std::to_string(members[k].size()));
        Matrix p(d2, d2);
        for (int col : members[k]) {
            for (int i = 0; i < d2; i++) {
                const cx vi = eig.eigenvectors(i, col);
                if (vi == cx(0.0)) continue;
                for (int j = 0; j < d2; j++)
                    p(i, j) += vi * std::conj(eig.eigenvectors(j, col));
            }
        }
        projectors.push_back(std::move(p));
    }
    return projectors;
}

double length_function(const Matrix& g) {
    if (g.rows() != 2 || g.cols() != 2 || !is_unitary(g, 1e-8))
        throw NotSU2("length_function: input is not a 2x2 unitary");
    const cx det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    if (std::abs(det - cx(1.0)) > 1e-8) throw NotSU2("length_function: determinant is not 1");
    double c = 0.5 * (g(0, 0) + g(1, 1)).real();
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

}  // namespace fzd
