#include "fzd/clifford.hpp"

#include <array>
#include <cmath>

#include "fzd/su2.hpp"

namespace fzd {

namespace {

Matrix pauli(int j) {
    Matrix s(2, 2);
    switch (j) {
        case 1:
            s(0, 1) = 1.0;
            s(1, 0) = 1.0;
            break;
        case 2:
            s(0, 1) = cx(0.0, -1.0);
            s(1, 0) = cx(0.0, 1.0);
            break;
        default:
            s(0, 0) = 1.0;
            s(1, 1) = -1.0;
            break;
    }
    return s;
}

/// Hermitian anticommuting involutions G_1..G_m on dimension 2^(m/2),
/// m even: start from sigma_1, sigma_2 and extend a 2p-set on V to a
/// (2p+2)-set on V (x) C^2 as {G_j (x) sigma_3, I (x) sigma_1, I (x) sigma_2}.
std::vector<Matrix> hermitian_generators_even(int m) {
    std::vector<Matrix> g = {pauli(1), pauli(2)};
    while (int(g.size()) < m) {
        const Matrix s3 = pauli(3);
        const Matrix id = Matrix::identity(g[0].rows());
        std::vector<Matrix> next;
        next.reserve(g.size() + 2);
        for (const Matrix& gj : g) next.push_back(kron(gj, s3));
        next.push_back(kron(id, pauli(1)));
        next.push_back(kron(id, pauli(2)));
        g = std::move(next);
    }
    return g;
}

/// Hermitian chirality of an even generator set: (-i)^p G_1...G_2p.
Matrix hermitian_chirality(const std::vector<Matrix>& g) {
    Matrix prod = Matrix::identity(g[0].rows());
    for (const Matrix& gj : g) prod = prod * gj;
    const int p = int(g.size()) / 2;
    cx zeta = 1.0;
    for (int k = 0; k < p; ++k) zeta *= cx(0.0, -1.0);
    return zeta * prod;
}

/// For odd m the generator product is a scalar; returns it.
cx scalar_of(const Matrix& a) { return a(0, 0); }

}  // namespace

CliffordRep clifford_gammas(int m, int sign) {
    CliffordRep rep;
    rep.m = m;
    rep.sign = sign;

    if (m == 3) {
        const LieBasis basis = su2_basis();
        for (const Matrix& e : basis.E) rep.gammas.push_back(double(-sign) * e);
    } else if (m == 1) {
        Matrix k(1, 1);
        k(0, 0) = cx(0.0, double(-sign));
        rep.gammas.push_back(k);
    } else if (m % 2 == 0) {
        for (const Matrix& g : hermitian_generators_even(m))
            rep.gammas.push_back(cx(0.0, 1.0) * g);
    } else {
        std::vector<Matrix> g = hermitian_generators_even(m - 1);
        g.push_back(hermitian_chirality(g));
        for (const Matrix& gj : g) rep.gammas.push_back(cx(0.0, 1.0) * gj);
        // The two inequivalent representations differ by a global sign
        // of the generators; flip if the realized chirality scalar does
        // not match the requested one.
        if (std::real(scalar_of(chirality(rep))) * sign < 0.0)
            for (Matrix& kj : rep.gammas) kj = -kj;
    }

    rep.chirality = chirality(rep);
    return rep;
}

Matrix chirality(const CliffordRep& rep) {
    Matrix prod = Matrix::identity(rep.spinor_dim());
    for (const Matrix& kj : rep.gammas) prod = prod * kj;

    const std::array<cx, 4> candidates = {cx(1.0, 0.0), cx(0.0, 1.0), cx(-1.0, 0.0),
                                          cx(0.0, -1.0)};
    const Matrix id = Matrix::identity(rep.spinor_dim());
    for (cx zeta : candidates) {
        Matrix gamma = zeta * prod;
        if (herm_defect(gamma) > 1e-12) continue;
        if (max_abs(gamma * gamma - id) > 1e-12) continue;
        return gamma;
    }
    throw NoConvergence("chirality: no fourth root of unity normalizes the generator product");
}

double clifford_norm(const std::vector<Matrix>& coeffs) {
    if (coeffs.empty()) throw DimensionMismatch("clifford_norm: empty coefficient list");
    const int d = coeffs[0].rows();
    for (const Matrix& a : coeffs)
        if (a.rows() != d || a.cols() != d)
            throw DimensionMismatch("clifford_norm: coefficients must be square of equal size");

    const CliffordRep rep = clifford_gammas(int(coeffs.size()), -1);
    Matrix acc = Matrix::zero(d * rep.spinor_dim(), d * rep.spinor_dim());
    for (size_t j = 0; j < coeffs.size(); ++j) acc += kron(coeffs[j], rep.gammas[j]);
    return op_norm(acc);
}

Matrix AntilinearMap::compose(const AntilinearMap& o) const { return matrix * o.matrix.conj(); }

Matrix AntilinearMap::conjugate_linear(const Matrix& x) const {
    return matrix * x.conj() * matrix.adjoint();
}

AntilinearMap charge_conj_3d() { return AntilinearMap{pauli(2)}; }

}  // namespace fzd
