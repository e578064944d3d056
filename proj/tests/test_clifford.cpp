#include <doctest.h>

#include <cmath>
#include <random>

#include <fzd/clifford.hpp>
#include <fzd/matrix.hpp>
#include <fzd/su2.hpp>

using namespace fzd;

namespace {

Matrix random_square(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix a = Matrix::zero(dim, dim);
    for (int r = 0; r < dim; r++)
        for (int c = 0; c < dim; c++) a(r, c) = cx(normal(rng), normal(rng));
    return a;
}

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("generator relations across dimensions") {
    for (int m = 1; m <= 6; m++) {
        for (int sign : {+1, -1}) {
            const CliffordRep rep = clifford_gammas(m, sign);
            REQUIRE(int(rep.gammas.size()) == m);
            CHECK(rep.spinor_dim() == (1 << (m / 2)));
            for (int j = 0; j < m; j++) {
                CHECK(is_skew_hermitian(rep.gammas[j]));
                for (int k = 0; k < m; k++) {
                    const Matrix anti = rep.gammas[j] * rep.gammas[k] +
                                        rep.gammas[k] * rep.gammas[j];
                    const Matrix expect =
                        Matrix::identity(rep.spinor_dim()) * cx(j == k ? -2.0 : 0.0);
                    CHECK(fro_norm(anti - expect) < 1e-13);
                }
            }
        }
    }
}

TEST_CASE("chirality is a self-adjoint involution") {
    for (int m : {2, 3, 4, 5}) {
        const CliffordRep rep = clifford_gammas(m, +1);
        const Matrix gamma = chirality(rep);
        CHECK(fro_norm(gamma * gamma - Matrix::identity(rep.spinor_dim())) < 1e-13);
        CHECK(herm_defect(gamma) < 1e-13);
    }
    for (int sign : {+1, -1}) {
        const CliffordRep rep = clifford_gammas(3, sign);
        CHECK(fro_norm(chirality(rep) - Matrix::identity(2) * cx(double(sign))) < 1e-13);
    }
}

TEST_CASE("three dimensional gauge ties to the lie basis") {
    const LieBasis basis = su2_basis();
    for (int sign : {+1, -1}) {
        const CliffordRep rep = clifford_gammas(3, sign);
        for (int j = 0; j < 3; j++)
            CHECK(fro_norm(rep.gammas[j] - basis.E[j] * cx(double(-sign))) == 0.0);
    }
}

TEST_CASE("clifford norm of scalar coefficients") {
    const Matrix id = Matrix::identity(3);
    const double norm = clifford_norm({id * cx(1.0), id * cx(2.0), id * cx(-2.0)});
    CHECK(norm == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("clifford norm sandwich and sign independence") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; trial++) {
        std::vector<Matrix> coeffs;
        double sum = 0.0;
        double max_norm = 0.0;
        for (int j = 0; j < 3; j++) {
            coeffs.push_back(random_square(4, rng));
            const double nj = op_norm(coeffs.back());
            sum += nj;
            max_norm = std::max(max_norm, nj);
        }
        const double norm = clifford_norm(coeffs);
        CHECK(norm >= max_norm - 1e-10);
        CHECK(norm <= sum + 1e-10);
    }
}

TEST_CASE("charge conjugation") {
    const AntilinearMap c = charge_conj_3d();
    CHECK(is_unitary(c.matrix));
    // C^2 = -I: composing with itself gives matrix * conj(matrix).
    CHECK(fro_norm(c.compose(c) + Matrix::identity(2)) < 1e-14);

    const CliffordRep rep = clifford_gammas(3, +1);
    for (int j = 0; j < 3; j++)
        CHECK(fro_norm(c.conjugate_linear(rep.gammas[j]) - rep.gammas[j]) < 1e-14);
}

}  // TEST_SUITE
