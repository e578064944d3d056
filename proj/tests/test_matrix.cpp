#include <doctest.h>

#include <cmath>
#include <random>

#include <fzd/matrix.hpp>
#include <fzd/matrix_io.hpp>

using namespace fzd;

namespace {

Matrix random_hermitian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix a = Matrix::zero(dim, dim);
    for (int r = 0; r < dim; r++) {
        a(r, r) = normal(rng);
        for (int c = r + 1; c < dim; c++) {
            a(r, c) = cx(normal(rng), normal(rng)) * cx(1.0 / std::sqrt(2.0));
            a(c, r) = std::conj(a(r, c));
        }
    }
    return a;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("constructors and accessors") {
    const Matrix id = Matrix::identity(3);
    CHECK(id(0, 0) == cx(1.0));
    CHECK(id(0, 1) == cx(0.0));
    CHECK(Matrix::unit(4, 1, 2)(1, 2) == cx(1.0));
    CHECK(Matrix::unit(4, 1, 2)(2, 1) == cx(0.0));
    const Matrix d = Matrix::diag({cx(1.0), cx(0.0, 2.0)});
    CHECK(d(1, 1) == cx(0.0, 2.0));
    CHECK(d.trace() == cx(1.0, 2.0));
}

TEST_CASE("product and adjoint") {
    Matrix a = Matrix::zero(2, 3);
    a(0, 0) = cx(1.0);
    a(0, 2) = cx(0.0, 1.0);
    a(1, 1) = cx(2.0);
    const Matrix aa = a * a.adjoint();
    CHECK(aa.rows() == 2);
    CHECK(aa.cols() == 2);
    CHECK(std::abs(aa(0, 0) - cx(2.0)) < 1e-15);
    CHECK(std::abs(aa(0, 1)) < 1e-15);
    CHECK_THROWS_AS(a * a, DimensionMismatch);
}

TEST_CASE("hermitian eigendecomposition reconstructs") {
    std::mt19937_64 rng(11);
    const Matrix a = random_hermitian(24, rng);
    const EigResult eig = herm_eig(a);
    REQUIRE(int(eig.eigenvalues.size()) == 24);
    for (std::size_t i = 1; i < eig.eigenvalues.size(); i++)
        CHECK(eig.eigenvalues[i] >= eig.eigenvalues[i - 1]);
    CHECK(is_unitary(eig.eigenvectors));

    Matrix rebuilt = Matrix::zero(24, 24);
    for (int k = 0; k < 24; k++) {
        Matrix col = Matrix::zero(24, 1);
        for (int r = 0; r < 24; r++) col(r, 0) = eig.eigenvectors(r, k);
        rebuilt += (col * col.adjoint()) * cx(eig.eigenvalues[k]);
    }
    CHECK(fro_norm(rebuilt - a) < 1e-10 * fro_norm(a));
}

TEST_CASE("eigensolver rejects non-hermitian input") {
    Matrix a = Matrix::zero(2, 2);
    a(0, 1) = cx(1.0);
    CHECK_THROWS_AS(herm_eig(a), NotHermitian);
}

TEST_CASE("operator norm routes") {
    CHECK(op_norm(Matrix::diag({cx(3.0), cx(-5.0)})) == doctest::Approx(5.0).epsilon(1e-12));

    Matrix skew = Matrix::zero(2, 2);
    skew(0, 1) = cx(2.0);
    skew(1, 0) = cx(-2.0);
    CHECK(op_norm(skew) == doctest::Approx(2.0).epsilon(1e-12));

    Matrix general = Matrix::zero(2, 2);
    general(0, 1) = cx(7.0);
    CHECK(op_norm(general) == doctest::Approx(7.0).epsilon(1e-12));

    std::mt19937_64 rng(5);
    const Matrix a = random_hermitian(10, rng);
    const std::vector<double> w = herm_eigvals(a);
    const double expect = std::max(std::abs(w.front()), std::abs(w.back()));
    CHECK(op_norm(a) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("kronecker product layout") {
    Matrix a = Matrix::zero(2, 2);
    a(0, 1) = cx(2.0);
    const Matrix b = Matrix::identity(3);
    const Matrix k = kron(a, b);
    REQUIRE(k.rows() == 6);
    CHECK(k(0, 3 + 0) == cx(2.0));
    CHECK(k(1, 3 + 1) == cx(2.0));
    CHECK(k(0, 3 + 1) == cx(0.0));
}

TEST_CASE("exponential of skew input") {
    Matrix e3 = Matrix::zero(2, 2);
    e3(0, 0) = cx(0.0, 1.0);
    e3(1, 1) = cx(0.0, -1.0);
    const Matrix g = expm_skew(e3, 0.7);
    CHECK(std::abs(g(0, 0) - std::polar(1.0, 0.7)) < 1e-14);
    CHECK(std::abs(g(1, 1) - std::polar(1.0, -0.7)) < 1e-14);
    CHECK(is_unitary(g));
    CHECK_THROWS_AS(expm_skew(Matrix::identity(2)), NotSkewHermitian);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(3);
    const Matrix a = random_hermitian(5, rng);
    const Matrix back = matrix_from_json(matrix_to_json(a));
    CHECK(fro_norm(back - a) == 0.0);
    CHECK_THROWS_AS(matrix_from_json("{\"rows\": 1}"), ParseError);
    CHECK_THROWS_AS(matrix_from_json("not json"), ParseError);
}

}  // TEST_SUITE
