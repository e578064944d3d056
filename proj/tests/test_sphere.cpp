#include <doctest.h>

#include <cmath>
#include <random>

#include <fzd/matrix.hpp>
#include <fzd/sphere.hpp>
#include <fzd/su2.hpp>

using namespace fzd;

namespace {

constexpr double kPi = 3.14159265358979323846;

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

TEST_SUITE("sphere") {

TEST_CASE("group points and coset invariance") {
    const GroupPoint north = group_point(0.0, 1.3);
    CHECK(is_unitary(north.g));
    CHECK(fro_norm(coherent_projector(2, north) - Matrix::unit(3, 0, 0)) < 1e-14);

    // A right torus factor on the group element leaves the lifted
    // projector unchanged, and the lift of p.g reproduces the
    // projector built from the angles.
    const LieBasis basis = su2_basis();
    const GroupPoint p = group_point(1.1, 2.4);
    const Matrix torus = p.g * expm_skew(basis.E[2], 0.77);
    for (int n : {1, 3}) {
        const Irrep rep = irrep(n);
        const Matrix u = lift(rep, torus);
        CHECK(fro_norm(u * rep.P * u.adjoint() - coherent_projector(n, p)) < 1e-12);
    }

    const GroupPoint wrapped = group_point(-0.4, 7.0);
    CHECK(wrapped.theta == doctest::Approx(0.4));
    CHECK(wrapped.phi >= 0.0);
    CHECK(wrapped.phi < 2.0 * kPi);
}

TEST_CASE("coherent projector goldens") {
    const GroupPoint p = group_point(0.9, 2.1);
    const Matrix q1 = coherent_projector(1, p);
    CHECK(std::abs(q1.trace() - cx(1.0)) < 1e-13);
    CHECK(fro_norm(q1 * q1 - q1) < 1e-13);

    // Spin one-half Bloch form (I + sin t cos f sx + sin t sin f sy + cos t sz)/2.
    const LieBasis basis = su2_basis();
    Matrix bloch = Matrix::identity(2);
    const double st = std::sin(p.theta);
    bloch += basis.E[0] * cx(0.0, -1.0) * cx(st * std::cos(p.phi));
    bloch += basis.E[1] * cx(0.0, -1.0) * cx(st * std::sin(p.phi));
    bloch += basis.E[2] * cx(0.0, -1.0) * cx(std::cos(p.theta));
    bloch *= cx(0.5);
    CHECK(fro_norm(q1 - bloch) < 1e-13);

    for (int n : {1, 2, 5}) {
        const Irrep rep = irrep(n);
        const cx expect(0.0, n * std::cos(p.theta));
        CHECK(std::abs((rep.U[2] * coherent_projector(n, p)).trace() - expect) < 1e-12);
    }

    // The south pole at level one lands on the lowest-weight line.
    const Matrix q_south = coherent_projector(1, group_point(kPi, 0.0));
    CHECK(fro_norm(q_south - Matrix::unit(2, 1, 1)) < 1e-13);
}

TEST_CASE("quadrature moments") {
    const QuadratureGrid grid = quadrature_grid(8);
    double mass = 0.0;
    double first = 0.0;
    double second = 0.0;
    for (int i = 0; i < grid.size(); i++) {
        const double u = std::cos(grid.points[i].theta);
        mass += grid.weights[i];
        first += grid.weights[i] * u;
        second += grid.weights[i] * u * u;
    }
    CHECK(std::abs(mass - 1.0) < 1e-14);
    CHECK(std::abs(first) < 1e-14);
    CHECK(std::abs(second - 1.0 / 3.0) < 1e-14);
}

TEST_CASE("quadrature is exact on symbol products") {
    std::mt19937_64 rng(31);
    const int n = 3, np = 2;
    const Matrix b = random_hermitian(n + 1, rng);
    const Matrix c = random_hermitian(np + 1, rng);
    const BandLimited fb = symbol_covariant(b);
    const BandLimited fc = symbol_covariant(c);

    const auto integrate = [&](const QuadratureGrid& grid) {
        cx total(0.0);
        for (int i = 0; i < grid.size(); i++)
            total += grid.weights[i] * eval(fb, grid.points[i]) * eval(fc, grid.points[i]);
        return total;
    };
    const cx exact = integrate(quadrature_grid(n + np));
    const cx refined = integrate(quadrature_grid(2 * (n + np) + 5));
    CHECK(std::abs(exact - refined) < 1e-13);
}

TEST_CASE("symbol evaluation goldens") {
    const Irrep rep = irrep(1);
    const BandLimited one = symbol_covariant(Matrix::identity(4));
    CHECK(std::abs(eval(one, group_point(0.7, 0.2)) - cx(1.0)) < 1e-13);

    const BandLimited cos_theta = symbol_covariant(rep.U[2] * cx(0.0, -1.0));
    for (double theta : {0.0, 0.6, 1.5, 2.8})
        CHECK(std::abs(eval(cos_theta, group_point(theta, 1.0)) - cx(std::cos(theta))) < 1e-13);

    // Traceless matrices have mean-zero symbols.
    std::mt19937_64 rng(7);
    Matrix b = random_hermitian(4, rng);
    b -= Matrix::identity(4) * (b.trace() / cx(4.0));
    const BandLimited f = symbol_covariant(b);
    const QuadratureGrid grid = quadrature_grid(6);
    cx mean(0.0);
    for (int i = 0; i < grid.size(); i++) mean += grid.weights[i] * eval(f, grid.points[i]);
    CHECK(std::abs(mean) < 1e-14);
}

TEST_CASE("gradient norm goldens") {
    const Irrep rep = irrep(1);
    const BandLimited cos_theta = symbol_covariant(rep.U[2] * cx(0.0, -1.0));
    CHECK(grad_norm(cos_theta, group_point(kPi / 2.0, 0.3)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(grad_norm(cos_theta, group_point(0.0, 0.0)) < 1e-12);

    const BandLimited one = symbol_covariant(Matrix::identity(3));
    CHECK(grad_norm(one, group_point(1.0, 1.0)) < 1e-12);

    Matrix not_herm = Matrix::zero(2, 2);
    not_herm(0, 1) = cx(1.0);
    CHECK_THROWS_AS(grad_norm(symbol_covariant(not_herm), group_point(1.0, 1.0)), NotSelfAdjoint);
}

TEST_CASE("continuous seminorm") {
    const Irrep rep = irrep(1);
    const BandLimited cos_theta = symbol_covariant(rep.U[2] * cx(0.0, -1.0));
    CHECK(std::abs(cont_seminorm(cos_theta) - 2.0) < 1e-6);
    CHECK(cont_seminorm(symbol_covariant(Matrix::identity(5))) < 1e-12);
}

TEST_CASE("symbol equivariance") {
    const int n = 2;
    const Irrep rep = irrep(n);
    const LieBasis basis = su2_basis();
    std::mt19937_64 rng(13);
    const Matrix b = random_hermitian(n + 1, rng);
    const BandLimited original = symbol_covariant(b);

    // Rotating b about the vertical axis shifts the symbol in phi.
    const double t = 0.9;
    const Matrix uz = lift(rep, expm_skew(basis.E[2], 0.5 * t));
    const BandLimited moved_z = symbol_covariant(uz * b * uz.adjoint());
    CHECK(std::abs(eval(moved_z, group_point(1.2, 0.5)) - eval(original, group_point(1.2, 0.5 - t))) < 1e-12);

    // Rotating about the second axis shifts theta along the phi = 0 meridian.
    const double s = 0.5;
    const Matrix uy = lift(rep, expm_skew(basis.E[1], 0.5 * s));
    const BandLimited moved_y = symbol_covariant(uy * b * uy.adjoint());
    CHECK(std::abs(eval(moved_y, group_point(1.2, 0.0)) - eval(original, group_point(1.2 - s, 0.0))) < 1e-12);
}

}  // TEST_SUITE
