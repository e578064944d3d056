#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fzd/bridge.hpp"
#include "fzd/clifford.hpp"
#include "fzd/dirac.hpp"
#include "fzd/matrix.hpp"
#include "fzd/sphere.hpp"
#include "fzd/su2.hpp"

/// Acceptance suite: one criterion per check, one line per criterion,
/// nonzero exit when any line fails. Tolerances are pinned here.

using namespace fzd;

namespace {

int failures = 0;

void report(int number, bool pass, const char* label) {
    std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", number, label);
    std::fflush(stdout);
    if (!pass) failures++;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Matrix random_hermitian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix a(dim, dim);
    for (int r = 0; r < dim; r++) {
        a(r, r) = normal(rng);
        for (int c = r + 1; c < dim; c++) {
            a(r, c) = cx(normal(rng), normal(rng)) * cx(1.0 / std::sqrt(2.0));
            a(c, r) = std::conj(a(r, c));
        }
    }
    return a;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Certified spectra for n <= 12, both spinor orientations, within
/// 1e-9 of the closed-form table and inside a one-minute budget.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n = 1; n <= 12; n++)
        for (int sign : {+1, -1})
            worst = std::max(worst, spectrum(build_dirac(n, sign), kInf).max_deviation);
    const double secs = seconds_since(start);
    char label[160];
    std::snprintf(label, sizeof label,
                  "shifted spectra n <= 12, both signs: max deviation %.2e in %.1f s", worst, secs);
    report(1, worst < 1e-9 && secs < 60.0, label);
}

/// The level Casimir sum U_1^2 + U_2^2 + U_3^2 is the scalar -n(n+2).
void criterion_2() {
    double worst = 0.0;
    for (int n = 0; n <= 12; n++) {
        const Irrep rep = irrep(n);
        Matrix sum = Matrix::zero(n + 1, n + 1);
        for (int j = 0; j < 3; j++) sum += rep.U[j] * rep.U[j];
        worst = std::max(worst,
                         op_norm(sum + Matrix::identity(n + 1) * cx(double(n * (n + 2)))));
    }
    char label[160];
    std::snprintf(label, sizeof label, "scalar Casimir n <= 12: max residual %.2e", worst);
    report(2, worst < 1e-10, label);
}

/// D is (up to an orientation sign) half the difference of Casimirs,
/// and the cross terms expand as the derivation pairing.
void criterion_3() {
    double worst = 0.0;
    bool signs_ok = true;
    int s_plus = 0;
    int s_minus = 0;
    for (int n = 1; n <= 8; n++) {
        const CasimirIdentity id = check_casimir_identity(n);
        worst = std::max(worst, std::max(id.residual, id.pair_expansion_residual));
        if (n == 1) {
            s_plus = id.s_for_sign_plus;
            s_minus = id.s_for_sign_minus;
        }
        signs_ok = signs_ok && std::abs(id.s_for_sign_plus) == 1 &&
                   id.s_for_sign_plus == s_plus && id.s_for_sign_minus == s_minus;
    }
    char label[160];
    std::snprintf(label, sizeof label,
                  "Casimir form n <= 8: max residual %.2e, s(+1)=%d s(-1)=%d", worst, s_plus,
                  s_minus);
    report(3, worst < 1e-10 && signs_ok, label);
}

/// D^2 equals the Casimir plus curvature block decomposition.
void criterion_4() {
    double worst = 0.0;
    for (int n = 1; n <= 8; n++) worst = std::max(worst, check_square(n));
    char label[160];
    std::snprintf(label, sizeof label, "square decomposition n <= 8: max residual %.2e", worst);
    report(4, worst < 1e-10, label);
}

/// Sandwich L_d <= L^D <= 3 L_d and the translation bound
/// L_l <= L^D on random Hermitian inputs, plus the vertical-generator
/// closed forms.
void criterion_5() {
    std::mt19937_64 rng(5);
    bool ok = true;
    double worst_lower = 0.0;
    double worst_upper = 0.0;
    double worst_translation = 0.0;
    for (int n : {1, 2, 4, 6}) {
        const DiracOp d = build_dirac(n, +1);
        const Irrep rep = irrep(n);
        for (int trial = 0; trial < 100; trial++) {
            const Matrix a = random_hermitian(n + 1, rng);
            const double lip = lip_seminorm(d, a);
            const double ld = ld_seminorm(rep, a);
            const double lell = lell_estimate(n, a, 64);
            ok = ok && ld <= lip * (1.0 + 1e-4);
            ok = ok && lip <= 3.0 * ld * (1.0 + 1e-3);
            ok = ok && lell <= lip * (1.0 + 1e-6);
            worst_lower = std::max(worst_lower, ld / lip);
            worst_upper = std::max(worst_upper, lip / (3.0 * ld));
            worst_translation = std::max(worst_translation, lell / lip);
        }
    }
    double worst_golden = 0.0;
    for (int m = 1; m <= 4; m++) {
        const Irrep rep = irrep(m);
        const Matrix vertical = rep.U[2] * cx(0.0, -1.0);
        const double closed =
            (m % 2 == 1) ? 2.0 * (m + 1) : 2.0 * std::sqrt(double(m) * (m + 2));
        worst_golden = std::max(worst_golden, std::abs(lip_seminorm(m, vertical) - closed));
        worst_golden = std::max(worst_golden, std::abs(ld_seminorm(rep, vertical) - 2.0 * m));
    }
    ok = ok && worst_golden < 1e-6;
    char label[200];
    std::snprintf(label, sizeof label,
                  "seminorm sandwich 100x{1,2,4,6}: max ld/lip %.4f, lip/(3 ld) %.4f, "
                  "lell/lip %.4f, golden dev %.2e",
                  worst_lower, worst_upper, worst_translation, worst_golden);
    report(5, ok, label);
}

/// The commutator seminorm does not depend on the spinor orientation
/// and matches the generator-coefficient norm.
void criterion_6() {
    std::mt19937_64 rng(6);
    double worst = 0.0;
    for (int n = 1; n <= 5; n++) {
        const DiracOp plus = build_dirac(n, +1);
        const DiracOp minus = build_dirac(n, -1);
        const Irrep rep = irrep(n);
        for (int trial = 0; trial < 10; trial++) {
            const Matrix a = random_hermitian(n + 1, rng);
            const double lip = lip_seminorm(plus, a);
            worst = std::max(worst, std::abs(lip - lip_seminorm(minus, a)));
            const std::vector<Matrix> coeffs = {commutator(rep.U[0], a),
                                                commutator(rep.U[1], a),
                                                commutator(rep.U[2], a)};
            worst = std::max(worst, std::abs(lip - clifford_norm(coeffs)));
        }
    }
    char label[160];
    std::snprintf(label, sizeof label,
                  "spinor independence, 50 inputs: max deviation %.2e", worst);
    report(6, worst < 1e-9, label);
}

/// Rotation equivariance and the real-structure identities, including
/// the commutation sign of the charge conjugation with D.
void criterion_7() {
    double worst = 0.0;
    bool signs_ok = true;
    int cd_sign = 0;
    for (int n = 1; n <= 6; n++) {
        worst = std::max(worst, check_equivariance(n, 6, 42));
        const FirstOrderReport first = check_first_order(n);
        worst = std::max(worst, first.zeroth_residual);
        worst = std::max(worst, first.first_residual);
        worst = std::max(worst, first.conjugated_right_mult_residual);
        worst = std::max(worst, first.cd_residual);
        signs_ok = signs_ok && std::abs(first.cd_sign) == 1;
        cd_sign = first.cd_sign;
    }
    char label[160];
    std::snprintf(label, sizeof label,
                  "equivariance and real structure n <= 6: max residual %.2e, CD = %+d DC",
                  worst, cd_sign);
    report(7, worst < 1e-9 && signs_ok, label);
}

/// Berezin sector scalars: unital fixed point, the level-1 value 1/3,
/// and a strictly shrinking gap.
void criterion_8() {
    bool ok = true;
    double previous_gap = kInf;
    double gap_first = 0.0;
    double gap_last = 0.0;
    double lambda11 = 0.0;
    for (int m = 1; m <= 8; m++) {
        const BerezinMap map = berezin_map(m);
        ok = ok && std::abs(map.spectrum.eigenvalues[0] - 1.0) < 1e-12;
        ok = ok && map.spectrum.gap() < previous_gap;
        previous_gap = map.spectrum.gap();
        if (m == 1) {
            gap_first = map.spectrum.gap();
            lambda11 = map.spectrum.eigenvalues[1];
        }
        if (m == 8) gap_last = map.spectrum.gap();
    }
    ok = ok && std::abs(lambda11 - 1.0 / 3.0) < 1e-12;
    char label[160];
    std::snprintf(label, sizeof label,
                  "Berezin sectors m <= 8: lambda_1(1)=%.12f, gap %.4f -> %.4f strictly",
                  lambda11, gap_first, gap_last);
    report(8, ok, label);
}

/// Symbol maps contract the seminorms in both directions.
void criterion_9() {
    std::mt19937_64 rng(9);
    bool ok = true;
    double worst_cov = 0.0;
    double worst_contra = 0.0;
    for (int m = 1; m <= 6; m++) {
        const DiracOp d = build_dirac(m, +1);
        const Bridge bridge = make_bridge(m);
        for (int trial = 0; trial < 50; trial++) {
            const Matrix b = random_hermitian(m + 1, rng);
            const BandLimited f = symbol_covariant(b);
            const double lip = lip_seminorm(d, b);
            const double cont = cont_seminorm(f);
            ok = ok && cont <= lip * (1.0 + 1e-6);
            worst_cov = std::max(worst_cov, cont / lip);

            const double lip_back = lip_seminorm(d, symbol_contravariant(f, bridge));
            ok = ok && lip_back <= cont * (1.0 + 1e-6);
            worst_contra = std::max(worst_contra, lip_back / cont);
        }
    }
    char label[160];
    std::snprintf(label, sizeof label,
                  "symbol seminorm contraction, 50 inputs per m <= 6: max cont/lip %.6f, "
                  "max lip(back)/cont %.6f",
                  worst_cov, worst_contra);
    report(9, ok, label);
}

/// The convergence study completes, its trend checks hold, and the
/// height estimate at m = 8 is below half its level-1 value.
void criterion_10() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    double first = 0.0;
    double last = 0.0;
    std::string note;
    try {
        const std::vector<BridgeReport> rows = convergence_study(8, 1, 20260825);
        first = rows.front().delta_hat;
        last = rows.back().delta_hat;
        ok = last < 0.5 * first;
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }
    const double secs = seconds_since(start);
    ok = ok && secs < 600.0;
    char label[200];
    if (note.empty())
        std::snprintf(label, sizeof label,
                      "convergence study m <= 8 (budget 1, seed 20260825): delta %.4f -> %.4f "
                      "in %.1f s",
                      first, last, secs);
    else
        std::snprintf(label, sizeof label, "convergence study threw: %s", note.c_str());
    report(10, ok, label);
}

/// The linking commutator norm splits into the advertised maximum.
void criterion_11() {
    const LinkingOperator link = linking_demo_m4();
    std::mt19937_64 rng(11);
    std::normal_distribution<double> normal(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 50; trial++) {
        Matrix a = Matrix::zero(4, 4);
        for (int i = 0; i < 4; i++) a(i, i) = normal(rng);
        const Matrix b = random_hermitian(4, rng);
        Matrix big = Matrix::zero(16, 16);
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) {
                big(i, j) = a(i, j);
                big(4 + i, 4 + j) = a(i, j);
                big(8 + i, 8 + j) = b(i, j);
                big(12 + i, 12 + j) = b(i, j);
            }
        const double direct = op_norm(link.d_r * big - big * link.d_r);
        worst = std::max(worst, std::abs(direct - link.commutator_norm(a, b)));
    }
    char label[160];
    std::snprintf(label, sizeof label, "linking norm identity, 50 pairs: max deviation %.2e",
                  worst);
    report(11, worst < 1e-10, label);
}

/// Tunnel maps to the band level m + 4: intertwining, contractivity,
/// adjointness, eigenvector transport, and shrinking round-trip
/// defects on the shared low clusters.
void criterion_12() {
    bool ok = true;
    double worst_residual = 0.0;
    double worst_norm = 0.0;
    std::vector<TunnelMaps> maps;
    for (int m = 1; m <= 6; m++) {
        maps.push_back(tunnel_maps(m, m + 4));
        const TunnelMaps& t = maps.back();
        worst_residual = std::max({worst_residual, t.intertwine_a, t.intertwine_b,
                                   t.adjoint_residual, t.transport_residual});
        worst_norm = std::max({worst_norm, t.norm_a, t.norm_b});
    }
    ok = ok && worst_residual < 1e-9 && worst_norm <= 1.0 + 1e-9;
    bool trend = true;
    for (size_t i = 0; i + 1 < maps.size(); i++)
        for (const TunnelCluster& cur : maps[i].low_band)
            for (const TunnelCluster& next : maps[i + 1].low_band)
                if (std::abs(cur.eigenvalue - next.eigenvalue) < 1e-6 &&
                    (cur.contraction_defect > 1e-12 || next.contraction_defect > 1e-12))
                    trend = trend && next.contraction_defect < cur.contraction_defect;
    ok = ok && trend;
    char label[200];
    std::snprintf(label, sizeof label,
                  "tunnels m <= 6, band m + 4: max residual %.2e, max norm %.12f, shared "
                  "cluster defects %s",
                  worst_residual, worst_norm, trend ? "shrink" : "do not shrink");
    report(12, ok, label);
}

/// Shared shifted clusters +-2k keep their multiplicities across
/// levels, read off the computed spectra.
void criterion_13() {
    std::vector<std::map<int, int>> counts(11);
    for (int n = 1; n <= 10; n++) {
        const SpectrumReport rep = spectrum(build_dirac(n, +1), kInf);
        for (double value : rep.shifted_eigenvalues) {
            const int rounded = int(std::lround(value));
            if (std::abs(value - rounded) < 1e-6) counts[n][rounded]++;
        }
    }
    bool ok = true;
    int pairs = 0;
    for (int m = 1; m <= 10; m++)
        for (int mp = m + 1; mp <= 10; mp++)
            for (int k = 1; k <= m; k++) {
                pairs++;
                ok = ok && counts[m][2 * k] == counts[mp][2 * k];
                ok = ok && counts[m][-2 * k] == counts[mp][-2 * k];
            }
    char label[160];
    std::snprintf(label, sizeof label,
                  "cluster multiplicities shared across n <= 10: %d comparisons %s", pairs,
                  ok ? "agree" : "disagree");
    report(13, ok, label);
}

/// Quadrature grids integrate their advertised degree exactly:
/// polar moments and a two-symbol product cross-check.
void criterion_14() {
    double worst = 0.0;
    for (int degree = 0; degree <= 16; degree++) {
        const QuadratureGrid grid = quadrature_grid(degree);
        for (int j = 0; j <= degree; j++) {
            double moment = 0.0;
            for (int x = 0; x < grid.size(); x++)
                moment += grid.weights[x] * std::pow(std::cos(grid.points[x].theta), j);
            const double exact = (j % 2 == 0) ? 1.0 / (j + 1) : 0.0;
            worst = std::max(worst, std::abs(moment - exact));
        }
    }
    std::mt19937_64 rng(14);
    const BandLimited f = symbol_covariant(random_hermitian(5, rng));
    const BandLimited g = symbol_covariant(random_hermitian(5, rng));
    double coarse = 0.0;
    double fine = 0.0;
    for (const QuadratureGrid& grid : {quadrature_grid(8), quadrature_grid(20)}) {
        double sum = 0.0;
        for (int x = 0; x < grid.size(); x++)
            sum += grid.weights[x] * eval(f, grid.points[x]).real() * eval(g, grid.points[x]).real();
        (grid.degree == 8 ? coarse : fine) = sum;
    }
    worst = std::max(worst, std::abs(coarse - fine));
    char label[160];
    std::snprintf(label, sizeof label,
                  "quadrature exactness degree <= 16: max moment error %.2e", worst);
    report(14, worst < 1e-12, label);
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    criterion_14();
    std::printf("acceptance: %d/14 criteria passed in %.1f s\n", 14 - failures,
                seconds_since(start));
    return failures == 0 ? 0 : 1;
}
