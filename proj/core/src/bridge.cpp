#include "fzd/bridge.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fzd {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kAscentSteps = 40;
constexpr double kAscentStart = 0.6;
constexpr double kAscentCooling = 0.96;

std::uint64_t stream_seed(std::uint64_t seed, int index) {
    return seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1));
}

Matrix random_hermitian(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix h(dim, dim);
    for (int i = 0; i < dim; i++) {
        h(i, i) = normal(rng);
        for (int j = i + 1; j < dim; j++) {
            const double re = normal(rng);
            const double im = normal(rng);
            h(i, j) = cx(re, im) * std::sqrt(0.5);
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

Matrix to_vec(const Matrix& b) {
    Matrix v(b.rows() * b.cols(), 1);
    for (int r = 0; r < b.rows(); r++)
        for (int c = 0; c < b.cols(); c++) v(r * b.cols() + c, 0) = b(r, c);
    return v;
}

Matrix from_vec(const Matrix& v, int dim) {
    Matrix b(dim, dim);
    for (int r = 0; r < dim; r++)
        for (int c = 0; c < dim; c++) b(r, c) = v(r * dim + c, 0);
    return b;
}

/// Coherent states xi(theta, phi) = U_{R(theta,phi)} e_0 of one level,
/// cached so that one point costs a few small matrix-vector products.
struct CoherentStates {
    Irrep rep;
    Matrix vectors;
    std::vector<double> freqs;
    Matrix start;

    explicit CoherentStates(int level) : rep(irrep(level)) {
        const EigResult eig = herm_eig(rep.U[1] * cx(0.0, 1.0));
        vectors = eig.eigenvectors;
        freqs = eig.eigenvalues;
        Matrix e0(rep.dim(), 1);
        e0(0, 0) = 1.0;
        start = vectors.adjoint() * e0;
    }

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
};

std::vector<Matrix> node_states(const CoherentStates& cs, const QuadratureGrid& grid) {
    std::vector<Matrix> out;
    out.reserve(grid.points.size());
    for (const auto& p : grid.points) out.push_back(cs.state(p.theta, p.phi));
    return out;
}

/// Derivative-free ascent of `value` over (theta, phi) starting from
/// the best point of the grid; evaluates feasible points only.
template <typename F>
double sup_over_sphere(const QuadratureGrid& grid, F&& value) {
    double best = 0.0;
    double at_theta = 0.0;
    double at_phi = 0.0;
    for (const auto& p : grid.points) {
        const double v = value(p.theta, p.phi);
        if (v > best) {
            best = v;
            at_theta = p.theta;
            at_phi = p.phi;
        }
    }
    double step = kPi / ((grid.degree + 3) / 2 + 1);
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

/// (level+1) sum_x w_x vec(Q_x) vec(Q_x)^H from precomputed states.
Matrix berezin_superop(const std::vector<Matrix>& states, const std::vector<double>& weights,
                       int dim) {
    const int d2 = dim * dim;
    Matrix b = Matrix::zero(d2, d2);
    for (std::size_t x = 0; x < states.size(); x++) {
        const Matrix v = to_vec(states[x] * states[x].adjoint());
        const double scale = dim * weights[x];
        for (int i = 0; i < d2; i++) {
            const cx vi = scale * v(i, 0);
            if (vi == cx(0.0)) continue;
            for (int j = 0; j < d2; j++) b(i, j) += vi * std::conj(v(j, 0));
        }
    }
    return b;
}

struct SectorData {
    std::vector<double> eigenvalues;
    double max_variance = 0.0;
};

SectorData sector_eigenvalues(const Matrix& superop, int level) {
    SectorData out;
    const auto projs = isotypic_projectors(level);
    for (int k = 0; k < static_cast<int>(projs.size()); k++) {
        const double dim_k = 2.0 * k + 1.0;
        const Matrix compressed = projs[k] * superop * projs[k];
        const double lambda = compressed.trace().real() / dim_k;
        out.eigenvalues.push_back(lambda);
        const double variance =
            fro_norm(compressed - projs[k] * cx(lambda)) / std::sqrt(dim_k);
        out.max_variance = std::max(out.max_variance, variance);
    }
    return out;
}

double bridge_norm_impl(const CoherentStates& cs_m, const CoherentStates& cs_f,
                        const QuadratureGrid& grid, const Matrix& fb, const Matrix& b) {
    const Matrix b_adj = b.adjoint();
    const auto value = [&](double theta, double phi) {
        const Matrix xi_f = cs_f.state(theta, phi);
        const cx fval = (xi_f.adjoint() * (fb * xi_f))(0, 0);
        const Matrix xi = cs_m.state(theta, phi);
        return fro_norm(xi * std::conj(fval) - b_adj * xi);
    };
    return sup_over_sphere(grid, value);
}

/// Random-restart hill climb shared by the reach and height
/// estimators: `normalize` maps a candidate onto the seminorm unit
/// sphere (returning false for degenerate input), `objective` scores
/// it.
template <typename N, typename F>
double ascend(int dim, int restarts, std::uint64_t seed, int stream_offset, N&& normalize,
              F&& objective) {
    double best = 0.0;
    for (int rs = 0; rs < restarts; rs++) {
        std::mt19937_64 rng(stream_seed(seed, stream_offset + rs));
        Matrix current = random_hermitian(rng, dim);
        if (!normalize(current)) continue;
        double value = objective(current);
        double sigma = kAscentStart;
        for (int step = 0; step < kAscentSteps; step++) {
            Matrix cand = current + random_hermitian(rng, dim) * cx(sigma);
            if (normalize(cand)) {
                const double v = objective(cand);
                if (v > value) {
                    value = v;
                    current = cand;
                }
            }
            sigma *= kAscentCooling;
        }
        best = std::max(best, value);
    }
    return best;
}

}  // namespace

Bridge make_bridge(int m, int work_level) {
    if (m < 0) throw std::invalid_argument("make_bridge: negative level");
    if (work_level < 0) work_level = m + 4;
    Bridge bridge;
    bridge.m = m;
    bridge.work_level = work_level;
    bridge.grid = quadrature_grid(2 * m + work_level);
    return bridge;
}

Matrix symbol_contravariant(const BandLimited& f, const Bridge& bridge) {
    if (f.level + bridge.m > bridge.grid.degree) {
        std::ostringstream msg;
        msg << "symbol_contravariant: grid degree " << bridge.grid.degree
            << " cannot integrate level " << f.level << " against level " << bridge.m;
        throw DegreeOverflow(msg.str());
    }
    const CoherentStates cs_m(bridge.m);
    const CoherentStates cs_f(f.level);
    const int dim = bridge.m + 1;
    Matrix out = Matrix::zero(dim, dim);
    for (int x = 0; x < bridge.grid.size(); x++) {
        const auto& p = bridge.grid.points[x];
        const Matrix xi_f = cs_f.state(p.theta, p.phi);
        const cx fval = (xi_f.adjoint() * (f.b * xi_f))(0, 0);
        const Matrix xi = cs_m.state(p.theta, p.phi);
        out += (xi * xi.adjoint()) * (fval * (dim * bridge.grid.weights[x]));
    }
    return out;
}

Matrix symbol_contravariant(const BandLimited& f, int m) {
    if (m < 0) throw std::invalid_argument("symbol_contravariant: negative level");
    Bridge bridge;
    bridge.m = m;
    bridge.work_level = f.level;
    bridge.grid = quadrature_grid(f.level + m);
    return symbol_contravariant(f, bridge);
}

double BerezinSpectrum::gap() const {
    return eigenvalues.size() > 1 ? 1.0 - eigenvalues[1] : 0.0;
}

double BerezinSpectrum::lambda_min() const {
    return *std::min_element(eigenvalues.begin(), eigenvalues.end());
}

BerezinMap berezin_map(int m) {
    if (m < 1) throw std::invalid_argument("berezin_map: level must be positive");
    const QuadratureGrid grid = quadrature_grid(2 * m);
    const CoherentStates cs(m);
    const auto states = node_states(cs, grid);

    BerezinMap map;
    map.op = berezin_superop(states, grid.weights, m + 1);

    const LieBasis basis = su2_basis();
    std::mt19937_64 rng(0x62657265u);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    for (int trial = 0; trial < 10; trial++) {
        std::array<double, 3> x{};
        double norm = 0.0;
        do {
            for (double& c : x) c = normal(rng);
            norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        } while (norm < 1e-8);
        Matrix spin = Matrix::zero(2, 2);
        for (int j = 0; j < 3; j++) spin += basis.E[j] * (x[j] / norm);
        const Matrix action = conjugation(cs.rep, expm_skew(spin, angle(rng)));
        map.conjugation_residual = std::max(
            map.conjugation_residual, fro_norm(map.op * action - action * map.op));
    }
    if (map.conjugation_residual > 1e-9) {
        std::ostringstream msg;
        msg << "berezin_map: transform does not commute with conjugations (residual "
            << map.conjugation_residual << ")";
        throw SectorNotScalar(msg.str());
    }

    const SectorData sectors = sector_eigenvalues(map.op, m);
    map.max_sector_variance = sectors.max_variance;
    if (map.max_sector_variance > 1e-10) {
        std::ostringstream msg;
        msg << "berezin_map: within-sector variance " << map.max_sector_variance;
        throw SectorNotScalar(msg.str());
    }
    map.spectrum.m = m;
    map.spectrum.eigenvalues = sectors.eigenvalues;
    return map;
}

double bridge_norm(const Bridge& bridge, const BandLimited& f, const Matrix& b) {
    if (b.rows() != bridge.m + 1 || b.cols() != bridge.m + 1)
        throw DimensionMismatch("bridge_norm: b must live at the bridge level");
    const CoherentStates cs_m(bridge.m);
    const CoherentStates cs_f(f.level);
    return bridge_norm_impl(cs_m, cs_f, bridge.grid, f.b, b);
}

double bridge_norm(int m, const BandLimited& f, const Matrix& b) {
    return bridge_norm(make_bridge(m, std::max(f.level - m, 0) + m), f, b);
}

ReachEstimate reach_estimate(int m, int budget, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("reach_estimate: level must be positive");
    if (budget < 1) throw std::invalid_argument("reach_estimate: budget must be positive");
    const Bridge bridge = make_bridge(m);
    const DiracOp dirac = build_dirac(m, +1);
    const CoherentStates cs_m(m);
    const CoherentStates cs_work(bridge.work_level);
    const int restarts = 3 * budget;

    ReachEstimate est;

    est.gamma_b = ascend(
        m + 1, restarts, seed, 0,
        [&](Matrix& b) {
            const double norm = lip_seminorm(dirac, b);
            if (norm < 1e-12) return false;
            b *= cx(1.0 / norm);
            return true;
        },
        [&](const Matrix& b) { return bridge_norm_impl(cs_m, cs_m, bridge.grid, b, b); });

    est.gamma_a = ascend(
        bridge.work_level + 1, restarts, seed, restarts,
        [&](Matrix& fb) {
            const double norm = cont_seminorm(symbol_covariant(fb));
            if (norm < 1e-12) return false;
            fb *= cx(1.0 / norm);
            return true;
        },
        [&](const Matrix& fb) {
            const BandLimited f = symbol_covariant(fb);
            Matrix b = symbol_contravariant(f, bridge);
            const double lip = lip_seminorm(dirac, b);
            if (lip > 1.0) b *= cx(1.0 / lip);
            return bridge_norm_impl(cs_m, cs_work, bridge.grid, fb, b);
        });

    return est;
}

HeightEstimate height_estimate(int m, int budget, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("height_estimate: level must be positive");
    if (budget < 1) throw std::invalid_argument("height_estimate: budget must be positive");
    const BerezinMap map = berezin_map(m);
    const Irrep rep = irrep(m);
    const int dim = m + 1;
    const Matrix residual_map = Matrix::identity(dim * dim) - map.op;

    Matrix best_b = Matrix::zero(dim, dim);
    double best = 0.0;
    const auto objective = [&](const Matrix& b) {
        return op_norm(from_vec(residual_map * to_vec(b), dim));
    };
    const int restarts = 3 * budget;
    for (int rs = 0; rs < restarts; rs++) {
        std::mt19937_64 rng(stream_seed(seed, rs));
        Matrix current = random_hermitian(rng, dim);
        double norm = ld_seminorm(rep, current);
        if (norm < 1e-12) continue;
        current *= cx(1.0 / norm);
        double value = objective(current);
        double sigma = kAscentStart;
        for (int step = 0; step < kAscentSteps; step++) {
            Matrix cand = current + random_hermitian(rng, dim) * cx(sigma);
            norm = ld_seminorm(rep, cand);
            if (norm > 1e-12) {
                cand *= cx(1.0 / norm);
                const double v = objective(cand);
                if (v > value) {
                    value = v;
                    current = cand;
                }
            }
            sigma *= kAscentCooling;
        }
        if (value > best) {
            best = value;
            best_b = current;
        }
    }

    HeightEstimate est;
    est.delta_hat = best;
    const auto projs = isotypic_projectors(m);
    for (int k = 0; k < static_cast<int>(projs.size()); k++) {
        const Matrix component = from_vec(projs[k] * to_vec(best_b), dim);
        est.sector_surrogate =
            std::max(est.sector_surrogate,
                     (1.0 - map.spectrum.eigenvalues[k]) * op_norm(component));
    }
    return est;
}

namespace {

void set_block(Matrix& target, int row, int col, const Matrix& block) {
    for (int i = 0; i < block.rows(); i++)
        for (int j = 0; j < block.cols(); j++) target(row + i, col + j) = block(i, j);
}

}  // namespace

double LinkingOperator::commutator_norm(const Matrix& a, const Matrix& b) const {
    if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d)
        throw DimensionMismatch("commutator_norm: operands must match the container");
    Matrix pair_action = Matrix::zero(4 * d, 4 * d);
    set_block(pair_action, 0, 0, a);
    set_block(pair_action, d, d, a);
    set_block(pair_action, 2 * d, 2 * d, b);
    set_block(pair_action, 3 * d, 3 * d, b);
    return op_norm(commutator(d_r, pair_action));
}

LinkingOperator linking_dirac(const std::vector<Matrix>& a_basis,
                              const std::vector<Matrix>& b_basis, const Matrix& omega, double r,
                              const Matrix& da, const Matrix& db) {
    if (omega.rows() != omega.cols() || omega.rows() == 0)
        throw BadPivot("linking_dirac: pivot must be a square matrix");
    const int d = omega.rows();
    if (!(r > 0.0)) throw BadPivot("linking_dirac: r must be positive");
    if (herm_defect(omega) > 1e-10) throw BadPivot("linking_dirac: pivot not self-adjoint");
    const auto eigs = herm_eigvals(omega);
    const double norm = std::max(std::abs(eigs.front()), std::abs(eigs.back()));
    if (std::abs(norm - 1.0) > 1e-10) throw BadPivot("linking_dirac: pivot norm is not 1");
    double dist_to_one = 1.0;
    for (double e : eigs) dist_to_one = std::min(dist_to_one, std::abs(e - 1.0));
    if (dist_to_one > 1e-10) throw BadPivot("linking_dirac: 1 is not in the pivot spectrum");
    if (da.rows() != d || da.cols() != d || db.rows() != d || db.cols() != d)
        throw BadPivot("linking_dirac: DA and DB must match the container dimension");
    if (herm_defect(da) > 1e-10 || herm_defect(db) > 1e-10)
        throw BadPivot("linking_dirac: DA and DB must be Hermitian");
    for (const auto& x : a_basis)
        if (x.rows() != d || x.cols() != d)
            throw BadPivot("linking_dirac: A basis element of wrong dimension");
    for (const auto& x : b_basis)
        if (x.rows() != d || x.cols() != d)
            throw BadPivot("linking_dirac: B basis element of wrong dimension");

    LinkingOperator link;
    link.d = d;
    link.a_basis = a_basis;
    link.b_basis = b_basis;
    link.omega = omega;
    link.r = r;
    link.da = da;
    link.db = db;

    link.d_omega = Matrix::zero(2 * d, 2 * d);
    set_block(link.d_omega, 0, d, omega);
    set_block(link.d_omega, d, 0, omega);

    link.d_r = Matrix::zero(4 * d, 4 * d);
    set_block(link.d_r, 0, 0, da);
    const Matrix scaled = omega * cx(1.0 / r);
    set_block(link.d_r, d, 2 * d, scaled);
    set_block(link.d_r, 2 * d, d, scaled);
    set_block(link.d_r, 3 * d, 3 * d, db);
    return link;
}

LinkingOperator linking_demo_m4() {
    const int d = 4;
    std::vector<Matrix> a_basis;
    for (int k = 0; k < d; k++) a_basis.push_back(Matrix::unit(d, k, k));
    std::vector<Matrix> b_basis;
    for (int i = 0; i < d; i++)
        for (int j = 0; j < d; j++) b_basis.push_back(Matrix::unit(d, i, j));

    Matrix omega(d, d);
    for (int i = 0; i < d; i++)
        for (int j = 0; j < d; j++) omega(i, j) = 0.25;

    Matrix da = Matrix::diag({cx(0.0), cx(1.0), cx(2.0), cx(3.0)});
    Matrix db = Matrix::diag({cx(1.0), cx(-1.0), cx(2.0), cx(0.0)});
    for (int i = 0; i + 1 < d; i++) {
        db(i, i + 1) = 1.0;
        db(i + 1, i) = 1.0;
    }
    return linking_dirac(a_basis, b_basis, omega, 0.5, da, db);
}

TunnelMaps tunnel_maps(int m, int band_level, double band) {
    if (m < 1) throw std::invalid_argument("tunnel_maps: level must be positive");
    if (band_level < m) {
        std::ostringstream msg;
        msg << "tunnel_maps: band level " << band_level << " cannot hold level " << m;
        throw BandTooSmall(msg.str());
    }

    const QuadratureGrid grid = quadrature_grid(2 * band_level);
    const CoherentStates cs_m(m);
    const CoherentStates cs_band(band_level);
    const auto states_m = node_states(cs_m, grid);
    const auto states_band = node_states(cs_band, grid);
    const int dm = m + 1;
    const int dband = band_level + 1;
    const int d2m = dm * dm;
    const int d2band = dband * dband;

    // x_map = sigma^B_band o sigma^A_m, y_map = sigma^B_m o sigma^A_band,
    // assembled from rank-1 node contributions.
    Matrix x_map = Matrix::zero(d2band, d2m);
    Matrix y_map = Matrix::zero(d2m, d2band);
    for (int x = 0; x < grid.size(); x++) {
        const Matrix qm = states_m[x] * states_m[x].adjoint();
        const Matrix qband = states_band[x] * states_band[x].adjoint();
        const Matrix vm = to_vec(qm);
        const Matrix vm_t = to_vec(qm.transpose());
        const Matrix vband = to_vec(qband);
        const Matrix vband_t = to_vec(qband.transpose());
        const double w = grid.weights[x];
        for (int i = 0; i < d2band; i++) {
            const cx left = dband * w * vband(i, 0);
            if (left == cx(0.0)) continue;
            for (int j = 0; j < d2m; j++) x_map(i, j) += left * vm_t(j, 0);
        }
        for (int i = 0; i < d2m; i++) {
            const cx left = dm * w * vm(i, 0);
            if (left == cx(0.0)) continue;
            for (int j = 0; j < d2band; j++) y_map(i, j) += left * vband_t(j, 0);
        }
    }

    const Matrix berezin_band = berezin_superop(states_band, grid.weights, dband);
    const SectorData band_sectors = sector_eigenvalues(berezin_band, band_level);
    const auto projs_band = isotypic_projectors(band_level);
    const auto projs_m = isotypic_projectors(m);

    // Sector k of the band level damps symbols by its Berezin factor;
    // undoing it makes theta_a represent the symbol of b exactly, and
    // the matching correction on y_map makes theta_b the adjoint of
    // theta_a for the trace-normalized inner products.
    Matrix r_map = Matrix::zero(d2band, d2m);
    Matrix y_corrected = Matrix::zero(d2m, d2band);
    for (int k = 0; k <= m; k++) {
        const cx inv_factor(1.0 / band_sectors.eigenvalues[k]);
        r_map += (projs_band[k] * x_map * projs_m[k]) * inv_factor;
        y_corrected += (projs_m[k] * y_map * projs_band[k]) * inv_factor;
    }

    TunnelMaps maps;
    maps.m = m;
    maps.band_level = band_level;
    const Matrix id2 = Matrix::identity(2);
    maps.theta_a = kron(r_map, id2);
    maps.theta_b = kron(y_corrected, id2);

    const Matrix dirac_m = build_dirac(m, +1).matrix;
    const Matrix dirac_band = build_dirac(band_level, +1).matrix;
    maps.intertwine_a = op_norm(dirac_band * maps.theta_a - maps.theta_a * dirac_m);
    maps.intertwine_b = op_norm(dirac_m * maps.theta_b - maps.theta_b * dirac_band);
    maps.norm_a = op_norm(maps.theta_a) * std::sqrt(double(dm) / dband);
    maps.norm_b = op_norm(maps.theta_b) * std::sqrt(double(dband) / dm);

    std::mt19937_64 rng(0x7475756eu);
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto random_vec = [&](int dim) {
        Matrix v(dim, 1);
        for (int i = 0; i < dim; i++) v(i, 0) = cx(normal(rng), normal(rng));
        return v;
    };
    for (int trial = 0; trial < 20; trial++) {
        const Matrix eta = random_vec(2 * d2m);
        const Matrix xi = random_vec(2 * d2band);
        const cx lhs = ((maps.theta_a * eta).adjoint() * xi)(0, 0) / double(dband);
        const cx rhs = (eta.adjoint() * (maps.theta_b * xi))(0, 0) / double(dm);
        const double scale =
            (fro_norm(eta) / std::sqrt(double(dm))) * (fro_norm(xi) / std::sqrt(double(dband)));
        maps.adjoint_residual = std::max(maps.adjoint_residual, std::abs(lhs - rhs) / scale);
    }

    const EigResult eig = herm_eig(dirac_m);
    std::map<long, TunnelCluster> clusters;
    for (int i = 0; i < 2 * d2m; i++) {
        Matrix v(2 * d2m, 1);
        for (int r = 0; r < 2 * d2m; r++) v(r, 0) = eig.eigenvectors(r, i);
        const double lambda = eig.eigenvalues[i];
        const Matrix image = maps.theta_a * v;
        const double image_norm = fro_norm(image);
        if (image_norm > 1e-8) {
            maps.transport_residual =
                std::max(maps.transport_residual,
                         fro_norm(dirac_band * image - image * cx(lambda)) / image_norm);
        }
        if (std::abs(lambda) <= band + 1e-9) {
            const double defect = fro_norm(v - maps.theta_b * image);
            auto& cluster = clusters[std::lround(lambda)];
            cluster.eigenvalue = double(std::lround(lambda));
            cluster.multiplicity += 1;
            cluster.contraction_defect = std::max(cluster.contraction_defect, defect);
        }
    }
    for (const auto& [key, cluster] : clusters) maps.low_band.push_back(cluster);
    return maps;
}

BridgeReport bridge_report(int m, int budget, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const BerezinMap map = berezin_map(m);
    const ReachEstimate reach = reach_estimate(m, budget, seed);
    const HeightEstimate height = height_estimate(m, budget, seed);
    const auto elapsed = std::chrono::steady_clock::now() - start;

    BridgeReport row;
    row.m = m;
    row.lambda_min = map.spectrum.lambda_min();
    row.gap = map.spectrum.gap();
    row.gamma_a = reach.gamma_a;
    row.gamma_b = reach.gamma_b;
    row.delta_hat = height.delta_hat;
    row.sector_surrogate = height.sector_surrogate;
    row.runtime_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
    return row;
}

void check_trends(const std::vector<BridgeReport>& rows) {
    for (std::size_t i = 1; i < rows.size(); i++) {
        std::ostringstream msg;
        if (!(rows[i].gap < rows[i - 1].gap)) {
            msg << "check_trends: gap trend violated at m=" << rows[i].m;
            throw std::runtime_error(msg.str());
        }
        if (!(rows[i].delta_hat < rows[i - 1].delta_hat)) {
            msg << "check_trends: height trend violated at m=" << rows[i].m;
            throw std::runtime_error(msg.str());
        }
        if (!(rows[i].gamma_b <= rows[i - 1].gamma_b * 1.05) ||
            !(rows[i].gamma_a <= rows[i - 1].gamma_a * 1.05)) {
            msg << "check_trends: reach trend violated at m=" << rows[i].m;
            throw std::runtime_error(msg.str());
        }
    }
}

std::vector<BridgeReport> convergence_study(int m_max, int budget, std::uint64_t seed) {
    if (m_max < 2) throw std::invalid_argument("convergence_study: need m_max >= 2");
    std::vector<BridgeReport> rows;
    for (int m = 1; m <= m_max; m++) rows.push_back(bridge_report(m, budget, seed));
    check_trends(rows);
    return rows;
}

}  // namespace fzd
