#include <chrono>
#include <clocale>
#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <limits>
#include <random>
#include <semaphore>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <fzd/bridge.hpp>
#include <fzd/clifford.hpp>
#include <fzd/dirac.hpp>
#include <fzd/matrix_io.hpp>
#include <fzd/sphere.hpp>
#include <fzd/su2.hpp>

#include "emit.hpp"
#include "run_config.hpp"

/// fuzzy-dirac: command-line front end over the core library. Every
/// subcommand emits one CSV or JSON artifact (stdout or --out) that is
/// byte-identical for a fixed configuration and seed; verification
/// subcommands exit 1 when an assertion exceeds tolerance.

namespace fzd::cli {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string format_int(long long v) { return std::to_string(v); }

/// Self-adjoint matrix with independent normal entries: real normal
/// diagonal, complex normal (re + i im)/sqrt(2) above it.
Matrix random_hermitian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix a = Matrix::zero(dim, dim);
    for (int r = 0; r < dim; r++) {
        a(r, r) = normal(rng);
        for (int c = r + 1; c < dim; c++) {
            const double re = normal(rng);
            const double im = normal(rng);
            a(r, c) = cx(re, im) * cx(1.0 / std::sqrt(2.0));
            a(c, r) = std::conj(a(r, c));
        }
    }
    return a;
}

Matrix random_complex(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix a = Matrix::zero(rows, cols);
    for (int r = 0; r < rows; r++)
        for (int c = 0; c < cols; c++) a(r, c) = cx(normal(rng), normal(rng));
    return a;
}

MetaBlock make_meta(const RunConfig& cfg) {
    MetaBlock meta;
    meta.subcommand = cfg.subcommand;
    meta.seed = cfg.seed;
    meta.tol_eig = cfg.tol_eig;
    meta.tol_id = cfg.tol_id;
    return meta;
}

std::string emit_format(const RunConfig& cfg, const std::string& fallback) {
    return cfg.emit.empty() ? fallback : cfg.emit;
}

int require_level(int value, const std::string& flag) {
    if (value < 0) throw ConfigError(flag + " is required and must be nonnegative");
    return value;
}

/// Loads the matrix input, or draws a seeded random self-adjoint one
/// when no path is configured. Returns the matrix and a description
/// for the artifact header.
std::pair<Matrix, std::string> matrix_input(const RunConfig& cfg, int dim) {
    if (!cfg.matrix_path.empty()) {
        const Matrix a = load_matrix(cfg.matrix_path);
        if (a.rows() != dim || a.cols() != dim) {
            std::ostringstream msg;
            msg << "matrix '" << cfg.matrix_path << "' is " << a.rows() << "x" << a.cols()
                << " but level " << (dim - 1) << " needs " << dim << "x" << dim;
            throw ConfigError(msg.str());
        }
        return {a, cfg.matrix_path};
    }
    std::mt19937_64 rng(cfg.seed);
    return {random_hermitian(dim, rng), "random(" + std::to_string(cfg.seed) + ")"};
}

// ---------------------------------------------------------------- spectrum

void run_spectrum(const RunConfig& cfg) {
    const int n = require_level(cfg.n, "--n");
    const DiracOp d = build_dirac(n, cfg.sign);
    const SpectrumReport report = spectrum(d, std::numeric_limits<double>::infinity());

    MetaBlock meta = make_meta(cfg);
    meta.params = {{"n", format_int(n)}, {"sign", format_int(cfg.sign)}};

    if (emit_format(cfg, "csv") == "csv") {
        std::ostringstream out;
        out << csv_meta(meta);
        out << "eigenvalue,multiplicity,predicted,deviation\n";
        std::size_t offset = 0;
        for (const SpectrumCluster& c : report.clusters) {
            double mean = 0.0;
            for (int i = 0; i < c.multiplicity; i++)
                mean += report.shifted_eigenvalues[offset + i];
            mean /= c.multiplicity;
            offset += c.multiplicity;
            out << format_double(mean) << ',' << c.multiplicity << ','
                << format_double(c.predicted) << ',' << format_double(c.max_deviation) << "\n";
        }
        write_artifact(cfg.out, out.str());
    } else {
        nlohmann::ordered_json j;
        j["meta"] = json_meta(meta);
        j["n"] = report.n;
        j["sign"] = report.sign;
        j["max_deviation"] = report.max_deviation;
        auto clusters = nlohmann::ordered_json::array();
        for (const SpectrumCluster& c : report.clusters)
            clusters.push_back({{"predicted", c.predicted},
                                {"multiplicity", c.multiplicity},
                                {"deviation", c.max_deviation}});
        j["clusters"] = std::move(clusters);
        j["shifted_eigenvalues"] = report.shifted_eigenvalues;
        write_artifact(cfg.out, j.dump(2) + "\n");
    }

    if (!(report.max_deviation < cfg.tol_eig)) {
        std::ostringstream line;
        line << "spectrum: n=" << n << " sign=" << cfg.sign << " max deviation "
             << format_double(report.max_deviation) << " exceeds tol-eig "
             << format_double(cfg.tol_eig);
        throw SuiteFailure({line.str()});
    }
}

// ---------------------------------------------------------------- verify

struct CheckRow {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;

    bool pass() const { return residual <= tolerance; }
};

void run_verify(const RunConfig& cfg) {
    const int n = require_level(cfg.n, "--n");
    std::vector<CheckRow> rows;

    const DiracOp d_plus = build_dirac(n, +1);
    const DiracOp d_minus = build_dirac(n, -1);
    const SpectrumReport sp_plus = spectrum(d_plus, std::numeric_limits<double>::infinity());
    const SpectrumReport sp_minus = spectrum(d_minus, std::numeric_limits<double>::infinity());
    rows.push_back({"spectrum_sign_plus", sp_plus.max_deviation, cfg.tol_eig});
    rows.push_back({"spectrum_sign_minus", sp_minus.max_deviation, cfg.tol_eig});

    const Irrep rep = irrep(n);
    const Matrix casimir_defect =
        casimir_image(rep) + Matrix::identity(n + 1) * cx(double(n) * (n + 2));
    rows.push_back({"casimir_scalar", op_norm(casimir_defect), cfg.tol_id});

    const CasimirIdentity cas = check_casimir_identity(n);
    rows.push_back({"casimir_form", cas.residual, cfg.tol_id});
    rows.push_back({"casimir_pair_expansion", cas.pair_expansion_residual, cfg.tol_id});
    rows.push_back({"square_identity", check_square(n), cfg.tol_id});
    rows.push_back({"equivariance", check_equivariance(n, cfg.trials, cfg.seed), cfg.tol_eig});

    const FirstOrderReport fo = check_first_order(n);
    rows.push_back({"zeroth_order", fo.zeroth_residual, cfg.tol_eig});
    rows.push_back({"first_order", fo.first_residual, cfg.tol_eig});
    rows.push_back({"real_structure_right_mult", fo.conjugated_right_mult_residual, cfg.tol_eig});
    rows.push_back({"charge_conj_commutation", fo.cd_residual, cfg.tol_eig});

    std::mt19937_64 rng(cfg.seed);
    double spinor_dev = 0.0;
    double sandwich_lower = 0.0;
    double sandwich_upper = 0.0;
    double translation_excess = 0.0;
    for (int t = 0; t < 5; t++) {
        const Matrix a = random_hermitian(n + 1, rng);
        const double lip_plus = lip_seminorm(d_plus, a);
        const double lip_minus = lip_seminorm(d_minus, a);
        const double cross = clifford_norm({commutator(rep.U[0], a), commutator(rep.U[1], a),
                                            commutator(rep.U[2], a)});
        spinor_dev = std::max(spinor_dev, std::abs(lip_plus - lip_minus));
        spinor_dev = std::max(spinor_dev, std::abs(lip_plus - cross));

        const double ld = ld_seminorm(rep, a);
        const double lell = lell_estimate(n, a, cfg.samples);
        sandwich_lower = std::max(sandwich_lower, ld - lip_plus * (1.0 + 1e-4));
        sandwich_upper = std::max(sandwich_upper, lip_plus - 3.0 * ld * (1.0 + 1e-3));
        translation_excess = std::max(translation_excess, lell - lip_plus * (1.0 + 1e-6));
    }
    rows.push_back({"spinor_independence", spinor_dev, cfg.tol_eig});
    rows.push_back({"sandwich_lower", std::max(sandwich_lower, 0.0), 0.0});
    rows.push_back({"sandwich_upper", std::max(sandwich_upper, 0.0), 0.0});
    rows.push_back({"translation_bound", std::max(translation_excess, 0.0), 0.0});

    MetaBlock meta = make_meta(cfg);
    meta.params = {{"n", format_int(n)},
                   {"trials", format_int(cfg.trials)},
                   {"cd-sign", format_int(fo.cd_sign)},
                   {"casimir-s-plus", format_int(cas.s_for_sign_plus)},
                   {"casimir-s-minus", format_int(cas.s_for_sign_minus)}};

    if (emit_format(cfg, "csv") == "csv") {
        std::ostringstream out;
        out << csv_meta(meta);
        out << "check,residual,tolerance,status\n";
        for (const CheckRow& row : rows)
            out << row.name << ',' << format_double(row.residual) << ','
                << format_double(row.tolerance) << ',' << (row.pass() ? "ok" : "FAIL") << "\n";
        write_artifact(cfg.out, out.str());
    } else {
        nlohmann::ordered_json j;
        j["meta"] = json_meta(meta);
        j["cd_sign"] = fo.cd_sign;
        j["casimir_s_plus"] = cas.s_for_sign_plus;
        j["casimir_s_minus"] = cas.s_for_sign_minus;
        auto checks = nlohmann::ordered_json::array();
        bool all = true;
        for (const CheckRow& row : rows) {
            checks.push_back({{"name", row.name},
                              {"residual", row.residual},
                              {"tolerance", row.tolerance},
                              {"pass", row.pass()}});
            all = all && row.pass();
        }
        j["checks"] = std::move(checks);
        j["pass"] = all;
        write_artifact(cfg.out, j.dump(2) + "\n");
    }

    std::vector<std::string> failures;
    for (const CheckRow& row : rows)
        if (!row.pass()) {
            std::ostringstream line;
            line << "verify: n=" << n << " " << row.name << " residual "
                 << format_double(row.residual) << " exceeds " << format_double(row.tolerance);
            failures.push_back(line.str());
        }
    if (!failures.empty()) throw SuiteFailure(failures);
}

// ---------------------------------------------------------------- seminorm

void run_seminorm(const RunConfig& cfg) {
    const int n = require_level(cfg.n, "--n");
    const auto [a, source] = matrix_input(cfg, n + 1);

    const DiracOp d_main = build_dirac(n, cfg.sign);
    const DiracOp d_opposite = build_dirac(n, -cfg.sign);
    const Irrep& rep = d_main.rep;
    const double lip = lip_seminorm(d_main, a);
    const double lip_opposite = lip_seminorm(d_opposite, a);
    const double cross = clifford_norm(
        {commutator(rep.U[0], a), commutator(rep.U[1], a), commutator(rep.U[2], a)});
    const double ld = ld_seminorm(rep, a);
    const double lell = lell_estimate(n, a, cfg.samples);

    MetaBlock meta = make_meta(cfg);
    meta.params = {{"n", format_int(n)},
                   {"sign", format_int(cfg.sign)},
                   {"matrix", source},
                   {"samples", format_int(cfg.samples)}};

    if (emit_format(cfg, "csv") == "csv") {
        std::ostringstream out;
        out << csv_meta(meta);
        out << "n,lip,lip_opposite,clifford_cross,ld_estimate,lell_estimate\n";
        out << n << ',' << format_double(lip) << ',' << format_double(lip_opposite) << ','
            << format_double(cross) << ',' << format_double(ld) << ',' << format_double(lell)
            << "\n";
        write_artifact(cfg.out, out.str());
    } else {
        nlohmann::ordered_json j;
        j["meta"] = json_meta(meta);
        j["n"] = n;
        j["lip"] = lip;
        j["lip_opposite"] = lip_opposite;
        j["clifford_cross"] = cross;
        j["ld_estimate"] = ld;
        j["lell_estimate"] = lell;
        write_artifact(cfg.out, j.dump(2) + "\n");
    }
}

// ---------------------------------------------------------------- symbol

void run_symbol(const RunConfig& cfg) {
    if (cfg.matrix_path.empty()) throw ConfigError("symbol: --matrix is required");
    const int n = require_level(cfg.n, "--n");
    const auto [b, source] = matrix_input(cfg, n + 1);
    const BandLimited f = symbol_covariant(b);
    if (!is_hermitian(b)) throw ConfigError("symbol: matrix must be Hermitian (real-valued f)");

    MetaBlock meta = make_meta(cfg);
    meta.params = {{"n", format_int(n)}, {"matrix", source}, {"grid", format_int(cfg.grid)}};

    const int res = cfg.grid;
    if (emit_format(cfg, "csv") == "csv") {
        std::ostringstream out;
        out << csv_meta(meta);
        out << "theta,phi,f,grad_norm\n";
        for (int i = 0; i < res; i++) {
            const double theta = (i + 0.5) * kPi / res;
            for (int j = 0; j < 2 * res; j++) {
                const double phi = j * kPi / res;
                const GroupPoint p = group_point(theta, phi);
                out << format_double(theta) << ',' << format_double(phi) << ','
                    << format_double(eval(f, p).real()) << ',' << format_double(grad_norm(f, p))
                    << "\n";
            }
        }
        write_artifact(cfg.out, out.str());
    } else {
        nlohmann::ordered_json j;
        j["meta"] = json_meta(meta);
        j["level"] = f.level;
        auto rows = nlohmann::ordered_json::array();
        for (int i = 0; i < res; i++) {
            const double theta = (i + 0.5) * kPi / res;
            for (int jj = 0; jj < 2 * res; jj++) {
                const double phi = jj * kPi / res;
                const GroupPoint p = group_point(theta, phi);
                rows.push_back({theta, phi, eval(f, p).real(), grad_norm(f, p)});
            }
        }
        j["rows"] = std::move(rows);
        write_artifact(cfg.out, j.dump(2) + "\n");
    }
}

// ---------------------------------------------------------------- bridge

std::string report_csv_row(const BridgeReport& row) {
    std::ostringstream out;
    out << row.m << ',' << format_double(row.lambda_min) << ',' << format_double(row.gap) << ','
        << format_double(row.gamma_a) << ',' << format_double(row.gamma_b) << ','
        << format_double(row.delta_hat) << ',' << format_double(row.runtime_ms) << "\n";
    return out.str();
}

void run_bridge(const RunConfig& cfg) {
    const int m = require_level(cfg.m, "--m");
    if (m < 1) throw ConfigError("bridge: --m must be at least 1");

    const auto start = std::chrono::steady_clock::now();
    const BerezinMap map = berezin_map(m);
    const ReachEstimate reach = reach_estimate(m, cfg.budget, cfg.seed);
    const HeightEstimate height = height_estimate(m, cfg.budget, cfg.seed);
    const double runtime_ms = std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();

    MetaBlock meta = make_meta(cfg);
    meta.params = {{"m", format_int(m)}, {"budget", format_int(cfg.budget)}};

    if (emit_format(cfg, "json") == "json") {
        nlohmann::ordered_json j;
        j["meta"] = json_meta(meta);
        j["m"] = m;
        j["eigenvalues"] = map.spectrum.eigenvalues;
        j["lambda_min"] = map.spectrum.lambda_min();
        j["gap"] = map.spectrum.gap();
        j["conjugation_residual"] = map.conjugation_residual;
        j["max_sector_variance"] = map.max_sector_variance;
        j["gamma_a"] = reach.gamma_a;
        j["gamma_b"] = reach.gamma_b;
        j["delta_hat"] = height.delta_hat;
        j["sector_surrogate"] = height.sector_surrogate;
        j["runtime_ms"] = runtime_ms;
        write_artifact(cfg.out, j.dump(2) + "\n");
    } else {
        BridgeReport row;
        row.m = m;
        row.lambda_min = map.spectrum.lambda_min();
        row.gap = map.spectrum.gap();
        row.gamma_a = reach.gamma_a;
        row.gamma_b = reach.gamma_b;
        row.delta_hat = height.delta_hat;
        row.runtime_ms = runtime_ms;
        std::ostringstream out;
        out << csv_meta(meta);
        out << "m,lambda_min,gap,gamma_A,gamma_B,delta_hat,runtime_ms\n" << report_csv_row(row);
        write_artifact(cfg.out, out.str());
    }
}

// ---------------------------------------------------------------- converge

void run_converge(const RunConfig& cfg) {
    const int m_max = cfg.m_max;
    if (m_max < 2) throw ConfigError("converge: --m-max is required and must be at least 2");

    std::vector<BridgeReport> rows(m_max);
    if (cfg.threads <= 1) {
        for (int m = 1; m <= m_max; m++) rows[m - 1] = bridge_report(m, cfg.budget, cfg.seed);
    } else {
        // Levels are independent and internally seed their own streams,
        // so the rows are the same under any schedule; assembly is by
        // index.
        std::counting_semaphore<64> slots(std::min(cfg.threads, 64));
        std::vector<std::future<BridgeReport>> futures;
        for (int m = 1; m <= m_max; m++)
            futures.push_back(std::async(std::launch::async, [&, m] {
                slots.acquire();
                BridgeReport row = bridge_report(m, cfg.budget, cfg.seed);
                slots.release();
                return row;
            }));
        for (int m = 1; m <= m_max; m++) rows[m - 1] = futures[m - 1].get();
    }

    MetaBlock meta = make_meta(cfg);
    meta.params = {{"m-max", format_int(m_max)},
                   {"budget", format_int(cfg.budget)},
                   {"threads", format_int(cfg.threads)}};

    if (emit_format(cfg, "csv") == "csv") {
        std::ostringstream out;
        out << csv_meta(meta);
        out << "m,lambda_min,gap,gamma_A,gamma_B,delta_hat,runtime_ms\n";
        for (const BridgeReport& row : rows) out << report_csv_row(row);
        write_artifact(cfg.out, out.str());
    } else {
        nlohmann::ordered_json j;
        j["meta"] = json_meta(meta);
        auto arr = nlohmann::ordered_json::array();
        for (const BridgeReport& row : rows)
            arr.push_back({{"m", row.m},
                           {"lambda_min", row.lambda_min},
                           {"gap", row.gap},
                           {"gamma_a", row.gamma_a},
                           {"gamma_b", row.gamma_b},
                           {"delta_hat", row.delta_hat},
                           {"sector_surrogate", row.sector_surrogate},
                           {"runtime_ms", row.runtime_ms}});
        j["rows"] = std::move(arr);
        write_artifact(cfg.out, j.dump(2) + "\n");
    }

    try {
        check_trends(rows);
    } catch (const std::runtime_error& e) {
        throw SuiteFailure({e.what()});
    }
}

// ---------------------------------------------------------------- linking

void run_linking(const RunConfig& cfg) {
    if (!cfg.demo)
        throw ConfigError("linking: pass --demo (the built-in M4 instance is the only one)");

    const LinkingOperator link = linking_demo_m4();
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    for (int t = 0; t < cfg.pairs; t++) {
        Matrix a = Matrix::zero(link.d, link.d);
        {
            const Matrix diag_draw = random_complex(link.d, 1, rng);
            for (int i = 0; i < link.d; i++) a(i, i) = diag_draw(i, 0);
        }
        const Matrix b = random_complex(link.d, link.d, rng);

        const double direct = link.commutator_norm(a, b);
        const double mid = std::max(op_norm(a * link.omega - link.omega * b),
                                    op_norm(a.adjoint() * link.omega - link.omega * b.adjoint()));
        const double formula = std::max({op_norm(commutator(link.da, a)), mid / link.r,
                                         op_norm(commutator(link.db, b))});
        worst = std::max(worst, std::abs(direct - formula));
    }

    MetaBlock meta = make_meta(cfg);
    meta.params = {{"pairs", format_int(cfg.pairs)}};
    const bool pass = worst <= cfg.tol_id;

    if (emit_format(cfg, "json") == "json") {
        nlohmann::ordered_json j;
        j["meta"] = json_meta(meta);
        j["d"] = link.d;
        j["r"] = link.r;
        j["pairs"] = cfg.pairs;
        j["worst_deviation"] = worst;
        j["pass"] = pass;
        write_artifact(cfg.out, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << csv_meta(meta);
        out << "d,r,pairs,worst_deviation,status\n";
        out << link.d << ',' << format_double(link.r) << ',' << cfg.pairs << ','
            << format_double(worst) << ',' << (pass ? "ok" : "FAIL") << "\n";
        write_artifact(cfg.out, out.str());
    }

    if (!pass) {
        std::ostringstream line;
        line << "linking: worst deviation " << format_double(worst) << " exceeds tol-id "
             << format_double(cfg.tol_id);
        throw SuiteFailure({line.str()});
    }
}

// ---------------------------------------------------------------- irrep

void run_irrep(const RunConfig& cfg) {
    const int n = require_level(cfg.n, "--n");
    if (emit_format(cfg, "json") != "json") throw ConfigError("irrep: only --emit json is available");

    const Irrep rep = irrep(n);
    MetaBlock meta = make_meta(cfg);
    meta.params = {{"n", format_int(n)}};

    nlohmann::ordered_json j;
    j["meta"] = json_meta(meta);
    j["n"] = n;
    j["U"] = {matrix_json(rep.U[0]), matrix_json(rep.U[1]), matrix_json(rep.U[2])};
    j["H"] = matrix_json(rep.H);
    j["E"] = matrix_json(rep.E);
    j["F"] = matrix_json(rep.F);
    j["P"] = matrix_json(rep.P);
    write_artifact(cfg.out, j.dump(2) + "\n");
}

// ---------------------------------------------------------------- driver

void dispatch(const RunConfig& cfg) {
    if (cfg.subcommand == "spectrum")
        run_spectrum(cfg);
    else if (cfg.subcommand == "verify")
        run_verify(cfg);
    else if (cfg.subcommand == "seminorm")
        run_seminorm(cfg);
    else if (cfg.subcommand == "symbol")
        run_symbol(cfg);
    else if (cfg.subcommand == "bridge")
        run_bridge(cfg);
    else if (cfg.subcommand == "converge")
        run_converge(cfg);
    else if (cfg.subcommand == "linking")
        run_linking(cfg);
    else if (cfg.subcommand == "irrep")
        run_irrep(cfg);
    else if (cfg.subcommand.empty())
        throw ConfigError("no subcommand given (flag or 'subcommand = ...' in the config file)");
    else
        throw ConfigError("unknown subcommand '" + cfg.subcommand + "'");
}

int run_main(int argc, char** argv) {
    RunConfig cfg;
    std::string config_path;

    CLI::App app{"Dirac operators, seminorms, and convergence studies for fuzzy spheres"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    app.add_option("--config", config_path, "flat key = value configuration file");
    app.add_option("--seed", cfg.seed, "RNG seed for randomized checks and estimators");
    app.add_option("--tol-eig", cfg.tol_eig, "tolerance for spectral and sampled residuals");
    app.add_option("--tol-id", cfg.tol_id, "tolerance for algebraic identities");
    app.add_option("--emit", cfg.emit, "artifact format: csv or json");
    app.add_option("--out", cfg.out, "artifact path (default stdout)");
    app.add_option("--threads", cfg.threads, "cap on concurrent levels in converge");

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form spectrum check of one level");
    spectrum->add_option("--n", cfg.n, "level");
    spectrum->add_option("--sign", cfg.sign, "spinor choice, +1 or -1");

    CLI::App* verify = app.add_subcommand("verify", "full identity suite for one level");
    verify->add_option("--n", cfg.n, "level");
    verify->add_option("--trials", cfg.trials, "random group elements for equivariance");
    verify->add_option("--samples", cfg.samples, "directions for the translation seminorm");

    CLI::App* seminorm = app.add_subcommand("seminorm", "seminorm table for one matrix");
    seminorm->add_option("--n", cfg.n, "level");
    seminorm->add_option("--sign", cfg.sign, "spinor choice, +1 or -1");
    seminorm->add_option("--matrix", cfg.matrix_path, "matrix input (repo JSON encoding)");
    seminorm->add_option("--samples", cfg.samples, "directions for the translation seminorm");

    CLI::App* symbol = app.add_subcommand("symbol", "covariant symbol field of one matrix");
    symbol->add_option("--n", cfg.n, "level");
    symbol->add_option("--matrix", cfg.matrix_path, "matrix input (repo JSON encoding)");
    symbol->add_option("--grid", cfg.grid, "theta resolution (phi gets twice as many)");

    CLI::App* bridge = app.add_subcommand("bridge", "Berezin spectrum and reach/height estimates");
    bridge->add_option("--m", cfg.m, "level");
    bridge->add_option("--budget", cfg.budget, "ascent budget unit");

    CLI::App* converge = app.add_subcommand("converge", "per-level study with trend assertions");
    converge->add_option("--m-max", cfg.m_max, "top level (rows run m = 1..m-max)");
    converge->add_option("--budget", cfg.budget, "ascent budget unit");

    CLI::App* linking = app.add_subcommand("linking", "linking operator commutator-norm identity");
    linking->add_flag("--demo", cfg.demo, "run the built-in M4 instance");
    linking->add_option("--pairs", cfg.pairs, "random operand pairs");

    CLI::App* irrep_cmd = app.add_subcommand("irrep", "dump generators and the highest-weight projector");
    irrep_cmd->add_option("--n", cfg.n, "level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        for (CLI::App* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

        if (!config_path.empty()) {
            std::vector<std::string> set_keys;
            const auto collect = [&set_keys](const CLI::App* cmd) {
                for (const CLI::Option* opt : cmd->get_options())
                    if (opt->count() > 0 && !opt->get_lnames().empty())
                        set_keys.push_back(opt->get_lnames()[0]);
            };
            collect(&app);
            for (const CLI::App* sub : app.get_subcommands()) collect(sub);
            apply_config_entries(parse_config_file(config_path), set_keys, cfg);
        }

        validate(cfg);
        dispatch(cfg);
        return 0;
    } catch (const SuiteFailure& e) {
        for (const std::string& line : e.failures) std::cerr << line << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace
}  // namespace fzd::cli

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    return fzd::cli::run_main(argc, argv);
}
