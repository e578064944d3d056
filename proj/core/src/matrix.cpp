#include "fzd/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fzd {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; i++) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::zero(int rows, int cols) { return Matrix(rows, cols); }

Matrix Matrix::unit(int n, int i, int j) {
    Matrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

Matrix Matrix::diag(const std::vector<cx>& entries) {
    Matrix m(int(entries.size()), int(entries.size()));
    for (int i = 0; i < m.rows(); i++) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix r(m_cols, m_rows);
    for (int i = 0; i < m_rows; i++)
        for (int j = 0; j < m_cols; j++) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(m_cols, m_rows);
    for (int i = 0; i < m_rows; i++)
        for (int j = 0; j < m_cols; j++) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::conj() const {
    Matrix r(m_rows, m_cols);
    for (int i = 0; i < m_rows; i++)
        for (int j = 0; j < m_cols; j++) r(i, j) = std::conj((*this)(i, j));
    return r;
}

cx Matrix::trace() const {
    cx t = 0.0;
    for (int i = 0; i < std::min(m_rows, m_cols); i++) t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
        throw DimensionMismatch("matrix add: shape mismatch");
    for (size_t i = 0; i < m_data.size(); i++) m_data[i] += o.m_data[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
        throw DimensionMismatch("matrix sub: shape mismatch");
    for (size_t i = 0; i < m_data.size(); i++) m_data[i] -= o.m_data[i];
    return *this;
}

Matrix& Matrix::operator*=(cx s) {
    for (auto& v : m_data) v *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix mul: shape mismatch");
    Matrix r(a.rows(), b.cols());
    // i-k-j loop order keeps the inner accesses contiguous
    for (int i = 0; i < a.rows(); i++) {
        cx* ri = r.row(i);
        for (int k = 0; k < a.cols(); k++) {
            const cx aik = a(i, k);
            if (aik == cx(0.0)) continue;
            const cx* bk = b.row(k);
            for (int j = 0; j < b.cols(); j++) ri[j] += aik * bk[j];
        }
    }
    return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double fro_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++) s += std::norm(a(i, j));
    return std::sqrt(s);
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double herm_defect(const Matrix& a) {
    if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (int i = 0; i < a.rows(); i++)
        for (int j = i; j < a.cols(); j++)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

double skew_defect(const Matrix& a) {
    if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (int i = 0; i < a.rows(); i++)
        for (int j = i; j < a.cols(); j++)
            m = std::max(m, std::abs(a(i, j) + std::conj(a(j, i))));
    return m;
}

bool is_hermitian(const Matrix& a, double tol) {
    return a.rows() == a.cols() && herm_defect(a) <= tol;
}

bool is_skew_hermitian(const Matrix& a, double tol) {
    return a.rows() == a.cols() && skew_defect(a) <= tol;
}

bool is_unitary(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    Matrix g = a.adjoint() * a;
    for (int i = 0; i < g.rows(); i++) g(i, i) -= 1.0;
    return max_abs(g) <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++) {
            const cx aij = a(i, j);
            if (aij == cx(0.0)) continue;
            for (int k = 0; k < b.rows(); k++)
                for (int l = 0; l < b.cols(); l++)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); i++)
        for (int j = i + 1; j < a.cols(); j++) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

// One cyclic Jacobi sweep over all upper-triangle pivots. The rotation
// J = [[c, s], [-conj(s), c]] with real c annihilates A[p][q] in
// J^H A J; accumulating rows of W keeps W = V^H, so eigenvector k is
// the conjugate of row k on exit.
void jacobi_sweep(Matrix& a, Matrix* w) {
    const int n = a.rows();
    for (int p = 0; p < n - 1; p++) {
        for (int q = p + 1; q < n; q++) {
            const cx apq = a(p, q);
            const double r = std::abs(apq);
            if (r == 0.0) continue;
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double theta = (aqq - app) / (2.0 * r);
            const double t =
                (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const cx s = (t * c) * (apq / r);
            const cx sc = std::conj(s);
            cx* ap = a.row(p);
            cx* aq = a.row(q);
            for (int k = 0; k < n; k++) {
                const cx akp = ap[k], akq = aq[k];
                ap[k] = c * akp - s * akq;
                aq[k] = sc * akp + c * akq;
            }
            for (int k = 0; k < n; k++) {
                const cx apk = a(k, p), aqk = a(k, q);
                a(k, p) = c * apk - sc * aqk;
                a(k, q) = s * apk + c * aqk;
            }
            if (w) {
                cx* wp = w->row(p);
                cx* wq = w->row(q);
                for (int k = 0; k < n; k++) {
                    const cx wkp = wp[k], wkq = wq[k];
                    wp[k] = c * wkp - s * wkq;
                    wq[k] = sc * wkp + c * wkq;
                }
            }
        }
    }
}

constexpr int kMaxSweeps = 60;

void jacobi_diagonalize(Matrix& a, Matrix* w, double eig_tol) {
    const double scale = std::max(fro_norm(a), 1e-300);
    int sweeps = 0;
    while (offdiag_norm(a) > eig_tol * scale) {
        if (++sweeps > kMaxSweeps)
            throw NoConvergence("jacobi: sweep limit reached at dimension " +
                                std::to_string(a.rows()));
        jacobi_sweep(a, w);
    }
}

void check_hermitian_input(const Matrix& h, double herm_tol) {
    if (h.rows() != h.cols()) throw NotHermitian("herm_eig: matrix not square");
    const double defect = herm_defect(h);
    if (defect > herm_tol)
        throw NotHermitian("herm_eig: symmetry defect " + std::to_string(defect));
}

Matrix hermitian_part(const Matrix& h) {
    Matrix a(h.rows(), h.cols());
    for (int i = 0; i < h.rows(); i++)
        for (int j = 0; j < h.cols(); j++)
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    return a;
}

}  // namespace

EigResult herm_eig(const Matrix& h, double herm_tol, double eig_tol) {
    check_hermitian_input(h, herm_tol);
    const int n = h.rows();
    Matrix a = hermitian_part(h);
    Matrix w = Matrix::identity(n);
    jacobi_diagonalize(a, &w, eig_tol);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = Matrix(n, n);
    for (int k = 0; k < n; k++) {
        const int src = order[k];
        res.eigenvalues[k] = a(src, src).real();
        for (int i = 0; i < n; i++) res.eigenvectors(i, k) = std::conj(w(src, i));
    }
    return res;
}

std::vector<double> herm_eigvals(const Matrix& h, double herm_tol, double eig_tol) {
    check_hermitian_input(h, herm_tol);
    Matrix a = hermitian_part(h);
    jacobi_diagonalize(a, nullptr, eig_tol);
    std::vector<double> vals(a.rows());
    for (int i = 0; i < a.rows(); i++) vals[i] = a(i, i).real();
    std::sort(vals.begin(), vals.end());
    return vals;
}

double op_norm(const Matrix& a) {
    if (a.empty()) return 0.0;
    if (a.rows() == a.cols()) {
        if (herm_defect(a) <= kHermTol) {
            auto vals = herm_eigvals(a);
            return std::max(std::abs(vals.front()), std::abs(vals.back()));
        }
        if (skew_defect(a) <= kHermTol) {
            auto vals = herm_eigvals(a * cx(0.0, 1.0));
            return std::max(std::abs(vals.front()), std::abs(vals.back()));
        }
    }
    // general case: largest eigenvalue of the smaller of A^H A / A A^H
    const Matrix& b = a;
    Matrix g = (b.rows() <= b.cols()) ? b * b.adjoint() : b.adjoint() * b;
    auto vals = herm_eigvals(hermitian_part(g));
    return std::sqrt(std::max(0.0, vals.back()));
}

Matrix expm_skew(const Matrix& x, double t) {
    if (x.rows() != x.cols()) throw NotSkewHermitian("expm_skew: matrix not square");
    const double defect = skew_defect(x);
    if (defect > kHermTol)
        throw NotSkewHermitian("expm_skew: symmetry defect " + std::to_string(defect));
    // iX is Hermitian with eigenvalues w; exp(tX) = V diag(exp(-i t w)) V^H
    EigResult eig = herm_eig(x * cx(0.0, 1.0));
    const int n = x.rows();
    Matrix phased = eig.eigenvectors;
    for (int k = 0; k < n; k++) {
        const cx ph = std::exp(cx(0.0, -t * eig.eigenvalues[k]));
        for (int i = 0; i < n; i++) phased(i, k) *= ph;
    }
    return phased * eig.eigenvectors.adjoint();
}

}  // namespace fzd
