#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

/// Dense complex matrix kernels: Hermitian eigendecomposition (cyclic
/// Jacobi), operator norm, Kronecker products, and the exponential of
/// skew-Hermitian matrices. Everything downstream builds on these.

namespace fzd {

using cx = std::complex<double>;

/// Input fails the Hermitian symmetry tolerance.
struct NotHermitian : std::runtime_error {
    explicit NotHermitian(const std::string& what) : std::runtime_error(what) {}
};

/// Input fails the skew-Hermitian symmetry tolerance.
struct NotSkewHermitian : std::runtime_error {
    explicit NotSkewHermitian(const std::string& what) : std::runtime_error(what) {}
};

/// Jacobi sweep limit exceeded before the off-diagonal mass dropped
/// below tolerance.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes are incompatible.
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Default tolerance for deciding Hermitian / skew-Hermitian / unitary inputs.
inline constexpr double kHermTol = 1e-10;
/// Relative off-diagonal stop for the Jacobi eigensolver.
inline constexpr double kEigTol = 1e-11;

/// Dense complex matrix, row-major storage, value semantics.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : m_rows(rows), m_cols(cols), m_data(size_t(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols);
    /// Matrix unit e_{ij} of the given square dimension.
    static Matrix unit(int n, int i, int j);
    /// Diagonal matrix from the given entries.
    static Matrix diag(const std::vector<cx>& entries);

    int rows() const { return m_rows; }
    int cols() const { return m_cols; }
    bool empty() const { return m_data.empty(); }

    cx& operator()(int i, int j) { return m_data[size_t(i) * m_cols + j]; }
    const cx& operator()(int i, int j) const { return m_data[size_t(i) * m_cols + j]; }

    cx* data() { return m_data.data(); }
    const cx* data() const { return m_data.data(); }
    /// Pointer to the start of row i.
    cx* row(int i) { return m_data.data() + size_t(i) * m_cols; }
    const cx* row(int i) const { return m_data.data() + size_t(i) * m_cols; }

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conj() const;
    cx trace() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cx s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cx s) { return a *= s; }
    friend Matrix operator*(cx s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= cx(-1.0); }
    /// Matrix product.
    friend Matrix operator*(const Matrix& a, const Matrix& b);

  private:
    int m_rows = 0;
    int m_cols = 0;
    std::vector<cx> m_data;
};

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Frobenius norm.
double fro_norm(const Matrix& a);
/// Largest entry magnitude.
double max_abs(const Matrix& a);
/// max_ij |a_ij - a*_ji|, the deviation from Hermitian symmetry.
double herm_defect(const Matrix& a);
/// max_ij |a_ij + a*_ji|, the deviation from skew-Hermitian symmetry.
double skew_defect(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol = kHermTol);
bool is_skew_hermitian(const Matrix& a, double tol = kHermTol);
bool is_unitary(const Matrix& a, double tol = kHermTol);

/// Kronecker product: (A (x) B)[i*rB+k, j*cB+l] = A[i,j] * B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

struct EigResult {
    std::vector<double> eigenvalues;  ///< ascending
    Matrix eigenvectors;              ///< unitary, column k pairs with eigenvalue k
};

/// Full Hermitian eigendecomposition by cyclic Jacobi rotations.
/// Throws NotHermitian if the symmetry defect exceeds herm_tol, and
/// NoConvergence if the sweep limit is reached.
EigResult herm_eig(const Matrix& h, double herm_tol = kHermTol, double eig_tol = kEigTol);

/// Eigenvalues only (ascending); skips eigenvector accumulation.
std::vector<double> herm_eigvals(const Matrix& h, double herm_tol = kHermTol,
                                 double eig_tol = kEigTol);

/// Largest singular value. Hermitian and skew-Hermitian inputs take the
/// direct eigenvalue route; everything else goes through A^H A.
double op_norm(const Matrix& a);

/// exp(t X) for skew-Hermitian X, computed from the eigendecomposition
/// of i X. Throws NotSkewHermitian.
Matrix expm_skew(const Matrix& x, double t = 1.0);

}  // namespace fzd
