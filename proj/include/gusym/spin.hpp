#pragma once

#include "gusym/linalg.hpp"
#include "gusym/types.hpp"

#include <cmath>
#include <string>

// Spin-j operators on the symmetric subspace of n qubits (j = n/2).
// Every matrix and vector uses the descending basis order q = j, j-1, ..., -j.

namespace gusym {

struct SpinOperator {
    int n = 0;
    Matrix matrix;
};

struct UnitaryOperator {
    int n = 0;
    Matrix matrix;
};

/// Eigenbasis of J_y, columns ordered q = j..-j. Each column is phased so that
/// its overlap with the top z-state |j, j> is real and positive.
struct YEigenbasis {
    int n = 0;
    Matrix columns;

    /// Amplitudes <j,q|_y psi> of a z-basis vector.
    Vector overlaps(const Vector& psi_z) const { return columns.adjoint() * psi_z; }
    /// z-basis vector with the given y-basis amplitudes.
    Vector to_z(const Vector& amps_y) const { return columns * amps_y; }
};

inline void require_qubits(int n, const char* where) {
    if (n < 1)
        throw InvalidArgument(std::string(where) + ": qubit count must be >= 1, got " + std::to_string(n));
}

inline SpinOperator jy_matrix(int n) {
    require_qubits(n, "jy_matrix");
    const int dim = n + 1;
    const double j = 0.5 * n;
    Matrix jy = Matrix::Zero(dim, dim);
    // (J_y)_{q+1,q} = -(i/2) sqrt(j(j+1) - q(q+1)); row index idx-1 holds q+1.
    for (int idx = 1; idx < dim; ++idx) {
        const double q = q_of_index(n, idx);
        const double amp = 0.5 * std::sqrt(j * (j + 1.0) - q * (q + 1.0));
        jy(idx - 1, idx) = Complex(0.0, -amp);
        jy(idx, idx - 1) = Complex(0.0, amp);
    }
    return {n, jy};
}

namespace detail {

// Raw eigenvectors of J_y sorted by descending eigenvalue, without phase fixing.
inline Matrix jy_eigenvectors_descending(int n) {
    const HermitianEig eig = hermitian_eig(jy_matrix(n).matrix);
    const int dim = n + 1;
    Matrix cols(dim, dim);
    for (int i = 0; i < dim; ++i)
        cols.col(i) = eig.vectors.col(dim - 1 - i);
    return cols;
}

} // namespace detail

inline YEigenbasis y_eigenbasis(int n) {
    require_qubits(n, "y_eigenbasis");
    const int dim = n + 1;
    const HermitianEig eig = hermitian_eig(jy_matrix(n).matrix);
    YEigenbasis basis{n, Matrix(dim, dim)};
    for (int i = 0; i < dim; ++i) {
        const double expected = q_of_index(n, i);
        const double got = eig.values(dim - 1 - i);
        if (std::abs(got - expected) > 1e-9)
            throw InternalError("y_eigenbasis: J_y spectrum mismatch at q = " + std::to_string(expected));
        Vector col = eig.vectors.col(dim - 1 - i);
        Complex anchor = col(0);
        if (std::abs(anchor) < 1e-14) {
            Eigen::Index arg_max = 0;
            col.cwiseAbs().maxCoeff(&arg_max);
            anchor = col(arg_max);
        }
        col *= std::conj(anchor) / std::abs(anchor);
        col(0) = col(0).real();
        basis.columns.col(i) = col;
    }
    return basis;
}

/// exp(-i angle J_y) built from the J_y spectral decomposition using the exact
/// eigenvalues q.
inline UnitaryOperator rotation_y(int n, double angle) {
    require_qubits(n, "rotation_y");
    if (!std::isfinite(angle))
        throw InvalidArgument("rotation_y: angle must be finite");
    const int dim = n + 1;
    const Matrix vecs = detail::jy_eigenvectors_descending(n);
    Vector phases(dim);
    for (int i = 0; i < dim; ++i)
        phases(i) = std::polar(1.0, -angle * q_of_index(n, i));
    return {n, vecs * phases.asDiagonal() * vecs.adjoint()};
}

/// Closed-form Wigner small-d matrix d^j_{q',q}(angle) = <j,q'| exp(-i angle J_y) |j,q>.
inline RealMatrix wigner_small_d(int n, double angle) {
    require_qubits(n, "wigner_small_d");
    if (!std::isfinite(angle))
        throw InvalidArgument("wigner_small_d: angle must be finite");
    const int dim = n + 1;
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    RealMatrix d(dim, dim);
    // Integer labels: J = 2j = n, row index r gives m' = j - r, column index k gives m = j - k.
    for (int r = 0; r < dim; ++r) {
        for (int k = 0; k < dim; ++k) {
            const int jp_mp = n - r; // j + m'
            const int jm_mp = r;     // j - m'
            const int jp_m = n - k;  // j + m
            const int jm_m = k;      // j - m
            const int mp_minus_m = k - r;
            const double pref = std::sqrt(factorial(jp_mp) * factorial(jm_mp) * factorial(jp_m) * factorial(jm_m));
            double sum = 0.0;
            for (int sidx = 0; sidx <= n; ++sidx) {
                const int a = jp_m - sidx;
                const int b = mp_minus_m + sidx;
                const int e = jm_mp - sidx;
                if (a < 0 || b < 0 || e < 0)
                    continue;
                const double sign = ((mp_minus_m + sidx) % 2 == 0) ? 1.0 : -1.0;
                const int cos_pow = n + r - k - 2 * sidx; // 2j + m - m' - 2s
                const int sin_pow = mp_minus_m + 2 * sidx;
                sum += sign / (factorial(a) * factorial(sidx) * factorial(b) * factorial(e)) * std::pow(c, cos_pow) *
                       std::pow(s, sin_pow);
            }
            d(r, k) = pref * sum;
        }
    }
    return d;
}

} // namespace gusym
