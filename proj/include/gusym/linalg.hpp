#pragma once

#include "gusym/types.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace gusym {

/// Eigendecomposition of a Hermitian matrix. Columns of `vectors` are the
/// eigenvectors, paired with `values` in ascending order.
struct HermitianEig {
    RealVector values;
    Matrix vectors;
};

struct JacobiOptions {
    double off_diagonal_threshold = 1e-13;
    int max_sweeps = 100;
    double hermiticity_tolerance = 1e-10;
};

/// Cyclic Jacobi sweeps for complex Hermitian matrices.
///
/// Each rotation first removes the phase of the pivot a_pq so that the
/// (p, q) block is real symmetric, then applies the classical real Jacobi
/// rotation. The sweep loop stops when the off-diagonal Frobenius mass drops
/// below `off_diagonal_threshold` relative to the matrix scale.
inline HermitianEig hermitian_eig(const Matrix& h, const JacobiOptions& opts = {}) {
    if (h.rows() != h.cols())
        throw InvalidArgument("hermitian_eig: matrix is not square");
    const Eigen::Index dim = h.rows();
    const double scale = std::max(1.0, max_abs(h));
    if (hermiticity_residual(h) > opts.hermiticity_tolerance * scale)
        throw InvalidArgument("hermitian_eig: matrix is not Hermitian (residual " +
                              std::to_string(hermiticity_residual(h)) + ")");

    Matrix a = 0.5 * (h + h.adjoint());
    Matrix v = Matrix::Identity(dim, dim);
    const double frob = std::max(a.norm(), 1e-300);

    auto off_norm = [&] {
        double s = 0.0;
        for (Eigen::Index p = 0; p < dim; ++p)
            for (Eigen::Index q = p + 1; q < dim; ++q)
                s += std::norm(a(p, q));
        return std::sqrt(2.0 * s);
    };

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        if (off_norm() <= opts.off_diagonal_threshold * frob)
            break;
        for (Eigen::Index p = 0; p < dim - 1; ++p) {
            for (Eigen::Index q = p + 1; q < dim; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag <= 1e-300 || mag < 1e-18 * frob)
                    continue;
                const Complex phase = a(p, q) / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // G = diag(1, conj(phase)) * [[c, s], [-s, c]] acting on (p, q).
                const Complex g_pp = c;
                const Complex g_pq = s;
                const Complex g_qp = -s * std::conj(phase);
                const Complex g_qq = c * std::conj(phase);
                for (Eigen::Index k = 0; k < dim; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * g_pp + akq * g_qp;
                    a(k, q) = akp * g_pq + akq * g_qq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * g_pp + vkq * g_qp;
                    v(k, q) = vkp * g_pq + vkq * g_qq;
                }
                for (Eigen::Index k = 0; k < dim; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
                    a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEig out{RealVector(dim), Matrix(dim, dim)};
    for (Eigen::Index i = 0; i < dim; ++i) {
        out.values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real();
        out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
    }
    return out;
}

/// Smallest eigenvalue of (h + h†)/2.
inline double min_eigenvalue(const Matrix& h) {
    if (h.rows() == 0)
        return 0.0;
    const Matrix sym = 0.5 * (h + h.adjoint());
    return hermitian_eig(sym).values(0);
}

/// Spectral reconstruction V f(Λ) V†.
template <class F>
Matrix spectral_apply(const HermitianEig& eig, F&& f) {
    const Eigen::Index dim = eig.values.size();
    Matrix diag = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        diag(i, i) = f(eig.values(i));
    return eig.vectors * diag * eig.vectors.adjoint();
}

/// Pseudo-inverse square root on the support of a PSD matrix, plus the
/// projector onto its numerical kernel. Eigenvalues at or below
/// `relative_cutoff * lambda_max` are treated as zero.
struct PinvSqrt {
    Matrix inv_sqrt;
    Matrix kernel_projector;
};

inline PinvSqrt pinv_sqrt(const Matrix& psd, double relative_cutoff = 1e-12) {
    const HermitianEig eig = hermitian_eig(0.5 * (psd + psd.adjoint()));
    const Eigen::Index dim = eig.values.size();
    const double lmax = dim ? std::max(eig.values.maxCoeff(), 0.0) : 0.0;
    const double cutoff = relative_cutoff * lmax;
    PinvSqrt out{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
    for (Eigen::Index i = 0; i < dim; ++i) {
        const Vector col = eig.vectors.col(i);
        if (eig.values(i) > cutoff && eig.values(i) > 0.0)
            out.inv_sqrt += (1.0 / std::sqrt(eig.values(i))) * (col * col.adjoint());
        else
            out.kernel_projector += col * col.adjoint();
    }
    return out;
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
inline double trace_norm(const Matrix& h) {
    return hermitian_eig(0.5 * (h + h.adjoint())).values.cwiseAbs().sum();
}

} // namespace gusym
