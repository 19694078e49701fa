#pragma once

#include "gusym/ensemble.hpp"
#include "gusym/linalg.hpp"
#include "gusym/types.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gusym {

inline constexpr double kCompletePovmTolerance = 1e-8;

struct Povm {
    int dimension = 0;
    std::vector<Matrix> elements;

    Matrix sum() const {
        Matrix s = Matrix::Zero(dimension, dimension);
        for (const auto& e : elements)
            s += e;
        return s;
    }
    double completeness_residual() const { return gusym::completeness_residual(sum()); }
    bool is_complete(double tol = kCompletePovmTolerance) const { return completeness_residual() <= tol; }
    double min_element_eigenvalue() const {
        double lo = 0.0;
        bool first = true;
        for (const auto& e : elements) {
            const double v = min_eigenvalue(e);
            lo = first ? v : std::min(lo, v);
            first = false;
        }
        return lo;
    }
    std::size_t size() const { return elements.size(); }
};

inline Povm uniform_guess_povm(int dimension, int outcomes) {
    Povm p{dimension, {}};
    for (int k = 0; k < outcomes; ++k)
        p.elements.push_back(Matrix::Identity(dimension, dimension) / static_cast<double>(outcomes));
    return p;
}

namespace detail {

inline void check_shapes(std::span<const Matrix> states, std::span<const double> priors, const Povm& povm) {
    if (states.size() != priors.size())
        throw InvalidArgument("state and prior counts differ");
    if (states.size() != povm.elements.size())
        throw InvalidArgument("POVM has " + std::to_string(povm.elements.size()) + " elements for " +
                              std::to_string(states.size()) + " states");
    for (const auto& s : states)
        if (s.rows() != povm.dimension || s.cols() != povm.dimension)
            throw InvalidArgument("state dimension does not match POVM dimension");
    for (const auto& e : povm.elements)
        if (e.rows() != povm.dimension || e.cols() != povm.dimension)
            throw InvalidArgument("POVM element has the wrong shape");
}

} // namespace detail

/// sum_k p_k Tr(rho_k Pi_k).
inline double success_probability(std::span<const Matrix> states, std::span<const double> priors, const Povm& povm) {
    detail::check_shapes(states, priors, povm);
    Complex total = 0.0;
    for (std::size_t k = 0; k < states.size(); ++k)
        total += priors[k] * (states[k] * povm.elements[k]).trace();
    if (std::abs(total.imag()) > 1e-12)
        throw InternalError("success_probability: imaginary part " + std::to_string(total.imag()));
    return total.real();
}

inline double success_probability(const GUEnsemble& ens, const Povm& povm) {
    const auto priors = ens.priors();
    return success_probability(ens.states, priors, povm);
}

/// Optimality report for a measurement: M = sum_i p_i rho_i Pi_i must satisfy
/// M - p_j rho_j >= 0 and Pi_j (M - p_j rho_j) = 0 for every j.
struct HelstromCertificate {
    Matrix M;
    double helstrom_ratio = 0.0; // Tr M
    double hermiticity_residual = 0.0;
    std::vector<double> min_eigenvalues;
    std::vector<double> kernel_residuals;
    std::optional<double> commutator_norm;
    double tolerance = 0.0;
    bool pass = false;

    double worst_min_eigenvalue() const {
        return min_eigenvalues.empty() ? 0.0 : *std::min_element(min_eigenvalues.begin(), min_eigenvalues.end());
    }
    double worst_kernel_residual() const {
        return kernel_residuals.empty() ? 0.0 : *std::max_element(kernel_residuals.begin(), kernel_residuals.end());
    }
};

/// tau_j is taken as M - p_j rho_j without the (p - p_j) normalisation; both
/// conditions are scale invariant. Kernel residuals are Frobenius norms.
inline HelstromCertificate helstrom_certificate(std::span<const Matrix> states, std::span<const double> priors,
                                                const Povm& povm, double tol = 1e-9,
                                                const Matrix* generator = nullptr) {
    detail::check_shapes(states, priors, povm);
    if (!povm.is_complete())
        throw InvalidArgument("helstrom_certificate: POVM is incomplete (residual " +
                              std::to_string(povm.completeness_residual()) + ")");
    HelstromCertificate cert;
    cert.tolerance = tol;
    cert.M = Matrix::Zero(povm.dimension, povm.dimension);
    for (std::size_t i = 0; i < states.size(); ++i)
        cert.M += priors[i] * states[i] * povm.elements[i];
    cert.helstrom_ratio = cert.M.trace().real();
    cert.hermiticity_residual = gusym::hermiticity_residual(cert.M);
    const Matrix m_sym = 0.5 * (cert.M + cert.M.adjoint());
    bool ok = cert.hermiticity_residual <= tol;
    for (std::size_t j = 0; j < states.size(); ++j) {
        const Matrix tau = m_sym - priors[j] * states[j];
        const double lo = hermitian_eig(tau).values(0);
        const double kern = (povm.elements[j] * tau).norm();
        cert.min_eigenvalues.push_back(lo);
        cert.kernel_residuals.push_back(kern);
        ok = ok && lo >= -tol && kern <= tol;
    }
    if (generator)
        cert.commutator_norm = max_abs(cert.M * *generator - *generator * cert.M);
    cert.pass = ok;
    return cert;
}

inline HelstromCertificate helstrom_certificate(const GUEnsemble& ens, const Povm& povm, double tol = 1e-9) {
    const auto priors = ens.priors();
    return helstrom_certificate(ens.states, priors, povm, tol, &ens.generator);
}

/// Pi_k = S^{-1/2} p_k rho_k S^{-1/2} with S = sum p_k rho_k; the kernel of S is added to element 0.
inline Povm square_root_measurement(std::span<const Matrix> states, std::span<const double> priors) {
    if (states.empty() || states.size() != priors.size())
        throw InvalidArgument("square_root_measurement: need matching non-empty states and priors");
    const Eigen::Index dim = states[0].rows();
    Matrix avg = Matrix::Zero(dim, dim);
    for (std::size_t k = 0; k < states.size(); ++k)
        avg += priors[k] * states[k];
    const PinvSqrt root = pinv_sqrt(avg);
    Povm out{static_cast<int>(dim), {}};
    for (std::size_t k = 0; k < states.size(); ++k) {
        Matrix e = root.inv_sqrt * (priors[k] * states[k]) * root.inv_sqrt;
        out.elements.push_back(0.5 * (e + e.adjoint()));
    }
    out.elements[0] += root.kernel_projector;
    return out;
}

inline Povm square_root_measurement(const GUEnsemble& ens) {
    const auto priors = ens.priors();
    return square_root_measurement(ens.states, priors);
}

/// 1/2 (1 + || p0 rho0 - (1 - p0) rho1 ||_1).
inline double helstrom_two_state(const Matrix& rho0, const Matrix& rho1, double p0) {
    validate_density(rho0);
    validate_density(rho1);
    if (rho0.rows() != rho1.rows())
        throw InvalidArgument("helstrom_two_state: dimension mismatch");
    if (!(p0 > 0.0 && p0 < 1.0))
        throw InvalidArgument("helstrom_two_state: prior must lie in (0, 1)");
    return 0.5 * (1.0 + trace_norm(p0 * rho0 - (1.0 - p0) * rho1));
}

} // namespace gusym
