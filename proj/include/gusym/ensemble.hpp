#pragma once

#include "gusym/linalg.hpp"
#include "gusym/spin.hpp"
#include "gusym/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gusym {

enum class Basis { z, y };

inline const char* to_string(Basis b) {
    return b == Basis::z ? "z" : "y";
}

/// Pure state of the symmetric subspace, amplitudes indexed q = j..-j in the tagged basis.
struct SymmetricState {
    int n = 0;
    Basis basis = Basis::z;
    Vector amplitudes;

    /// The same state expressed in the z-basis.
    Vector z_amplitudes() const {
        if (basis == Basis::z)
            return amplitudes;
        return y_eigenbasis(n).to_z(amplitudes);
    }
    Matrix projector() const {
        const Vector z = z_amplitudes();
        return z * z.adjoint();
    }
};

struct DensityOperator {
    int n = 0;
    Matrix matrix;
};

/// Hermiticity, unit trace and positivity checks for a density matrix.
inline void validate_density(const Matrix& rho, double tol = 1e-10) {
    if (rho.rows() != rho.cols() || rho.rows() == 0)
        throw InvalidArgument("density operator must be a non-empty square matrix");
    if (hermiticity_residual(rho) > tol)
        throw InvalidArgument("density operator is not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > tol)
        throw InvalidArgument("density operator trace differs from 1");
    if (min_eigenvalue(rho) < -tol)
        throw InvalidArgument("density operator has a negative eigenvalue");
}

inline SymmetricState make_pure_reference(int n, const Vector& amplitudes_z) {
    require_qubits(n, "make_pure_reference");
    if (amplitudes_z.size() != n + 1)
        throw InvalidArgument("make_pure_reference: expected " + std::to_string(n + 1) + " amplitudes, got " +
                              std::to_string(amplitudes_z.size()));
    const double norm = amplitudes_z.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw InvalidArgument("make_pure_reference: amplitude vector has zero or non-finite norm");
    return {n, Basis::z, amplitudes_z / norm};
}

/// |j, j>_z, i.e. all qubits up.
inline SymmetricState coherent_top(int n) {
    require_qubits(n, "coherent_top");
    Vector v = Vector::Zero(n + 1);
    v(0) = 1.0;
    return {n, Basis::z, v};
}

/// (n+1)^{-1/2} sum_q e^{i phase_q} |j,q>_y, returned in the z-basis.
inline SymmetricState uniform_y_state(int n, const std::vector<double>& phases) {
    require_qubits(n, "uniform_y_state");
    if (static_cast<int>(phases.size()) != n + 1)
        throw InvalidArgument("uniform_y_state: expected n+1 phases");
    Vector amps(n + 1);
    for (int i = 0; i <= n; ++i)
        amps(i) = std::polar(1.0 / std::sqrt(n + 1.0), phases[static_cast<std::size_t>(i)]);
    return {n, Basis::z, y_eigenbasis(n).to_z(amps)};
}

/// r |j,j><j,j| + (1-r) |j,-j><j,-j| in the z-basis.
inline DensityOperator make_mixed_reference(int n, double r) {
    require_qubits(n, "make_mixed_reference");
    if (!(r >= 0.0 && r <= 1.0))
        throw InvalidArgument("make_mixed_reference: r must lie in [0, 1]");
    Matrix rho = Matrix::Zero(n + 1, n + 1);
    rho(0, 0) = r;
    rho(n, n) += 1.0 - r;
    return {n, rho};
}

/// Geometrically uniform orbit rho_k = U^k rho_0 U^k†, U = exp(-i 2 pi J_y / m), equal priors.
struct GUEnsemble {
    int n = 0;
    int m = 0;
    std::optional<SymmetricState> pure_reference;
    std::optional<double> mixed_r;
    std::vector<Matrix> states;
    Matrix generator; // U

    double prior() const { return 1.0 / m; }
    std::vector<double> priors() const { return std::vector<double>(static_cast<std::size_t>(m), prior()); }
    bool is_pure() const { return pure_reference.has_value(); }
    int dimension() const { return n + 1; }
};

namespace detail {

inline GUEnsemble build_orbit(int n, int m, const Matrix& rho0) {
    GUEnsemble ens;
    ens.n = n;
    ens.m = m;
    ens.generator = rotation_y(n, 2.0 * kPi / m).matrix;
    ens.states.reserve(static_cast<std::size_t>(m));
    Matrix stepped = rho0;
    for (int k = 0; k < m; ++k) {
        const Matrix uk = rotation_y(n, 2.0 * kPi * k / m).matrix;
        Matrix rho = uk * rho0 * uk.adjoint();
        if (max_abs(rho - stepped) > 1e-12)
            throw InternalError("gu_ensemble: orbit state " + std::to_string(k) + " disagrees with U^k rho_0 U^k†");
        ens.states.push_back(std::move(rho));
        stepped = ens.generator * stepped * ens.generator.adjoint();
    }
    return ens;
}

inline void check_count(int n, int m) {
    if (m < 2)
        throw InvalidArgument("gu_ensemble: need at least 2 states, got m = " + std::to_string(m));
    if (m < n + 1)
        throw ConstraintViolation("gu_ensemble: m = " + std::to_string(m) + " < n + 1 = " + std::to_string(n + 1) +
                                  "; the rotated measurement vectors only resolve the identity on the symmetric "
                                  "subspace when every |q - q'| < m");
}

} // namespace detail

inline GUEnsemble gu_ensemble(const SymmetricState& reference, int m) {
    require_qubits(reference.n, "gu_ensemble");
    detail::check_count(reference.n, m);
    GUEnsemble ens = detail::build_orbit(reference.n, m, reference.projector());
    ens.pure_reference = reference;
    return ens;
}

inline GUEnsemble gu_ensemble_mixed(int n, double r, int m) {
    const DensityOperator rho0 = make_mixed_reference(n, r);
    detail::check_count(n, m);
    GUEnsemble ens = detail::build_orbit(n, m, rho0.matrix);
    ens.mixed_r = r;
    return ens;
}

} // namespace gusym
