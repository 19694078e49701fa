#pragma once

#include "gusym/discrimination.hpp"
#include "gusym/ensemble.hpp"
#include "gusym/spin.hpp"
#include "gusym/types.hpp"

#include <cmath>
#include <vector>

// Analytic optimum for equiprobable GU ensembles generated by exp(-i 2 pi J_y / m).
//
// For a pure reference the optimal first element is |z0><z0| with
//   z0 = m^{-1/2} sum_q e^{i theta_q} |j,q>_y,   theta_q = arg <j,q|_y psi0>,
// giving p_opt = (sum_q |<j,q|_y psi0>|)^2 / m. The remaining elements are the
// rotated copies U^k |z0><z0| U^k†.

namespace gusym {

/// Phase overlaps below this magnitude carry no phase information; their phase is set to 0.
inline constexpr double kDegeneratePhaseCutoff = 1e-14;

struct MeasurementVector {
    int n = 0;
    int m = 0;
    std::vector<Complex> phases; // unit modulus, y-basis, q = j..-j
    Vector z;                    // z-basis, norm^2 = (n+1)/m
};

struct PureClosedForm {
    double lambda_abs = 0.0;
    double p_opt = 0.0;
    MeasurementVector vector;
};

struct MixedClosedForm {
    double A = 0.0; // overlaps at q = -j + 2s
    double B = 0.0; // overlaps at q = -j + 2s + 1
    double theta = 0.0;
    double p_opt = 0.0;
    MeasurementVector vector;
};

inline MeasurementVector make_measurement_vector(int n, int m, std::vector<Complex> phases,
                                                 const YEigenbasis& basis) {
    Vector amps(n + 1);
    for (int i = 0; i <= n; ++i)
        amps(i) = phases[static_cast<std::size_t>(i)] / std::sqrt(static_cast<double>(m));
    return {n, m, std::move(phases), basis.to_z(amps)};
}

inline double lambda_abs(const SymmetricState& psi0) {
    const YEigenbasis basis = y_eigenbasis(psi0.n);
    return basis.overlaps(psi0.z_amplitudes()).cwiseAbs().sum();
}

inline void require_resolvable(int n, int m, const char* where) {
    if (m < 2)
        throw InvalidArgument(std::string(where) + ": need m >= 2");
    if (m < n + 1)
        throw ConstraintViolation(std::string(where) + ": m = " + std::to_string(m) + " < n + 1 = " +
                                  std::to_string(n + 1));
}

inline double popt_pure(const SymmetricState& psi0, int m) {
    require_resolvable(psi0.n, m, "popt_pure");
    const double lam = lambda_abs(psi0);
    return lam * lam / m;
}

inline MeasurementVector optimal_vector_pure(const SymmetricState& psi0, int m) {
    require_resolvable(psi0.n, m, "optimal_vector_pure");
    const YEigenbasis basis = y_eigenbasis(psi0.n);
    const Vector ov = basis.overlaps(psi0.z_amplitudes());
    std::vector<Complex> phases;
    phases.reserve(static_cast<std::size_t>(ov.size()));
    for (Eigen::Index i = 0; i < ov.size(); ++i) {
        const double mag = std::abs(ov(i));
        phases.push_back(mag < kDegeneratePhaseCutoff ? Complex(1.0) : ov(i) / mag);
    }
    return make_measurement_vector(psi0.n, m, std::move(phases), basis);
}

inline PureClosedForm pure_closed_form(const SymmetricState& psi0, int m) {
    PureClosedForm out;
    out.lambda_abs = lambda_abs(psi0);
    require_resolvable(psi0.n, m, "pure_closed_form");
    out.p_opt = out.lambda_abs * out.lambda_abs / m;
    out.vector = optimal_vector_pure(psi0, m);
    return out;
}

/// The m rotated copies U^k z0.
inline std::vector<Vector> orbit_vectors(const MeasurementVector& vec) {
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(vec.m));
    for (int k = 0; k < vec.m; ++k)
        out.push_back(rotation_y(vec.n, 2.0 * kPi * k / vec.m).matrix * vec.z);
    return out;
}

inline Povm optimal_povm(const MeasurementVector& vec) {
    Povm povm{vec.n + 1, {}};
    for (const Vector& zk : orbit_vectors(vec))
        povm.elements.push_back(zk * zk.adjoint());
    const double resid = povm.completeness_residual();
    if (resid > kCompletePovmTolerance)
        throw InternalError("optimal_povm: completeness residual " + std::to_string(resid) +
                            " exceeds 1e-8 (phase or normalisation bug upstream)");
    return povm;
}

struct PerfectDiscrimination {
    bool perfect = false;
    double residual = 0.0; // |p_opt - 1|
};

inline PerfectDiscrimination is_perfectly_discriminable(const SymmetricState& psi0, int m) {
    const double p = popt_pure(psi0, m);
    const double resid = std::abs(p - 1.0);
    // |sum_q e^{i theta_q} |<q|psi0>||^2 = m p_opt must equal m.
    return {std::abs(p * m - m) <= 1e-9, resid};
}

namespace detail {

inline void check_mixed_args(int n, double r, int m) {
    require_qubits(n, "popt_mixed");
    if (!(r >= 0.0 && r <= 1.0))
        throw InvalidArgument("popt_mixed: r must lie in [0, 1]");
    if (m < 2 || m < n + 1)
        throw InvalidArgument("popt_mixed: need m >= max(2, n + 1), got m = " + std::to_string(m));
}

} // namespace detail

/// Reference r|j,j><j,j| + (1-r)|j,-j><j,-j|. Measurement phases take the
/// value 1 on q = -j + 2s and e^{i theta} on q = -j + 2s + 1, with theta = 0
/// for r >= 1/2 and pi otherwise, so p_opt = (A^2 + B^2 + 2AB|2r - 1|) / m.
inline MixedClosedForm popt_mixed(int n, double r, int m) {
    detail::check_mixed_args(n, r, m);
    const YEigenbasis basis = y_eigenbasis(n);
    const Vector top_overlaps = basis.overlaps(coherent_top(n).amplitudes);
    MixedClosedForm out;
    // Index i holds q = j - i, so q = -j + t with t = n - i.
    for (int i = 0; i <= n; ++i) {
        const double c = top_overlaps(i).real();
        if ((n - i) % 2 == 0)
            out.A += c;
        else
            out.B += c;
    }
    out.theta = r >= 0.5 ? 0.0 : kPi;
    out.p_opt = (out.A * out.A + out.B * out.B + 2.0 * out.A * out.B * std::abs(2.0 * r - 1.0)) / m;
    const Complex odd_phase = r >= 0.5 ? Complex(1.0) : Complex(-1.0);
    std::vector<Complex> phases;
    for (int i = 0; i <= n; ++i)
        phases.push_back((n - i) % 2 == 0 ? Complex(1.0) : odd_phase);
    out.vector = make_measurement_vector(n, m, std::move(phases), basis);
    return out;
}

inline MeasurementVector optimal_vector_mixed(int n, double r, int m) {
    return popt_mixed(n, r, m).vector;
}

} // namespace gusym
