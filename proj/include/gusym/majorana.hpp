#pragma once

#include "gusym/ensemble.hpp"
#include "gusym/types.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

// Majorana (stellar) representation of symmetric n-qubit states.
//
// The Majorana polynomial of a z-basis state with Dicke amplitudes a_k
// (k = number of flipped qubits) is
//   Phi(t) = sum_k (-1)^k sqrt(C(n,k)) a_k t^k  ∝  prod_i (u_i - v_i t),
// so each root t_i = u_i / v_i identifies one constituent qubit
// u_i|0> + v_i|1> ∝ t_i|0> + |1>. A degree deficit of Phi is a root at
// infinity, i.e. a |0> qubit; a root at t = 0 is a |1> qubit.

namespace gusym {

using Qubit = std::array<Complex, 2>;

/// Bloch-sphere direction: polar angle in [0, pi], azimuth in [0, 2 pi).
struct BlochPoint {
    double polar = 0.0;
    double azimuth = 0.0;

    Qubit qubit() const { return {Complex(std::cos(0.5 * polar)), std::polar(std::sin(0.5 * polar), azimuth)}; }
};

struct MajoranaPolynomial {
    int n = 0;
    std::vector<Complex> coefficients; // ascending powers of t, size n + 1
};

struct PolynomialRoots {
    std::vector<Complex> roots; // finite roots, zeros included
    int at_infinity = 0;
    std::vector<double> residuals; // relative backward error per finite root
    int iterations = 0;
};

struct MajoranaDecomposition {
    int n = 0;
    std::vector<BlochPoint> points; // exactly n
    std::vector<Qubit> qubits;      // normalised constituent qubits, same order as points
    std::vector<Complex> roots;     // finite roots of Phi
    int roots_at_infinity = 0;
    double normalization = 0.0; // squared norm of the raw permutation sum of the product state
    std::vector<double> residuals;
};

class RootFindingError : public std::runtime_error {
  public:
    RootFindingError(const std::string& what, std::vector<double> residuals)
        : std::runtime_error(what), residuals_(std::move(residuals)) {}
    const std::vector<double>& residuals() const { return residuals_; }

  private:
    std::vector<double> residuals_;
};

inline MajoranaPolynomial majorana_polynomial(const SymmetricState& psi) {
    const Vector a = psi.z_amplitudes();
    MajoranaPolynomial poly{psi.n, {}};
    poly.coefficients.reserve(static_cast<std::size_t>(psi.n + 1));
    for (int k = 0; k <= psi.n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        poly.coefficients.push_back(sign * std::sqrt(binomial(psi.n, k)) * a(k));
    }
    return poly;
}

namespace detail {

inline Complex horner(const std::vector<Complex>& c, Complex t) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

inline Complex horner_derivative(const std::vector<Complex>& c, Complex t) {
    Complex acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;)
        acc = acc * t + static_cast<double>(k) * c[k];
    return acc;
}

inline double backward_error(const std::vector<Complex>& c, Complex t) {
    double scale = 0.0;
    double power = 1.0;
    const double mag = std::abs(t);
    for (const auto& ck : c) {
        scale += std::abs(ck) * power;
        power *= mag;
    }
    return scale > 0.0 ? std::abs(horner(c, t)) / scale : 0.0;
}

} // namespace detail

/// Durand-Kerner simultaneous iteration. Leading coefficients below
/// `zero_cutoff * max|c|` are counted as roots at infinity and trailing ones
/// as roots at zero. Residuals are relative backward errors
/// |Phi(t)| / sum_k |c_k| |t|^k and must not exceed 1e-9.
inline PolynomialRoots polynomial_roots(const std::vector<Complex>& coefficients, double tol = 1e-12,
                                        int max_iter = 1000, double zero_cutoff = 1e-13) {
    double cmax = 0.0;
    for (const auto& c : coefficients)
        cmax = std::max(cmax, std::abs(c));
    if (coefficients.empty() || cmax == 0.0)
        throw InvalidArgument("polynomial_roots: polynomial is identically zero");
    const double thr = zero_cutoff * cmax;
    const int n = static_cast<int>(coefficients.size()) - 1;
    int hi = n;
    while (std::abs(coefficients[static_cast<std::size_t>(hi)]) <= thr)
        --hi;
    int lo = 0;
    while (std::abs(coefficients[static_cast<std::size_t>(lo)]) <= thr)
        ++lo;

    PolynomialRoots out;
    out.at_infinity = n - hi;
    for (int k = 0; k < lo; ++k) {
        out.roots.emplace_back(0.0);
        out.residuals.push_back(0.0);
    }
    const int degree = hi - lo;
    if (degree == 0)
        return out;

    std::vector<Complex> monic(coefficients.begin() + lo, coefficients.begin() + hi + 1);
    const Complex lead = monic.back();
    for (auto& c : monic)
        c /= lead;

    double bound = 0.0;
    for (int k = 0; k < degree; ++k)
        bound = std::max(bound, std::abs(monic[static_cast<std::size_t>(k)]));
    const double radius = std::max(1.0, bound);
    std::vector<Complex> z(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * kPi * k / degree + 0.4 * std::sqrt(2.0));

    int it = 0;
    for (; it < max_iter; ++it) {
        double worst = 0.0;
        for (int k = 0; k < degree; ++k) {
            Complex denom = 1.0;
            const Complex zk = z[static_cast<std::size_t>(k)];
            for (int l = 0; l < degree; ++l)
                if (l != k)
                    denom *= zk - z[static_cast<std::size_t>(l)];
            if (std::abs(denom) < 1e-300)
                denom = 1e-300;
            const Complex step = detail::horner(monic, zk) / denom;
            z[static_cast<std::size_t>(k)] = zk - step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(zk)));
        }
        if (worst <= tol)
            break;
    }
    out.iterations = it;

    // Newton polish, accepted only when it lowers the residual.
    for (auto& zk : z) {
        for (int pass = 0; pass < 3; ++pass) {
            const Complex d = detail::horner_derivative(monic, zk);
            if (std::abs(d) < 1e-300)
                break;
            const Complex cand = zk - detail::horner(monic, zk) / d;
            if (detail::backward_error(monic, cand) < detail::backward_error(monic, zk))
                zk = cand;
            else
                break;
        }
    }

    bool ok = true;
    for (const auto& zk : z) {
        const double r = detail::backward_error(monic, zk);
        out.roots.push_back(zk);
        out.residuals.push_back(r);
        ok = ok && std::isfinite(r) && r <= 1e-9;
    }
    if (!ok)
        throw RootFindingError("polynomial_roots: Durand-Kerner did not converge", out.residuals);
    return out;
}

inline PolynomialRoots polynomial_roots(const MajoranaPolynomial& poly, double tol = 1e-12, int max_iter = 1000) {
    return polynomial_roots(poly.coefficients, tol, max_iter);
}

/// Qubit t|0> + |1>, normalised with a real non-negative |0> amplitude.
inline Qubit qubit_from_root(Complex t) {
    const double mag = std::abs(t);
    const double norm = std::sqrt(1.0 + mag * mag);
    const Complex phase = mag > 0.0 ? std::conj(t) / mag : Complex(1.0);
    return {Complex(mag / norm), phase / norm};
}

inline BlochPoint bloch_from_qubit(const Qubit& q) {
    const double polar = 2.0 * std::atan2(std::abs(q[1]), std::abs(q[0]));
    double azimuth = 0.0;
    if (std::abs(q[1]) > 0.0 && std::abs(q[0]) > 0.0)
        azimuth = std::arg(q[1]) - std::arg(q[0]);
    azimuth = std::fmod(azimuth, 2.0 * kPi);
    if (azimuth < 0.0)
        azimuth += 2.0 * kPi;
    if (azimuth >= 2.0 * kPi)
        azimuth = 0.0;
    return {polar, azimuth};
}

/// Dicke amplitudes (k = 0..n flips) of the symmetrised product of `qubits`,
/// unnormalised: entry k is e_k / sqrt(C(n,k)) with e_k the k-th coefficient of prod_i (u_i + v_i x).
inline Vector symmetric_projection_of_product(const std::vector<Qubit>& qubits) {
    const int n = static_cast<int>(qubits.size());
    std::vector<Complex> e{Complex(1.0)};
    for (const auto& q : qubits) {
        std::vector<Complex> next(e.size() + 1, Complex(0.0));
        for (std::size_t k = 0; k < e.size(); ++k) {
            next[k] += e[k] * q[0];
            next[k + 1] += e[k] * q[1];
        }
        e = std::move(next);
    }
    Vector out(n + 1);
    for (int k = 0; k <= n; ++k)
        out(k) = e[static_cast<std::size_t>(k)] / std::sqrt(binomial(n, k));
    return out;
}

struct Reconstruction {
    SymmetricState state;
    double normalization = 0.0; // || sum_g g |phi_1 ... phi_n> ||^2
};

inline Reconstruction majorana_reconstruct_qubits(const std::vector<Qubit>& qubits, int n) {
    if (static_cast<int>(qubits.size()) != n)
        throw InvalidArgument("majorana_reconstruct: expected " + std::to_string(n) + " points, got " +
                              std::to_string(qubits.size()));
    require_qubits(n, "majorana_reconstruct");
    const Vector proj = symmetric_projection_of_product(qubits);
    const double proj_norm = proj.norm();
    if (!(proj_norm > 0.0))
        throw InvalidArgument("majorana_reconstruct: symmetrised product vanishes");
    const double nfact = factorial(n);
    return {{n, Basis::z, proj / proj_norm}, nfact * nfact * proj_norm * proj_norm};
}

inline Reconstruction majorana_reconstruct(const std::vector<BlochPoint>& points, int n) {
    std::vector<Qubit> qubits;
    qubits.reserve(points.size());
    for (const auto& p : points)
        qubits.push_back(p.qubit());
    return majorana_reconstruct_qubits(qubits, n);
}

inline MajoranaDecomposition majorana_decompose(const SymmetricState& psi) {
    require_qubits(psi.n, "majorana_decompose");
    const Vector a = psi.z_amplitudes();
    const double norm = a.norm();
    if (!(norm > 0.0))
        throw InvalidArgument("majorana_decompose: zero state");
    const SymmetricState unit{psi.n, Basis::z, a / norm};
    const PolynomialRoots pr = polynomial_roots(majorana_polynomial(unit));

    MajoranaDecomposition dec;
    dec.n = psi.n;
    dec.roots = pr.roots;
    dec.roots_at_infinity = pr.at_infinity;
    dec.residuals = pr.residuals;
    for (const auto& t : pr.roots)
        dec.qubits.push_back(qubit_from_root(t));
    for (int k = 0; k < pr.at_infinity; ++k)
        dec.qubits.push_back({Complex(1.0), Complex(0.0)});
    for (const auto& q : dec.qubits)
        dec.points.push_back(bloch_from_qubit(q));
    dec.normalization = majorana_reconstruct_qubits(dec.qubits, psi.n).normalization;
    return dec;
}

/// |<psi|phi>| for normalised symmetric states.
inline double fidelity(const SymmetricState& a, const SymmetricState& b) {
    return std::abs(a.z_amplitudes().normalized().dot(b.z_amplitudes().normalized()));
}

} // namespace gusym
