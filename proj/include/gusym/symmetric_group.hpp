#pragma once

#include "gusym/closed_form.hpp"
#include "gusym/discrimination.hpp"
#include "gusym/ensemble.hpp"
#include "gusym/linalg.hpp"
#include "gusym/majorana.hpp"
#include "gusym/types.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

// Lifting from the (n+1)-dimensional symmetric subspace to the full 2^n-dimensional
// n-qubit space. Computational basis states are bitstrings in ascending integer
// order with bit i holding qubit i; |1> on qubit i flips spin i down.

namespace gusym {

inline constexpr int kDefaultFullSpaceCap = 8;
inline constexpr const char* kFullSpaceCapEnv = "GUSYM_FULL_SPACE_CAP";

/// Largest n for which full-space operators are built. Overridable through
/// the GUSYM_FULL_SPACE_CAP environment variable.
inline int full_space_cap() {
    if (const char* env = std::getenv(kFullSpaceCapEnv)) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 16)
            return static_cast<int>(v);
    }
    return kDefaultFullSpaceCap;
}

inline void require_within_cap(int n, const char* where) {
    require_qubits(n, where);
    const int cap = full_space_cap();
    if (n > cap)
        throw ResourceLimit(std::string(where) + ": n = " + std::to_string(n) + " exceeds the full-space cap " +
                            std::to_string(cap));
}

struct FullSpaceVector {
    int n = 0;
    Vector amplitudes;
};

using Permutation = std::vector<int>; // perm[i] = new position of qubit i

inline std::vector<Permutation> all_permutations(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    out.reserve(factorial_u64(n));
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int permutation_sign(const Permutation& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            inversions += p[i] > p[j] ? 1 : 0;
    return inversions % 2 == 0 ? 1 : -1;
}

inline void validate_permutation(const Permutation& perm, int n) {
    if (static_cast<int>(perm.size()) != n)
        throw InvalidArgument("permutation has " + std::to_string(perm.size()) + " entries for " + std::to_string(n) +
                              " qubits");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw InvalidArgument("permutation is not a bijection on the qubit indices");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

/// Basis index after moving qubit i to position perm[i].
inline std::size_t permute_index(std::size_t b, const Permutation& perm) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((b >> i) & 1U)
            out |= std::size_t{1} << perm[i];
    return out;
}

inline FullSpaceVector permute_qubits(const FullSpaceVector& v, const Permutation& perm) {
    validate_permutation(perm, v.n);
    FullSpaceVector out{v.n, Vector::Zero(v.amplitudes.size())};
    for (std::size_t b = 0; b < static_cast<std::size_t>(v.amplitudes.size()); ++b)
        out.amplitudes(static_cast<Eigen::Index>(permute_index(b, perm))) = v.amplitudes(static_cast<Eigen::Index>(b));
    return out;
}

inline Matrix permutation_matrix(int n, const Permutation& perm) {
    validate_permutation(perm, n);
    const std::size_t dim = std::size_t{1} << n;
    Matrix g = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t b = 0; b < dim; ++b)
        g(static_cast<Eigen::Index>(permute_index(b, perm)), static_cast<Eigen::Index>(b)) = 1.0;
    return g;
}

/// 2^n x (n+1) isometry sending |j, j-k>_z to the normalised sum of weight-k bitstrings.
inline Matrix dicke_isometry(int n) {
    require_within_cap(n, "dicke_isometry");
    const std::size_t dim = std::size_t{1} << n;
    Matrix d = Matrix::Zero(static_cast<Eigen::Index>(dim), n + 1);
    for (std::size_t b = 0; b < dim; ++b) {
        const int w = std::popcount(b);
        d(static_cast<Eigen::Index>(b), w) = 1.0 / std::sqrt(binomial(n, w));
    }
    return d;
}

inline FullSpaceVector dicke_embed(const SymmetricState& psi) {
    return {psi.n, dicke_isometry(psi.n) * psi.z_amplitudes()};
}

inline Matrix embed_operator(int n, const Matrix& op) {
    const Matrix d = dicke_isometry(n);
    return d * op * d.adjoint();
}

/// (1/n!) sum_g g as a 2^n x 2^n matrix.
inline Matrix symmetrizer(int n) {
    require_within_cap(n, "symmetrizer");
    const std::size_t dim = std::size_t{1} << n;
    const double w = 1.0 / factorial(n);
    Matrix p = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& perm : all_permutations(n))
        for (std::size_t b = 0; b < dim; ++b)
            p(static_cast<Eigen::Index>(permute_index(b, perm)), static_cast<Eigen::Index>(b)) += w;
    return p;
}

inline FullSpaceVector product_vector(const std::vector<Qubit>& qubits) {
    const int n = static_cast<int>(qubits.size());
    const std::size_t dim = std::size_t{1} << n;
    Vector v(static_cast<Eigen::Index>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
        Complex amp = 1.0;
        for (int i = 0; i < n; ++i)
            amp *= qubits[static_cast<std::size_t>(i)][(b >> i) & 1U];
        v(static_cast<Eigen::Index>(b)) = amp;
    }
    return {n, v};
}

/// Product vector with qubit perm[i] carrying qubits[i], i.e. g|phi_1 ... phi_n>.
inline std::vector<Qubit> permuted_qubits(const std::vector<Qubit>& qubits, const Permutation& perm) {
    std::vector<Qubit> out(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i)
        out[static_cast<std::size_t>(perm[i])] = qubits[i];
    return out;
}

/// Trivial-representation transform (1/sqrt(n!)) sum_g g |phi_1 ... phi_n>.
inline FullSpaceVector tau_trivial(const std::vector<Qubit>& qubits) {
    const int n = static_cast<int>(qubits.size());
    require_within_cap(n, "tau_trivial");
    const FullSpaceVector base = product_vector(qubits);
    Vector acc = Vector::Zero(base.amplitudes.size());
    for (const auto& perm : all_permutations(n))
        acc += permute_qubits(base, perm).amplitudes;
    return {n, acc / std::sqrt(factorial(n))};
}

inline FullSpaceVector tau_trivial(const MajoranaDecomposition& dec) {
    return tau_trivial(dec.qubits);
}

struct SignRepresentationReport {
    int n = 0;
    long long sign_sum = 0;
    double annihilation_residual = 0.0; // max |(sum_g sign(g) g) s| over the Dicke basis
    bool pass = false;
};

/// Instance of the vanishing group sum for a non-trivial irrep: the sign
/// representation sums to zero, and the antisymmetriser kills every symmetric vector.
inline SignRepresentationReport sign_rep_sum_check(int n) {
    if (n < 2)
        throw InvalidArgument("sign_rep_sum_check: need n >= 2");
    require_within_cap(n, "sign_rep_sum_check");
    SignRepresentationReport rep;
    rep.n = n;
    const auto perms = all_permutations(n);
    const Matrix d = dicke_isometry(n);
    Matrix image = Matrix::Zero(d.rows(), d.cols());
    for (const auto& perm : perms) {
        const int s = permutation_sign(perm);
        rep.sign_sum += s;
        for (Eigen::Index col = 0; col < d.cols(); ++col) {
            const FullSpaceVector moved = permute_qubits({n, d.col(col)}, perm);
            image.col(col) += static_cast<double>(s) * moved.amplitudes;
        }
    }
    rep.annihilation_residual = max_abs(image);
    rep.pass = rep.sign_sum == 0 && rep.annihilation_residual <= 1e-10;
    return rep;
}

/// Separable POVM on the full space built from the Majorana product vectors of
/// the orbit measurement vectors z_k:
///   E_k = c sum_g g |phi^(k)><phi^(k)| g†,  c = <z_k|z_k> / <tau0_k|tau0_k>.
/// Every summand is a product projector, so each E_k is separable by construction.
struct SeparablePovm {
    int n = 0;
    int m = 0;
    double c = 0.0;
    std::vector<Matrix> elements;               // 2^n x 2^n
    std::vector<Matrix> global_elements;        // (n+1) x (n+1), |z_k><z_k|
    std::vector<std::vector<Qubit>> base_qubits; // Majorana qubits of z_k
    std::vector<Permutation> permutations;       // shared: summand (k, g) is permuted_qubits(base_qubits[k], g)
    double completeness_residual = 0.0;          // max |P (sum E) P - P|
    double psd_floor = 0.0;                      // min eigenvalue of I - sum E

    std::size_t summand_count() const { return permutations.size(); }
    FullSpaceVector summand(std::size_t k, std::size_t g) const {
        return product_vector(permuted_qubits(base_qubits[k], permutations[g]));
    }
};

namespace detail {

inline Matrix permutation_sum_projector(const std::vector<Qubit>& qubits, const std::vector<Permutation>& perms) {
    const int n = static_cast<int>(qubits.size());
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix acc = Matrix::Zero(dim, dim);
    constexpr std::size_t chunk = 512;
    Matrix block(dim, static_cast<Eigen::Index>(std::min(chunk, perms.size())));
    for (std::size_t start = 0; start < perms.size(); start += chunk) {
        const std::size_t count = std::min(chunk, perms.size() - start);
        block.resize(dim, static_cast<Eigen::Index>(count));
        for (std::size_t i = 0; i < count; ++i)
            block.col(static_cast<Eigen::Index>(i)) = product_vector(permuted_qubits(qubits, perms[start + i])).amplitudes;
        acc.noalias() += block * block.adjoint();
    }
    return acc;
}

inline void measure_separable(SeparablePovm& sep) {
    const Eigen::Index dim = Eigen::Index{1} << sep.n;
    Matrix total = Matrix::Zero(dim, dim);
    for (const auto& e : sep.elements)
        total += e;
    const Matrix p = symmetrizer(sep.n);
    sep.completeness_residual = max_abs(p * total * p - p);
    sep.psd_floor = min_eigenvalue(Matrix::Identity(dim, dim) - total);
}

} // namespace detail

inline SeparablePovm separable_povm(const std::vector<Vector>& orbit, int n) {
    require_within_cap(n, "separable_povm");
    if (orbit.empty())
        throw InvalidArgument("separable_povm: no measurement vectors");
    SeparablePovm sep;
    sep.n = n;
    sep.m = static_cast<int>(orbit.size());
    sep.permutations = all_permutations(n);
    std::vector<double> scales;
    for (const Vector& zk : orbit) {
        if (zk.size() != n + 1)
            throw InvalidArgument("separable_povm: measurement vector has the wrong dimension");
        const MajoranaDecomposition dec = majorana_decompose({n, Basis::z, zk});
        const FullSpaceVector tau = tau_trivial(dec.qubits);
        scales.push_back(zk.squaredNorm() / tau.amplitudes.squaredNorm());
        sep.base_qubits.push_back(dec.qubits);
        sep.global_elements.push_back(zk * zk.adjoint());
    }
    sep.c = scales.front();
    for (double s : scales)
        if (std::abs(s - sep.c) > 1e-9 * std::max(1.0, sep.c))
            throw InternalError("separable_povm: scale c differs across outcomes (" + std::to_string(s) + " vs " +
                                std::to_string(sep.c) + ")");
    for (std::size_t k = 0; k < orbit.size(); ++k)
        sep.elements.push_back(scales[k] * detail::permutation_sum_projector(sep.base_qubits[k], sep.permutations));
    detail::measure_separable(sep);
    return sep;
}

inline SeparablePovm separable_povm(const MeasurementVector& vec) {
    return separable_povm(orbit_vectors(vec), vec.n);
}

/// Copy with every element and c multiplied by `factor`; used to probe the validity checks.
inline SeparablePovm rescaled(const SeparablePovm& sep, double factor) {
    SeparablePovm out = sep;
    out.c *= factor;
    for (auto& e : out.elements)
        e *= factor;
    detail::measure_separable(out);
    return out;
}

struct SeparableReport {
    std::vector<double> outcome_deltas; // Tr(E_k rho_k) - Tr(Pi_k rho_k)
    double p_separable = 0.0;
    double p_global = 0.0;
    double completeness_residual = 0.0;
    double psd_floor = 0.0;
    bool is_valid_povm = false;
    double inconclusive_probability = 0.0; // weight on I - sum E_k when appended
};

inline SeparableReport verify_separable(const GUEnsemble& ens, const SeparablePovm& sep) {
    if (ens.n != sep.n || ens.m != sep.m)
        throw InvalidArgument("verify_separable: ensemble and POVM disagree on n or m");
    const Matrix d = dicke_isometry(ens.n);
    const Eigen::Index dim = d.rows();
    Matrix total = Matrix::Zero(dim, dim);
    for (const auto& e : sep.elements)
        total += e;
    const Matrix extra = Matrix::Identity(dim, dim) - total;

    SeparableReport rep;
    for (int k = 0; k < ens.m; ++k) {
        const Matrix& rho = ens.states[static_cast<std::size_t>(k)];
        const Matrix rho_full = d * rho * d.adjoint();
        const double sep_k = (sep.elements[static_cast<std::size_t>(k)] * rho_full).trace().real();
        const double glob_k = (sep.global_elements[static_cast<std::size_t>(k)] * rho).trace().real();
        rep.outcome_deltas.push_back(sep_k - glob_k);
        rep.p_separable += ens.prior() * sep_k;
        rep.p_global += ens.prior() * glob_k;
        rep.inconclusive_probability += ens.prior() * (extra * rho_full).trace().real();
    }
    rep.completeness_residual = sep.completeness_residual;
    rep.psd_floor = sep.psd_floor;
    rep.is_valid_povm = sep.psd_floor >= -1e-9;
    return rep;
}

} // namespace gusym
