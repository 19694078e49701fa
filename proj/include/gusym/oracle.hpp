#pragma once

#include "gusym/discrimination.hpp"
#include "gusym/linalg.hpp"
#include "gusym/types.hpp"

#include <optional>
#include <span>
#include <vector>

// Iterative minimum-error optimizer used as ground truth for the closed forms.
//
// Fixed-point map:
//   Lambda   = sum_j (p_j rho_j) Pi_j (p_j rho_j)
//   Pi_j  <- Lambda^{-1/2} (p_j rho_j) Pi_j (p_j rho_j) Lambda^{-1/2}
// with the pseudo-inverse root taken on the support of Lambda and the kernel
// projector of Lambda folded into element 0 so that every iterate is a
// complete POVM. Optimality is judged only by the Helstrom certificate.

namespace gusym {

struct OracleOptions {
    double tol = 1e-10;           // stop when the success probability improves by less than this
    int max_iter = 20000;
    double certificate_tol = 1e-9; // stop early once the certificate passes at this tolerance
    double accept_tol = 1e-7;      // final certificate tolerance for the `certified` flag
    int certificate_every = 25;    // iterations between certificate evaluations
    double pinv_cutoff = 1e-12;
};

struct OracleResult {
    Povm povm;
    double p_opt = 0.0;
    int iterations = 0;
    double final_step_delta = 0.0;
    HelstromCertificate certificate; // evaluated at accept_tol
    bool certified = false;
    std::vector<double> trace; // success probability after each iteration, starting with the initial POVM
};

namespace detail {

inline void check_oracle_inputs(std::span<const Matrix> states, std::span<const double> priors) {
    if (states.empty() || states.size() != priors.size())
        throw InvalidArgument("optimize_min_error: need matching non-empty states and priors");
    double total = 0.0;
    for (double p : priors) {
        if (!(p > 0.0))
            throw InvalidArgument("optimize_min_error: priors must be positive");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw InvalidArgument("optimize_min_error: priors must sum to 1");
    const Eigen::Index dim = states[0].rows();
    for (const auto& s : states)
        if (s.rows() != dim || s.cols() != dim)
            throw InvalidArgument("optimize_min_error: states have different dimensions");
}

inline Povm fixed_point_step(std::span<const Matrix> weighted, const Povm& current, double cutoff) {
    const Eigen::Index dim = current.dimension;
    std::vector<Matrix> sandwiches;
    sandwiches.reserve(weighted.size());
    Matrix lambda = Matrix::Zero(dim, dim);
    for (std::size_t j = 0; j < weighted.size(); ++j) {
        sandwiches.push_back(weighted[j] * current.elements[j] * weighted[j]);
        lambda += sandwiches.back();
    }
    const PinvSqrt root = pinv_sqrt(lambda, cutoff);
    Povm next{current.dimension, {}};
    next.elements.reserve(weighted.size());
    for (const auto& s : sandwiches) {
        Matrix e = root.inv_sqrt * s * root.inv_sqrt;
        next.elements.push_back(0.5 * (e + e.adjoint()));
    }
    next.elements[0] += root.kernel_projector;
    return next;
}

} // namespace detail

inline OracleResult optimize_min_error(std::span<const Matrix> states, std::span<const double> priors,
                                       const OracleOptions& opts = {}, const std::optional<Povm>& initial = {}) {
    detail::check_oracle_inputs(states, priors);
    const int dim = static_cast<int>(states[0].rows());
    const int count = static_cast<int>(states.size());

    std::vector<Matrix> weighted;
    weighted.reserve(states.size());
    for (std::size_t j = 0; j < states.size(); ++j)
        weighted.push_back(priors[j] * states[j]);

    Povm current = initial ? *initial : uniform_guess_povm(dim, count);
    if (current.dimension != dim || static_cast<int>(current.size()) != count)
        throw InvalidArgument("optimize_min_error: initial POVM has the wrong shape");

    OracleResult res;
    double p = success_probability(states, priors, current);
    res.trace.push_back(p);
    double delta = 0.0;
    int it = 0;
    while (it < opts.max_iter) {
        Povm next = detail::fixed_point_step(weighted, current, opts.pinv_cutoff);
        const double p_next = success_probability(states, priors, next);
        delta = p_next - p;
        current = std::move(next);
        p = p_next;
        ++it;
        res.trace.push_back(p);
        if (delta < opts.tol)
            break;
        if (it % opts.certificate_every == 0 && helstrom_certificate(states, priors, current, opts.certificate_tol).pass)
            break;
    }
    res.povm = std::move(current);
    res.p_opt = p;
    res.iterations = it;
    res.final_step_delta = delta;
    res.certificate = helstrom_certificate(states, priors, res.povm, opts.accept_tol);
    res.certified = res.certificate.pass;
    return res;
}

inline OracleResult optimize_min_error(const GUEnsemble& ens, const OracleOptions& opts = {},
                                       const std::optional<Povm>& initial = {}) {
    const auto priors = ens.priors();
    return optimize_min_error(ens.states, priors, opts, initial);
}

} // namespace gusym
