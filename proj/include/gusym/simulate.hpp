#pragma once

#include "gusym/discrimination.hpp"
#include "gusym/ensemble.hpp"
#include "gusym/types.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

// Seeded shot simulation of a discrimination experiment. The generator is
// std::mt19937_64; each uniform in [0, 1) takes the top 53 bits of one draw.
// Per shot: the sent index k = floor(u m) under equal priors (inverse CDF over
// the priors otherwise), then the outcome h by inverse CDF over Tr(rho_k Pi_h).

namespace gusym {

struct SimulationReport {
    double p_empirical = 0.0;
    double p_exact = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<std::uint64_t>> confusion; // [sent][outcome]

    bool operator==(const SimulationReport&) const = default;
};

namespace detail {

inline double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t inverse_cdf(const std::vector<double>& cdf, double u) {
    for (std::size_t i = 0; i + 1 < cdf.size(); ++i)
        if (u < cdf[i])
            return i;
    return cdf.size() - 1;
}

inline std::vector<double> cumulative(std::vector<double> probs, const char* what) {
    double total = 0.0;
    for (double& p : probs) {
        if (p < -1e-12)
            throw InternalError(std::string("simulate: negative ") + what + " probability " + std::to_string(p));
        p = std::max(p, 0.0);
        total += p;
    }
    if (!(total > 0.0))
        throw InternalError(std::string("simulate: ") + what + " probabilities sum to zero");
    double acc = 0.0;
    for (double& p : probs) {
        acc += p / total;
        p = acc;
    }
    return probs;
}

} // namespace detail

inline SimulationReport simulate(std::span<const Matrix> states, std::span<const double> priors, const Povm& povm,
                                 std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1)
        throw InvalidArgument("simulate: shots must be >= 1");
    if (states.empty() || states.size() != priors.size() || povm.size() != states.size())
        throw InvalidArgument("simulate: states, priors and POVM outcomes must match in number");
    const std::size_t m = states.size();

    std::vector<std::vector<double>> outcome_cdf;
    outcome_cdf.reserve(m);
    for (const auto& rho : states) {
        std::vector<double> probs;
        probs.reserve(m);
        for (const auto& e : povm.elements)
            probs.push_back((rho * e).trace().real());
        outcome_cdf.push_back(detail::cumulative(std::move(probs), "outcome"));
    }
    bool equal_priors = true;
    for (double p : priors)
        equal_priors = equal_priors && p == priors[0];
    const std::vector<double> prior_cdf = detail::cumulative({priors.begin(), priors.end()}, "prior");

    SimulationReport rep;
    rep.shots = shots;
    rep.seed = seed;
    rep.p_exact = success_probability(states, priors, povm);
    rep.confusion.assign(m, std::vector<std::uint64_t>(m, 0));

    std::mt19937_64 rng(seed);
    std::uint64_t correct = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = detail::uniform53(rng);
        const std::size_t k = equal_priors ? std::min(m - 1, static_cast<std::size_t>(u * static_cast<double>(m)))
                                           : detail::inverse_cdf(prior_cdf, u);
        const std::size_t h = detail::inverse_cdf(outcome_cdf[k], detail::uniform53(rng));
        ++rep.confusion[k][h];
        if (h == k)
            ++correct;
    }
    rep.p_empirical = static_cast<double>(correct) / static_cast<double>(shots);
    return rep;
}

inline SimulationReport simulate(const GUEnsemble& ens, const Povm& povm, std::uint64_t shots, std::uint64_t seed) {
    const auto priors = ens.priors();
    return simulate(ens.states, priors, povm, shots, seed);
}

} // namespace gusym
