#include "gusym/closed_form.hpp"
#include "gusym/discrimination.hpp"
#include "test_oracles.hpp"

#include <gtest/gtest.h>

using namespace gusym;

namespace {

GUEnsemble orthogonal_basis_ensemble() {
    // Coherent qubit at m = 2 gives |0>, |1>.
    return gu_ensemble(coherent_top(1), 2);
}

} // namespace

TEST(SuccessProbability, BlindGuessing) {
    const GUEnsemble e = gu_ensemble(coherent_top(2), 4);
    EXPECT_NEAR(success_probability(e, uniform_guess_povm(3, 4)), 0.25, 1e-14);
}

TEST(SuccessProbability, OrthogonalEnsembleWithProjectors) {
    const GUEnsemble e = orthogonal_basis_ensemble();
    Povm p{2, {e.states[0], e.states[1]}};
    EXPECT_NEAR(success_probability(e, p), 1.0, 1e-14);
}

TEST(SuccessProbability, TrineClosedForm) {
    const GUEnsemble e = gu_ensemble(coherent_top(1), 3);
    EXPECT_NEAR(success_probability(e, optimal_povm(optimal_vector_pure(coherent_top(1), 3))), 2.0 / 3, 1e-10);
}

TEST(SuccessProbability, ShapeMismatch) {
    const GUEnsemble e = gu_ensemble(coherent_top(1), 3);
    EXPECT_THROW(success_probability(e, uniform_guess_povm(2, 2)), InvalidArgument);
    EXPECT_THROW(success_probability(e, uniform_guess_povm(3, 3)), InvalidArgument);
}

TEST(Certificate, ClosedFormPassesAndGuessFails) {
    const GUEnsemble e = gu_ensemble(coherent_top(1), 3);
    const HelstromCertificate good = helstrom_certificate(e, optimal_povm(optimal_vector_pure(coherent_top(1), 3)));
    EXPECT_TRUE(good.pass);
    EXPECT_NEAR(good.helstrom_ratio, 2.0 / 3, 1e-12);
    ASSERT_TRUE(good.commutator_norm.has_value());
    EXPECT_LE(*good.commutator_norm, 1e-9);

    const HelstromCertificate bad = helstrom_certificate(e, uniform_guess_povm(2, 3));
    EXPECT_FALSE(bad.pass);
    EXPECT_LT(bad.worst_min_eigenvalue(), -1e-9);
}

TEST(Certificate, RejectsIncompletePovm) {
    const GUEnsemble e = gu_ensemble(coherent_top(1), 3);
    Povm p = uniform_guess_povm(2, 3);
    p.elements[0] *= 0.5;
    EXPECT_THROW(helstrom_certificate(e, p), InvalidArgument);
}

TEST(Certificate, ClosedFormOnRandomPureReferences) {
    std::mt19937_64 rng(2024);
    for (int n = 1; n <= 5; ++n)
        for (int m : {n + 1, n + 2, 2 * n + 2})
            for (int t = 0; t < 5; ++t) {
                const SymmetricState ref = make_pure_reference(n, oracle::random_vector(n + 1, rng));
                const GUEnsemble e = gu_ensemble(ref, m);
                const Povm p = optimal_povm(optimal_vector_pure(ref, m));
                const HelstromCertificate c = helstrom_certificate(e, p);
                EXPECT_TRUE(c.pass) << "n " << n << " m " << m << " min eig " << c.worst_min_eigenvalue()
                                    << " kernel " << c.worst_kernel_residual();
                EXPECT_LE(*c.commutator_norm, 1e-9);
            }
}

TEST(SquareRoot, OrthogonalEnsembleGivesProjectors) {
    const GUEnsemble e = orthogonal_basis_ensemble();
    const Povm p = square_root_measurement(e);
    EXPECT_LE(max_abs(p.elements[0] - e.states[0]), 1e-12);
    EXPECT_LE(max_abs(p.elements[1] - e.states[1]), 1e-12);
}

TEST(SquareRoot, TrineIsOptimal) {
    const GUEnsemble e = gu_ensemble(coherent_top(1), 3);
    EXPECT_NEAR(success_probability(e, square_root_measurement(e)), 2.0 / 3, 1e-10);
}

TEST(SquareRoot, EqualsClosedFormOnPureGU) {
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 5; ++n)
        for (int m : {n + 1, n + 3}) {
            const SymmetricState ref = make_pure_reference(n, oracle::random_vector(n + 1, rng));
            const GUEnsemble e = gu_ensemble(ref, m);
            const Povm srm = square_root_measurement(e);
            const Povm cf = optimal_povm(optimal_vector_pure(ref, m));
            EXPECT_LE(srm.completeness_residual(), 1e-10);
            for (int k = 0; k < m; ++k)
                EXPECT_LE(max_abs(srm.elements[static_cast<std::size_t>(k)] - cf.elements[static_cast<std::size_t>(k)]),
                          1e-9);
        }
}

TEST(SquareRoot, RankDeficientAverageStaysComplete) {
    // Identical states: the average is rank one, the kernel folds into element 0.
    Matrix rho = Matrix::Zero(3, 3);
    rho(0, 0) = 1.0;
    const std::vector<Matrix> states{rho, rho};
    const std::vector<double> priors{0.5, 0.5};
    const Povm p = square_root_measurement(states, priors);
    EXPECT_LE(p.completeness_residual(), 1e-12);
    EXPECT_GE(p.min_element_eigenvalue(), -1e-12);
}

TEST(HelstromTwoState, Examples) {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 0) = 1.0;
    Matrix b = Matrix::Zero(2, 2);
    b(1, 1) = 1.0;
    EXPECT_NEAR(helstrom_two_state(a, a, 0.3), 0.7, 1e-14);
    EXPECT_NEAR(helstrom_two_state(a, b, 0.5), 1.0, 1e-14);
    for (double c : {0.1, 0.5, 0.9}) {
        Vector v(2);
        v << c, std::sqrt(1 - c * c);
        EXPECT_NEAR(helstrom_two_state(a, v * v.adjoint(), 0.5), oracle::helstrom_pure_pair(c), 1e-12);
    }
    EXPECT_THROW(helstrom_two_state(a, 2.0 * b, 0.5), InvalidArgument);
    EXPECT_THROW(helstrom_two_state(a, b, 1.0), InvalidArgument);
}

TEST(HelstromTwoState, MatchesClosedFormAtTwoStates) {
    const SymmetricState ref = coherent_top(1);
    const GUEnsemble e = gu_ensemble(ref, 2);
    EXPECT_NEAR(popt_pure(ref, 2), helstrom_two_state(e.states[0], e.states[1], 0.5), 1e-10);
    const GUEnsemble mixed = gu_ensemble_mixed(1, 0.8, 2);
    EXPECT_NEAR(popt_mixed(1, 0.8, 2).p_opt, helstrom_two_state(mixed.states[0], mixed.states[1], 0.5), 1e-10);
}
