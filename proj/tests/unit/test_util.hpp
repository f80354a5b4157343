#ifndef HYPERLAB_TEST_UTIL_HPP
#define HYPERLAB_TEST_UTIL_HPP

#include "hyperlab/models.hpp"
#include "hyperlab/sampling.hpp"

#include <memory>
#include <vector>

namespace hyperlab::test {

/// Deliberately concave energy -|logV|^2, a known Hill-inequality violator.
class ConcaveHencky final : public EnergyModel {
public:
    ConcaveHencky() : EnergyModel("concave_test", {}) { fix_offset(); }
    bool has_hencky_form() const override { return true; }
    SymTensor3 kirchhoff_logV(const SymTensor3& X) const override { return X * -2.0; }
    Tangent66 kirchhoff_tangent_logV(const SymTensor3&) const override {
        return Tangent66::identity_sym() * -2.0;
    }

protected:
    double raw_energy_logV(const SymTensor3& X) const override { return -X.dot(X); }
    bool admissible_impl(const InvariantTriple& K) const override {
        return invariants_to_stretches(K).has_value();
    }
    double raw_eval(const InvariantTriple& K) const override {
        const auto lam = invariants_to_stretches(K);
        double q = 0;
        for (double l : *lam) q += std::log(l) * std::log(l);
        return -q;
    }
    std::array<double, 3> grad_impl(const InvariantTriple&) const override { return {}; }
    SymTensor3 hess_impl(const InvariantTriple&) const override { return {}; }
};

/// psi = sum lam_i^2 - c sum lam_i: violates the non-decreasing part of the
/// Ball route once c > 0 is large enough, with phi''(0) = 6 - 1.5 c.
class ShiftedQuadratic final : public PrincipalStretchModel {
public:
    explicit ShiftedQuadratic(double c)
        : PrincipalStretchModel("shifted_quadratic_test", {{"c", c}}), c_(c) {}

protected:
    double eval_impl(double l1, double l2, double l3) const override {
        return l1 * l1 + l2 * l2 + l3 * l3 - c_ * (l1 + l2 + l3);
    }
    std::array<double, 3> grad_impl(double l1, double l2, double l3) const override {
        return {2 * l1 - c_, 2 * l2 - c_, 2 * l3 - c_};
    }

private:
    double c_;
};

/// The zoo with one representative parameterization per family.
inline std::vector<std::unique_ptr<EnergyModel>> zoo() {
    std::vector<std::unique_ptr<EnergyModel>> m;
    m.push_back(hencky(1.0, 1.0));
    m.push_back(exponentiated_hencky(1.0, 1.0, 0.5, 0.25));
    m.push_back(uniaxial_family(0.0));
    m.push_back(uniaxial_family(0.5));
    m.push_back(shear_family(0.5, 1.0));
    m.push_back(chain_limited_line(1.0, 2.0 * std::sqrt(3.0), 0.25));
    m.push_back(chain_limited_area(2.0, 9.0, 0.5));
    m.push_back(chain_limited_volume(27.0 / 4.0));
    m.push_back(monomial(1.0, 0.5, -0.5));
    m.push_back(ball_counterexample());
    return m;
}

/// Random admissible invariant triples built from well-separated stretch
/// bands, so that the stretch-recovery partials of the spectral models stay
/// generic under the finite-difference probes.
inline InvariantTriple random_K(Rng& rng) {
    const double l1 = rng.uniform(1.5, 2.1);
    const double l2 = rng.uniform(0.9, 1.2);
    const double l3 = rng.uniform(0.45, 0.65);
    return invariants(Mat3::diag(l1, l2, l3));
}

} // namespace hyperlab::test

#endif
