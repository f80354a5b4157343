#include "hyperlab/response.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace hyperlab;

namespace {

// Sampling radius inside any chain-limited wall; compute once per model, the
// clipped-radius search is not free.
double sample_radius(const EnergyModel& m, double radius) {
    return std::min(radius, 0.98 * m.safe_logv_radius(0.99));
}

DeformationState random_state(const EnergyModel& m, Rng& rng, double r) {
    for (;;) {
        const DeformationState s = DeformationState::from_logV(rng.sym_ball(r));
        if (m.admissible(s.K)) return s;
    }
}

} // namespace

TEST_CASE("stress vanishes at the identity for every model") {
    const DeformationState id = DeformationState::from_F(Mat3::identity());
    for (const auto& m : test::zoo()) {
        if (m->name() == "monomial") continue;
        const StressState st = cauchy_stress(*m, id);
        CHECK(st.sigma.norm() <= 1e-12);
        CHECK(st.tau.norm() <= 1e-12);
    }
}

TEST_CASE("hencky energy: Kirchhoff stress equals 2 mu logV + lambda tr(logV) 1") {
    const auto m = hencky(1.3, 0.7);
    Rng rng(61);
    for (int i = 0; i < 100; ++i) {
        const DeformationState s = DeformationState::from_logV(rng.sym_ball(2.0));
        const StressState st = cauchy_stress(*m, s);
        const SymTensor3 want =
            s.logV * (2 * 1.3) + SymTensor3::identity() * (0.7 * s.logV.trace());
        CHECK((st.tau - want).norm() <= 1e-12 * (1 + want.norm()));
        CHECK((st.tau - st.sigma * s.J).norm() <= 1e-12 * (1 + st.tau.norm()));
    }
}

TEST_CASE("invariant-partials route reproduces the hencky closed form at generic states") {
    // Exercises the stretch-recovery chain rule behind grad() by assembling
    // sigma = (1/K3) sum psi_i DK_i explicitly.
    const auto m = hencky(1.0, 0.5);
    Rng rng(67);
    for (int i = 0; i < 50; ++i) {
        double l[3];
        for (double& v : l) v = std::exp(rng.uniform(-0.7, 0.7));
        if (std::abs(l[0] - l[1]) < 0.05 || std::abs(l[1] - l[2]) < 0.05 ||
            std::abs(l[0] - l[2]) < 0.05)
            continue;
        const DeformationState s = make_uniaxial(l[0], l[1], l[2]);
        const auto g = m->grad(s.K);
        const auto dK = dK_dlogV(s);
        const SymTensor3 sig =
            (dK[0] * g[0] + dK[1] * g[1] + dK[2] * g[2]) * (1.0 / s.K.K3);
        const SymTensor3 want =
            (s.logV * 2.0 + SymTensor3::identity() * (0.5 * s.logV.trace())) * (1.0 / s.J);
        CHECK((sig - want).norm() <= 1e-8 * (1 + want.norm()));
    }
}

TEST_CASE("uniaxial family alpha = 0 at lambda1 = 2: frozen stress value") {
    const auto m = uniaxial_family(0.0);
    const double l2 = std::sqrt((1.0 + std::sqrt(1.0 + 3.0 * 4.0)) / 3.0);
    const StressState st = cauchy_stress(*m, make_uniaxial(2.0, l2, l2));
    CHECK(st.sigma.xx == doctest::Approx(0.522918271701004).epsilon(1e-12));
    CHECK(std::abs(st.sigma.yy) <= 1e-14);
    CHECK(std::abs(st.sigma.zz) <= 1e-14);
}

TEST_CASE("oracle equivalence: invariant-route stress vs Hencky-gradient FD") {
    Rng rng(71);
    for (const auto& m : test::zoo()) {
        const double r = sample_radius(*m, 1.5);
        for (int i = 0; i < 1000; ++i) {
            const DeformationState s = random_state(*m, rng, r);
            const StressState a = cauchy_stress(*m, s);
            const StressState b = cauchy_stress_fd(*m, s);
            CHECK((a.sigma - b.sigma).norm() <= 1e-6 * std::max(1e-6, a.sigma.norm()));
        }
    }
}

TEST_CASE("tangent: analytic assembly vs finite differences") {
    Rng rng(73);
    for (const auto& m : test::zoo()) {
        const double r = sample_radius(*m, 1.5);
        for (int i = 0; i < 1000; ++i) {
            const DeformationState s = random_state(*m, rng, r);
            const Tangent66 ta = tangent_analytic(*m, s);
            const Tangent66 tb = tangent_fd(*m, s.logV);
            CHECK((ta - tb).norm() <= 1e-5 * std::max(1.0, ta.norm()));
        }
    }
}

TEST_CASE("tangent at the identity: linear-elastic limits") {
    const DeformationState id = DeformationState::from_F(Mat3::identity());
    const SymTensor3 one = SymTensor3::identity();
    const auto mh = hencky(1.2, 0.8);
    const Tangent66 want =
        Tangent66::identity_sym() * 2.4 + Tangent66::dyad(one, one) * 0.8;
    CHECK((tangent_analytic(*mh, id) - want).norm() < 1e-10);

    const auto ms = shear_family(0.5, 1.0);
    CHECK(tangent_min_eig(tangent_analytic(*ms, id)) > 0);
}

TEST_CASE("hencky_1928 law: constant positive-definite tangent") {
    const auto law = hencky_1928(1.0, 1.0);
    Rng rng(79);
    const SymTensor3 one = SymTensor3::identity();
    const Tangent66 want = Tangent66::identity_sym() * 2.0 + Tangent66::dyad(one, one);
    for (int i = 0; i < 10; ++i) {
        const Tangent66 T = tangent_fd(*law, rng.sym_ball(2.0));
        CHECK((T - want).norm() <= 1e-8);
    }
}

TEST_CASE("hyperelastic tangent structure: skew part is the stress-volume coupling") {
    // D sigma = -sigma (x) 1 + symmetric terms, so the skew part of the
    // tangent must equal -(sigma (x) 1 - 1 (x) sigma)/2; equivalently the
    // Kirchhoff (Hill) tangent is major symmetric.
    Rng rng(83);
    const SymTensor3 one = SymTensor3::identity();
    for (const auto& m : test::zoo()) {
        const double r = sample_radius(*m, 1.0);
        for (int i = 0; i < 25; ++i) {
            const DeformationState s = random_state(*m, rng, r);
            const Tangent66 T = tangent_fd(*m, s.logV);
            const SymTensor3 sig = cauchy_stress(*m, s).sigma;
            const Tangent66 skew = (T - T.transposed()) * 0.5;
            const Tangent66 want =
                (Tangent66::dyad(sig, one) - Tangent66::dyad(one, sig)) * -0.5;
            CHECK((skew - want).norm() <= 1e-6 * (1.0 + T.norm()));
        }
    }
}

TEST_CASE("isotropy equivariance of the stress response") {
    Rng rng(89);
    for (const auto& m : test::zoo()) {
        if (m->name() == "monomial") continue;
        const double r = sample_radius(*m, 0.8);
        for (int i = 0; i < 20; ++i) {
            const DeformationState s = random_state(*m, rng, r);
            const Mat3 Q = rng.rotation();
            const SymTensor3 rotated = (Q * Mat3::from_sym(s.logV) * Q.transposed()).sym();
            const SymTensor3 lhs = sigma_at_logV(*m, rotated);
            const SymTensor3 rhs =
                (Q * Mat3::from_sym(cauchy_stress(*m, s).sigma) * Q.transposed()).sym();
            CHECK((lhs - rhs).norm() <= 1e-10 * (1 + rhs.norm()));
        }
    }
}

TEST_CASE("principal-stretch stress: hydrostatic cancellation and the ogden example") {
    const auto q = incompressible_ogden({1.0}, {2.0});
    // psi = sum lam^2: at (1,1,1) with p = 2 the stress vanishes
    CHECK(principal_cauchy(*q, 1, 1, 1, 2.0).sigma.norm() <= 1e-14);
    // at (2, 2^{-1/2}, 2^{-1/2}) with p = lam2 psi,2 = 1: sigma11 = 8 - 1 = 7
    const double lt = std::pow(2.0, -0.5);
    const StressState st = principal_cauchy(*q, 2.0, lt, lt, 1.0);
    CHECK(st.sigma.xx == doctest::Approx(7.0).epsilon(1e-14));
    CHECK(std::abs(st.sigma.yy) <= 1e-14);
    CHECK(std::abs(st.sigma.zz) <= 1e-14);
    // permutation equivariance
    const StressState p1 = principal_cauchy(*q, 2.0, lt, lt, 1.0);
    const StressState p2 = principal_cauchy(*q, lt, 2.0, lt, 1.0);
    CHECK(p1.sigma.xx == doctest::Approx(p2.sigma.yy));
    CHECK(p1.sigma.yy == doctest::Approx(p2.sigma.xx));
    // compressible variant at J != 1
    const StressState c = principal_cauchy_compressible(*q, 2.0, 1.0, 1.0);
    CHECK(c.J == doctest::Approx(2.0));
    CHECK(c.sigma.xx == doctest::Approx(8.0 / 2.0).epsilon(1e-14));
    CHECK(c.tau.xx == doctest::Approx(8.0).epsilon(1e-14));
}
