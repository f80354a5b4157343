#include "hyperlab/errors.hpp"
#include "hyperlab/sampling.hpp"
#include "hyperlab/symtensor.hpp"

#include <doctest.h>

#include <cmath>

using namespace hyperlab;

namespace {

SymTensor3 random_spd(Rng& rng, double max_cond) {
    const double c = std::pow(10.0, rng.uniform(0.0, std::log10(max_cond)));
    const Mat3 R = rng.rotation();
    const Mat3 D = Mat3::diag(c, rng.uniform(1.0, c), 1.0);
    return (R * D * R.transposed()).sym();
}

} // namespace

TEST_CASE("eig_sym: identity and diagonal") {
    const Spectral3 s = eig_sym(SymTensor3::identity());
    CHECK(s.lambda[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.lambda[2] == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(s.v[i].dot(s.v[j]) == doctest::Approx(i == j ? 1.0 : 0.0).scale(1).epsilon(1e-12));

    const Spectral3 d = eig_sym(SymTensor3::diag(4.0, 1.0, 0.25));
    CHECK(d.lambda[0] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(d.lambda[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.lambda[2] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(d.v[0].x) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_sym: simple-shear B at gamma = 1") {
    // B = [[2,1,0],[1,1,0],[0,0,1]]; in-plane pair solves l^2 - 3l + 1 = 0.
    SymTensor3 B = SymTensor3::diag(2.0, 1.0, 1.0);
    B.xy = 1.0;
    const Spectral3 s = eig_sym(B);
    CHECK(s.lambda[0] * s.lambda[2] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(s.lambda[1] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(s.lambda[0] == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-13));
}

TEST_CASE("eig_sym: reconstruction and orthonormality on conditioned random SPD") {
    Rng rng(101);
    for (int i = 0; i < 1000; ++i) {
        const SymTensor3 X = random_spd(rng, 1e6);
        const Spectral3 s = eig_sym(X);
        CHECK((s.reconstruct() - X).norm() <= 1e-12 * X.norm());
        for (int a = 0; a < 3; ++a)
            for (int b = a; b < 3; ++b)
                CHECK(std::abs(s.v[a].dot(s.v[b]) - (a == b ? 1.0 : 0.0)) < 1e-12);
        CHECK(s.lambda[2] > 0);
    }
}

TEST_CASE("log/exp round trips") {
    CHECK(log_spd(SymTensor3::identity()).norm() == doctest::Approx(0.0).scale(1).epsilon(1e-15));
    const SymTensor3 L = log_spd(SymTensor3::diag(std::exp(2.0), 1.0, std::exp(-2.0)));
    CHECK(L.xx == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(L.yy == doctest::Approx(0.0).scale(1).epsilon(1e-13));
    CHECK(L.zz == doctest::Approx(-2.0).epsilon(1e-13));

    CHECK((exp_sym(SymTensor3{}) - SymTensor3::identity()).norm() < 1e-15);
    const SymTensor3 E = exp_sym(SymTensor3::diag(1, 0, 0));
    CHECK(E.xx == doctest::Approx(M_E).epsilon(1e-14));
    CHECK(E.yy == doctest::Approx(1.0).epsilon(1e-14));

    Rng rng(55);
    for (int i = 0; i < 1000; ++i) {
        const SymTensor3 X = random_spd(rng, 1e6);
        CHECK((exp_sym(log_spd(X)) - X).norm() <= 1e-10 * X.norm());
    }
    // log(V^2) = 2 log(V)
    for (int i = 0; i < 100; ++i) {
        const SymTensor3 V = random_spd(rng, 1e2);
        const Mat3 Vm = Mat3::from_sym(V);
        const SymTensor3 V2 = (Vm * Vm).sym();
        CHECK((log_spd(V2) - log_spd(V) * 2.0).norm() <= 1e-11 * log_spd(V2).norm() + 1e-13);
    }
}

TEST_CASE("log_spd rejects indefinite input") {
    CHECK_THROWS_AS((void)log_spd(SymTensor3::diag(1, 1, -0.5)), NotPositiveDefinite);
    CHECK_THROWS_AS((void)log_spd(SymTensor3::diag(1, 1, 0)), NotPositiveDefinite);
}

TEST_CASE("basis6 Frobenius isometry") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const SymTensor3 X = rng.sym_ball(3.0), Y = rng.sym_ball(3.0);
        CHECK(std::abs(X.dot(Y) - dot6(to_basis6(X), to_basis6(Y))) <=
              1e-14 * (X.norm() * Y.norm() + 1.0));
        CHECK((from_basis6(to_basis6(X)) - X).norm() < 1e-15 * (1 + X.norm()));
    }
}

TEST_CASE("tangent_min_eig on canonical fourth-order tensors") {
    CHECK(tangent_min_eig(Tangent66::identity_sym()) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(tangent_min_eig(Tangent66::identity_sym() * -1.0) ==
          doctest::Approx(-1.0).epsilon(1e-13));
    const SymTensor3 one = SymTensor3::identity();
    const auto ev = tangent_eigenvalues(Tangent66::dyad(one, one));
    CHECK(ev[5] == doctest::Approx(3.0).epsilon(1e-13)); // rank one on the hydrostatic axis
    for (int i = 0; i < 5; ++i) CHECK(std::abs(ev[i]) < 1e-13);
}

TEST_CASE("tangent_min_eig sign agrees with the quadratic form over random H") {
    // Cross-check on symmetric-part-definite tensors: every Rayleigh quotient
    // shares the sign of the extreme eigenvalue; in general the quotient is
    // bounded below by the minimum eigenvalue.
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        Tangent66 T;
        for (double& v : T.m) v = rng.normal();
        const double shift = rng.uniform(-1.0, 1.0);
        T = T.sym_part() + Tangent66::identity_sym() * (shift * 6.0);
        const auto ev = tangent_eigenvalues(T);
        double min_quad = 1e300;
        for (int k = 0; k < 1000; ++k) {
            SymTensor3 H = rng.sym_ball(1.0);
            const double n2 = H.dot(H);
            if (n2 < 1e-12) continue;
            min_quad = std::min(min_quad, T.quad(H) / n2);
        }
        if (ev[0] > 1e-3) CHECK(min_quad > 0);       // positive definite
        if (ev[5] < -1e-3) CHECK(min_quad < 0);      // negative definite
        CHECK(min_quad >= ev[0] - 1e-9 * (1 + T.norm()));
        CHECK(min_quad <= ev[5] + 1e-9 * (1 + T.norm()));
    }
}

TEST_CASE("exp divided difference and its coincident limit") {
    CHECK(exp_divided_difference(std::log(4.0), std::log(1.0)) ==
          doctest::Approx(3.0 / std::log(4.0)).epsilon(1e-14));
    CHECK(exp_divided_difference(0.3, 0.3) == doctest::Approx(std::exp(0.3)).epsilon(1e-14));
    // series fallback continuous across the threshold
    const double a = 0.2;
    CHECK(exp_divided_difference(a + 5e-7, a - 5e-7) ==
          doctest::Approx(std::exp(a)).epsilon(1e-10));
}
