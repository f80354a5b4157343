#include "hyperlab/bvp.hpp"
#include "hyperlab/errors.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace hyperlab;

namespace {

// Closed-form transverse stretch for the alpha = 0 member: a quadratic in
// lambda2^2.
double transverse_alpha0(double l1) {
    return std::sqrt((1.0 + std::sqrt(1.0 + 3.0 * l1 * l1)) / 3.0);
}

// alpha = 1/2: depressed cubic y^3 + p y + q = 0 in y = lambda2^2 with
// p = -(2/3)/l1, q = -l1/3; single positive root via the hyperbolic form.
double transverse_alpha_half(double l1) {
    const double p = -2.0 / (3.0 * l1), q = -l1 / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;
    double y;
    if (disc >= 0) {
        const double s = std::sqrt(disc);
        y = std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s);
    } else {
        const double r = std::sqrt(-p * p * p / 27.0);
        const double phi = std::acos(-q / (2.0 * r));
        y = 2.0 * std::sqrt(-p / 3.0) * std::cos(phi / 3.0);
    }
    return std::sqrt(y);
}

} // namespace

TEST_CASE("solve_transverse: identity and the closed-form oracles") {
    for (const double al : {0.0, 0.25, 0.5, 0.75})
        CHECK(solve_transverse(*uniaxial_family(al), 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    const auto m0 = uniaxial_family(0.0);
    const auto mh = uniaxial_family(0.5);
    for (double ll1 = -2.0; ll1 <= 4.0; ll1 += 6.0 / 99.0) {
        const double l1 = std::exp(ll1);
        CHECK(std::abs(solve_transverse(*m0, l1) - transverse_alpha0(l1)) <=
              1e-10 * transverse_alpha0(l1));
        CHECK(std::abs(solve_transverse(*mh, l1) - transverse_alpha_half(l1)) <=
              1e-10 * transverse_alpha_half(l1));
    }
    CHECK_THROWS_AS((void)solve_transverse(*m0, -1.0), NonPositiveStretch);
}

TEST_CASE("transverse residual has a single sign change on the scan interval") {
    // lambda1 = 1 is excluded: the root sits exactly on a scan node there.
    const auto m = uniaxial_family(0.25);
    for (double l1 : {0.2, 0.7, 1.7, 3.0, 20.0}) {
        int changes = 0;
        double prev = 0;
        bool have_prev = false;
        for (int i = 0; i < 241; ++i) {
            const double l2 = std::pow(10.0, -6.0 + 12.0 * i / 240.0);
            const double g = cauchy_stress(*m, make_uniaxial(l1, l2, l2)).sigma.yy;
            if (have_prev && g * prev < 0) ++changes;
            prev = g;
            have_prev = true;
        }
        CHECK(changes == 1);
    }
}

TEST_CASE("uniaxial trace: boundary condition, zero row, continuation") {
    const auto m = uniaxial_family(0.0);
    const auto res = trace_uniaxial(*m, linspace(-2.0, 4.0, 121));
    REQUIRE(res.trace.rows.size() == 121);
    double prev = -1e30;
    for (const auto& r : res.trace.rows) {
        REQUIRE(r.ok);
        CHECK(r.control > prev);
        prev = r.control;
        CHECK(std::abs(r.s22) <= 1e-10);
        CHECK(std::abs(r.s33) <= 1e-10);
        // energy column equals the model at the traced state
        const DeformationState s = make_uniaxial(std::exp(r.control), r.lambda2, r.lambda2);
        CHECK(r.energy == doctest::Approx(m->eval(s.K)).epsilon(1e-12));
    }
    const auto res0 = trace_uniaxial(*m, linspace(-1.0, 1.0, 41));
    const auto& mid = res0.trace.rows[20];
    CHECK(mid.control == 0.0);
    CHECK(std::abs(mid.s11) <= 1e-10);
}

TEST_CASE("uniaxial trace: non-monotone in tension with decaying tail") {
    for (double al : {0.0, 0.25, 0.5, 0.75}) {
        const auto m = uniaxial_family(al);
        const auto res = trace_uniaxial(*m, linspace(0.0, 4.0, 201));
        CHECK(!res.s11_monotonicity.is_monotone);
        REQUIRE(res.s11_monotonicity.extrema.size() == 1);
        const Extremum& ex = res.s11_monotonicity.extrema.front();
        CHECK(ex.maximum);
        CHECK(ex.value > 0);
        // strictly below the peak and falling past it; the decay rate toward
        // the zero asymptote slows sharply as alpha grows (measured tail
        // fractions at log lambda1 = 4: 0.10, 0.26, 0.50, 0.78)
        CHECK(res.trace.rows.back().s11 < ex.value);
        const auto& rows = res.trace.rows;
        CHECK(rows.back().s11 < rows[rows.size() - 2].s11);
    }
    // the 25%-of-peak horizon at log lambda1 = 4 is reached by alpha = 0
    const auto res0 = trace_uniaxial(*uniaxial_family(0.0), linspace(0.0, 4.0, 201));
    CHECK(res0.trace.rows.back().s11 <
          0.25 * res0.s11_monotonicity.extrema.front().value);
}

TEST_CASE("incompressible uniaxial trace: ogden closed form") {
    const auto m = incompressible_ogden({1.0}, {2.0});
    const auto res = trace_uniaxial_incompressible(*m, linspace(-2.0, 2.0, 81));
    for (const auto& r : res.trace.rows) {
        // phi = e^{2x} + 2 e^{-x}: sigma11 = 2 e^{2x} - 2 e^{-x}
        const double want = 2 * std::exp(2 * r.control) - 2 * std::exp(-r.control);
        CHECK(r.s11 == doctest::Approx(want).epsilon(1e-13));
        CHECK(r.lambda2 == doctest::Approx(std::exp(-r.control / 2)).epsilon(1e-15));
    }
    CHECK(res.s11_monotonicity.is_monotone);
    CHECK(incompressible_sigma11(*m, 0.0) == doctest::Approx(0.0).scale(1));
    // the two sigma11 routes agree
    for (double x = -2.0; x <= 2.0; x += 0.25)
        CHECK(std::abs(incompressible_sigma11(*m, x) - incompressible_sigma11_fd(*m, x)) <=
              1e-8 * std::max(1.0, std::abs(incompressible_sigma11(*m, x))));
}

TEST_CASE("shear trace: closed form, normal stresses, extremum, energy") {
    const double al = 0.5;
    const auto m = shear_family(al, 1.0);
    const auto res = trace_shear(*m, linspace(-8.0, 8.0, 401));
    for (const auto& r : res.trace.rows) {
        const double g = r.control;
        const double want = al * std::pow(3 + g * g, al / 2 - 1) * g;
        CHECK(std::abs(r.s12 - want) <= 1e-12);
        CHECK(std::abs(r.s22 + 0.5 * r.s11) <= 1e-12);
        CHECK(std::abs(r.s33 + 0.5 * r.s11) <= 1e-12);
        CHECK(r.energy == doctest::Approx(std::pow(3 + g * g, al / 2) -
                                          std::pow(3.0, al / 2)).epsilon(1e-12));
    }
    const auto& mid = res.trace.rows[200];
    CHECK(mid.control == 0.0);
    CHECK(std::abs(mid.s11) + std::abs(mid.s12) <= 1e-13);

    REQUIRE(res.s11_monotonicity.extrema.size() == 2);
    const double want_loc = std::sqrt(3.0 / (1.0 - al));
    for (const auto& ex : res.s11_monotonicity.extrema) {
        CHECK(std::abs(std::abs(ex.control) - want_loc) <= 1e-3);
        CHECK(std::abs(std::abs(ex.value) -
                       al * std::pow(3 + 3 / (1 - al), al / 2 - 1) * want_loc) <= 1e-6);
    }

    // single spot value from the closed form
    const auto one = trace_shear(*m, linspace(-1.0, 1.0, 3));
    CHECK(one.trace.rows[2].s12 == doctest::Approx(0.5 * std::pow(4.0, -0.75)).epsilon(1e-14));
}

TEST_CASE("shear trace of the 1928 law is non-monotone") {
    const auto law = hencky_1928(1.0, 1.0);
    const auto res = trace_shear(*law, linspace(-8.0, 8.0, 401));
    CHECK(!res.s11_monotonicity.is_monotone);
    CHECK(res.s11_monotonicity.extrema.size() == 2);
    // sigma12 = 2 mu (logV)_{12}, zero at gamma = 0
    CHECK(std::abs(res.trace.rows[200].s12) <= 1e-13);
}

TEST_CASE("shear monotone for a polyconvex-sufficient model") {
    const auto m = uniaxial_family(0.5);
    const auto res = trace_shear(*m, linspace(-8.0, 8.0, 201));
    CHECK(res.s11_monotonicity.is_monotone);
}

TEST_CASE("analyze_monotonicity on synthetic columns") {
    std::vector<double> c = linspace(0.0, 1.0, 11), v(11);
    for (int i = 0; i < 11; ++i) v[i] = 2.0 * c[i];
    const auto inc = analyze_monotonicity(c, v);
    CHECK(inc.is_monotone);
    CHECK(inc.asymptote == doctest::Approx(2.0));

    for (int i = 0; i < 11; ++i) v[i] = c[i] * (1.0 - c[i]); // peak at 0.5
    const auto hump = analyze_monotonicity(c, v);
    CHECK(!hump.is_monotone);
    REQUIRE(hump.extrema.size() == 1);
    CHECK(hump.extrema.front().maximum);
    const auto refined = analyze_monotonicity(c, v, [](double x) { return x * (1.0 - x); });
    CHECK(refined.extrema.front().control == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(refined.extrema.front().value == doctest::Approx(0.25).epsilon(1e-6));

    CHECK_THROWS_AS((void)analyze_monotonicity({0.0, 1.0}, {0.0, 1.0}), Error);
}
