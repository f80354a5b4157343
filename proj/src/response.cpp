#include "hyperlab/response.hpp"

#include "hyperlab/errors.hpp"

#include <cmath>

namespace hyperlab {

namespace {

double fd_step(const SymTensor3& logV) {
    return 1e-5 * std::max(1.0, logV.norm());
}

} // namespace

StressState cauchy_stress(const EnergyModel& m, const DeformationState& s) {
    StressState out;
    out.J = s.J;
    if (m.has_hencky_form()) {
        out.tau = m.kirchhoff_logV(s.logV);
        out.sigma = out.tau * (1.0 / s.J);
        return out;
    }
    const auto g = m.grad(s.K);
    const auto dK = dK_dlogV(s);
    out.sigma = (dK[0] * g[0] + dK[1] * g[1] + dK[2] * g[2]) * (1.0 / s.K.K3);
    out.tau = out.sigma * s.J;
    return out;
}

StressState cauchy_stress_fd(const EnergyModel& m, const DeformationState& s) {
    const double h = fd_step(s.logV);
    Vec6 tau{};
    for (int b = 0; b < 6; ++b) {
        Vec6 e{};
        e[b] = 1.0;
        const SymTensor3 dir = from_basis6(e);
        const double wp = m.energy_logV(s.logV + dir * h);
        const double wm = m.energy_logV(s.logV + dir * (-h));
        tau[b] = (wp - wm) / (2 * h);
    }
    StressState out;
    out.J = s.J;
    out.tau = from_basis6(tau);
    out.sigma = out.tau * (1.0 / s.J);
    return out;
}

StressState principal_cauchy(const PrincipalStretchModel& m, double l1, double l2,
                             double l3, double p) {
    const auto g = m.grad(l1, l2, l3);
    StressState out;
    out.J = l1 * l2 * l3;
    out.sigma = SymTensor3::diag(-p + l1 * g[0], -p + l2 * g[1], -p + l3 * g[2]);
    out.tau = out.sigma * out.J;
    return out;
}

StressState principal_cauchy_compressible(const PrincipalStretchModel& m, double l1,
                                          double l2, double l3) {
    const auto g = m.grad(l1, l2, l3);
    StressState out;
    out.J = l1 * l2 * l3;
    out.sigma = SymTensor3::diag(l1 * g[0], l2 * g[1], l3 * g[2]) * (1.0 / out.J);
    out.tau = out.sigma * out.J;
    return out;
}

Tangent66 tangent_analytic(const EnergyModel& m, const DeformationState& s) {
    const SymTensor3 one = SymTensor3::identity();
    if (m.has_hencky_form()) {
        // sigma = exp(-tr logV) tau(logV)
        const SymTensor3 tau = m.kirchhoff_logV(s.logV);
        return (m.kirchhoff_tangent_logV(s.logV) - Tangent66::dyad(tau, one)) * (1.0 / s.J);
    }
    const auto g = m.grad(s.K);
    const SymTensor3 H = m.hess(s.K);
    const auto dK = dK_dlogV(s);
    const auto d2K = d2K_dlogV(s);
    const SymTensor3 sigma =
        (dK[0] * g[0] + dK[1] * g[1] + dK[2] * g[2]) * (1.0 / s.K.K3);

    Tangent66 T = Tangent66::dyad(sigma, one) * -1.0;
    Tangent66 inner = d2K[0] * g[0] + d2K[1] * g[1] + d2K[2] * g[2];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) inner += Tangent66::dyad(dK[i], dK[j]) * H(i, j);
    return T + inner * (1.0 / s.K.K3);
}

namespace {

template <typename SigmaFn>
Tangent66 tangent_fd_impl(const SigmaFn& sigma, const SymTensor3& logV) {
    const double h0 = 1e-4 * std::max(1.0, logV.norm());
    auto column_diff = [&](const SymTensor3& dir, double h) {
        const SymTensor3 sp = sigma(logV + dir * h);
        const SymTensor3 sm = sigma(logV + dir * (-h));
        return (sp - sm) * (1.0 / (2 * h));
    };
    Tangent66 T;
    for (int b = 0; b < 6; ++b) {
        Vec6 e{};
        e[b] = 1.0;
        const SymTensor3 dir = from_basis6(e);
        const SymTensor3 d1 = column_diff(dir, h0);
        const SymTensor3 d2 = column_diff(dir, h0 / 2);
        const Vec6 col = to_basis6(d2 * (4.0 / 3.0) - d1 * (1.0 / 3.0));
        for (int i = 0; i < 6; ++i) T(i, b) = col[i];
    }
    return T;
}

} // namespace

Tangent66 tangent_fd(const EnergyModel& m, const SymTensor3& logV) {
    return tangent_fd_impl(
        [&](const SymTensor3& X) { return sigma_at_logV(m, X); }, logV);
}

Tangent66 tangent_fd(const CauchyLaw& law, const SymTensor3& logV) {
    return tangent_fd_impl(
        [&](const SymTensor3& X) { return law.sigma_logV(X); }, logV);
}

SymTensor3 sigma_at_logV(const EnergyModel& m, const SymTensor3& logV) {
    return cauchy_stress(m, DeformationState::from_logV(logV)).sigma;
}

} // namespace hyperlab
