#include "hyperlab/kinematics.hpp"

#include "hyperlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hyperlab {

InvariantTriple InvariantTriple::at_identity() {
    return {std::sqrt(3.0), std::sqrt(3.0), 1.0};
}

InvariantTriple invariants(const Mat3& F) {
    const double J = F.det();
    if (J <= 0.0)
        throw NonPositiveDeterminant("invariants: det F = " + std::to_string(J));
    return {F.norm(), F.cof().norm(), J};
}

DeformationState DeformationState::from_F(const Mat3& F) {
    DeformationState s;
    s.F = F;
    s.K = invariants(F);
    s.J = s.K.K3;
    s.B = F.aat();
    s.B_spec = eig_sym(s.B);
    Spectral3 half_log = s.B_spec;
    for (int i = 0; i < 3; ++i) half_log.lambda[i] = 0.5 * std::log(s.B_spec.lambda[i]);
    s.logV = half_log.reconstruct();
    return s;
}

DeformationState DeformationState::from_logV(const SymTensor3& logV) {
    return from_F(Mat3::from_sym(exp_sym(logV)));
}

DeformationState make_uniaxial(double l1, double l2, double l3) {
    if (l1 <= 0 || l2 <= 0 || l3 <= 0)
        throw NonPositiveStretch("make_uniaxial: stretches must be positive");
    return DeformationState::from_F(Mat3::diag(l1, l2, l3));
}

DeformationState make_shear(double gamma) {
    Mat3 F = Mat3::identity();
    F(0, 1) = gamma;
    return DeformationState::from_F(F);
}

std::array<SymTensor3, 3> dK_dlogV(const DeformationState& s) {
    const SymTensor3 one = SymTensor3::identity();
    const SymTensor3 dK1 = s.B * (1.0 / s.K.K1);
    const SymTensor3 dK2 = (one * (s.K.K2 * s.K.K2) - s.B.cof()) * (1.0 / s.K.K2);
    const SymTensor3 dK3 = one * s.K.K3;
    return {dK1, dK2, dK3};
}

double db_divided_difference(double bi, double bj) {
    return exp_divided_difference(std::log(bi), std::log(bj));
}

namespace {

// D_{logV} f(logV) for a primary function with eigenvalue map g(b) on the
// eigenvalues b of B: diagonal coefficients g'(b_i) * 2 b_i (chain through
// l = log(b)/2), off-diagonal the divided differences of g(e^{2l}).
Tangent66 spectral_tangent(const Spectral3& bs, const std::array<double, 3>& diag,
                           const std::array<std::array<double, 3>, 3>& off) {
    return Tangent66::from_action([&](const SymTensor3& H) {
        // Components of H in the eigenbasis.
        double Hc[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) Hc[i][j] = Hc[j][i] = bs.v[i].dot(H.apply(bs.v[j]));
        SymTensor3 out;
        for (int i = 0; i < 3; ++i) out += sym_outer(bs.v[i]) * (diag[i] * Hc[i][i]);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const Mat3 m = outer(bs.v[i], bs.v[j]) + outer(bs.v[j], bs.v[i]);
                out += m.sym() * (off[i][j] * Hc[i][j]);
            }
        return out;
    });
}

} // namespace

Tangent66 dB_dlogV(const DeformationState& s) {
    const auto& b = s.B_spec.lambda;
    std::array<double, 3> diag{2 * b[0], 2 * b[1], 2 * b[2]};
    std::array<std::array<double, 3>, 3> off{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) off[i][j] = 2.0 * db_divided_difference(b[i], b[j]);
    return spectral_tangent(s.B_spec, diag, off);
}

Tangent66 dBinv_dlogV(const DeformationState& s) {
    const auto& b = s.B_spec.lambda;
    std::array<double, 3> diag{-2 / b[0], -2 / b[1], -2 / b[2]};
    std::array<std::array<double, 3>, 3> off{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            off[i][j] = -2.0 * exp_divided_difference(-std::log(b[i]), -std::log(b[j]));
    return spectral_tangent(s.B_spec, diag, off);
}

std::array<Tangent66, 3> d2K_dlogV(const DeformationState& s) {
    const auto dK = dK_dlogV(s);
    const double K1 = s.K.K1, K2 = s.K.K2, K3 = s.K.K3;
    const SymTensor3 one = SymTensor3::identity();

    const Tangent66 d2K1 =
        (dB_dlogV(s) - Tangent66::dyad(dK[0], dK[0])) * (1.0 / K1);

    const SymTensor3 binv_over_K2 = s.B.cof() * (1.0 / (K3 * K3 * K2));
    const Tangent66 lemma2 =
        dBinv_dlogV(s) + Tangent66::dyad(binv_over_K2, binv_over_K2) * (2.0 * K3 * K3);
    const Tangent66 d2K2 =
        Tangent66::dyad(dK[1], dK[1]) * (1.0 / K2) - lemma2 * (K3 * K3 / K2);

    const Tangent66 d2K3 = Tangent66::dyad(one, one) * K3;
    return {d2K1, d2K2, d2K3};
}

std::pair<Tangent66, Tangent66> lemma_tensors(const DeformationState& s) {
    const double K1 = s.K.K1, K2 = s.K.K2, K3 = s.K.K3;
    const SymTensor3 b_over_K1 = s.B * (1.0 / K1);
    const Tangent66 first = dB_dlogV(s) - Tangent66::dyad(b_over_K1, b_over_K1) * 2.0;
    const SymTensor3 binv_over_K2 = s.B.cof() * (1.0 / (K3 * K3 * K2));
    const Tangent66 second =
        dBinv_dlogV(s) + Tangent66::dyad(binv_over_K2, binv_over_K2) * (2.0 * K3 * K3);
    return {first, second};
}

std::optional<std::array<double, 3>> invariants_to_stretches(const InvariantTriple& K) {
    if (!(K.K1 > 0) || !(K.K2 > 0) || !(K.K3 > 0)) return std::nullopt;
    // Roots of b^3 - I1 b^2 + I2 b - I3 with I_i = K_i^2.
    const double i1 = K.K1 * K.K1, i2 = K.K2 * K.K2, i3 = K.K3 * K.K3;
    const double p = i2 - i1 * i1 / 3.0;
    const double q = -i3 + i1 * i2 / 3.0 - 2.0 * i1 * i1 * i1 / 27.0;
    std::array<double, 3> b;
    if (p > 1e-14 * i1 * i1) return std::nullopt; // complex pair
    if (p > -1e-14 * i1 * i1) {
        b = {i1 / 3.0, i1 / 3.0, i1 / 3.0};
    } else {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);
        if (std::abs(arg) > 1.0 + 1e-9) return std::nullopt;
        arg = std::clamp(arg, -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            b[k] = i1 / 3.0 + m * std::cos(phi - 2.0 * M_PI * k / 3.0);
        std::sort(b.begin(), b.end(), std::greater<double>());
    }
    if (b[2] <= 0) return std::nullopt;
    return std::array<double, 3>{std::sqrt(b[0]), std::sqrt(b[1]), std::sqrt(b[2])};
}

} // namespace hyperlab
