#ifndef HYPERLAB_RESPONSE_HPP
#define HYPERLAB_RESPONSE_HPP

#include "hyperlab/kinematics.hpp"
#include "hyperlab/models.hpp"

namespace hyperlab {

/// Cauchy and Kirchhoff stress at a state; tau = J sigma.
struct StressState {
    SymTensor3 sigma;
    SymTensor3 tau;
    double J = 1;
};

/// Cauchy stress from the invariant partials,
///   sigma = (1/K3) [psi_1 B/K1 + psi_2 (K2^2 1 - cof B)/K2 + psi_3 K3 1],
/// with B and cof B assembled from F directly. Models carrying a closed form
/// in the Hencky strain are evaluated through it instead.
StressState cauchy_stress(const EnergyModel& m, const DeformationState& s);

/// Independent oracle: tau as the central finite-difference gradient of the
/// energy over the Hencky strain (Murnaghan-Richter route).
StressState cauchy_stress_fd(const EnergyModel& m, const DeformationState& s);

/// Principal Cauchy stresses for an incompressible principal-stretch model:
/// sigma_i = -p + lambda_i dpsi/dlambda_i.
StressState principal_cauchy(const PrincipalStretchModel& m, double l1, double l2,
                             double l3, double p);

/// Compressible variant sigma_i = lambda_i dpsi/dlambda_i / J.
StressState principal_cauchy_compressible(const PrincipalStretchModel& m, double l1,
                                          double l2, double l3);

/// Closed-form tangent D_{logV} sigma(logV):
///   -sigma (x) 1 + (1/K3) [ sum psi_ij DK_i (x) DK_j + sum psi_i D2K_i ].
Tangent66 tangent_analytic(const EnergyModel& m, const DeformationState& s);

/// Central finite-difference tangent over the six basis directions with
/// Richardson extrapolation (steps h, h/2).
Tangent66 tangent_fd(const EnergyModel& m, const SymTensor3& logV);
Tangent66 tangent_fd(const CauchyLaw& law, const SymTensor3& logV);

/// Cauchy stress at the irrotational state with the given Hencky strain.
SymTensor3 sigma_at_logV(const EnergyModel& m, const SymTensor3& logV);

} // namespace hyperlab

#endif
