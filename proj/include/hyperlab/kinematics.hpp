#ifndef HYPERLAB_KINEMATICS_HPP
#define HYPERLAB_KINEMATICS_HPP

#include "hyperlab/symtensor.hpp"

#include <array>
#include <optional>
#include <utility>

namespace hyperlab {

/// Invariant triple K1 = |F|, K2 = |cof F|, K3 = det F.
struct InvariantTriple {
    double K1 = 0, K2 = 0, K3 = 0;

    static InvariantTriple at_identity();
};

InvariantTriple invariants(const Mat3& F);

/// Deformation gradient with the derived quantities cached.
struct DeformationState {
    Mat3 F;
    double J = 1;
    SymTensor3 B;       // F F^T
    SymTensor3 logV;    // Hencky strain, log sqrt(B)
    Spectral3 B_spec;   // eigensystem of B, eigenvalues descending
    InvariantTriple K;

    static DeformationState from_F(const Mat3& F);
    /// Irrotational state F = exp(logV).
    static DeformationState from_logV(const SymTensor3& logV);
};

DeformationState make_uniaxial(double l1, double l2, double l3);
DeformationState make_shear(double gamma);

/// First derivatives (D K1, D K2, D K3) with respect to log V:
/// B/K1, (K2^2 1 - cof B)/K2, K3 1.
std::array<SymTensor3, 3> dK_dlogV(const DeformationState& s);

/// D_{logV} B = D_{logV} exp(2 logV), assembled spectrally with divided
/// differences (lam_i^2 - lam_j^2)/(log lam_i^2 - log lam_j^2) off-diagonal.
Tangent66 dB_dlogV(const DeformationState& s);
Tangent66 dBinv_dlogV(const DeformationState& s);

/// Second derivatives of the invariants with respect to log V.
std::array<Tangent66, 3> d2K_dlogV(const DeformationState& s);

/// The two fourth-order tensors whose semi-definiteness carries the
/// monotonicity structure of the stress tangent:
///   first  = D B      - 2 (B/K1) (x) (B/K1)        (PSD, kernel span{1})
///   second = D B^{-1} + 2 K3^2 (B^{-1}/K2)(x)(B^{-1}/K2)   (NSD, kernel span{1})
std::pair<Tangent66, Tangent66> lemma_tensors(const DeformationState& s);

/// Divided-difference coefficient (bi - bj)/(log bi - log bj) for eigenvalues
/// of B, with the geometric-mean limit at coincidence.
double db_divided_difference(double bi, double bj);

/// Principal stretches (descending) realizing the invariant triple, if the
/// characteristic cubic of B has three positive real roots.
std::optional<std::array<double, 3>> invariants_to_stretches(const InvariantTriple& K);

} // namespace hyperlab

#endif
