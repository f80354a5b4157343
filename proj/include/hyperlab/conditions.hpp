#ifndef HYPERLAB_CONDITIONS_HPP
#define HYPERLAB_CONDITIONS_HPP

#include "hyperlab/models.hpp"
#include "hyperlab/response.hpp"
#include "hyperlab/sampling.hpp"

#include <limits>
#include <string>
#include <vector>

namespace hyperlab {

/// Result of a checker run over a sampling plan. PASS certifies the condition
/// on the evaluated samples only; FAIL carries a witness that reproduces a
/// negative margin on re-evaluation.
struct ConditionReport {
    enum class Verdict { pass, fail, out_of_scope_samples };

    std::string condition;
    std::string model;
    Verdict verdict = Verdict::out_of_scope_samples;
    double worst_margin = std::numeric_limits<double>::infinity();
    int samples = 0;
    int skipped = 0;

    SymTensor3 witness_logV;
    InvariantTriple witness_K;
    bool has_witness = false;

    // Rank-one witness for the Legendre-Hadamard check.
    Mat3 witness_F;
    Vec3 witness_a, witness_b;
    bool has_rank_one_witness = false;

    // Scalar-grid checks (incompressible potential).
    double witness_control = std::numeric_limits<double>::quiet_NaN();

    bool passed() const { return verdict == Verdict::pass; }
};

const char* to_string(ConditionReport::Verdict v);

/// Linearized constants at the identity, from small-strain finite differences
/// of the stress response.
struct LinearizedConstants {
    double mu = 0;
    double lambda = 0;
    double kappa = 0;  // (2 mu + 3 lambda)/3
    double nu = 0;     // lambda / (2 (lambda + mu))
    bool proper = false; // mu > 0 and 2 mu + 3 lambda > 0
};

/// Sufficient conditions for polyconvexity: psi non-decreasing in K1, K2 and
/// the 3x3 Hessian of psi positive semi-definite, sampled over the plan.
/// FAIL means the sufficient conditions are violated, not that the energy is
/// not polyconvex.
ConditionReport check_polyconvex_sufficient(const EnergyModel& m, const SamplingPlan& plan);

/// Sufficient conditions for the strict monotonicity of the Cauchy stress in
/// the Hencky strain: the monotonicity branch on (psi_1, psi_2), positive
/// semi-definiteness of the 3x3 matrix of scaled derivatives, and the strict
/// quadratic-form condition along (1, 2, 3). Models independent of K2 (or K1)
/// use the reduced 2x2 positive-definite fast path.
ConditionReport check_tstsm_sufficient(const EnergyModel& m, const SamplingPlan& plan);

/// Numeric monotonicity check: smallest eigenvalue of the finite-difference
/// stress tangent at every sampled state.
ConditionReport check_tstsm_numeric(const EnergyModel& m, const SamplingPlan& plan);
ConditionReport check_tstsm_numeric(const CauchyLaw& law, const SamplingPlan& plan);

/// Pairwise monotonicity <sigma' - sigma, logV' - logV> > 0 over random pairs
/// from a convex sample set (ball of the plan radius).
ConditionReport check_tstsm_plus(const EnergyModel& m, const SamplingPlan& plan);
ConditionReport check_tstsm_plus(const CauchyLaw& law, const SamplingPlan& plan);

/// Convexity of the energy in the Hencky strain (finite-difference Hessian).
ConditionReport check_hill(const EnergyModel& m, const SamplingPlan& plan);

/// Invariant-based sufficient conditions for Hencky-strain convexity of a
/// K3-independent (incompressible) energy: reduced 2x2 matrix plus the strict
/// (1, 2)-direction condition.
ConditionReport check_hill_sufficient_incompressible(const EnergyModel& m,
                                                     const SamplingPlan& plan);

/// Legendre-Hadamard sampling: second directional differences of W along
/// rank-one perturbations a (x) b, with step backoff to keep det F positive.
ConditionReport check_legendre_hadamard(const EnergyModel& m, const FSamplingPlan& plan);

/// Convexity of the uniaxial incompressible potential
/// phi(x) = psi(e^x, e^{-x/2}, e^{-x/2}) on a grid of x = log lambda_1.
ConditionReport check_ball_potential(const PrincipalStretchModel& m,
                                     const std::vector<double>& x_grid);

LinearizedConstants linearize(const EnergyModel& m);
LinearizedConstants linearize(const CauchyLaw& law);

/// Max of |x^2 u u'' - (x u' - u/2)^2 - k u^2/4| / u^2 over the grid for
/// u(x) = c2 x^{c1} exp((k+1)/8 log^2 x), using analytic u', u''.
double ode_residual(double c1, double c2, double k, const std::vector<double>& x_grid);

} // namespace hyperlab

#endif
