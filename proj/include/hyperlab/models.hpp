#ifndef HYPERLAB_MODELS_HPP
#define HYPERLAB_MODELS_HPP

#include "hyperlab/kinematics.hpp"
#include "hyperlab/symtensor.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hyperlab {

/// Isotropic strain energy as a function of the invariant triple
/// (K1, K2, K3), with first and second partials and an admissible-domain
/// predicate. The additive constant is fixed so the energy vanishes at the
/// identity state.
///
/// Models whose natural closed form lives in the Hencky strain rather than
/// the invariants (the quadratic and exponentiated Hencky energies) expose
/// that form through has_hencky_form(); their invariant partials are then
/// derived by mapping the triple back to principal stretches, which is
/// well-defined away from repeated stretches only.
class EnergyModel {
public:
    virtual ~EnergyModel() = default;

    const std::string& name() const { return name_; }
    const std::vector<std::pair<std::string, double>>& params() const { return params_; }

    bool admissible(const InvariantTriple& K) const;
    /// Energy; throws OutOfDomain outside the admissible set.
    double eval(const InvariantTriple& K) const;
    /// (psi_1, psi_2, psi_3).
    std::array<double, 3> grad(const InvariantTriple& K) const;
    /// Symmetric 3x3 of psi_ij.
    SymTensor3 hess(const InvariantTriple& K) const;

    virtual bool depends_on_K1() const { return true; }
    virtual bool depends_on_K2() const { return true; }
    virtual bool depends_on_K3() const { return true; }

    /// Largest ball radius in logV such that every state stays inside the
    /// clipped admissible set (clip in (0, 1]); infinity for globally defined
    /// models. Used to keep sampling plans away from chain-limited walls.
    virtual double safe_logv_radius(double clip) const;

    virtual bool has_hencky_form() const { return false; }
    /// Energy at the Hencky strain logV (constant-adjusted).
    double energy_logV(const SymTensor3& logV) const;
    /// Kirchhoff stress tau(logV); only for has_hencky_form().
    virtual SymTensor3 kirchhoff_logV(const SymTensor3& logV) const;
    /// D_{logV} tau; only for has_hencky_form().
    virtual Tangent66 kirchhoff_tangent_logV(const SymTensor3& logV) const;

    /// Energy for a general deformation gradient.
    double energy_F(const Mat3& F) const;

protected:
    EnergyModel(std::string name, std::vector<std::pair<std::string, double>> params)
        : name_(std::move(name)), params_(std::move(params)) {}

    virtual double raw_eval(const InvariantTriple& K) const = 0;
    virtual std::array<double, 3> grad_impl(const InvariantTriple& K) const = 0;
    virtual SymTensor3 hess_impl(const InvariantTriple& K) const = 0;
    virtual bool admissible_impl(const InvariantTriple&) const { return true; }
    virtual double raw_energy_logV(const SymTensor3& logV) const;

    /// Pins the additive constant; call at the end of derived constructors.
    void fix_offset();

    std::string name_;
    std::vector<std::pair<std::string, double>> params_;
    double offset_ = 0;
};

/// Strain energy in principal stretches, permutation symmetric; used for the
/// incompressible analysis.
class PrincipalStretchModel {
public:
    virtual ~PrincipalStretchModel() = default;
    const std::string& name() const { return name_; }
    const std::vector<std::pair<std::string, double>>& params() const { return params_; }

    double eval(double l1, double l2, double l3) const;
    std::array<double, 3> grad(double l1, double l2, double l3) const;

protected:
    PrincipalStretchModel(std::string name,
                          std::vector<std::pair<std::string, double>> params)
        : name_(std::move(name)), params_(std::move(params)) {}
    virtual double eval_impl(double l1, double l2, double l3) const = 0;
    virtual std::array<double, 3> grad_impl(double l1, double l2, double l3) const = 0;

    std::string name_;
    std::vector<std::pair<std::string, double>> params_;
};

/// A direct Cauchy-stress response sigma(logV), for laws that are not
/// hyperelastic.
class CauchyLaw {
public:
    virtual ~CauchyLaw() = default;
    const std::string& name() const { return name_; }
    const std::vector<std::pair<std::string, double>>& params() const { return params_; }

    virtual SymTensor3 sigma_logV(const SymTensor3& logV) const = 0;
    virtual bool has_tangent() const { return false; }
    virtual Tangent66 tangent_logV(const SymTensor3& logV) const;

protected:
    CauchyLaw(std::string name, std::vector<std::pair<std::string, double>> params)
        : name_(std::move(name)), params_(std::move(params)) {}

    std::string name_;
    std::vector<std::pair<std::string, double>> params_;
};

// Model zoo -----------------------------------------------------------------

/// Quadratic Hencky energy mu |logV|^2 + (lambda/2) tr(logV)^2.
std::unique_ptr<EnergyModel> hencky(double mu, double lambda);

/// (mu/alpha) exp(alpha |logV|^2) + (lambda/(2 beta)) exp(beta log^2 det F),
/// alpha > 3/8, beta > 1/8.
std::unique_ptr<EnergyModel> exponentiated_hencky(double mu, double lambda,
                                                  double alpha, double beta);

/// sqrt(3) K1 + K3^{-alpha}/alpha (the alpha = 0 limit uses -log K3).
std::unique_ptr<EnergyModel> uniaxial_family(double alpha);

/// K1^alpha K3^{-alpha/3} exp(beta log^2 K3), alpha in (0,1), beta > 1/8.
std::unique_ptr<EnergyModel> shear_family(double alpha, double beta);

/// Chain-limited families, finite only on K1^alpha < beta, K2^alpha < beta,
/// log^2 K3 < beta respectively.
std::unique_ptr<EnergyModel> chain_limited_line(double alpha, double beta, double gamma);
std::unique_ptr<EnergyModel> chain_limited_area(double alpha, double beta, double gamma);
std::unique_ptr<EnergyModel> chain_limited_volume(double beta);

/// K1^alpha K2^beta K3^gamma (analysis object; no stress-free identity).
std::unique_ptr<EnergyModel> monomial(double alpha, double beta, double gamma);

/// K1^4 - 2 K2^2 - 4 K3: polyconvex, yet violating the invariant-based
/// sufficient conditions.
std::unique_ptr<EnergyModel> ball_counterexample();

/// Ogden-type incompressible series sum_p mu_p (l1^a_p + l2^a_p + l3^a_p).
std::unique_ptr<PrincipalStretchModel>
incompressible_ogden(const std::vector<double>& mu, const std::vector<double>& alpha);

/// Hencky's 1928 proposal sigma = 2 mu logV + lambda tr(logV) 1 (not
/// hyperelastic).
std::unique_ptr<CauchyLaw> hencky_1928(double mu, double lambda);

// Declarative construction (used by the CLI and the spec-file loader) --------

using ParamMap = std::map<std::string, std::vector<double>>;

bool is_energy_model(const std::string& name);
bool is_cauchy_law(const std::string& name);
bool is_principal_model(const std::string& name);

/// Throws BadParams for unknown constructors or missing/invalid parameters.
std::unique_ptr<EnergyModel> make_energy_model(const std::string& name, const ParamMap& p);
std::unique_ptr<CauchyLaw> make_cauchy_law(const std::string& name, const ParamMap& p);
std::unique_ptr<PrincipalStretchModel> make_principal_model(const std::string& name,
                                                            const ParamMap& p);

} // namespace hyperlab

#endif
