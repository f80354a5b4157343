#ifndef HYPERLAB_BVP_HPP
#define HYPERLAB_BVP_HPP

#include "hyperlab/models.hpp"
#include "hyperlab/response.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hyperlab {

/// One tabulated state of a homogeneous deformation program.
struct TraceRow {
    double control = 0;   // log lambda_1 (uniaxial) or gamma (shear)
    double lambda2 = 1;   // transverse stretch (uniaxial programs)
    double s11 = 0, s22 = 0, s33 = 0, s12 = 0;
    double energy = 0;
    bool ok = true;       // false when the row's solve failed
};

struct Trace {
    std::string model;
    std::string program;  // "uniaxial" | "uniaxial_incompressible" | "shear"
    std::vector<TraceRow> rows;
};

struct Extremum {
    double control = 0;
    double value = 0;
    bool maximum = false;
};

struct MonotonicityReport {
    bool is_monotone = true;
    std::vector<Extremum> extrema;
    double asymptote = 0; // value at the last grid point
};

struct TraceResult {
    Trace trace;
    MonotonicityReport s11_monotonicity;  // sigma_12 for shear programs
};

std::vector<double> linspace(double lo, double hi, int n);

/// Transverse stretch lambda_2 = lambda_3 solving sigma_22 = 0 at prescribed
/// lambda_1. Bracketed bisection-Newton hybrid; the bracket comes from a
/// log-spaced scan of [1e-6, 1e6] or expands around `hint` when given.
/// Throws NoBracket / NonConvergence.
double solve_transverse(const EnergyModel& m, double lambda1, double hint = 0.0);

/// Unconstrained uniaxial extension-compression over a grid of log lambda_1.
/// Rows continue past per-row solver failures (ok = false).
TraceResult trace_uniaxial(const EnergyModel& m, const std::vector<double>& log_l1_grid);

/// Incompressible uniaxial program over x = log lambda_1; the transverse
/// stretch is lambda_1^{-1/2} and the Lagrange parameter is eliminated.
TraceResult trace_uniaxial_incompressible(const PrincipalStretchModel& m,
                                          const std::vector<double>& x_grid);

TraceResult trace_shear(const EnergyModel& m, const std::vector<double>& gamma_grid);
TraceResult trace_shear(const CauchyLaw& law, const std::vector<double>& gamma_grid);

/// Interior extrema from slope sign changes; when `reevaluate` is given, each
/// extremum is refined by golden-section search to 1e-6 in the control.
MonotonicityReport analyze_monotonicity(const std::vector<double>& control,
                                        const std::vector<double>& value,
                                        const std::function<double(double)>& reevaluate = {});

/// The uniaxial incompressible potential phi(x) = psi(e^x, e^{-x/2}, e^{-x/2})
/// and the two routes to sigma_11 (stretch-partial combination vs dphi/dx).
double phi_incompressible(const PrincipalStretchModel& m, double x);
double incompressible_sigma11(const PrincipalStretchModel& m, double x);
double incompressible_sigma11_fd(const PrincipalStretchModel& m, double x);

} // namespace hyperlab

#endif
