#include "hyperlab/bvp.hpp"

#include "hyperlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperlab {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / double(n - 1);
    return g;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double transverse_residual(const EnergyModel& m, double l1, double l2) {
    return cauchy_stress(m, make_uniaxial(l1, l2, l2)).sigma.yy;
}

// Evaluates the residual, mapping domain errors to NaN for scan purposes.
double residual_or_nan(const EnergyModel& m, double l1, double l2) {
    try {
        return transverse_residual(m, l1, l2);
    } catch (const Error&) {
        return kNaN;
    }
}

} // namespace

double solve_transverse(const EnergyModel& m, double lambda1, double hint) {
    if (!(lambda1 > 0)) throw NonPositiveStretch("solve_transverse: lambda1 <= 0");
    auto g = [&](double l2) { return transverse_residual(m, lambda1, l2); };

    double a = 0, b = 0, ga = 0, gb = 0;
    bool bracketed = false;
    if (hint > 0) {
        // Expand geometrically around the hint until the residual changes sign.
        double lo = hint, hi = hint;
        double glo = residual_or_nan(m, lambda1, lo), ghi = glo;
        if (std::isfinite(glo)) {
            for (int it = 0; it < 200 && !bracketed; ++it) {
                const double lo2 = lo / 1.05, hi2 = hi * 1.05;
                const double glo2 = residual_or_nan(m, lambda1, lo2);
                const double ghi2 = residual_or_nan(m, lambda1, hi2);
                if (std::isfinite(glo2) && glo2 * glo <= 0 && glo != 0) {
                    a = lo2, b = lo, ga = glo2, gb = glo;
                    bracketed = true;
                } else if (std::isfinite(ghi2) && ghi2 * ghi <= 0 && ghi != 0) {
                    a = hi, b = hi2, ga = ghi, gb = ghi2;
                    bracketed = true;
                } else if (glo == 0) {
                    return lo;
                }
                if (std::isfinite(glo2)) lo = lo2, glo = glo2;
                if (std::isfinite(ghi2)) hi = hi2, ghi = ghi2;
            }
        }
    }
    if (!bracketed) {
        // Log-spaced scan; the transverse equation has a single positive root
        // for the families of interest.
        const int n = 241;
        double prev_x = 0, prev_g = kNaN;
        for (int i = 0; i < n; ++i) {
            const double x = std::pow(10.0, -6.0 + 12.0 * i / double(n - 1));
            const double gx = residual_or_nan(m, lambda1, x);
            if (std::isfinite(prev_g) && std::isfinite(gx) && prev_g * gx <= 0) {
                a = prev_x, b = x, ga = prev_g, gb = gx;
                bracketed = true;
                break;
            }
            if (std::isfinite(gx)) prev_x = x, prev_g = gx;
        }
        if (!bracketed)
            throw NoBracket("solve_transverse: no sign change on [1e-6, 1e6] for lambda1 = " +
                            std::to_string(lambda1));
    }
    if (ga == 0) return a;
    if (gb == 0) return b;

    // Bisection-Newton hybrid: Newton accelerates, the bracket guarantees
    // convergence.
    double x = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        const double gx = g(x);
        if (gx == 0) return x;
        if (gx * ga < 0)
            b = x, gb = gx;
        else
            a = x, ga = gx;
        const double dx = 1e-6 * std::max(x, 1e-6);
        const double dg = (g(x + dx) - g(x - dx)) / (2 * dx);
        double xn = dg != 0 ? x - gx / dg : 0.5 * (a + b);
        if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
        if (std::abs(xn - x) <= 4 * std::numeric_limits<double>::epsilon() * x) return xn;
        x = xn;
        if (b - a <= 8 * std::numeric_limits<double>::epsilon() * a) return 0.5 * (a + b);
    }
    throw NonConvergence("solve_transverse: iteration limit at lambda1 = " +
                         std::to_string(lambda1));
}

MonotonicityReport analyze_monotonicity(const std::vector<double>& control,
                                        const std::vector<double>& value,
                                        const std::function<double(double)>& reevaluate) {
    if (control.size() < 3 || control.size() != value.size())
        throw Error("analyze_monotonicity: need at least 3 aligned rows");
    MonotonicityReport rep;
    rep.asymptote = value.back();

    double vmax = 0;
    for (double v : value)
        if (std::isfinite(v)) vmax = std::max(vmax, std::abs(v));
    const double tolz = 1e-14 * std::max(1.0, vmax);

    auto golden = [&](double lo, double hi, bool maximum) {
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
        double fc = reevaluate(c), fd = reevaluate(d);
        while (hi - lo > 1e-6) {
            const bool pick_left = maximum ? fc > fd : fc < fd;
            if (pick_left) {
                hi = d, d = c, fd = fc;
                c = hi - gr * (hi - lo);
                fc = reevaluate(c);
            } else {
                lo = c, c = d, fc = fd;
                d = lo + gr * (hi - lo);
                fd = reevaluate(d);
            }
        }
        return 0.5 * (lo + hi);
    };

    int prev_sign = 0;
    int prev_idx = -1; // start of the interval carrying prev_sign
    for (std::size_t i = 0; i + 1 < control.size(); ++i) {
        if (!std::isfinite(value[i]) || !std::isfinite(value[i + 1])) continue;
        const double d = value[i + 1] - value[i];
        const int s = d > tolz ? 1 : (d < -tolz ? -1 : 0);
        if (s == 0) continue;
        if (prev_sign != 0 && s != prev_sign) {
            Extremum ex;
            ex.maximum = prev_sign > 0;
            const double lo = control[prev_idx];
            const double hi = control[i + 1];
            if (reevaluate) {
                ex.control = golden(lo, hi, ex.maximum);
                ex.value = reevaluate(ex.control);
            } else {
                ex.control = control[i];
                ex.value = value[i];
            }
            rep.extrema.push_back(ex);
        }
        prev_sign = s;
        prev_idx = int(i);
    }
    rep.is_monotone = rep.extrema.empty();
    return rep;
}

TraceResult trace_uniaxial(const EnergyModel& m, const std::vector<double>& log_l1_grid) {
    TraceResult out;
    out.trace.model = m.name();
    out.trace.program = "uniaxial";
    double hint = 0;
    std::vector<double> controls, s11;
    for (double c : log_l1_grid) {
        TraceRow row;
        row.control = c;
        const double l1 = std::exp(c);
        try {
            const double l2 = solve_transverse(m, l1, hint);
            hint = l2;
            const DeformationState s = make_uniaxial(l1, l2, l2);
            const StressState st = cauchy_stress(m, s);
            row.lambda2 = l2;
            row.s11 = st.sigma.xx;
            row.s22 = st.sigma.yy;
            row.s33 = st.sigma.zz;
            row.s12 = st.sigma.xy;
            row.energy = m.has_hencky_form() ? m.energy_logV(s.logV) : m.eval(s.K);
        } catch (const Error&) {
            row.ok = false;
            row.lambda2 = row.s11 = row.s22 = row.s33 = row.s12 = row.energy = kNaN;
        }
        out.trace.rows.push_back(row);
        controls.push_back(c);
        s11.push_back(row.s11);
    }
    // Reevaluation path for extremum refinement: seed the transverse solve
    // from the nearest solved grid row.
    auto rows = out.trace.rows;
    auto reeval = [&m, rows](double c) {
        double best = 0, dist = std::numeric_limits<double>::infinity();
        for (const auto& r : rows)
            if (r.ok && std::abs(r.control - c) < dist) {
                dist = std::abs(r.control - c);
                best = r.lambda2;
            }
        const double l1 = std::exp(c);
        const double l2 = solve_transverse(m, l1, best > 0 ? best : 0.0);
        return cauchy_stress(m, make_uniaxial(l1, l2, l2)).sigma.xx;
    };
    out.s11_monotonicity = analyze_monotonicity(controls, s11, reeval);
    return out;
}

TraceResult trace_uniaxial_incompressible(const PrincipalStretchModel& m,
                                          const std::vector<double>& x_grid) {
    TraceResult out;
    out.trace.model = m.name();
    out.trace.program = "uniaxial_incompressible";
    std::vector<double> controls, s11;
    for (double x : x_grid) {
        TraceRow row;
        row.control = x;
        row.lambda2 = std::exp(-x / 2);
        row.s11 = incompressible_sigma11(m, x);
        row.energy = m.eval(std::exp(x), row.lambda2, row.lambda2);
        out.trace.rows.push_back(row);
        controls.push_back(x);
        s11.push_back(row.s11);
    }
    out.s11_monotonicity = analyze_monotonicity(
        controls, s11, [&m](double x) { return incompressible_sigma11(m, x); });
    return out;
}

namespace {

template <typename SigmaAt, typename EnergyAt>
TraceResult trace_shear_impl(const std::string& model, const SigmaAt& sigma_at,
                             const EnergyAt& energy_at,
                             const std::vector<double>& gamma_grid) {
    TraceResult out;
    out.trace.model = model;
    out.trace.program = "shear";
    std::vector<double> controls, s12;
    for (double gamma : gamma_grid) {
        TraceRow row;
        row.control = gamma;
        try {
            const DeformationState s = make_shear(gamma);
            const SymTensor3 sig = sigma_at(s);
            row.s11 = sig.xx;
            row.s22 = sig.yy;
            row.s33 = sig.zz;
            row.s12 = sig.xy;
            row.energy = energy_at(s);
        } catch (const Error&) {
            row.ok = false;
            row.s11 = row.s22 = row.s33 = row.s12 = row.energy = kNaN;
        }
        out.trace.rows.push_back(row);
        controls.push_back(gamma);
        s12.push_back(row.s12);
    }
    out.s11_monotonicity = analyze_monotonicity(controls, s12, [&](double gamma) {
        return sigma_at(make_shear(gamma)).xy;
    });
    return out;
}

} // namespace

TraceResult trace_shear(const EnergyModel& m, const std::vector<double>& gamma_grid) {
    return trace_shear_impl(
        m.name(),
        [&m](const DeformationState& s) { return cauchy_stress(m, s).sigma; },
        [&m](const DeformationState& s) {
            return m.has_hencky_form() ? m.energy_logV(s.logV) : m.eval(s.K);
        },
        gamma_grid);
}

TraceResult trace_shear(const CauchyLaw& law, const std::vector<double>& gamma_grid) {
    return trace_shear_impl(
        law.name(),
        [&law](const DeformationState& s) { return law.sigma_logV(s.logV); },
        [](const DeformationState&) { return kNaN; }, gamma_grid);
}

double phi_incompressible(const PrincipalStretchModel& m, double x) {
    return m.eval(std::exp(x), std::exp(-x / 2), std::exp(-x / 2));
}

double incompressible_sigma11(const PrincipalStretchModel& m, double x) {
    const double l1 = std::exp(x), lt = std::exp(-x / 2);
    const auto g = m.grad(l1, lt, lt);
    return l1 * g[0] - 0.5 * lt * (g[1] + g[2]);
}

double incompressible_sigma11_fd(const PrincipalStretchModel& m, double x) {
    const double h = 1e-5;
    const double d1 = (phi_incompressible(m, x + h) - phi_incompressible(m, x - h)) / (2 * h);
    const double d2 =
        (phi_incompressible(m, x + h / 2) - phi_incompressible(m, x - h / 2)) / h;
    return (4 * d2 - d1) / 3.0;
}

} // namespace hyperlab
