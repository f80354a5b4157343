#include "hyperlab/models.hpp"

#include "hyperlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyperlab {

namespace {

bool positive_triple(const InvariantTriple& K) {
    return K.K1 > 0 && K.K2 > 0 && K.K3 > 0 && std::isfinite(K.K1) &&
           std::isfinite(K.K2) && std::isfinite(K.K3);
}

std::string describe(const InvariantTriple& K) {
    std::ostringstream os;
    os << "(K1=" << K.K1 << ", K2=" << K.K2 << ", K3=" << K.K3 << ")";
    return os.str();
}

} // namespace

bool EnergyModel::admissible(const InvariantTriple& K) const {
    return positive_triple(K) && admissible_impl(K);
}

double EnergyModel::eval(const InvariantTriple& K) const {
    if (!admissible(K))
        throw OutOfDomain(name_ + ": eval outside admissible domain at " + describe(K));
    return raw_eval(K) - offset_;
}

std::array<double, 3> EnergyModel::grad(const InvariantTriple& K) const {
    if (!admissible(K))
        throw OutOfDomain(name_ + ": grad outside admissible domain at " + describe(K));
    return grad_impl(K);
}

SymTensor3 EnergyModel::hess(const InvariantTriple& K) const {
    if (!admissible(K))
        throw OutOfDomain(name_ + ": hess outside admissible domain at " + describe(K));
    return hess_impl(K);
}

double EnergyModel::raw_energy_logV(const SymTensor3& logV) const {
    return raw_eval(invariants(Mat3::from_sym(exp_sym(logV))));
}

double EnergyModel::energy_logV(const SymTensor3& logV) const {
    return raw_energy_logV(logV) - offset_;
}

SymTensor3 EnergyModel::kirchhoff_logV(const SymTensor3&) const {
    throw Error(name_ + ": no closed-form Kirchhoff stress");
}

Tangent66 EnergyModel::kirchhoff_tangent_logV(const SymTensor3&) const {
    throw Error(name_ + ": no closed-form Kirchhoff tangent");
}

double EnergyModel::energy_F(const Mat3& F) const {
    if (has_hencky_form()) return energy_logV(log_spd(F.aat()) * 0.5);
    const InvariantTriple K = invariants(F);
    if (!admissible(K))
        throw OutOfDomain(name_ + ": energy_F outside admissible domain at " + describe(K));
    return raw_eval(K) - offset_;
}

void EnergyModel::fix_offset() {
    offset_ = 0;
    offset_ = raw_eval(InvariantTriple::at_identity());
}

double EnergyModel::safe_logv_radius(double) const {
    return std::numeric_limits<double>::infinity();
}

double PrincipalStretchModel::eval(double l1, double l2, double l3) const {
    if (l1 <= 0 || l2 <= 0 || l3 <= 0)
        throw NonPositiveStretch(name_ + ": stretches must be positive");
    return eval_impl(l1, l2, l3);
}

std::array<double, 3> PrincipalStretchModel::grad(double l1, double l2, double l3) const {
    if (l1 <= 0 || l2 <= 0 || l3 <= 0)
        throw NonPositiveStretch(name_ + ": stretches must be positive");
    return grad_impl(l1, l2, l3);
}

Tangent66 CauchyLaw::tangent_logV(const SymTensor3&) const {
    throw Error(name_ + ": no closed-form tangent");
}

// --------------------------------------------------------------------------
// Stretch-recovery chain: invariant partials for models defined in the
// Hencky strain. Valid where the triple maps to distinct stretches.
// --------------------------------------------------------------------------

namespace {

struct StretchChain {
    std::array<double, 3> ell;  // log-stretches
    Mat3 J_inv;                 // (dK/dell)^{-1}
    std::array<Mat3, 3> d2K;    // d^2 K_m / dell_i dell_j
};

StretchChain stretch_chain(const std::string& name, const InvariantTriple& K) {
    const auto lam = invariants_to_stretches(K);
    if (!lam)
        throw OutOfDomain(name + ": invariant triple not realizable " + describe(K));
    const auto& l = *lam;
    if (l[0] - l[2] < 1e-6 * l[0] || l[0] - l[1] < 1e-9 * l[0] || l[1] - l[2] < 1e-9 * l[0])
        throw OutOfDomain(name + ": invariant partials are degenerate near repeated "
                                 "stretches " + describe(K));
    StretchChain c;
    Mat3 J;
    std::array<double, 3> s, ci;
    for (int i = 0; i < 3; ++i) {
        c.ell[i] = std::log(l[i]);
        s[i] = l[i] * l[i];
        ci[i] = K.K3 * K.K3 / s[i];
    }
    for (int i = 0; i < 3; ++i) {
        J(0, i) = s[i] / K.K1;
        J(1, i) = (K.K2 * K.K2 - ci[i]) / K.K2;
        J(2, i) = K.K3;
    }
    c.J_inv = J.inverse();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double dij = i == j ? 1.0 : 0.0;
            c.d2K[0](i, j) = 2 * s[i] * dij / K.K1 - s[i] * s[j] / (K.K1 * K.K1 * K.K1);
            c.d2K[1](i, j) = K.K2 - (ci[i] + ci[j]) / K.K2 -
                             ci[i] * ci[j] / (K.K2 * K.K2 * K.K2) + 2 * ci[i] * dij / K.K2;
            c.d2K[2](i, j) = K.K3;
        }
    return c;
}

std::array<double, 3> chain_grad(const StretchChain& c, const std::array<double, 3>& g_ell) {
    std::array<double, 3> g{};
    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < 3; ++i) g[m] += c.J_inv(i, m) * g_ell[i]; // J^{-T}
    return g;
}

SymTensor3 chain_hess(const StretchChain& c, const std::array<double, 3>& gK,
                      const Mat3& H_ell) {
    Mat3 R = H_ell;
    for (int m = 0; m < 3; ++m) R = R - c.d2K[m] * gK[m];
    const Mat3 H = c.J_inv.transposed() * R * c.J_inv;
    return H.sym();
}

// --------------------------------------------------------------------------
// Quadratic Hencky energy
// --------------------------------------------------------------------------

class HenckyEnergy final : public EnergyModel {
public:
    HenckyEnergy(double mu, double lambda)
        : EnergyModel("hencky", {{"mu", mu}, {"lambda", lambda}}), mu_(mu), la_(lambda) {
        if (!(mu > 0) || !(2 * mu + 3 * lambda > 0))
            throw BadParams("hencky: need mu > 0 and 2 mu + 3 lambda > 0");
        fix_offset();
    }

    bool has_hencky_form() const override { return true; }

    SymTensor3 kirchhoff_logV(const SymTensor3& X) const override {
        return X * (2 * mu_) + SymTensor3::identity() * (la_ * X.trace());
    }

    Tangent66 kirchhoff_tangent_logV(const SymTensor3&) const override {
        const SymTensor3 one = SymTensor3::identity();
        return Tangent66::identity_sym() * (2 * mu_) + Tangent66::dyad(one, one) * la_;
    }

protected:
    double raw_energy_logV(const SymTensor3& X) const override {
        const double t = X.trace();
        return mu_ * X.dot(X) + 0.5 * la_ * t * t;
    }

    bool admissible_impl(const InvariantTriple& K) const override {
        return invariants_to_stretches(K).has_value();
    }

    double raw_eval(const InvariantTriple& K) const override {
        const auto lam = invariants_to_stretches(K);
        if (!lam) throw OutOfDomain("hencky: triple not realizable");
        double q = 0, t = 0;
        for (double l : *lam) {
            const double e = std::log(l);
            q += e * e;
            t += e;
        }
        return mu_ * q + 0.5 * la_ * t * t;
    }

    std::array<double, 3> grad_impl(const InvariantTriple& K) const override {
        const auto c = stretch_chain(name_, K);
        const double t = c.ell[0] + c.ell[1] + c.ell[2];
        std::array<double, 3> g_ell;
        for (int i = 0; i < 3; ++i) g_ell[i] = 2 * mu_ * c.ell[i] + la_ * t;
        return chain_grad(c, g_ell);
    }

    SymTensor3 hess_impl(const InvariantTriple& K) const override {
        const auto c = stretch_chain(name_, K);
        const double t = c.ell[0] + c.ell[1] + c.ell[2];
        std::array<double, 3> g_ell;
        Mat3 H;
        for (int i = 0; i < 3; ++i) {
            g_ell[i] = 2 * mu_ * c.ell[i] + la_ * t;
            for (int j = 0; j < 3; ++j) H(i, j) = (i == j ? 2 * mu_ : 0.0) + la_;
        }
        return chain_hess(c, chain_grad(c, g_ell), H);
    }

private:
    double mu_, la_;
};

// --------------------------------------------------------------------------
// Exponentiated Hencky energy
// --------------------------------------------------------------------------

class ExponentiatedHencky final : public EnergyModel {
public:
    ExponentiatedHencky(double mu, double lambda, double alpha, double beta)
        : EnergyModel("exponentiated_hencky",
                      {{"mu", mu}, {"lambda", lambda}, {"alpha", alpha}, {"beta", beta}}),
          mu_(mu), la_(lambda), al_(alpha), be_(beta) {
        if (!(mu > 0) || !(lambda > 0) || !(alpha > 3.0 / 8.0) || !(beta > 1.0 / 8.0))
            throw BadParams(
                "exponentiated_hencky: need mu > 0, lambda > 0, alpha > 3/8, beta > 1/8");
        fix_offset();
    }

    bool has_hencky_form() const override { return true; }

    SymTensor3 kirchhoff_logV(const SymTensor3& X) const override {
        const double q = X.dot(X), t = X.trace();
        return X * (2 * mu_ * std::exp(al_ * q)) +
               SymTensor3::identity() * (la_ * t * std::exp(be_ * t * t));
    }

    Tangent66 kirchhoff_tangent_logV(const SymTensor3& X) const override {
        const double q = X.dot(X), t = X.trace();
        const SymTensor3 one = SymTensor3::identity();
        const double eq = std::exp(al_ * q), et = std::exp(be_ * t * t);
        return Tangent66::identity_sym() * (2 * mu_ * eq) +
               Tangent66::dyad(X, X) * (4 * mu_ * al_ * eq) +
               Tangent66::dyad(one, one) * (la_ * et * (1 + 2 * be_ * t * t));
    }

protected:
    double raw_energy_logV(const SymTensor3& X) const override {
        const double q = X.dot(X), t = X.trace();
        return mu_ / al_ * std::exp(al_ * q) + la_ / (2 * be_) * std::exp(be_ * t * t);
    }

    bool admissible_impl(const InvariantTriple& K) const override {
        return invariants_to_stretches(K).has_value();
    }

    double raw_eval(const InvariantTriple& K) const override {
        const auto lam = invariants_to_stretches(K);
        if (!lam) throw OutOfDomain("exponentiated_hencky: triple not realizable");
        double q = 0, t = 0;
        for (double l : *lam) {
            const double e = std::log(l);
            q += e * e;
            t += e;
        }
        return mu_ / al_ * std::exp(al_ * q) + la_ / (2 * be_) * std::exp(be_ * t * t);
    }

    std::array<double, 3> grad_impl(const InvariantTriple& K) const override {
        const auto c = stretch_chain(name_, K);
        return chain_grad(c, grad_ell(c.ell));
    }

    SymTensor3 hess_impl(const InvariantTriple& K) const override {
        const auto c = stretch_chain(name_, K);
        const double q = c.ell[0] * c.ell[0] + c.ell[1] * c.ell[1] + c.ell[2] * c.ell[2];
        const double t = c.ell[0] + c.ell[1] + c.ell[2];
        const double eq = std::exp(al_ * q), et = std::exp(be_ * t * t);
        Mat3 H;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                H(i, j) = 2 * mu_ * eq * ((i == j ? 1.0 : 0.0) + 2 * al_ * c.ell[i] * c.ell[j]) +
                          la_ * et * (1 + 2 * be_ * t * t);
        return chain_hess(c, chain_grad(c, grad_ell(c.ell)), H);
    }

private:
    std::array<double, 3> grad_ell(const std::array<double, 3>& ell) const {
        const double q = ell[0] * ell[0] + ell[1] * ell[1] + ell[2] * ell[2];
        const double t = ell[0] + ell[1] + ell[2];
        std::array<double, 3> g;
        for (int i = 0; i < 3; ++i)
            g[i] = 2 * mu_ * std::exp(al_ * q) * ell[i] + la_ * t * std::exp(be_ * t * t);
        return g;
    }

    double mu_, la_, al_, be_;
};

// --------------------------------------------------------------------------
// Uniaxial counterexample family: sqrt(3) K1 + K3^{-alpha}/alpha
// --------------------------------------------------------------------------

class UniaxialFamily final : public EnergyModel {
public:
    explicit UniaxialFamily(double alpha)
        : EnergyModel("uniaxial_family", {{"alpha", alpha}}), al_(alpha) {
        if (!(alpha >= 0) || !(alpha < 1))
            throw BadParams("uniaxial_family: need alpha in [0, 1)");
        fix_offset();
    }

    bool depends_on_K2() const override { return false; }

protected:
    double raw_eval(const InvariantTriple& K) const override {
        const double vol = al_ > 0 ? std::pow(K.K3, -al_) / al_ : -std::log(K.K3);
        return std::sqrt(3.0) * K.K1 + vol;
    }

    std::array<double, 3> grad_impl(const InvariantTriple& K) const override {
        return {std::sqrt(3.0), 0.0, -std::pow(K.K3, -al_ - 1)};
    }

    SymTensor3 hess_impl(const InvariantTriple& K) const override {
        SymTensor3 h;
        h.zz = (al_ + 1) * std::pow(K.K3, -al_ - 2);
        return h;
    }

private:
    double al_;
};

// --------------------------------------------------------------------------
// Simple-shear counterexample family: K1^alpha K3^{-alpha/3} exp(beta log^2 K3)
// --------------------------------------------------------------------------

class ShearFamily final : public EnergyModel {
public:
    ShearFamily(double alpha, double beta)
        : EnergyModel("shear_family", {{"alpha", alpha}, {"beta", beta}}),
          al_(alpha), be_(beta) {
        if (!(alpha > 0) || !(alpha < 1) || !(beta > 1.0 / 8.0))
            throw BadParams("shear_family: need alpha in (0, 1) and beta > 1/8");
        fix_offset();
    }

    bool depends_on_K2() const override { return false; }

protected:
    double raw_eval(const InvariantTriple& K) const override {
        return std::pow(K.K1, al_) * vol(K.K3).u;
    }

    std::array<double, 3> grad_impl(const InvariantTriple& K) const override {
        const Vol v = vol(K.K3);
        return {al_ * std::pow(K.K1, al_ - 1) * v.u, 0.0, std::pow(K.K1, al_) * v.du};
    }

    SymTensor3 hess_impl(const InvariantTriple& K) const override {
        const Vol v = vol(K.K3);
        SymTensor3 h;
        h.xx = al_ * (al_ - 1) * std::pow(K.K1, al_ - 2) * v.u;
        h.xz = al_ * std::pow(K.K1, al_ - 1) * v.du;
        h.zz = std::pow(K.K1, al_) * v.d2u;
        return h;
    }

private:
    struct Vol {
        double u, du, d2u;
    };
    Vol vol(double K3) const {
        const double L = std::log(K3);
        const double u = std::pow(K3, -al_ / 3.0) * std::exp(be_ * L * L);
        const double g = -al_ / 3.0 + 2 * be_ * L;
        return {u, u * g / K3, u * (g * g - g + 2 * be_) / (K3 * K3)};
    }

    double al_, be_;
};

// --------------------------------------------------------------------------
// Chain-limited families
// --------------------------------------------------------------------------

class ChainLimitedLineArea final : public EnergyModel {
public:
    ChainLimitedLineArea(bool line, double alpha, double beta, double gamma)
        : EnergyModel(line ? "chain_limited_line" : "chain_limited_area",
                      {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}}),
          line_(line), al_(alpha), be_(beta), ga_(gamma) {
        if (!(alpha >= 1) || !(beta > std::pow(3.0, alpha / 2)) || !(gamma >= 0.25))
            throw BadParams(name_ + ": need alpha >= 1, beta > 3^(alpha/2), gamma >= 1/4");
        mu0_ = alpha * std::pow(3.0, alpha / 2 - 1) / (beta - std::pow(3.0, alpha / 2));
        c_ = gamma - (line ? 1.0 : 2.0) * mu0_;
        fix_offset();
    }

    bool depends_on_K1() const override { return line_; }
    bool depends_on_K2() const override { return !line_; }

    double safe_logv_radius(double clip) const override {
        const double cap = std::pow(clip * be_, 1.0 / al_); // bound on K1 (or K2)
        // Largest R with max K over the Frobenius-R ball below cap; the
        // constrained maximizer of these symmetric exponential sums has at
        // most two distinct log-stretches, so scanning the two-value circle
        // families is exact up to the angular grid.
        auto ball_max = [&](double R) {
            auto val = [&](double l1, double l2, double l3) {
                if (line_)
                    return std::exp(2 * l1) + std::exp(2 * l2) + std::exp(2 * l3);
                return std::exp(2 * (l1 + l2)) + std::exp(2 * (l2 + l3)) +
                       std::exp(2 * (l1 + l3));
            };
            const double s2 = std::sqrt(2.0);
            double best = 0;
            for (int i = 0; i < 2048; ++i) {
                const double th = 2 * M_PI * i / 2048;
                const double c = R * std::cos(th), s = R * std::sin(th);
                best = std::max(best, val(c, s / s2, s / s2));
                best = std::max(best, val(c / s2, c / s2, s));
            }
            return std::sqrt(best);
        };
        if (ball_max(0.0) >= cap) return 0.0;
        double lo = 0.0, hi = 0.05;
        while (ball_max(hi) < cap && hi < 40.0) hi *= 2.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (ball_max(mid) < cap ? lo : hi) = mid;
        }
        return 0.999 * lo;
    }

protected:
    bool admissible_impl(const InvariantTriple& K) const override {
        return std::pow(line_ ? K.K1 : K.K2, al_) < be_;
    }

    double raw_eval(const InvariantTriple& K) const override {
        const double k = line_ ? K.K1 : K.K2;
        return -std::log(be_ - std::pow(k, al_)) - ga_ * std::log(K.K3) + c_ * K.K3;
    }

    std::array<double, 3> grad_impl(const InvariantTriple& K) const override {
        const double k = line_ ? K.K1 : K.K2;
        const double ka = std::pow(k, al_);
        const double dk = al_ * std::pow(k, al_ - 1) / (be_ - ka);
        const double d3 = -ga_ / K.K3 + c_;
        return line_ ? std::array<double, 3>{dk, 0.0, d3}
                     : std::array<double, 3>{0.0, dk, d3};
    }

    SymTensor3 hess_impl(const InvariantTriple& K) const override {
        const double k = line_ ? K.K1 : K.K2;
        const double ka = std::pow(k, al_);
        const double den = be_ - ka;
        const double dkk = al_ * (al_ - 1) * std::pow(k, al_ - 2) / den +
                           al_ * al_ * std::pow(k, 2 * al_ - 2) / (den * den);
        SymTensor3 h;
        (line_ ? h.xx : h.yy) = dkk;
        h.zz = ga_ / (K.K3 * K.K3);
        return h;
    }

private:
    bool line_;
    double al_, be_, ga_, mu0_, c_;
};

class ChainLimitedVolume final : public EnergyModel {
public:
    explicit ChainLimitedVolume(double beta)
        : EnergyModel("chain_limited_volume", {{"beta", beta}}), be_(beta) {
        if (!(beta > 0) || !(beta <= 27.0 / 4.0))
            throw BadParams("chain_limited_volume: need 0 < beta <= 27/4");
        fix_offset();
    }

    bool depends_on_K2() const override { return false; }

    double safe_logv_radius(double clip) const override {
        // |log K3| = |tr logV| <= sqrt(3) R
        return std::sqrt(clip * be_ / 3.0);
    }

protected:
    bool admissible_impl(const InvariantTriple& K) const override {
        const double L = std::log(K.K3);
        return L * L < be_;
    }

    double raw_eval(const InvariantTriple& K) const override {
        const double L = std::log(K.K3);
        return K.K1 * K.K1 * K.K1 / (be_ - L * L) - 3 * std::sqrt(3.0) / be_ * K.K3;
    }

    std::array<double, 3> grad_impl(const InvariantTriple& K) const override {
        const double L = std::log(K.K3);
        const double u = 1.0 / (be_ - L * L);
        const double du = 2 * L * u * u / K.K3;
        const double K1c = K.K1 * K.K1 * K.K1;
        return {3 * K.K1 * K.K1 * u, 0.0, K1c * du - 3 * std::sqrt(3.0) / be_};
    }

    SymTensor3 hess_impl(const InvariantTriple& K) const override {
        const double L = std::log(K.K3);
        const double u = 1.0 / (be_ - L * L);
        const double du = 2 * L * u * u / K.K3;
        const double d2u = (2 * u * u * (1 - L) + 8 * L * L * u * u * u) / (K.K3 * K.K3);
        SymTensor3 h;
        h.xx = 6 * K.K1 * u;
        h.xz = 3 * K.K1 * K.K1 * du;
        h.zz = K.K1 * K.K1 * K.K1 * d2u;
        return h;
    }

private:
    double be_;
};

// --------------------------------------------------------------------------
// Monomial and the polyconvex counterexample
// --------------------------------------------------------------------------

class Monomial final : public EnergyModel {
public:
    Monomial(double a, double b, double g)
        : EnergyModel("monomial", {{"alpha", a}, {"beta", b}, {"gamma", g}}),
          a_(a), b_(b), g_(g) {
        fix_offset();
    }

    bool depends_on_K1() const override { return a_ != 0; }
    bool depends_on_K2() const override { return b_ != 0; }
    bool depends_on_K3() const override { return g_ != 0; }

protected:
    double raw_eval(const InvariantTriple& K) const override {
        return std::pow(K.K1, a_) * std::pow(K.K2, b_) * std::pow(K.K3, g_);
    }

    std::array<double, 3> grad_impl(const InvariantTriple& K) const override {
        const double w = raw_eval(K);
        return {a_ * w / K.K1, b_ * w / K.K2, g_ * w / K.K3};
    }

    SymTensor3 hess_impl(const InvariantTriple& K) const override {
        const double w = raw_eval(K);
        SymTensor3 h;
        h.xx = a_ * (a_ - 1) * w / (K.K1 * K.K1);
        h.yy = b_ * (b_ - 1) * w / (K.K2 * K.K2);
        h.zz = g_ * (g_ - 1) * w / (K.K3 * K.K3);
        h.xy = a_ * b_ * w / (K.K1 * K.K2);
        h.yz = b_ * g_ * w / (K.K2 * K.K3);
        h.xz = a_ * g_ * w / (K.K1 * K.K3);
        return h;
    }

private:
    double a_, b_, g_;
};

class BallCounterexample final : public EnergyModel {
public:
    BallCounterexample() : EnergyModel("ball_counterexample", {}) { fix_offset(); }

protected:
    double raw_eval(const InvariantTriple& K) const override {
        const double k1 = K.K1;
        return k1 * k1 * k1 * k1 - 2 * K.K2 * K.K2 - 4 * K.K3;
    }

    std::array<double, 3> grad_impl(const InvariantTriple& K) const override {
        return {4 * K.K1 * K.K1 * K.K1, -4 * K.K2, -4.0};
    }

    SymTensor3 hess_impl(const InvariantTriple& K) const override {
        SymTensor3 h;
        h.xx = 12 * K.K1 * K.K1;
        h.yy = -4;
        return h;
    }
};

// --------------------------------------------------------------------------
// Incompressible Ogden series and Hencky's 1928 law
// --------------------------------------------------------------------------

class IncompressibleOgden final : public PrincipalStretchModel {
public:
    IncompressibleOgden(std::vector<double> mu, std::vector<double> alpha)
        : PrincipalStretchModel("incompressible_ogden", {}),
          mu_(std::move(mu)), al_(std::move(alpha)) {
        if (mu_.empty() || mu_.size() != al_.size())
            throw BadParams("incompressible_ogden: mu and alpha lists must match");
        for (std::size_t p = 0; p < mu_.size(); ++p) {
            if (!(mu_[p] > 0) || !(al_[p] >= 1))
                throw BadParams("incompressible_ogden: need mu_p > 0, alpha_p >= 1");
            params_.emplace_back("mu" + std::to_string(p), mu_[p]);
            params_.emplace_back("alpha" + std::to_string(p), al_[p]);
        }
    }

protected:
    double eval_impl(double l1, double l2, double l3) const override {
        double w = 0;
        for (std::size_t p = 0; p < mu_.size(); ++p)
            w += mu_[p] * (std::pow(l1, al_[p]) + std::pow(l2, al_[p]) + std::pow(l3, al_[p]));
        return w;
    }

    std::array<double, 3> grad_impl(double l1, double l2, double l3) const override {
        std::array<double, 3> g{};
        for (std::size_t p = 0; p < mu_.size(); ++p) {
            g[0] += mu_[p] * al_[p] * std::pow(l1, al_[p] - 1);
            g[1] += mu_[p] * al_[p] * std::pow(l2, al_[p] - 1);
            g[2] += mu_[p] * al_[p] * std::pow(l3, al_[p] - 1);
        }
        return g;
    }

private:
    std::vector<double> mu_, al_;
};

class Hencky1928 final : public CauchyLaw {
public:
    Hencky1928(double mu, double lambda)
        : CauchyLaw("hencky_1928", {{"mu", mu}, {"lambda", lambda}}), mu_(mu), la_(lambda) {
        if (!(mu > 0) || !(2 * mu + 3 * lambda > 0))
            throw BadParams("hencky_1928: need mu > 0 and 2 mu + 3 lambda > 0");
    }

    SymTensor3 sigma_logV(const SymTensor3& X) const override {
        return X * (2 * mu_) + SymTensor3::identity() * (la_ * X.trace());
    }

    bool has_tangent() const override { return true; }

    Tangent66 tangent_logV(const SymTensor3&) const override {
        const SymTensor3 one = SymTensor3::identity();
        return Tangent66::identity_sym() * (2 * mu_) + Tangent66::dyad(one, one) * la_;
    }

private:
    double mu_, la_;
};

} // namespace

std::unique_ptr<EnergyModel> hencky(double mu, double lambda) {
    return std::make_unique<HenckyEnergy>(mu, lambda);
}

std::unique_ptr<EnergyModel> exponentiated_hencky(double mu, double lambda, double alpha,
                                                  double beta) {
    return std::make_unique<ExponentiatedHencky>(mu, lambda, alpha, beta);
}

std::unique_ptr<EnergyModel> uniaxial_family(double alpha) {
    return std::make_unique<UniaxialFamily>(alpha);
}

std::unique_ptr<EnergyModel> shear_family(double alpha, double beta) {
    return std::make_unique<ShearFamily>(alpha, beta);
}

std::unique_ptr<EnergyModel> chain_limited_line(double alpha, double beta, double gamma) {
    return std::make_unique<ChainLimitedLineArea>(true, alpha, beta, gamma);
}

std::unique_ptr<EnergyModel> chain_limited_area(double alpha, double beta, double gamma) {
    return std::make_unique<ChainLimitedLineArea>(false, alpha, beta, gamma);
}

std::unique_ptr<EnergyModel> chain_limited_volume(double beta) {
    return std::make_unique<ChainLimitedVolume>(beta);
}

std::unique_ptr<EnergyModel> monomial(double alpha, double beta, double gamma) {
    return std::make_unique<Monomial>(alpha, beta, gamma);
}

std::unique_ptr<EnergyModel> ball_counterexample() {
    return std::make_unique<BallCounterexample>();
}

std::unique_ptr<PrincipalStretchModel>
incompressible_ogden(const std::vector<double>& mu, const std::vector<double>& alpha) {
    return std::make_unique<IncompressibleOgden>(mu, alpha);
}

std::unique_ptr<CauchyLaw> hencky_1928(double mu, double lambda) {
    return std::make_unique<Hencky1928>(mu, lambda);
}

// Declarative construction ---------------------------------------------------

namespace {

double scalar_param(const std::string& model, const ParamMap& p, const std::string& key) {
    const auto it = p.find(key);
    if (it == p.end() || it->second.empty())
        throw BadParams(model + ": missing parameter '" + key + "'");
    if (it->second.size() != 1)
        throw BadParams(model + ": parameter '" + key + "' must be a scalar");
    return it->second.front();
}

std::vector<double> list_param(const std::string& model, const ParamMap& p,
                               const std::string& key) {
    const auto it = p.find(key);
    if (it == p.end() || it->second.empty())
        throw BadParams(model + ": missing parameter '" + key + "'");
    return it->second;
}

} // namespace

bool is_energy_model(const std::string& name) {
    static const char* names[] = {"hencky", "exponentiated_hencky", "uniaxial_family",
                                  "shear_family", "chain_limited_line", "chain_limited_area",
                                  "chain_limited_volume", "monomial", "ball_counterexample"};
    return std::find(std::begin(names), std::end(names), name) != std::end(names);
}

bool is_cauchy_law(const std::string& name) { return name == "hencky_1928"; }

bool is_principal_model(const std::string& name) { return name == "incompressible_ogden"; }

std::unique_ptr<EnergyModel> make_energy_model(const std::string& name, const ParamMap& p) {
    if (name == "hencky")
        return hencky(scalar_param(name, p, "mu"), scalar_param(name, p, "lambda"));
    if (name == "exponentiated_hencky")
        return exponentiated_hencky(scalar_param(name, p, "mu"),
                                    scalar_param(name, p, "lambda"),
                                    scalar_param(name, p, "alpha"),
                                    scalar_param(name, p, "beta"));
    if (name == "uniaxial_family") return uniaxial_family(scalar_param(name, p, "alpha"));
    if (name == "shear_family")
        return shear_family(scalar_param(name, p, "alpha"), scalar_param(name, p, "beta"));
    if (name == "chain_limited_line")
        return chain_limited_line(scalar_param(name, p, "alpha"),
                                  scalar_param(name, p, "beta"),
                                  scalar_param(name, p, "gamma"));
    if (name == "chain_limited_area")
        return chain_limited_area(scalar_param(name, p, "alpha"),
                                  scalar_param(name, p, "beta"),
                                  scalar_param(name, p, "gamma"));
    if (name == "chain_limited_volume")
        return chain_limited_volume(scalar_param(name, p, "beta"));
    if (name == "monomial")
        return monomial(scalar_param(name, p, "alpha"), scalar_param(name, p, "beta"),
                        scalar_param(name, p, "gamma"));
    if (name == "ball_counterexample") return ball_counterexample();
    throw BadParams("unknown energy model '" + name + "'");
}

std::unique_ptr<CauchyLaw> make_cauchy_law(const std::string& name, const ParamMap& p) {
    if (name == "hencky_1928")
        return hencky_1928(scalar_param(name, p, "mu"), scalar_param(name, p, "lambda"));
    throw BadParams("unknown Cauchy law '" + name + "'");
}

std::unique_ptr<PrincipalStretchModel> make_principal_model(const std::string& name,
                                                            const ParamMap& p) {
    if (name == "incompressible_ogden")
        return incompressible_ogden(list_param(name, p, "mu"), list_param(name, p, "alpha"));
    throw BadParams("unknown principal-stretch model '" + name + "'");
}

} // namespace hyperlab
