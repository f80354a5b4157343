#include "hyperlab/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace hyperlab {

std::uint64_t Rng::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (have_cached_) {
        have_cached_ = false;
        return cached_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
}

Vec3 Rng::unit_vector() {
    for (;;) {
        const Vec3 v{normal(), normal(), normal()};
        const double n = v.norm();
        if (n > 1e-12) return v * (1.0 / n);
    }
}

Mat3 Rng::rotation() {
    double q0 = normal(), q1 = normal(), q2 = normal(), q3 = normal();
    const double n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    q0 /= n, q1 /= n, q2 /= n, q3 /= n;
    Mat3 R;
    R(0, 0) = 1 - 2 * (q2 * q2 + q3 * q3);
    R(0, 1) = 2 * (q1 * q2 - q0 * q3);
    R(0, 2) = 2 * (q1 * q3 + q0 * q2);
    R(1, 0) = 2 * (q1 * q2 + q0 * q3);
    R(1, 1) = 1 - 2 * (q1 * q1 + q3 * q3);
    R(1, 2) = 2 * (q2 * q3 - q0 * q1);
    R(2, 0) = 2 * (q1 * q3 - q0 * q2);
    R(2, 1) = 2 * (q2 * q3 + q0 * q1);
    R(2, 2) = 1 - 2 * (q1 * q1 + q2 * q2);
    return R;
}

SymTensor3 Rng::sym_ball(double radius) {
    Vec6 dir;
    double n2 = 0;
    do {
        n2 = 0;
        for (double& d : dir) {
            d = normal();
            n2 += d * d;
        }
    } while (n2 < 1e-24);
    const double r = radius * std::pow(uniform(), 1.0 / 6.0) / std::sqrt(n2);
    for (double& d : dir) d *= r;
    return from_basis6(dir);
}

namespace {

bool within_axis_bound(const SymTensor3& logV, double bound) {
    if (bound <= 0) return true;
    const Spectral3 s = eig_sym(logV);
    return std::abs(s.lambda[0]) <= bound && std::abs(s.lambda[2]) <= bound;
}

void push_structured_logV(std::vector<SymTensor3>& out, double R) {
    const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
    for (int k = 1; k <= 4; ++k) {
        const double r = R * k / 4.0;
        out.push_back(SymTensor3::identity() * (r / s3));
        out.push_back(SymTensor3::identity() * (-r / s3));
        out.push_back(SymTensor3::diag(r, 0, 0));
        out.push_back(SymTensor3::diag(-r, 0, 0));
        SymTensor3 shear;
        shear.xy = r / s2;
        out.push_back(shear);
    }
}

} // namespace

std::vector<SymTensor3> sample_logV_states(const SamplingPlan& plan) {
    std::vector<SymTensor3> out;
    out.reserve(plan.count + 24);
    out.push_back(SymTensor3{}); // identity state
    if (plan.mode == SamplingPlan::Mode::grid) {
        int n = 2;
        while (n * n * n < plan.count) ++n;
        const double b = plan.radius / std::sqrt(3.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const auto t = [&](int q) { return -b + 2.0 * b * q / (n - 1); };
                    out.push_back(SymTensor3::diag(t(i), t(j), t(k)));
                }
        return out;
    }
    if (plan.structured) push_structured_logV(out, plan.radius);
    Rng rng(plan.seed);
    while ((int)out.size() < plan.count + 1) {
        SymTensor3 x = rng.sym_ball(plan.radius);
        int guard = 0;
        while (!within_axis_bound(x, plan.axis_bound) && ++guard < 1000)
            x = rng.sym_ball(plan.radius);
        out.push_back(x);
    }
    return out;
}

std::vector<Mat3> sample_F_states(const FSamplingPlan& plan) {
    std::vector<Mat3> out;
    out.reserve(plan.states + 17);
    out.push_back(Mat3::identity());
    if (plan.structured) {
        for (double g : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0}) {
            Mat3 Fp = Mat3::identity(), Fm = Mat3::identity();
            Fp(0, 1) = g;
            Fm(0, 1) = -g;
            out.push_back(Fp);
            out.push_back(Fm);
        }
    }
    Rng rng(plan.seed);
    while ((int)out.size() < plan.states + 1) {
        const Vec3 dir = rng.unit_vector();
        const double r = plan.radius * std::pow(rng.uniform(), 1.0 / 3.0);
        const Mat3 S = Mat3::diag(std::exp(r * dir.x), std::exp(r * dir.y),
                                  std::exp(r * dir.z));
        out.push_back(rng.rotation() * S * rng.rotation());
    }
    return out;
}

} // namespace hyperlab
