#include "hyperlab/symtensor.hpp"

#include "hyperlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hyperlab {

double SymTensor3::operator()(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == 0) return j == 0 ? xx : (j == 1 ? xy : xz);
    if (i == 1) return j == 1 ? yy : yz;
    return zz;
}

double SymTensor3::max_abs() const {
    return std::max({std::abs(xx), std::abs(yy), std::abs(zz),
                     std::abs(xy), std::abs(yz), std::abs(xz)});
}

double SymTensor3::det() const {
    return xx * (yy * zz - yz * yz) - xy * (xy * zz - yz * xz) + xz * (xy * yz - yy * xz);
}

SymTensor3 SymTensor3::cof() const {
    return {yy * zz - yz * yz,
            xx * zz - xz * xz,
            xx * yy - xy * xy,
            yz * xz - xy * zz,
            xy * xz - xx * yz,
            xy * yz - yy * xz};
}

Mat3 Mat3::operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

Mat3 Mat3::operator*(double s) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = a[i] * s;
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
    return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
            a[3] * v.x + a[4] * v.y + a[5] * v.z,
            a[6] * v.x + a[7] * v.y + a[8] * v.z};
}

Mat3 Mat3::transposed() const {
    return {{a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]}};
}

double Mat3::det() const {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

double Mat3::norm() const {
    double s = 0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

Mat3 Mat3::cof() const {
    Mat3 c;
    c(0, 0) = a[4] * a[8] - a[5] * a[7];
    c(0, 1) = a[5] * a[6] - a[3] * a[8];
    c(0, 2) = a[3] * a[7] - a[4] * a[6];
    c(1, 0) = a[2] * a[7] - a[1] * a[8];
    c(1, 1) = a[0] * a[8] - a[2] * a[6];
    c(1, 2) = a[1] * a[6] - a[0] * a[7];
    c(2, 0) = a[1] * a[5] - a[2] * a[4];
    c(2, 1) = a[2] * a[3] - a[0] * a[5];
    c(2, 2) = a[0] * a[4] - a[1] * a[3];
    return c;
}

Mat3 Mat3::inverse() const {
    const double d = det();
    return cof().transposed() * (1.0 / d);
}

SymTensor3 Mat3::aat() const {
    SymTensor3 s;
    s.xx = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
    s.yy = a[3] * a[3] + a[4] * a[4] + a[5] * a[5];
    s.zz = a[6] * a[6] + a[7] * a[7] + a[8] * a[8];
    s.xy = a[0] * a[3] + a[1] * a[4] + a[2] * a[5];
    s.yz = a[3] * a[6] + a[4] * a[7] + a[5] * a[8];
    s.xz = a[0] * a[6] + a[1] * a[7] + a[2] * a[8];
    return s;
}

SymTensor3 Mat3::sym() const {
    return {a[0], a[4], a[8],
            0.5 * (a[1] + a[3]), 0.5 * (a[5] + a[7]), 0.5 * (a[2] + a[6])};
}

Mat3 outer(const Vec3& a, const Vec3& b) {
    return {{a.x * b.x, a.x * b.y, a.x * b.z,
             a.y * b.x, a.y * b.y, a.y * b.z,
             a.z * b.x, a.z * b.y, a.z * b.z}};
}

SymTensor3 sym_outer(const Vec3& v) {
    return {v.x * v.x, v.y * v.y, v.z * v.z, v.x * v.y, v.y * v.z, v.x * v.z};
}

SymTensor3 Spectral3::reconstruct() const {
    SymTensor3 s;
    for (int i = 0; i < 3; ++i) s += sym_outer(v[i]) * lambda[i];
    return s;
}

namespace {

// Characteristic polynomial p(x) = -x^3 + I1 x^2 - I2 x + I3 and p'.
void char_poly(const SymTensor3& A, double x, double& p, double& dp) {
    const double i1 = A.trace();
    const double i2 = A.cof().trace();
    const double i3 = A.det();
    p = ((-x + i1) * x - i2) * x + i3;
    dp = (-3 * x + 2 * i1) * x - i2;
}

// Column of M with the largest norm, normalized. Returns false if all tiny.
bool dominant_column(const Mat3& M, double floor_sq, Vec3& out) {
    int best = 0;
    double best_n = -1;
    for (int j = 0; j < 3; ++j) {
        const Vec3 c{M(0, j), M(1, j), M(2, j)};
        const double n = c.dot(c);
        if (n > best_n) {
            best_n = n;
            best = j;
        }
    }
    if (best_n <= floor_sq) return false;
    out = Vec3{M(0, best), M(1, best), M(2, best)}.normalized();
    return true;
}

Vec3 any_unit_orthogonal(const Vec3& u) {
    // Cross with the axis least aligned with u.
    const Vec3 e = std::abs(u.x) <= std::abs(u.y) && std::abs(u.x) <= std::abs(u.z)
                       ? Vec3{1, 0, 0}
                       : (std::abs(u.y) <= std::abs(u.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    return u.cross(e).normalized();
}

// Cyclic Jacobi on a 3x3 symmetric matrix; eigenvalues land on the diagonal,
// V accumulates the rotations (columns are eigenvectors). Used as fallback
// when the closed-form path loses accuracy near eigenvalue clusters.
void jacobi3(Mat3& a, Mat3& V) {
    V = Mat3::identity();
    for (int sweep = 0; sweep < 30; ++sweep) {
        double off = 0, dia = 0;
        for (int i = 0; i < 3; ++i) {
            dia += a(i, i) * a(i, i);
            for (int j = i + 1; j < 3; ++j) off += a(i, j) * a(i, j);
        }
        if (off <= 1e-30 * (dia + off) || off == 0.0) break;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
    }
}

} // namespace

Spectral3 eig_sym(const SymTensor3& X) {
    Spectral3 out;
    const double scale = X.max_abs();
    if (scale == 0.0) {
        out.lambda = {0, 0, 0};
        out.v = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
        return out;
    }
    const SymTensor3 A = X * (1.0 / scale);

    std::array<double, 3> lam;
    const double p1 = A.xy * A.xy + A.yz * A.yz + A.xz * A.xz;
    if (p1 < 1e-30) {
        lam = {A.xx, A.yy, A.zz};
    } else {
        const double q = A.trace() / 3.0;
        const double p2 = (A.xx - q) * (A.xx - q) + (A.yy - q) * (A.yy - q) +
                          (A.zz - q) * (A.zz - q) + 2.0 * p1;
        const double p = std::sqrt(p2 / 6.0);
        SymTensor3 B = (A - SymTensor3::identity() * q) * (1.0 / p);
        const double r = std::clamp(B.det() / 2.0, -1.0, 1.0);
        const double phi = std::acos(r) / 3.0;
        lam[0] = q + 2.0 * p * std::cos(phi);
        lam[2] = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
        lam[1] = 3.0 * q - lam[0] - lam[2];
        // One Newton polish step per eigenvalue, skipped near repeated roots
        // where p' degenerates.
        for (double& l : lam) {
            double f, df;
            char_poly(A, l, f, df);
            if (std::abs(df) > 1e-8) l -= f / df;
        }
    }
    std::sort(lam.begin(), lam.end(), std::greater<double>());

    const double sep_tol = 1e-8 * std::max({std::abs(lam[0]), std::abs(lam[2]), 1e-300});
    const double floor_sq = 1e-24;
    std::array<Vec3, 3> v;
    const Mat3 M = Mat3::from_sym(A);
    auto shifted = [&](double l) { return M - Mat3::identity() * l; };

    if (lam[0] - lam[2] <= sep_tol) {
        v = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    } else if (lam[0] - lam[1] <= sep_tol) {
        // lam[2] separated: its eigenvector from (A - l0)(A - l1).
        if (!dominant_column(shifted(lam[0]) * shifted(lam[1]), floor_sq, v[2]))
            v[2] = any_unit_orthogonal(Vec3{1, 0, 0});
        v[0] = any_unit_orthogonal(v[2]);
        v[1] = v[2].cross(v[0]);
    } else if (lam[1] - lam[2] <= sep_tol) {
        if (!dominant_column(shifted(lam[1]) * shifted(lam[2]), floor_sq, v[0]))
            v[0] = any_unit_orthogonal(Vec3{1, 0, 0});
        v[1] = any_unit_orthogonal(v[0]);
        v[2] = v[0].cross(v[1]);
    } else {
        dominant_column(shifted(lam[1]) * shifted(lam[2]), floor_sq, v[0]);
        dominant_column(shifted(lam[0]) * shifted(lam[2]), floor_sq, v[1]);
        v[1] = (v[1] - v[0] * v[1].dot(v[0])).normalized();
        v[2] = v[0].cross(v[1]);
    }

    // Rayleigh quotients on the clean triad remove first-order eigenvalue error.
    for (int i = 0; i < 3; ++i) out.lambda[i] = scale * v[i].dot(A.apply(v[i]));
    // Repeated-eigenvalue clusters keep the trigonometric values so that the
    // cluster stays exactly coincident.
    if (lam[0] - lam[1] <= sep_tol) out.lambda[1] = out.lambda[0];
    if (lam[1] - lam[2] <= sep_tol) out.lambda[2] = out.lambda[1];
    out.v = v;
    std::sort(out.lambda.begin(), out.lambda.end(), std::greater<double>());

    // The closed-form vectors degrade near (but not at) eigenvalue clusters;
    // fall back to Jacobi when the reconstruction residual shows it.
    if ((out.reconstruct() - X).max_abs() > 1e-13 * scale) {
        Mat3 a = Mat3::from_sym(A), V;
        jacobi3(a, V);
        std::array<int, 3> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end(),
                  [&](int i, int j) { return a(i, i) > a(j, j); });
        for (int i = 0; i < 3; ++i) {
            out.lambda[i] = scale * a(idx[i], idx[i]);
            out.v[i] = Vec3{V(0, idx[i]), V(1, idx[i]), V(2, idx[i])};
        }
        out.v[2] = out.v[0].cross(out.v[1]); // keep the triad right-handed
    }
    return out;
}

SymTensor3 spectral_apply(const SymTensor3& X, const std::function<double(double)>& f) {
    Spectral3 s = eig_sym(X);
    for (double& l : s.lambda) l = f(l);
    return s.reconstruct();
}

SymTensor3 log_spd(const SymTensor3& X) {
    const Spectral3 s = eig_sym(X);
    if (s.lambda[2] <= 0.0)
        throw NotPositiveDefinite("log_spd: smallest eigenvalue is " +
                                  std::to_string(s.lambda[2]));
    Spectral3 r = s;
    for (int i = 0; i < 3; ++i) r.lambda[i] = std::log(s.lambda[i]);
    return r.reconstruct();
}

SymTensor3 exp_sym(const SymTensor3& X) {
    Spectral3 s = eig_sym(X);
    for (double& l : s.lambda) l = std::exp(l);
    return s.reconstruct();
}

Vec6 to_basis6(const SymTensor3& X) {
    const double s = std::sqrt(2.0);
    return {X.xx, X.yy, X.zz, s * X.xy, s * X.yz, s * X.xz};
}

SymTensor3 from_basis6(const Vec6& c) {
    const double s = 1.0 / std::sqrt(2.0);
    return {c[0], c[1], c[2], s * c[3], s * c[4], s * c[5]};
}

double dot6(const Vec6& a, const Vec6& b) {
    double s = 0;
    for (int i = 0; i < 6; ++i) s += a[i] * b[i];
    return s;
}

Tangent66 Tangent66::identity_sym() {
    Tangent66 t;
    for (int i = 0; i < 6; ++i) t(i, i) = 1.0;
    return t;
}

Tangent66 Tangent66::dyad(const SymTensor3& A, const SymTensor3& B) {
    const Vec6 a = to_basis6(A), b = to_basis6(B);
    Tangent66 t;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) t(i, j) = a[i] * b[j];
    return t;
}

Tangent66 Tangent66::from_action(const std::function<SymTensor3(const SymTensor3&)>& action) {
    Tangent66 t;
    for (int j = 0; j < 6; ++j) {
        Vec6 e{};
        e[j] = 1.0;
        const Vec6 col = to_basis6(action(from_basis6(e)));
        for (int i = 0; i < 6; ++i) t(i, j) = col[i];
    }
    return t;
}

Tangent66 Tangent66::operator+(const Tangent66& o) const {
    Tangent66 r;
    for (int i = 0; i < 36; ++i) r.m[i] = m[i] + o.m[i];
    return r;
}

Tangent66 Tangent66::operator-(const Tangent66& o) const {
    Tangent66 r;
    for (int i = 0; i < 36; ++i) r.m[i] = m[i] - o.m[i];
    return r;
}

Tangent66 Tangent66::operator*(double s) const {
    Tangent66 r;
    for (int i = 0; i < 36; ++i) r.m[i] = m[i] * s;
    return r;
}

SymTensor3 Tangent66::apply(const SymTensor3& H) const {
    const Vec6 h = to_basis6(H);
    Vec6 r{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r[i] += (*this)(i, j) * h[j];
    return from_basis6(r);
}

Tangent66 Tangent66::transposed() const {
    Tangent66 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r(i, j) = (*this)(j, i);
    return r;
}

Tangent66 Tangent66::sym_part() const { return (*this + transposed()) * 0.5; }

double Tangent66::asym_norm() const {
    double s = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const double d = 0.5 * ((*this)(i, j) - (*this)(j, i));
            s += d * d;
        }
    return std::sqrt(s);
}

double Tangent66::norm() const {
    double s = 0;
    for (double v : m) s += v * v;
    return std::sqrt(s);
}

std::array<double, 6> tangent_eigenvalues(const Tangent66& T) {
    // Cyclic Jacobi on the symmetric part.
    Tangent66 a = T.sym_part();
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0, dia = 0;
        for (int i = 0; i < 6; ++i) {
            dia += a(i, i) * a(i, i);
            for (int j = i + 1; j < 6; ++j) off += a(i, j) * a(i, j);
        }
        if (off <= 1e-30 * (dia + off) || off == 0.0) break;
        for (int p = 0; p < 6; ++p)
            for (int q = p + 1; q < 6; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 6; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < 6; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::array<double, 6> ev;
    for (int i = 0; i < 6; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

double tangent_min_eig(const Tangent66& T) { return tangent_eigenvalues(T)[0]; }

double exp_divided_difference(double x, double y) {
    const double d = x - y;
    if (std::abs(d) < 1e-6) return std::exp(0.5 * (x + y));
    return (std::exp(x) - std::exp(y)) / d;
}

} // namespace hyperlab
