#ifndef HYPERLAB_SYMTENSOR_HPP
#define HYPERLAB_SYMTENSOR_HPP

#include <array>
#include <cmath>
#include <functional>

namespace hyperlab {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

/// Symmetric 3x3 tensor, stored as the six independent components.
struct SymTensor3 {
    double xx = 0, yy = 0, zz = 0, xy = 0, yz = 0, xz = 0;

    static SymTensor3 identity() { return {1, 1, 1, 0, 0, 0}; }
    static SymTensor3 diag(double a, double b, double c) { return {a, b, c, 0, 0, 0}; }

    double operator()(int i, int j) const;

    SymTensor3 operator+(const SymTensor3& o) const {
        return {xx + o.xx, yy + o.yy, zz + o.zz, xy + o.xy, yz + o.yz, xz + o.xz};
    }
    SymTensor3 operator-(const SymTensor3& o) const {
        return {xx - o.xx, yy - o.yy, zz - o.zz, xy - o.xy, yz - o.yz, xz - o.xz};
    }
    SymTensor3 operator*(double s) const {
        return {xx * s, yy * s, zz * s, xy * s, yz * s, xz * s};
    }
    SymTensor3 operator-() const { return *this * -1.0; }
    SymTensor3& operator+=(const SymTensor3& o) { return *this = *this + o; }

    double trace() const { return xx + yy + zz; }
    double dot(const SymTensor3& o) const {
        return xx * o.xx + yy * o.yy + zz * o.zz + 2 * (xy * o.xy + yz * o.yz + xz * o.xz);
    }
    double norm() const { return std::sqrt(dot(*this)); }
    double max_abs() const;
    double det() const;
    /// Cofactor (transposed adjugate); symmetric again for symmetric input.
    SymTensor3 cof() const;
    Vec3 apply(const Vec3& v) const {
        return {xx * v.x + xy * v.y + xz * v.z,
                xy * v.x + yy * v.y + yz * v.z,
                xz * v.x + yz * v.y + zz * v.z};
    }
};

inline SymTensor3 operator*(double s, const SymTensor3& t) { return t * s; }

/// General 3x3 matrix, row major.
struct Mat3 {
    std::array<double, 9> a{};

    static Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
    static Mat3 diag(double d0, double d1, double d2) {
        return {{d0, 0, 0, 0, d1, 0, 0, 0, d2}};
    }
    static Mat3 from_sym(const SymTensor3& s) {
        return {{s.xx, s.xy, s.xz, s.xy, s.yy, s.yz, s.xz, s.yz, s.zz}};
    }

    double operator()(int i, int j) const { return a[3 * i + j]; }
    double& operator()(int i, int j) { return a[3 * i + j]; }

    Mat3 operator+(const Mat3& o) const;
    Mat3 operator-(const Mat3& o) const;
    Mat3 operator*(double s) const;
    Mat3 operator*(const Mat3& o) const;
    Vec3 operator*(const Vec3& v) const;

    Mat3 transposed() const;
    double det() const;
    double norm() const; // Frobenius
    /// Cofactor matrix cof(A) = det(A) A^{-T}, computed as the transposed adjugate.
    Mat3 cof() const;
    Mat3 inverse() const;

    /// A A^T as a symmetric tensor.
    SymTensor3 aat() const;
    /// Symmetric part (A + A^T)/2.
    SymTensor3 sym() const;
};

/// Rank-one update a (x) b.
Mat3 outer(const Vec3& a, const Vec3& b);
SymTensor3 sym_outer(const Vec3& v); // v (x) v

/// Eigendecomposition of a symmetric 3x3 tensor. Eigenvalues descending,
/// eigenvectors an orthonormal (right-handed) triad.
struct Spectral3 {
    std::array<double, 3> lambda{};
    std::array<Vec3, 3> v{};

    SymTensor3 reconstruct() const;
};

/// Closed-form (trigonometric) symmetric eigensolver with one Newton polish
/// step per eigenvalue. Eigenvalues returned in descending order.
Spectral3 eig_sym(const SymTensor3& X);

/// Applies f to the eigenvalues of X.
SymTensor3 spectral_apply(const SymTensor3& X, const std::function<double(double)>& f);

/// Tensor logarithm of a symmetric positive definite tensor.
/// Throws NotPositiveDefinite if the smallest eigenvalue is <= 0.
SymTensor3 log_spd(const SymTensor3& X);

/// Tensor exponential of a symmetric tensor.
SymTensor3 exp_sym(const SymTensor3& X);

// ---------------------------------------------------------------------------
// Orthonormal basis of Sym(3) and 6x6 representation of fourth-order tensors.
// Off-diagonal basis elements carry a sqrt(2) factor so that the Frobenius
// inner product on Sym(3) equals the plain dot product of coordinates.
// ---------------------------------------------------------------------------

using Vec6 = std::array<double, 6>;

Vec6 to_basis6(const SymTensor3& X);
SymTensor3 from_basis6(const Vec6& c);
double dot6(const Vec6& a, const Vec6& b);

/// 6x6 matrix representing a fourth-order tensor with both minor symmetries,
/// acting on Sym(3) in the orthonormal basis above.
struct Tangent66 {
    std::array<double, 36> m{};

    static Tangent66 zero() { return {}; }
    /// Identity on Sym(3) (the symmetric fourth-order identity).
    static Tangent66 identity_sym();
    /// Outer product A (x) B of two symmetric tensors.
    static Tangent66 dyad(const SymTensor3& A, const SymTensor3& B);
    /// Fills columns by applying `action` to the basis elements.
    static Tangent66 from_action(const std::function<SymTensor3(const SymTensor3&)>& action);

    double operator()(int i, int j) const { return m[6 * i + j]; }
    double& operator()(int i, int j) { return m[6 * i + j]; }

    Tangent66 operator+(const Tangent66& o) const;
    Tangent66 operator-(const Tangent66& o) const;
    Tangent66 operator*(double s) const;
    Tangent66& operator+=(const Tangent66& o) { return *this = *this + o; }

    SymTensor3 apply(const SymTensor3& H) const;
    double quad(const SymTensor3& H) const { return apply(H).dot(H); }

    Tangent66 transposed() const;
    Tangent66 sym_part() const;
    double asym_norm() const; // Frobenius norm of the skew part
    double norm() const;
};

/// Eigenvalues of the symmetric part of a 6x6 tensor, ascending (cyclic Jacobi).
std::array<double, 6> tangent_eigenvalues(const Tangent66& T);

/// Smallest eigenvalue of the symmetrized 6x6 matrix; positive iff
/// <T.H, H> > 0 for all nonzero symmetric H.
double tangent_min_eig(const Tangent66& T);

/// Divided difference (e^x - e^y)/(x - y) with the geometric-mean limit for
/// |x - y| below 1e-6 (first term of the midpoint series).
double exp_divided_difference(double x, double y);

} // namespace hyperlab

#endif
