#ifndef HYPERLAB_SAMPLING_HPP
#define HYPERLAB_SAMPLING_HPP

#include "hyperlab/symtensor.hpp"

#include <cstdint>
#include <vector>

namespace hyperlab {

/// Deterministic generator (splitmix64 core) so that sampled plans are
/// byte-reproducible across platforms; the standard distributions are
/// implementation defined and deliberately avoided.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next_u64();
    double uniform();                 // [0, 1)
    double uniform(double lo, double hi);
    double normal();
    Vec3 unit_vector();
    Mat3 rotation();                  // uniform random rotation (quaternion)
    /// Uniform in the radius-R ball of Sym(3) under the Frobenius norm.
    SymTensor3 sym_ball(double radius);

private:
    std::uint64_t state_;
    bool have_cached_ = false;
    double cached_ = 0;
};

/// Sampling plan over Hencky strains. Deterministic given the seed; the
/// identity state is always included first. Structured states (hydrostatic,
/// uniaxial and shear ladders up to the radius) are prepended so that known
/// failure axes are probed reproducibly.
struct SamplingPlan {
    enum class Mode { random, grid };
    Mode mode = Mode::random;
    int count = 1000;
    double radius = 2.0;
    double axis_bound = 0.0; // if > 0, per-axis bound on the log-stretches
    std::uint64_t seed = 20240601;
    bool structured = true;
};

std::vector<SymTensor3> sample_logV_states(const SamplingPlan& plan);

/// Plan over deformation gradients F = R1 diag(exp l) R2 for the
/// Legendre-Hadamard sampling, plus a simple-shear ladder when structured.
struct FSamplingPlan {
    int states = 200;
    int directions = 32; // random unit pairs (a, b) per state
    double radius = 3.0; // bound on |l| (and through it on |logV|)
    std::uint64_t seed = 20240601;
    bool structured = true;
};

std::vector<Mat3> sample_F_states(const FSamplingPlan& plan);

} // namespace hyperlab

#endif
