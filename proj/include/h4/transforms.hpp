#pragma once

#include <array>

#include "h4/algebra.hpp"
#include "h4/kinematics.hpp"

namespace h4 {

/// Element of the isotropy-preserving linear group: acts diagonally in the
/// isotropic basis with weights exp(eps_i). Interval-preserving iff
/// sum(eps_i) = 0, which group_from_velocity guarantees by construction.
struct GroupElement {
    std::array<double, 4> eps{};

    double eps_sum() const { return eps[0] + eps[1] + eps[2] + eps[3]; }
};

/// Strictly subluminal frame velocity with its cached h4 modulus.
class FrameVelocity {
public:
    explicit FrameVelocity(const Velocity3& v); // throws SuperluminalError
    const Velocity3& velocity() const { return v_; }
    double modulus() const { return modulus_; }

private:
    Velocity3 v_;
    double modulus_;
};

/// Minimal fixed 4x4 matrix, just enough for materialized boosts.
struct Mat4 {
    std::array<std::array<double, 4>, 4> a{};

    Event4 apply(const Event4& e) const;
    Mat4 multiply(const Mat4& rhs) const;
    static Mat4 identity();
};

/// Boost that takes a motionless object to velocity V:
/// exp(eps_i) = f_i(V) / sqrt(1 - V^2) with f = A*(1, V), which reduces to
/// eps_i = ln f_i - mean(ln f). The mean subtraction keeps sum(eps) = 0 to
/// rounding and equals the 1/sqrt(1-V^2) normalization exactly, because
/// sqrt(1 - V^2) = W^(1/4) = exp(mean ln f).
GroupElement group_from_velocity(const FrameVelocity& V);

/// Element with every exponent negated (the true group inverse).
GroupElement inverse_group_from_velocity(const FrameVelocity& V);

GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

/// x' = (1/4) A diag(exp(eps)) A x, evaluated through the isotropic basis.
Event4 apply_group(const GroupElement& g, const Event4& e);

/// Velocity composition law:
///   v1' = (v1 + V1 + v2 V3 + v3 V2) / (1 + v.V)   (and cyclic mates),
/// the image of an object velocity v under the boost to frame velocity V.
/// Throws DegenerateError when the denominator 1 + v.V is not positive
/// (impossible for mutually subluminal inputs).
Velocity3 add_velocities(const Velocity3& v, const FrameVelocity& V);

/// Modulus of the composed velocity straight from the invariants:
/// v' = sqrt(1 - (1 - v^2)(1 - V^2) / (1 + v.V)^2) with h4 moduli throughout.
double modulus_after_boost(const Velocity3& v, const FrameVelocity& V);

/// dt'/dt = (1 + v.V) / sqrt(1 - V^2).
double time_dilation_factor(const Velocity3& v, const FrameVelocity& V);

/// Materializes (1/4) A diag(exp(eps)) A.
Mat4 group_matrix(const GroupElement& g);

/// Boost matrix mapping moving-frame coordinates to rest-frame ones,
/// x = B(V) x'. For V = (V1, 0, 0) it carries the familiar gamma block on
/// (x0, x1) AND the same mixing block on (x2, x3).
Mat4 boost_matrix(const FrameVelocity& V);

/// Special-relativity boost for comparison: gamma block on (x0, x1),
/// identity on (x2, x3).
Mat4 lorentz_boost_sr(double v1);

} // namespace h4
