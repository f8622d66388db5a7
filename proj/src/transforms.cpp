#include "h4/transforms.hpp"

#include <cmath>
#include <limits>

#include "h4/errors.hpp"

namespace h4 {

FrameVelocity::FrameVelocity(const Velocity3& v) : v_(v), modulus_(0.0) {
    if (classify_velocity(v) != VelocityClass::Subluminal)
        throw SuperluminalError("FrameVelocity: frame velocity must be strictly subluminal");
    modulus_ = velocity_modulus_h4(v);
}

Event4 Mat4::apply(const Event4& e) const {
    const double x[4] = {e.x0, e.x1, e.x2, e.x3};
    double y[4] = {0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) y[i] += a[i][j] * x[j];
    return {y[0], y[1], y[2], y[3]};
}

Mat4 Mat4::multiply(const Mat4& rhs) const {
    Mat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * rhs.a[k][j];
            out.a[i][j] = s;
        }
    return out;
}

Mat4 Mat4::identity() {
    Mat4 out;
    for (int i = 0; i < 4; ++i) out.a[i][i] = 1.0;
    return out;
}

GroupElement group_from_velocity(const FrameVelocity& V) {
    const auto f = w_form(V.velocity()).factors;
    const double lf0 = std::log(f[0]), lf1 = std::log(f[1]), lf2 = std::log(f[2]),
                 lf3 = std::log(f[3]);
    // mean(ln f) = ln W^(1/4) = ln sqrt(1 - V^2); subtracting it is the
    // normalization of the factors and zeroes the exponent sum to rounding.
    const double m = (lf0 + lf1 + lf2 + lf3) / 4.0;
    return {{lf0 - m, lf1 - m, lf2 - m, lf3 - m}};
}

GroupElement inverse_group_from_velocity(const FrameVelocity& V) {
    return inverse(group_from_velocity(V));
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    return {{g1.eps[0] + g2.eps[0], g1.eps[1] + g2.eps[1], g1.eps[2] + g2.eps[2],
             g1.eps[3] + g2.eps[3]}};
}

GroupElement inverse(const GroupElement& g) {
    return {{-g.eps[0], -g.eps[1], -g.eps[2], -g.eps[3]}};
}

Event4 apply_group(const GroupElement& g, const Event4& e) {
    const IsotropicEvent4 xi = to_isotropic(e);
    return from_isotropic({std::exp(g.eps[0]) * xi.xi1, std::exp(g.eps[1]) * xi.xi2,
                           std::exp(g.eps[2]) * xi.xi3, std::exp(g.eps[3]) * xi.xi4});
}

Velocity3 add_velocities(const Velocity3& v, const FrameVelocity& V) {
    const Velocity3& u = V.velocity();
    const double den = 1.0 + v.v1 * u.v1 + v.v2 * u.v2 + v.v3 * u.v3;
    if (!(den > 0.0)) throw DegenerateError("add_velocities: 1 + v.V must be positive");
    return {(v.v1 + u.v1 + v.v2 * u.v3 + v.v3 * u.v2) / den,
            (v.v2 + u.v2 + v.v1 * u.v3 + v.v3 * u.v1) / den,
            (v.v3 + u.v3 + v.v1 * u.v2 + v.v2 * u.v1) / den};
}

double modulus_after_boost(const Velocity3& v, const FrameVelocity& V) {
    if (classify_velocity(v) == VelocityClass::Superluminal)
        throw SuperluminalError("modulus_after_boost: object velocity outside the cone");
    const Velocity3& u = V.velocity();
    const double den = 1.0 + v.v1 * u.v1 + v.v2 * u.v2 + v.v3 * u.v3;
    if (!(den > 0.0)) throw DegenerateError("modulus_after_boost: 1 + v.V must be positive");
    const double wv = std::max(0.0, w_form(v).w);
    const double wV = std::max(0.0, w_form(u).w);
    const double inner = std::sqrt(wv) * std::sqrt(wV) / (den * den);
    const double m = std::sqrt(std::max(0.0, 1.0 - inner));
    return std::min(m, 1.0 - std::numeric_limits<double>::epsilon() / 2.0);
}

double time_dilation_factor(const Velocity3& v, const FrameVelocity& V) {
    const Velocity3& u = V.velocity();
    const double den = 1.0 + v.v1 * u.v1 + v.v2 * u.v2 + v.v3 * u.v3;
    if (!(den > 0.0)) throw DegenerateError("time_dilation_factor: 1 + v.V must be positive");
    return den / interval_factor_h4(u);
}

Mat4 group_matrix(const GroupElement& g) {
    const double d[4] = {std::exp(g.eps[0]), std::exp(g.eps[1]), std::exp(g.eps[2]),
                         std::exp(g.eps[3])};
    Mat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += kBasisMatrix[k][i] * d[k] * kBasisMatrix[k][j]; // A symmetric
            out.a[i][j] = s / 4.0;
        }
    return out;
}

Mat4 boost_matrix(const FrameVelocity& V) { return group_matrix(group_from_velocity(V)); }

Mat4 lorentz_boost_sr(double v1) {
    if (!(std::fabs(v1) < 1.0)) throw SuperluminalError("lorentz_boost_sr: |v1| must be < 1");
    const double gamma = 1.0 / std::sqrt((1.0 - v1) * (1.0 + v1));
    Mat4 out = Mat4::identity();
    out.a[0][0] = gamma;
    out.a[0][1] = gamma * v1;
    out.a[1][0] = gamma * v1;
    out.a[1][1] = gamma;
    return out;
}

} // namespace h4
