#include "lpt/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpt {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kPointTol = 1e-12;

double real_inner(const CVec& p, const CVec& q)
{
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
        s += (std::conj(p[k]) * q[k]).real();
    return s;
}

double distance(const CVec& p, const CVec& q)
{
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
        s += std::norm(p[k] - q[k]);
    return std::sqrt(s);
}

CVec negated(const CVec& p)
{
    CVec out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        out[k] = -p[k];
    return out;
}

// Constant-speed minimal geodesic; p != -q.
CVec geodesic(const CVec& p, const CVec& q, double s)
{
    const double theta = std::acos(std::clamp(real_inner(p, q), -1.0, 1.0));
    CVec out(p.size());
    if (theta < 1e-15) {
        for (std::size_t k = 0; k < p.size(); ++k)
            out[k] = (1.0 - s) * p[k] + s * q[k];
        return out;
    }
    const double a = std::sin((1.0 - s) * theta) / std::sin(theta);
    const double b = std::sin(s * theta) / std::sin(theta);
    for (std::size_t k = 0; k < p.size(); ++k)
        out[k] = a * p[k] + b * q[k];
    return out;
}

}  // namespace

SpherePath::SpherePath(int n, CVec a, CVec b, int rule) : a_(std::move(a)), b_(std::move(b)), rule_(rule)
{
    if (n < 0)
        throw std::invalid_argument("sphere index n must be non-negative");
    const auto size = static_cast<std::size_t>(n) + 1;
    if (a_.size() != size || b_.size() != size)
        throw std::invalid_argument("points of S^{2n+1} need n+1 complex coordinates");
    if (std::abs(real_inner(a_, a_) - 1.0) > kUnitTol || std::abs(real_inner(b_, b_) - 1.0) > kUnitTol)
        throw std::invalid_argument("points must have unit norm");
    if (rule_ == 0) {
        if (distance(a_, negated(b_)) < kPointTol)
            throw std::invalid_argument("rule 0 is undefined at antipodal pairs");
    } else if (rule_ == 1) {
        if (distance(a_, b_) < kPointTol)
            throw std::invalid_argument("rule 1 is undefined on the diagonal");
    } else {
        throw std::invalid_argument("rule must be 0 or 1");
    }
}

CVec SpherePath::at(double u) const
{
    u = std::clamp(u, 0.0, 1.0);
    if (rule_ == 0)
        return geodesic(a_, b_, u);
    if (u <= 0.5) {
        const double s = 2.0 * u;
        const double c = std::cos(std::numbers::pi * s);
        const double sn = std::sin(std::numbers::pi * s);
        const std::complex<double> i(0.0, 1.0);
        CVec out(a_.size());
        for (std::size_t k = 0; k < a_.size(); ++k)
            out[k] = c * a_[k] + sn * i * a_[k];
        return out;
    }
    return geodesic(negated(a_), b_, 2.0 * u - 1.0);
}

std::vector<CVec> SpherePath::sample(int points) const
{
    if (points < 2)
        throw std::invalid_argument("need at least two sample points");
    std::vector<CVec> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j)
        out.push_back(at(static_cast<double>(j) / (points - 1)));
    return out;
}

std::vector<CVec> motion_plan_sphere(int n, const CVec& a, const CVec& b, int rule, int points)
{
    return SpherePath(n, a, b, rule).sample(points);
}

}  // namespace lpt
